#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bcinterp/koornwinder.hpp"
#include "bcinterp/sampling.hpp"
#include "bcinterp/serialize.hpp"
#include "support.hpp"

using namespace bcinterp;

TEST_CASE("dual parameters") {
  Context ctx(1);
  KoornwinderParams p = standard_params(ctx, 1);
  KoornwinderParams d = dual_params(ctx, p);
  // a1' = r1 r2 r3 r4.
  Term expect = ctx.unit_term();
  for (int i = 0; i < 4; ++i) expect = ctx.term_mul(expect, ctx.gen_term(ctx.r(i), 1));
  CHECK(Poly::from_term(d.a[0]) == Poly::from_term(expect));
  // Involution.
  KoornwinderParams dd = dual_params(ctx, d);
  for (int i = 0; i < 4; ++i)
    CHECK(Poly::from_term(dd.a[static_cast<std::size_t>(i)]) ==
          Poly::from_term(p.a[static_cast<std::size_t>(i)]));
  // Equal alphas: a1' = a1^2's square root pattern -> a2' = a3' = a4' = 1.
  Context nctx(1);
  Rat alpha = rat(3, 2);
  for (int i = 0; i < 4; ++i) nctx.bind_value(nctx.r(i), alpha);
  KoornwinderParams np = standard_params(nctx, 1);
  KoornwinderParams nd = dual_params(nctx, np);
  CHECK(nd.a[0].coef == rat_pow(alpha, 4));
  for (int i = 1; i < 4; ++i) CHECK(nd.a[static_cast<std::size_t>(i)].coef == 1);
  // Involution on random numeric parameters.
  KoornwinderPoint pt = sample_koornwinder_point(7, false);
  Context rctx = make_koornwinder_context(1, pt);
  KoornwinderParams rp = standard_params(rctx, 1);
  KoornwinderParams rdd = dual_params(rctx, dual_params(rctx, rp));
  for (int i = 0; i < 4; ++i)
    CHECK(rdd.a[static_cast<std::size_t>(i)].coef == rp.a[static_cast<std::size_t>(i)].coef);
}

TEST_CASE("askey-wilson oracle basics") {
  KoornwinderPoint pt = sample_koornwinder_point(11, false);
  Context ctx = make_koornwinder_context(1, pt);
  KoornwinderParams p = standard_params(ctx, 1);

  AskeyWilson p0 = askey_wilson(ctx, 0, p);
  CHECK(p0.poly.eq(RatFun::one(ctx.size())));
  CHECK(p0.evaluation.eq(RatFun::one(ctx.size())));

  AskeyWilson p1 = askey_wilson(ctx, 1, p);
  // x + 1/x + c0, W-invariant and monic by construction.
  RatFun diff = p1.poly - parse_text("x1 + 1/x1", ctx);
  CHECK(!diff.num().mentions(ctx.x(0)));
  Subst inv(ctx);
  inv.set_monomial(ctx.x(0), Rat(1), {{ctx.x(0), -1}});
  for (int m = 1; m <= 3; ++m) {
    AskeyWilson aw = askey_wilson(ctx, m, p);
    CHECK(substitute(aw.poly, inv).eq(aw.poly));
    // Monic: coefficient of x^m is 1.
    RatFun lead = RatFun(aw.poly.num().coefficient_of(ctx.x(0), m), aw.poly.den());
    CHECK(lead.eq(RatFun::one(ctx.size())));
    // Eigen cross-check through the operator matrix.
    auto op = askey_wilson_matrix(ctx, m, p);
    // Apply the operator to the solved coefficients and compare.
    std::vector<RatFun> c(static_cast<std::size_t>(m) + 1, RatFun::zero(ctx.size()));
    for (int j = 0; j <= m; ++j) {
      Poly bj = j == 0 ? Poly::constant(ctx.size(), Rat(1))
                       : Poly::symbol(ctx.size(), ctx.x(0), j) +
                             Poly::symbol(ctx.size(), ctx.x(0), -j);
      c[static_cast<std::size_t>(j)] = RatFun(aw.poly.num().coefficient_of(ctx.x(0), j),
                                              aw.poly.den());
      (void)bj;
    }
    RatFun residual = RatFun::zero(ctx.size());
    for (int i = 0; i <= m; ++i) {
      RatFun acc = RatFun::zero(ctx.size());
      for (int j = i; j <= m; ++j)
        acc += op[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
               c[static_cast<std::size_t>(j)];
      acc -= aw.eigenvalue * c[static_cast<std::size_t>(i)];
      residual += acc * acc;
    }
    CHECK(residual.is_zero());
  }
}

TEST_CASE("askey-wilson operator acts triangularly and preserves invariants") {
  KoornwinderPoint pt = sample_koornwinder_point(23, false);
  Context ctx = make_koornwinder_context(1, pt);
  KoornwinderParams p = standard_params(ctx, 1);
  auto op = askey_wilson_matrix(ctx, 4, p);
  for (std::size_t i = 0; i < op.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) CHECK(op[i][j].is_zero());
  // Constants are killed.
  CHECK(op[0][0].is_zero());
}

TEST_CASE("binomial right-hand side worked cases") {
  KoornwinderPoint pt = sample_koornwinder_point(31, false);
  Context ctx = make_koornwinder_context(1, pt);
  KoornwinderParams p = standard_params(ctx, 1);
  std::vector<int> vars{ctx.x(0)};
  EvaluationTable e;
  for (int m = 0; m <= 2; ++m) {
    Partition mu = m == 0 ? Partition() : Partition{std::vector<long>{m}};
    e.emplace(mu, askey_wilson(ctx, m, p).evaluation);
  }
  // la = 0: single term 1.
  CHECK(binomial_rhs(ctx, Partition(), p, e, vars).eq(RatFun::one(ctx.size())));
  // la = (1): the two-term sum written out by hand.
  Term a1 = p.a[0];
  Term a1p = dual_params(ctx, p).a[0];
  RatFun label = eval_at(ctx, pstar_at_s(ctx, Partition::parse("1"), vars, a1p), vars,
                         q_point(ctx, Partition::parse("1"), 1));
  RatFun hand = RatFun::one(ctx.size()) +
                (label * pstar_at_s(ctx, Partition::parse("1"), vars, a1) /
                 (norm_H_at_s(ctx, Partition::parse("1"), 1, a1p) * e.at(Partition::parse("1"))))
                    .mul_term(a1);
  CHECK(binomial_rhs(ctx, Partition::parse("1"), p, e, vars).eq(hand));
  // Missing entries are reported.
  EvaluationTable partial;
  partial.emplace(Partition(), RatFun::one(ctx.size()));
  CHECK_THROWS_AS(binomial_rhs(ctx, Partition::parse("1"), p, partial, vars), MissingEvaluation);
}

TEST_CASE("binomial verification at n=1 on sampled generic points") {
  int passes = 0;
  for (std::uint64_t seed = 100; passes < 2; ++seed) {
    KoornwinderPoint pt = sample_koornwinder_point(seed, false);
    Context ctx = make_koornwinder_context(1, pt);
    try {
      CHECK(verify_binomial_n1(ctx, 3));
      ++passes;
    } catch (const DegenerateEigenvalue&) {
      continue;  // re-sample
    }
  }
}

TEST_CASE("self-duality at n=1") {
  KoornwinderPoint pt = sample_koornwinder_point(55, true);
  Context ctx = make_koornwinder_context(1, pt);
  CHECK(verify_duality_n1(ctx, 0, 0));
  CHECK(verify_duality_n1(ctx, 1, 2));
  CHECK(verify_duality_n1(ctx, 2, 3));
  KoornwinderPoint bad = sample_koornwinder_point(56, false);
  Context bctx = make_koornwinder_context(1, bad);
  CHECK_THROWS_AS(verify_duality_n1(bctx, 1, 1), NotSelfDual);
}

TEST_CASE("binomial coefficients vanish below the diagonal (b_mu property)") {
  KoornwinderPoint pt = sample_koornwinder_point(77, false);
  Context ctx = make_koornwinder_context(1, pt);
  KoornwinderParams p = standard_params(ctx, 1);
  std::vector<int> vars{ctx.x(0)};
  Term a1 = p.a[0];
  Term a1p = dual_params(ctx, p).a[0];
  const int mmax = 4;
  std::vector<AskeyWilson> oracle;
  for (int m = 0; m <= mmax; ++m) oracle.push_back(askey_wilson(ctx, m, p));
  for (int l = 0; l <= mmax; ++l) {
    Subst scale(ctx);
    scale.set(ctx.x(0), ctx.term_mul(a1, ctx.gen_term(ctx.x(0), 1)));
    RatFun f = substitute(oracle[static_cast<std::size_t>(l)].poly, scale) /
               oracle[static_cast<std::size_t>(l)].evaluation;
    auto coeffs = newton_expand_at_s(ctx, f, vars, l, a1);
    for (int r = 0; r <= mmax; ++r) {
      Partition mu = r == 0 ? Partition() : Partition{std::vector<long>{r}};
      auto it = coeffs.find(mu);
      if (l < r) {
        // b_mu(q^la) = 0 for |la| <= |mu|, la != mu.
        CHECK(it == coeffs.end());
      } else if (l == r) {
        REQUIRE(it != coeffs.end());
        RatFun expect = RatFun::from_term(ctx.term_pow(a1, r)) /
                        oracle[static_cast<std::size_t>(r)].evaluation;
        CHECK(it->second.eq(expect));
      } else {
        // Above the diagonal the coefficient is the binomial expression.
        REQUIRE(it != coeffs.end());
        Partition la{std::vector<long>{l}};
        RatFun label = eval_at(ctx, pstar_at_s(ctx, mu, vars, a1p), vars, q_point(ctx, la, 1));
        RatFun expect = (label / (norm_H_at_s(ctx, mu, 1, a1p) *
                                  oracle[static_cast<std::size_t>(r)].evaluation))
                            .mul_term(ctx.term_pow(a1, r));
        CHECK(it->second.eq(expect));
      }
    }
  }
}

TEST_CASE("structural properties at symbolic parameters, n <= 2") {
  // Symbolic alphas with a symbolic evaluation table (extra symbols).
  Context ctx(Context::Options{2, 0, false, {"e1", "e2", "e3", "e4"}});
  std::vector<int> vars{ctx.x(0), ctx.x(1)};
  KoornwinderParams p = standard_params(ctx, 2);
  auto grid = partitions_upto(2, 2);
  EvaluationTable e;
  // e_0 = 1 (the table invariant); the other entries stay free symbols.
  for (std::size_t i = 0; i < grid.size(); ++i)
    e.emplace(grid[i], grid[i].empty()
                           ? RatFun::one(ctx.size())
                           : RatFun(Poly::symbol(ctx.size(), ctx.extra(static_cast<int>(i)))));
  for (const auto& la : grid) {
    CHECK(binomial_rhs_is_one_at_ones(ctx, la, p, e, vars));
    CHECK(binomial_top_term_check(ctx, la, p, vars));
  }
}

TEST_CASE("evaluation table fixture round-trip") {
  Context ctx(1);
  EvaluationTable table;
  table.emplace(Partition(), RatFun::one(ctx.size()));
  table.emplace(Partition::parse("1"), parse_text("(qh^2-1)/(qh^2+1)", ctx));
  table.emplace(Partition::parse("2,1"), parse_text("r1^2*s - 3", ctx));
  std::string json = evaluation_table_to_json(ctx, table);
  EvaluationTable back = evaluation_table_from_json(ctx, json);
  REQUIRE(back.size() == table.size());
  for (const auto& [mu, v] : table) CHECK(back.at(mu).identical(v));
  CHECK_THROWS_AS(evaluation_table_from_json(ctx, "[1,2]"), ParseError);
}
