#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bcinterp/qintegral.hpp"
#include "bcinterp/serialize.hpp"
#include "support.hpp"

using namespace bcinterp;

namespace {

std::vector<int> xvars(const Context& ctx, int n) {
  std::vector<int> v;
  for (int i = 0; i < n; ++i) v.push_back(ctx.x(i));
  return v;
}

Subst s_to_sth(const Context& ctx) {
  Subst s(ctx);
  s.set(ctx.s(), ctx.term_mul(ctx.gen_term(ctx.s(), 1), ctx.gen_term(ctx.th(), 1)));
  return s;
}

}  // namespace

TEST_CASE("q-integral of a monomial") {
  Context ctx(2, 1);
  // int_{x2}^{x1} z^2 dz/z = (x1^2 - x2^2)/[2]_q = (x1^2 - x2^2)/(1+q).
  QIntegralBounds b{ctx.gen_term(ctx.x(1), 1), ctx.gen_term(ctx.x(0), 1)};
  RatFun f = parse_text("y1^2", ctx);
  CHECK(q_integral(ctx, f, ctx.y(0), b).eq(parse_text("(x1^2 - x2^2)/(1 + qh^2)", ctx)));
  // l = 1 and l = -1.
  CHECK(q_integral(ctx, parse_text("y1", ctx), ctx.y(0), b).eq(parse_text("x1 - x2", ctx)));
  CHECK(q_integral(ctx, parse_text("1/y1", ctx), ctx.y(0), b)
            .eq(parse_text("(1/x1 - 1/x2)*(1-qh^2)/(1-1/qh^2)", ctx)));
}

TEST_CASE("antisymmetric integrand over (v, q/v) vanishes") {
  Context ctx(1, 1);
  Term v = ctx.gen_term(ctx.x(0), 1);
  Term qv = ctx.term_mul(ctx.gen_term(ctx.qh(), 2), ctx.term_pow(v, -1));
  QIntegralBounds b{v, qv};
  RatFun f = parse_text("y1 - 1/y1", ctx);
  CHECK(q_integral(ctx, f, ctx.y(0), b).is_zero());
}

TEST_CASE("constant term in the measure is rejected") {
  Context ctx(2, 1);
  QIntegralBounds b{ctx.gen_term(ctx.x(1), 1), ctx.gen_term(ctx.x(0), 1)};
  CHECK_THROWS_AS(q_integral(ctx, RatFun::one(ctx.size()), ctx.y(0), b), ConstantTermInMeasure);
  CHECK_THROWS_AS(q_integral(ctx, parse_text("y1 + 1", ctx), ctx.y(0), b), ConstantTermInMeasure);
}

TEST_CASE("q-integral output is divisible by u - v") {
  Context ctx(2, 1);
  bcinterp::testing::Rng rng(1234);
  QIntegralBounds b{ctx.gen_term(ctx.x(1), 1), ctx.gen_term(ctx.x(0), 1)};
  Subst collapse(ctx);
  collapse.set_monomial(ctx.x(0), Rat(1), {{ctx.x(1), 1}});
  for (int round = 0; round < 30; ++round) {
    // Random integrand with no constant term in y1.
    Poly f(ctx.size());
    std::uniform_int_distribution<Int> exp(-4, 4);
    for (int t = 0; t < 5; ++t) {
      Int l = exp(rng);
      if (l == 0) continue;
      Mono m = ctx.zero_mono();
      m[static_cast<std::size_t>(ctx.y(0))] = l;
      m[static_cast<std::size_t>(ctx.qh())] = 2 * exp(rng);
      f.add_term(std::move(m), bcinterp::testing::random_rat(rng));
    }
    if (f.is_zero()) continue;
    RatFun integral = q_integral(ctx, RatFun(f), ctx.y(0), b);
    CHECK(substitute(integral, collapse).is_zero());
  }
}

TEST_CASE("Weyl-type products") {
  // V at two starred variables is the 2x2 determinant.
  Context ctx = make_integral_context(3, 0);
  std::vector<int> yv{ctx.y(0), ctx.y(1)};
  auto ys = ystar_terms(ctx, yv, 3);
  Poly v = weyl_v(ctx, ys);
  Poly expected(ctx.size());
  {
    auto p2 = [&](const Term& z, long e) { return Poly::from_term(ctx.term_pow(z, e)); };
    expected = (p2(ys[0], 2) - p2(ys[0], -2)) * (p2(ys[1], 1) - p2(ys[1], -1)) -
               (p2(ys[1], 2) - p2(ys[1], -2)) * (p2(ys[0], 1) - p2(ys[0], -1));
  }
  CHECK(v == expected);

  // Pi is empty at k = 0.
  auto xs = xstar_terms(ctx, xvars(ctx, 3));
  CHECK(weyl_pi(ctx, xs, ys, 0).is_one());

  // D at k = 0, n = 2 is the difference of the starred cosines.
  Context c2 = make_integral_context(2, 0);
  auto xs2 = xstar_terms(c2, xvars(c2, 2));
  Poly d = weyl_d(c2, xs2, 0);
  Poly dref = Poly::from_term(xs2[0]) + Poly::from_term(c2.term_pow(xs2[0], -1)) -
              Poly::from_term(xs2[1]) - Poly::from_term(c2.term_pow(xs2[1], -1));
  CHECK(d == dref);
}

TEST_CASE("degree bookkeeping of the products") {
  for (int n = 2; n <= 3; ++n) {
    for (int k = 0; k <= 1; ++k) {
      Context ctx = make_integral_context(n, k);
      std::vector<int> yv, xv = xvars(ctx, n), all;
      for (int j = 0; j < n - 1; ++j) yv.push_back(ctx.y(j));
      all = xv;
      all.insert(all.end(), yv.begin(), yv.end());
      auto xs = xstar_terms(ctx, xv);
      auto ys = ystar_terms(ctx, yv, n);
      CHECK(weyl_v(ctx, ys).total_degree(all) == static_cast<long>(n) * (n - 1) / 2);
      CHECK(weyl_pi(ctx, xs, ys, k).total_degree(all) == 2L * k * n * (n - 1));
      CHECK(weyl_d(ctx, xs, k).total_degree(all) ==
            static_cast<long>(4 * k + 1) * n * (n - 1) / 2);
    }
  }
}

TEST_CASE("Pi vanishes on the inner q-strip") {
  // Pi(x*;y*) = 0 for y_i = q^r x_i, r = 1..2k (checked at k=1, n=2).
  Context ctx = make_integral_context(2, 1);
  auto xs = xstar_terms(ctx, xvars(ctx, 2));
  std::vector<int> yv{ctx.y(0)};
  auto ys = ystar_terms(ctx, yv, 2);
  Poly pi = weyl_pi(ctx, xs, ys, 1);
  for (int r = 1; r <= 2; ++r) {
    Subst at(ctx);
    at.set(ctx.y(0), ctx.term_mul(ctx.gen_term(ctx.qh(), 2 * r), ctx.gen_term(ctx.x(0), 1)));
    CHECK(substitute(pi, at).is_zero());
    // And on the outer strip y_1 = q^{-r} x_2.
    Subst at2(ctx);
    at2.set(ctx.y(0), ctx.term_mul(ctx.gen_term(ctx.qh(), -2 * r), ctx.gen_term(ctx.x(1), 1)));
    CHECK(substitute(pi, at2).is_zero());
  }
}

TEST_CASE("integral constant worked values") {
  Context c1 = make_integral_context(1, 0);
  CHECK(c_const(c1, Partition(), 1, 0).eq(RatFun::one(c1.size())));
  Context c2 = make_integral_context(2, 0);
  for (long m1 = 0; m1 <= 2; ++m1) {
    Partition mu = m1 == 0 ? Partition() : Partition{std::vector<long>{m1}};
    std::string expect = "qh*(1-qh^2)/(1-qh^" + std::to_string(2 * (m1 + 1)) + ")";
    CHECK(c_const(c2, mu, 2, 0).eq(parse_text(expect, c2)));
  }
  Context c21 = make_integral_context(2, 1);
  CHECK(c_const(c21, Partition(), 2, 1)
            .eq(parse_text("qh*(1-qh^2)*(1-qh^2)*(1-qh^4)/((1-qh^6)*(1-qh^8)*(1-qh^10))", c21)));
}

TEST_CASE("integral representation at n=2, k=0") {
  Context ctx = make_integral_context(2, 0);
  CHECK(integral_rep_verify(ctx, Partition(), 2, 0));
  CHECK(integral_rep_verify(ctx, Partition::parse("1"), 2, 0));
  CHECK(integral_rep_verify(ctx, Partition::parse("2"), 2, 0));
  CHECK_THROWS_AS(integral_rep_verify(ctx, Partition::parse("1,1"), 2, 0), MuNNonzero);
}

TEST_CASE("integral route agrees with the tableau formula") {
  for (int k = 0; k <= 1; ++k) {
    Context c1 = make_integral_context(1, k);
    auto v1 = xvars(c1, 1);
    for (int m = 0; m <= 2; ++m) {
      Partition mu = m == 0 ? Partition() : Partition{std::vector<long>{m}};
      CHECK(pstar_integral(c1, mu, 1, k).eq(pstar_comb(c1, mu, v1)));
    }
  }
  Context c2 = make_integral_context(2, 0);
  auto v2 = xvars(c2, 2);
  for (const auto& mu : partitions_upto(2, 2))
    CHECK(pstar_integral(c2, mu, 2, 0).eq(pstar_comb(c2, mu, v2)));
}

TEST_CASE("bound shifts by the vanishing strip do not change the integral") {
  // At k=1, n=2 replace (x2, q x1) by (q^{-s'} x2, q^{r+1} x1), r,s' in 1..2k.
  Context ctx = make_integral_context(2, 1);
  std::vector<int> xv = xvars(ctx, 2), yv{ctx.y(0)};
  RatFun inner = substitute(pstar_comb(ctx, Partition::parse("1"), yv), s_to_sth(ctx));
  std::vector<int> order{0};
  RatFun base = iterated_integral(ctx, xv, yv, inner, 1, standard_bounds(ctx, xv), order);
  for (int r = 1; r <= 2; ++r)
    for (int sp = 1; sp <= 2; ++sp) {
      QIntegralBounds b;
      b.lower = ctx.term_mul(ctx.gen_term(ctx.qh(), -2 * sp), ctx.gen_term(ctx.x(1), 1));
      b.upper = ctx.term_mul(ctx.gen_term(ctx.qh(), 2 * (r + 1)), ctx.gen_term(ctx.x(0), 1));
      RatFun shifted = iterated_integral(ctx, xv, yv, inner, 1, {b}, order);
      CHECK(shifted.eq(base));
    }
}

TEST_CASE("integration order independence at n=3") {
  // q numeric for speed; s stays symbolic so the s -> s t^(1/2) shift of
  // the inner polynomial remains a symbol-level substitution.
  Context ctx = make_integral_context(3, 0);
  ctx.bind_value(ctx.qh(), rat(2, 3));
  std::vector<int> xv = xvars(ctx, 3), yv{ctx.y(0), ctx.y(1)};
  RatFun inner = substitute(pstar_comb(ctx, Partition::parse("1"), yv), s_to_sth(ctx));
  auto bounds = standard_bounds(ctx, xv);
  RatFun inner_first = iterated_integral(ctx, xv, yv, inner, 0, bounds, {1, 0});
  RatFun outer_first = iterated_integral(ctx, xv, yv, inner, 0, bounds, {0, 1});
  CHECK(inner_first.eq(outer_first));
}
