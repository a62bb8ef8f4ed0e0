#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bcinterp/interpolation.hpp"
#include "bcinterp/serialize.hpp"
#include "support.hpp"

using namespace bcinterp;

namespace {

std::vector<int> xvars(const Context& ctx, int n) {
  std::vector<int> v;
  for (int i = 0; i < n; ++i) v.push_back(ctx.x(i));
  return v;
}

// The closed form (x-1)...(x-q^{m-1}) (1-1/(s^2 x))...(1-1/(s^2 q^{m-1} x)).
RatFun closed_f(const Context& ctx, int m) {
  RatFun acc = RatFun::one(ctx.size());
  for (int i = 0; i < m; ++i) {
    std::string qi = "qh^" + std::to_string(2 * i);
    acc = acc * parse_text("(x1 - " + qi + ")*(1 - 1/(s^2*" + qi + "*x1))", ctx);
  }
  return acc;
}

}  // namespace

TEST_CASE("normalization constant worked values") {
  Context ctx(1);
  CHECK(norm_H(ctx, Partition(), 1).eq(RatFun::one(ctx.size())));
  CHECK(norm_H(ctx, Partition::parse("1"), 1)
            .eq(parse_text("(qh^2-1)*(s^2*qh^2-1)/(qh^2*s^2)", ctx)));
  CHECK(norm_H(ctx, Partition::parse("2"), 1)
            .eq(parse_text("(qh^4-1)*(qh^2-1)*(s^2*qh^4-1)*(s^2*qh^6-1)/(qh^8*s^4)", ctx)));
  CHECK_THROWS_AS(norm_H(ctx, Partition::parse("1,1"), 1), LengthExceeded);

  // H at q^mu equals the closed-form product f_m(q^m).
  for (int m = 1; m <= 3; ++m) {
    Subst at(ctx);
    at.set_monomial(ctx.x(0), Rat(1), {{ctx.qh(), 2 * m}});
    Partition mu{std::vector<long>{m}};
    CHECK(substitute(closed_f(ctx, m), at).eq(norm_H(ctx, mu, 1)));
  }
}

TEST_CASE("normalization constant s->infinity display") {
  Context ctx(2);
  for (const auto& mu : partitions_upto(3, 2)) {
    for (int n = mu.length(); n <= 2; ++n) {
      RatFun h = norm_H(ctx, mu, n);
      RatFun limit = component_sym_exponent(h, ctx.s(), 0);
      // q^{n(mu')} t^{-2 n(mu)} prod (q^{a+1} t^l - 1)
      RatFun expected =
          bcinterp::testing::qts_value(ctx, mu.conjugate().n_stat(), -2 * mu.n_stat(), 0);
      for (int i = 1; i <= mu.length(); ++i)
        for (int j = 1; j <= mu.part(i); ++j) {
          SquareStats st = square_stats(mu, n, i, j);
          expected = expected * (bcinterp::testing::qts_value(ctx, st.arm + 1, st.leg, 0) -
                                 RatFun::one(ctx.size()));
        }
      CHECK(limit.eq(expected));
    }
  }
}

TEST_CASE("one-variable interpolation polynomials: closed form on all routes") {
  Context ctx(1);
  auto vars = xvars(ctx, 1);
  CHECK(pstar_solve(ctx, Partition(), vars).eq(RatFun::one(ctx.size())));
  CHECK(pstar_comb(ctx, Partition(), vars).eq(RatFun::one(ctx.size())));
  CHECK(pstar_branch(ctx, Partition(), vars).eq(RatFun::one(ctx.size())));
  for (int m = 1; m <= 4; ++m) {
    Partition mu{std::vector<long>{m}};
    RatFun expected = closed_f(ctx, m);
    CHECK(pstar_solve(ctx, mu, vars).eq(expected));
    CHECK(pstar_comb(ctx, mu, vars).eq(expected));
    CHECK(pstar_branch(ctx, mu, vars).eq(expected));
  }
}

TEST_CASE("two-variable worked example and route equivalence") {
  Context ctx(2);
  auto vars = xvars(ctx, 2);
  // Hand expansion of the two-tableau sum for mu = (1), n = 2.
  RatFun expected = parse_text("(x1-1)*(1 - 1/(th^4*s^2*x1)) + (x2-1)*(1 - 1/(s^2*x2))/th^2", ctx);
  RatFun comb = pstar_comb(ctx, Partition::parse("1"), vars);
  CHECK(comb.eq(expected));
  CHECK(pstar_solve(ctx, Partition::parse("1"), vars).eq(comb));
  CHECK(pstar_branch(ctx, Partition::parse("1,1"), vars)
            .eq(pstar_solve(ctx, Partition::parse("1,1"), vars)));
  CHECK(pstar_branch(ctx, Partition::parse("2,1"), vars)
            .eq(pstar_comb(ctx, Partition::parse("2,1"), vars)));
  CHECK_THROWS_AS(pstar_comb(ctx, Partition::parse("1,1,1"), vars), LengthExceeded);
}

TEST_CASE("constructed polynomials satisfy the defining properties") {
  Context ctx(2);
  auto vars = xvars(ctx, 2);
  for (const auto& mu : partitions_upto(3, 2)) {
    RatFun p = pstar_comb(ctx, mu, vars);
    CHECK(is_w_invariant(ctx, p, vars));
    CHECK(definition_slice_check(ctx, mu, vars, p));
    // Degree |mu| and only even s-exponents.
    CHECK(p.num().total_degree(vars) == mu.weight());
    for (const auto& [mono, c] : p.num().terms())
      CHECK(mono[static_cast<std::size_t>(ctx.s())] % 2 == 0);
    CHECK_FALSE(p.den().mentions(ctx.s()));
  }
}

TEST_CASE("evaluation worked examples") {
  Context c1(1);
  auto v1 = xvars(c1, 1);
  RatFun p1 = pstar_comb(c1, Partition::parse("1"), v1);
  CHECK(eval_at(c1, p1, v1, q_point(c1, Partition(), 1)).is_zero());
  CHECK(eval_at(c1, p1, v1, q_point(c1, Partition::parse("1"), 1))
            .eq(norm_H(c1, Partition::parse("1"), 1)));
  Context ctx(2);
  auto v2 = xvars(ctx, 2);
  RatFun p21 = pstar_comb(ctx, Partition::parse("2,1"), v2);
  CHECK(eval_at(ctx, p21, v2, q_point(ctx, Partition::parse("1"), 2)).is_zero());
  std::vector<Term> bad{ctx.unit_term(), Term{Rat(0), ctx.zero_mono()}};
  CHECK_THROWS_AS(eval_at(ctx, p21, v2, bad), ZeroCoordinate);
}

TEST_CASE("newton expansion") {
  Context ctx(2);
  auto vars = xvars(ctx, 2);
  RatFun p = pstar_branch(ctx, Partition::parse("2,1"), vars);
  auto e = newton_expand(ctx, p, vars, 3);
  REQUIRE(e.size() == 1);
  CHECK(e.at(Partition::parse("2,1")).eq(RatFun::one(ctx.size())));

  auto eo = newton_expand(ctx, RatFun::one(ctx.size()), vars, 0);
  REQUIRE(eo.size() == 1);
  CHECK(eo.at(Partition()).eq(RatFun::one(ctx.size())));

  // f = (x1* + 1/x1*) + (x2* + 1/x2*) expands against P*_0, P*_(1).
  Poly f(ctx.size());
  for (int i = 1; i <= 2; ++i) {
    Term st = star_term(ctx, vars, i);
    f += Poly::from_term(st);
    f += Poly::from_term(ctx.term_pow(st, -1));
  }
  RatFun fr{f};
  auto ef = newton_expand(ctx, fr, vars, 1);
  RatFun recombined = RatFun::zero(ctx.size());
  for (const auto& [nu, c] : ef) recombined += c * pstar_branch(ctx, nu, vars);
  CHECK(recombined.eq(fr));
  CHECK(ef.count(Partition::parse("1")) == 1);

  CHECK_THROWS_AS(newton_expand(ctx, parse_text("x1", ctx), vars, 1), NotInAlgebra);
  CHECK_THROWS_AS(newton_expand(ctx, p, vars, 2), DegreeExceeded);
}

TEST_CASE("shift identities") {
  Context c2(2);
  auto v2 = xvars(c2, 2);
  CHECK(verify_shift_p21(c2, Partition::parse("1,1"), v2));
  CHECK(verify_shift_p21(c2, Partition::parse("2,1"), v2));
  CHECK_THROWS_AS(verify_shift_p21(c2, Partition::parse("1,0"), v2), NotStrictlyPositive);
  CHECK(verify_shift_p22(c2, Partition::parse("1"), v2));
  CHECK(verify_shift_p22(c2, Partition::parse("2"), v2));
  Context c1(1);
  auto v1 = xvars(c1, 1);
  CHECK(verify_shift_p23(c1, Partition::parse("2"), v1));
  CHECK(verify_shift_p23(c2, Partition::parse("2,1"), v2));
}

TEST_CASE("branching coefficients") {
  Context ctx(Context::Options{2, 0, true, {}});
  Term u = ctx.gen_term(ctx.u(), 1);
  // mu = nu: t^{-|mu|}.
  CHECK(branch_coeff(ctx, Partition::parse("2,1"), Partition::parse("2,1"), 3, u)
            .eq(bcinterp::testing::qts_value(ctx, 0, -3, 0)));
  CHECK(branch_coeff(ctx, Partition::parse("1"), Partition(), 1, u)
            .eq(parse_text("(u-1)*(1-1/(s^2*u))", ctx)));
  RatFun psi = parse_text("(1+qh^2)*(1-th^2)/(1-qh^2*th^2)", ctx);
  RatFun expected = psi * parse_text("(u-qh^2)*(1-1/(qh^2*th^4*s^2*u))/th^2", ctx);
  CHECK(branch_coeff(ctx, Partition::parse("2"), Partition::parse("1"), 2, u).eq(expected));
  // Outside interlacing: zero (nu_1 < mu_2 resp. nu too long).
  CHECK(branch_coeff(ctx, Partition::parse("3,2"), Partition::parse("1"), 2, u).is_zero());
  CHECK(branch_coeff(ctx, Partition::parse("2"), Partition::parse("1,1"), 2, u).is_zero());
  // u-inversion invariance: u -> 1/(t^{2n-2} s^2 u) for n = 2.
  for (const auto& mu : partitions_upto(3, 2)) {
    for (const auto& nu : partitions_upto(mu.weight(), 1)) {
      RatFun c = branch_coeff(ctx, mu, nu, 2, u);
      Subst uinv(ctx);
      uinv.set_monomial(ctx.u(), Rat(1), {{ctx.u(), -1}, {ctx.th(), -4}, {ctx.s(), -2}});
      CHECK(substitute(c, uinv).eq(c));
    }
  }
}

TEST_CASE("top term identification") {
  Context c1(1);
  CHECK(top_term_check(c1, Partition::parse("1"), xvars(c1, 1)));
  Context c2(2);
  auto v2 = xvars(c2, 2);
  RatFun p = pstar_comb(c2, Partition::parse("1"), v2);
  CHECK(component_top_x(p, v2).eq(parse_text("x1 + x2/th^2", c2)));
  for (const auto& mu : partitions_upto(3, 2)) CHECK(top_term_check(c2, mu, v2));
}

TEST_CASE("limits in s") {
  Context c1(1);
  auto v1 = xvars(c1, 1);
  RatFun p1 = pstar_comb(c1, Partition::parse("1"), v1);
  CHECK(component_sym_exponent(p1, c1.s(), 0).eq(parse_text("x1 - 1", c1)));
  CHECK(limit_check(c1, Partition::parse("1"), v1, LimitDirection::SInfinity));
  CHECK(limit_check(c1, Partition::parse("1"), v1, LimitDirection::SZero));
  CHECK(limit_check(c1, Partition(), v1, LimitDirection::SInfinity));
  CHECK(limit_check(c1, Partition(), v1, LimitDirection::SZero));
  Context c2(2);
  auto v2 = xvars(c2, 2);
  for (const auto& mu : partitions_upto(2, 2)) {
    CHECK(limit_check(c2, mu, v2, LimitDirection::SInfinity));
    CHECK(limit_check(c2, mu, v2, LimitDirection::SZero));
  }
}

TEST_CASE("pieri coefficients and the expansion identity") {
  Context c1(Context::Options{1, 0, true, {}});
  CHECK(pieri_coeff(c1, Partition(), Partition(), 1).eq(parse_text("(u+1)*(1+1/(s^2*u))", c1)));
  CHECK(pieri_coeff(c1, Partition::parse("1"), Partition(), 1).eq(RatFun::one(c1.size())));
  CHECK(pieri_coeff(c1, Partition::parse("2"), Partition(), 1).is_zero());
  CHECK(verify_pieri(c1, Partition(), xvars(c1, 1)));
  CHECK(verify_pieri(c1, Partition::parse("1"), xvars(c1, 1)));
  Context c2(Context::Options{2, 0, true, {}});
  CHECK(verify_pieri(c2, Partition::parse("1"), xvars(c2, 2)));
}

TEST_CASE("cauchy identity, small cases") {
  Context c11(Context::Options{1, 1, false, {}});
  // Both sides of the (1,1) case equal x - y + 1/(s^2 x) - 1/(s^2 y).
  RatFun lhs = parse_text("(x1 - y1)*(1 - 1/(s^2*x1*y1))", c11);
  CHECK(lhs.eq(parse_text("x1 - y1 + 1/(s^2*x1) - 1/(s^2*y1)", c11)));
  CHECK(verify_cauchy(c11, 1, 1));
  Context c21(Context::Options{2, 1, false, {}});
  CHECK(verify_cauchy(c21, 2, 1));
}

TEST_CASE("lemma 5.5 vanishing slice, small") {
  Context ctx(2);
  auto vars = xvars(ctx, 2);
  for (const auto& mu : partitions_upto(2, 2))
    for (const auto& la : partitions_upto(3, 2)) CHECK(lemma55_check(ctx, mu, la, vars));
}

TEST_CASE("routes under a numeric specialization") {
  Context ctx(3);
  ctx.bind_value(ctx.qh(), rat(3, 5));
  ctx.bind_value(ctx.th(), rat(2, 7));
  ctx.bind_value(ctx.s(), rat(5, 2));
  REQUIRE(check_generic(rat(9, 25), rat(4, 49), rat(5, 2), 64));
  auto vars = xvars(ctx, 3);
  for (const auto& mu : partitions_upto(3, 3)) {
    RatFun a = pstar_solve(ctx, mu, vars);
    RatFun b = pstar_comb(ctx, mu, vars);
    RatFun c = pstar_branch(ctx, mu, vars);
    CHECK(a.eq(b));
    CHECK(b.eq(c));
    CHECK(definition_slice_check(ctx, mu, vars, b));
  }
}
