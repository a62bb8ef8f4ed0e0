#include "bcinterp/qintegral.hpp"

#include <algorithm>

namespace bcinterp {

namespace {

Poly one_minus_term(const Context& ctx, const Term& t) {
  Poly p = Poly::constant(ctx.size(), Rat(1));
  Term neg = t;
  neg.coef = -neg.coef;
  p += Poly::from_term(neg);
  return p;
}

Term q_pow(const Context& ctx, long twice_exp) { return ctx.gen_term(ctx.qh(), twice_exp); }

}  // namespace

RatFun q_integral(const Context& ctx, const RatFun& f, int zsym, const QIntegralBounds& bounds) {
  if (sgn(bounds.lower.coef) == 0 || sgn(bounds.upper.coef) == 0)
    throw Error("q-integral bounds must be nonzero monomials");
  if (f.den().mentions(zsym)) throw Error("integrand denominator mentions the variable");
  if (f.is_zero()) return RatFun::zero(ctx.size());
  Int lo = f.num().min_exp(zsym), hi = f.num().max_exp(zsym);
  std::vector<RatFun> parts;
  for (Int l = lo; l <= hi; ++l) {
    Poly cl = f.num().coefficient_of(zsym, l);
    if (cl.is_zero()) continue;
    if (l == 0) throw ConstantTermInMeasure();
    // (u^l - v^l) (1-q) / (1-q^l)
    Poly diff = cl.mul_term(ctx.term_pow(bounds.upper, l)) -
                cl.mul_term(ctx.term_pow(bounds.lower, l));
    Poly den = one_minus_term(ctx, q_pow(ctx, 2 * l));
    Poly scale = one_minus_term(ctx, q_pow(ctx, 2));
    parts.emplace_back(diff * scale, den);
  }
  RatFun sum = ratfun_sum(std::move(parts), ctx.size());
  return sum / RatFun(f.den());
}

Context make_integral_context(int n, int k) {
  Context ctx(n, std::max(n - 1, 0));
  Term target = ctx.gen_term(ctx.qh(), 2 * k + 1);
  ctx.bind_monomial(ctx.th(), target);
  return ctx;
}

Poly weyl_v(const Context& ctx, const std::vector<Term>& starred) {
  const int m = static_cast<int>(starred.size());
  if (m == 0) return Poly::constant(ctx.size(), Rat(1));
  std::vector<int> perm(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) perm[static_cast<std::size_t>(i)] = i;
  Poly acc(ctx.size());
  do {
    int inv = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inv;
    Poly row = Poly::constant(ctx.size(), inv % 2 == 0 ? Rat(1) : Rat(-1));
    for (int i = 0; i < m; ++i) {
      long e = m - perm[static_cast<std::size_t>(i)];  // column j = perm[i]+1, exponent m-j+1
      const Term& z = starred[static_cast<std::size_t>(i)];
      row *= Poly::from_term(ctx.term_pow(z, e)) - Poly::from_term(ctx.term_pow(z, -e));
    }
    acc += row;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

Poly weyl_pi_column(const Context& ctx, const std::vector<Term>& xstar, const Term& ystar, int k) {
  Poly acc = Poly::constant(ctx.size(), Rat(1));
  for (const Term& xs : xstar)
    for (int e1 = -1; e1 <= 1; e1 += 2)
      for (int e2 = -1; e2 <= 1; e2 += 2)
        for (int r = 0; r < k; ++r) {
          Term t = ctx.term_mul(q_pow(ctx, 2 * r + 1),
                                ctx.term_mul(ctx.term_pow(xs, e1), ctx.term_pow(ystar, e2)));
          acc *= one_minus_term(ctx, t);
        }
  return acc;
}

Poly weyl_pi(const Context& ctx, const std::vector<Term>& xstar, const std::vector<Term>& ystar,
             int k) {
  Poly acc = Poly::constant(ctx.size(), Rat(1));
  for (const Term& ys : ystar) acc *= weyl_pi_column(ctx, xstar, ys, k);
  return acc;
}

Poly weyl_d(const Context& ctx, const std::vector<Term>& xstar, int k) {
  Poly acc = Poly::constant(ctx.size(), Rat(1));
  const int n = static_cast<int>(xstar.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Term& a = xstar[static_cast<std::size_t>(i)];
      const Term& b = xstar[static_cast<std::size_t>(j)];
      Poly pref = Poly::from_term(a) + Poly::from_term(ctx.term_pow(a, -1)) -
                  Poly::from_term(b) - Poly::from_term(ctx.term_pow(b, -1));
      acc *= pref;
      for (int e1 = -1; e1 <= 1; e1 += 2)
        for (int e2 = -1; e2 <= 1; e2 += 2)
          for (int r = 1; r <= 2 * k; ++r) {
            Term t = ctx.term_mul(q_pow(ctx, 2 * r),
                                  ctx.term_mul(ctx.term_pow(a, e1), ctx.term_pow(b, e2)));
            acc *= one_minus_term(ctx, t);
          }
    }
  return acc;
}

RatFun c_const(const Context& ctx, const Partition& mu, int n, int k) {
  if (k < 0 || mu.length() > n) throw Error("c_const needs k >= 0 and l(mu) <= n");
  long theta = 2 * k + 1;
  // q^{n(n-1)/4}: qh exponent n(n-1)/2.
  RatFun acc = RatFun::from_term(q_pow(ctx, static_cast<long>(n) * (n - 1) / 2));
  Poly one_minus_q = one_minus_term(ctx, q_pow(ctx, 2));
  for (int i = 1; i <= n - 1; ++i) acc *= RatFun(one_minus_q);
  for (int i = 1; i <= n - 1; ++i) {
    for (long j = 1; j <= theta - 1; ++j) acc *= RatFun(one_minus_term(ctx, q_pow(ctx, 2 * j)));
    for (long j = 0; j <= theta - 1; ++j) {
      long e = mu.part(i) + static_cast<long>(n - i) * theta + j;
      acc = acc / RatFun(one_minus_term(ctx, q_pow(ctx, 2 * e)));
    }
  }
  return acc;
}

std::vector<Term> ystar_terms(const Context& ctx, const std::vector<int>& yvars, int n) {
  std::vector<Term> out;
  for (std::size_t j = 0; j < yvars.size(); ++j) {
    Term t = ctx.gen_term(yvars[j], 1);
    t = ctx.term_mul(t, ctx.gen_term(ctx.th(), 2 * (n - static_cast<long>(j) - 1) - 1));
    t = ctx.term_mul(t, ctx.gen_term(ctx.s(), 1));
    out.push_back(t);
  }
  return out;
}

std::vector<Term> xstar_terms(const Context& ctx, const std::vector<int>& xvars) {
  std::vector<Term> out;
  const int n = static_cast<int>(xvars.size());
  for (int i = 1; i <= n; ++i) out.push_back(star_term(ctx, xvars, i));
  return out;
}

std::vector<QIntegralBounds> standard_bounds(const Context& ctx, const std::vector<int>& xvars) {
  std::vector<QIntegralBounds> out;
  for (std::size_t j = 0; j + 1 < xvars.size(); ++j) {
    QIntegralBounds b;
    b.lower = ctx.gen_term(xvars[j + 1], 1);
    b.upper = ctx.term_mul(q_pow(ctx, 2), ctx.gen_term(xvars[j], 1));
    out.push_back(b);
  }
  return out;
}

RatFun iterated_integral(const Context& ctx, const std::vector<int>& xvars,
                         const std::vector<int>& yvars, const RatFun& inner, int k,
                         const std::vector<QIntegralBounds>& bounds,
                         const std::vector<int>& order) {
  const int n = static_cast<int>(xvars.size());
  auto xs = xstar_terms(ctx, xvars);
  auto ys = ystar_terms(ctx, yvars, n);
  RatFun acc = RatFun(weyl_v(ctx, ys)) * inner;
  for (int j : order) {
    acc = acc * RatFun(weyl_pi_column(ctx, xs, ys[static_cast<std::size_t>(j)], k));
    acc = q_integral(ctx, acc, yvars[static_cast<std::size_t>(j)],
                     bounds[static_cast<std::size_t>(j)]);
  }
  return acc;
}

bool integral_rep_verify(const Context& ctx, const Partition& mu, int n, int k) {
  if (mu.length() > n) throw LengthExceeded();
  if (mu.part(n) != 0) throw MuNNonzero();
  std::vector<int> xvars, yvars;
  for (int i = 0; i < n; ++i) xvars.push_back(ctx.x(i));
  for (int j = 0; j < n - 1; ++j) yvars.push_back(ctx.y(j));

  RatFun p_outer = pstar_comb(ctx, mu, xvars);
  RatFun p_inner = pstar_comb(ctx, mu, yvars);
  Subst sshift(ctx);
  sshift.set(ctx.s(), ctx.term_mul(ctx.gen_term(ctx.s(), 1), ctx.gen_term(ctx.th(), 1)));
  p_inner = substitute(p_inner, sshift);

  std::vector<int> order;
  for (int j = n - 2; j >= 0; --j) order.push_back(j);  // innermost y_{n-1} first
  RatFun rhs = iterated_integral(ctx, xvars, yvars, p_inner, k, standard_bounds(ctx, xvars), order);

  RatFun lhs = c_const(ctx, mu, n, k) * RatFun(weyl_d(ctx, xstar_terms(ctx, xvars), k)) * p_outer;
  lhs = lhs.mul_term(ctx.gen_term(ctx.th(), 2 * mu.weight()));
  return lhs.eq(rhs);
}

RatFun pstar_integral(const Context& ctx, const Partition& mu, const std::vector<int>& vars,
                      const std::vector<int>& aux, int k) {
  const int n = static_cast<int>(vars.size());
  if (mu.length() > n) throw LengthExceeded();
  if (mu.empty()) return RatFun::one(ctx.size());
  if (mu.part(n) > 0) {
    // Strip a full column: P*_mu(x;q,t,s) =
    // q^{|mu-1|} prod_i (x_i t^{1-i} - t^{1-n})(1 - 1/(x_i t^{n-i} s^2))
    //   P*_{mu-1}(x/q; q,t,sq).
    Partition lower = mu.minus_one(n);
    RatFun inner = pstar_integral(ctx, lower, vars, aux, k);
    Subst shift(ctx);
    for (int v : vars) shift.set(v, ctx.term_mul(ctx.gen_term(v, 1), q_pow(ctx, -2)));
    shift.set(ctx.s(), ctx.term_mul(ctx.gen_term(ctx.s(), 1), q_pow(ctx, 2)));
    RatFun acc = substitute(inner, shift).mul_term(q_pow(ctx, 2 * lower.weight()));
    for (int i = 1; i <= n; ++i) {
      Term xt = ctx.term_mul(ctx.gen_term(vars[static_cast<std::size_t>(i - 1)], 1),
                             ctx.gen_term(ctx.th(), 2 * (1 - i)));
      Poly f1 = Poly::from_term(xt) - Poly::from_term(ctx.gen_term(ctx.th(), 2 * (1 - n)));
      Term invt = ctx.term_mul(ctx.gen_term(vars[static_cast<std::size_t>(i - 1)], -1),
                               ctx.term_mul(ctx.gen_term(ctx.th(), -2 * (n - i)),
                                            ctx.gen_term(ctx.s(), -2)));
      acc = acc * RatFun(f1 * one_minus_term(ctx, invt));
    }
    return acc;
  }
  // Lift from n-1 variables through the q-integral.
  std::vector<int> yv(aux.begin(), aux.begin() + (n - 1));
  std::vector<int> next_aux(vars.begin(), vars.begin() + std::max(n - 2, 0));
  RatFun inner = pstar_integral(ctx, mu, yv, next_aux, k);
  Subst sshift(ctx);
  sshift.set(ctx.s(), ctx.term_mul(ctx.gen_term(ctx.s(), 1), ctx.gen_term(ctx.th(), 1)));
  inner = substitute(inner, sshift);
  std::vector<int> order;
  for (int j = n - 2; j >= 0; --j) order.push_back(j);
  RatFun integral = iterated_integral(ctx, vars, yv, inner, k, standard_bounds(ctx, vars), order);
  RatFun denom = c_const(ctx, mu, n, k) * RatFun(weyl_d(ctx, xstar_terms(ctx, vars), k));
  RatFun result = integral / denom;
  return result.mul_term(ctx.gen_term(ctx.th(), -2 * mu.weight()));
}

RatFun pstar_integral(const Context& ctx, const Partition& mu, int n, int k) {
  std::vector<int> xvars, yvars;
  for (int i = 0; i < n; ++i) xvars.push_back(ctx.x(i));
  for (int j = 0; j < std::max(n - 1, 0); ++j) yvars.push_back(ctx.y(j));
  return pstar_integral(ctx, mu, xvars, yvars, k);
}

}  // namespace bcinterp
