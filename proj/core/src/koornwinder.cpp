#include "bcinterp/koornwinder.hpp"

#include <json.hpp>

#include "bcinterp/serialize.hpp"

namespace bcinterp {

namespace {

const int kSign[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};

Poly one_minus_term(const Context& ctx, const Term& t) {
  Poly p = Poly::constant(ctx.size(), Rat(1));
  Term neg = t;
  neg.coef = -neg.coef;
  p += Poly::from_term(neg);
  return p;
}

Term term_sqrt(const Context& ctx, const Term& t) {
  Term r = ctx.unit_term();
  auto root = rat_sqrt(t.coef);
  if (!root) throw Error("parameter product is not a perfect rational square");
  r.coef = *root;
  for (std::size_t i = 0; i < t.mono.size(); ++i) {
    if (t.mono[i] % 2 != 0) throw Error("parameter product has an odd exponent");
    r.mono[i] = t.mono[i] / 2;
  }
  return r;
}

Subst s_to(const Context& ctx, const Term& value) {
  Subst spec(ctx);
  spec.set(ctx.s(), value);
  return spec;
}

}  // namespace

KoornwinderParams standard_params(const Context& ctx, int n) {
  KoornwinderParams p;
  p.n = n;
  for (int i = 0; i < 4; ++i) p.a[static_cast<std::size_t>(i)] = ctx.gen_term(ctx.r(i), 2);
  return p;
}

KoornwinderParams dual_params(const Context& ctx, const KoornwinderParams& p) {
  KoornwinderParams d;
  d.n = p.n;
  for (int i = 0; i < 4; ++i) {
    Term prod = ctx.unit_term();
    for (int j = 0; j < 4; ++j)
      prod = ctx.term_mul(prod, ctx.term_pow(p.a[static_cast<std::size_t>(j)], kSign[i][j]));
    d.a[static_cast<std::size_t>(i)] = term_sqrt(ctx, prod);
  }
  return d;
}

std::vector<Term> q_rho_prime(const Context& ctx, const KoornwinderParams& p) {
  std::vector<Term> out;
  for (int i = 1; i <= p.n; ++i)
    out.push_back(ctx.term_mul(ctx.gen_term(ctx.th(), 2 * (p.n - i)), p.a[0]));
  return out;
}

std::string evaluation_table_to_json(const Context& ctx, const EvaluationTable& table) {
  nlohmann::ordered_json obj;
  for (const auto& [mu, value] : table)
    obj[mu.to_string()] = nlohmann::ordered_json::parse(to_json(value, ctx));
  return obj.dump();
}

EvaluationTable evaluation_table_from_json(const Context& ctx, const std::string& text) {
  nlohmann::json obj;
  try {
    obj = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), static_cast<std::size_t>(e.byte));
  }
  if (!obj.is_object()) throw ParseError("fixture must be a JSON object", 0);
  EvaluationTable table;
  for (auto it = obj.begin(); it != obj.end(); ++it)
    table.emplace(Partition::parse(it.key()), parse_json(it.value().dump(), ctx));
  for (const auto& [mu, value] : table) {
    if (value.is_zero()) throw ParseError("evaluation table entry for " + mu.to_string() + " is zero", 0);
    if (mu.empty() && !value.eq(RatFun::one(ctx.size())))
      throw ParseError("evaluation table must have e_0 = 1", 0);
  }
  return table;
}

RatFun pstar_at_s(const Context& ctx, const Partition& mu, const std::vector<int>& vars,
                  const Term& s_value) {
  return substitute(pstar_branch(ctx, mu, vars), s_to(ctx, s_value));
}

RatFun norm_H_at_s(const Context& ctx, const Partition& mu, int n, const Term& s_value) {
  return substitute(norm_H(ctx, mu, n), s_to(ctx, s_value));
}

std::map<Partition, RatFun> newton_expand_at_s(const Context& ctx, const RatFun& f,
                                               const std::vector<int>& vars, long degree_bound,
                                               const Term& s_value) {
  int n = static_cast<int>(vars.size());
  auto grid = partitions_upto(degree_bound, n);
  std::map<Partition, RatFun> pstars;
  for (const auto& la : grid) pstars.emplace(la, pstar_at_s(ctx, la, vars, s_value));
  std::map<Partition, RatFun> coeffs;
  for (const auto& la : grid) {
    auto point = q_point(ctx, la, n);
    RatFun val = eval_at(ctx, f, vars, point);
    for (const auto& [nu, c] : coeffs) {
      if (c.is_zero()) continue;
      val -= c * eval_at(ctx, pstars.at(nu), vars, point);
    }
    coeffs[la] = val / norm_H_at_s(ctx, la, n, s_value);
  }
  RatFun residual = f;
  for (const auto& [nu, c] : coeffs) {
    if (c.is_zero()) continue;
    residual -= c * pstars.at(nu);
  }
  if (!residual.is_zero()) throw DegreeExceeded();
  std::map<Partition, RatFun> out;
  for (auto& [nu, c] : coeffs)
    if (!c.is_zero()) out.emplace(nu, std::move(c));
  return out;
}

RatFun binomial_rhs(const Context& ctx, const Partition& la, const KoornwinderParams& p,
                    const EvaluationTable& e, const std::vector<int>& vars) {
  const int n = p.n;
  if (static_cast<int>(vars.size()) != n || la.length() > n) throw LengthExceeded();
  Term a1 = p.a[0];
  Term a1p = dual_params(ctx, p).a[0];
  auto la_point = q_point(ctx, la, n);
  RatFun acc = RatFun::zero(ctx.size());
  for (const auto& mu : partitions_upto(la.weight(), n)) {
    if (!la.contains(mu)) continue;
    auto it = e.find(mu);
    if (it == e.end()) throw MissingEvaluation(mu.to_string());
    RatFun label = eval_at(ctx, pstar_at_s(ctx, mu, vars, a1p), vars, la_point);
    RatFun arg = pstar_at_s(ctx, mu, vars, a1);
    RatFun h = norm_H_at_s(ctx, mu, n, a1p);
    Term scale = ctx.term_mul(ctx.gen_term(ctx.th(), 2 * (n - 1) * mu.weight()),
                              ctx.term_pow(a1, mu.weight()));
    acc += (label * arg / (h * it->second)).mul_term(scale);
  }
  return acc;
}

bool binomial_rhs_is_one_at_ones(const Context& ctx, const Partition& la,
                                 const KoornwinderParams& p, const EvaluationTable& e,
                                 const std::vector<int>& vars) {
  RatFun rhs = binomial_rhs(ctx, la, p, e, vars);
  std::vector<Term> ones(vars.size(), ctx.unit_term());
  return eval_at(ctx, rhs, vars, ones).eq(RatFun::one(ctx.size()));
}

bool binomial_top_term_check(const Context& ctx, const Partition& la, const KoornwinderParams& p,
                             const std::vector<int>& vars) {
  const int n = p.n;
  Term a1 = p.a[0];
  // Terms with mu strictly inside la have degree |mu| < |la|, independently
  // of the evaluation table, so only the mu = la term can contribute at the
  // top; its coefficient reduces to t^{(n-1)|la|} a1^{|la|} times the top
  // component of P*_la(x; a1), which must be P_la(x1, x2/t, ...).
  for (const auto& mu : partitions_upto(la.weight(), n)) {
    if (!la.contains(mu) || mu == la) continue;
    RatFun arg = pstar_at_s(ctx, mu, vars, a1);
    if (arg.num().total_degree(vars) >= la.weight()) return false;
  }
  RatFun top = component_top_x(pstar_at_s(ctx, la, vars, a1), vars);
  RatFun expected = macdonald_p(ctx, la, vars);
  Subst hat(ctx);
  for (std::size_t i = 0; i < vars.size(); ++i)
    hat.set(vars[i], ctx.term_mul(ctx.gen_term(vars[i], 1),
                                  ctx.gen_term(ctx.th(), -2 * static_cast<long>(i))));
  return top.eq(substitute(expected, hat));
}

std::vector<std::vector<RatFun>> askey_wilson_matrix(const Context& ctx, int degree,
                                                     const KoornwinderParams& p) {
  const int x = ctx.x(0);
  const int w = ctx.size();
  auto basis = [&](int j) {
    if (j == 0) return Poly::constant(w, Rat(1));
    return Poly::symbol(w, x, j) + Poly::symbol(w, x, -j);
  };
  // Operator data: (a,b,c,d) = (a1, -a2, q^(1/2) a3, -q^(1/2) a4).
  std::array<Term, 4> abcd = {p.a[0], p.a[1], ctx.term_mul(ctx.gen_term(ctx.qh(), 1), p.a[2]),
                              ctx.term_mul(ctx.gen_term(ctx.qh(), 1), p.a[3])};
  abcd[1].coef = -abcd[1].coef;
  abcd[3].coef = -abcd[3].coef;
  auto n_of = [&](int e) {  // prod (1 - param x^e)
    Poly acc = Poly::constant(w, Rat(1));
    for (const Term& t : abcd)
      acc *= one_minus_term(ctx, ctx.term_mul(t, ctx.gen_term(x, e)));
    return acc;
  };
  auto g_of = [&](int e) {  // (1 - x^{2e})(1 - q x^{2e})
    Poly acc = one_minus_term(ctx, ctx.gen_term(x, 2 * e));
    acc *= one_minus_term(ctx, ctx.term_mul(ctx.gen_term(ctx.qh(), 2), ctx.gen_term(x, 2 * e)));
    return acc;
  };
  Poly den = g_of(1) * g_of(-1);
  std::vector<Poly> basis_den;
  for (int i = 0; i <= degree; ++i) basis_den.push_back(basis(i) * den);

  std::vector<std::vector<RatFun>> m(static_cast<std::size_t>(degree) + 1,
                                     std::vector<RatFun>(static_cast<std::size_t>(degree) + 1,
                                                         RatFun::zero(w)));
  for (int j = 0; j <= degree; ++j) {
    Subst up(ctx), down(ctx);
    up.set(x, ctx.term_mul(ctx.gen_term(ctx.qh(), 2), ctx.gen_term(x, 1)));
    down.set(x, ctx.term_mul(ctx.gen_term(ctx.qh(), -2), ctx.gen_term(x, 1)));
    Poly bj = basis(j);
    Poly num = g_of(-1) * n_of(1) * (substitute(bj, up) - bj) +
               g_of(1) * n_of(-1) * (substitute(bj, down) - bj);
    // Extract D B_j = sum_i m[i][j] B_i by peeling top x-coefficients of
    // num = sum_i m[i][j] (B_i * den); the residual must vanish.
    RatFun rest{num};
    for (int i = j; i >= 0; --i) {
      Int e = i + 4;
      RatFun target = RatFun(rest.num().coefficient_of(x, e), rest.den());
      Poly bcoef = basis_den[static_cast<std::size_t>(i)].coefficient_of(x, e);
      if (bcoef.is_zero()) throw Error("askey-wilson basis coefficient vanished");
      RatFun mi = target / RatFun(bcoef);
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = mi;
      rest = rest - mi * RatFun(basis_den[static_cast<std::size_t>(i)]);
    }
    if (!rest.is_zero()) throw Error("askey-wilson operator did not act triangularly");
  }
  return m;
}

AskeyWilson askey_wilson(const Context& ctx, int m, const KoornwinderParams& p) {
  if (p.n != 1) throw Error("the eigen-solve oracle is the n = 1 route");
  auto op = askey_wilson_matrix(ctx, m, p);
  const int w = ctx.size();
  std::vector<RatFun> coeff(static_cast<std::size_t>(m) + 1, RatFun::zero(w));
  coeff[static_cast<std::size_t>(m)] = RatFun::one(w);
  RatFun lambda = op[static_cast<std::size_t>(m)][static_cast<std::size_t>(m)];
  for (int i = m - 1; i >= 0; --i) {
    RatFun rhs = RatFun::zero(w);
    for (int j = i + 1; j <= m; ++j)
      rhs += op[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
             coeff[static_cast<std::size_t>(j)];
    RatFun gap = lambda - op[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    if (gap.is_zero()) throw DegenerateEigenvalue();
    coeff[static_cast<std::size_t>(i)] = rhs / gap;
  }
  AskeyWilson out{RatFun::zero(w), lambda, RatFun::zero(w)};
  const int x = ctx.x(0);
  for (int i = 0; i <= m; ++i) {
    Poly bi = i == 0 ? Poly::constant(w, Rat(1))
                     : Poly::symbol(w, x, i) + Poly::symbol(w, x, -i);
    out.poly += coeff[static_cast<std::size_t>(i)] * RatFun(bi);
  }
  Subst at_a1(ctx);
  at_a1.set(x, p.a[0]);
  out.evaluation = substitute(out.poly, at_a1);
  return out;
}

bool verify_binomial_n1(const Context& ctx, int m_max) {
  KoornwinderParams p = standard_params(ctx, 1);
  std::vector<int> vars{ctx.x(0)};
  EvaluationTable table;
  std::vector<AskeyWilson> oracle;
  for (int m = 0; m <= m_max; ++m) {
    AskeyWilson aw = askey_wilson(ctx, m, p);
    if (aw.evaluation.is_zero()) throw DegenerateEigenvalue();
    Partition mu = m == 0 ? Partition() : Partition{std::vector<long>{m}};
    table.emplace(mu, aw.evaluation);
    oracle.push_back(std::move(aw));
  }
  for (int m = 0; m <= m_max; ++m) {
    Partition la = m == 0 ? Partition() : Partition{std::vector<long>{m}};
    Subst scale(ctx);
    scale.set(ctx.x(0), ctx.term_mul(p.a[0], ctx.gen_term(ctx.x(0), 1)));
    RatFun lhs = substitute(oracle[static_cast<std::size_t>(m)].poly, scale) /
                 oracle[static_cast<std::size_t>(m)].evaluation;
    RatFun rhs = binomial_rhs(ctx, la, p, table, vars);
    if (!lhs.eq(rhs)) return false;
  }
  return true;
}

bool verify_duality_n1(const Context& ctx, int m, int nu1) {
  KoornwinderParams p = standard_params(ctx, 1);
  Term a1 = p.a[0];
  Term a1p = dual_params(ctx, p).a[0];
  Poly diff = Poly::from_term(a1) - Poly::from_term(a1p);
  if (!diff.is_zero()) throw NotSelfDual();
  AskeyWilson pm = askey_wilson(ctx, m, p);
  AskeyWilson pn = askey_wilson(ctx, nu1, p);
  auto eval = [&](const AskeyWilson& f, long e) {
    Subst at(ctx);
    at.set(ctx.x(0), ctx.term_mul(ctx.gen_term(ctx.qh(), 2 * e), a1));
    return substitute(f.poly, at);
  };
  // p_m(q^{nu1} a1) p_{nu1}(a1) = p_{nu1}(q^m a1) p_m(a1).
  return (eval(pm, nu1) * pn.evaluation).eq(eval(pn, m) * pm.evaluation);
}

}  // namespace bcinterp
