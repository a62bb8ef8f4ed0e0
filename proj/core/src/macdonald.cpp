#include "bcinterp/macdonald.hpp"

#include <algorithm>

namespace bcinterp {

namespace {

// 1 - q^a t^b as a polynomial (qh/th exponents are doubled).
Poly one_minus_qt(const Context& ctx, long a, long b) {
  Poly p = Poly::constant(ctx.size(), Rat(1));
  Term t = ctx.term_mul(ctx.gen_term(ctx.qh(), 2 * a), ctx.gen_term(ctx.th(), 2 * b));
  t.coef = -t.coef;
  p += Poly::from_term(t);
  return p;
}

}  // namespace

RatFun psi_skew(const Context& ctx, const Partition& la, const Partition& mu) {
  if (!interlaces(mu, la)) return RatFun::zero(ctx.size());
  // Collect the factors (1 - q^a t^b) with multiplicities and cancel the
  // num/den overlap before multiplying out; the tableau sums downstream
  // stay much smaller this way.
  std::map<std::pair<long, long>, long> factors;  // (a,b) -> net multiplicity
  int lm = mu.length();
  for (int i = 1; i <= lm; ++i) {
    for (int j = i; j <= lm; ++j) {
      long b = j - i;
      long mi = mu.part(i), mj = mu.part(j), li = la.part(i), lj1 = la.part(j + 1);
      for (long r = mi - mj; r <= li - mj - 1; ++r) ++factors[{r, b + 1}];
      for (long r = mi - lj1 + 1; r <= li - lj1; ++r) ++factors[{r, b}];
      for (long r = mi - mj + 1; r <= li - mj; ++r) --factors[{r, b}];
      for (long r = mi - lj1; r <= li - lj1 - 1; ++r) --factors[{r, b + 1}];
    }
  }
  Poly num = Poly::constant(ctx.size(), Rat(1));
  Poly den = num;
  for (const auto& [qt, mult] : factors) {
    for (long c = 0; c < mult; ++c) num *= one_minus_qt(ctx, qt.first, qt.second);
    for (long c = 0; c < -mult; ++c) den *= one_minus_qt(ctx, qt.first, qt.second);
  }
  return RatFun(std::move(num), std::move(den));
}

RatFun psi_tableau(const Context& ctx, const ReverseTableau& tableau) {
  RatFun acc = RatFun::one(ctx.size());
  const auto& chain = tableau.chain();
  for (std::size_t r = 1; r < chain.size(); ++r) acc *= psi_skew(ctx, chain[r - 1], chain[r]);
  return acc;
}

RatFun macdonald_p(const Context& ctx, const Partition& mu, const std::vector<int>& vars) {
  int n = static_cast<int>(vars.size());
  if (mu.length() > n) throw LengthExceeded();
  std::vector<RatFun> parts;
  for (const auto& tab : reverse_tableaux(mu, n)) {
    Term mono = ctx.unit_term();
    const auto& chain = tab.chain();
    for (int v = 1; v <= n; ++v) {
      long count = chain[static_cast<std::size_t>(v - 1)].weight() -
                   chain[static_cast<std::size_t>(v)].weight();
      if (count != 0)
        mono = ctx.term_mul(mono, ctx.gen_term(vars[static_cast<std::size_t>(v - 1)], count));
    }
    parts.push_back(psi_tableau(ctx, tab).mul_term(mono));
  }
  return ratfun_sum(std::move(parts), ctx.size());
}

std::map<Partition, RatFun> expand_in_macdonald(const Context& ctx, const RatFun& f,
                                                const std::vector<int>& vars) {
  // Symmetry precheck on adjacent transpositions.
  for (std::size_t i = 0; i + 1 < vars.size(); ++i) {
    Subst swap(ctx);
    swap.set_monomial(vars[i], Rat(1), {{vars[i + 1], 1}});
    swap.set_monomial(vars[i + 1], Rat(1), {{vars[i], 1}});
    if (!substitute(f, swap).eq(f)) throw NotSymmetric();
  }
  for (int v : vars)
    if (f.den().mentions(v)) throw NotSymmetric();

  std::map<Partition, RatFun> out;
  std::map<Partition, RatFun> pcache;
  RatFun rest = f;
  while (!rest.is_zero()) {
    // Leading x-monomial in graded-lex over the variable slice.
    long long best_deg = 0;
    bool have = false;
    std::vector<Int> best_key;
    for (const auto& [m, c] : rest.num().terms()) {
      long long d = Poly::term_degree(m, vars);
      std::vector<Int> key;
      key.reserve(vars.size());
      for (int v : vars) key.push_back(m[static_cast<std::size_t>(v)]);
      if (!have || d > best_deg || (d == best_deg && key > best_key)) {
        have = true;
        best_deg = d;
        best_key = std::move(key);
      }
    }
    std::vector<long> lam_parts;
    for (Int e : best_key) {
      if (e < 0) throw NotSymmetric();
      lam_parts.push_back(static_cast<long>(e));
    }
    for (std::size_t i = 0; i + 1 < lam_parts.size(); ++i)
      if (lam_parts[i] < lam_parts[i + 1]) throw NotSymmetric();
    Partition lam{std::move(lam_parts)};
    RatFun coef = RatFun(rest.num().coefficient_of_mono(vars, best_key), rest.den());
    auto it = pcache.find(lam);
    if (it == pcache.end()) it = pcache.emplace(lam, macdonald_p(ctx, lam, vars)).first;
    out[lam] = coef;
    rest = rest - coef * it->second;
  }
  return out;
}

RatFun pieri_weight_a(const Context& ctx, const Partition& la, const Partition& mu, int n) {
  if (!ctx.has_u()) throw Error("pieri_weight_a needs a context with the u symbol");
  if (mu.length() > n || la.length() > n) return RatFun::zero(ctx.size());
  if (!la.contains(mu) || !mu.plus_one(n).contains(la)) return RatFun::zero(ctx.size());
  std::vector<int> vars;
  for (int i = 0; i < n; ++i) vars.push_back(ctx.x(i));
  RatFun f = macdonald_p(ctx, mu, vars);
  for (int v : vars) {
    Poly factor = Poly::symbol(ctx.size(), ctx.u()) + Poly::symbol(ctx.size(), v);
    f = f * RatFun(std::move(factor));
  }
  auto expansion = expand_in_macdonald(ctx, f, vars);
  auto it = expansion.find(la);
  if (it == expansion.end()) return RatFun::zero(ctx.size());
  long e = mu.plus_one(n).weight() - la.weight();
  RatFun psi = it->second.mul_term(ctx.gen_term(ctx.u(), -e));
  if (psi.num().mentions(ctx.u()) || psi.den().mentions(ctx.u()))
    throw Error("pieri weight is not a pure power of u times a (q,t)-function");
  return psi;
}

bool dual_cauchy_check(const Context& ctx, int n, int m) {
  std::vector<int> xs, ys;
  for (int i = 0; i < n; ++i) xs.push_back(ctx.x(i));
  for (int j = 0; j < m; ++j) ys.push_back(ctx.y(j));
  RatFun lhs = RatFun::one(ctx.size());
  for (int xv : xs)
    for (int yv : ys) {
      Poly factor = Poly::symbol(ctx.size(), xv) - Poly::symbol(ctx.size(), yv);
      lhs = lhs * RatFun(std::move(factor));
    }
  RatFun rhs = RatFun::zero(ctx.size());
  std::vector<long> box(static_cast<std::size_t>(n), static_cast<long>(m));
  Partition full{std::move(box)};
  for (const auto& mu : partitions_upto(static_cast<long>(n) * m, n)) {
    if (!full.contains(mu)) continue;
    Partition mt = tilde(mu, n, m);
    RatFun term = macdonald_p(ctx, mu, xs) * swap_qt(ctx, macdonald_p(ctx, mt, ys));
    if (mt.weight() % 2 != 0) term = -term;
    rhs += term;
  }
  return lhs.eq(rhs);
}

bool is_qt_only(const Context& ctx, const RatFun& f) {
  for (int sym = 0; sym < ctx.size(); ++sym) {
    if (sym == ctx.qh() || sym == ctx.th()) continue;
    if (f.num().mentions(sym) || f.den().mentions(sym)) return false;
  }
  return true;
}

RatFun swap_qt(const Context& ctx, const RatFun& f) {
  Subst swap(ctx);
  swap.set_monomial(ctx.qh(), Rat(1), {{ctx.th(), 1}});
  swap.set_monomial(ctx.th(), Rat(1), {{ctx.qh(), 1}});
  return substitute(f, swap);
}

}  // namespace bcinterp
