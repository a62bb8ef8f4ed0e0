#ifndef BCINTERP_TESTS_SUPPORT_HPP
#define BCINTERP_TESTS_SUPPORT_HPP

#include <random>

#include "bcinterp/interpolation.hpp"
#include "bcinterp/serialize.hpp"

namespace bcinterp::testing {

using Rng = std::mt19937_64;

inline Rat random_rat(Rng& rng, long max_abs = 12) {
  std::uniform_int_distribution<long> num(-max_abs, max_abs);
  std::uniform_int_distribution<long> den(1, max_abs);
  return rat(num(rng), den(rng));
}

inline Rat random_nonzero_rat(Rng& rng, long max_abs = 12) {
  Rat r;
  do {
    r = random_rat(rng, max_abs);
  } while (sgn(r) == 0);
  return r;
}

inline Poly random_poly(const Context& ctx, Rng& rng, int max_terms = 6, Int max_exp = 3) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<Int> exp(-max_exp, max_exp);
  Poly p(ctx.size());
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    Mono m(static_cast<std::size_t>(ctx.size()), 0);
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = exp(rng);
    p.add_term(std::move(m), random_rat(rng));
  }
  return p;
}

inline Poly random_nonzero_poly(const Context& ctx, Rng& rng, int max_terms = 6, Int max_exp = 3) {
  Poly p(ctx.size());
  do {
    p = random_poly(ctx, rng, max_terms, max_exp);
  } while (p.is_zero());
  return p;
}

inline RatFun random_ratfun(const Context& ctx, Rng& rng) {
  return RatFun(random_poly(ctx, rng), random_nonzero_poly(ctx, rng, 3, 2));
}

// q^a t^b s^c as a RatFun for expected-value assembly in tests.
inline RatFun qts_value(const Context& ctx, long a, long b, long c) {
  Term t = ctx.term_mul(ctx.gen_term(ctx.qh(), 2 * a), ctx.gen_term(ctx.th(), 2 * b));
  return RatFun::from_term(ctx.term_mul(t, ctx.gen_term(ctx.s(), c)));
}

inline RatFun parse(const Context& ctx, const std::string& text) { return parse_text(text, ctx); }

}  // namespace bcinterp::testing

#endif
