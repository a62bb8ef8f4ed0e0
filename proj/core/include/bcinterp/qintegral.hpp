#ifndef BCINTERP_QINTEGRAL_HPP
#define BCINTERP_QINTEGRAL_HPP

#include "bcinterp/interpolation.hpp"

namespace bcinterp {

/*
 * Jackson q-integrals against the measure d_q z / z, restricted to Laurent
 * polynomial integrands: int_v^u z^l d_q z / z = (u^l - v^l) / [l]_q with
 * [l]_q = (1-q^l)/(1-q), and the q-integral representation of the
 * interpolation polynomials at the specializations t = q^{2k+1} where all
 * Pochhammer ratios telescope to finite products.
 */

struct QIntegralBounds {
  Term lower;
  Term upper;
};

// Termwise q-integral over zsym. The zsym-constant coefficient must
// vanish (ConstantTermInMeasure otherwise); the denominator of f may not
// mention zsym.
RatFun q_integral(const Context& ctx, const RatFun& f, int zsym, const QIntegralBounds& bounds);

// Context with variables x1..xn, y1..y(n-1) and th bound to qh^(2k+1).
Context make_integral_context(int n, int k);

// det[ z_i^{m-j+1} - z_i^{-(m-j+1)} ] over the starred variables given.
Poly weyl_v(const Context& ctx, const std::vector<Term>& starred);

// prod_{i,j} prod_{r=0}^{k-1} prod over sign choices of
// (1 - q^{r+1/2} (x*_i)^{e1} (y*_j)^{e2}); equals 1 at k = 0.
Poly weyl_pi(const Context& ctx, const std::vector<Term>& xstar, const std::vector<Term>& ystar,
             int k);

// prod_{i<j} ((x*_i + 1/x*_i) - (x*_j + 1/x*_j)) prod_{r=1}^{2k} prod over
// signs of (1 - q^r (x*_i)^{e1} (x*_j)^{e2}).
Poly weyl_d(const Context& ctx, const std::vector<Term>& xstar, int k);

// Pi factors involving one y variable only (the integrand is assembled
// innermost-first, so each y_j picks up its own factor group).
Poly weyl_pi_column(const Context& ctx, const std::vector<Term>& xstar, const Term& ystar, int k);

// The constant of the integral representation at theta = 2k+1:
// q^{n(n-1)/4} (1-q)^{n-1} prod_{i<n} prod_{j=1}^{th-1}(1-q^j) /
// prod_{j=0}^{th-1}(1 - q^{mu_i + (n-i)th + j}).
RatFun c_const(const Context& ctx, const Partition& mu, int n, int k);

// Starred y-terms y*_i = y_i t^{n-i-1/2} s for the ambient n.
std::vector<Term> ystar_terms(const Context& ctx, const std::vector<int>& yvars, int n);
std::vector<Term> xstar_terms(const Context& ctx, const std::vector<int>& xvars);

// Exact check of the cross-multiplied integral representation
//   C(mu,n) t^{|mu|} D(x*) P*_mu(x;q,t,s) = int V(y*) Pi(x*;y*) P*_mu(y;q,t,s t^(1/2))
// over the nested bounds (x_{j+1}, q x_j), innermost first. Requires
// mu_n = 0 and a context from make_integral_context.
bool integral_rep_verify(const Context& ctx, const Partition& mu, int n, int k);

// The integral construction route: lift from n-1 variables when mu_n = 0,
// otherwise strip a full column through the s -> sq shift identity.
RatFun pstar_integral(const Context& ctx, const Partition& mu, const std::vector<int>& vars,
                      const std::vector<int>& aux, int k);
RatFun pstar_integral(const Context& ctx, const Partition& mu, int n, int k);

// The raw iterated integral of V * Pi * inner over the given bounds; used
// by the bound-shift and order-independence property tests.
RatFun iterated_integral(const Context& ctx, const std::vector<int>& xvars,
                         const std::vector<int>& yvars, const RatFun& inner, int k,
                         const std::vector<QIntegralBounds>& bounds,
                         const std::vector<int>& order);
std::vector<QIntegralBounds> standard_bounds(const Context& ctx, const std::vector<int>& xvars);

}  // namespace bcinterp

#endif
