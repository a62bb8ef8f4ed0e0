#ifndef BCINTERP_MACDONALD_HPP
#define BCINTERP_MACDONALD_HPP

#include <map>
#include <vector>

#include "bcinterp/partition.hpp"
#include "bcinterp/ratfun.hpp"
#include "bcinterp/subst.hpp"

namespace bcinterp {

/*
 * Ordinary A-type Macdonald polynomials P_mu(x;q,t) and the three weight
 * families the BC construction reuses: the branching weight psi_{la/mu},
 * the tableau weight psi_T, and the Pieri weight psi'_{la/mu}.
 *
 * psi_{la/mu} is the finite form obtained by telescoping the ratios of
 * q-Pochhammer symbols: each pair of rows 1 <= i <= j <= l(mu)
 * contributes
 *
 *     prod_{r=mu_i-mu_j}^{la_i-mu_j-1}   (1 - q^r t^{j-i+1})
 *     prod_{r=mu_i-la_{j+1}+1}^{la_i-la_{j+1}} (1 - q^r t^{j-i})
 *   / prod_{r=mu_i-mu_j+1}^{la_i-mu_j}   (1 - q^r t^{j-i})
 *   / prod_{r=mu_i-la_{j+1}}^{la_i-la_{j+1}-1} (1 - q^r t^{j-i+1}),
 *
 * each product having la_i - mu_i factors. The row-index convention is
 * pinned by the value psi_{(2)/(1)} = (1+q)(1-t)/(1-qt), which the unit
 * tests assert against an independent truncated-product oracle.
 */

// Zero when la/mu is not a horizontal strip.
RatFun psi_skew(const Context& ctx, const Partition& la, const Partition& mu);

RatFun psi_tableau(const Context& ctx, const ReverseTableau& tableau);

// P_mu in the given variables; monic on x^mu, dominance-triangular.
RatFun macdonald_p(const Context& ctx, const Partition& mu, const std::vector<int>& vars);

// Expansion of a symmetric polynomial in the P_mu basis by repeatedly
// stripping the leading monomial. Throws NotSymmetric.
std::map<Partition, RatFun> expand_in_macdonald(const Context& ctx, const RatFun& f,
                                                const std::vector<int>& vars);

// psi'_{la/mu} of the A-type Pieri rule, extracted from the expansion of
// prod_i (u + x_i) * P_mu; zero outside mu <= la <= mu + (1^n).
RatFun pieri_weight_a(const Context& ctx, const Partition& la, const Partition& mu, int n);

// Exact check of prod (x_i - y_j) = sum_{mu in (m^n)} (-1)^{|mu~|}
// P_mu(x;q,t) P_{mu~}(y;t,q).
bool dual_cauchy_check(const Context& ctx, int n, int m);

// True when the value uses only the q,t generators (a MacdonaldWeight).
bool is_qt_only(const Context& ctx, const RatFun& f);

// Swap the roles of q and t.
RatFun swap_qt(const Context& ctx, const RatFun& f);

}  // namespace bcinterp

#endif
