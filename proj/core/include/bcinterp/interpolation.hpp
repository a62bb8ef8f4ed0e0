#ifndef BCINTERP_INTERPOLATION_HPP
#define BCINTERP_INTERPOLATION_HPP

#include <map>
#include <vector>

#include "bcinterp/macdonald.hpp"
#include "bcinterp/partition.hpp"
#include "bcinterp/ratfun.hpp"
#include "bcinterp/subst.hpp"

namespace bcinterp {

/*
 * BC-type interpolation polynomials P*_mu(x;q,t,s): the unique element of
 * the algebra of W-invariant Laurent polynomials in the starred variables
 * x*_i = x_i t^{n-i} s of degree |mu| that vanishes at q^la for mu not
 * contained in la and takes the value H(mu,n;q,t,s) at q^mu.
 *
 * Three independent constructions are provided (a fourth, the q-integral
 * lift, lives in qintegral.hpp):
 *
 *  - pstar_solve: the reference route; solves the square linear system
 *    over the basis of W-orbit sums of starred monomials with evaluation
 *    conditions on the grid {q^la : |la| <= |mu|}. Fraction-free Bareiss
 *    elimination keeps the matrix entries polynomial.
 *  - pstar_comb: the reverse-tableau sum.
 *  - pstar_branch: the one-variable branching recursion; the stripped
 *    (n-1)-variable polynomials keep the same s, because their starred
 *    variables coincide with the ambient ones.
 */

enum class Route { Solve, Comb, Branch, Integral };

// Normalization constant H(mu,n;q,t,s) of the vanishing characterization;
// a Laurent polynomial in q^(1/2), t^(1/2), s.
RatFun norm_H(const Context& ctx, const Partition& mu, int n);

// x*_i as a term; i is 1-based, n = vars.size().
Term star_term(const Context& ctx, const std::vector<int>& vars, int i);

// W-orbit sum of the starred monomial (x*)^nu.
Poly orbit_sum(const Context& ctx, const Partition& nu, const std::vector<int>& vars);

RatFun pstar_solve(const Context& ctx, const Partition& mu, const std::vector<int>& vars);
RatFun pstar_comb(const Context& ctx, const Partition& mu, const std::vector<int>& vars);
RatFun pstar_branch(const Context& ctx, const Partition& mu, const std::vector<int>& vars);
RatFun pstar(const Context& ctx, const Partition& mu, const std::vector<int>& vars, Route route);

// Two-parameter A-type interpolation polynomial (the s -> infinity limit):
// the tableau formula with every second factor replaced by 1.
RatFun pstar_two_param(const Context& ctx, const Partition& mu, const std::vector<int>& vars);

// Branching coefficient psi_{mu,nu}(u;n) of eq. (5.2); u is any monomial
// term (the symbol u, or x_1 inside the recursion). Zero unless nu
// interlaces mu with at most n-1 parts.
RatFun branch_coeff(const Context& ctx, const Partition& mu, const Partition& nu, int n,
                    const Term& u);

// Pieri coefficient psi'_{la,mu}(u,n); zero outside mu <= la <= mu+(1^n).
// Uses the context's u symbol.
RatFun pieri_coeff(const Context& ctx, const Partition& la, const Partition& mu, int n);

// Exact evaluation: substitutes point[i] for vars[i].
RatFun eval_at(const Context& ctx, const RatFun& value, const std::vector<int>& vars,
               const std::vector<Term>& point);

// The point q^la = (q^{la_1}, ..., q^{la_n}).
std::vector<Term> q_point(const Context& ctx, const Partition& la, int n);

// Memoized branch-route table for one variable slice.
class PstarTable {
public:
  PstarTable(const Context& ctx, std::vector<int> vars) : ctx_(&ctx), vars_(std::move(vars)) {}
  const RatFun& get(const Partition& mu);

private:
  const Context* ctx_;
  std::vector<int> vars_;
  std::map<Partition, RatFun> cache_;
};

// W-invariance in the starred variables (membership in Lambda_{t,s}).
bool is_w_invariant(const Context& ctx, const RatFun& f, const std::vector<int>& vars);

// Newton expansion f = sum c_mu P*_mu via the triangular evaluation
// system; checks membership (NotInAlgebra) and the degree bound
// (DegreeExceeded, via a full residual identity).
std::map<Partition, RatFun> newton_expand(const Context& ctx, const RatFun& f,
                                          const std::vector<int>& vars, long degree_bound);

// Grading extractors (the denominator must not mention the graded symbols).
RatFun component_x_degree(const RatFun& f, const std::vector<int>& vars, long long d);
RatFun component_top_x(const RatFun& f, const std::vector<int>& vars);
RatFun component_sym_exponent(const RatFun& f, int sym, Int e);        // keeps the symbol power
RatFun coefficient_sym_exponent(const RatFun& f, int sym, Int e);      // strips the symbol power
RatFun component_extreme(const RatFun& f, int sym, bool highest);

// Verifiers for the paper's identities; all exact.
bool verify_shift_p21(const Context& ctx, const Partition& mu, const std::vector<int>& vars);
bool verify_shift_p22(const Context& ctx, const Partition& mu, const std::vector<int>& vars);
bool verify_shift_p23(const Context& ctx, const Partition& mu, const std::vector<int>& vars);
bool top_term_check(const Context& ctx, const Partition& mu, const std::vector<int>& vars);
enum class LimitDirection { SInfinity, SZero };
bool limit_check(const Context& ctx, const Partition& mu, const std::vector<int>& vars,
                 LimitDirection direction);
bool verify_pieri(const Context& ctx, const Partition& mu, const std::vector<int>& vars);
bool verify_cauchy(const Context& ctx, int n, int m);
// Lemma 5.5 slice: substituting x_j = q^{la_j} for j >= i kills P*_mu
// whenever the tail of mu from i is not contained in the tail of la.
bool lemma55_check(const Context& ctx, const Partition& mu, const Partition& la,
                   const std::vector<int>& vars);
// Vanishing slice of the definition: P*(q^la) = 0 for la not containing mu
// with |la| <= |mu|+2, and P*(q^mu) = H(mu,n).
bool definition_slice_check(const Context& ctx, const Partition& mu, const std::vector<int>& vars,
                            const RatFun& value);

// Fraction-free linear solve (Bareiss); throws SingularSystem.
std::vector<RatFun> solve_linear(std::vector<std::vector<Poly>> a, std::vector<Poly> b);

}  // namespace bcinterp

#endif
