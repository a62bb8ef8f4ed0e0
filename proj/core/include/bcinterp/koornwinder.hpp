#ifndef BCINTERP_KOORNWINDER_HPP
#define BCINTERP_KOORNWINDER_HPP

#include <array>

#include "bcinterp/interpolation.hpp"

namespace bcinterp {

/*
 * The six-parameter Koornwinder family enters through the binomial
 * expansion: normalized polynomial values expand in interpolation
 * polynomials with the s-slot filled by a1 (argument side) and by the
 * dual parameter a1' = sqrt(a1 a2 a3 a4) (label side). The parameters are
 * represented through their square roots r1..r4 (a_i = r_i^2), so the
 * dual involution is an exact monomial map.
 *
 * At n = 1 the family reduces to Askey-Wilson polynomials; a self-
 * contained eigen-solve of the standard second-order q-difference
 * operator closes the verification loop there. For n >= 2 the evaluation
 * values P_mu(q^rho') are not derivable from the material here and must
 * be supplied externally (EvaluationTable fixtures).
 */

struct KoornwinderParams {
  int n = 1;
  std::array<Term, 4> a;  // the parameters a_i as resolved terms
};

// a_i = r_i^2 on the context's root generators.
KoornwinderParams standard_params(const Context& ctx, int n);

// Dual parameters a'_i = sqrt(prod_j a_j^{M_ij}) for the sign matrix with
// rows (1,1,1,1), (1,1,-1,-1), (1,-1,1,-1), (1,-1,-1,1); an involution.
KoornwinderParams dual_params(const Context& ctx, const KoornwinderParams& p);

// q^{rho'} = (t^{n-1} a_1, ..., t a_1, a_1).
std::vector<Term> q_rho_prime(const Context& ctx, const KoornwinderParams& p);

using EvaluationTable = std::map<Partition, RatFun>;

std::string evaluation_table_to_json(const Context& ctx, const EvaluationTable& table);
EvaluationTable evaluation_table_from_json(const Context& ctx, const std::string& text);

// Interpolation machinery with the s-slot filled by an explicit term.
RatFun pstar_at_s(const Context& ctx, const Partition& mu, const std::vector<int>& vars,
                  const Term& s_value);
RatFun norm_H_at_s(const Context& ctx, const Partition& mu, int n, const Term& s_value);
std::map<Partition, RatFun> newton_expand_at_s(const Context& ctx, const RatFun& f,
                                               const std::vector<int>& vars, long degree_bound,
                                               const Term& s_value);

// Right-hand side of the binomial expansion:
// sum_{mu in la} t^{(n-1)|mu|} a1^{|mu|} P*_mu(q^la; a1') P*_mu(x; a1)
//   / (H(mu,n; a1') e_mu).
RatFun binomial_rhs(const Context& ctx, const Partition& la, const KoornwinderParams& p,
                    const EvaluationTable& e, const std::vector<int>& vars);

// Structural checks that hold for every evaluation table: the value at
// x = (1,...,1) is 1, and the top x-degree component of the mu = la term
// is t^{(n-1)|la|} a1^{|la|} P_la(x1, x2/t, ...) while all other terms
// have strictly smaller degree.
bool binomial_rhs_is_one_at_ones(const Context& ctx, const Partition& la,
                                 const KoornwinderParams& p, const EvaluationTable& e,
                                 const std::vector<int>& vars);
bool binomial_top_term_check(const Context& ctx, const Partition& la, const KoornwinderParams& p,
                             const std::vector<int>& vars);

struct AskeyWilson {
  RatFun poly;        // W-invariant Laurent polynomial in x1, monic on x^m
  RatFun eigenvalue;  // eigenvalue under the second-order operator
  RatFun evaluation;  // value at x = a1 (the point q^{rho'} for n = 1)
};

// Triangular eigen-solve of the Askey-Wilson operator with parameters
// (a,b,c,d) = (a1, -a2, q^(1/2) a3, -q^(1/2) a4) in the basis
// {1, x + 1/x, x^2 + 1/x^2, ...}. Throws DegenerateEigenvalue when two
// eigenvalues coincide (non-generic numeric parameters).
AskeyWilson askey_wilson(const Context& ctx, int m, const KoornwinderParams& p);

// Operator action matrix in the cosine basis; exposed so the tests can
// assert triangularity. Column j holds D B_j expanded over B_0..B_j.
std::vector<std::vector<RatFun>> askey_wilson_matrix(const Context& ctx, int degree,
                                                     const KoornwinderParams& p);

// n = 1 verification of the binomial expansion for all m <= m_max; the
// context must carry numeric bindings for qh and r1..r4 passing the
// genericity checks.
bool verify_binomial_n1(const Context& ctx, int m_max);

// Self-duality at n = 1: p_m(q^{nu1} a1) / p_m(a1) symmetric in (m, nu1)
// when a1 = a2 a3 a4. Throws NotSelfDual otherwise.
bool verify_duality_n1(const Context& ctx, int m, int nu1);

}  // namespace bcinterp

#endif
