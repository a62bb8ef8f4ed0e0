#ifndef BCINTERP_REFUTER_HPP
#define BCINTERP_REFUTER_HPP

#include <string>
#include <vector>

#include "bcinterp/interpolation.hpp"

namespace bcinterp {

/*
 * Constructive certificate that the one-variable polynomials
 *   f_m(x) = (x-1)...(x-q^{m-1}) (1-1/(s^2 x))...(1-1/(s^2 q^{m-1} x))
 * satisfy no q-difference equation
 *   sum_{-d <= i <= d} a_i(x) f_m(q^i x) = E(m) f_m(x)
 * with rational a_i of bounded degree and a_d or a_{-d} nonzero.
 *
 * Evaluating at x = q^{m-d} kills every shift except i = d (those points
 * are vanishing points of f_m) and the right-hand side, leaving
 * a_d(q^{m-d}) f_m(q^m) = 0 with f_m(q^m) = H((m),1) != 0. Enough probes
 * force more roots on a_d than its degree admits, so a_d = 0; the
 * mirrored points x = 1/(s^2 q^{m-d}) do the same for a_{-d}. The
 * certificate records the probes, the forced roots and the nonvanishing
 * witnesses, and is re-checkable from scratch.
 */

struct RefutationCertificate {
  long order = 0;       // d
  long deg_bound = 0;   // admissible numerator degree span of a_{+-d}
  std::vector<long> probes;  // the values of m
  std::vector<Term> roots_plus;   // q^{m-d}, forced roots of a_d
  std::vector<Term> roots_minus;  // s^-2 q^-(m-d), forced roots of a_{-d}
  std::vector<RatFun> witnesses;  // f_m(q^m) = H((m),1), all nonzero
  bool vanishing_pattern_ok = false;  // every non-leading shift vanished
  bool roots_distinct = false;
  bool surplus = false;  // probe count exceeds the degree bound
  bool valid = false;
};

// Closed form f_m as a Laurent polynomial in the context's first variable.
RatFun f_closed_form(const Context& ctx, long m);

// Builds and self-checks a certificate. Throws InsufficientProbes when
// probe_count <= deg_bound and Error on d < 1.
RefutationCertificate refute(const Context& ctx, long d, long deg_bound, long probe_count);

// Independent re-verification of an existing certificate.
bool check_certificate(const Context& ctx, const RefutationCertificate& cert);

std::string certificate_to_json(const Context& ctx, const RefutationCertificate& cert);
std::string certificate_summary(const Context& ctx, const RefutationCertificate& cert);

}  // namespace bcinterp

#endif
