#ifndef BCINTERP_SUBST_HPP
#define BCINTERP_SUBST_HPP

#include <map>
#include <optional>

#include "bcinterp/alphabet.hpp"
#include "bcinterp/poly.hpp"
#include "bcinterp/ratfun.hpp"

namespace bcinterp {

/*
 * A specialization: a simultaneous substitution mapping symbols to
 * replacement monomials in the surviving symbols, or to exact rationals.
 * Targets may not mention a symbol that the same spec replaces (unless
 * that symbol maps to itself), and a zero rational target is only legal
 * on nonnegative exponents. theta records t = q^theta specializations.
 */
class Subst {
public:
  explicit Subst(const Context& ctx) : ctx_(&ctx), width_(ctx.size()) {}

  Subst& set(int sym, const Term& target);
  Subst& set_value(int sym, const Rat& value);
  // Convenience: sym -> coef * prod sym_i^e_i.
  Subst& set_monomial(int sym, const Rat& coef, const std::vector<std::pair<int, Int>>& factors);
  Subst& set_theta(long theta) {
    theta_ = theta;
    return *this;
  }

  const std::map<int, Term>& map() const { return map_; }
  std::optional<long> theta() const { return theta_; }
  int width() const { return width_; }
  bool maps(int sym) const { return map_.count(sym) != 0; }

  // Throws IllFormedSpec when a target mentions a replaced symbol.
  void validate() const;

private:
  const Context* ctx_ = nullptr;
  int width_ = 0;
  std::map<int, Term> map_;
  std::optional<long> theta_;
};

Poly substitute(const Poly& p, const Subst& spec);
RatFun substitute(const RatFun& f, const Subst& spec);

// Composition helper: returns the spec "first, then second" as one
// simultaneous spec (targets of `first` rewritten through `second`).
Subst compose(const Subst& first, const Subst& second);

// Standing genericity assumption: q0^i t0^j s0^k != 1 for all
// 0 <= i,j,k <= bound not all zero, and |q0|, |t0| != 1. Exact.
bool check_generic(const Rat& q0, const Rat& t0, const Rat& s0, long bound);

// Extended form: additionally requires q0^i t0^j a^k != 1 for each extra
// value a (same bound); used when sampling Koornwinder parameters.
bool check_generic(const Rat& q0, const Rat& t0, const Rat& s0, const std::vector<Rat>& extras,
                   long bound);

}  // namespace bcinterp

#endif
