#ifndef BCINTERP_POLY_HPP
#define BCINTERP_POLY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bcinterp/alphabet.hpp"
#include "bcinterp/rational.hpp"

namespace bcinterp {

// Canonical monomial order: graded-lexicographic, largest first, so map
// iteration starts at the leading term. Total degree sums the full signed
// exponent vector.
struct MonoOrderDesc {
  bool operator()(const Mono& a, const Mono& b) const;
};

/*
 * Sparse Laurent polynomial over Q in a fixed alphabet. No stored
 * coefficient is zero; the zero polynomial is the empty map. All
 * arithmetic merges exponent vectors exactly and aborts on 64-bit
 * exponent overflow.
 */
class Poly {
public:
  using Terms = std::map<Mono, Rat, MonoOrderDesc>;

  Poly() = default;
  explicit Poly(int width) : width_(width) {}

  static Poly zero(int width) { return Poly(width); }
  static Poly constant(int width, const Rat& c);
  static Poly from_term(const Term& t);
  static Poly symbol(int width, int sym, Int e = 1);

  int width() const { return width_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  // Leading term in the canonical order; polynomial must be nonzero.
  const std::pair<const Mono, Rat>& leading() const;

  void add_term(const Mono& mono, const Rat& coef);
  void add_term(Mono&& mono, Rat&& coef);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly& operator*=(const Poly& o);
  Poly mul_term(const Term& t) const;  // multiply by coef * monomial
  Poly mul_scalar(const Rat& c) const;
  Poly pow(long long e) const;  // e >= 0

  bool operator==(const Poly& o) const { return width_ == o.width_ && terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Exponent bookkeeping.
  Int max_exp(int sym) const;  // 0 for the zero polynomial
  Int min_exp(int sym) const;
  bool mentions(int sym) const;
  long long total_degree(const std::vector<int>& syms) const;  // max over terms
  long long min_total_degree(const std::vector<int>& syms) const;
  static long long term_degree(const Mono& mono, const std::vector<int>& syms);

  // Sub-sum of the terms satisfying a predicate on the exponent vector.
  Poly filter(const std::function<bool(const Mono&)>& keep) const;
  Poly coefficient_of(int sym, Int e) const;          // terms with exact exponent, symbol zeroed
  Poly coefficient_of_mono(const std::vector<int>& syms, const std::vector<Int>& exps) const;

  // Componentwise minimum of all exponent vectors (zero mono if empty).
  Mono min_exponents() const;
  Poly shift_exponents(const Mono& delta) const;  // multiply by the monomial delta

  // gcd of coefficient numerators over lcm of denominators; positive; 0 for 0.
  Rat rational_content() const;

  std::size_t hash() const;

private:
  int width_ = 0;
  Terms terms_;
};

// Exact quotient f / g when it exists (monomial-order long division with
// zero remainder); nullopt otherwise. g must be nonzero.
std::optional<Poly> try_divide_exact(const Poly& f, const Poly& g);

}  // namespace bcinterp

#endif
