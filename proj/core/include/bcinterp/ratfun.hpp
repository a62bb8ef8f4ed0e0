#ifndef BCINTERP_RATFUN_HPP
#define BCINTERP_RATFUN_HPP

#include <vector>

#include "bcinterp/poly.hpp"

namespace bcinterp {

/*
 * Element of the coefficient field: a reduced fraction of sparse Laurent
 * polynomials. Normal form: the denominator is nonzero, has no negative
 * exponents, no monomial factor, integer coefficients with content 1 and a
 * positive leading coefficient. A fraction whose denominator divides the
 * numerator exactly collapses to a polynomial. Equality is decided by
 * cross-multiplication; full multivariate gcd is not performed.
 */
class RatFun {
public:
  RatFun() = default;
  explicit RatFun(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.width(), Rat(1))) {}
  RatFun(Poly num, Poly den);

  static RatFun zero(int width) { return RatFun(Poly::zero(width)); }
  static RatFun one(int width) { return RatFun(Poly::constant(width, Rat(1))); }
  static RatFun constant(int width, const Rat& c) { return RatFun(Poly::constant(width, c)); }
  static RatFun from_term(const Term& t) { return RatFun(Poly::from_term(t)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  int width() const { return num_.width(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator-() const;
  RatFun operator*(const RatFun& o) const;
  RatFun operator/(const RatFun& o) const;
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
  RatFun inverse() const;
  RatFun mul_term(const Term& t) const;

  // a/b == c/d iff a*d - c*b == 0.
  bool eq(const RatFun& o) const;
  bool operator==(const RatFun& o) const { return eq(o); }

  // Identical normal form (used by the serialization round-trip tests).
  bool identical(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }

private:
  void normalize();

  Poly num_;
  Poly den_;
};

// Balanced summation with common-denominator grouping; keeps denominator
// growth under control in long sums of weights sharing denominators.
RatFun ratfun_sum(std::vector<RatFun> parts, int width);

}  // namespace bcinterp

#endif
