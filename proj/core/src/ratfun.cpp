#include "bcinterp/ratfun.hpp"

#include <algorithm>
#include <map>

#include "bcinterp/errors.hpp"

namespace bcinterp {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void RatFun::normalize() {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.width(), Rat(1));
    return;
  }
  // Move the denominator's monomial content into the numerator, so the
  // denominator has no negative exponents and no monomial factor. Pure
  // s- or x-powers downstairs would break the grading extractors.
  Mono m = den_.min_exponents();
  bool shift = std::any_of(m.begin(), m.end(), [](Int e) { return e != 0; });
  if (shift) {
    Mono neg(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) neg[i] = checked_mul(m[i], -1);
    den_ = den_.shift_exponents(neg);
    num_ = num_.shift_exponents(neg);
  }
  if (!den_.is_constant()) {
    if (auto q = try_divide_exact(num_, den_)) {
      num_ = std::move(*q);
      den_ = Poly::constant(num_.width(), Rat(1));
      return;
    }
  }
  // Scale so the denominator is integer with content 1 and a positive
  // leading coefficient.
  Rat c = den_.rational_content();
  if (den_.leading().second < 0) c = -c;
  if (c != 1) {
    Rat inv = Rat(1) / c;
    num_ = num_.mul_scalar(inv);
    den_ = den_.mul_scalar(inv);
  }
}

RatFun RatFun::operator+(const RatFun& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return RatFun(num_ + o.num_, den_);
  return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return RatFun(num_ - o.num_, den_);
  return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun RatFun::operator*(const RatFun& o) const {
  if (is_zero() || o.is_zero()) return RatFun::zero(width());
  return RatFun(num_ * o.num_, den_ * o.den_);
}

RatFun RatFun::operator/(const RatFun& o) const {
  if (o.is_zero()) throw DivisionByZero();
  return RatFun(num_ * o.den_, den_ * o.num_);
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return RatFun(den_, num_);
}

RatFun RatFun::mul_term(const Term& t) const {
  if (sgn(t.coef) == 0) return RatFun::zero(width());
  return RatFun(num_.mul_term(t), den_);
}

bool RatFun::eq(const RatFun& o) const { return (num_ * o.den_ - o.num_ * den_).is_zero(); }

RatFun ratfun_sum(std::vector<RatFun> parts, int width) {
  if (parts.empty()) return RatFun::zero(width);
  // Group summands sharing a denominator, then fold. Weights produced by
  // the tableau sums repeat denominators heavily.
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < parts.size(); ++i) groups[parts[i].den().hash()].push_back(i);
  std::vector<RatFun> folded;
  for (auto& [h, idx] : groups) {
    Poly acc_num = parts[idx[0]].num();
    const Poly& den = parts[idx[0]].den();
    std::vector<std::size_t> strays;
    for (std::size_t k = 1; k < idx.size(); ++k) {
      if (parts[idx[k]].den() == den)
        acc_num += parts[idx[k]].num();
      else
        strays.push_back(idx[k]);
    }
    folded.emplace_back(acc_num, den);
    for (std::size_t i : strays) folded.push_back(std::move(parts[i]));
  }
  while (folded.size() > 1) {
    std::vector<RatFun> next;
    for (std::size_t i = 0; i + 1 < folded.size(); i += 2) next.push_back(folded[i] + folded[i + 1]);
    if (folded.size() % 2 == 1) next.push_back(std::move(folded.back()));
    folded = std::move(next);
  }
  return folded[0];
}

}  // namespace bcinterp
