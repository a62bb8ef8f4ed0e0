#include "bcinterp/poly.hpp"

#include <algorithm>
#include <unordered_map>

#include "bcinterp/errors.hpp"

namespace bcinterp {

namespace {

__int128 mono_total(const Mono& m) {
  __int128 d = 0;
  for (Int e : m) d += e;
  return d;
}

struct MonoHash {
  std::size_t operator()(const Mono& m) const {
    std::size_t h = 1469598103934665603ull;
    for (Int e : m) {
      h ^= static_cast<std::size_t>(e);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

bool MonoOrderDesc::operator()(const Mono& a, const Mono& b) const {
  __int128 da = mono_total(a), db = mono_total(b);
  if (da != db) return da > db;
  return a > b;
}

Poly Poly::constant(int width, const Rat& c) {
  Poly p(width);
  if (sgn(c) != 0) p.terms_.emplace(Mono(static_cast<std::size_t>(width), 0), c);
  return p;
}

Poly Poly::from_term(const Term& t) {
  Poly p(static_cast<int>(t.mono.size()));
  if (sgn(t.coef) != 0) p.terms_.emplace(t.mono, t.coef);
  return p;
}

Poly Poly::symbol(int width, int sym, Int e) {
  Poly p(width);
  Mono m(static_cast<std::size_t>(width), 0);
  m[static_cast<std::size_t>(sym)] = e;
  p.terms_.emplace(std::move(m), Rat(1));
  return p;
}

bool Poly::is_one() const {
  if (terms_.size() != 1) return false;
  const auto& [m, c] = *terms_.begin();
  return c == 1 && mono_total(m) == 0 && std::all_of(m.begin(), m.end(), [](Int e) { return e == 0; });
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const Mono& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](Int e) { return e == 0; });
}

const std::pair<const Mono, Rat>& Poly::leading() const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  return *terms_.begin();
}

void Poly::add_term(const Mono& mono, const Rat& coef) {
  if (sgn(coef) == 0) return;
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, coef);
    return;
  }
  it->second += coef;
  if (sgn(it->second) == 0) terms_.erase(it);
}

void Poly::add_term(Mono&& mono, Rat&& coef) {
  if (sgn(coef) == 0) return;
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(std::move(mono), std::move(coef));
    return;
  }
  it->second += coef;
  if (sgn(it->second) == 0) terms_.erase(it);
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator-() const {
  Poly r(width_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r(width_);
  if (terms_.empty() || o.terms_.empty()) return r;
  const std::size_t w = static_cast<std::size_t>(width_);
  // Accumulate in a hash map, then bulk-build the ordered map.
  std::unordered_map<Mono, Rat, MonoHash> acc;
  acc.reserve(terms_.size() * 2 + o.terms_.size());
  Mono key(w, 0);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      for (std::size_t i = 0; i < w; ++i) key[i] = checked_add(ma[i], mb[i]);
      auto [it, inserted] = acc.try_emplace(key, Rat());
      if (inserted)
        it->second = ca * cb;
      else
        it->second += ca * cb;
    }
  }
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) r.terms_.emplace(m, std::move(c));
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::mul_term(const Term& t) const {
  Poly r(width_);
  if (sgn(t.coef) == 0) return r;
  const std::size_t w = static_cast<std::size_t>(width_);
  for (const auto& [m, c] : terms_) {
    Mono key(w);
    for (std::size_t i = 0; i < w; ++i) key[i] = checked_add(m[i], t.mono[i]);
    r.terms_.emplace(std::move(key), c * t.coef);
  }
  return r;
}

Poly Poly::mul_scalar(const Rat& c) const {
  Poly r(width_);
  if (sgn(c) == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Poly Poly::pow(long long e) const {
  if (e < 0) throw Error("negative polynomial power");
  Poly acc = Poly::constant(width_, Rat(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = (e >>= 1) > 0 ? base * base : base;
  }
  return acc;
}

Int Poly::max_exp(int sym) const {
  Int best = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Int e = m[static_cast<std::size_t>(sym)];
    if (first || e > best) best = e;
    first = false;
  }
  return best;
}

Int Poly::min_exp(int sym) const {
  Int best = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Int e = m[static_cast<std::size_t>(sym)];
    if (first || e < best) best = e;
    first = false;
  }
  return best;
}

bool Poly::mentions(int sym) const {
  for (const auto& [m, c] : terms_)
    if (m[static_cast<std::size_t>(sym)] != 0) return true;
  return false;
}

long long Poly::term_degree(const Mono& mono, const std::vector<int>& syms) {
  long long d = 0;
  for (int s : syms) d += mono[static_cast<std::size_t>(s)];
  return d;
}

long long Poly::total_degree(const std::vector<int>& syms) const {
  long long best = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    long long d = term_degree(m, syms);
    if (first || d > best) best = d;
    first = false;
  }
  return best;
}

long long Poly::min_total_degree(const std::vector<int>& syms) const {
  long long best = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    long long d = term_degree(m, syms);
    if (first || d < best) best = d;
    first = false;
  }
  return best;
}

Poly Poly::filter(const std::function<bool(const Mono&)>& keep) const {
  Poly r(width_);
  for (const auto& [m, c] : terms_)
    if (keep(m)) r.terms_.emplace(m, c);
  return r;
}

Poly Poly::coefficient_of(int sym, Int e) const {
  Poly r(width_);
  for (const auto& [m, c] : terms_) {
    if (m[static_cast<std::size_t>(sym)] != e) continue;
    Mono key = m;
    key[static_cast<std::size_t>(sym)] = 0;
    r.terms_.emplace(std::move(key), c);
  }
  return r;
}

Poly Poly::coefficient_of_mono(const std::vector<int>& syms, const std::vector<Int>& exps) const {
  Poly r(width_);
  for (const auto& [m, c] : terms_) {
    bool match = true;
    for (std::size_t i = 0; i < syms.size(); ++i)
      if (m[static_cast<std::size_t>(syms[i])] != exps[i]) {
        match = false;
        break;
      }
    if (!match) continue;
    Mono key = m;
    for (int s : syms) key[static_cast<std::size_t>(s)] = 0;
    r.terms_.emplace(std::move(key), c);
  }
  return r;
}

Mono Poly::min_exponents() const {
  Mono m(static_cast<std::size_t>(width_), 0);
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    if (first) {
      m = mono;
      first = false;
    } else {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], mono[i]);
    }
  }
  return m;
}

Poly Poly::shift_exponents(const Mono& delta) const {
  Poly r(width_);
  for (const auto& [m, c] : terms_) {
    Mono key(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) key[i] = checked_add(m[i], delta[i]);
    r.terms_.emplace(std::move(key), c);
  }
  return r;
}

Rat Poly::rational_content() const {
  if (terms_.empty()) return Rat(0);
  mpz_class g = 0, l = 1;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rat r(g, l);
  r.canonicalize();
  return r;
}

std::size_t Poly::hash() const {
  MonoHash mh;
  std::size_t h = terms_.size();
  for (const auto& [m, c] : terms_) {
    h = h * 1000003 + mh(m);
    h = h * 1000003 + std::hash<std::string>()(c.get_str());
  }
  return h;
}

std::optional<Poly> try_divide_exact(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw DivisionByZero();
  if (f.is_zero()) return Poly::zero(f.width());
  const std::size_t w = static_cast<std::size_t>(f.width());
  // Shift both operands to componentwise-minimal exponent 0. If g divides f
  // in the Laurent ring, the shifted quotient is an ordinary polynomial and
  // the standard leading-term division below finds it; a failing monomial
  // step therefore proves non-divisibility.
  Mono mf = f.min_exponents(), mg = g.min_exponents();
  Mono neg_mf(w), neg_mg(w), shift(w);
  for (std::size_t i = 0; i < w; ++i) {
    neg_mf[i] = checked_mul(mf[i], -1);
    neg_mg[i] = checked_mul(mg[i], -1);
    shift[i] = checked_add(mf[i], -mg[i]);
  }
  Poly r = f.shift_exponents(neg_mf);
  Poly gp = g.shift_exponents(neg_mg);
  Poly q(f.width());
  const auto& glead = gp.leading();
  while (!r.is_zero()) {
    const auto& rlead = r.leading();
    Mono qm(w);
    for (std::size_t i = 0; i < w; ++i) {
      qm[i] = checked_add(rlead.first[i], -glead.first[i]);
      if (qm[i] < 0) return std::nullopt;
    }
    Term t{rlead.second / glead.second, qm};
    q.add_term(t.mono, t.coef);
    r -= gp.mul_term(t);
  }
  return q.shift_exponents(shift);
}

}  // namespace bcinterp
