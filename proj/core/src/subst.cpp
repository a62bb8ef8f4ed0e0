#include "bcinterp/subst.hpp"

#include <algorithm>
#include <set>

namespace bcinterp {

namespace {

bool is_identity_target(int sym, const Term& t) {
  if (t.coef != 1) return false;
  for (std::size_t i = 0; i < t.mono.size(); ++i) {
    Int want = (static_cast<int>(i) == sym) ? 1 : 0;
    if (t.mono[i] != want) return false;
  }
  return true;
}

}  // namespace

Subst& Subst::set(int sym, const Term& target) {
  if (static_cast<int>(target.mono.size()) != width_) throw IllFormedSpec("target width mismatch");
  // A bound generator never occurs in any polynomial of this context, so a
  // substitution on it could only be a silent no-op; reject it instead.
  if (ctx_ && ctx_->is_bound(sym))
    throw IllFormedSpec("symbol " + ctx_->name(sym) + " is bound in this context");
  if (sgn(target.coef) == 0) {
    for (Int e : target.mono)
      if (e != 0) throw IllFormedSpec("zero target with nonempty monomial");
  }
  map_[sym] = target;
  return *this;
}

Subst& Subst::set_value(int sym, const Rat& value) {
  Term t{value, Mono(static_cast<std::size_t>(width_), 0)};
  return set(sym, t);
}

Subst& Subst::set_monomial(int sym, const Rat& coef, const std::vector<std::pair<int, Int>>& factors) {
  Term t{coef, Mono(static_cast<std::size_t>(width_), 0)};
  for (const auto& [fs, fe] : factors)
    t.mono[static_cast<std::size_t>(fs)] = checked_add(t.mono[static_cast<std::size_t>(fs)], fe);
  return set(sym, t);
}

void Subst::validate() const {
  // A target may mention itself (s -> s*q) or a symbol that the same spec
  // merely relabels, possibly dressed with unreplaced symbols (the starred
  // swaps x_i -> x_{i+1} t^{-1}, x_{i+1} -> x_i t, or qh <-> th).
  // Mentioning a symbol the spec specializes away is ill-formed: the
  // substitution is simultaneous, so the reference would stay unresolved.
  auto is_relabeling = [this](const Term& t) {
    int replaced_mentions = 0;
    for (std::size_t k = 0; k < t.mono.size(); ++k) {
      if (t.mono[k] == 0 || map_.count(static_cast<int>(k)) == 0) continue;
      if (t.mono[k] != 1 && t.mono[k] != -1) return false;
      ++replaced_mentions;
    }
    return replaced_mentions == 1;
  };
  for (const auto& [sym, target] : map_) {
    for (std::size_t j = 0; j < target.mono.size(); ++j) {
      if (target.mono[j] == 0 || static_cast<int>(j) == sym) continue;
      auto it = map_.find(static_cast<int>(j));
      if (it == map_.end()) continue;
      if (is_identity_target(static_cast<int>(j), it->second)) continue;
      if (!is_relabeling(it->second))
        throw IllFormedSpec("target of symbol " + std::to_string(sym) +
                            " mentions replaced symbol " + std::to_string(j));
    }
  }
}

Poly substitute(const Poly& p, const Subst& spec) {
  spec.validate();
  const std::size_t w = static_cast<std::size_t>(p.width());
  Poly out(p.width());
  for (const auto& [mono, coef] : p.terms()) {
    Rat c = coef;
    Mono m(w, 0);
    bool dead = false;
    for (std::size_t i = 0; i < w && !dead; ++i) {
      Int e = mono[i];
      if (e == 0) continue;
      auto it = spec.map().find(static_cast<int>(i));
      if (it == spec.map().end()) {
        m[i] = checked_add(m[i], e);
        continue;
      }
      const Term& t = it->second;
      if (sgn(t.coef) == 0) {
        if (e < 0) throw IllFormedSpec("negative exponent on a symbol specialized to zero");
        dead = true;
        break;
      }
      c *= rat_pow(t.coef, e);
      for (std::size_t j = 0; j < w; ++j)
        if (t.mono[j] != 0) m[j] = checked_add(m[j], checked_mul(t.mono[j], e));
    }
    if (!dead) out.add_term(std::move(m), std::move(c));
  }
  return out;
}

RatFun substitute(const RatFun& f, const Subst& spec) {
  Poly den = substitute(f.den(), spec);
  if (den.is_zero()) throw DivisionByZero();
  return RatFun(substitute(f.num(), spec), std::move(den));
}

Subst compose(const Subst& first, const Subst& second) {
  // Apply `second` to each target of `first`; symbols untouched by `first`
  // inherit `second`'s mapping.
  Subst out = second;
  for (const auto& [sym, target] : first.map()) {
    Poly p = substitute(Poly::from_term(target), second);
    if (p.is_zero()) {
      Term t{Rat(0), Mono(static_cast<std::size_t>(first.width()), 0)};
      out.set(sym, t);
    } else {
      if (p.term_count() != 1) throw IllFormedSpec("composition target is not a monomial");
      const auto& [m, c] = *p.terms().begin();
      out.set(sym, Term{c, m});
    }
  }
  if (first.theta())
    out.set_theta(*first.theta());
  else if (second.theta())
    out.set_theta(*second.theta());
  return out;
}

bool check_generic(const Rat& q0, const Rat& t0, const Rat& s0, long bound) {
  return check_generic(q0, t0, s0, std::vector<Rat>{}, bound);
}

bool check_generic(const Rat& q0, const Rat& t0, const Rat& s0, const std::vector<Rat>& extras,
                   long bound) {
  if (sgn(q0) == 0 || sgn(t0) == 0 || sgn(s0) == 0) return false;
  if (abs(q0) == 1 || abs(t0) == 1) return false;
  for (const Rat& a : extras)
    if (sgn(a) == 0) return false;

  auto third_ok = [&](const Rat& s) {
    // q^i t^j s^k == 1 iff s^k == (q^i t^j)^-1; collect the s-powers once
    // and look each inverse up, instead of the cubic scan.
    std::set<Rat> spowers;
    Rat sp(1);
    for (long k = 1; k <= bound; ++k) {
      sp *= s;
      spowers.insert(sp);
    }
    Rat qp(1);
    for (long i = 0; i <= bound; ++i) {
      Rat qt = qp;
      for (long j = 0; j <= bound; ++j) {
        if ((i != 0 || j != 0) && qt == 1) return false;  // k = 0
        if (spowers.count(Rat(1) / qt) != 0) return false;
        qt *= t0;
      }
      qp *= q0;
    }
    return true;
  };

  if (!third_ok(s0)) return false;
  for (const Rat& a : extras)
    if (!third_ok(a)) return false;
  return true;
}

}  // namespace bcinterp
