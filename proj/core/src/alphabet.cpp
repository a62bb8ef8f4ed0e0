#include "bcinterp/alphabet.hpp"

#include <limits>

namespace bcinterp {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw ExponentOverflow();
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw ExponentOverflow();
  return r;
}

Context::Context(const Options& options) {
  symbols_ = {"qh", "th", "s", "r1", "r2", "r3", "r4"};
  nx_ = options.nx;
  ny_ = options.ny;
  for (int i = 1; i <= nx_; ++i) symbols_.push_back("x" + std::to_string(i));
  for (int i = 1; i <= ny_; ++i) symbols_.push_back("y" + std::to_string(i));
  if (options.with_u) {
    u_ = static_cast<int>(symbols_.size());
    symbols_.push_back("u");
  }
  first_extra_ = static_cast<int>(symbols_.size());
  for (const auto& name : options.extra) symbols_.push_back(name);
  for (int i = 0; i < size(); ++i) index_.emplace(symbols_[static_cast<std::size_t>(i)], i);
  if (index_.size() != symbols_.size()) throw Error("duplicate symbol in alphabet");
  bindings_.resize(symbols_.size());
}

int Context::id(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw Error("unknown symbol: " + name);
  return it->second;
}

std::optional<int> Context::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Context::u() const {
  if (u_ < 0) throw Error("context has no u symbol");
  return u_;
}

void Context::bind_value(int sym, const Rat& value) {
  if (is_variable(sym)) throw IllFormedSpec("cannot bind a variable at context level");
  if (sgn(value) == 0) throw IllFormedSpec("generator bound to zero");
  auto& b = bindings_[static_cast<std::size_t>(sym)];
  b.kind = Binding::Value;
  b.value = value;
}

void Context::bind_square_value(int sym, const Rat& value) {
  if (sym != qh() && sym != th()) throw IllFormedSpec("square-level binding is only for qh/th");
  if (sgn(value) == 0) throw IllFormedSpec("generator square bound to zero");
  auto root = rat_sqrt(value);
  auto& b = bindings_[static_cast<std::size_t>(sym)];
  if (root) {
    b.kind = Binding::Value;
    b.value = *root;
  } else {
    b.kind = Binding::SquareValue;
    b.value = value;
  }
}

void Context::bind_monomial(int sym, const Term& target) {
  if (is_variable(sym)) throw IllFormedSpec("cannot bind a variable at context level");
  if (sgn(target.coef) == 0) throw IllFormedSpec("generator bound to zero monomial");
  if (target.mono[static_cast<std::size_t>(sym)] != 0)
    throw IllFormedSpec("monomial binding target mentions the bound symbol");
  auto& b = bindings_[static_cast<std::size_t>(sym)];
  b.kind = Binding::Monomial;
  b.target = target;
}

bool Context::fully_numeric_generators() const {
  for (int g = 0; g < num_generators(); ++g) {
    const auto& b = bindings_[static_cast<std::size_t>(g)];
    if (b.kind == Binding::None || b.kind == Binding::Monomial) return false;
  }
  return true;
}

Term Context::term_mul(const Term& a, const Term& b) const {
  Term r;
  r.coef = a.coef * b.coef;
  r.mono.resize(a.mono.size());
  for (std::size_t i = 0; i < a.mono.size(); ++i) r.mono[i] = checked_add(a.mono[i], b.mono[i]);
  return r;
}

Term Context::term_pow(const Term& t, Int e) const {
  Term r = unit_term();
  if (e == 0) return r;
  if (sgn(t.coef) == 0) {
    if (e < 0) throw IllFormedSpec("negative power of a zero value");
    r.coef = 0;
    return r;
  }
  r.coef = rat_pow(t.coef, e);
  for (std::size_t i = 0; i < r.mono.size(); ++i) r.mono[i] = checked_mul(t.mono[i], e);
  return r;
}

Term Context::gen_term(int sym, Int e) const { return gen_term_depth(sym, e, 0); }

Term Context::gen_term_depth(int sym, Int e, int depth) const {
  if (depth > size()) throw IllFormedSpec("cyclic generator bindings");
  Term r = unit_term();
  if (e == 0) return r;
  const auto& b = bindings_[static_cast<std::size_t>(sym)];
  switch (b.kind) {
    case Binding::None:
      r.mono[static_cast<std::size_t>(sym)] = e;
      return r;
    case Binding::Value:
      r.coef = rat_pow(b.value, e);
      return r;
    case Binding::SquareValue:
      if (e % 2 != 0)
        throw IllFormedSpec("odd power of " + name(sym) + " under a square-level binding");
      r.coef = rat_pow(b.value, e / 2);
      return r;
    case Binding::Monomial: {
      // Resolve recursively so chains like s -> s*th, th -> qh^3 compose.
      Term acc = unit_term();
      acc.coef = rat_pow(b.target.coef, e);
      for (int j = 0; j < size(); ++j) {
        Int ej = b.target.mono[static_cast<std::size_t>(j)];
        if (ej == 0) continue;
        acc = term_mul(acc, gen_term_depth(j, checked_mul(ej, e), depth + 1));
      }
      return acc;
    }
  }
  return r;
}

}  // namespace bcinterp
