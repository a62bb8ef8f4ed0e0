#ifndef BCINTERP_ALPHABET_HPP
#define BCINTERP_ALPHABET_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bcinterp/errors.hpp"
#include "bcinterp/rational.hpp"

namespace bcinterp {

using Int = std::int64_t;

// Exponent vector, one signed 64-bit entry per alphabet symbol.
using Mono = std::vector<Int>;

// A single monomial with coefficient, the target type of all substitutions.
struct Term {
  Rat coef;
  Mono mono;

  bool is_constant() const {
    for (Int e : mono)
      if (e != 0) return false;
    return true;
  }
};

Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

/*
 * A computation context fixes the symbol alphabet for one computation:
 * base generators first (qh = q^(1/2), th = t^(1/2), s, r1..r4 = square
 * roots of the Koornwinder parameters a1..a4), then variables x1..xnx,
 * y1..yny, then the optional expansion symbol u and any extra symbols.
 * Symbol order is fixed per context and is the serialization order.
 *
 * q := qh^2, t := th^2 and a_i := r_i^2 are derived notations only; they
 * are never independent symbols, so every substitution on the base
 * symbols automatically preserves the square relations.
 *
 * Generators may carry numeric bindings: a full value, a value for the
 * square only (q = v with qh left irrational; odd qh-powers then fail),
 * or a monomial in other generators (t = q^theta specializations).
 * gen_term() resolves bindings, so formula-level code has a single path
 * for symbolic and specialized computations.
 */
class Context {
public:
  struct Options {
    int nx = 0;
    int ny = 0;
    bool with_u = false;
    std::vector<std::string> extra;
  };

  explicit Context(const Options& options);
  Context(int nx, int ny = 0) : Context(Options{nx, ny, false, {}}) {}

  int size() const { return static_cast<int>(symbols_.size()); }
  const std::string& name(int id) const { return symbols_[static_cast<std::size_t>(id)]; }
  const std::vector<std::string>& symbols() const { return symbols_; }
  int id(const std::string& name) const;
  std::optional<int> find(const std::string& name) const;

  int qh() const { return 0; }
  int th() const { return 1; }
  int s() const { return 2; }
  int r(int i) const { return 3 + i; }  // i = 0..3
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int x(int i) const { return 7 + i; }        // i = 0..nx-1
  int y(int i) const { return 7 + nx_ + i; }  // i = 0..ny-1
  bool has_u() const { return u_ >= 0; }
  int u() const;
  int extra(int i) const { return first_extra_ + i; }
  int num_generators() const { return 7; }

  bool is_x(int id) const { return id >= 7 && id < 7 + nx_; }
  bool is_y(int id) const { return id >= 7 + nx_ && id < 7 + nx_ + ny_; }
  bool is_variable(int id) const { return is_x(id) || is_y(id); }

  // Numeric and monomial bindings on generators.
  void bind_value(int sym, const Rat& value);
  void bind_square_value(int sym, const Rat& value);  // binds sym^2 only
  void bind_monomial(int sym, const Term& target);
  bool is_bound(int sym) const { return bindings_[static_cast<std::size_t>(sym)].kind != Binding::None; }
  bool fully_numeric_generators() const;

  // sym^e resolved through bindings; the result mentions unbound symbols only.
  Term gen_term(int sym, Int e = 1) const;
  Term term_pow(const Term& t, Int e) const;
  Term term_mul(const Term& a, const Term& b) const;
  Term unit_term() const { return Term{Rat(1), Mono(static_cast<std::size_t>(size()), 0)}; }
  Mono zero_mono() const { return Mono(static_cast<std::size_t>(size()), 0); }

  bool same_alphabet(const Context& other) const { return symbols_ == other.symbols_; }

private:
  struct Binding {
    enum Kind { None, Value, SquareValue, Monomial } kind = None;
    Rat value;
    Term target;
  };

  Term gen_term_depth(int sym, Int e, int depth) const;

  std::vector<std::string> symbols_;
  std::map<std::string, int> index_;
  std::vector<Binding> bindings_;
  int nx_ = 0;
  int ny_ = 0;
  int u_ = -1;
  int first_extra_ = 0;
};

}  // namespace bcinterp

#endif
