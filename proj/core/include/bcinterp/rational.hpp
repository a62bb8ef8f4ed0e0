#ifndef BCINTERP_RATIONAL_HPP
#define BCINTERP_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace bcinterp {

// Exact rational coefficients. GMP keeps mpq_class values canonicalized
// (reduced, positive denominator), which the normal forms below rely on.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

// Accepts "p", "-p", "p/q"; returns nothing on malformed text.
std::optional<Rat> rat_from_string(const std::string& text);

// Exact square root when the argument is a perfect rational square.
std::optional<Rat> rat_sqrt(const Rat& value);

// r^e for signed e; requires r != 0 when e < 0.
Rat rat_pow(const Rat& base, long long exp);

}  // namespace bcinterp

#endif
