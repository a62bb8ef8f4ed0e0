#include "bcinterp/rational.hpp"

#include <cstdlib>

namespace bcinterp {

std::optional<Rat> rat_from_string(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::string body = text;
  // mpq accepts "p/q" directly but tolerates some junk; pre-validate.
  std::size_t slash = body.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!valid_int(body)) return std::nullopt;
  } else {
    if (!valid_int(body.substr(0, slash)) || !valid_int(body.substr(slash + 1))) return std::nullopt;
    if (body.substr(slash + 1).find('-') != std::string::npos) return std::nullopt;
  }
  Rat r;
  if (r.set_str(body, 10) != 0) return std::nullopt;
  if (slash != std::string::npos && r.get_den() == 0) return std::nullopt;
  r.canonicalize();
  return r;
}

std::optional<Rat> rat_sqrt(const Rat& value) {
  if (sgn(value) < 0) return std::nullopt;
  if (sgn(value) == 0) return Rat(0);
  mpz_class num = value.get_num(), den = value.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rat r(rn, rd);
  r.canonicalize();
  return r;
}

Rat rat_pow(const Rat& base, long long exp) {
  if (exp == 0) return Rat(1);
  bool inv = exp < 0;
  unsigned long long e = inv ? static_cast<unsigned long long>(-(exp + 1)) + 1ULL
                             : static_cast<unsigned long long>(exp);
  Rat acc(1), b = base;
  while (e > 0) {
    if (e & 1ULL) acc *= b;
    b *= b;
    e >>= 1;
  }
  if (inv) {
    Rat one(1);
    acc = one / acc;  // base != 0 is the caller's precondition
  }
  return acc;
}

}  // namespace bcinterp
