#ifndef BCINTERP_SERIALIZE_HPP
#define BCINTERP_SERIALIZE_HPP

#include <string>

#include "bcinterp/alphabet.hpp"
#include "bcinterp/ratfun.hpp"

namespace bcinterp {

/*
 * Canonical text: monomials in the canonical graded-lex order, leading
 * term first, symbols in alphabet order, e.g. "x1 - 1 - s^-2 + s^-2*x1^-1".
 * A non-polynomial fraction prints as "(num)/(den)". This byte layout,
 * and the JSON layout below, are the golden-file formats.
 */
std::string to_text(const Poly& p, const Context& ctx);
std::string to_text(const RatFun& f, const Context& ctx);

/*
 * JSON: {"alphabet":[...],"num":{"terms":[{"exp":[...],"coef":"p/q"},...]},
 *        "den":{...}} with terms in canonical order and coefficients as
 * decimal strings.
 */
std::string to_json(const RatFun& f, const Context& ctx);

// Expression parser: +, -, *, /, ^ with integer exponents, parentheses,
// integers and alphabet symbols. Round-trips both formats above.
// Throws ParseError with a byte position on malformed input.
RatFun parse_text(const std::string& text, const Context& ctx);

// Parses the JSON layout; the alphabet must match the context.
RatFun parse_json(const std::string& text, const Context& ctx);

}  // namespace bcinterp

#endif
