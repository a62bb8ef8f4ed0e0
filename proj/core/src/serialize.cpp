#include "bcinterp/serialize.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

namespace bcinterp {

namespace {

void append_term(std::ostringstream& out, const Mono& mono, const Rat& coef, const Context& ctx,
                 bool first) {
  Rat c = coef;
  if (first) {
    if (sgn(c) < 0) {
      out << "-";
      c = -c;
    }
  } else {
    out << (sgn(c) < 0 ? " - " : " + ");
    if (sgn(c) < 0) c = -c;
  }
  std::vector<std::string> factors;
  for (int i = 0; i < ctx.size(); ++i) {
    Int e = mono[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    if (e == 1)
      factors.push_back(ctx.name(i));
    else
      factors.push_back(ctx.name(i) + "^" + std::to_string(e));
  }
  if (factors.empty()) {
    out << rat_to_string(c);
    return;
  }
  bool printed = false;
  if (c != 1) {
    out << rat_to_string(c);
    printed = true;
  }
  for (const auto& f : factors) {
    if (printed) out << "*";
    out << f;
    printed = true;
  }
}

}  // namespace

std::string to_text(const Poly& p, const Context& ctx) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, coef] : p.terms()) {
    append_term(out, mono, coef, ctx, first);
    first = false;
  }
  return out.str();
}

std::string to_text(const RatFun& f, const Context& ctx) {
  if (f.is_polynomial()) return to_text(f.num(), ctx);
  return "(" + to_text(f.num(), ctx) + ")/(" + to_text(f.den(), ctx) + ")";
}

namespace {

nlohmann::ordered_json poly_to_json(const Poly& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [mono, coef] : p.terms()) {
    nlohmann::ordered_json t;
    t["exp"] = mono;
    t["coef"] = rat_to_string(coef);
    terms.push_back(std::move(t));
  }
  nlohmann::ordered_json obj;
  obj["terms"] = std::move(terms);
  return obj;
}

Poly poly_from_json(const nlohmann::json& obj, const Context& ctx) {
  if (!obj.is_object() || !obj.contains("terms") || !obj["terms"].is_array())
    throw ParseError("expected {\"terms\": [...]}", 0);
  Poly p(ctx.size());
  for (const auto& t : obj["terms"]) {
    if (!t.contains("exp") || !t.contains("coef")) throw ParseError("term needs exp and coef", 0);
    const auto& exp = t["exp"];
    if (!exp.is_array() || static_cast<int>(exp.size()) != ctx.size())
      throw ParseError("exp length does not match the alphabet", 0);
    Mono m(static_cast<std::size_t>(ctx.size()));
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!exp[i].is_number_integer()) throw ParseError("exp entries must be integers", 0);
      m[i] = exp[i].get<Int>();
    }
    auto c = rat_from_string(t["coef"].get<std::string>());
    if (!c) throw ParseError("malformed coefficient " + t["coef"].get<std::string>(), 0);
    p.add_term(std::move(m), std::move(*c));
  }
  return p;
}

}  // namespace

std::string to_json(const RatFun& f, const Context& ctx) {
  nlohmann::ordered_json obj;
  obj["alphabet"] = ctx.symbols();
  obj["num"] = poly_to_json(f.num());
  obj["den"] = poly_to_json(f.den());
  return obj.dump();
}

RatFun parse_json(const std::string& text, const Context& ctx) {
  nlohmann::json obj;
  try {
    obj = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), static_cast<std::size_t>(e.byte));
  }
  if (!obj.contains("alphabet") || obj["alphabet"].get<std::vector<std::string>>() != ctx.symbols())
    throw ParseError("alphabet does not match the computation context", 0);
  Poly num = poly_from_json(obj["num"], ctx);
  Poly den = poly_from_json(obj["den"], ctx);
  return RatFun(std::move(num), std::move(den));
}

/*
 * Recursive-descent expression parser.
 *
 *   expr   := ['-'] term (('+'|'-') term)*
 *   term   := factor (('*'|'/') factor)*
 *   factor := base ['^' ['-'] integer]
 *   base   := integer | symbol | '(' expr ')'
 */
namespace {

class TextParser {
public:
  TextParser(const std::string& text, const Context& ctx) : text_(text), ctx_(ctx) {}

  RatFun parse() {
    skip_ws();
    RatFun v = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    return v;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  RatFun parse_expr() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    RatFun acc = parse_term();
    if (neg) acc = -acc;
    while (true) {
      if (eat('+'))
        acc += parse_term();
      else if (eat('-'))
        acc -= parse_term();
      else
        return acc;
    }
  }

  RatFun parse_term() {
    RatFun acc = parse_factor();
    while (true) {
      if (eat('*'))
        acc *= parse_factor();
      else if (eat('/')) {
        RatFun d = parse_factor();
        if (d.is_zero()) throw ParseError("division by zero", pos_);
        acc /= d;
      } else
        return acc;
    }
  }

  RatFun parse_factor() {
    RatFun base = parse_base();
    if (eat('^')) {
      bool neg = eat('-');
      long long e = parse_integer();
      if (neg) e = -e;
      if (e >= 0) {
        if (base.is_polynomial()) return RatFun(base.num().pow(e));
        RatFun acc = RatFun::one(ctx_.size());
        for (long long i = 0; i < e; ++i) acc *= base;
        return acc;
      }
      if (base.is_zero()) throw ParseError("negative power of zero", pos_);
      RatFun inv = base.inverse();
      RatFun acc = RatFun::one(ctx_.size());
      for (long long i = 0; i < -e; ++i) acc *= inv;
      return acc;
    }
    return base;
  }

  long long parse_integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected an integer", pos_);
    try {
      return std::stoll(text_.substr(start, pos_ - start));
    } catch (const std::out_of_range&) {
      throw ParseError("integer out of range", start);
    }
  }

  RatFun parse_base() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RatFun v = parse_expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      // Arbitrary-precision integer literal.
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      auto n = rat_from_string(text_.substr(start, pos_ - start));
      if (!n) throw ParseError("malformed integer", start);
      return RatFun::constant(ctx_.size(), *n);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      auto id = ctx_.find(name);
      if (!id) throw ParseError("unknown symbol '" + name + "'", start);
      return RatFun(Poly::symbol(ctx_.size(), *id));
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  const std::string& text_;
  const Context& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFun parse_text(const std::string& text, const Context& ctx) {
  return TextParser(text, ctx).parse();
}

}  // namespace bcinterp
