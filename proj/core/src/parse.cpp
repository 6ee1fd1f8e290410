#include "belyi/parse.hpp"

#include <cctype>
#include <limits>

namespace belyi {

namespace {

// Recursive descent over
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' digits)?
//   atom   := number | 'x' | 'g' | '(' expr ')'
// evaluated directly in K[x].
class Parser {
 public:
  Parser(std::string_view text, FieldPtr field, bool allow_x, bool allow_g, char var)
      : field_(std::move(field)), allow_x_(allow_x), allow_g_(allow_g), var_(var) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
  }

  KPoly run() {
    if (s_.empty()) throw ParseError("empty expression");
    KPoly v = expr();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse \"" + s_ + "\" at position " + std::to_string(pos_) + ": " + what);
  }

  bool eat(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  KPoly constant(const Rational& q) const { return KPoly::constant(field_->from_rational(q)); }

  KPoly expr() {
    KPoly v = term();
    for (;;) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  KPoly term() {
    KPoly v = unary();
    for (;;) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        KPoly d = unary();
        if (d.is_zero()) fail("division by zero");
        if (d.degree() > 0) fail("division by a non-constant polynomial");
        v = v * d.lc().inverse();
      } else {
        return v;
      }
    }
  }

  KPoly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  KPoly power() {
    KPoly base = atom();
    if (!eat('^')) return base;
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer exponent");
    if (pos_ - start > 6) fail("exponent too large");
    unsigned long e = std::stoul(s_.substr(start, pos_ - start));
    if (base.is_zero()) return e == 0 ? constant(Rational(1)) : base;
    return base.pow(e);
  }

  KPoly atom() {
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      KPoly v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return constant(Rational(Integer(s_.substr(start, pos_ - start), 10)));
    }
    if (c == var_ && allow_x_) {
      ++pos_;
      return KPoly::variable(field_);
    }
    if (c == 'g' && allow_g_) {
      ++pos_;
      return KPoly::constant(field_->generator());
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
  FieldPtr field_;
  bool allow_x_;
  bool allow_g_;
  char var_;
};

std::vector<std::string> split_commas(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

QPoly parse_qpoly(std::string_view text, char var) {
  if (var == 'g') throw ParseError("'g' is reserved for the field generator");
  return lower(Parser(text, NumberField::rationals(), true, false, var).run());
}

Element parse_element(std::string_view text, const FieldPtr& field) {
  KPoly p = Parser(text, field, false, true, 'x').run();
  return p.is_zero() ? field->zero() : p.lc();
}

KPoly parse_kpoly(std::string_view text, const FieldPtr& field) {
  return Parser(text, field, true, true, 'x').run();
}

std::vector<long> parse_int_list(std::string_view text) {
  std::vector<long> out;
  for (const auto& part : split_commas(text)) {
    if (part.empty()) throw ParseError("empty entry in integer list \"" + std::string(text) + "\"");
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(part, &used);
    } catch (const std::exception&) {
      throw ParseError("not an integer: \"" + part + "\"");
    }
    if (used != part.size()) throw ParseError("not an integer: \"" + part + "\"");
    out.push_back(v);
  }
  return out;
}

std::vector<ParsedPoint> parse_point_list(std::string_view text) {
  std::vector<ParsedPoint> out;
  for (const auto& part : split_commas(text)) {
    if (part == "inf" || part == "oo" || part == "infinity") {
      out.push_back({true, Rational(0)});
      continue;
    }
    try {
      out.push_back({false, parse_rational(part)});
    } catch (const std::invalid_argument&) {
      throw ParseError("not a rational or inf: \"" + part + "\"");
    }
  }
  return out;
}

}  // namespace belyi
