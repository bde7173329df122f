#include "stairflow/field_text.hpp"

#include "stairflow/errors.hpp"

#include <cctype>

namespace stairflow {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
  }

  bool done() const { return pos_ == text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("cannot parse '" + text_ + "': " + what + " at position " + std::to_string(pos_));
  }

  Integer digits() {
    size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a digit");
    return Integer(text_.substr(start, pos_ - start));
  }

  Rational rational() {
    Integer num = digits();
    Integer den = 1;
    if (accept('/')) {
      den = digits();
      if (den == 0) fail("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  // ('^' uint)? after an `x`
  unsigned power() {
    if (!accept('^')) return 1;
    Integer e = digits();
    if (e > 4096) fail("exponent too large");
    return static_cast<unsigned>(e.get_ui());
  }

  // One term with its sign already consumed; adds into coords.
  void term(const Rational& sign, std::vector<Rational>& coords) {
    Rational coefficient = 1;
    unsigned exponent = 0;
    if (accept('x')) {
      exponent = power();
    } else {
      coefficient = rational();
      bool star = accept('*');
      if (accept('x')) {
        exponent = power();
      } else if (star) {
        fail("expected 'x' after '*'");
      }
    }
    if (coords.size() <= exponent) coords.resize(exponent + 1, Rational(0));
    coords[exponent] += sign * coefficient;
  }

  std::vector<Rational> expression() {
    std::vector<Rational> coords;
    if (done()) fail("empty expression");
    Rational sign = accept('-') ? -1 : 1;
    if (sign == 1) accept('+');
    term(sign, coords);
    while (!done()) {
      if (accept('+')) {
        term(1, coords);
      } else if (accept('-')) {
        term(-1, coords);
      } else {
        fail("unexpected character");
      }
    }
    return coords;
  }

 private:
  std::string text_;
  size_t pos_ = 0;
};

}  // namespace

FieldElement parse_field_element(const FieldContext& context, std::string_view text) {
  Parser p(text);
  return FieldElement::from_coords(context, p.expression());
}

std::string format_field_element(const FieldElement& a) {
  std::string out;
  const auto& cs = a.coords();
  for (size_t k = cs.size(); k-- > 0;) {
    const Rational& c = cs[k];
    if (c == 0) continue;
    std::string term;
    if (k == 0) {
      term = c.get_str();
    } else {
      if (c == -1) {
        term = "-";
      } else if (c != 1) {
        term = c.get_str() + "*";
      }
      term += "x";
      if (k > 1) term += "^" + std::to_string(k);
    }
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

Rational parse_rational(std::string_view text) {
  Parser p(text);
  Rational sign = p.accept('-') ? -1 : 1;
  if (sign == 1) p.accept('+');
  Rational q = p.rational();
  if (!p.done()) p.fail("trailing characters");
  return sign * q;
}

std::pair<Rational, Rational> parse_rational_pair(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw InputError("expected 'a,b', got '" + std::string(text) + "'");
  return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

}  // namespace stairflow
