#include "qalg/polytext.hpp"

#include <cctype>
#include <map>
#include <vector>

namespace qalg {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  Poly<Rational> parse() {
    skip_ws();
    Poly<Rational> result =
        peek() == '[' ? parse_list() : parse_expression();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(pos_, expected);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  char take() { return text_[pos_++]; }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_digit() const {
    return std::isdigit(static_cast<unsigned char>(peek())) != 0;
  }

  bool at_var() const { return peek() == 'x' || peek() == 'X'; }

  BigInt parse_nat() {
    if (!at_digit()) fail("expected a number");
    std::string digits;
    while (at_digit()) digits.push_back(take());
    return BigInt(digits);
  }

  // nat ('/' nat)?, sign handled by the caller.
  Rational parse_coef() {
    BigInt num = parse_nat();
    skip_ws();
    if (peek() == '/') {
      std::size_t slash = pos_;
      take();
      skip_ws();
      if (!at_digit()) fail("expected denominator after '/'");
      BigInt den = parse_nat();
      if (den == 0) throw ParseError(slash, "zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }

  std::size_t parse_exponent() {
    take();  // '^'
    skip_ws();
    if (!at_digit()) fail("expected exponent after '^'");
    std::size_t at = pos_;
    BigInt e = parse_nat();
    if (e > 4096) throw ParseError(at, "exponent too large");
    return static_cast<std::size_t>(e.get_ui());
  }

  // coef ('*'? var ('^' nat)?)? | var ('^' nat)?
  void parse_term(bool negative, std::map<std::size_t, Rational>& acc) {
    Rational coef(1);
    std::size_t degree = 0;
    if (at_digit()) {
      coef = parse_coef();
      skip_ws();
      bool saw_star = false;
      if (peek() == '*') {
        take();
        skip_ws();
        saw_star = true;
      }
      if (at_var()) {
        take();
        skip_ws();
        degree = peek() == '^' ? parse_exponent() : 1;
      } else if (saw_star) {
        fail("expected variable after '*'");
      }
    } else if (at_var()) {
      take();
      skip_ws();
      degree = peek() == '^' ? parse_exponent() : 1;
    } else {
      fail("expected coefficient or variable");
    }
    Rational signed_coef = negative ? -coef : coef;
    auto it = acc.find(degree);
    if (it == acc.end()) {
      acc.emplace(degree, signed_coef);
    } else {
      it->second += signed_coef;
    }
  }

  Poly<Rational> parse_expression() {
    std::map<std::size_t, Rational> acc;
    skip_ws();
    bool negative = false;
    if (peek() == '-') {  // unary minus at the head only
      take();
      skip_ws();
      negative = true;
    }
    parse_term(negative, acc);
    skip_ws();
    while (peek() == '+' || peek() == '-') {
      negative = take() == '-';
      skip_ws();
      parse_term(negative, acc);
      skip_ws();
    }
    if (pos_ != text_.size()) fail("expected '+', '-', or end of input");
    std::size_t top = 0;
    for (const auto& [deg, c] : acc) {
      if (!c.is_zero()) top = std::max(top, deg);
    }
    std::vector<Rational> coeffs(top + 1, Rational(0));
    for (const auto& [deg, c] : acc) coeffs[deg] = c;
    return Poly<Rational>(std::move(coeffs));
  }

  Rational parse_signed_coef() {
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = take() == '-';
    skip_ws();
    Rational c = parse_coef();
    return negative ? -c : c;
  }

  Poly<Rational> parse_list() {
    take();  // '['
    skip_ws();
    std::vector<Rational> coeffs;
    if (peek() != ']') {
      coeffs.push_back(parse_signed_coef());
      skip_ws();
      while (peek() == ',') {
        take();
        skip_ws();
        coeffs.push_back(parse_signed_coef());
        skip_ws();
      }
    }
    if (peek() != ']') fail("expected ',' or ']'");
    take();
    return Poly<Rational>(std::move(coeffs));
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

std::string power_text(const std::string& var, std::size_t degree) {
  if (degree == 0) return "";
  if (degree == 1) return var;
  return var + "^" + std::to_string(degree);
}

// Shared layout for both scalar kinds: `magnitude(c)` must be the printable
// absolute value and `negative(c)` its sign; F_p residues are never negative.
template <class S, class Magnitude, class Negative>
std::string render(const Poly<S>& p, const std::string& var,
                   Magnitude&& magnitude, Negative&& negative) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int d = p.degree(); d >= 0; --d) {
    const S& c = p[static_cast<std::size_t>(d)];
    if (c.is_zero()) continue;
    if (out.empty()) {
      if (negative(c)) out += "-";
    } else {
      out += negative(c) ? " - " : " + ";
    }
    std::string mag = magnitude(c);
    std::string pw = power_text(var, static_cast<std::size_t>(d));
    if (pw.empty()) {
      out += mag;
    } else if (mag == "1") {
      out += pw;
    } else {
      out += mag + "*" + pw;
    }
  }
  return out;
}

}  // namespace

Poly<Rational> parse_poly(const std::string& text) {
  return Parser(text).parse();
}

std::string print_poly(const Poly<Rational>& p, const std::string& var) {
  return render(
      p, var, [](const Rational& c) { return c.abs().to_string(); },
      [](const Rational& c) { return c.sign() < 0; });
}

std::string print_poly(const Poly<Fp>& p, const std::string& var) {
  return render(
      p, var, [](const Fp& c) { return c.to_string(); },
      [](const Fp&) { return false; });
}

}  // namespace qalg
