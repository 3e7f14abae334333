#include "qalg/rational.hpp"

#include <cctype>

namespace qalg {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::from_string(const std::string& text) {
  std::string body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    negative = body[0] == '-';
    body = body.substr(1);
  }
  std::string num = body;
  std::string den = "1";
  auto slash = body.find('/');
  if (slash != std::string::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError(0, "expected rational of the form a or a/b, got '" +
                            text + "'");
  }
  BigInt n(num), d(den);
  if (d == 0) throw DivisionByZero("rational with zero denominator");
  if (negative) n = -n;
  return Rational(n, d);
}

}  // namespace qalg
