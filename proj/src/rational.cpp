#include "zonograph/rational.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace zonograph {

std::string rational_to_string(const Rational& r) {
  return r.get_str();
}

std::optional<Rational> parse_rational(const std::string& text) {
  // Strict scan: [-]digits[/digits]. mpz's own parser is laxer (whitespace,
  // leading '+'), which would break bit-exact round-trips.
  auto scan_int = [](const std::string& s) -> bool {
    if (s.empty()) return false;
    std::size_t k = (s[0] == '-') ? 1 : 0;
    if (k == s.size()) return false;
    for (; k < s.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    return true;
  };

  std::string num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!scan_int(num) || !scan_int(den)) return std::nullopt;

  BigInt p(num), q(den);
  if (q == 0) return std::nullopt;
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational parse_rational_or_throw(const std::string& text) {
  auto r = parse_rational(text);
  if (!r) throw std::invalid_argument("malformed rational: '" + text + "'");
  return *r;
}

std::string approx_decimal(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", r.get_d());
  return buf;
}

bool lex_less(const QVector& a, const QVector& b) {
  const std::size_t m = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < m; ++k) {
    int c = cmp(a[k], b[k]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

std::string vector_to_string(const QVector& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += rational_to_string(v[k]);
  }
  out += ")";
  return out;
}

}  // namespace zonograph
