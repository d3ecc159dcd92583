#include "lagrangelab/exact.hpp"

#include "lagrangelab/errors.hpp"

#include <algorithm>
#include <cctype>

namespace lagrangelab {

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}

Integer gcd_of(std::span<const Integer> values) {
  Integer g = 0;
  for (const auto& v : values) {
    g = gcd(g, v);
    if (g == 1) break;
  }
  return abs(g);
}

Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }
bool is_integral(const Rational& q) { return denominator(q) == 1; }

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s;
  std::string_view den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    fail(ErrorKind::Input, "not a rational number: \"" + std::string(text) + "\"");
  }
  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0) fail(ErrorKind::Input, "zero denominator in \"" + std::string(text) + "\"");
  Rational q(n, d);
  return negative ? Rational(-q) : q;
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
  if (is_integral(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

RatVector to_rational(std::span<const Integer> v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& z : v) out.emplace_back(z);
  return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector clear_denominators(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& q : v) l = lcm(l, denominator(q));
  IntVector out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(numerator(q) * (l / denominator(q)));
  return out;
}

IntVector primitive(IntVector v) {
  Integer g = gcd_of(v);
  if (g > 1) {
    for (auto& z : v) z /= g;
  }
  return v;
}

int sign(const Integer& z) { return z.sign(); }
int sign(const Rational& q) { return q.sign(); }

}  // namespace lagrangelab
