#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lagrangelab {

/// Arbitrary precision integer.
using Integer = boost::multiprecision::mpz_int;

/// Arbitrary precision rational. GMP keeps every value canonical: the
/// denominator is positive and coprime to the numerator after each operation.
using Rational = boost::multiprecision::mpq_rational;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

[[nodiscard]] Integer gcd(const Integer& a, const Integer& b);
[[nodiscard]] Integer lcm(const Integer& a, const Integer& b);

/// gcd of absolute values; 0 for an empty or all-zero list.
[[nodiscard]] Integer gcd_of(std::span<const Integer> values);

[[nodiscard]] Integer numerator(const Rational& q);
[[nodiscard]] Integer denominator(const Rational& q);
[[nodiscard]] bool is_integral(const Rational& q);

/// Parses "p/q", "-p/q" or a plain integer. Decimal points are rejected.
[[nodiscard]] Rational parse_rational(std::string_view text);

/// "p/q", or just "p" when the denominator is 1.
[[nodiscard]] std::string to_string(const Rational& q);
[[nodiscard]] std::string to_string(const Integer& z);

[[nodiscard]] RatVector to_rational(std::span<const Integer> v);
[[nodiscard]] Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// Returns the integer row of `v` scaled by the lcm of denominators.
[[nodiscard]] IntVector clear_denominators(std::span<const Rational> v);

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
[[nodiscard]] IntVector primitive(IntVector v);

[[nodiscard]] int sign(const Integer& z);
[[nodiscard]] int sign(const Rational& q);

}  // namespace lagrangelab
