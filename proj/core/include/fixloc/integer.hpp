#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fixloc {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Integer vectors serve as exponents, moments, weights and lattice vectors.
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
Rational dot(std::span<const Rational> a, std::span<const Integer> b);

IntVector add(std::span<const Integer> a, std::span<const Integer> b);
IntVector sub(std::span<const Integer> a, std::span<const Integer> b);
IntVector scale(std::span<const Integer> a, const Integer& c);
IntVector negate(std::span<const Integer> a);
bool is_zero(std::span<const Integer> a);

int sign(const Integer& x);
int sign(const Rational& x);

// Always nonnegative; gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

// Floor division (rounds toward negative infinity). Divisor must be nonzero.
Integer floor_div(const Integer& a, const Integer& b);

Integer binomial(const Integer& n, unsigned k);

// Smallest positive multiple of `v` with integer entries (clears denominators).
IntVector clear_denominators(std::span<const Rational> v);

// "p/q" with gcd(p, q) = 1 and q > 0; integers are written as "p/1".
std::string to_fraction_string(const Rational& r);
// Accepts "p/q" (q > 0, reduced) or a bare integer "p".
std::optional<Rational> parse_fraction(std::string_view text);
std::optional<Integer> parse_integer(std::string_view text);

std::string to_string(const Integer& x);
std::string to_string(std::span<const Integer> v);  // "(a, b, c)"
std::string to_csv(std::span<const Integer> v);     // "a,b,c"
std::optional<IntVector> parse_csv(std::string_view text);

// Narrowing helper for loop bounds; throws std::overflow_error when out of range.
long long to_ll(const Integer& x);

} // namespace fixloc
