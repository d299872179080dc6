#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "introots/integer.hpp"

namespace introots {

/// Greatest common divisor, always nonnegative; gcd(0, 0) == 0.
[[nodiscard]] Integer gcd(Integer a, Integer b);

/// Largest s >= 0 with s*s <= n. Integer Newton iteration, no floating point.
/// Throws DomainError for negative n.
[[nodiscard]] Integer isqrt(Integer n);

/// The nonnegative k with k*k == n, if any. Negative n is never a square.
[[nodiscard]] std::optional<Integer> as_perfect_square(Integer n);

/// The positive r with r^n == b, if any. Requires b >= 1 and n >= 1.
///
/// A positive integer is an n-th power of a positive rational exactly when it
/// is an n-th power of a positive integer, so this integer search also decides
/// the rational question.
[[nodiscard]] std::optional<Integer> as_perfect_nth_power(Integer b, Integer n);

/// n mod d == 0. Throws DomainError for d == 0.
[[nodiscard]] bool divides(Integer d, Integer n);

/// Positive divisors of |n| in ascending order. Throws DomainError for n == 0.
[[nodiscard]] std::vector<Integer> divisors(Integer n);

/// Trial division up to isqrt(p).
[[nodiscard]] bool is_prime(Integer p);

/// Least nonnegative residue of a modulo m (m > 0).
[[nodiscard]] Integer floor_mod(Integer a, Integer m);

/// n / d where d is known to divide n; throws InvariantError otherwise.
[[nodiscard]] Integer exact_quotient(Integer n, Integer d);

/// base^exp with overflow checks.
[[nodiscard]] Integer pow(Integer base, unsigned exp);

/// A rational number in lowest terms with a positive denominator.
class Rational {
public:
    constexpr Rational() = default;
    Rational(Integer value) : num_(value) {}  // NOLINT: integers are rationals

    [[nodiscard]] Integer num() const noexcept { return num_; }
    [[nodiscard]] Integer den() const noexcept { return den_; }
    [[nodiscard]] bool is_integer() const noexcept { return den_ == Integer(1); }

    [[nodiscard]] std::string to_string() const;

    friend Rational make_rational(Integer num, Integer den);

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    Integer num_{0};
    Integer den_{1};
};

/// Normalizes num/den to lowest terms with den > 0. Throws DomainError when
/// den == 0.
[[nodiscard]] Rational make_rational(Integer num, Integer den);

/// Exact (r1 + r2, r1 * r2).
[[nodiscard]] std::pair<Rational, Rational> rational_sum_product(const Rational& r1,
                                                                 const Rational& r2);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace introots
