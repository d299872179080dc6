#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "introots/integer.hpp"

namespace introots {

/// Two roots, ascending. A double root appears twice.
using RootPair = std::array<Integer, 2>;

/// a*x^2 + b*x + c with a != 0.
struct QuadraticPoly {
    Integer a;
    Integer b;
    Integer c;

    QuadraticPoly(Integer a_, Integer b_, Integer c_);

    friend bool operator==(const QuadraticPoly&, const QuadraticPoly&) = default;
};

/// Why a quadratic does or does not split into integer roots. When several
/// conditions fail, the first in declaration order (after Success) is reported.
enum class QuadraticReason {
    Success,
    NegativeDiscriminant,
    DiscriminantNotSquare,
    LeadingDoesNotDivideB,
    LeadingDoesNotDivideC,
};

[[nodiscard]] std::string_view to_string(QuadraticReason reason) noexcept;

struct QuadraticVerdict {
    bool all_integer = false;
    std::optional<RootPair> roots;  // present iff all_integer
    QuadraticReason reason = QuadraticReason::Success;
};

/// b^2 - 4ac.
[[nodiscard]] Integer discriminant(const QuadraticPoly& q);

/// Both roots are integers iff the discriminant is a perfect square k^2 and
/// a divides both b and c. Roots are then (-b +- k) / 2a.
[[nodiscard]] QuadraticVerdict classify_quadratic(const QuadraticPoly& q);

/// Integer roots of x^2 + b*x + c: present iff b^2 - 4c is a perfect square.
[[nodiscard]] std::optional<RootPair> monic_integer_roots(Integer b, Integer c);

/// Second route to the same roots through u = b/a, v = c/a and t = m/|a|
/// where m^2 = b^2 - 4ac, giving roots (-u +- t)/2 with u^2 - 4v = t^2.
///
/// Precondition: classify_quadratic(q) succeeds (DomainError otherwise).
[[nodiscard]] RootPair roots_via_completion(const QuadraticPoly& q);

}  // namespace introots
