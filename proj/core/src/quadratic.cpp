#include "introots/quadratic.hpp"

#include <utility>

#include "introots/exactmath.hpp"

namespace introots {

namespace {

RootPair sorted_pair(Integer x, Integer y) {
    if (y < x) std::swap(x, y);
    return {x, y};
}

}  // namespace

QuadraticPoly::QuadraticPoly(Integer a_, Integer b_, Integer c_) : a(a_), b(b_), c(c_) {
    if (a.is_zero()) throw DomainError("quadratic leading coefficient must be nonzero");
}

std::string_view to_string(QuadraticReason reason) noexcept {
    switch (reason) {
        case QuadraticReason::Success: return "Success";
        case QuadraticReason::NegativeDiscriminant: return "NegativeDiscriminant";
        case QuadraticReason::DiscriminantNotSquare: return "DiscriminantNotSquare";
        case QuadraticReason::LeadingDoesNotDivideB: return "LeadingDoesNotDivideB";
        case QuadraticReason::LeadingDoesNotDivideC: return "LeadingDoesNotDivideC";
    }
    return "?";
}

Integer discriminant(const QuadraticPoly& q) { return q.b * q.b - Integer(4) * q.a * q.c; }

QuadraticVerdict classify_quadratic(const QuadraticPoly& q) {
    const Integer disc = discriminant(q);
    if (disc.is_negative()) return {false, std::nullopt, QuadraticReason::NegativeDiscriminant};
    const auto k = as_perfect_square(disc);
    if (!k) return {false, std::nullopt, QuadraticReason::DiscriminantNotSquare};
    if (!divides(q.a, q.b)) return {false, std::nullopt, QuadraticReason::LeadingDoesNotDivideB};
    if (!divides(q.a, q.c)) return {false, std::nullopt, QuadraticReason::LeadingDoesNotDivideC};

    const Integer two_a = Integer(2) * q.a;
    const Integer r1 = exact_quotient(-q.b + *k, two_a);
    const Integer r2 = exact_quotient(-q.b - *k, two_a);
    return {true, sorted_pair(r1, r2), QuadraticReason::Success};
}

std::optional<RootPair> monic_integer_roots(Integer b, Integer c) {
    const auto k = as_perfect_square(b * b - Integer(4) * c);
    if (!k) return std::nullopt;
    INTROOTS_ENSURE(floor_mod(b - *k, Integer(2)).is_zero(),
                    "b and k must share parity when b^2 - 4c = k^2");
    return sorted_pair((-b + *k) / Integer(2), (-b - *k) / Integer(2));
}

RootPair roots_via_completion(const QuadraticPoly& q) {
    if (!divides(q.a, q.b) || !divides(q.a, q.c))
        throw DomainError("roots_via_completion requires a | b and a | c");
    const Integer disc = discriminant(q);
    const auto m = as_perfect_square(disc);
    if (!m) throw DomainError("roots_via_completion requires a square discriminant");

    const Integer u = q.b / q.a;
    const Integer v = q.c / q.a;
    // a^2 (u^2 - 4v) = m^2, so |a| divides m.
    const Integer t = exact_quotient(*m, abs(q.a));
    INTROOTS_ENSURE(u * u - Integer(4) * v == t * t, "completion identity u^2 - 4v = t^2 failed");
    INTROOTS_ENSURE(floor_mod(u - t, Integer(2)).is_zero(), "u and t must share parity");

    // r = (-a*u +- |a|*t) / 2a; the sign of a only swaps which root takes +t.
    if (q.a > Integer(0)) return sorted_pair((-u + t) / Integer(2), (-u - t) / Integer(2));
    return sorted_pair((-u - t) / Integer(2), (-u + t) / Integer(2));
}

}  // namespace introots
