#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "introots/integer.hpp"
#include "introots/oracle.hpp"
#include "introots/quadratic.hpp"

namespace introots {

/// Monic cubic x^3 + b*x^2 + c*x + d.
struct CubicPoly {
    Integer b;
    Integer c;
    Integer d;

    [[nodiscard]] PolyCoeffs to_coeffs() const { return PolyCoeffs({d, c, b, Integer(1)}); }

    friend bool operator==(const CubicPoly&, const CubicPoly&) = default;
};

/// Three roots, ascending, with repetition.
using RootTriple = std::array<Integer, 3>;

enum class CubicTag {
    ZeroRoot,
    RootOne,
    RootMinusOne,
    TripleRoot,
    DoubleRoot,
    GenericIntegerRoots,
    NotAllInteger,
};

[[nodiscard]] std::string_view to_string(CubicTag tag) noexcept;

/// Verdict precedence, highest first.
inline constexpr std::array<CubicTag, 7> kCubicPriority = {
    CubicTag::TripleRoot,   CubicTag::DoubleRoot,          CubicTag::ZeroRoot,
    CubicTag::RootOne,      CubicTag::RootMinusOne,        CubicTag::GenericIntegerRoots,
    CubicTag::NotAllInteger,
};

/// The derivative 3x^2 + 2b*x + c; leading coefficient is always 3.
struct DerivedQuadratic {
    QuadraticPoly poly;
};

/// (x - M)^2 (x - N) with M != N, and which of the four parameter groups it
/// belongs to.
///
/// For groups 1 and 2 (3 does not divide b) `k_or_t` is the even parameter
/// k = 2*sqrt(b^2 - 3c), for which the double root is -(2b + k)/6 (group 1)
/// or (-2b + k)/6 (group 2). For groups 3 and 4 (b = 3B) it is
/// t = sqrt(b^2 - 3c)/3 and the double root is -B + t (group 3) or
/// -(B + t) (group 4).
struct DoubleRootMatch {
    int group = 0;
    Integer M;
    Integer N;
    Integer k_or_t;

    friend bool operator==(const DoubleRootMatch&, const DoubleRootMatch&) = default;
};

struct CubicPattern {
    CubicTag tag = CubicTag::NotAllInteger;
    std::optional<RootTriple> roots;  // absent iff NotAllInteger
    std::optional<int> group;         // DoubleRoot only
    std::optional<Integer> M;
    std::optional<Integer> N;
    std::optional<Integer> k_or_t;
};

struct CubicMatch {
    CubicTag tag;
    RootTriple roots;
};

struct CubicClassification {
    CubicPattern verdict;
    std::vector<CubicMatch> matches;  // every special case that fires, in priority order

    [[nodiscard]] std::vector<CubicTag> match_tags() const;
};

[[nodiscard]] Integer eval_cubic(const CubicPoly& p, Integer x);
[[nodiscard]] DerivedQuadratic derivative(const CubicPoly& p);

/// d == 0 and b^2 - 4c = k^2; roots {(-b + k)/2, -(b + k)/2, 0}.
[[nodiscard]] std::optional<RootTriple> check_zero_root(const CubicPoly& p);

/// b + c + d == -1 and (b + 1)^2 + 4d = k^2; roots {(-(b+1) +- k)/2, 1}.
[[nodiscard]] std::optional<RootTriple> check_root_one(const CubicPoly& p);

/// b - c + d == 1 and (b - 1)^2 - 4d = k^2; roots {(1 - b +- k)/2, -1}.
[[nodiscard]] std::optional<RootTriple> check_root_minus_one(const CubicPoly& p);

/// 3 | b, c == b^2/3, d == b^3/27; the root is -b/3.
[[nodiscard]] std::optional<Integer> check_triple_root(const CubicPoly& p);

/// Proposes double-root candidates from the group formulas and accepts one only
/// when 2M + N = -b, M^2 + 2MN = c and M^2 N = -d all hold. Triple roots are
/// not double roots.
[[nodiscard]] std::optional<DoubleRootMatch> classify_double_root(const CubicPoly& p);

/// Special-case predicates plus a divisor-search fallback; does not consult
/// the oracle.
[[nodiscard]] CubicClassification detect_cubic_pattern(const CubicPoly& p);

/// detect_cubic_pattern cross-checked against the oracle. Throws
/// InvariantError if the verdict, or any matched special case, disagrees with
/// the oracle's root multiset or with Vieta's relations.
[[nodiscard]] CubicClassification classify_cubic(const CubicPoly& p);

}  // namespace introots
