#pragma once

#include <optional>

#include "introots/cubic.hpp"
#include "introots/integer.hpp"
#include "introots/quadratic.hpp"

namespace introots {

/// Parameters of a p-Type 1 trinomial: two integer roots, |a| > 1, |b| = p
/// prime. Every such trinomial has |a| = p, discriminant (pT)^2 with T odd,
/// and falls in one of four sign groups:
///
///   group | a  | b
///   ------+----+----
///     1   | +p | +p
///     2   | -p | +p
///     3   | -p | -p
///     4   | +p | -p
///
/// with c = a (1 - T^2) / 4 in every group.
struct PType1Spec {
    Integer p;
    Integer T;
    int group = 0;

    friend bool operator==(const PType1Spec&, const PType1Spec&) = default;
};

struct PType1Member {
    QuadraticPoly poly;
    RootPair roots;
};

/// Builds the group member and checks it against classify_quadratic before
/// returning it. Throws DomainError for composite p, even or nonpositive T,
/// or a group outside 1..4.
[[nodiscard]] PType1Member gen_p_type1(const PType1Spec& params);

/// Recovers (p, T, group) when q is p-Type 1.
[[nodiscard]] std::optional<PType1Spec> classify_p_type1(const QuadraticPoly& q);

/// Parameters of a double-root cubic family member.
///
/// Groups 1-2: `base` is b (3 does not divide b), `offset` is k with k even,
/// positive, not a multiple of 3; b = k (mod 3) selects group 1, b != k
/// (mod 3) group 2. Then c = (4b^2 - k^2)/12.
/// Groups 3-4: `base` is B with b = 3B, `offset` is t >= 1; c = 3(B^2 - t^2).
struct DoubleRootSpec {
    int group = 0;
    Integer base;
    Integer offset;

    friend bool operator==(const DoubleRootSpec&, const DoubleRootSpec&) = default;
};

struct DoubleRootMember {
    CubicPoly poly;
    Integer M;
    Integer N;
};

/// True when (x - M)^2 (x - N) == poly with M != N, i.e. all three Vieta
/// relations hold.
[[nodiscard]] bool validate_double_root_member(const CubicPoly& poly, Integer M, Integer N);

/// Emits a validated member (Vieta relations and a classify_double_root
/// round trip). Throws DomainError for parameters outside their group or for
/// a candidate that fails validation.
[[nodiscard]] DoubleRootMember gen_double_root_family(const DoubleRootSpec& params);

}  // namespace introots
