#pragma once

#include <optional>
#include <span>
#include <vector>

#include "introots/exactmath.hpp"
#include "introots/integer.hpp"

namespace introots {

/// Integer polynomial coefficients in ascending degree order. At least two
/// entries and a nonzero leading (last) coefficient.
class PolyCoeffs {
public:
    explicit PolyCoeffs(std::vector<Integer> ascending);

    /// Builds from descending order, the way polynomials are written.
    static PolyCoeffs from_descending(std::vector<Integer> descending);

    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
    [[nodiscard]] Integer leading() const noexcept { return coeffs_.back(); }
    [[nodiscard]] Integer operator[](std::size_t power) const { return coeffs_.at(power); }

    /// Exact p(x).
    [[nodiscard]] Integer evaluate(Integer x) const;

    friend bool operator==(const PolyCoeffs&, const PolyCoeffs&) = default;

private:
    std::vector<Integer> coeffs_;
};

struct RationalRoot {
    Rational value;
    int multiplicity = 0;

    friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

struct RootFindings {
    std::vector<RationalRoot> rational_roots;  // ascending by value
    bool all_roots_rational = false;
    bool all_roots_integer = false;
};

/// Every rational root with its multiplicity.
///
/// Zero roots are factored out first; the remaining candidates are the
/// lowest-terms fractions k/l with k | a0 and l | an. Each candidate is tested
/// by exact division by (l*x - k), repeated to obtain the multiplicity. Uses
/// no closed-form root formulas of any degree.
[[nodiscard]] RootFindings rational_roots(const PolyCoeffs& p);

/// All degree-many roots when every one is an integer, sorted ascending with
/// repetition. Degree must be 1..3.
[[nodiscard]] std::optional<std::vector<Integer>> integer_root_multiset(const PolyCoeffs& p);

/// True iff an * e_i(roots) == (-1)^i * a_{n-i} for every i, i.e. the roots
/// reproduce every coefficient exactly. Degree must be 2 or 3 and
/// roots.size() == degree.
[[nodiscard]] bool vieta_check(const PolyCoeffs& p, std::span<const Integer> roots);

}  // namespace introots
