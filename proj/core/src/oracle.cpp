#include "introots/oracle.hpp"

#include <algorithm>

namespace introots {

PolyCoeffs::PolyCoeffs(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) {
    if (coeffs_.size() < 2) throw DomainError("polynomial must have degree at least 1");
    if (coeffs_.back().is_zero()) throw DomainError("leading coefficient must be nonzero");
}

PolyCoeffs PolyCoeffs::from_descending(std::vector<Integer> descending) {
    std::reverse(descending.begin(), descending.end());
    return PolyCoeffs(std::move(descending));
}

Integer PolyCoeffs::evaluate(Integer x) const {
    Integer acc{0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

namespace {

// Coefficient bound for any integer factor of `coeffs`: a factor of degree m
// has every coefficient at most 2^m * ||p||_1 in magnitude (Mignotte).
Integer factor_coefficient_bound(const std::vector<Integer>& coeffs) {
    try {
        Integer norm{0};
        for (const Integer& c : coeffs) norm += abs(c);
        return norm * pow(Integer(2), static_cast<unsigned>(coeffs.size() - 1));
    } catch (const OverflowError&) {
        return Integer::max();
    }
}

// Divides `coeffs` (ascending, constant term nonzero) by (den*x - num).
// Returns the quotient when the division is exact over the integers.
std::optional<std::vector<Integer>> divide_linear(const std::vector<Integer>& coeffs, Integer num,
                                                  Integer den) {
    const std::size_t n = coeffs.size() - 1;
    const Integer bound = factor_coefficient_bound(coeffs);
    std::vector<Integer> quotient(n);
    Integer carry = coeffs[n];
    for (std::size_t i = n; i >= 1; --i) {
        if (!divides(den, carry)) return std::nullopt;
        quotient[i - 1] = carry / den;
        if (abs(quotient[i - 1]) > bound) return std::nullopt;
        if (i == 1) break;
        carry = coeffs[i - 1] + num * quotient[i - 1];
    }
    // Remainder is a0 + num * q0; check it by division to avoid the product.
    if (!divides(num, coeffs[0])) return std::nullopt;
    if (coeffs[0] / num != -quotient[0]) return std::nullopt;
    return quotient;
}

}  // namespace

RootFindings rational_roots(const PolyCoeffs& p) {
    std::vector<Integer> rest = p.coefficients();
    const int degree = p.degree();
    RootFindings findings;

    auto leading_zeros = std::find_if(rest.begin(), rest.end(),
                                      [](const Integer& c) { return !c.is_zero(); });
    const auto zero_mult = static_cast<int>(leading_zeros - rest.begin());
    rest.erase(rest.begin(), leading_zeros);

    std::vector<Rational> candidates;
    if (rest.size() >= 2) {
        const auto numerators = divisors(rest.front());
        const auto denominators = divisors(rest.back());
        for (const Integer& k : numerators)
            for (const Integer& l : denominators)
                if (gcd(k, l) == Integer(1)) {
                    candidates.push_back(make_rational(k, l));
                    candidates.push_back(make_rational(-k, l));
                }
        std::sort(candidates.begin(), candidates.end());
    }
    if (zero_mult > 0) {
        candidates.insert(std::lower_bound(candidates.begin(), candidates.end(), Rational{}),
                          Rational{});
    }

    int found = 0;
    for (const Rational& r : candidates) {
        if (r.num().is_zero()) {
            findings.rational_roots.push_back({r, zero_mult});
            found += zero_mult;
            continue;
        }
        int mult = 0;
        while (rest.size() >= 2) {
            auto q = divide_linear(rest, r.num(), r.den());
            if (!q) break;
            rest = std::move(*q);
            ++mult;
        }
        if (mult > 0) {
            findings.rational_roots.push_back({r, mult});
            found += mult;
        }
    }

    findings.all_roots_rational = found == degree;
    findings.all_roots_integer =
        findings.all_roots_rational &&
        std::all_of(findings.rational_roots.begin(), findings.rational_roots.end(),
                    [](const RationalRoot& rr) { return rr.value.is_integer(); });
    return findings;
}

std::optional<std::vector<Integer>> integer_root_multiset(const PolyCoeffs& p) {
    if (p.degree() < 1 || p.degree() > 3)
        throw DomainError("integer_root_multiset supports degree 1 to 3");
    const RootFindings f = rational_roots(p);
    if (!f.all_roots_integer) return std::nullopt;
    std::vector<Integer> roots;
    for (const RationalRoot& rr : f.rational_roots)
        roots.insert(roots.end(), static_cast<std::size_t>(rr.multiplicity), rr.value.num());
    return roots;
}

bool vieta_check(const PolyCoeffs& p, std::span<const Integer> roots) {
    const int n = p.degree();
    if (n < 2 || n > 3) throw DomainError("vieta_check supports degree 2 or 3");
    if (roots.size() != static_cast<std::size_t>(n))
        throw DomainError("vieta_check needs exactly degree-many roots");

    // e[i] = i-th elementary symmetric polynomial of the roots.
    std::vector<Integer> e(static_cast<std::size_t>(n) + 1, Integer(0));
    e[0] = 1;
    for (const Integer& r : roots)
        for (std::size_t i = static_cast<std::size_t>(n); i >= 1; --i) e[i] += e[i - 1] * r;

    for (int i = 1; i <= n; ++i) {
        const Integer expected = p[static_cast<std::size_t>(n - i)];
        const Integer lhs = p.leading() * e[static_cast<std::size_t>(i)];
        if ((i % 2 == 0 ? lhs : -lhs) != expected) return false;
    }
    return true;
}

}  // namespace introots
