#include "introots/cubic.hpp"

#include <algorithm>

#include "introots/exactmath.hpp"

namespace introots {

namespace {

const Integer kOne{1};
const Integer kTwo{2};
const Integer kThree{3};

RootTriple sorted_triple(Integer x, Integer y, Integer z) {
    RootTriple r{x, y, z};
    std::sort(r.begin(), r.end());
    return r;
}

// Roots of x^2 + p*x + q given the square root k of its discriminant.
std::pair<Integer, Integer> halves(Integer minus_p, Integer k) {
    INTROOTS_ENSURE(floor_mod(minus_p - k, kTwo).is_zero(), "quadratic factor parity mismatch");
    return {(minus_p + k) / kTwo, (minus_p - k) / kTwo};
}

bool satisfies_double_root_vieta(const CubicPoly& p, Integer M, Integer N) {
    return M != N && kTwo * M + N == -p.b && M * M + kTwo * M * N == p.c && M * M * N == -p.d;
}

}  // namespace

std::string_view to_string(CubicTag tag) noexcept {
    switch (tag) {
        case CubicTag::ZeroRoot: return "ZeroRoot";
        case CubicTag::RootOne: return "RootOne";
        case CubicTag::RootMinusOne: return "RootMinusOne";
        case CubicTag::TripleRoot: return "TripleRoot";
        case CubicTag::DoubleRoot: return "DoubleRoot";
        case CubicTag::GenericIntegerRoots: return "GenericIntegerRoots";
        case CubicTag::NotAllInteger: return "NotAllInteger";
    }
    return "?";
}

std::vector<CubicTag> CubicClassification::match_tags() const {
    std::vector<CubicTag> tags;
    tags.reserve(matches.size());
    for (const auto& m : matches) tags.push_back(m.tag);
    return tags;
}

Integer eval_cubic(const CubicPoly& p, Integer x) { return ((x + p.b) * x + p.c) * x + p.d; }

DerivedQuadratic derivative(const CubicPoly& p) {
    return DerivedQuadratic{QuadraticPoly(kThree, kTwo * p.b, p.c)};
}

std::optional<RootTriple> check_zero_root(const CubicPoly& p) {
    if (!p.d.is_zero()) return std::nullopt;
    const auto k = as_perfect_square(p.b * p.b - Integer(4) * p.c);
    if (!k) return std::nullopt;
    const auto [r1, r2] = halves(-p.b, *k);
    return sorted_triple(r1, r2, Integer(0));
}

std::optional<RootTriple> check_root_one(const CubicPoly& p) {
    if (p.b + p.c + p.d != -kOne) return std::nullopt;
    const Integer b1 = p.b + kOne;
    const auto k = as_perfect_square(b1 * b1 + Integer(4) * p.d);
    if (!k) return std::nullopt;
    const auto [r1, r2] = halves(-b1, *k);
    return sorted_triple(r1, r2, kOne);
}

std::optional<RootTriple> check_root_minus_one(const CubicPoly& p) {
    if (p.b - p.c + p.d != kOne) return std::nullopt;
    // Cofactor after (x + 1) is x^2 + (b - 1)x + d.
    const Integer b1 = p.b - kOne;
    const auto k = as_perfect_square(b1 * b1 - Integer(4) * p.d);
    if (!k) return std::nullopt;
    const auto [r1, r2] = halves(-b1, *k);
    return sorted_triple(r1, r2, -kOne);
}

std::optional<Integer> check_triple_root(const CubicPoly& p) {
    if (!divides(kThree, p.b)) return std::nullopt;
    if (p.c * kThree != p.b * p.b) return std::nullopt;
    if (p.d * Integer(27) != p.b * p.b * p.b) return std::nullopt;
    return -(p.b / kThree);
}

std::optional<DoubleRootMatch> classify_double_root(const CubicPoly& p) {
    const auto k = as_perfect_square(p.b * p.b - kThree * p.c);
    if (!k || k->is_zero()) return std::nullopt;
    const bool b_div3 = divides(kThree, p.b);
    INTROOTS_ENSURE(b_div3 == divides(kThree, *k),
                    "b^2 - 3c = k^2 forces 3 | b exactly when 3 | k");

    struct Candidate {
        int group;
        Integer numerator;
        Integer denominator;
        Integer k_or_t;
    };
    std::vector<Candidate> candidates;
    if (!b_div3) {
        // Derivative roots are (-2b +- K)/6 with K = 2k.
        const Integer big_k = kTwo * *k;
        candidates.push_back({1, -(kTwo * p.b + big_k), Integer(6), big_k});
        candidates.push_back({2, -kTwo * p.b + big_k, Integer(6), big_k});
    } else {
        if (!divides(kThree, p.c)) return std::nullopt;
        const Integer B = p.b / kThree;
        const Integer t = *k / kThree;
        candidates.push_back({3, -B + t, kOne, t});
        candidates.push_back({4, -(B + t), kOne, t});
    }

    std::optional<DoubleRootMatch> found;
    for (const Candidate& cand : candidates) {
        if (!divides(cand.denominator, cand.numerator)) continue;
        const Integer M = cand.numerator / cand.denominator;
        const Integer N = -p.b - kTwo * M;
        if (!satisfies_double_root_vieta(p, M, N)) continue;
        INTROOTS_ENSURE(!found, "double root matched more than one group");
        found = DoubleRootMatch{cand.group, M, N, cand.k_or_t};
    }
    return found;
}

CubicClassification detect_cubic_pattern(const CubicPoly& p) {
    CubicClassification out;
    std::optional<DoubleRootMatch> dbl;

    if (auto r = check_triple_root(p)) out.matches.push_back({CubicTag::TripleRoot, {*r, *r, *r}});
    if ((dbl = classify_double_root(p)))
        out.matches.push_back({CubicTag::DoubleRoot, sorted_triple(dbl->M, dbl->M, dbl->N)});
    if (auto r = check_zero_root(p)) out.matches.push_back({CubicTag::ZeroRoot, *r});
    if (auto r = check_root_one(p)) out.matches.push_back({CubicTag::RootOne, *r});
    if (auto r = check_root_minus_one(p)) out.matches.push_back({CubicTag::RootMinusOne, *r});

    CubicPattern& v = out.verdict;
    if (!out.matches.empty()) {
        const CubicMatch& top = out.matches.front();
        v.tag = top.tag;
        v.roots = top.roots;
        if (top.tag == CubicTag::DoubleRoot) {
            v.group = dbl->group;
            v.M = dbl->M;
            v.N = dbl->N;
            v.k_or_t = dbl->k_or_t;
        }
        return out;
    }

    // No special case: 0 and +-1 are not roots. Any integer root divides d;
    // the remaining factor is a monic quadratic.
    v.tag = CubicTag::NotAllInteger;
    if (p.d.is_zero()) return out;
    for (const Integer& m : divisors(p.d)) {
        for (const Integer& r : {m, -m}) {
            if (!eval_cubic(p, r).is_zero()) continue;
            const Integer q1 = p.b + r;
            const Integer q0 = p.c + r * q1;
            if (auto rest = monic_integer_roots(q1, q0)) {
                v.tag = CubicTag::GenericIntegerRoots;
                v.roots = sorted_triple(r, (*rest)[0], (*rest)[1]);
            }
            return out;
        }
    }
    return out;
}

CubicClassification classify_cubic(const CubicPoly& p) {
    CubicClassification out = detect_cubic_pattern(p);
    const PolyCoeffs coeffs = p.to_coeffs();
    const auto truth = integer_root_multiset(coeffs);

    auto same = [&](const RootTriple& r) {
        return truth && std::equal(r.begin(), r.end(), truth->begin(), truth->end());
    };
    if (out.verdict.roots) {
        INTROOTS_ENSURE(same(*out.verdict.roots), "cubic verdict disagrees with the oracle");
    } else {
        INTROOTS_ENSURE(!truth, "cubic fast path missed an all-integer root multiset");
    }
    for (const CubicMatch& m : out.matches) {
        INTROOTS_ENSURE(same(m.roots), std::string(to_string(m.tag)) + " roots disagree with the oracle");
        INTROOTS_ENSURE(vieta_check(coeffs, m.roots),
                        std::string(to_string(m.tag)) + " roots fail Vieta's relations");
    }
    return out;
}

}  // namespace introots
