// Acceptance suite: exhaustive and randomized sweeps, one PASS/FAIL line per
// criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "introots/cubic.hpp"
#include "introots/exactmath.hpp"
#include "introots/families.hpp"
#include "introots/oracle.hpp"
#include "introots/polytext.hpp"
#include "introots/quadratic.hpp"
#include "polytool/report.hpp"
#include "support/brute_force.hpp"

using namespace introots;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    std::ostringstream failures;
    std::ostringstream notes;
    int failure_count = 0;

    void fail(const std::string& what) {
        ok = false;
        if (++failure_count <= 5) failures << "    " << what << "\n";
    }
};

struct Criterion {
    std::string name;
    double time_limit_s;  // <= 0 means no limit
    std::function<void(Outcome&)> body;
};

template <class Range>
bool same_roots(const Range& a, const std::optional<std::vector<Integer>>& b) {
    return b && std::equal(a.begin(), a.end(), b->begin(), b->end());
}

// 1 and 6 share the sweep; criterion 6 reads what criterion 1 recorded.
std::vector<QuadraticPoly> g_quadratic_successes;

void quadratic_sweep(Outcome& o) {
    long cases = 0;
    for (int a = -30; a <= 30; ++a) {
        if (a == 0) continue;
        for (int b = -30; b <= 30; ++b)
            for (int c = -30; c <= 30; ++c) {
                ++cases;
                const QuadraticPoly q(a, b, c);
                const QuadraticVerdict v = classify_quadratic(q);
                const auto truth = integer_root_multiset(PolyCoeffs({c, b, a}));
                if (v.all_integer != truth.has_value() || (v.all_integer && !same_roots(*v.roots, truth)))
                    o.fail("mismatch at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                           std::to_string(c) + ")");
                if (v.all_integer) g_quadratic_successes.push_back(q);
            }
    }
    o.detail = std::to_string(cases) + " quadratics, " + std::to_string(g_quadratic_successes.size()) +
               " all-integer";
}

void cubic_sweep(Outcome& o) {
    long cases = 0, integer = 0, matched = 0;
    for (int b = -20; b <= 20; ++b)
        for (int c = -20; c <= 20; ++c)
            for (int d = -20; d <= 20; ++d) {
                ++cases;
                const CubicPoly p{b, c, d};
                const PolyCoeffs coeffs = p.to_coeffs();
                const CubicClassification cls = classify_cubic(p);
                const auto truth = integer_root_multiset(coeffs);
                const std::string at = "(" + std::to_string(b) + "," + std::to_string(c) + "," + std::to_string(d) + ")";
                if (cls.verdict.roots.has_value() != truth.has_value() ||
                    (truth && !same_roots(*cls.verdict.roots, truth)))
                    o.fail("verdict mismatch at " + at);
                if (truth) ++integer;
                for (const CubicMatch& m : cls.matches) {
                    ++matched;
                    if (!vieta_check(coeffs, m.roots) || !same_roots(m.roots, truth))
                        o.fail(std::string(to_string(m.tag)) + " not Vieta-consistent at " + at);
                }
            }
    o.detail = std::to_string(cases) + " cubics, " + std::to_string(integer) + " all-integer, " +
               std::to_string(matched) + " special-case hits";
}

void necessity(Outcome& o) {
    long cases = 0;
    for (int a = -5; a <= 5; ++a) {
        if (a == 0) continue;
        for (int r1 = -20; r1 <= 20; ++r1)
            for (int r2 = -20; r2 <= 20; ++r2) {
                ++cases;
                const auto e = brute::expand(a, {r1, r2});
                const QuadraticVerdict v = classify_quadratic(QuadraticPoly(e[2], e[1], e[0]));
                const RootPair want = r1 <= r2 ? RootPair{r1, r2} : RootPair{r2, r1};
                if (!v.all_integer || *v.roots != want)
                    o.fail("rejected a=" + std::to_string(a) + " roots " + std::to_string(r1) + "," +
                           std::to_string(r2));
            }
    }
    o.detail = std::to_string(cases) + " expanded products";
}

void double_root_round_trip(Outcome& o) {
    long emitted = 0, rejected = 0;
    for (int g : {3, 4})
        for (int B = -10; B <= 10; ++B)
            for (int t = 1; t <= 10; ++t) {
                const auto m = gen_double_root_family({g, B, t});
                ++emitted;
                const auto back = classify_double_root(m.poly);
                if (!back || back->M != m.M || back->N != m.N || back->group != g)
                    o.fail("group " + std::to_string(g) + " B=" + std::to_string(B) + " t=" + std::to_string(t));
            }
    std::map<std::string, int> by_reason;
    for (int g : {1, 2})
        for (int b = -30; b <= 30; ++b)
            for (int k = 1; k <= 30; ++k) {
                try {
                    const auto m = gen_double_root_family({g, b, k});
                    ++emitted;
                    const auto back = classify_double_root(m.poly);
                    if (!validate_double_root_member(m.poly, m.M, m.N) || !back || back->M != m.M ||
                        back->N != m.N || back->group != g)
                        o.fail("group " + std::to_string(g) + " b=" + std::to_string(b) + " k=" + std::to_string(k));
                } catch (const DomainError& e) {
                    ++rejected;
                    ++by_reason["group " + std::to_string(g) + ": " + e.what()];
                }
            }
    o.detail = std::to_string(emitted) + " emitted and round-tripped, " + std::to_string(rejected) +
               " (group, b, k) combinations rejected by the generator";
    for (const auto& [why, n] : by_reason) o.notes << "    rejected " << n << "x  " << why << "\n";
}

void ptype1_round_trip(Outcome& o) {
    long members = 0;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29})
        for (int T = 1; T <= 99; T += 2)
            for (int g = 1; g <= 4; ++g) {
                ++members;
                const PType1Spec params{p, T, g};
                const auto m = gen_p_type1(params);
                if (classify_p_type1(m.poly) != params) o.fail("round trip p=" + std::to_string(p) + " T=" + std::to_string(T));
                if (discriminant(m.poly) != Integer(p * T) * Integer(p * T))
                    o.fail("discriminant p=" + std::to_string(p) + " T=" + std::to_string(T));
            }
    o.detail = std::to_string(members) + " family members";
}

void cross_proof(Outcome& o) {
    long parity_checked = 0;
    for (const QuadraticPoly& q : g_quadratic_successes) {
        if (roots_via_completion(q) != *classify_quadratic(q).roots) o.fail("completion disagrees");
        const Integer u = q.b / q.a;
        const Integer t = *as_perfect_square(discriminant(q)) / abs(q.a);
        if (!floor_mod(u - t, Integer(2)).is_zero()) o.fail("parity");
        ++parity_checked;
    }
    if (g_quadratic_successes.empty()) o.fail("criterion 1 recorded no successes");
    o.detail = std::to_string(parity_checked) + " successes re-derived by completing the square";
}

void lemma_suites(Outcome& o) {
    long power_cases = 0;
    for (int n : {2, 3})
        for (std::int64_t b = 1; b <= 10000; ++b) {
            ++power_cases;
            if (as_perfect_nth_power(b, n).has_value() != brute::exhaustive_nth_power(b, n))
                o.fail("perfect power b=" + std::to_string(b) + " n=" + std::to_string(n));
        }
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::int64_t> num(-10000, 10000);
    std::uniform_int_distribution<std::int64_t> den(2, 10000);
    int rationals = 0;
    while (rationals < 10000) {
        const Rational r1 = make_rational(num(rng), den(rng));
        if (r1.is_integer()) continue;
        ++rationals;
        for (int i1 = -20; i1 <= 20; ++i1) {
            const Rational r2 = Rational(i1) - r1;
            if ((r1 * r2).is_integer()) o.fail("integral product for " + r1.to_string());
        }
    }
    o.detail = std::to_string(power_cases) + " perfect-power cases, " + std::to_string(rationals) +
               " proper rationals x 41 integer sums";
}

void errata_evidence(Outcome& o) {
    // Root 1 needs b + c + d = -1: (x-1)(x-2)(x-3) has b + c + d = -6 + 11 - 6.
    const CubicPoly e1{-6, 11, -6};
    if (e1.b + e1.c + e1.d != Integer(-1) || !check_root_one(e1) ||
        integer_root_multiset(e1.to_coeffs()) != std::vector<Integer>{1, 2, 3})
        o.fail("root-one condition");

    // Group 3 double root is -B + t: (x-1)^2 (x+2) with B = 0, t = 1.
    const auto g3 = classify_double_root({0, -3, 2});
    if (!g3 || g3->group != 3 || g3->M != Integer(1) || g3->N != Integer(-2)) o.fail("group 3 root");
    if (integer_root_multiset(PolyCoeffs({2, -3, 0, 1})) != std::vector<Integer>{-2, 1, 1}) o.fail("group 3 oracle");

    // p-Type 1 group 2 constant is a(1 - T^2)/4: p = 3, T = 3 gives c = +6.
    const auto m = gen_p_type1({3, 3, 2});
    if (m.poly != QuadraticPoly(-3, 3, 6) || integer_root_multiset(PolyCoeffs({6, 3, -3})) != std::vector<Integer>{-1, 2})
        o.fail("p-type 1 constant");
    if (classify_quadratic(QuadraticPoly(-3, 3, -6)).all_integer) o.fail("printed constant should fail");
    o.detail = "3 pinned counterexamples";
}

void parse_format(Outcome& o) {
    long cases = 0;
    auto check = [&](const std::vector<Integer>& c) {
        ++cases;
        const PolyCoeffs p(c);
        if (parse_poly(format_poly(p)) != p) o.fail(format_poly(p));
    };
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> coef(-99, 99);
    std::uniform_int_distribution<int> deg(1, 3);
    for (int i = 0; i < 100000; ++i) {
        std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& v : c) v = coef(rng);
        if (c.back().is_zero()) c.back() = 1;
        check(c);
    }
    for (int d = 1; d <= 3; ++d) {
        std::vector<int> idx(static_cast<std::size_t>(d) + 1, -9);
        while (true) {
            if (idx.back() != 0) check(std::vector<Integer>(idx.begin(), idx.end()));
            std::size_t i = 0;
            while (i < idx.size() && ++idx[i] > 9) idx[i++] = -9;
            if (i == idx.size()) break;
        }
    }
    o.detail = std::to_string(cases) + " coefficient vectors";
}

void verify_never_disagrees(Outcome& o) {
    long cases = 0;
    for (int a : {-2, -1, 1, 2, 3})
        for (int b = -8; b <= 8; ++b)
            for (int c = -8; c <= 8; ++c)
                for (int d = -8; d <= 8; ++d) {
                    ++cases;
                    const auto r = polytool::analyze(PolyCoeffs({d, c, b, a}), "");
                    if (!r.oracle_agrees) o.fail("cubic " + r.canonical);
                    const auto q = polytool::analyze(PolyCoeffs({d, c, a}), "");
                    if (!q.oracle_agrees) o.fail("quadratic " + q.canonical);
                }
    o.detail = std::to_string(cases) + " cubic/quadratic pairs through the CLI analysis path";
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"1 exhaustive quadratic sweep |a|,|b|,|c| <= 30 vs oracle", 10.0, quadratic_sweep},
        {"2 exhaustive monic cubic sweep |b|,|c|,|d| <= 20 vs oracle", 30.0, cubic_sweep},
        {"3 integer-root necessity a(x-r1)(x-r2)", 5.0, necessity},
        {"4 double-root family round trip", 5.0, double_root_round_trip},
        {"5 p-Type 1 family round trip", 2.0, ptype1_round_trip},
        {"6 completing-the-square agreement and parity", 0.0, cross_proof},
        {"7 perfect-power and sum/product lemma suites", 5.0, lemma_suites},
        {"8 errata evidence", 0.0, errata_evidence},
        {"9 parse/format round trip", 5.0, parse_format},
        {"verify path never disagrees with the oracle", 0.0, verify_never_disagrees},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit_s > 0 && secs > c.time_limit_s) {
            o.ok = false;
            o.failures << "    runtime " << secs << " s exceeds " << c.time_limit_s << " s\n";
        }
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << (o.ok ? "PASS" : "FAIL") << "  [" << timing << "]  " << c.name << "  -- " << o.detail
                  << "\n"
                  << o.notes.str() << o.failures.str();
        if (!o.ok) ++failed;
    }
    std::cout << (failed == 0 ? "all acceptance criteria passed" : std::to_string(failed) + " criteria failed")
              << "\n";
    return failed == 0 ? 0 : 1;
}
