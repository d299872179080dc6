#include "introots/families.hpp"

#include <string>

#include "introots/exactmath.hpp"

namespace introots {

namespace {

const Integer kTwo{2};
const Integer kThree{3};

// Sign of (a, b) per group, indexed by group - 1.
constexpr int kLeadSign[4] = {+1, -1, -1, +1};
constexpr int kLinearSign[4] = {+1, +1, -1, -1};

[[noreturn]] void reject(const std::string& why) { throw DomainError(why); }

}  // namespace

PType1Member gen_p_type1(const PType1Spec& params) {
    if (params.group < 1 || params.group > 4) reject("p-Type 1 group must be 1..4");
    if (!is_prime(params.p)) reject("p-Type 1 needs a prime p, got " + params.p.to_string());
    if (params.T < Integer(1) || params.T.is_even())
        reject("p-Type 1 needs an odd positive T, got " + params.T.to_string());

    const auto g = static_cast<std::size_t>(params.group - 1);
    const Integer a = params.p * Integer(kLeadSign[g]);
    const Integer b = params.p * Integer(kLinearSign[g]);
    // T odd => T^2 = 1 (mod 8), so the division is exact.
    const Integer c = a * exact_quotient(Integer(1) - params.T * params.T, Integer(4));
    const QuadraticPoly poly(a, b, c);

    // Roots of x^2 + sx + (1 - T^2)/4 with s = b/a = +-1 are (-s +- T)/2.
    const Integer s = b / a;
    RootPair roots{(-s - params.T) / kTwo, (-s + params.T) / kTwo};

    const QuadraticVerdict check = classify_quadratic(poly);
    INTROOTS_ENSURE(check.all_integer && *check.roots == roots,
                    "generated p-Type 1 trinomial does not have the expected roots");
    INTROOTS_ENSURE(discriminant(poly) == (params.p * params.T) * (params.p * params.T),
                    "p-Type 1 discriminant must equal (pT)^2");
    return {poly, roots};
}

std::optional<PType1Spec> classify_p_type1(const QuadraticPoly& q) {
    if (abs(q.a) <= Integer(1)) return std::nullopt;
    const Integer p = abs(q.b);
    if (!is_prime(p)) return std::nullopt;
    const QuadraticVerdict v = classify_quadratic(q);
    if (!v.all_integer) return std::nullopt;

    // a | b with |b| prime and |a| > 1 leaves |a| = p.
    INTROOTS_ENSURE(abs(q.a) == p, "p-Type 1 trinomial must have |a| = p");
    const Integer k = *as_perfect_square(discriminant(q));
    const Integer T = exact_quotient(k, p);
    INTROOTS_ENSURE(T >= Integer(1) && !T.is_even(), "p-Type 1 parameter T must be odd and positive");

    const bool a_pos = q.a > Integer(0);
    const bool b_pos = q.b > Integer(0);
    int group = 0;
    if (a_pos && b_pos) group = 1;
    else if (!a_pos && b_pos) group = 2;
    else if (!a_pos && !b_pos) group = 3;
    else group = 4;
    return PType1Spec{p, T, group};
}

bool validate_double_root_member(const CubicPoly& poly, Integer M, Integer N) {
    return M != N && kTwo * M + N == -poly.b && M * M + kTwo * M * N == poly.c &&
           M * M * N == -poly.d;
}

DoubleRootMember gen_double_root_family(const DoubleRootSpec& params) {
    Integer b, c, M;
    if (params.group == 1 || params.group == 2) {
        const Integer& bb = params.base;
        const Integer& k = params.offset;
        if (divides(kThree, bb)) reject("groups 1-2 need b not divisible by 3");
        if (k <= Integer(0) || !k.is_even() || divides(kThree, k))
            reject("groups 1-2 need k even, positive and not divisible by 3");
        const bool congruent = floor_mod(bb - k, kThree).is_zero();
        if (congruent != (params.group == 1))
            reject(params.group == 1 ? "group 1 needs b = k (mod 3)" : "group 2 needs b != k (mod 3)");
        b = bb;
        c = exact_quotient(Integer(4) * bb * bb - k * k, Integer(12));
        M = params.group == 1 ? exact_quotient(-(kTwo * bb + k), Integer(6))
                            : exact_quotient(-kTwo * bb + k, Integer(6));
    } else if (params.group == 3 || params.group == 4) {
        const Integer& B = params.base;
        const Integer& t = params.offset;
        if (t < Integer(1)) reject("groups 3-4 need t >= 1");
        b = kThree * B;
        c = kThree * (B * B - t * t);
        M = params.group == 3 ? -B + t : -(B + t);
    } else {
        reject("double-root group must be 1..4");
    }

    const Integer N = -b - kTwo * M;
    INTROOTS_ENSURE(M != N, "double-root family member degenerated to a triple root");
    const CubicPoly poly{b, c, -(M * M * N)};
    if (!validate_double_root_member(poly, M, N))
        reject("parameters do not produce a valid double-root cubic");

    const auto back = classify_double_root(poly);
    INTROOTS_ENSURE(back && back->M == M && back->N == N && back->group == params.group &&
                        back->k_or_t == params.offset,
                    "generated cubic does not classify back to its parameters");
    return {poly, M, N};
}

}  // namespace introots
