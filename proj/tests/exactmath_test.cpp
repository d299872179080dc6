#include <random>

#include <gtest/gtest.h>

#include "introots/exactmath.hpp"
#include "introots/oracle.hpp"
#include "support/brute_force.hpp"

using namespace introots;

TEST(Integer, CheckedArithmeticThrowsInsteadOfWrapping) {
    EXPECT_THROW((void)(Integer::max() + Integer(1)), OverflowError);
    EXPECT_THROW((void)(Integer::min() - Integer(1)), OverflowError);
    EXPECT_THROW((void)(Integer::max() * Integer(2)), OverflowError);
    EXPECT_THROW((void)(-Integer::min()), OverflowError);
    EXPECT_THROW((void)(Integer::min() / Integer(-1)), OverflowError);
    EXPECT_THROW((void)(Integer(1) / Integer(0)), DomainError);
    EXPECT_EQ(Integer::max() - Integer::max(), Integer(0));
}

TEST(Integer, ParseAndPrintRoundTripAtTheExtremes) {
    for (const Integer v : {Integer::min(), Integer::max(), Integer(0), Integer(-42)})
        EXPECT_EQ(Integer::parse(v.to_string()), v);
    EXPECT_EQ(Integer::max().to_string(), "170141183460469231731687303715884105727");
    EXPECT_THROW((void)Integer::parse("170141183460469231731687303715884105728"), OverflowError);
    EXPECT_THROW((void)Integer::parse("12a"), DomainError);
    EXPECT_THROW((void)Integer::parse("-"), DomainError);
}

TEST(Gcd, Examples) {
    EXPECT_EQ(gcd(12, 18), Integer(6));
    EXPECT_EQ(gcd(0, 7), Integer(7));
    EXPECT_EQ(gcd(-4, 6), Integer(2));
    EXPECT_EQ(gcd(0, 0), Integer(0));
    EXPECT_THROW((void)gcd(Integer::min(), 0), OverflowError);
}

TEST(Isqrt, Examples) {
    EXPECT_EQ(isqrt(36), Integer(6));
    EXPECT_EQ(isqrt(35), Integer(5));
    EXPECT_EQ(isqrt(0), Integer(0));
    EXPECT_THROW((void)isqrt(-1), DomainError);
    const Integer big = Integer::max();
    const Integer s = isqrt(big);
    EXPECT_LE(s * s, big);
    EXPECT_THROW((void)((s + Integer(1)) * (s + Integer(1))), OverflowError);
}

TEST(Isqrt, FloorPropertyNearSquares) {
    for (std::int64_t r = 0; r < 3000; ++r) {
        const Integer sq = Integer(r) * Integer(r);
        EXPECT_EQ(isqrt(sq), Integer(r));
        if (r > 0) EXPECT_EQ(isqrt(sq - Integer(1)), Integer(r - 1));
    }
    const Integer r{3037000499LL};  // near sqrt(2^63)
    EXPECT_EQ(isqrt(r * r + Integer(2) * r), r);
}

TEST(PerfectSquare, Examples) {
    EXPECT_EQ(as_perfect_square(49), Integer(7));
    EXPECT_EQ(as_perfect_square(-4), std::nullopt);
    EXPECT_EQ(as_perfect_square(48), std::nullopt);
    EXPECT_EQ(as_perfect_square(0), Integer(0));
}

TEST(PerfectSquare, AgreesWithIsqrtUpToOneMillion) {
    for (std::int64_t n = 0; n <= 1'000'000; ++n) {
        const Integer s = isqrt(n);
        ASSERT_EQ(as_perfect_square(n).has_value(), s * s == Integer(n)) << n;
    }
}

TEST(PerfectPower, Examples) {
    EXPECT_EQ(as_perfect_nth_power(27, 3), Integer(3));
    EXPECT_EQ(as_perfect_nth_power(16, 4), Integer(2));
    EXPECT_EQ(as_perfect_nth_power(12, 2), std::nullopt);
    EXPECT_EQ(as_perfect_nth_power(1, 50), Integer(1));
    EXPECT_EQ(as_perfect_nth_power(pow(Integer(2), 126), 126), Integer(2));
    EXPECT_EQ(as_perfect_nth_power(pow(Integer(3), 80), 40), Integer(9));
    EXPECT_THROW((void)as_perfect_nth_power(0, 2), DomainError);
    EXPECT_THROW((void)as_perfect_nth_power(4, 0), DomainError);
}

// A positive integer is an n-th power of a positive rational iff it is an n-th
// power of a positive integer: the rational route asks the oracle for a
// positive rational root of x^n - b.
TEST(PerfectPower, MatchesRationalRouteThroughOracle) {
    for (int n : {2, 3}) {
        for (std::int64_t b = 1; b <= 2000; ++b) {
            std::vector<Integer> coeffs(static_cast<std::size_t>(n) + 1, Integer(0));
            coeffs.front() = -b;
            coeffs.back() = 1;
            const RootFindings f = rational_roots(PolyCoeffs(coeffs));
            bool rational_power = false;
            for (const auto& rr : f.rational_roots)
                if (rr.value > Rational(0)) rational_power = true;
            ASSERT_EQ(as_perfect_nth_power(b, n).has_value(), rational_power) << b << "^(1/" << n << ")";
        }
    }
}

TEST(Divides, Examples) {
    EXPECT_TRUE(divides(3, 12));
    EXPECT_FALSE(divides(-5, 12));
    EXPECT_TRUE(divides(7, 0));
    EXPECT_THROW((void)divides(0, 5), DomainError);
}

TEST(Divisors, Examples) {
    EXPECT_EQ(divisors(12), (std::vector<Integer>{1, 2, 3, 4, 6, 12}));
    EXPECT_EQ(divisors(-6), (std::vector<Integer>{1, 2, 3, 6}));
    EXPECT_EQ(divisors(1), (std::vector<Integer>{1}));
    EXPECT_THROW((void)divisors(0), DomainError);
}

TEST(Divisors, MatchesTrialEnumeration) {
    for (std::int64_t n = 1; n <= 3000; ++n) {
        std::vector<Integer> expected;
        for (std::int64_t d = 1; d <= n; ++d)
            if (n % d == 0) expected.push_back(d);
        ASSERT_EQ(divisors(n), expected) << n;
    }
    EXPECT_EQ(divisors(Integer(1000000000039LL)).size(), 2u);
    // 3^50 * 5 exceeds 64 bits, so factoring starts in 128-bit arithmetic.
    const Integer wide = pow(Integer(3), 50) * Integer(5);
    EXPECT_EQ(divisors(wide).size(), 51u * 2u);
    EXPECT_EQ(divisors(wide).back(), wide);
}

TEST(IsPrime, Examples) {
    EXPECT_TRUE(is_prime(2));
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(91));
    EXPECT_FALSE(is_prime(-7));
    for (std::int64_t p = -5; p <= 2000; ++p) ASSERT_EQ(is_prime(p), brute::trial_prime(p)) << p;
}

TEST(MakeRational, Examples) {
    const Rational half = make_rational(2, 4);
    EXPECT_EQ(half.num(), Integer(1));
    EXPECT_EQ(half.den(), Integer(2));
    const Rational neg = make_rational(3, -6);
    EXPECT_EQ(neg.num(), Integer(-1));
    EXPECT_EQ(neg.den(), Integer(2));
    const Rational zero = make_rational(0, 5);
    EXPECT_EQ(zero.num(), Integer(0));
    EXPECT_EQ(zero.den(), Integer(1));
    EXPECT_THROW((void)make_rational(1, 0), DomainError);
}

TEST(MakeRational, NormalizingIsIdempotent) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> dist(-1000, 1000);
    for (int i = 0; i < 20000; ++i) {
        std::int64_t den = dist(rng);
        if (den == 0) den = 1;
        const Rational r = make_rational(dist(rng), den);
        EXPECT_EQ(make_rational(r.num(), r.den()), r);
        EXPECT_GE(r.den(), Integer(1));
        EXPECT_EQ(gcd(r.num(), r.den()), Integer(1));
    }
}

TEST(RationalSumProduct, Examples) {
    auto check = [](Rational r1, Rational r2, Rational sum, Rational product) {
        const auto [s, p] = rational_sum_product(r1, r2);
        EXPECT_EQ(s, sum);
        EXPECT_EQ(p, product);
    };
    check(make_rational(1, 2), make_rational(3, 2), make_rational(2, 1), make_rational(3, 4));
    check(make_rational(-1, 3), make_rational(1, 3), make_rational(0, 1), make_rational(-1, 9));
    check(make_rational(5, 1), make_rational(2, 1), make_rational(7, 1), make_rational(10, 1));
    EXPECT_THROW((void)rational_sum_product(Rational(Integer::max()), Rational(1)), OverflowError);
}

// Two rationals whose sum and product are integers are integers: every monic
// integer trinomial has only integer rational roots.
TEST(SumProductLemma, MonicTrinomialsHaveNoProperRationalRoots) {
    for (int i = -50; i <= 50; ++i)
        for (int j = -50; j <= 50; ++j) {
            const RootFindings f = rational_roots(PolyCoeffs({j, -i, 1}));
            for (const auto& rr : f.rational_roots) ASSERT_TRUE(rr.value.is_integer()) << i << "," << j;
        }
}

TEST(SumProductLemma, ProperRationalHasNoIntegralPartner) {
    std::mt19937_64 rng(20240917);
    std::uniform_int_distribution<std::int64_t> num(-500, 500);
    std::uniform_int_distribution<std::int64_t> den(2, 500);
    int tested = 0;
    while (tested < 2000) {
        const Rational r1 = make_rational(num(rng), den(rng));
        if (r1.is_integer()) continue;
        ++tested;
        for (int i1 = -20; i1 <= 20; ++i1) {
            const Rational r2 = Rational(i1) - r1;
            ASSERT_FALSE((r1 * r2).is_integer()) << r1 << " and " << r2;
        }
    }
}
