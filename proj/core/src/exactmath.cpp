#include "introots/exactmath.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <ostream>

namespace introots {

namespace {

using urep = Integer::urep_type;

Integer from_magnitude(urep m) {
    if (m > static_cast<urep>(Integer::max().rep()))
        throw OverflowError("integer overflow: magnitude exceeds 128-bit signed range");
    return Integer::from_rep(static_cast<Integer::rep_type>(m));
}

int bit_width(urep v) {
    const auto hi = static_cast<std::uint64_t>(v >> 64);
    if (hi != 0) return 64 + std::bit_width(hi);
    return std::bit_width(static_cast<std::uint64_t>(v));
}

urep isqrt_unsigned(urep n) {
    if (n < 2) return n;
    // x0 = 2^ceil(bits/2) >= sqrt(n); Newton decreases monotonically from above.
    urep x = urep(1) << ((bit_width(n) + 1) / 2);
    urep y = (x + n / x) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    while (x * x > n) --x;
    return x;
}

// Compares r^n against b without overflowing: -1, 0 or +1.
int compare_power(urep r, unsigned n, urep b) {
    urep acc = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (r != 0 && acc > b / r) return 1;
        acc *= r;
    }
    return acc < b ? -1 : (acc == b ? 0 : 1);
}

bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t f = 3; f <= p / f; f += 2)
        if (p % f == 0) return false;
    return true;
}

}  // namespace

Integer gcd(Integer a, Integer b) {
    urep x = a.magnitude();
    urep y = b.magnitude();
    while (y != 0) {
        const urep t = x % y;
        x = y;
        y = t;
    }
    return from_magnitude(x);
}

Integer isqrt(Integer n) {
    if (n.is_negative()) throw DomainError("isqrt of a negative integer");
    return from_magnitude(isqrt_unsigned(n.magnitude()));
}

std::optional<Integer> as_perfect_square(Integer n) {
    if (n.is_negative()) return std::nullopt;
    const urep s = isqrt_unsigned(n.magnitude());
    if (s * s != n.magnitude()) return std::nullopt;
    return from_magnitude(s);
}

std::optional<Integer> as_perfect_nth_power(Integer b, Integer n) {
    if (b < Integer(1)) throw DomainError("perfect power test needs b >= 1");
    if (n < Integer(1)) throw DomainError("perfect power test needs n >= 1");
    if (b == Integer(1)) return Integer(1);
    const urep target = b.magnitude();
    const int width = bit_width(target);
    // r >= 2 implies r^n >= 2^n, so n >= width leaves only b == 1.
    if (n >= Integer(width)) return std::nullopt;
    const auto exp = static_cast<unsigned>(n.rep());

    urep lo = 1;
    urep hi = std::min<urep>(target, urep(1) << (width / exp + 1));
    while (lo <= hi) {
        const urep mid = lo + (hi - lo) / 2;
        const int cmp = compare_power(mid, exp, target);
        if (cmp == 0) return from_magnitude(mid);
        if (cmp < 0)
            lo = mid + 1;
        else
            hi = mid - 1;
    }
    return std::nullopt;
}

bool divides(Integer d, Integer n) {
    if (d.is_zero()) throw DomainError("divisibility by zero is undefined");
    return n.magnitude() % d.magnitude() == 0;
}

std::vector<Integer> divisors(Integer n) {
    if (n.is_zero()) throw DomainError("zero has infinitely many divisors");
    urep m = n.magnitude();

    std::vector<std::pair<urep, int>> factors;
    auto take = [&](urep f) {
        int e = 0;
        while (m % f == 0) {
            m /= f;
            ++e;
        }
        if (e > 0) factors.emplace_back(f, e);
    };
    take(2);
    urep f = 3;
    for (; f <= m / f && m > std::numeric_limits<std::uint64_t>::max(); f += 2) take(f);
    if (m <= std::numeric_limits<std::uint64_t>::max()) {
        // Remaining cofactor fits 64 bits; finish there, it is much faster.
        auto m64 = static_cast<std::uint64_t>(m);
        for (auto g = static_cast<std::uint64_t>(f); g <= m64 / g; g += 2) {
            if (m64 % g != 0) continue;
            int e = 0;
            while (m64 % g == 0) {
                m64 /= g;
                ++e;
            }
            factors.emplace_back(g, e);
        }
        m = m64;
    }
    if (m > 1) factors.emplace_back(m, 1);

    std::vector<urep> out{1};
    for (const auto& [p, e] : factors) {
        const std::size_t base = out.size();
        urep pk = 1;
        for (int i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    std::vector<Integer> result;
    result.reserve(out.size());
    for (urep d : out) result.push_back(from_magnitude(d));
    return result;
}

bool is_prime(Integer p) {
    if (p < Integer(2)) return false;
    if (p.fits_int64()) return is_prime_u64(static_cast<std::uint64_t>(p.to_int64()));
    const urep v = p.magnitude();
    if (v % 2 == 0) return false;
    for (urep f = 3; f <= v / f; f += 2)
        if (v % f == 0) return false;
    return true;
}

Integer floor_mod(Integer a, Integer m) {
    if (m <= Integer(0)) throw DomainError("floor_mod needs a positive modulus");
    Integer r = a % m;
    return r.is_negative() ? r + m : r;
}

Integer exact_quotient(Integer n, Integer d) {
    INTROOTS_ENSURE(!d.is_zero() && divides(d, n),
                    "expected exact division of " + n.to_string() + " by " + d.to_string());
    return n / d;
}

Integer pow(Integer base, unsigned exp) {
    Integer acc{1};
    for (unsigned i = 0; i < exp; ++i) acc *= base;
    return acc;
}

Rational make_rational(Integer num, Integer den) {
    if (den.is_zero()) throw DomainError("rational with zero denominator");
    if (num.is_zero()) return Rational{};
    const Integer g = gcd(num, den);
    num = num / g;
    den = den / g;
    if (den.is_negative()) {
        num = -num;
        den = -den;
    }
    Rational r;
    r.num_ = num;
    r.den_ = den;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    const Integer g = gcd(a.den_, b.den_);
    return make_rational(a.num_ * (b.den_ / g) + b.num_ * (a.den_ / g), a.den_ * (b.den_ / g));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    // Cross-cancel first to keep intermediates small.
    const Integer g1 = gcd(a.num_, b.den_);
    const Integer g2 = gcd(b.num_, a.den_);
    const Integer n1 = g1.is_zero() ? a.num_ : a.num_ / g1;
    const Integer d2 = g1.is_zero() ? b.den_ : b.den_ / g1;
    const Integer n2 = g2.is_zero() ? b.num_ : b.num_ / g2;
    const Integer d1 = g2.is_zero() ? a.den_ : a.den_ / g2;
    return make_rational(n1 * n2, d1 * d2);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_.is_zero()) throw DomainError("rational division by zero");
    return a * make_rational(b.den_, b.num_);
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -num_;
    return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::string Rational::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

std::pair<Rational, Rational> rational_sum_product(const Rational& r1, const Rational& r2) {
    return {r1 + r2, r1 * r2};
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace introots
