#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <string_view>
#include <type_traits>

#include "introots/errors.hpp"

namespace introots {

/// Exact signed 128-bit integer. Every arithmetic operator either returns the
/// exact result or throws OverflowError; nothing wraps.
class Integer {
public:
    __extension__ using rep_type = __int128;
    __extension__ using urep_type = unsigned __int128;

    constexpr Integer() noexcept = default;

    template <class T>
        requires(std::is_integral_v<T> && !std::is_same_v<T, bool> && sizeof(T) <= 8)
    constexpr Integer(T v) noexcept : value_(static_cast<rep_type>(v)) {}

    static constexpr Integer from_rep(rep_type v) noexcept {
        Integer r;
        r.value_ = v;
        return r;
    }

    static constexpr Integer max() noexcept {
        return from_rep(std::numeric_limits<rep_type>::max());
    }
    static constexpr Integer min() noexcept {
        return from_rep(std::numeric_limits<rep_type>::min());
    }

    /// Parses an optionally signed decimal literal.
    static Integer parse(std::string_view text);

    [[nodiscard]] constexpr rep_type rep() const noexcept { return value_; }

    [[nodiscard]] constexpr bool is_zero() const noexcept { return value_ == 0; }
    [[nodiscard]] constexpr bool is_negative() const noexcept { return value_ < 0; }
    [[nodiscard]] constexpr bool is_even() const noexcept { return (value_ & 1) == 0; }
    [[nodiscard]] constexpr int sign() const noexcept {
        return value_ > 0 ? 1 : (value_ < 0 ? -1 : 0);
    }

    [[nodiscard]] bool fits_int64() const noexcept {
        return value_ >= std::numeric_limits<std::int64_t>::min() &&
               value_ <= std::numeric_limits<std::int64_t>::max();
    }
    [[nodiscard]] std::int64_t to_int64() const;

    /// Magnitude as unsigned; total, since |min()| fits in 128 unsigned bits.
    [[nodiscard]] constexpr urep_type magnitude() const noexcept {
        return value_ < 0 ? urep_type(0) - static_cast<urep_type>(value_)
                          : static_cast<urep_type>(value_);
    }

    [[nodiscard]] std::string to_string() const;

    friend constexpr bool operator==(Integer a, Integer b) noexcept {
        return a.value_ == b.value_;
    }
    friend constexpr std::strong_ordering operator<=>(Integer a, Integer b) noexcept {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (a.value_ > b.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend Integer operator+(Integer a, Integer b) {
        rep_type r;
        if (__builtin_add_overflow(a.value_, b.value_, &r)) overflow("addition");
        return from_rep(r);
    }
    friend Integer operator-(Integer a, Integer b) {
        rep_type r;
        if (__builtin_sub_overflow(a.value_, b.value_, &r)) overflow("subtraction");
        return from_rep(r);
    }
    friend Integer operator*(Integer a, Integer b) {
        rep_type r;
        if (__builtin_mul_overflow(a.value_, b.value_, &r)) overflow("multiplication");
        return from_rep(r);
    }
    /// Truncating division, like the built-in operator.
    friend Integer operator/(Integer a, Integer b) {
        check_division(a, b);
        return from_rep(a.value_ / b.value_);
    }
    friend Integer operator%(Integer a, Integer b) {
        check_division(a, b);
        return from_rep(a.value_ % b.value_);
    }
    Integer operator-() const {
        if (value_ == std::numeric_limits<rep_type>::min()) overflow("negation");
        return from_rep(-value_);
    }

    Integer& operator+=(Integer o) { return *this = *this + o; }
    Integer& operator-=(Integer o) { return *this = *this - o; }
    Integer& operator*=(Integer o) { return *this = *this * o; }
    Integer& operator/=(Integer o) { return *this = *this / o; }
    Integer& operator%=(Integer o) { return *this = *this % o; }

private:
    [[noreturn]] static void overflow(const char* what);
    static void check_division(Integer a, Integer b);

    rep_type value_ = 0;
};

[[nodiscard]] Integer abs(Integer v);

std::ostream& operator<<(std::ostream& os, Integer v);

}  // namespace introots
