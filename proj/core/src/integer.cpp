#include "introots/integer.hpp"

#include <algorithm>
#include <ostream>

namespace introots {

void Integer::overflow(const char* what) {
    throw OverflowError(std::string("integer overflow in ") + what);
}

void Integer::check_division(Integer a, Integer b) {
    if (b.value_ == 0) throw DomainError("division by zero");
    if (b.value_ == -1 && a.value_ == std::numeric_limits<rep_type>::min()) overflow("division");
}

Integer Integer::parse(std::string_view text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size()) throw DomainError("expected digits in integer literal");

    // Accumulate toward the negative side so that min() parses.
    rep_type acc = 0;
    for (; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch < '0' || ch > '9')
            throw DomainError("invalid character in integer literal: '" + std::string(1, ch) + "'");
        if (__builtin_mul_overflow(acc, rep_type(10), &acc) ||
            __builtin_sub_overflow(acc, rep_type(ch - '0'), &acc))
            overflow("integer literal");
    }
    if (!negative) {
        if (acc == std::numeric_limits<rep_type>::min()) overflow("integer literal");
        acc = -acc;
    }
    return from_rep(acc);
}

std::int64_t Integer::to_int64() const {
    if (!fits_int64()) overflow("narrowing to int64");
    return static_cast<std::int64_t>(value_);
}

std::string Integer::to_string() const {
    if (value_ == 0) return "0";
    urep_type m = magnitude();
    std::string out;
    while (m != 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(m % 10)));
        m /= 10;
    }
    if (value_ < 0) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

Integer abs(Integer v) { return v.is_negative() ? -v : v; }

std::ostream& operator<<(std::ostream& os, Integer v) { return os << v.to_string(); }

}  // namespace introots
