#include "introots/polytext.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace introots {

ParseError::ParseError(const std::string& message, std::size_t position)
    : DomainError(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[nodiscard]] bool done() const { return pos_ >= text_.size(); }
    [[nodiscard]] std::size_t pos() const { return pos_; }
    [[nodiscard]] char peek() const { return done() ? '\0' : text_[pos_]; }
    [[nodiscard]] bool at_digit() const {
        return !done() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    bool accept(char ch) {
        if (peek() != ch) return false;
        ++pos_;
        return true;
    }

    // Returns +1 / -1 on a sign token, 0 otherwise.
    int accept_sign() {
        if (accept('+')) return 1;
        if (accept('-')) return -1;
        if (text_.substr(pos_, kUnicodeMinus.size()) == kUnicodeMinus) {
            pos_ += kUnicodeMinus.size();
            return -1;
        }
        return 0;
    }

    Integer digits() {
        const std::size_t start = pos_;
        while (at_digit()) ++pos_;
        try {
            return Integer::parse(text_.substr(start, pos_ - start));
        } catch (const OverflowError&) {
            throw ParseError("integer literal out of range", start);
        }
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

PolyCoeffs finish(std::vector<Integer> coeffs, int highest, std::size_t end) {
    if (highest < 1) throw ParseError("polynomial must have degree at least 1", end);
    coeffs.resize(static_cast<std::size_t>(highest) + 1);
    if (coeffs.back().is_zero())
        throw ParseError("leading coefficient cancels to zero", end);
    return PolyCoeffs(std::move(coeffs));
}

PolyCoeffs parse_list(std::string_view text, int max_degree) {
    Scanner s(text);
    s.skip_space();
    s.accept('[');
    std::vector<Integer> descending;
    for (;;) {
        s.skip_space();
        const int sign = s.accept_sign();
        s.skip_space();
        if (!s.at_digit()) s.fail("expected an integer coefficient");
        Integer v = s.digits();
        descending.push_back(sign < 0 ? -v : v);
        s.skip_space();
        if (s.accept(',')) continue;
        if (s.accept(']')) break;
        s.fail("expected ',' or ']'");
    }
    s.skip_space();
    if (!s.done()) s.fail("unexpected trailing input");
    const int degree = static_cast<int>(descending.size()) - 1;
    if (degree > max_degree) throw ParseError("degree exceeds " + std::to_string(max_degree), 0);
    std::reverse(descending.begin(), descending.end());
    return finish(std::move(descending), degree, s.pos());
}

}  // namespace

PolyCoeffs parse_poly(std::string_view text, int max_degree) {
    Scanner s(text);
    std::vector<Integer> coeffs(static_cast<std::size_t>(max_degree) + 1, Integer(0));
    int highest = -1;

    s.skip_space();
    if (s.done()) s.fail("empty polynomial");
    bool first = true;
    while (true) {
        s.skip_space();
        int sign = s.accept_sign();
        if (sign == 0) {
            if (!first) s.fail("expected '+' or '-'");
            sign = 1;
        }
        first = false;
        s.skip_space();

        Integer coef{1};
        bool has_coef = false;
        if (s.at_digit()) {
            coef = s.digits();
            has_coef = true;
            s.skip_space();
        }
        const bool star = has_coef && s.accept('*');
        if (star) s.skip_space();

        int exponent = 0;
        if (s.accept('x')) {
            exponent = 1;
            s.skip_space();
            if (s.accept('^')) {
                s.skip_space();
                if (!s.at_digit()) s.fail("expected exponent");
                const std::size_t at = s.pos();
                const Integer e = s.digits();
                if (e > Integer(max_degree))
                    throw ParseError("exponent exceeds " + std::to_string(max_degree), at);
                exponent = static_cast<int>(e.to_int64());
            }
        } else if (!has_coef || star) {
            s.fail(star ? "expected 'x' after '*'" : "expected a term");
        }

        auto& slot = coeffs[static_cast<std::size_t>(exponent)];
        slot = sign < 0 ? slot - coef : slot + coef;
        highest = std::max(highest, exponent);

        s.skip_space();
        if (s.done()) break;
    }
    return finish(std::move(coeffs), highest, s.pos());
}

PolyCoeffs parse_source(std::string_view text, int max_degree) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '[') return parse_list(text, max_degree);
    return parse_poly(text, max_degree);
}

std::string format_poly(const PolyCoeffs& p) {
    std::string out;
    const auto& c = p.coefficients();
    for (int i = p.degree(); i >= 0; --i) {
        const Integer v = c[static_cast<std::size_t>(i)];
        if (v.is_zero()) continue;
        if (out.empty()) {
            if (v.is_negative()) out += '-';
        } else {
            out += v.is_negative() ? " - " : " + ";
        }
        std::string mag = v.to_string();
        if (mag.front() == '-') mag.erase(0, 1);
        if (i == 0 || mag != "1") out += mag;
        if (i >= 1) out += 'x';
        if (i >= 2) out += '^' + std::to_string(i);
    }
    return out;
}

}  // namespace introots
