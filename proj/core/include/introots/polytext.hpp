#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "introots/errors.hpp"
#include "introots/oracle.hpp"

namespace introots {

/// Syntax error with the byte offset where parsing stopped.
class ParseError : public DomainError {
public:
    ParseError(const std::string& message, std::size_t position);

    [[nodiscard]] std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

inline constexpr int kMaxParseDegree = 8;

/// Parses a polynomial in x such as "x^3 - 3x^2 + 3*x - 1".
///
/// Terms are `[coef][*]x[^exp]` or bare integers joined by + and -, with
/// whitespace allowed between tokens. A missing coefficient means 1 and
/// repeated exponents are summed. U+2212 is accepted as a minus sign.
/// Rejects degree-0 input and a highest written term that cancels to zero.
[[nodiscard]] PolyCoeffs parse_poly(std::string_view text, int max_degree = kMaxParseDegree);

/// Like parse_poly, but also accepts a bracketed coefficient list in
/// descending order, e.g. "[1, -5, 6]".
[[nodiscard]] PolyCoeffs parse_source(std::string_view text, int max_degree = kMaxParseDegree);

/// Canonical text: descending powers, zero terms dropped, unit coefficients
/// suppressed, "x" for x^1. parse_poly(format_poly(p)) == p.
[[nodiscard]] std::string format_poly(const PolyCoeffs& p);

}  // namespace introots
