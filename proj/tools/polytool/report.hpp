#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "introots/integer.hpp"
#include "introots/oracle.hpp"

namespace polytool {

using introots::Integer;
using introots::PolyCoeffs;

/// One analysed polynomial: fast-path verdict next to the oracle's findings.
struct ToolReport {
    std::string input;
    std::string canonical;
    int degree = 0;
    std::string verdict;
    std::optional<std::string> reason;
    std::optional<std::vector<Integer>> roots;
    std::vector<std::string> matches;
    std::optional<int> group;
    std::optional<nlohmann::ordered_json> family;
    std::vector<std::string> errata_notes;
    bool oracle_agrees = true;
    std::vector<introots::RationalRoot> oracle_roots;

    [[nodiscard]] bool all_integer() const { return roots.has_value(); }
};

/// Classifies `p` by degree (linear, quadratic, cubic; the oracle alone above
/// degree 3) and compares the result with the oracle. Never throws on
/// disagreement; check `oracle_agrees`.
[[nodiscard]] ToolReport analyze(const PolyCoeffs& p, std::string input);

/// Emits numbers as JSON integers when they fit in 64 bits, else as strings.
[[nodiscard]] nlohmann::ordered_json integer_json(const Integer& v);

[[nodiscard]] nlohmann::ordered_json to_json(const ToolReport& report);

void write_human(std::ostream& os, const ToolReport& report);

}  // namespace polytool
