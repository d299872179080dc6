#include "polytool/report.hpp"

#include <algorithm>
#include <ostream>

#include "introots/cubic.hpp"
#include "introots/exactmath.hpp"
#include "introots/families.hpp"
#include "introots/polytext.hpp"
#include "introots/quadratic.hpp"

namespace polytool {

using namespace introots;

namespace {

constexpr const char* kNoteRootOne =
    "root-one-condition: 1 is a root iff b + c + d = -1 (not +1); cofactor x^2 + (b + 1)x - d";
constexpr const char* kNoteRootMinusOne =
    "root-minus-one-roots: the roots besides -1 are (1 - b +- k)/2, not (b - 1 +- k)/2";
constexpr const char* kNoteGroup3 =
    "double-root-group3: the double root is M = -B + t, not -(B + t)";
constexpr const char* kNoteGroup12 =
    "double-root-group12: with k = 2*sqrt(b^2 - 3c), c = (4b^2 - k^2)/12; c = (b^2 - k^2)/3 admits no member";
constexpr const char* kNotePType1 =
    "ptype1-constant: groups 2-3 have c = a(1 - T^2)/4 = -p(1 - T^2)/4; +p(1 - T^2)/4 gives a negative discriminant";

void analyze_linear(const PolyCoeffs& p, ToolReport& r) {
    if (divides(p[1], p[0])) {
        r.verdict = "AllInteger";
        r.reason = "Success";
        r.roots = std::vector<Integer>{-(p[0] / p[1])};
    } else {
        r.verdict = "NotAllInteger";
        r.reason = "LeadingDoesNotDivideAll";
    }
}

void analyze_quadratic(const PolyCoeffs& p, ToolReport& r) {
    const QuadraticPoly q(p[2], p[1], p[0]);
    const QuadraticVerdict v = classify_quadratic(q);
    r.verdict = v.all_integer ? "AllInteger" : "NotAllInteger";
    r.reason = std::string(to_string(v.reason));
    if (!v.all_integer) return;

    r.roots = std::vector<Integer>(v.roots->begin(), v.roots->end());
    if (roots_via_completion(q) != *v.roots) r.oracle_agrees = false;

    if (auto params = classify_p_type1(q)) {
        nlohmann::ordered_json fam;
        fam["kind"] = "p-type-1";
        fam["p"] = integer_json(params->p);
        fam["T"] = integer_json(params->T);
        fam["group"] = params->group;
        r.family = std::move(fam);
        r.group = params->group;
        if ((params->group == 2 || params->group == 3) && params->T > Integer(1))
            r.errata_notes.emplace_back(kNotePType1);
    }
}

void analyze_cubic(const PolyCoeffs& p, ToolReport& r, std::vector<std::vector<Integer>>& claims) {
    const Integer lead = p[3];
    if (!divides(lead, p[2]) || !divides(lead, p[1]) || !divides(lead, p[0])) {
        // Integer roots force the leading coefficient to divide every other one.
        r.verdict = "NotAllInteger";
        r.reason = "LeadingDoesNotDivideAll";
        return;
    }
    const CubicPoly monic{p[2] / lead, p[1] / lead, p[0] / lead};
    const CubicClassification cls = detect_cubic_pattern(monic);
    const CubicPattern& v = cls.verdict;
    r.verdict = std::string(to_string(v.tag));
    if (v.roots) r.roots = std::vector<Integer>(v.roots->begin(), v.roots->end());

    for (const CubicMatch& m : cls.matches) {
        r.matches.emplace_back(to_string(m.tag));
        claims.emplace_back(m.roots.begin(), m.roots.end());
        switch (m.tag) {
            case CubicTag::RootOne: r.errata_notes.emplace_back(kNoteRootOne); break;
            case CubicTag::RootMinusOne:
                if (monic.b != Integer(1)) r.errata_notes.emplace_back(kNoteRootMinusOne);
                break;
            default: break;
        }
    }

    if (v.tag == CubicTag::DoubleRoot) {
        r.group = *v.group;
        nlohmann::ordered_json fam;
        fam["kind"] = "double-root";
        fam["group"] = *v.group;
        fam["M"] = integer_json(*v.M);
        fam["N"] = integer_json(*v.N);
        if (*v.group <= 2) {
            fam["b"] = integer_json(monic.b);
            fam["k"] = integer_json(*v.k_or_t);
            r.errata_notes.emplace_back(kNoteGroup12);
        } else {
            fam["B"] = integer_json(monic.b / Integer(3));
            fam["t"] = integer_json(*v.k_or_t);
            if (*v.group == 3) r.errata_notes.emplace_back(kNoteGroup3);
        }
        r.family = std::move(fam);
    }
}

std::vector<std::string> oracle_strings(const std::vector<RationalRoot>& roots) {
    std::vector<std::string> out;
    for (const auto& rr : roots)
        for (int i = 0; i < rr.multiplicity; ++i) out.push_back(rr.value.to_string());
    return out;
}

}  // namespace

nlohmann::ordered_json integer_json(const Integer& v) {
    if (v.fits_int64()) return v.to_int64();
    return v.to_string();
}

ToolReport analyze(const PolyCoeffs& p, std::string input) {
    ToolReport r;
    r.input = std::move(input);
    r.canonical = format_poly(p);
    r.degree = p.degree();

    const RootFindings truth = rational_roots(p);
    r.oracle_roots = truth.rational_roots;
    std::optional<std::vector<Integer>> truth_ints;
    if (truth.all_roots_integer) {
        truth_ints.emplace();
        for (const auto& rr : truth.rational_roots)
            truth_ints->insert(truth_ints->end(), static_cast<std::size_t>(rr.multiplicity),
                               rr.value.num());
    }

    std::vector<std::vector<Integer>> claims;
    switch (p.degree()) {
        case 1: analyze_linear(p, r); break;
        case 2: analyze_quadratic(p, r); break;
        case 3: analyze_cubic(p, r, claims); break;
        default:
            r.verdict = truth.all_roots_integer ? "AllInteger" : "NotAllInteger";
            r.reason = "OracleOnly";
            r.roots = truth_ints;
            break;
    }

    if (r.roots != truth_ints) r.oracle_agrees = false;
    for (const auto& c : claims)
        if (!truth_ints || c != *truth_ints) r.oracle_agrees = false;
    return r;
}

nlohmann::ordered_json to_json(const ToolReport& r) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["input"] = r.input;
    j["canonical"] = r.canonical;
    j["degree"] = r.degree;
    j["verdict"] = r.verdict;
    j["reason"] = r.reason ? ordered_json(*r.reason) : ordered_json(nullptr);
    if (r.roots) {
        ordered_json roots = ordered_json::array();
        for (const auto& v : *r.roots) roots.push_back(integer_json(v));
        j["roots"] = std::move(roots);
    } else {
        j["roots"] = nullptr;
    }
    j["matches"] = r.matches;
    j["group"] = r.group ? ordered_json(*r.group) : ordered_json(nullptr);
    j["family"] = r.family ? *r.family : ordered_json(nullptr);
    j["errata_notes"] = r.errata_notes;
    j["oracle_agrees"] = r.oracle_agrees;
    j["oracle_roots"] = oracle_strings(r.oracle_roots);
    return j;
}

void write_human(std::ostream& os, const ToolReport& r) {
    auto join = [](const auto& items) {
        std::string s;
        for (const auto& it : items) {
            if (!s.empty()) s += ", ";
            if constexpr (std::is_same_v<std::decay_t<decltype(it)>, Integer>)
                s += it.to_string();
            else
                s += it;
        }
        return s;
    };

    os << "polynomial: " << r.canonical << "\n";
    os << "degree:     " << r.degree << "\n";
    os << "verdict:    " << r.verdict;
    if (r.reason && *r.reason != "Success") os << " (" << *r.reason << ")";
    os << "\n";
    if (r.roots) os << "roots:      " << join(*r.roots) << "\n";
    if (!r.matches.empty()) os << "matches:    " << join(r.matches) << "\n";
    if (r.family) {
        os << "family:     " << (*r.family)["kind"].get<std::string>();
        for (const auto& [key, value] : r.family->items())
            if (key != "kind") os << " " << key << "=" << value.dump();
        os << "\n";
    }
    const auto oracle = oracle_strings(r.oracle_roots);
    os << "oracle:     rational roots [" << join(oracle) << "] "
       << (r.oracle_agrees ? "(agrees)" : "(DISAGREES)") << "\n";
    for (const auto& note : r.errata_notes) os << "note:       " << note << "\n";
}

}  // namespace polytool
