#include "polytool/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "introots/families.hpp"
#include "introots/polytext.hpp"
#include "polytool/report.hpp"

namespace polytool {

using namespace introots;

namespace {

struct Options {
    bool json = false;
    std::string max_abs = "1000000000000000000";
    std::string poly;

    std::string p, T, b, k, B, t;
    int group = 0;

    std::string in_path;
    std::string out_path;
};

void check_bounds(const PolyCoeffs& p, const Integer& max_abs) {
    for (const Integer& c : p.coefficients())
        if (abs(c) > max_abs)
            throw DomainError("coefficient " + c.to_string() + " exceeds --max-abs " +
                              max_abs.to_string());
}

void emit(std::ostream& out, const ToolReport& r, bool json) {
    if (json)
        out << to_json(r).dump() << "\n";
    else
        write_human(out, r);
}

ToolReport report_for(const std::string& text, const Integer& max_abs, int max_degree) {
    const PolyCoeffs p = parse_source(text, max_degree);
    check_bounds(p, max_abs);
    return analyze(p, text);
}

int breach(std::ostream& err, const ToolReport& r) {
    err << "error: fast path and oracle disagree on " << r.canonical << "\n";
    return kExitInvariantBreach;
}

int cmd_classify(const Options& o, const Integer& max_abs, std::ostream& out, std::ostream& err) {
    const ToolReport r = report_for(o.poly, max_abs, 3);
    emit(out, r, o.json);
    return r.oracle_agrees ? kExitOk : breach(err, r);
}

int cmd_roots(const Options& o, const Integer& max_abs, std::ostream& out, std::ostream& err) {
    const ToolReport r = report_for(o.poly, max_abs, 3);
    if (!r.oracle_agrees) return breach(err, r);
    if (o.json) {
        emit(out, r, true);
    } else if (r.roots) {
        for (std::size_t i = 0; i < r.roots->size(); ++i)
            out << (i ? " " : "") << (*r.roots)[i];
        out << "\n";
    } else {
        out << "NotAllInteger";
        if (r.reason) out << " (" << *r.reason << ")";
        out << "; oracle rational roots: ";
        bool first = true;
        for (const auto& rr : r.oracle_roots)
            for (int i = 0; i < rr.multiplicity; ++i) {
                out << (first ? "" : ", ") << rr.value;
                first = false;
            }
        if (first) out << "none";
        out << "\n";
    }
    return r.roots ? kExitOk : kExitNotAllInteger;
}

int cmd_verify(const Options& o, const Integer& max_abs, std::ostream& out, std::ostream& err) {
    const ToolReport r = report_for(o.poly, max_abs, kMaxParseDegree);
    emit(out, r, o.json);
    return r.oracle_agrees ? kExitOk : breach(err, r);
}

int cmd_gen_ptype1(const Options& o, const Integer& max_abs, std::ostream& out, std::ostream& err) {
    const PType1Spec params{Integer::parse(o.p), Integer::parse(o.T), o.group};
    const PType1Member m = gen_p_type1(params);
    const PolyCoeffs p({m.poly.c, m.poly.b, m.poly.a});
    check_bounds(p, max_abs);
    const ToolReport r = analyze(p, format_poly(p));
    emit(out, r, o.json);
    return r.oracle_agrees ? kExitOk : breach(err, r);
}

int cmd_gen_cubic(const Options& o, const Integer& max_abs, std::ostream& out, std::ostream& err) {
    DoubleRootSpec params{o.group, Integer{}, Integer{}};
    if (o.group == 1 || o.group == 2) {
        if (o.b.empty() || o.k.empty()) throw DomainError("groups 1-2 need --b and --k");
        params.base = Integer::parse(o.b);
        params.offset = Integer::parse(o.k);
    } else {
        if (o.B.empty() || o.t.empty()) throw DomainError("groups 3-4 need --B and --t");
        params.base = Integer::parse(o.B);
        params.offset = Integer::parse(o.t);
    }
    const DoubleRootMember m = gen_double_root_family(params);
    const PolyCoeffs p = m.poly.to_coeffs();
    check_bounds(p, max_abs);
    const ToolReport r = analyze(p, format_poly(p));
    emit(out, r, o.json);
    return r.oracle_agrees ? kExitOk : breach(err, r);
}

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

int cmd_batch(const Options& o, const Integer& max_abs, std::ostream& err) {
    std::ifstream in(o.in_path);
    if (!in) throw DomainError("cannot open input file " + o.in_path);
    std::ofstream out(o.out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw DomainError("cannot open output file " + o.out_path);

    int status = kExitOk;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string text = trim(line);
        if (text.empty() || text.front() == '#') continue;
        try {
            const ToolReport r = report_for(text, max_abs, 3);
            if (!r.oracle_agrees) status = breach(err, r);
            out << to_json(r).dump() << "\n";
        } catch (const InvariantError& e) {
            throw;
        } catch (const std::exception& e) {
            nlohmann::ordered_json j;
            j["input"] = text;
            j["canonical"] = nullptr;
            j["degree"] = nullptr;
            j["verdict"] = "Error";
            j["reason"] = e.what();
            j["roots"] = nullptr;
            j["matches"] = nlohmann::ordered_json::array();
            j["group"] = nullptr;
            j["family"] = nullptr;
            j["errata_notes"] = nlohmann::ordered_json::array();
            j["oracle_agrees"] = nullptr;
            j["oracle_roots"] = nlohmann::ordered_json::array();
            out << j.dump() << "\n";
            err << o.in_path << ":" << line_no << ": " << e.what() << "\n";
        }
    }
    return status;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact integer-root classification for quadratics and cubics", "polytool"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", o.json, "Emit JSON instead of human-readable text");
    app.add_option("--max-abs", o.max_abs, "Reject coefficients larger than this in magnitude");

    auto* classify = app.add_subcommand("classify", "Classify a polynomial of degree 1 to 3");
    classify->add_option("poly", o.poly, "Polynomial text or [coefficient, ...] list")->required();

    auto* roots = app.add_subcommand("roots", "Print integer roots (exit 1 if not all integer)");
    roots->add_option("poly", o.poly, "Polynomial text or [coefficient, ...] list")->required();

    auto* verify = app.add_subcommand("verify", "Compare the fast path with the oracle");
    verify->add_option("poly", o.poly, "Polynomial text or [coefficient, ...] list")->required();

    auto* generate = app.add_subcommand("generate", "Generate a family member");
    generate->require_subcommand(1);
    generate->fallthrough();
    auto* ptype1 = generate->add_subcommand("ptype1", "p-Type 1 quadratic trinomial");
    ptype1->add_option("--p", o.p, "Prime p")->required();
    ptype1->add_option("--T", o.T, "Odd positive T")->required();
    ptype1->add_option("--group", o.group, "Group 1-4")->required()->check(CLI::Range(1, 4));
    auto* cubic = generate->add_subcommand("cubic-double", "Monic cubic (x - M)^2 (x - N)");
    cubic->add_option("--group", o.group, "Group 1-4")->required()->check(CLI::Range(1, 4));
    cubic->add_option("--b", o.b, "Groups 1-2: linear coefficient b");
    cubic->add_option("--k", o.k, "Groups 1-2: even parameter k");
    cubic->add_option("--B", o.B, "Groups 3-4: b / 3");
    cubic->add_option("--t", o.t, "Groups 3-4: positive parameter t");

    auto* batch = app.add_subcommand("batch", "Classify one polynomial per line into JSON lines");
    batch->add_option("--in", o.in_path, "Input file")->required();
    batch->add_option("--out", o.out_path, "Output file")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        const Integer max_abs = Integer::parse(o.max_abs);
        if (max_abs.is_negative()) throw DomainError("--max-abs must be nonnegative");
        if (*classify) return cmd_classify(o, max_abs, out, err);
        if (*roots) return cmd_roots(o, max_abs, out, err);
        if (*verify) return cmd_verify(o, max_abs, out, err);
        if (*ptype1) return cmd_gen_ptype1(o, max_abs, out, err);
        if (*cubic) return cmd_gen_cubic(o, max_abs, out, err);
        if (*batch) return cmd_batch(o, max_abs, err);
    } catch (const InvariantError& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInvariantBreach;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace polytool
