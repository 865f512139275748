#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "poincare/acceptance.hpp"
#include "poincare/format.hpp"

using nlohmann::json;
using namespace poincare;

namespace {

enum Exit { ok = 0, usage = 1, computation = 2, mismatch = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Settings {
    std::vector<int> d;
    std::vector<int> m;
    int i = 0;
    std::string format = "text";
    std::optional<int> verify;
    std::optional<int> order;
    std::string output;
    bool omit_order_factor = false;
};

std::string convention(bool omit)
{
    return omit ? "operand numerator (1 - mu^-2) omitted (debug; not the corrected pipeline)"
                : "operand numerator (1 - mu^-2) included";
}

json report_json(const std::string& name, const OracleReport& r)
{
    json j{{"name", name}, {"checked", r.checked}, {"mismatches", r.mismatches}, {"passed", r.passed()}};
    if (!r.passed()) {
        j["first_mismatch"] = r.first_mismatch;
    }
    return j;
}

std::string report_line(const std::string& name, int order, const OracleReport& r)
{
    std::string line = name + " to total degree " + std::to_string(order) + ": " + (r.passed() ? "PASS" : "FAIL") +
                       " (" + std::to_string(r.checked) + " coefficients";
    if (!r.passed()) {
        line += ", " + std::to_string(r.mismatches) + " mismatches, first " + r.first_mismatch;
    }
    return line + ")";
}

Multidegree multidegree(const std::vector<int>& d)
{
    try {
        return Multidegree(d);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

// Returns the document and whether every verification passed.
std::pair<json, bool> series_command(const std::string& command, const Settings& s)
{
    const Multidegree d = multidegree(s.d);
    if (s.verify && *s.verify < 0) {
        throw UsageError("--verify needs a nonnegative order");
    }
    PipelineOptions options;
    options.include_order_factor = !s.omit_order_factor;
    const bool cov = command == "covariants";
    const RationalSeriesForm form = cov ? poincare_covariants(d, options) : poincare_invariants(d, options);

    json doc;
    doc["query"] = {{"command", command}, {"d", s.d}, {"format", s.format}};
    doc["query"]["verify"] = s.verify ? json(*s.verify) : json(nullptr);
    if (s.omit_order_factor) {
        doc["query"]["omit_order_factor"] = true;
    }
    doc["result"] = result_json(form);
    bool passed = true;
    if (!s.verify) {
        doc["verification"] = nullptr;
        return {doc, passed};
    }
    const auto ms = multidegrees_of_total_degree(d.size(), *s.verify);
    json checks = json::array();
    const OracleReport main = cov ? verify_covariants(d, form, ms, true) : verify_invariants(d, form, ms);
    checks.push_back(report_json("oracle agreement", main));
    passed = main.passed();
    if (cov && s.d == std::vector<int>{2, 2}) {
        // Informational: which reading of the printed (2,2) series is right.
        checks.push_back(report_json("printed form", verify_covariants(d, parse_form(printed_c22().text, 2), ms)));
        checks.push_back(
            report_json("symmetrized printed form", verify_covariants(d, parse_form(symmetrized_c22().text, 2), ms)));
    }
    doc["verification"] = {
        {"convention", convention(s.omit_order_factor)}, {"order", *s.verify}, {"checks", checks}, {"passed", passed}};
    return {doc, passed};
}

std::string render_series(const json& doc, const std::string& format)
{
    if (format == "json") {
        return doc.dump(2) + '\n';
    }
    const bool latex = format == "latex";
    std::ostringstream out;
    out << doc["result"][latex ? "latex" : "text"].get<std::string>() << '\n';
    const auto& v = doc["verification"];
    if (v.is_null()) {
        return out.str();
    }
    const std::string prefix = latex ? "% " : "";
    out << prefix << "convention: " << v["convention"].get<std::string>() << '\n';
    for (const auto& c : v["checks"]) {
        OracleReport r;
        r.checked = c["checked"];
        r.mismatches = c["mismatches"];
        r.first_mismatch = c.value("first_mismatch", "");
        out << prefix << report_line(c["name"].get<std::string>(), v["order"].get<int>(), r) << '\n';
    }
    return out.str();
}

std::pair<json, bool> dimension_command(const Settings& s)
{
    const Multidegree d = multidegree(s.d);
    if (s.m.size() != d.size()) {
        throw UsageError("-m must have one entry per form");
    }
    if (s.i < 0) {
        throw UsageError("-i must be nonnegative");
    }
    std::optional<DimensionQuery> q;
    try {
        q.emplace(d, s.m, s.i);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const Integer w0 = omega_count(*q);
    const Integer w2 = omega_count(DimensionQuery(d, s.m, s.i + 2));
    const Integer dim = dim_covariants(*q);
    const Integer extracted = dim_via_extraction(*q);
    const bool agree = dim == extracted;
    json doc;
    doc["query"] = {{"command", "dimension"}, {"d", s.d}, {"m", s.m}, {"i", s.i}, {"format", s.format}};
    doc["result"] = {{"omega_i", w0.str()},
                     {"omega_i_plus_2", w2.str()},
                     {"dimension", dim.str()},
                     {"dimension_by_extraction", extracted.str()}};
    doc["verification"] = {{"oracles_agree", agree}};
    return {doc, agree};
}

std::string render_dimension(const json& doc, const std::string& format)
{
    if (format == "json") {
        return doc.dump(2) + '\n';
    }
    const auto& r = doc["result"];
    std::ostringstream out;
    out << "omega(m;i)   " << r["omega_i"].get<std::string>() << '\n'
        << "omega(m;i+2) " << r["omega_i_plus_2"].get<std::string>() << '\n'
        << "dimension    " << r["dimension"].get<std::string>() << '\n'
        << "extraction   " << r["dimension_by_extraction"].get<std::string>() << '\n'
        << "oracles agree: " << (doc["verification"]["oracles_agree"].get<bool>() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

int selftest_command(const Settings& s, std::ostream& out)
{
    AcceptanceOptions options;
    options.pipeline.include_order_factor = !s.omit_order_factor;
    if (s.order) {
        if (*s.order < 1) {
            throw UsageError("--order must be positive");
        }
        options.order_cap = *s.order;
    }
    out << "convention: " << convention(s.omit_order_factor) << '\n';
    bool passed = true;
    run_acceptance(options, [&](const CriterionResult& r) {
        out << summary_line(r) << '\n';
        for (const auto& line : r.details) {
            out << "      " << line << '\n';
        }
        out.flush();
        passed = passed && r.passed;
    });
    return passed ? ok : mismatch;
}

void emit(const std::string& text, const std::string& path)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f || !(f << text)) {
        throw std::runtime_error("cannot write " + path);
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Poincare series of joint covariants and invariants of binary forms"};
    app.require_subcommand(1);
    Settings s;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-d,--degrees", s.d, "form degrees, e.g. 1,2")
            ->delimiter(',')
            ->required()
            ->check(CLI::Range(1, 1000));
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--format", s.format, "text, latex or json")
            ->check(CLI::IsMember({"text", "latex", "json"}));
        sub->add_option("--output", s.output, "write the document here instead of standard output");
    };

    auto* cov = app.add_subcommand("covariants", "series of the joint covariants in z1..zn, t");
    auto* inv = app.add_subcommand("invariants", "series of the joint invariants in z1..zn");
    for (auto* sub : {cov, inv}) {
        add_common(sub);
        add_output(sub);
        sub->add_option("--verify", s.verify, "compare with the dimension oracle up to this total degree");
        sub->add_flag("--omit-order-factor", s.omit_order_factor, "debug: drop the (1 - mu^-2) numerator");
    }

    auto* dim = app.add_subcommand("dimension", "dimension of one graded piece by both oracles");
    add_common(dim);
    dim->add_option("-m,--multidegree", s.m, "multidegree, e.g. 1,1")->delimiter(',')->required();
    dim->add_option("-i,--order", s.i, "covariant order")->required();
    dim->add_option("--format", s.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    dim->add_option("--output", s.output, "write the document here instead of standard output");

    auto* self = app.add_subcommand("selftest", "run the acceptance suite");
    self->add_option("--order", s.order, "cap every series order and weight bound");
    self->add_flag("--omit-order-factor", s.omit_order_factor, "debug: drop the (1 - mu^-2) numerator");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        if (self->parsed()) {
            if (s.output.empty()) {
                return selftest_command(s, std::cout);
            }
            std::ostringstream out;
            int code = selftest_command(s, out);
            emit(out.str(), s.output);
            return code;
        }
        if (dim->parsed()) {
            auto [doc, agree] = dimension_command(s);
            emit(render_dimension(doc, s.format), s.output);
            return agree ? ok : mismatch;
        }
        const std::string command = cov->parsed() ? "covariants" : "invariants";
        auto [doc, passed] = series_command(command, s);
        emit(render_series(doc, s.format), s.output);
        return passed ? ok : mismatch;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return computation;
    }
}
