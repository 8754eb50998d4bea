// Command-line front end: construct functions from specs, run single checks,
// run the seeded verification suite, estimate validity radii, and hunt
// sharpness witnesses. Exit codes are the machine contract:
//   0  every check Holds          2  some check Fails
//   3  some check Inconclusive   64  usage error
//  65  malformed function spec   70  internal error
// Reports stream to stdout as JSON lines; CSV summaries are versioned.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "majorant/radius.hpp"
#include "majorant/runner.hpp"
#include "majorant/suite.hpp"

namespace {

using majorant::CheckRequest;
using majorant::FunctionSpec;
using majorant::Verdict;

const std::map<std::string, std::vector<std::string>>& theorem_roles() {
    static const std::map<std::string, std::vector<std::string>> roles = {
        {"bohr", {"f"}},
        {"rogosinski", {"f"}},
        {"norm-axioms", {"f", "g"}},
        {"schwarz-majorant", {"phi"}},
        {"subordination", {"h", "phi"}},
        {"general-subordination", {"h", "g", "phi"}},
        {"quasi-subordination", {"h", "psi", "phi"}},
        {"von-neumann", {"h", "phi"}},
        {"section-powers", {"phi"}},
        {"section-sup", {"h", "phi"}},
        {"section-majorant", {"h", "phi"}},
        {"debranges", {"h", "phi"}},
    };
    return roles;
}

// A spec argument is either inline grammar or @file holding a grammar string
// or a JSON function description.
FunctionSpec load_spec(const std::string& argument) {
    if (argument.empty() || argument.front() != '@')
        return FunctionSpec::parse(argument);
    const std::string path = argument.substr(1);
    std::ifstream in(path);
    if (!in)
        throw majorant::FunctionSpecError("cannot open spec file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        throw majorant::FunctionSpecError("spec file '" + path + "' is empty");
    const auto last = text.find_last_not_of(" \t\r\n");
    text = text.substr(first, last - first + 1);
    if (text.front() == '{') {
        try {
            return nlohmann::json::parse(text).get<FunctionSpec>();
        } catch (const nlohmann::json::exception& e) {
            throw majorant::FunctionSpecError("spec file '" + path + "': " + e.what());
        }
    }
    return FunctionSpec::parse(text);
}

struct CommonFlags {
    std::string function;
    std::string h;
    std::string g;
    std::string phi;
    std::string psi;
    int k = 0;
    int j = 1;
    double b = 1.0;
    double rho = 1.0;
    double sup_bound = 1.0;
    std::string alpha = "1";
    std::string mode = "majorant";
    int degree = majorant::kDefaultDegree;
    int samples = 4096;
    double tol = 1e-10;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->set_help_flag("--help", "print help");  // frees -h / --h for the outer function
    cmd->add_option("-f,--function", flags.function,
                    "function spec for single-function checks (role f or phi)");
    cmd->add_option("--h", flags.h, "outer function spec");
    cmd->add_option("--g", flags.g, "multiplier spec (general subordination / norm axioms)");
    cmd->add_option("--phi", flags.phi, "inner Schwarz function spec");
    cmd->add_option("--psi", flags.psi, "quasi-subordination multiplier spec");
    cmd->add_option("-k,--k", flags.k, "section index");
    cmd->add_option("-j,--j", flags.j, "power of the inner function");
    cmd->add_option("-b,--b", flags.b, "bound for |g| on the rho-disk");
    cmd->add_option("--rho", flags.rho, "radius of the disk where |g| <= b");
    cmd->add_option("--sup-bound", flags.sup_bound, "asserted sup bound for |f| on the disk");
    cmd->add_option("--alpha", flags.alpha, "scalar for the homogeneity axiom (complex)");
    cmd->add_option("--mode", flags.mode, "debranges mode: sup or majorant")
        ->check(CLI::IsMember({"sup", "majorant"}));
    cmd->add_option("-N,--degree", flags.degree, "truncation degree")->check(CLI::PositiveNumber);
    cmd->add_option("-m,--samples", flags.samples, "circle sample count")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--tol", flags.tol, "verdict tolerance")->check(CLI::PositiveNumber);
}

CheckRequest build_request(const std::string& theorem, const CommonFlags& flags) {
    const auto it = theorem_roles().find(theorem);
    if (it == theorem_roles().end())
        throw std::invalid_argument("unknown theorem '" + theorem + "' (see --help for names)");

    CheckRequest request;
    request.theorem = theorem;
    request.k = flags.k;
    request.j = flags.j;
    request.b = flags.b;
    request.rho = flags.rho;
    request.sup_bound = flags.sup_bound;
    request.alpha = majorant::parse_complex(flags.alpha);
    request.mode = flags.mode == "sup" ? majorant::SectionBoundMode::Sup
                                       : majorant::SectionBoundMode::Majorant;
    request.degree = flags.degree;
    request.samples = flags.samples;
    request.tol = flags.tol;

    std::map<std::string, std::string> provided;
    if (!flags.h.empty())
        provided["h"] = flags.h;
    if (!flags.g.empty())
        provided["g"] = flags.g;
    if (!flags.phi.empty())
        provided["phi"] = flags.phi;
    if (!flags.psi.empty())
        provided["psi"] = flags.psi;
    if (!flags.function.empty()) {
        const auto& required = it->second;
        const std::string role =
            std::find(required.begin(), required.end(), "f") != required.end() ? "f" : "phi";
        provided.try_emplace(role, flags.function);
    }
    if (theorem == "debranges")
        provided.try_emplace("h", "koebe");

    for (const auto& role : it->second) {
        const auto found = provided.find(role);
        if (found == provided.end())
            throw std::invalid_argument("theorem '" + theorem + "' needs a '" + role +
                                        "' function (use --" + (role == "f" ? "function" : role) +
                                        ")");
        request.functions[role] = load_spec(found->second);
    }
    return request;
}

int exit_code_for(long fails, long inconclusive) {
    if (fails > 0)
        return 2;
    if (inconclusive > 0)
        return 3;
    return 0;
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << contents;
}

int cmd_verify(const std::string& theorem, const CommonFlags& flags,
               const std::vector<double>& radii, const std::string& witness_path,
               const std::string& csv_path) {
    CheckRequest request;
    std::vector<double> rs = radii;
    if (!witness_path.empty()) {
        std::ifstream in(witness_path);
        if (!in)
            throw majorant::FunctionSpecError("cannot open witness file '" + witness_path + "'");
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw majorant::FunctionSpecError("witness file: " + std::string(e.what()));
        }
        if (j.contains("witness"))
            j = j.at("witness");  // full report accepted too
        request = CheckRequest::from_witness(j);
        if (rs.empty())
            rs.push_back(j.at("r").get<double>());
    } else {
        request = build_request(theorem, flags);
        if (rs.empty())
            throw std::invalid_argument("verify needs at least one --r");
    }

    long fails = 0;
    long inconclusive = 0;
    std::string csv = "theorem,r,verdict,margin\n";
    for (const double r : rs) {
        const auto report = request.run(r);
        nlohmann::json line = report;
        line["witness"]["r"] = r;
        line["schema_version"] = 1;
        std::cout << line.dump() << "\n";
        csv += request.theorem + "," + majorant::format_double(r) + "," +
               majorant::to_string(report.verdict) + "," + majorant::format_double(report.margin) +
               "\n";
        if (report.verdict == Verdict::Fails)
            ++fails;
        if (report.verdict == Verdict::Inconclusive)
            ++inconclusive;
    }
    if (!csv_path.empty())
        write_file(csv_path, csv);
    return exit_code_for(fails, inconclusive);
}

int cmd_suite(const majorant::SuiteConfig& config, const std::string& out_path) {
    const auto result = majorant::run_suite(config);
    const std::string csv = majorant::suite_csv(result);
    if (out_path.empty())
        std::cout << csv;
    else
        write_file(out_path, csv);
    std::cerr << "suite: " << result.total << " checks, " << result.fails << " fails, "
              << result.inconclusive << " inconclusive\n";
    for (const auto& failure : result.failures)
        std::cerr << "  fail: " << failure.report.witness.dump() << "\n";
    return result.fails > 0 ? 2 : 0;
}

int cmd_radius(const std::string& theorem, const CommonFlags& flags,
               const majorant::RadiusSearchConfig& config, const std::string& witness_out) {
    const auto request = build_request(theorem, flags);
    const auto result = majorant::validity_radius(majorant::make_radius_predicate(request), config);
    nlohmann::json out = result;
    out["schema_version"] = 1;
    std::cout << out.dump() << "\n";
    if (result.first_failure_witness && !witness_out.empty())
        write_file(witness_out, result.first_failure_witness->dump(2) + "\n");
    return 0;
}

int cmd_sharpness(const std::string& theorem, const CommonFlags& flags, double r,
                  const majorant::SharpnessSearchConfig& config) {
    auto request = build_request(theorem, flags);
    const auto& required = theorem_roles().at(theorem);
    const std::string role =
        std::find(required.begin(), required.end(), "f") != required.end() ? "f" : "phi";
    const auto witness = majorant::sharpness_search(
        majorant::make_moebius_family(request, role, r), config);
    nlohmann::json out{{"found", witness.has_value()}, {"family", "moebius"}, {"r", r},
                       {"schema_version", 1}};
    if (witness) {
        out["parameter"] = witness->parameter;
        out["margin"] = witness->report.margin;
        out["report"] = witness->report;
    }
    std::cout << out.dump() << "\n";
    return witness ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified checks for coefficient-majorant inequalities of bounded "
                 "analytic functions"};
    app.require_subcommand(1);

    std::string theorem;
    CommonFlags flags;
    std::vector<double> radii;
    std::string witness_path;
    std::string csv_path;

    auto* verify = app.add_subcommand("verify", "run one named check at one or more radii");
    verify->add_option("theorem", theorem, "check name")->required(false);
    add_common_flags(verify, flags);
    verify->add_option("-r,--r", radii, "radius (repeatable)");
    verify->add_option("--witness", witness_path, "replay a serialized witness file");
    verify->add_option("--csv", csv_path, "write a CSV summary (theorem,r,verdict,margin)");

    majorant::SuiteConfig suite_config;
    std::string suite_out;
    auto* suite = app.add_subcommand("suite", "run the seeded verification suite");
    suite->add_option("--seed", suite_config.seed, "suite seed");
    suite->add_option("--pairs", suite_config.pairs, "number of generated cases")
        ->check(CLI::PositiveNumber);
    suite->add_option("-N,--degree", suite_config.degree, "truncation degree")
        ->check(CLI::PositiveNumber);
    suite->add_option("-m,--samples", suite_config.samples, "circle sample count")
        ->check(CLI::PositiveNumber);
    suite->add_option("--tol", suite_config.tol, "verdict tolerance")->check(CLI::PositiveNumber);
    suite->add_option("--r-extra", suite_config.extra_radii,
                      "additional radius appended to every check (repeatable)");
    suite->add_option("-o,--out", suite_out, "CSV output path (default stdout)");

    majorant::RadiusSearchConfig radius_config;
    std::string radius_witness_out = "radius_witness.json";
    auto* radius = app.add_subcommand("radius", "bracket the validity radius of a check");
    radius->add_option("theorem", theorem, "check name")->required();
    add_common_flags(radius, flags);
    radius->add_option("--r-max", radius_config.r_max, "scan upper end");
    radius->add_option("--grid", radius_config.grid, "scan grid size");
    radius->add_option("--bisect-tol", radius_config.bisect_tol, "bisection width target");
    radius->add_option("--witness-out", radius_witness_out,
                       "failure witness file (empty to skip)");

    majorant::SharpnessSearchConfig sharp_config;
    double sharp_r = 0.35;
    auto* sharpness =
        app.add_subcommand("sharpness", "scan the Moebius family for a failing witness");
    sharpness->add_option("theorem", theorem, "check name")->required();
    add_common_flags(sharpness, flags);
    sharpness->add_option("-r,--r", sharp_r, "radius to test at")->required();
    sharpness->add_option("--param-lo", sharp_config.param_lo, "family parameter lower end");
    sharpness->add_option("--param-hi", sharp_config.param_hi, "family parameter upper end");
    sharpness->add_option("--param-grid", sharp_config.param_grid, "number of grid steps")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 64;
    }

    try {
        if (verify->parsed()) {
            if (theorem.empty() && witness_path.empty())
                throw std::invalid_argument("verify needs a theorem name or --witness");
            return cmd_verify(theorem, flags, radii, witness_path, csv_path);
        }
        if (suite->parsed())
            return cmd_suite(suite_config, suite_out);
        if (radius->parsed())
            return cmd_radius(theorem, flags, radius_config, radius_witness_out);
        if (sharpness->parsed())
            return cmd_sharpness(theorem, flags, sharp_r, sharp_config);
    } catch (const majorant::FunctionSpecError& e) {
        std::cerr << "spec error: " << e.what() << "\n";
        return 65;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 64;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 70;
    }
    return 64;
}
