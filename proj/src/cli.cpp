#include "grouplin/cli.hpp"

#include <CLI11.hpp>

#include <sstream>

#include "grouplin/io.hpp"
#include "grouplin/repro.hpp"
#include "grouplin/suite.hpp"

namespace grouplin {

using nlohmann::json;

namespace {

struct MeasureArgs {
    std::string file;
    std::string realization = "unitary";
    double tolerance = kBentTolerance;
};

struct SearchArgs {
    std::string domain;
    std::string codomain;
    std::vector<std::string> objectives;
    bool random = false;
    std::uint64_t samples = 10000;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    std::string checkpoint;
    std::string format = "json";
    double tolerance = 1e-6;
    std::string realization = "auto";
    bool no_reduction = false;
    bool no_timing = false;
};

struct ReproArgs {
    std::string target;
    unsigned workers = 1;
    std::string format = "json";
};

struct VerifyArgs {
    std::string target;
    std::uint64_t seed = 1;
    std::size_t samples = 8;
    bool inject_fault = false;
};

struct IrrepsArgs {
    std::string spec;
    std::string realization = "unitary";
};

std::string csv_number(const std::optional<double>& v) {
    if (!v) return "";
    std::ostringstream s;
    s.precision(10);
    s << *v;
    return s.str();
}

int cmd_measure(const MeasureArgs& a, std::ostream& out) {
    const FunctionTable f = load_function_file(a.file);
    const Realization realization = parse_realization(a.realization);
    const auto dual = irreps_of(direct_product(f.domain(), f.codomain()), realization);
    json j = to_json(measure(f, *dual, a.tolerance));
    j["domain"] = f.domain()->name();
    j["codomain"] = f.codomain()->name();
    j["images"] = std::vector<Element>(f.images().begin(), f.images().end());
    out << j.dump(2) << '\n';
    return kExitOk;
}

int cmd_search(const SearchArgs& a, std::ostream& out) {
    SearchSpec spec;
    spec.domain = a.domain;
    spec.codomain = a.codomain;
    if (a.objectives.empty()) {
        spec.objectives = {Objective::min_apn_sum, Objective::min_spectral_sum,
                           Objective::min_max_nonlinearity};
    } else {
        spec.objectives.clear();
        for (const auto& o : a.objectives) spec.objectives.insert(parse_objective(o));
    }
    if (a.realization == "auto") {
        // Sums and maxima default to the integral S3 basis; bentness needs the unitary one.
        spec.realization = spec.objectives.count(Objective::find_bent) ? Realization::unitary
                                                                      : Realization::tabulated;
    } else {
        spec.realization = parse_realization(a.realization);
    }
    if (a.random) spec.random = RandomMode{a.samples, a.seed};
    spec.reduction = !a.no_reduction;
    spec.workers = a.workers;
    spec.tolerance = a.tolerance;
    if (!a.checkpoint.empty()) spec.checkpoint = a.checkpoint;

    const SearchReport r = run_search(spec);
    if (a.format == "csv") {
        out << "K,N,min_spectral_sum,min_max_nonlinearity,min_apn_sum\n";
        std::optional<double> sum, max, apn;
        if (r.min_spectral_sum) sum = r.min_spectral_sum->value;
        if (r.min_max_nonlinearity) max = r.min_max_nonlinearity->value;
        if (r.min_apn_sum) apn = static_cast<double>(r.min_apn_sum->value);
        out << r.domain << ',' << r.codomain << ',' << csv_number(sum) << ',' << csv_number(max)
            << ',' << csv_number(apn) << '\n';
    } else {
        out << to_json(r, !a.no_timing).dump(2) << '\n';
    }
    return kExitOk;
}

int cmd_repro(const ReproArgs& a, std::ostream& out) {
    const ReproResult r = run_repro(a.target, a.workers);
    if (a.format == "csv")
        out << to_csv(r);
    else
        out << to_json(r).dump(2) << '\n';
    return r.passed() ? kExitOk : kExitVerification;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    SuiteOptions options;
    options.seed = a.seed;
    options.samples = a.samples;
    std::vector<std::string> specs;
    if (a.target == "all")
        specs = verify_catalogue();
    else
        specs.push_back(a.target);

    json reports = json::array();
    bool ok = true;
    for (const auto& s : specs) {
        const GroupPtr g = parse_group_spec(s);
        SuiteReport r = a.inject_fault
                            ? run_suite(corrupt_irrep(*irreps_of(g, Realization::unitary)), options)
                            : run_suite(g, options);
        ok = ok && r.passed();
        reports.push_back(to_json(r));
    }
    out << json{{"passed", ok}, {"groups", reports}}.dump(2) << '\n';
    return ok ? kExitOk : kExitVerification;
}

int cmd_irreps(const IrrepsArgs& a, std::ostream& out) {
    const GroupPtr g = parse_group_spec(a.spec);
    out << irreps_to_json(*irreps_of(g, parse_realization(a.realization))).dump(2) << '\n';
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Differential and spectral nonlinearity of functions between finite groups",
                 "grouplin"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"json", "csv"};
    const std::vector<std::string> realizations{"unitary", "tabulated"};

    MeasureArgs m;
    auto* measure_cmd = app.add_subcommand("measure", "Measure one function given as a JSON file");
    measure_cmd->add_option("file", m.file, "Function file {domain, codomain, images}")->required();
    measure_cmd->add_option("--realization", m.realization)->check(CLI::IsMember(realizations));
    measure_cmd->add_option("--tolerance", m.tolerance, "Bentness tolerance");

    SearchArgs s;
    auto* search_cmd = app.add_subcommand("search", "Search all functions K -> N");
    search_cmd->add_option("--domain", s.domain)->required();
    search_cmd->add_option("--codomain", s.codomain)->required();
    search_cmd->add_option("--objective", s.objectives,
                           "min_apn_sum|min_spectral_sum|min_max_nonlinearity|find_bent|coincidence");
    search_cmd->add_flag("--random", s.random, "Sample instead of enumerating");
    search_cmd->add_option("--samples", s.samples);
    search_cmd->add_option("--seed", s.seed);
    search_cmd->add_option("--workers", s.workers)->check(CLI::PositiveNumber);
    search_cmd->add_option("--checkpoint", s.checkpoint);
    search_cmd->add_option("--format", s.format)->check(CLI::IsMember(formats));
    search_cmd->add_option("--tolerance", s.tolerance);
    search_cmd->add_option("--realization", s.realization,
                           "unitary|tabulated; default picks tabulated unless searching for bent functions")
        ->check(CLI::IsMember({"auto", "unitary", "tabulated"}));
    search_cmd->add_flag("--no-reduction", s.no_reduction, "Do not pin f(1) = 1");
    search_cmd->add_flag("--no-timing", s.no_timing, "Omit wall_time from the report");

    ReproArgs r;
    auto* repro_cmd = app.add_subcommand("repro", "Rerun a reference table and compare");
    repro_cmd->add_option("target", r.target, "table1|table2|bent-s3")
        ->required()
        ->check(CLI::IsMember({"table1", "table2", "bent-s3"}));
    repro_cmd->add_option("--workers", r.workers)->check(CLI::PositiveNumber);
    repro_cmd->add_option("--format", r.format)->check(CLI::IsMember(formats));

    VerifyArgs v;
    auto* verify_cmd = app.add_subcommand("verify", "Check irreps and Fourier identities");
    verify_cmd->add_option("target", v.target, "group spec or 'all'")->required();
    verify_cmd->add_option("--seed", v.seed);
    verify_cmd->add_option("--samples", v.samples);
    verify_cmd->add_flag("--inject-fault", v.inject_fault)->group("");

    IrrepsArgs ir;
    auto* irreps_cmd = app.add_subcommand("irreps", "Dump dims and character table");
    irreps_cmd->add_option("spec", ir.spec)->required();
    irreps_cmd->add_option("--realization", ir.realization)->check(CLI::IsMember(realizations));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }

    try {
        if (*measure_cmd) return cmd_measure(m, out);
        if (*search_cmd) return cmd_search(s, out);
        if (*repro_cmd) return cmd_repro(r, out);
        if (*verify_cmd) return cmd_verify(v, out);
        if (*irreps_cmd) return cmd_irreps(ir, out);
    } catch (const SpaceTooLarge& e) {
        err << "error: " << e.what() << "; rerun with --random --samples N\n";
        return kExitSpaceGuard;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return kExitValidation;
}

}  // namespace grouplin
