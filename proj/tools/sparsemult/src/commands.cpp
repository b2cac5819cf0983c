#include "sparsemult_cli/commands.hpp"

#include "sparsemult/dual_space.hpp"
#include "sparsemult/error.hpp"
#include "sparsemult/multiplicity.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace sparsemult::cli {

namespace {

// Extra draws per oracle trial; trial t starts at seed + t * (max_resamples + 1) so trials never share seeds.
constexpr std::size_t max_resamples = 3;

bool verbose()
{
    const char* v = std::getenv("SPARSEMULT_VERBOSE");
    return v != nullptr && *v != '\0' && std::string(v) != "0";
}

void log(const std::string& msg)
{
    if (verbose()) {
        std::clog << "[sparsemult] " << msg << "\n";
    }
}

template <typename T>
std::optional<T> pick(const std::optional<T>& flag, const std::optional<T>& file)
{
    return flag ? flag : file;
}

Conditions conditions_of(const SupportFamily& family)
{
    const auto r = check_conditions(family);
    return Conditions{r.h1, r.h2, r.h3, r.failing_I};
}

StratumRow row_of(const StratumDescriptor& s)
{
    return StratumRow{s.I, s.J, s.a1, s.a2, s.a3, {}, {}, {}};
}

} // namespace

void cmd_check(const InputDocument& in, const Options&, OutputDocument& doc)
{
    doc.conditions = conditions_of(in.family);
    doc.strata.emplace();
    for (const auto& s : enumerate_strata(in.family)) {
        doc.strata->push_back(row_of(s));
    }
}

void cmd_mult0(const InputDocument& in, const Options& opt, OutputDocument& doc)
{
    doc.conditions = conditions_of(in.family);
    const auto routes = mult0_routes(in.family, pick(opt.M, in.M));
    doc.command.M = routes.M;
    // mult0_routes throws on disagreement, so reaching this point means every route agrees.
    doc.mult0 = Mult0Section{routes.M, routes.refined, routes.by_name(), true};
}

void cmd_census(const InputDocument& in, const Options&, OutputDocument& doc)
{
    doc.conditions = conditions_of(in.family);
    const auto report = census(in.family);
    doc.strata.emplace();
    for (const auto& r : report.strata) {
        auto row = row_of(r.stratum);
        row.count = r.count;
        row.multiplicity = r.multiplicity;
        row.routes = r.routes;
        doc.strata->push_back(std::move(row));
    }
    doc.totals = Totals{report.torus_count, report.sm, report.mv_A0, report.total_with_multiplicity};
}

bool cmd_verify(const InputDocument& in, const Options& opt, OutputDocument& doc)
{
    doc.conditions = conditions_of(in.family);
    const auto routes = mult0_routes(in.family, pick(opt.M, in.M));
    doc.command.M = routes.M;
    doc.mult0 = Mult0Section{routes.M, routes.refined, routes.by_name(), true};

    OracleSection sec;
    sec.seed = pick(opt.seed, in.seed).value_or(0);
    sec.bound = pick(opt.bound, in.bound).value_or(default_bound);
    sec.kmax = pick(opt.kmax, in.kmax).value_or(kmax_for(routes.refined));
    doc.command.seed = sec.seed;
    doc.command.bound = sec.bound;
    doc.command.kmax = sec.kmax;
    doc.command.trials = opt.trials;
    sec.all_match = true;
    for (std::size_t t = 0; t < opt.trials; ++t) {
        OracleTrial trial;
        trial.seed = sec.seed + t * (max_resamples + 1);
        trial.expected = routes.refined;
        try {
            const auto check =
                check_origin_multiplicity(in.family, routes.refined, trial.seed, sec.bound, sec.kmax, max_resamples);
            trial.seeds = check.seeds;
            trial.observed = check.observed;
            trial.match = check.match;
        } catch (const StabilizationError& e) {
            trial.seeds = {trial.seed};
            trial.error = e.what();
        }
        log("trial seed " + std::to_string(trial.seed) + (trial.match ? " match" : " mismatch"));
        sec.all_match = sec.all_match && trial.match;
        sec.trials.push_back(std::move(trial));
    }
    const bool ok = sec.all_match;
    doc.oracle = std::move(sec);
    return ok;
}

OutputDocument execute(const std::string& command, const InputDocument& in, const Options& opt)
{
    OutputDocument doc;
    doc.version = version;
    doc.command.name = command;
    doc.command.format = opt.format;
    doc.command.M = pick(opt.M, in.M);
    doc.input = in;
    const auto start = std::chrono::steady_clock::now();
    try {
        if (command == "check") {
            cmd_check(in, opt, doc);
        } else if (command == "mult0") {
            cmd_mult0(in, opt, doc);
        } else if (command == "census") {
            cmd_census(in, opt, doc);
        } else if (command == "verify") {
            if (!cmd_verify(in, opt, doc)) {
                doc.status = {exit_mismatch, "oracle disagrees with the computed multiplicity"};
            }
        } else {
            throw InputError("unknown command " + command);
        }
    } catch (const InputError& e) {
        doc.status = {exit_input, e.what()};
    } catch (const ConditionError& e) {
        doc.status = {exit_condition, e.what()};
    } catch (const StabilizationError& e) {
        doc.status = {exit_mismatch, e.what()};
    } catch (const Error& e) {
        doc.status = {exit_invariant, e.what()};
    }
    log(command + " finished in " +
        std::to_string(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()) + " s");
    return doc;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Isolated zeros and multiplicities of generic sparse polynomial systems", "sparsemult"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("sparsemult ") + version);

    Options opt;
    std::string path = "-";
    const std::vector<std::pair<std::string, std::string>> commands{
        {"check", "Report H1/H2/H3 and the strata of the family"},
        {"mult0", "Origin multiplicity along every route"},
        {"census", "Zero count and multiplicity for every stratum"},
        {"verify", "Compare the origin multiplicity against the dual-space oracle"},
    };
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("input", path, "Input JSON file, - for stdin")->capture_default_str();
        sub->add_option("--M", opt.M, "Augmentation bound")->check(CLI::PositiveNumber);
        sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "table"}));
        if (name == "verify") {
            sub->add_option("--seed", opt.seed, "First coefficient seed");
            sub->add_option("--bound", opt.bound, "Coefficients are drawn from [-bound, bound]")
                ->check(CLI::PositiveNumber);
            sub->add_option("--trials", opt.trials, "Number of random instances")->capture_default_str();
            sub->add_option("--kmax", opt.kmax, "Largest order of the multiplicity matrices");
        }
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForVersion&) {
        out << "sparsemult " << version << "\n";
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "sparsemult: " << e.what() << "\n";
        return exit_input;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    InputDocument input{SupportFamily({PointSet{{1}}}), {}, {}, {}, {}};
    try {
        nlohmann::json j;
        if (path == "-") {
            j = nlohmann::json::parse(in);
        } else {
            std::ifstream file(path);
            if (!file) {
                throw InputError("cannot open " + path);
            }
            j = nlohmann::json::parse(file);
        }
        input = parse_input(j);
    } catch (const nlohmann::json::exception& e) {
        err << "sparsemult: invalid JSON: " << e.what() << "\n";
        return exit_input;
    } catch (const Error& e) {
        err << "sparsemult: " << e.what() << "\n";
        return exit_input;
    }

    const auto doc = execute(command, input, opt);
    out << (opt.format == "table" ? render_table(doc) : dump(to_json(doc)));
    if (doc.status.error) {
        err << "sparsemult: " << *doc.status.error << "\n";
    }
    return doc.status.exit_code;
}

} // namespace sparsemult::cli
