#include "reconf/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "reconf/dsr.hpp"
#include "reconf/gadget.hpp"
#include "reconf/generators.hpp"
#include "reconf/isr_degenerate.hpp"
#include "reconf/report.hpp"

using nlohmann::json;

namespace reconf::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string read_input(const RunConfig& config, std::size_t which, std::istream& in) {
    if (which >= config.inputs.size() || config.inputs[which] == "-") return read_all(in);
    std::ifstream f(config.inputs[which]);
    if (!f) throw DataError("cannot open " + config.inputs[which]);
    return read_all(f);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f || !(f << text)) throw DataError("cannot write " + path);
}

void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
    if (config.out_path) write_text(*config.out_path, text);
    else out << text;
}

json ids(const VertexSet& s) {
    json a = json::array();
    for (Vertex v : s) a.push_back(v + 1);
    return a;
}

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::yes: return kExitOk;
        case Verdict::no: return kExitNo;
        case Verdict::exhausted: return kExitUnknown;
    }
    return kExitInternal;
}

json dsr_diagnostics_json(const DsrDiagnostics& d) {
    json j{{"core_size", d.core_size}, {"core_fallback", d.core_fallback}};
    if (d.d) j["d"] = *d.d;
    if (d.core_within_dkd) j["core_within_dkd"] = *d.core_within_dkd;
    if (d.biclique_free) j["biclique_free"] = *d.biclique_free;
    if (d.kernel_bound) j["kernel_bound"] = *d.kernel_bound;
    if (d.kernel_within_bound) j["kernel_within_bound"] = *d.kernel_within_bound;
    if (d.twinless_within_bound) j["twinless_within_bound"] = *d.twinless_within_bound;
    return j;
}

void reject_dsr_strategy(const RunConfig& config, const Instance& inst) {
    if (inst.problem == Problem::dsr &&
        (config.strategy == Strategy::degenerate || config.strategy == Strategy::quasiwide))
        throw UsageError("strategy applies to ISR instances only");
}

int do_solve(const RunConfig& config, std::istream& in, std::ostream& out) {
    const Instance inst = parse_instance(read_input(config, 0, in));
    reject_dsr_strategy(config, inst);
    if (config.strategy == Strategy::quasiwide) validate_params(config.quasiwide, inst.k);

    const auto start = std::chrono::steady_clock::now();
    SolveResult result;
    json diagnostics;
    if (config.strategy == Strategy::oracle) {
        result = {bfs_reconfig(inst, config.state_budget), {}, inst};
    } else if (inst.problem == Problem::dsr) {
        DsrDiagnostics diag;
        result = solve_dsr(inst, config.state_budget, config.d, &diag);
        diagnostics = dsr_diagnostics_json(diag);
    } else if (config.strategy == Strategy::quasiwide) {
        QuasiWideStats stats;
        result = solve_isr_quasiwide(inst, config.quasiwide, config.state_budget, &stats);
        diagnostics = {{"search_nodes", stats.search_nodes}, {"budget_events", stats.budget_events}};
    } else {
        auto kernel = kernelize_degenerate(inst);
        diagnostics = {{"d", kernel.d}, {"low_degree_bound", kernel.low_degree_bound},
                       {"kernel_bound", kernel.kernel_bound}};
        result = {bfs_reconfig(kernel.kernel, config.state_budget), std::move(kernel.log), std::move(kernel.kernel)};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    Report report = make_report(result.outcome, result.kernel.graph, result.log, ms);
    report.diagnostics = diagnostics;
    emit(config, out, serialize_report(report));
    return verdict_exit(result.outcome.verdict);
}

int do_kernelize(const RunConfig& config, std::istream& in, std::ostream& out) {
    const Instance inst = parse_instance(read_input(config, 0, in));
    reject_dsr_strategy(config, inst);
    Instance kernel;
    ReductionLog log;
    if (inst.problem == Problem::dsr) {
        std::tie(kernel, log) = remove_core_twins(inst, compute_bounded_core(inst.graph, inst.k));
    } else if (config.strategy == Strategy::quasiwide) {
        validate_params(config.quasiwide, inst.k);
        Instance current = inst;
        while (true) {
            auto [twin_free, twin_log] = remove_closed_twins(current);
            current = std::move(twin_free);
            log.append(twin_log);
            auto step = reduce_quasiwide_once(current, config.quasiwide);
            if (!step) break;
            current = std::move(step->first);
            log.steps.push_back(std::move(step->second));
        }
        kernel = std::move(current);
    } else if (config.strategy == Strategy::oracle) {
        kernel = inst;
    } else {
        auto k = kernelize_degenerate(inst);
        kernel = std::move(k.kernel);
        log = std::move(k.log);
    }
    json j{{"instance", serialize_instance(kernel)},
           {"kernel", {{"n", kernel.graph.num_vertices()}, {"m", kernel.graph.num_edges()}, {"deleted", ids(log.deleted())}}},
           {"rules", log_to_json(log)}};
    emit(config, out, j.dump(2) + "\n");
    return kExitOk;
}

int do_verify(const RunConfig& config, std::istream& in, std::ostream& out) {
    if (config.inputs.size() != 2) throw UsageError("verify expects <instance> <report>");
    const Instance inst = parse_instance(read_input(config, 0, in));
    const Report report = parse_report(read_input(config, 1, in));
    if (auto problem = audit_log(inst, report.log)) {
        out << "rules: " << *problem << "\n";
        return kExitNo;
    }
    if (report.sequence) {
        if (auto v = verify_sequence(inst, *report.sequence)) {
            out << "violation: condition " << v->condition << " at set " << v->index << ": " << v->message << "\n";
            return kExitNo;
        }
    }
    out << "ok\n";
    return kExitOk;
}

int do_gen(const RunConfig& config, std::ostream& out) {
    if (config.n < 1 || config.k < 1) throw UsageError("gen needs --n >= 1 and --k >= 1");
    const int d = config.d.value_or(2);
    if (d < 1) throw UsageError("gen needs --d >= 1");
    const Graph g = gen_random_degenerate(config.n, d, config.seed);
    std::optional<Instance> inst = config.problem == Problem::isr ? plant_isr_instance(g, config.k, config.seed)
                                                                  : plant_dsr_instance(g, config.k, config.seed);
    if (!inst) throw DataError("no instance with these parameters could be planted");
    emit(config, out, serialize_instance(*inst));
    return kExitOk;
}

int do_convert(const RunConfig& config, std::istream& in, std::ostream& out) {
    const Instance inst = parse_instance(read_input(config, 0, in));
    if (inst.problem != Problem::isr) throw DataError("convert expects an ISR instance");
    const auto [dsr, gm] = isr_to_dsr(inst);
    emit(config, out, serialize_instance(dsr));
    std::optional<std::string> map_path = config.map_path;
    if (!map_path && config.out_path) map_path = *config.out_path + ".gadget.json";
    if (map_path) write_text(*map_path, gadget_to_json(gm).dump(2) + "\n");
    return kExitOk;
}

int do_stats(const RunConfig& config, std::istream& in, std::ostream& out) {
    const Instance inst = parse_instance(read_input(config, 0, in));
    const Graph& g = inst.graph;
    std::size_t max_degree = 0;
    for (Vertex v : g.vertices()) max_degree = std::max(max_degree, g.degree(v));
    json j{{"problem", std::string(to_string(inst.problem))},
           {"n", g.num_vertices()},
           {"m", g.num_edges()},
           {"k", inst.k},
           {"degeneracy", degeneracy_order(g).d},
           {"max_degree", max_degree}};
    json bicliques = json::object();
    for (int d = 1; d <= 3; ++d) bicliques[std::to_string(d)] = contains_biclique(g, d);
    j["contains_biclique"] = bicliques;
    json classes = json::array();
    for (const auto& c : partition_by_solution_neighborhood(g, anchors(inst)))
        classes.push_back({{"anchor_neighborhood", ids(c.anchor_neighborhood)}, {"size", c.members.size()}});
    j["classes"] = classes;
    emit(config, out, j.dump(2) + "\n");
    return kExitOk;
}

}  // namespace

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
    try {
        switch (config.command) {
            case Command::solve: return do_solve(config, in, out);
            case Command::kernelize: return do_kernelize(config, in, out);
            case Command::verify: return do_verify(config, in, out);
            case Command::gen: return do_gen(config, out);
            case Command::convert: return do_convert(config, in, out);
            case Command::stats: return do_stats(config, in, out);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DataError& e) {
        err << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    RunConfig config;
    CLI::App app{"Token-jumping reconfiguration of independent and dominating sets", "reconf"};
    app.require_subcommand(1);

    const std::map<std::string, Strategy> strategies{{"auto", Strategy::automatic},
                                                     {"degenerate", Strategy::degenerate},
                                                     {"quasiwide", Strategy::quasiwide},
                                                     {"oracle", Strategy::oracle}};
    const std::map<std::string, Problem> problems{{"isr", Problem::isr}, {"dsr", Problem::dsr}};
    std::optional<int> d_flag;

    auto add_solver_flags = [&](CLI::App* sub) {
        sub->add_option("--strategy", config.strategy, "auto, degenerate, quasiwide or oracle")
            ->transform(CLI::CheckedTransformer(strategies, CLI::ignore_case));
        sub->add_option("--state-budget", config.state_budget, "search states before giving up")
            ->check(CLI::PositiveNumber);
        sub->add_option("--class-threshold", config.quasiwide.class_threshold)->check(CLI::PositiveNumber);
        sub->add_option("--max-deletions", config.quasiwide.max_deletions)->check(CLI::NonNegativeNumber);
        sub->add_option("--search-budget", config.quasiwide.search_budget)->check(CLI::PositiveNumber);
    };
    auto add_io = [&](CLI::App* sub, std::size_t max_inputs) {
        sub->add_option("input", config.inputs, "instance path, or - for standard input")->expected(0, static_cast<int>(max_inputs));
        sub->add_option("--out", config.out_path, "write output here instead of standard output");
    };

    auto* solve = app.add_subcommand("solve", "decide reachability and print a JSON report");
    add_io(solve, 1);
    add_solver_flags(solve);
    solve->add_option("--d", d_flag, "biclique size for DSR kernel diagnostics")->check(CLI::PositiveNumber);

    auto* kernelize = app.add_subcommand("kernelize", "print the reduced instance and its reduction log");
    add_io(kernelize, 1);
    add_solver_flags(kernelize);

    auto* verify = app.add_subcommand("verify", "check a report against an instance");
    verify->add_option("instance_report", config.inputs, "<instance> <report>")->expected(2);

    auto* gen = app.add_subcommand("gen", "generate a random planted instance");
    gen->add_option("--n", config.n)->check(CLI::PositiveNumber);
    gen->add_option("--d", d_flag)->check(CLI::PositiveNumber);
    gen->add_option("--k", config.k)->check(CLI::PositiveNumber);
    std::string problem_name = "isr";
    gen->add_option("--problem", problem_name, "isr or dsr")->check(CLI::IsMember(problems, CLI::ignore_case));
    gen->add_option("--seed", config.seed);
    gen->add_option("--out", config.out_path);

    auto* convert = app.add_subcommand("convert", "build the DSR gadget for an ISR instance");
    add_io(convert, 1);
    convert->add_option("--map", config.map_path, "gadget map JSON path (default: <out>.gadget.json)");

    auto* stats = app.add_subcommand("stats", "print structural statistics of an instance");
    add_io(stats, 1);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    config.d = d_flag;
    config.problem = problems.at(CLI::detail::to_lower(problem_name));
    if (solve->parsed()) config.command = Command::solve;
    else if (kernelize->parsed()) config.command = Command::kernelize;
    else if (verify->parsed()) config.command = Command::verify;
    else if (gen->parsed()) config.command = Command::gen;
    else if (convert->parsed()) config.command = Command::convert;
    else config.command = Command::stats;
    return run(config, in, out, err);
}

}  // namespace reconf::cli
