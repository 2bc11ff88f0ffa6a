// pebblekit: graph-pebbling computations, constructions, and the
// verification suite, with JSON (and table CSV) reports.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <pebble/pebble.hpp>
#include <pebble/verify.hpp>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_resource = 2;

struct CommonArgs {
    std::string graph;
    std::string dist;
    std::int64_t t = 1;
    std::string out;
    std::uint64_t budget_nodes = 2'000'000;
    std::int64_t budget_ms = 30'000;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool needs_graph) {
    auto* g = cmd->add_option("--graph", args.graph, "family string (K:n, C:n, Q:d, prod:...) or JSON file");
    if (needs_graph) g->required();
    cmd->add_option("--dist", args.dist, "distribution: inline JSON or file path");
    cmd->add_option("--t", args.t, "target pebble count");
    cmd->add_option("--out", args.out, "write the report here instead of stdout");
    cmd->add_option("--budget-nodes", args.budget_nodes, "search-node budget");
    cmd->add_option("--budget-ms", args.budget_ms, "wall-clock budget per query (ms)");
}

pebble::GraphPtr load_graph(const std::string& arg) {
    if (arg.find(':') != std::string::npos) return pebble::graph_from_family(arg);
    std::ifstream in(arg);
    if (!in) throw pebble::invalid_parameter("cannot open graph file: " + arg);
    return pebble::graph_from_json(pebble::Json::parse(in));
}

pebble::Distribution load_distribution(const std::string& arg, pebble::GraphPtr graph) {
    pebble::Json j;
    if (!arg.empty() && arg.front() == '{') {
        j = pebble::Json::parse(arg);
    } else {
        std::ifstream in(arg);
        if (!in) throw pebble::invalid_parameter("cannot open distribution file: " + arg);
        j = pebble::Json::parse(in);
    }
    if (j.contains("counts")) return pebble::distribution_from_json(j, std::move(graph));
    return pebble::distribution_from_counts_json(j, std::move(graph));
}

void emit(const std::string& out, const std::string& text) {
    if (out.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream f(out);
    if (!f) throw pebble::invalid_parameter("cannot open output file: " + out);
    f << text << '\n';
}

int exit_code_for(pebble::Verdict v) {
    return v == pebble::Verdict::resource_limit ? exit_resource : exit_ok;
}

int run_compute(const std::string& op, const CommonArgs& args) {
    pebble::SolverBudget budget{args.budget_nodes, args.budget_ms};
    auto g = load_graph(args.graph);
    pebble::Json out;
    int code = exit_ok;

    if (op == "pi-t-star") {
        auto res = pebble::optimal_t_pebbling(g, args.t, budget);
        out = {{"value", res.value},
               {"verdict", pebble::to_string(res.verdict)},
               {"lower_bound", res.lower_bound},
               {"upper_bound", res.upper_bound},
               {"lower_bound_source", res.lower_bound_source},
               {"stats", pebble::stats_to_json(res.stats)}};
        if (res.witness_distribution)
            out["witness_distribution"] = pebble::distribution_to_json(*res.witness_distribution);
        code = exit_code_for(res.verdict);
    } else if (op == "max-deliver") {
        if (args.dist.empty()) throw pebble::invalid_parameter("max-deliver requires --dist");
        auto d = load_distribution(args.dist, g);
        pebble::Json values = pebble::Json::object();
        std::int64_t least = -1;
        pebble::Verdict worst = pebble::Verdict::solvable;
        for (int r = 0; r < g->n; ++r) {
            auto res = pebble::max_deliverable(d, r, budget);
            if (res.verdict == pebble::Verdict::resource_limit) worst = res.verdict;
            values[std::to_string(r)] = res.value;
            least = least < 0 ? res.value : std::min(least, res.value);
        }
        out = {{"per_root", values}, {"min_over_roots", least},
               {"verdict", pebble::to_string(worst)}};
        code = exit_code_for(worst);
    } else if (op == "solvable") {
        if (args.dist.empty()) throw pebble::invalid_parameter("solvable requires --dist");
        auto d = load_distribution(args.dist, g);
        auto rep = pebble::is_t_solvable(d, args.t, budget);
        out = pebble::report_to_json(rep);
        code = exit_code_for(rep.verdict);
    } else if (op == "fractional") {
        auto sol = pebble::fractional_optimal(g);
        out = pebble::lp_solution_to_json(sol);
    } else if (op == "formula") {
        if (g->family.rfind("K:", 0) == 0)
            out = {{"value", pebble::pi_t_star_complete_formula(g->n, args.t)}};
        else if (g->family == "prod:K:2,K:2")
            out = {{"value", pebble::k2k2_formula(args.t)}};
        else if (g->family == "prod:K:2,K:3")
            out = {{"value", pebble::k2k3_formula(args.t)}};
        else
            throw pebble::invalid_parameter("no closed form for family: " + g->family);
    } else {
        throw pebble::invalid_parameter("unknown compute operation: " + op);
    }
    emit(args.out, out.dump(2));
    return code;
}

int run_construct(const std::string& name, const std::vector<std::string>& kvs,
                  const CommonArgs& args) {
    std::map<std::string, std::int64_t> params;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw pebble::invalid_parameter("construction parameters look like k=1: " + kv);
        params[kv.substr(0, eq)] = std::stoll(kv.substr(eq + 1));
    }
    pebble::NamedConstruction built;
    try {
        built = pebble::build_construction(name, params);
    } catch (const pebble::invalid_parameter&) {
        std::ostringstream known;
        for (const auto& n : pebble::construction_names()) known << ' ' << n;
        std::cerr << "unknown construction or bad parameters; registry:" << known.str() << '\n';
        return exit_invalid;
    }
    pebble::Json params_json = pebble::Json::object();
    for (const auto& [k, v] : built.params) params_json[k] = v;
    pebble::Json out{{"name", built.name},
                     {"params", params_json},
                     {"claimed_t", built.claimed_t},
                     {"distribution", pebble::distribution_to_json(built.output)}};
    if (built.claimed_size) out["claimed_size"] = *built.claimed_size;
    emit(args.out, out.dump(2));
    return exit_ok;
}

pebble::Json report_json(const pebble::VerificationReport& report) {
    pebble::Json items = pebble::Json::array();
    for (const auto& item : report.items)
        items.push_back({{"claim_id", item.claim_id},
                         {"anchor", item.anchor},
                         {"expected", item.expected},
                         {"computed", item.computed},
                         {"status", pebble::to_string(item.status)},
                         {"runtime_ms", item.runtime_ms}});
    return pebble::Json{{"items", items},
                        {"summary",
                         {{"passed", report.passed},
                          {"failed", report.failed},
                          {"skipped", report.skipped}}},
                        {"fingerprint", report.fingerprint}};
}

std::string report_csv(const pebble::VerificationReport& report) {
    std::ostringstream csv;
    csv << "claim_id,expected,computed,status,runtime_ms\n";
    for (const auto& item : report.items)
        csv << item.claim_id << ",\"" << item.expected << "\",\"" << item.computed << "\","
            << pebble::to_string(item.status) << ',' << item.runtime_ms << '\n';
    return csv.str();
}

int run_verify(const CommonArgs& args, const std::string& only, const std::string& format,
               int n_max, int t_max) {
    pebble::VerifyOptions opt;
    opt.only = only;
    opt.budget = {args.budget_nodes, args.budget_ms};
    opt.n_max = n_max;
    opt.t_max = t_max;
    auto report = pebble::run_verification(opt);
    if (format == "csv") {
        if (only.rfind("table1", 0) != 0 && only.rfind("table2", 0) != 0) {
            std::cerr << "CSV output is available for the table claims only\n";
            return exit_invalid;
        }
        emit(args.out, report_csv(report));
    } else {
        emit(args.out, report_json(report).dump(2));
    }
    return report.failed > 0 ? exit_invalid : exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph pebbling laboratory"};
    app.require_subcommand(1);

    CommonArgs compute_args;
    std::string compute_op;
    auto* compute = app.add_subcommand("compute", "run one solver/LP/formula query");
    compute->add_option("operation", compute_op,
                        "one of pi-t-star, max-deliver, solvable, fractional, formula")
        ->required();
    add_common(compute, compute_args, true);

    CommonArgs construct_args;
    std::string construct_name;
    std::vector<std::string> construct_params;
    auto* construct = app.add_subcommand("construct", "emit a named distribution");
    construct->add_option("name", construct_name, "registry name")->required();
    construct->add_option("params", construct_params, "key=value parameters");
    construct->add_option("--out", construct_args.out, "write the file here instead of stdout");

    CommonArgs verify_args;
    std::string only, format = "json";
    int n_max = 5, t_max = 10;
    auto* verify = app.add_subcommand("verify-paper", "run the full reproduction suite");
    verify->add_option("--only", only, "claim-id prefix filter");
    verify->add_option("--format", format, "json or csv (csv: tables only)")
        ->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--n-max", n_max, "complete-graph sweep bound");
    verify->add_option("--t-max", t_max, "target sweep bound");
    verify->add_option("--out", verify_args.out, "write the report here instead of stdout");
    verify->add_option("--budget-nodes", verify_args.budget_nodes, "per-item node budget");
    verify->add_option("--budget-ms", verify_args.budget_ms, "per-item time budget (ms)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) return run_compute(compute_op, compute_args);
        if (construct->parsed())
            return run_construct(construct_name, construct_params, construct_args);
        return run_verify(verify_args, only, format, n_max, t_max);
    } catch (const pebble::resource_limit& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return exit_resource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_invalid;
    }
}
