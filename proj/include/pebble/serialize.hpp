#ifndef PEBBLE_SERIALIZE_HPP
#define PEBBLE_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "distribution.hpp"
#include "graph.hpp"
#include "lp.hpp"
#include "solver.hpp"

namespace pebble {

using Json = nlohmann::json;

// "K:4", "C:5", "Q:3", or "prod:K:2,K:3" (left-associated fold).
inline GraphPtr graph_from_family(const std::string& family, const GraphLimits& limits = {}) {
    auto parse_atom = [&](const std::string& atom) -> GraphPtr {
        auto colon = atom.find(':');
        if (colon == std::string::npos)
            throw invalid_parameter("malformed family string: " + atom);
        int arg;
        try {
            arg = std::stoi(atom.substr(colon + 1));
        } catch (const std::exception&) {
            throw invalid_parameter("malformed family string: " + atom);
        }
        std::string kind = atom.substr(0, colon);
        if (kind == "K") return complete_graph(arg, limits);
        if (kind == "C") return cycle_graph(arg, limits);
        if (kind == "Q") return hypercube(arg, limits);
        throw invalid_parameter("unknown graph family: " + kind);
    };
    if (family.rfind("prod:", 0) == 0) {
        std::string rest = family.substr(5);
        GraphPtr acc;
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            auto comma = rest.find(',', pos);
            std::string atom = rest.substr(pos, comma == std::string::npos ? std::string::npos
                                                                           : comma - pos);
            auto g = parse_atom(atom);
            acc = acc ? cartesian_product(acc, g, limits) : g;
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (!acc || !acc->is_product())
            throw invalid_parameter("product family needs at least two factors: " + family);
        return acc;
    }
    return parse_atom(family);
}

inline Json graph_to_json(const Graph& g) {
    Json edges = Json::array();
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (v > u) edges.push_back({u, v});
    return Json{{"n", g.n}, {"edges", edges}, {"labels", g.labels}};
}

inline GraphPtr graph_from_json(const Json& j, const GraphLimits& limits = {}) {
    if (!j.contains("n") || !j.contains("edges"))
        throw invalid_parameter("graph JSON requires 'n' and 'edges'");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return Graph::make(j.at("n").get<int>(), std::move(edges), std::move(labels), {}, {}, limits);
}

// { "graph": <family string or inline graph>, "counts": {"<vertex>": n, ...} }
inline Json distribution_to_json(const Distribution& d) {
    Json counts = Json::object();
    for (int v : d.support()) counts[std::to_string(v)] = d[v];
    Json graph = d.graph()->family.empty() ? graph_to_json(*d.graph()) : Json(d.graph()->family);
    return Json{{"graph", graph}, {"counts", counts}};
}

inline Distribution distribution_from_json(const Json& j, GraphPtr graph = nullptr,
                                           const GraphLimits& limits = {}) {
    if (!graph) {
        const auto& gj = j.at("graph");
        graph = gj.is_string() ? graph_from_family(gj.get<std::string>(), limits)
                               : graph_from_json(gj, limits);
    }
    std::vector<std::int64_t> counts(graph->n, 0);
    for (const auto& [key, value] : j.at("counts").items()) {
        int v = std::stoi(key);
        if (v < 0 || v >= graph->n) throw invalid_parameter("count vertex out of range: " + key);
        counts[v] = value.get<std::int64_t>();
    }
    return Distribution(std::move(graph), std::move(counts));
}

// Sparse counts on a known graph, e.g. --dist '{"0":4}' on the CLI.
inline Distribution distribution_from_counts_json(const Json& counts, GraphPtr graph) {
    return distribution_from_json(Json{{"counts", counts}}, std::move(graph));
}

inline Json witness_to_json(const MoveSequence& moves) {
    Json out = Json::array();
    for (const auto& m : moves)
        out.push_back({{"from", m.from}, {"to", m.to}, {"times", m.multiplicity}});
    return out;
}

inline MoveSequence witness_from_json(const Json& j) {
    MoveSequence moves;
    for (const auto& m : j)
        moves.push_back({m.at("from").get<int>(), m.at("to").get<int>(),
                         m.at("times").get<std::int64_t>()});
    return moves;
}

inline Json certificate_to_json(const ProjectionCertificate& c) {
    Json out{{"subset", c.subset},
             {"failing_root", c.failing_root},
             {"projected_size", c.projected_size},
             {"required", c.required}};
    if (c.removed_lone_pebble) out["removed_lone_pebble"] = *c.removed_lone_pebble;
    return out;
}

inline Json stats_to_json(const SearchStats& s) {
    return Json{{"nodes_explored", s.nodes_explored}, {"states_memoized", s.states_memoized}};
}

inline Json report_to_json(const SolveReport& r) {
    Json out{{"verdict", to_string(r.verdict)}, {"stats", stats_to_json(r.stats)}};
    if (r.witness) out["witness"] = witness_to_json(*r.witness);
    if (r.failing_root) out["failing_root"] = *r.failing_root;
    if (r.certificate) out["certificate"] = certificate_to_json(*r.certificate);
    return out;
}

inline Json report_to_json(const TSolvReport& r) {
    Json out{{"verdict", to_string(r.verdict)},
             {"stats", stats_to_json(r.stats)},
             {"checked_roots", r.checked_roots}};
    Json witnesses = Json::object();
    for (const auto& [root, moves] : r.witnesses)
        witnesses[std::to_string(root)] = witness_to_json(moves);
    out["witnesses"] = witnesses;
    if (r.failing_root) out["failing_root"] = *r.failing_root;
    if (r.certificate) out["certificate"] = certificate_to_json(*r.certificate);
    return out;
}

// { "value": "a/b", "distribution": {"v": "p/q", ...}, "tight": [v, ...] }
inline Json lp_solution_to_json(const LPSolution& sol) {
    Json dist = Json::object();
    for (std::size_t v = 0; v < sol.distribution.size(); ++v)
        if (sol.distribution[v] != Rational(0))
            dist[std::to_string(v)] = to_string(sol.distribution[v]);
    return Json{{"value", to_string(sol.value)},
                {"distribution", dist},
                {"tight", sol.tight_vertices}};
}

} // namespace pebble

#endif
