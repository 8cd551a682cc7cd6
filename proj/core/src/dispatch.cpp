#include <nlohmann/json.hpp>

#include "mc4/solvers.hpp"

namespace mc4 {

SolveResult solve(const ConstraintNetwork& net) {
    SolveResult out;
    out.tractability = classify(relation_profile(net));
    switch (out.tractability.tag) {
    case TractabilityTag::trivial_core:
        out.solver = "trivial_core";
        out.verdict = solve_trivial_core(net, out.tractability.core);
        break;
    case TractabilityTag::max_m99:
        out.solver = "m99";
        out.verdict = solve_m99(net);
        break;
    case TractabilityTag::max_m81:
        out.solver = "m81";
        out.verdict = solve_m81(net);
        break;
    case TractabilityTag::np_hard:
    case TractabilityTag::unclassified:
        out.solver = "backtracking";
        out.verdict = solve_backtracking(net);
        break;
    }
    return out;
}

std::string to_string(Witness::Kind kind) {
    switch (kind) {
    case Witness::Kind::bottom_edge: return "bottom_edge";
    case Witness::Kind::cycle_chord: return "cycle_chord";
    case Witness::Kind::search_exhausted: return "search_exhausted";
    }
    return "?";
}

std::string verdict_json(const ConstraintNetwork& net, const Verdict& v, const std::string& solver,
                         const std::optional<TractabilityClass>& tractability) {
    using nlohmann::json;
    json out;
    out["consistent"] = v.consistent;
    out["solver"] = solver;
    if (tractability) out["class"] = to_string(*tractability);

    if (v.scenario) {
        json pairs = json::array();
        const Scenario& s = *v.scenario;
        for (Vertex i = 0; i < s.size(); ++i) {
            for (Vertex j = i + 1; j < s.size(); ++j) pairs.push_back({i, j, s.label(i, j).code()});
        }
        out["scenario"] = {{"pairs", pairs}};
    } else {
        out["scenario"] = nullptr;
    }

    if (v.witness) {
        const Witness& w = *v.witness;
        json wj;
        wj["type"] = to_string(w.kind);
        switch (w.kind) {
        case Witness::Kind::bottom_edge: {
            json names = json::array();
            for (Vertex x : w.vertices) names.push_back(net.name(x));
            wj["vertices"] = names;
            break;
        }
        case Witness::Kind::cycle_chord: {
            json names = json::array();
            for (Vertex x : w.vertices) names.push_back(net.name(x));
            wj["cycle"] = names;
            wj["chord"] = {net.name(w.chord.first), net.name(w.chord.second)};
            break;
        }
        case Witness::Kind::search_exhausted: wj["nodes"] = w.nodes; break;
        }
        out["witness"] = wj;
    } else {
        out["witness"] = nullptr;
    }
    return out.dump();
}

} // namespace mc4
