#pragma once

// Consistency deciders for MC-4 networks.
//
// Consistency means: some atomic refinement of the network is algebraically
// closed. solve_oracle and solve_backtracking are complete for the whole
// algebra; the remaining solvers are polynomial and require the network's
// relations to come from the matching tractable subalgebra.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mc4/network.hpp"
#include "mc4/subalgebra.hpp"

namespace mc4 {

struct Witness {
    enum class Kind { bottom_edge, cycle_chord, search_exhausted };

    Kind kind = Kind::search_exhausted;
    // bottom_edge: the two endpoints (equal for a self contradiction).
    // cycle_chord: original vertices of the cycle's cluster, ascending.
    std::vector<Vertex> vertices;
    // cycle_chord only: a {CGPP,CGPPi,CNO} edge inside the cluster.
    std::pair<Vertex, Vertex> chord{0, 0};
    // search_exhausted only: search nodes visited.
    std::uint64_t nodes = 0;
};

struct Verdict {
    bool consistent = false;
    // Present for consistent verdicts of complete solvers.
    std::optional<Scenario> scenario;
    // Present for every inconsistent verdict.
    std::optional<Witness> witness;
};

// A solver was applied outside the subalgebra it is sound for.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class OracleLimitError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t default_oracle_limit = 6;

// Exhaustive enumeration of atomic refinements in canonical order: pairs
// (0,1), (0,2), ..., (n-2,n-1) with the first pair most significant, basics
// in CG, CGPP, CGPPi, CNO order. Partial assignments are cut as soon as a
// fully assigned triangle is not closed, which does not change the first
// scenario found. Test oracle only.
Verdict solve_oracle(const ConstraintNetwork& net, std::size_t max_vertices = default_oracle_limit);

// Complete search with path consistency after every assignment. Branches on
// the unresolved pair with the fewest basics (first in pair order on ties),
// values in CG, CGPP, CGPPi, CNO order.
Verdict solve_backtracking(const ConstraintNetwork& net);

// For networks whose every non-empty label contains `core` (CG, CNO or
// {CGPP,CGPPi}): inconsistent iff a label is empty. Throws
// PreconditionError naming the first offending label.
Verdict solve_trivial_core(const ConstraintNetwork& net, Relation core);

// Translation of a network into a generator alphabet. Vertices
// [0, original_count) are the network's; the rest are auxiliary witnesses
// introduced by two-step gadgets.
struct GadgetGraph {
    std::size_t original_count = 0;
    std::size_t vertex_count = 0;
    // {CG,CGPP} arcs, from -> to.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> leq_arcs;
    // {CG,CNO} edges (M99 alphabet only).
    std::vector<std::pair<std::uint32_t, std::uint32_t>> eqx_edges;
    // {CGPP,CGPPi,CNO} edges.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> nle_edges;
    // {CG,CGPP,CGPPi} edges (M81 alphabet only); never used by detection.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> bsy_edges;
    bool bottom_flag = false;
    std::pair<Vertex, Vertex> bottom_pair{0, 0};
};

// Throws PreconditionError if the profile is not within M99.
GadgetGraph psi99(const ConstraintNetwork& net);

// Throws PreconditionError if the profile is not within M81.
GadgetGraph psi81(const ConstraintNetwork& net);

struct DetectStats {
    std::size_t rounds = 0;  // SCC passes
    std::size_t merges = 0;  // {CG,CNO} edges turned into mutual {CG,CGPP} arcs
};

// Cycle detection over a psi99 graph. Repeats SCC contraction, forcing CG on
// every {CG,CNO} edge whose endpoints are joined by a {CG,CGPP} path, until
// nothing changes; then any {CGPP,CGPPi,CNO} edge inside a cluster is a
// contradiction.
Verdict detect_m99(const GadgetGraph& g, DetectStats* stats = nullptr);

// Single SCC pass over a psi81 graph.
Verdict detect_m81(const GadgetGraph& g);

Verdict solve_m99(const ConstraintNetwork& net);
Verdict solve_m81(const ConstraintNetwork& net);

struct SolveResult {
    Verdict verdict;
    TractabilityClass tractability;
    std::string solver;  // "trivial_core", "m99", "m81" or "backtracking"
};

// Classifies the network's relation profile and runs the cheapest sound
// solver for it.
SolveResult solve(const ConstraintNetwork& net);

std::string to_string(Witness::Kind kind);

// Verdict as JSON:
// {"consistent": bool, "solver": string, "scenario": {"pairs": [[i,j,code],...]} | null,
//  "witness": {...} | null}
std::string verdict_json(const ConstraintNetwork& net, const Verdict& v, const std::string& solver,
                         const std::optional<TractabilityClass>& tractability = std::nullopt);

} // namespace mc4
