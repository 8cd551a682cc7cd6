#include <algorithm>

#include "mc4/scc.hpp"
#include "mc4/solvers.hpp"

namespace mc4 {

namespace {

using Arc = std::pair<std::uint32_t, std::uint32_t>;

void require_profile(const ConstraintNetwork& net, RelationSet algebra, const char* name) {
    for (Vertex i = 0; i < net.size(); ++i) {
        for (Vertex j = i + 1; j < net.size(); ++j) {
            const Relation r = net.label(i, j);
            if (!algebra.contains(r)) {
                throw PreconditionError("label " + format_relation(r) + " on " + net.name(i) + " " + net.name(j) + " is not in " +
                                        name);
            }
        }
    }
}

GadgetGraph empty_graph(const ConstraintNetwork& net) {
    GadgetGraph g;
    g.original_count = net.size();
    g.vertex_count = net.size();
    if (const auto v = net.self_contradiction_vertex()) {
        g.bottom_flag = true;
        g.bottom_pair = {*v, *v};
    }
    return g;
}

void flag_bottom(GadgetGraph& g, Vertex i, Vertex j) {
    if (g.bottom_flag) return;
    g.bottom_flag = true;
    g.bottom_pair = {i, j};
}

Verdict bottom_verdict(const GadgetGraph& g) {
    Verdict out;
    out.witness = Witness{Witness::Kind::bottom_edge, {g.bottom_pair.first, g.bottom_pair.second}, {}, 0};
    return out;
}

Verdict chord_verdict(const GadgetGraph& g, const SccResult& scc, Arc chord) {
    Verdict out;
    Witness w;
    w.kind = Witness::Kind::cycle_chord;
    w.chord = {chord.first, chord.second};
    const std::uint32_t cluster = scc.component[chord.first];
    for (std::uint32_t v = 0; v < g.original_count; ++v) {
        if (scc.component[v] == cluster) w.vertices.push_back(v);
    }
    out.witness = std::move(w);
    return out;
}

std::optional<Arc> chord_inside_cluster(const GadgetGraph& g, const SccResult& scc) {
    for (const auto& e : g.nle_edges) {
        if (scc.component[e.first] == scc.component[e.second]) return e;
    }
    return std::nullopt;
}

// Reachability between clusters of a condensed {CG,CGPP} digraph.
//
// Bitsets are kept only for "indexed" clusters: those holding an original
// vertex or lying strictly inside a path (both in- and out-arcs). The others
// are pure sources or pure sinks made of auxiliary vertices and are answered
// through their neighbours. For psi99 output this bounds the bitset matrix by
// the number of original vertices.
class ClusterReach {
public:
    ClusterReach(const GadgetGraph& g, const Digraph& arcs, const SccResult& scc) : count_(scc.count) {
        std::vector<Arc> condensed;
        for (std::uint32_t u = 0; u < arcs.vertex_count(); ++u) {
            for (std::uint32_t v : arcs.successors(u)) {
                const std::uint32_t cu = scc.component[u], cv = scc.component[v];
                if (cu != cv) condensed.emplace_back(cu, cv);
            }
        }
        std::sort(condensed.begin(), condensed.end());
        condensed.erase(std::unique(condensed.begin(), condensed.end()), condensed.end());
        succ_ = Digraph::from_arcs(count_, condensed);
        std::vector<Arc> reversed;
        reversed.reserve(condensed.size());
        for (const auto& [a, b] : condensed) reversed.emplace_back(b, a);
        pred_ = Digraph::from_arcs(count_, reversed);

        std::vector<char> has_original(count_, 0);
        for (std::uint32_t v = 0; v < g.original_count; ++v) has_original[scc.component[v]] = 1;
        slot_.assign(count_, none);
        for (std::uint32_t c = 0; c < count_; ++c) {
            const bool interior = !succ_.successors(c).empty() && !pred_.successors(c).empty();
            if (has_original[c] || interior) slot_[c] = indexed_++;
        }
        words_ = (indexed_ + 63) / 64;
        bits_.assign(static_cast<std::size_t>(indexed_) * words_, 0);

        // Component ids are a reverse topological order, so successors are
        // complete before their predecessors.
        for (std::uint32_t c = 0; c < count_; ++c) {
            if (slot_[c] == none) continue;
            std::uint64_t* row = row_of(slot_[c]);
            for (std::uint32_t d : succ_.successors(c)) {
                if (slot_[d] == none) continue;
                const std::uint64_t* other = row_of(slot_[d]);
                for (std::size_t w = 0; w < words_; ++w) row[w] |= other[w];
                row[slot_[d] / 64] |= std::uint64_t{1} << (slot_[d] % 64);
            }
        }
    }

    // Some path of length >= 1 leads from cluster a to cluster b (a != b).
    bool reaches(std::uint32_t a, std::uint32_t b) const {
        if (slot_[b] != none) return reaches_indexed(a, slot_[b]);
        for (std::uint32_t p : pred_.successors(b)) {
            if (p == a) return true;
            if (slot_[p] != none && reaches_indexed(a, slot_[p])) return true;
        }
        return false;
    }

private:
    static constexpr std::uint32_t none = 0xFFFFFFFFu;

    std::uint64_t* row_of(std::uint32_t slot) { return bits_.data() + static_cast<std::size_t>(slot) * words_; }
    const std::uint64_t* row_of(std::uint32_t slot) const { return bits_.data() + static_cast<std::size_t>(slot) * words_; }
    bool test(std::uint32_t from_slot, std::uint32_t to_slot) const {
        return (row_of(from_slot)[to_slot / 64] >> (to_slot % 64)) & 1u;
    }

    bool reaches_indexed(std::uint32_t a, std::uint32_t target_slot) const {
        if (slot_[a] != none) return test(slot_[a], target_slot);
        // Non-indexed with successors: a pure source.
        for (std::uint32_t s : succ_.successors(a)) {
            if (slot_[s] == target_slot) return true;
            if (slot_[s] != none && test(slot_[s], target_slot)) return true;
        }
        return false;
    }

    std::uint32_t count_;
    Digraph succ_;
    Digraph pred_;
    std::vector<std::uint32_t> slot_;
    std::uint32_t indexed_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

} // namespace

GadgetGraph psi99(const ConstraintNetwork& net) {
    require_profile(net, catalog::m99, "M99");
    GadgetGraph g = empty_graph(net);
    const auto fresh = [&g] { return static_cast<std::uint32_t>(g.vertex_count++); };
    for (Vertex i = 0; i < net.size(); ++i) {
        for (Vertex j = i + 1; j < net.size(); ++j) {
            const auto x = static_cast<std::uint32_t>(i), y = static_cast<std::uint32_t>(j);
            switch (net.label(i, j).code()) {
            case 0b0000: flag_bottom(g, i, j); break;
            case 0b1111: break;
            case 0b0001:  // CG
                g.leq_arcs.emplace_back(x, y);
                g.leq_arcs.emplace_back(y, x);
                break;
            case 0b0010:  // CGPP
                g.leq_arcs.emplace_back(x, y);
                g.nle_edges.emplace_back(x, y);
                break;
            case 0b0100:  // CGPPi
                g.leq_arcs.emplace_back(y, x);
                g.nle_edges.emplace_back(x, y);
                break;
            case 0b1000:  // CNO
                g.eqx_edges.emplace_back(x, y);
                g.nle_edges.emplace_back(x, y);
                break;
            case 0b0011: g.leq_arcs.emplace_back(x, y); break;   // CG|CGPP
            case 0b0101: g.leq_arcs.emplace_back(y, x); break;   // CG|CGPPi
            case 0b1001: g.eqx_edges.emplace_back(x, y); break;  // CG|CNO
            case 0b1110: g.nle_edges.emplace_back(x, y); break;  // CGPP|CGPPi|CNO
            case 0b1010: {  // CGPP|CNO: x <= z, z ~ y, x !<= y
                const auto z = fresh();
                g.leq_arcs.emplace_back(x, z);
                g.eqx_edges.emplace_back(z, y);
                g.nle_edges.emplace_back(x, y);
                break;
            }
            case 0b1100: {  // CGPPi|CNO: z <= x, z ~ y, x !<= y
                const auto z = fresh();
                g.leq_arcs.emplace_back(z, x);
                g.eqx_edges.emplace_back(z, y);
                g.nle_edges.emplace_back(x, y);
                break;
            }
            case 0b1011: {  // CG|CGPP|CNO: x <= z, z ~ y
                const auto z = fresh();
                g.leq_arcs.emplace_back(x, z);
                g.eqx_edges.emplace_back(z, y);
                break;
            }
            case 0b1101: {  // CG|CGPPi|CNO: z <= x, z ~ y
                const auto z = fresh();
                g.leq_arcs.emplace_back(z, x);
                g.eqx_edges.emplace_back(z, y);
                break;
            }
            default: break;  // excluded by require_profile
            }
        }
    }
    return g;
}

GadgetGraph psi81(const ConstraintNetwork& net) {
    require_profile(net, catalog::m81, "M81");
    GadgetGraph g = empty_graph(net);
    for (Vertex i = 0; i < net.size(); ++i) {
        for (Vertex j = i + 1; j < net.size(); ++j) {
            const auto x = static_cast<std::uint32_t>(i), y = static_cast<std::uint32_t>(j);
            switch (net.label(i, j).code()) {
            case 0b0000: flag_bottom(g, i, j); break;
            case 0b1111: break;
            case 0b0001:  // CG
                g.leq_arcs.emplace_back(x, y);
                g.leq_arcs.emplace_back(y, x);
                break;
            case 0b0010:  // CGPP
                g.leq_arcs.emplace_back(x, y);
                g.nle_edges.emplace_back(x, y);
                break;
            case 0b0100:  // CGPPi
                g.leq_arcs.emplace_back(y, x);
                g.nle_edges.emplace_back(x, y);
                break;
            case 0b0011: g.leq_arcs.emplace_back(x, y); break;  // CG|CGPP
            case 0b0101: g.leq_arcs.emplace_back(y, x); break;  // CG|CGPPi
            case 0b0110:  // CGPP|CGPPi
                g.bsy_edges.emplace_back(x, y);
                g.nle_edges.emplace_back(x, y);
                break;
            case 0b0111: g.bsy_edges.emplace_back(x, y); break;  // CG|CGPP|CGPPi
            case 0b1110: g.nle_edges.emplace_back(x, y); break;  // CGPP|CGPPi|CNO
            default: break;
            }
        }
    }
    return g;
}

Verdict detect_m99(const GadgetGraph& g, DetectStats* stats) {
    if (g.bottom_flag) return bottom_verdict(g);
    const auto n = static_cast<std::uint32_t>(g.vertex_count);
    std::vector<Arc> arcs = g.leq_arcs;
    std::vector<char> merged(g.eqx_edges.size(), 0);
    DetectStats local;

    while (true) {
        ++local.rounds;
        const Digraph digraph = Digraph::from_arcs(n, arcs);
        const SccResult scc = strongly_connected_components(digraph);
        // Clusters only grow, so a chord found now survives to the fixpoint.
        if (const auto chord = chord_inside_cluster(g, scc)) {
            if (stats) *stats = local;
            return chord_verdict(g, scc, *chord);
        }

        const ClusterReach reach(g, digraph, scc);
        std::size_t merges = 0;
        for (std::size_t e = 0; e < g.eqx_edges.size(); ++e) {
            if (merged[e]) continue;
            const auto [u, v] = g.eqx_edges[e];
            const std::uint32_t cu = scc.component[u], cv = scc.component[v];
            if (cu == cv) continue;
            // A {CG,CGPP} path closing the edge into a quasi-cycle forces CG.
            if (reach.reaches(cu, cv) || reach.reaches(cv, cu)) {
                arcs.emplace_back(u, v);
                arcs.emplace_back(v, u);
                merged[e] = 1;
                ++merges;
            }
        }
        local.merges += merges;
        if (merges == 0) break;
    }
    if (stats) *stats = local;
    Verdict out;
    out.consistent = true;
    return out;
}

Verdict detect_m81(const GadgetGraph& g) {
    if (g.bottom_flag) return bottom_verdict(g);
    const Digraph digraph = Digraph::from_arcs(static_cast<std::uint32_t>(g.vertex_count), g.leq_arcs);
    const SccResult scc = strongly_connected_components(digraph);
    if (const auto chord = chord_inside_cluster(g, scc)) return chord_verdict(g, scc, *chord);
    Verdict out;
    out.consistent = true;
    return out;
}

Verdict solve_m99(const ConstraintNetwork& net) { return detect_m99(psi99(net)); }

Verdict solve_m81(const ConstraintNetwork& net) { return detect_m81(psi81(net)); }

} // namespace mc4
