#include "mc4/solvers.hpp"

namespace mc4 {

namespace {

std::optional<Verdict> explicit_contradiction(const ConstraintNetwork& net) {
    if (const auto v = net.self_contradiction_vertex()) {
        Verdict out;
        out.witness = Witness{Witness::Kind::bottom_edge, {*v, *v}, {}, 0};
        return out;
    }
    for (Vertex i = 0; i < net.size(); ++i) {
        for (Vertex j = i + 1; j < net.size(); ++j) {
            if (net.label(i, j).is_empty()) {
                Verdict out;
                out.witness = Witness{Witness::Kind::bottom_edge, {i, j}, {}, 0};
                return out;
            }
        }
    }
    return std::nullopt;
}

Verdict exhausted(std::uint64_t nodes) {
    Verdict out;
    out.witness = Witness{Witness::Kind::search_exhausted, {}, {}, nodes};
    return out;
}

class OracleSearch {
public:
    explicit OracleSearch(const ConstraintNetwork& net) : input_(net), work_(net.size()) {
        for (Vertex i = 0; i < net.size(); ++i) {
            for (Vertex j = i + 1; j < net.size(); ++j) pairs_.emplace_back(i, j);
        }
    }

    bool run() { return assign(0); }
    std::uint64_t nodes() const noexcept { return nodes_; }
    Scenario scenario() const {
        Scenario s(input_.names());
        for (const auto& [i, j] : pairs_) s.set_label(i, j, work_.label(i, j));
        return s;
    }

private:
    bool triangle_closed(Vertex a, Vertex b, Vertex c) const {
        const Vertex v[3] = {a, b, c};
        for (int x = 0; x < 3; ++x) {
            for (int y = 0; y < 3; ++y) {
                if (x == y) continue;
                const int z = 3 - x - y;
                if (!compose(work_.label(v[x], v[z]), work_.label(v[z], v[y])).contains(work_.label(v[x], v[y]))) return false;
            }
        }
        return true;
    }

    bool assign(std::size_t p) {
        ++nodes_;
        if (p == pairs_.size()) return true;
        const auto [i, j] = pairs_[p];
        const Relation allowed = input_.label(i, j);
        for (Basic b : all_basics) {
            if (!allowed.contains(b)) continue;
            work_.set_label(i, j, b);
            // In canonical pair order, (i, j) is the last pair assigned of
            // every triangle {a, i, j} with a < i.
            bool ok = true;
            for (Vertex a = 0; a < i && ok; ++a) ok = triangle_closed(a, i, j);
            if (ok && assign(p + 1)) return true;
        }
        return false;
    }

    const ConstraintNetwork& input_;
    ConstraintNetwork work_;
    std::vector<std::pair<Vertex, Vertex>> pairs_;
    std::uint64_t nodes_ = 0;
};

class Backtracker {
public:
    bool search(ConstraintNetwork& net) {
        ++nodes_;
        Vertex bi = 0, bj = 0;
        int best = 5;
        for (Vertex i = 0; i < net.size(); ++i) {
            for (Vertex j = i + 1; j < net.size(); ++j) {
                const int size = net.label(i, j).size();
                if (size > 1 && size < best) {
                    best = size;
                    bi = i;
                    bj = j;
                }
            }
        }
        if (best == 5) {
            solution_ = net;
            return true;
        }
        const Relation options = net.label(bi, bj);
        for (Basic b : all_basics) {
            if (!options.contains(b)) continue;
            ConstraintNetwork child = net;
            child.set_label(bi, bj, b);
            if (enforce_path_consistency(child, bi, bj) && search(child)) return true;
        }
        return false;
    }

    std::uint64_t nodes() const noexcept { return nodes_; }
    Scenario take_solution() { return std::move(solution_); }

private:
    std::uint64_t nodes_ = 0;
    Scenario solution_;
};

} // namespace

Verdict solve_oracle(const ConstraintNetwork& net, std::size_t max_vertices) {
    if (net.size() > max_vertices) {
        throw OracleLimitError("oracle refuses networks with " + std::to_string(net.size()) + " vertices (limit " +
                               std::to_string(max_vertices) + ")");
    }
    if (auto contradiction = explicit_contradiction(net)) return *contradiction;
    OracleSearch search(net);
    if (!search.run()) return exhausted(search.nodes());
    Verdict out;
    out.consistent = true;
    out.scenario = search.scenario();
    return out;
}

Verdict solve_backtracking(const ConstraintNetwork& net) {
    if (auto contradiction = explicit_contradiction(net)) return *contradiction;
    ConstraintNetwork work(net.names());
    for (Vertex i = 0; i < net.size(); ++i) {
        for (Vertex j = i + 1; j < net.size(); ++j) work.set_label(i, j, net.label(i, j));
    }
    if (!enforce_path_consistency(work)) return exhausted(1);
    Backtracker search;
    if (!search.search(work)) return exhausted(search.nodes());
    Verdict out;
    out.consistent = true;
    out.scenario = search.take_solution();
    return out;
}

Verdict solve_trivial_core(const ConstraintNetwork& net, Relation core) {
    if (core != rel::cg && core != rel::cno && core != catalog::proper) {
        throw PreconditionError("trivial-core solver needs core CG, CNO or CGPP|CGPPi, got " + format_relation(core));
    }
    for (Vertex i = 0; i < net.size(); ++i) {
        for (Vertex j = i + 1; j < net.size(); ++j) {
            const Relation r = net.label(i, j);
            if (!r.is_empty() && !r.contains(core)) {
                throw PreconditionError("label " + format_relation(r) + " on " + net.name(i) + " " + net.name(j) +
                                        " does not contain " + format_relation(core));
            }
        }
    }
    if (auto contradiction = explicit_contradiction(net)) return *contradiction;

    // Every label admits the core, and a uniform choice from the core is
    // closed: CG o CG = CG, CNO o CNO = ALL, and CGPP along vertex order is a
    // strict order.
    Scenario s(net.names());
    for (Vertex i = 0; i < net.size(); ++i) {
        for (Vertex j = i + 1; j < net.size(); ++j) s.set_label(i, j, core == catalog::proper ? rel::cgpp : core);
    }
    Verdict out;
    out.consistent = true;
    out.scenario = std::move(s);
    return out;
}

} // namespace mc4
