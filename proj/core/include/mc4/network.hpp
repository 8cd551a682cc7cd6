#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mc4/algebra.hpp"
#include "mc4/subalgebra.hpp"

namespace mc4 {

using Vertex = std::size_t;

// A complete labelled graph over named variables. Missing constraints read as
// the universal relation and the diagonal reads as CG. Labels are kept in a
// dense n x n matrix with label(j, i) == converse(label(i, j)) at all times.
class ConstraintNetwork {
public:
    ConstraintNetwork() = default;
    explicit ConstraintNetwork(std::size_t vertex_count);
    explicit ConstraintNetwork(std::vector<std::string> vertex_names);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(Vertex v) const { return names_.at(v); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<Vertex> find(std::string_view name) const;

    Relation label(Vertex i, Vertex j) const {
        return i == j ? rel::cg : labels_[i * names_.size() + j];
    }

    // Overwrites the label of (i, j); the (j, i) entry receives the converse.
    void set_label(Vertex i, Vertex j, Relation r);

    // Intersects r into label(i, j). A self constraint that excludes CG marks
    // the network as contradictory instead of being stored. Returns the new
    // label (or the self relation when i == j).
    Relation add_constraint(Vertex i, Vertex j, Relation r);

    // Set when a self constraint without CG was added.
    bool self_contradiction() const noexcept { return self_contradiction_.has_value(); }
    std::optional<Vertex> self_contradiction_vertex() const noexcept { return self_contradiction_; }

    // Every pair (i < j) carries a basic relation.
    bool is_atomic() const noexcept;
    bool has_empty_label() const noexcept;

    friend bool operator==(const ConstraintNetwork&, const ConstraintNetwork&) = default;

private:
    void check_vertex(Vertex v) const;

    std::vector<std::string> names_;
    std::vector<Relation> labels_;
    std::optional<Vertex> self_contradiction_;
};

// A network whose every pair is labelled by a basic relation.
using Scenario = ConstraintNetwork;

// All labels present in either orientation, plus the empty and universal
// relations.
RelationSet relation_profile(const ConstraintNetwork& net);

struct PathConsistencyResult {
    ConstraintNetwork network;
    bool ok = true;
};

// Worklist path consistency: label(i,j) &= label(i,k) o label(k,j) until
// fixpoint. ok is false iff some label becomes empty.
PathConsistencyResult path_consistency(ConstraintNetwork net);

// In-place variant used by the search. Seeds the worklist with every pair
// whose label is not universal.
bool enforce_path_consistency(ConstraintNetwork& net);

// In-place variant seeded only with the given pair, for incremental use after
// a single label change.
bool enforce_path_consistency(ConstraintNetwork& net, Vertex i, Vertex j);

class NotAtomicError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// label(i,j) is within label(i,k) o label(k,j) for every triple of distinct
// vertices. Throws NotAtomicError on a non-atomic input.
bool is_algebraically_closed(const Scenario& s);

class NetworkParseError : public std::runtime_error {
public:
    NetworkParseError(std::size_t line, const std::string& message);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Line-oriented text format:
//   # comment
//   nodes: a b c
//   a b : CG|CGPP
// Repeated pairs are intersected. Self constraints must admit CG and are then
// dropped.
ConstraintNetwork parse_network(std::string_view text);

// Writes every non-universal pair, i < j, in vertex order.
std::string serialize_network(const ConstraintNetwork& net);

// Each pair is independently constrained with probability `density` by a
// relation drawn uniformly from `profile` without the empty relation.
// Deterministic for a given seed.
ConstraintNetwork random_network(std::size_t n, double density, RelationSet profile, std::uint64_t seed);

// Like random_network, but each label is drawn from the profile members that
// contain the pair's relation in a hidden consistent scenario, so the result
// is always consistent. Pairs with no fitting member stay unconstrained.
// The hidden scenario groups vertices into shape families ordered by size:
// same family and size is CG, same family and smaller is CGPP, different
// families are CNO.
ConstraintNetwork planted_network(std::size_t n, double density, RelationSet profile, std::uint64_t seed);

} // namespace mc4
