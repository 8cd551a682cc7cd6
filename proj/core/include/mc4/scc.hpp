#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace mc4 {

// Compressed adjacency lists.
struct Digraph {
    std::vector<std::uint32_t> offsets;  // size vertex_count + 1
    std::vector<std::uint32_t> targets;

    std::uint32_t vertex_count() const noexcept { return offsets.empty() ? 0 : static_cast<std::uint32_t>(offsets.size() - 1); }
    std::span<const std::uint32_t> successors(std::uint32_t v) const noexcept {
        return {targets.data() + offsets[v], targets.data() + offsets[v + 1]};
    }

    static Digraph from_arcs(std::uint32_t vertex_count, std::span<const std::pair<std::uint32_t, std::uint32_t>> arcs);
};

struct SccResult {
    // Component id per vertex. Ids follow Tarjan's completion order, which is
    // a reverse topological order of the condensation: every arc u -> v has
    // component[u] >= component[v].
    std::vector<std::uint32_t> component;
    std::uint32_t count = 0;
};

// Iterative Tarjan; no recursion, so deep graphs are fine.
SccResult strongly_connected_components(const Digraph& g);

} // namespace mc4
