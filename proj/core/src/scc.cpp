#include "mc4/scc.hpp"

#include <algorithm>
#include <limits>

namespace mc4 {

Digraph Digraph::from_arcs(std::uint32_t vertex_count, std::span<const std::pair<std::uint32_t, std::uint32_t>> arcs) {
    Digraph g;
    g.offsets.assign(static_cast<std::size_t>(vertex_count) + 1, 0);
    for (const auto& [from, to] : arcs) ++g.offsets[from + 1];
    for (std::uint32_t v = 0; v < vertex_count; ++v) g.offsets[v + 1] += g.offsets[v];
    g.targets.resize(arcs.size());
    std::vector<std::uint32_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
    for (const auto& [from, to] : arcs) g.targets[cursor[from]++] = to;
    return g;
}

SccResult strongly_connected_components(const Digraph& g) {
    constexpr std::uint32_t unvisited = std::numeric_limits<std::uint32_t>::max();
    const std::uint32_t n = g.vertex_count();

    SccResult result;
    result.component.assign(n, unvisited);
    std::vector<std::uint32_t> index(n, unvisited);
    std::vector<std::uint32_t> lowlink(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<std::uint32_t> stack;
    // Call stack frames: vertex and position in its successor list.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> frames;
    std::uint32_t next_index = 0;

    for (std::uint32_t root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        frames.emplace_back(root, g.offsets[root]);
        index[root] = lowlink[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;

        while (!frames.empty()) {
            auto& [v, pos] = frames.back();
            if (pos < g.offsets[v + 1]) {
                const std::uint32_t w = g.targets[pos++];
                if (index[w] == unvisited) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.emplace_back(w, g.offsets[w]);
                } else if (on_stack[w]) {
                    lowlink[v] = std::min(lowlink[v], index[w]);
                }
                continue;
            }

            const std::uint32_t done = v;
            frames.pop_back();
            if (lowlink[done] == index[done]) {
                std::uint32_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    result.component[w] = result.count;
                } while (w != done);
                ++result.count;
            }
            if (!frames.empty()) {
                const std::uint32_t parent = frames.back().first;
                lowlink[parent] = std::min(lowlink[parent], lowlink[done]);
            }
        }
    }
    return result;
}

} // namespace mc4
