#include "mc4/network.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <random>
#include <sstream>

namespace mc4 {

ConstraintNetwork::ConstraintNetwork(std::size_t vertex_count) {
    names_.reserve(vertex_count);
    for (std::size_t i = 0; i < vertex_count; ++i) names_.push_back("v" + std::to_string(i));
    labels_.assign(vertex_count * vertex_count, rel::top);
}

ConstraintNetwork::ConstraintNetwork(std::vector<std::string> vertex_names) : names_(std::move(vertex_names)) {
    labels_.assign(names_.size() * names_.size(), rel::top);
}

std::optional<Vertex> ConstraintNetwork::find(std::string_view name) const {
    const auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<Vertex>(it - names_.begin());
}

void ConstraintNetwork::check_vertex(Vertex v) const {
    if (v >= names_.size()) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for network of size " + std::to_string(names_.size()));
    }
}

void ConstraintNetwork::set_label(Vertex i, Vertex j, Relation r) {
    check_vertex(i);
    check_vertex(j);
    if (i == j) throw std::invalid_argument("set_label: self pairs carry no label");
    const std::size_t n = names_.size();
    labels_[i * n + j] = r;
    labels_[j * n + i] = converse(r);
}

Relation ConstraintNetwork::add_constraint(Vertex i, Vertex j, Relation r) {
    check_vertex(i);
    check_vertex(j);
    if (i == j) {
        if (!r.contains(Basic::cg) && !self_contradiction_) self_contradiction_ = i;
        return intersect(rel::cg, r);
    }
    const Relation updated = intersect(label(i, j), r);
    set_label(i, j, updated);
    return updated;
}

bool ConstraintNetwork::is_atomic() const noexcept {
    const std::size_t n = names_.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!labels_[i * n + j].is_basic()) return false;
        }
    }
    return true;
}

bool ConstraintNetwork::has_empty_label() const noexcept {
    return std::any_of(labels_.begin(), labels_.end(), [](Relation r) { return r.is_empty(); });
}

RelationSet relation_profile(const ConstraintNetwork& net) {
    RelationSet out = catalog::minimal_expressive;
    const std::size_t n = net.size();
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            const Relation r = net.label(i, j);
            out.insert(r);
            out.insert(converse(r));
        }
    }
    return out;
}

namespace {

// PC-2 style propagation: when (i, j) shrinks, every triangle through that
// pair is revised.
bool propagate(ConstraintNetwork& net, std::deque<std::pair<Vertex, Vertex>>& queue, std::vector<char>& queued) {
    const std::size_t n = net.size();
    const auto revise = [&](Vertex a, Vertex b, Relation via) -> bool {
        const Relation old = net.label(a, b);
        const Relation updated = intersect(old, via);
        if (updated == old) return true;
        net.set_label(a, b, updated);
        if (updated.is_empty()) return false;
        const Vertex lo = std::min(a, b), hi = std::max(a, b);
        if (!queued[lo * n + hi]) {
            queued[lo * n + hi] = 1;
            queue.emplace_back(lo, hi);
        }
        return true;
    };

    while (!queue.empty()) {
        const auto [i, j] = queue.front();
        queue.pop_front();
        queued[i * n + j] = 0;
        for (Vertex k = 0; k < n; ++k) {
            if (k == i || k == j) continue;
            // (i,k) through j, and (k,j) through i.
            if (!revise(i, k, compose(net.label(i, j), net.label(j, k)))) return false;
            if (!revise(k, j, compose(net.label(k, i), net.label(i, j)))) return false;
        }
    }
    return true;
}

} // namespace

bool enforce_path_consistency(ConstraintNetwork& net) {
    if (net.has_empty_label()) return false;
    const std::size_t n = net.size();
    std::deque<std::pair<Vertex, Vertex>> queue;
    std::vector<char> queued(n * n, 0);
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            // A universal label composes to the universal relation with any
            // non-empty label, so it cannot tighten anything.
            if (net.label(i, j).is_universal()) continue;
            queue.emplace_back(i, j);
            queued[i * n + j] = 1;
        }
    }
    return propagate(net, queue, queued);
}

bool enforce_path_consistency(ConstraintNetwork& net, Vertex i, Vertex j) {
    if (net.label(i, j).is_empty()) return false;
    const std::size_t n = net.size();
    std::deque<std::pair<Vertex, Vertex>> queue;
    std::vector<char> queued(n * n, 0);
    const Vertex lo = std::min(i, j), hi = std::max(i, j);
    queue.emplace_back(lo, hi);
    queued[lo * n + hi] = 1;
    return propagate(net, queue, queued);
}

PathConsistencyResult path_consistency(ConstraintNetwork net) {
    const bool ok = enforce_path_consistency(net);
    return {std::move(net), ok};
}

bool is_algebraically_closed(const Scenario& s) {
    if (!s.is_atomic()) throw NotAtomicError("is_algebraically_closed: network is not atomic");
    const std::size_t n = s.size();
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = 0; j < n; ++j) {
            if (i == j) continue;
            for (Vertex k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                if (!compose(s.label(i, k), s.label(k, j)).contains(s.label(i, j))) return false;
            }
        }
    }
    return true;
}

NetworkParseError::NetworkParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string word;
    while (in >> word) out.push_back(word);
    return out;
}

} // namespace

ConstraintNetwork parse_network(std::string_view text) {
    std::optional<ConstraintNetwork> net;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.rfind("nodes:", 0) == 0) {
            if (net) throw NetworkParseError(line_no, "duplicate 'nodes:' line");
            auto names = split_ws(line.substr(6));
            if (names.empty()) throw NetworkParseError(line_no, "'nodes:' line declares no vertices");
            std::vector<std::string> sorted = names;
            std::sort(sorted.begin(), sorted.end());
            if (const auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
                throw NetworkParseError(line_no, "vertex '" + *dup + "' declared twice");
            }
            net.emplace(std::move(names));
            continue;
        }

        if (!net) throw NetworkParseError(line_no, "constraint before 'nodes:' line");
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) throw NetworkParseError(line_no, "expected 'NAME NAME : RELATION'");
        const auto ends = split_ws(line.substr(0, colon));
        if (ends.size() != 2) throw NetworkParseError(line_no, "expected exactly two vertex names before ':'");
        const auto a = net->find(ends[0]);
        const auto b = net->find(ends[1]);
        if (!a) throw NetworkParseError(line_no, "unknown vertex '" + ends[0] + "'");
        if (!b) throw NetworkParseError(line_no, "unknown vertex '" + ends[1] + "'");

        Relation r;
        try {
            r = parse_relation(line.substr(colon + 1));
        } catch (const RelationParseError& e) {
            throw NetworkParseError(line_no, e.what());
        }
        if (*a == *b) {
            if (!r.contains(Basic::cg)) {
                throw NetworkParseError(line_no, "self constraint on '" + ends[0] + "' excludes CG");
            }
            continue;
        }
        net->add_constraint(*a, *b, r);
    }
    if (!net) throw NetworkParseError(line_no, "missing 'nodes:' line");
    return std::move(*net);
}

std::string serialize_network(const ConstraintNetwork& net) {
    std::string out = "nodes:";
    for (const auto& name : net.names()) out += " " + name;
    out += '\n';
    for (Vertex i = 0; i < net.size(); ++i) {
        for (Vertex j = i + 1; j < net.size(); ++j) {
            const Relation r = net.label(i, j);
            if (r.is_universal()) continue;
            out += net.name(i) + " " + net.name(j) + " : " + format_relation(r) + "\n";
        }
    }
    return out;
}

namespace {

std::vector<Relation> usable_profile(RelationSet profile) {
    auto members = profile.without(rel::bottom).members();
    if (members.empty()) throw std::invalid_argument("random_network: profile has no relation besides the empty one");
    return members;
}

void check_density(double density) {
    if (!(density >= 0.0 && density <= 1.0)) throw std::invalid_argument("density must lie in [0, 1]");
}

} // namespace

ConstraintNetwork random_network(std::size_t n, double density, RelationSet profile, std::uint64_t seed) {
    check_density(density);
    const auto members = usable_profile(profile);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
    ConstraintNetwork net(n);
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            if (coin(rng) < density) net.set_label(i, j, members[pick(rng)]);
        }
    }
    return net;
}

ConstraintNetwork planted_network(std::size_t n, double density, RelationSet profile, std::uint64_t seed) {
    check_density(density);
    const auto members = usable_profile(profile);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> family_of(0, 3);
    std::uniform_int_distribution<int> size_of(0, 7);
    std::vector<int> family(n), size(n);
    for (Vertex v = 0; v < n; ++v) {
        family[v] = family_of(rng);
        size[v] = size_of(rng);
    }

    std::array<std::vector<Relation>, 4> fitting;
    for (Basic b : all_basics) {
        for (Relation r : members) {
            if (r.contains(b)) fitting[static_cast<unsigned>(b)].push_back(r);
        }
    }

    std::uniform_real_distribution<double> coin(0.0, 1.0);
    ConstraintNetwork net(n);
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            Basic hidden = Basic::cno;
            if (family[i] == family[j]) {
                hidden = size[i] == size[j] ? Basic::cg : (size[i] < size[j] ? Basic::cgpp : Basic::cgppi);
            }
            if (!(coin(rng) < density)) continue;
            const auto& options = fitting[static_cast<unsigned>(hidden)];
            if (options.empty()) continue;
            std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
            net.set_label(i, j, options[pick(rng)]);
        }
    }
    return net;
}

} // namespace mc4
