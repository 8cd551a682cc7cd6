#include "mc4/rcc5.hpp"

namespace mc4::rcc5 {

std::string_view name(Basic b) noexcept {
    switch (b) {
    case Basic::eq: return "EQ";
    case Basic::dr: return "DR";
    case Basic::po: return "PO";
    case Basic::pp: return "PP";
    case Basic::ppi: return "PP-1";
    }
    return "?";
}

std::string format(BasicSet s) {
    std::string out = "{";
    for (Basic b : all_basics) {
        if (!s.contains(b)) continue;
        if (out.size() > 1) out += ',';
        out += name(b);
    }
    return out + "}";
}

Scenario omega_scenario(const mc4::Scenario& s) {
    if (!s.is_atomic()) throw NotAtomicError("omega_scenario: network is not atomic");
    Scenario out;
    out.names = s.names();
    for (Vertex i = 0; i < s.size(); ++i) {
        for (Vertex j = i + 1; j < s.size(); ++j) out.pairs.emplace_back(i, j, omega(s.label(i, j).as_basic()));
    }
    return out;
}

std::string serialize(const Scenario& s) {
    std::string out = "nodes:";
    for (const auto& n : s.names) out += " " + n;
    out += '\n';
    for (const auto& [i, j, b] : s.pairs) out += s.names[i] + " " + s.names[j] + " : " + std::string(name(b)) + "\n";
    return out;
}

} // namespace mc4::rcc5
