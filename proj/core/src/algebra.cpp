#include "mc4/algebra.hpp"

#include <algorithm>
#include <cctype>

namespace mc4 {

namespace {

std::string upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

RelationParseError::RelationParseError(std::string token, std::size_t position)
    : std::runtime_error("unknown relation token '" + token + "' at position " + std::to_string(position)),
      token_(std::move(token)),
      position_(position) {}

std::string_view basic_name(Basic b) noexcept {
    switch (b) {
    case Basic::cg: return "CG";
    case Basic::cgpp: return "CGPP";
    case Basic::cgppi: return "CGPPi";
    case Basic::cno: return "CNO";
    }
    return "?";
}

Relation parse_relation(std::string_view text) {
    const std::string_view whole = trim(text);
    const std::string keyword = upper(whole);
    if (keyword == "NONE") return rel::bottom;
    if (keyword == "ALL") return rel::top;

    Relation out;
    std::size_t start = 0;
    while (true) {
        const std::size_t bar = text.find('|', start);
        const std::string_view raw = text.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start);
        const std::string_view token = trim(raw);
        const std::size_t position = start + static_cast<std::size_t>(token.empty() ? 0 : token.data() - raw.data());
        const std::string name = upper(token);
        if (name == "CG") {
            out = out | rel::cg;
        } else if (name == "CGPP") {
            out = out | rel::cgpp;
        } else if (name == "CGPPI" || name == "CGPP-1") {
            out = out | rel::cgppi;
        } else if (name == "CNO") {
            out = out | rel::cno;
        } else {
            throw RelationParseError(std::string(token), position);
        }
        if (bar == std::string_view::npos) break;
        start = bar + 1;
    }
    return out;
}

std::string format_relation(Relation r) {
    if (r.is_empty()) return "NONE";
    if (r.is_universal()) return "ALL";
    std::string out;
    for (Basic b : all_basics) {
        if (!r.contains(b)) continue;
        if (!out.empty()) out += '|';
        out += basic_name(b);
    }
    return out;
}

std::string format_relation_braced(Relation r) {
    if (r.is_empty()) return "{}";
    std::string out = "{";
    for (Basic b : all_basics) {
        if (!r.contains(b)) continue;
        if (out.size() > 1) out += ',';
        out += basic_name(b);
    }
    return out + "}";
}

} // namespace mc4
