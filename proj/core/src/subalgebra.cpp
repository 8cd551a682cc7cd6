#include "mc4/subalgebra.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace mc4 {

static_assert(catalog::m72.size() == 9);
static_assert(catalog::m99.size() == 14);
static_assert(catalog::m81.size() == 10);

std::vector<Relation> RelationSet::members() const {
    std::vector<Relation> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (unsigned c = 0; c < 16; ++c) {
        if ((code_ >> c) & 1u) out.emplace_back(static_cast<std::uint8_t>(c));
    }
    return out;
}

TractabilityClass classify(RelationSet s) {
    const RelationSet c = closure(s | catalog::minimal_expressive);
    if (c.is_subset_of(catalog::m72)) return {TractabilityTag::trivial_core, rel::cg};
    if (c.is_subset_of(catalog::m78)) return {TractabilityTag::trivial_core, rel::cno};
    if (c.is_subset_of(catalog::m31)) return {TractabilityTag::trivial_core, catalog::proper};
    if (c.is_subset_of(catalog::m99)) return {TractabilityTag::max_m99, {}};
    if (c.is_subset_of(catalog::m81)) return {TractabilityTag::max_m81, {}};
    if (has_np_hard_pattern(c)) return {TractabilityTag::np_hard, {}};
    return {TractabilityTag::unclassified, {}};
}

std::string to_string(TractabilityTag tag) {
    switch (tag) {
    case TractabilityTag::trivial_core: return "TRIVIAL_CORE";
    case TractabilityTag::max_m99: return "MAX_M99";
    case TractabilityTag::max_m81: return "MAX_M81";
    case TractabilityTag::np_hard: return "NP_HARD";
    case TractabilityTag::unclassified: return "UNCLASSIFIED";
    }
    return "?";
}

std::string to_string(const TractabilityClass& c) {
    if (c.tag == TractabilityTag::trivial_core) return to_string(c.tag) + "(" + format_relation(c.core) + ")";
    return to_string(c.tag);
}

bool maximality_check(RelationSet candidate) {
    if (candidate != catalog::m72 && candidate != catalog::m99 && candidate != catalog::m81) {
        throw std::invalid_argument("maximality_check: candidate must be M72, M99 or M81, got " + format_relation_set(candidate));
    }
    // Any superset of a set with the hard pattern has the pattern itself, so
    // checking the pattern on the closure covers both conditions.
    for (unsigned c = 0; c < 16; ++c) {
        const Relation r{static_cast<std::uint8_t>(c)};
        if (candidate.contains(r)) continue;
        if (!has_np_hard_pattern(closure(candidate.with(r)))) return false;
    }
    return true;
}

std::vector<RelationSet> enumerate_expressive() {
    std::vector<RelationSet> out;
    for (std::uint32_t code = 0; code <= 0xFFFF; ++code) {
        const RelationSet s{static_cast<std::uint16_t>(code)};
        if (s.is_expressive() && is_closed(s)) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](RelationSet a, RelationSet b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.code() < b.code();
    });
    return out;
}

std::string format_relation_set(RelationSet s) {
    std::string out = "{";
    bool first = true;
    for (Relation r : s.members()) {
        if (!first) out += ", ";
        first = false;
        out += format_relation_braced(r);
    }
    return out + "}";
}

PartitionReport partition_report() {
    PartitionReport report;
    report.buckets = {
        {"np_hard", "contains CNO and {CGPP,CGPPi}", 20, {}},
        {"within_m72", "contained in M72", 13, {}},
        {"within_m78", "contained in M78, not in M72", 12, {}},
        {"within_m31", "contained in M31, not in M72 or M78", 4, {}},
        {"within_m81", "contained in M81, not in M99, M72, M78 or M31", 17, {}},
        {"within_m99", "contained in M99, not in M72, M78 or M31", 34, {}},
        {"residue", "none of the above", -1, {}},
    };
    enum Slot { np_hard, in72, in78, in31, in81, in99, residue };

    const auto algebras = enumerate_expressive();
    report.enumerated_total = static_cast<int>(algebras.size());
    for (RelationSet s : algebras) {
        Slot slot = residue;
        if (has_np_hard_pattern(s)) slot = np_hard;
        else if (s.is_subset_of(catalog::m72)) slot = in72;
        else if (s.is_subset_of(catalog::m78)) slot = in78;
        else if (s.is_subset_of(catalog::m31)) slot = in31;
        else if (s.is_subset_of(catalog::m99)) slot = in99;
        else if (s.is_subset_of(catalog::m81)) slot = in81;
        report.buckets[slot].members.push_back(s);
    }
    for (const auto& b : report.buckets) {
        if (b.published_count > 0) report.published_row_total += b.published_count;
    }
    return report;
}

std::string partition_report_json(const PartitionReport& report) {
    using nlohmann::json;
    json buckets = json::array();
    for (const auto& b : report.buckets) {
        json codes = json::array();
        json listing = json::array();
        for (RelationSet s : b.members) {
            codes.push_back(s.code());
            listing.push_back(format_relation_set(s));
        }
        json entry = {
            {"bucket", b.key},
            {"description", b.description},
            {"count", b.members.size()},
            {"codes", codes},
            {"members", listing},
        };
        if (b.published_count >= 0) {
            entry["published_count"] = b.published_count;
            entry["delta"] = b.delta();
        } else {
            entry["published_count"] = nullptr;
            entry["delta"] = b.members.size();
        }
        buckets.push_back(std::move(entry));
    }
    json out = {
        {"buckets", buckets},
        {"enumerated_total", report.enumerated_total},
        {"published_total", report.published_total},
        {"published_total_delta", report.enumerated_total - report.published_total},
        {"published_row_total", report.published_row_total},
        {"published_row_total_delta", report.enumerated_total - report.published_row_total},
    };
    return out.dump(2);
}

std::string partition_report_text(const PartitionReport& report) {
    std::ostringstream out;
    // Column header: four rows of crosses, one per basic relation, like a
    // truth table over the relation codes.
    const auto header = [&out] {
        for (Basic b : all_basics) {
            std::string name{basic_name(b)};
            name.resize(8, ' ');
            out << name << "  ";
            for (unsigned c = 0; c < 16; ++c) {
                out << (Relation{static_cast<std::uint8_t>(c)}.contains(b) ? " x" : "  ");
            }
            out << '\n';
        }
    };
    for (const auto& b : report.buckets) {
        out << "== " << b.key << ": " << b.description << '\n';
        out << "   count " << b.members.size();
        if (b.published_count >= 0) {
            out << ", published " << b.published_count << ", delta " << (b.delta() >= 0 ? "+" : "") << b.delta();
        }
        out << '\n';
        if (b.members.empty()) {
            out << '\n';
            continue;
        }
        header();
        for (RelationSet s : b.members) {
            std::ostringstream label;
            label << "0x" << std::hex << std::uppercase;
            label.width(4);
            label.fill('0');
            label << s.code();
            std::string name = label.str();
            name.resize(8, ' ');
            out << name << "  ";
            for (unsigned c = 0; c < 16; ++c) {
                out << (s.contains(Relation{static_cast<std::uint8_t>(c)}) ? " *" : "  ");
            }
            out << '\n';
        }
        out << '\n';
    }
    out << "enumerated total " << report.enumerated_total << '\n';
    out << "published total " << report.published_total << ", delta "
        << (report.enumerated_total - report.published_total >= 0 ? "+" : "") << report.enumerated_total - report.published_total << '\n';
    out << "published row sum " << report.published_row_total << ", delta "
        << (report.enumerated_total - report.published_row_total >= 0 ? "+" : "")
        << report.enumerated_total - report.published_row_total << '\n';
    if (report.enumerated_total != report.published_total || report.enumerated_total != report.published_row_total) {
        out << "DISCREPANCY: published counts are inconsistent with the enumeration\n";
    }
    return out.str();
}

} // namespace mc4
