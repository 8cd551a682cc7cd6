#pragma once

// Sets of relations, their closure under composition, intersection and
// converse, and the tractability classification of the closed sets.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "mc4/algebra.hpp"

namespace mc4 {

// A set of relations, encoded as a 16-bit mask indexed by relation code.
class RelationSet {
public:
    constexpr RelationSet() noexcept = default;
    constexpr explicit RelationSet(std::uint16_t code) noexcept : code_(code) {}
    constexpr RelationSet(std::initializer_list<Relation> members) noexcept {
        for (Relation r : members) insert(r);
    }

    constexpr std::uint16_t code() const noexcept { return code_; }
    constexpr int size() const noexcept { return std::popcount(code_); }
    constexpr bool empty() const noexcept { return code_ == 0; }

    constexpr bool contains(Relation r) const noexcept { return (code_ >> r.code()) & 1u; }
    constexpr void insert(Relation r) noexcept { code_ = static_cast<std::uint16_t>(code_ | (1u << r.code())); }
    constexpr void erase(Relation r) noexcept { code_ = static_cast<std::uint16_t>(code_ & ~(1u << r.code())); }

    constexpr RelationSet with(Relation r) const noexcept {
        RelationSet out = *this;
        out.insert(r);
        return out;
    }
    constexpr RelationSet without(Relation r) const noexcept {
        RelationSet out = *this;
        out.erase(r);
        return out;
    }

    constexpr bool is_subset_of(RelationSet other) const noexcept { return (code_ & ~other.code_) == 0; }
    constexpr bool is_expressive() const noexcept { return contains(rel::bottom) && contains(rel::top); }

    constexpr RelationSet operator|(RelationSet other) const noexcept {
        return RelationSet{static_cast<std::uint16_t>(code_ | other.code_)};
    }
    constexpr RelationSet operator&(RelationSet other) const noexcept {
        return RelationSet{static_cast<std::uint16_t>(code_ & other.code_)};
    }

    // Members in ascending relation code.
    std::vector<Relation> members() const;

    friend constexpr bool operator==(RelationSet, RelationSet) noexcept = default;
    friend constexpr auto operator<=>(RelationSet, RelationSet) noexcept = default;

private:
    std::uint16_t code_ = 0;
};

// Smallest superset of `s` closed under compose, intersect and converse.
// Union is deliberately not an operator here.
constexpr RelationSet closure(RelationSet s) noexcept {
    std::uint16_t current = s.code();
    while (true) {
        std::uint16_t next = current;
        for (unsigned a = 0; a < 16; ++a) {
            if (!((current >> a) & 1u)) continue;
            const Relation ra{static_cast<std::uint8_t>(a)};
            next = static_cast<std::uint16_t>(next | (1u << converse(ra).code()));
            for (unsigned b = 0; b < 16; ++b) {
                if (!((current >> b) & 1u)) continue;
                const Relation rb{static_cast<std::uint8_t>(b)};
                next = static_cast<std::uint16_t>(next | (1u << compose(ra, rb).code()) | (1u << intersect(ra, rb).code()));
            }
        }
        if (next == current) return RelationSet{current};
        current = next;
    }
}

constexpr bool is_closed(RelationSet s) noexcept {
    for (unsigned a = 0; a < 16; ++a) {
        if (!((s.code() >> a) & 1u)) continue;
        const Relation ra{static_cast<std::uint8_t>(a)};
        if (!s.contains(converse(ra))) return false;
        for (unsigned b = 0; b < 16; ++b) {
            if (!((s.code() >> b) & 1u)) continue;
            const Relation rb{static_cast<std::uint8_t>(b)};
            if (!s.contains(compose(ra, rb)) || !s.contains(intersect(ra, rb))) return false;
        }
    }
    return true;
}

namespace detail {
// Every relation that is empty or contains all of `core`.
constexpr RelationSet relations_containing(Relation core) noexcept {
    RelationSet out{rel::bottom};
    for (unsigned c = 0; c < 16; ++c) {
        const Relation r{static_cast<std::uint8_t>(c)};
        if (r.contains(core)) out.insert(r);
    }
    return out;
}
} // namespace detail

// Named algebras and generator sets.
namespace catalog {
inline constexpr Relation leq = rel::cg | rel::cgpp;                     // {CG,CGPP}
inline constexpr Relation leq_or_cno = rel::cg | rel::cno;               // {CG,CNO}
inline constexpr Relation not_leq = rel::cgpp | rel::cgppi | rel::cno;   // {CGPP,CGPPi,CNO}
inline constexpr Relation both_ways = rel::cg | rel::cgpp | rel::cgppi;  // {CG,CGPP,CGPPi}
inline constexpr Relation proper = rel::cgpp | rel::cgppi;               // {CGPP,CGPPi}

inline constexpr RelationSet g99{leq, leq_or_cno, not_leq};
inline constexpr RelationSet g81{leq, both_ways, not_leq};

inline constexpr RelationSet m72 = detail::relations_containing(rel::cg);
inline constexpr RelationSet m78 = detail::relations_containing(rel::cno);
inline constexpr RelationSet m31 = detail::relations_containing(proper);
inline constexpr RelationSet m99 = closure(g99);
inline constexpr RelationSet m81 = closure(g81);

inline constexpr RelationSet full{std::uint16_t{0xFFFF}};
inline constexpr RelationSet minimal_expressive{rel::bottom, rel::top};
} // namespace catalog

// True iff both the relation CNO and the relation {CGPP,CGPPi} are members.
constexpr bool has_np_hard_pattern(RelationSet s) noexcept {
    return s.contains(rel::cno) && s.contains(catalog::proper);
}

enum class TractabilityTag { trivial_core, max_m99, max_m81, np_hard, unclassified };

struct TractabilityClass {
    TractabilityTag tag = TractabilityTag::unclassified;
    // Set only for trivial_core: CG, CNO or {CGPP,CGPPi}.
    Relation core;

    friend bool operator==(const TractabilityClass&, const TractabilityClass&) = default;
};

TractabilityClass classify(RelationSet s);

std::string to_string(TractabilityTag tag);
std::string to_string(const TractabilityClass& c);

// Requires `candidate` to be one of M72, M99, M81; throws
// std::invalid_argument otherwise.
bool maximality_check(RelationSet candidate);

// All closed sets containing both the empty and the universal relation,
// ordered by ascending cardinality and then ascending code. Scans every
// subset of the 16 relations for closedness.
std::vector<RelationSet> enumerate_expressive();

std::string format_relation_set(RelationSet s);

struct PartitionBucket {
    std::string key;          // e.g. "np_hard", "within_m72"
    std::string description;
    int published_count = -1; // published row count; -1 for the residue bucket
    std::vector<RelationSet> members;

    int delta() const { return published_count < 0 ? static_cast<int>(members.size()) : static_cast<int>(members.size()) - published_count; }
};

struct PartitionReport {
    // np_hard, within_m72, within_m78, within_m31, within_m81, within_m99, residue
    std::vector<PartitionBucket> buckets;
    int enumerated_total = 0;
    int published_total = 102;      // headline count of expressive subalgebras
    int published_row_total = 0;    // sum of the published per-bucket row counts
};

// Buckets every expressive subalgebra into exactly one bucket. Membership is
// decided in the order np_hard, m72, m78, m31, m99, m81, so the m81 bucket
// excludes subsets of m99. Anything left lands in "residue".
PartitionReport partition_report();

std::string partition_report_json(const PartitionReport& report);

// Bullet-matrix rendering: one column per relation code, one row per
// subalgebra, grouped by bucket with counts against the published ones.
std::string partition_report_text(const PartitionReport& report);

} // namespace mc4
