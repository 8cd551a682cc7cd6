#pragma once

// Relation arithmetic for the MC-4 congruence algebra.
//
// A Relation is a set of the four basic relations, packed into the low four
// bits of a byte (CG=bit 0, CGPP=bit 1, CGPPI=bit 2, CNO=bit 3). The packed
// value doubles as the canonical relation code 0..15 used in every file
// format and report produced by this library.

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mc4 {

enum class Basic : std::uint8_t { cg = 0, cgpp = 1, cgppi = 2, cno = 3 };

inline constexpr std::array<Basic, 4> all_basics{Basic::cg, Basic::cgpp, Basic::cgppi, Basic::cno};

constexpr Basic converse(Basic b) noexcept {
    switch (b) {
    case Basic::cgpp: return Basic::cgppi;
    case Basic::cgppi: return Basic::cgpp;
    default: return b;
    }
}

class Relation {
public:
    constexpr Relation() noexcept = default;
    constexpr explicit Relation(std::uint8_t code) : code_(code & 0x0F) {
        if (code > 0x0F) throw std::out_of_range("relation code out of range");
    }
    constexpr Relation(Basic b) noexcept : code_(static_cast<std::uint8_t>(1u << static_cast<unsigned>(b))) {}

    static constexpr Relation empty() noexcept { return Relation{}; }
    static constexpr Relation universal() noexcept { return Relation{std::uint8_t{0x0F}}; }

    constexpr std::uint8_t code() const noexcept { return code_; }
    constexpr bool is_empty() const noexcept { return code_ == 0; }
    constexpr bool is_universal() const noexcept { return code_ == 0x0F; }
    constexpr bool is_basic() const noexcept { return code_ != 0 && (code_ & (code_ - 1)) == 0; }
    constexpr int size() const noexcept { return std::popcount(code_); }

    constexpr bool contains(Basic b) const noexcept { return (code_ >> static_cast<unsigned>(b)) & 1u; }
    constexpr bool contains(Relation r) const noexcept { return (r.code_ & ~code_) == 0; }
    constexpr bool is_subset_of(Relation r) const noexcept { return r.contains(*this); }

    // Only meaningful when is_basic().
    constexpr Basic as_basic() const noexcept { return static_cast<Basic>(std::countr_zero(code_)); }

    friend constexpr bool operator==(Relation, Relation) noexcept = default;
    friend constexpr auto operator<=>(Relation, Relation) noexcept = default;

private:
    std::uint8_t code_ = 0;
};

namespace rel {
inline constexpr Relation bottom = Relation::empty();
inline constexpr Relation top = Relation::universal();
inline constexpr Relation cg{Basic::cg};
inline constexpr Relation cgpp{Basic::cgpp};
inline constexpr Relation cgppi{Basic::cgppi};
inline constexpr Relation cno{Basic::cno};
} // namespace rel

constexpr Relation intersect(Relation r, Relation s) noexcept {
    return Relation{static_cast<std::uint8_t>(r.code() & s.code())};
}

// Not part of the closure operator set; used for parsing and profiles.
constexpr Relation unite(Relation r, Relation s) noexcept {
    return Relation{static_cast<std::uint8_t>(r.code() | s.code())};
}

constexpr Relation operator&(Relation r, Relation s) noexcept { return intersect(r, s); }
constexpr Relation operator|(Relation r, Relation s) noexcept { return unite(r, s); }

constexpr Relation converse(Relation r) noexcept {
    const std::uint8_t c = r.code();
    return Relation{static_cast<std::uint8_t>((c & 0b1001) | ((c & 0b0010) << 1) | ((c & 0b0100) >> 1))};
}

namespace detail {
// Rows: left operand, columns: right operand, in Basic order.
inline constexpr std::uint8_t composition_table[4][4] = {
    //            CG      CGPP    CGPPI   CNO
    /* CG    */ {0b0001, 0b0010, 0b0100, 0b1000},
    /* CGPP  */ {0b0010, 0b0010, 0b1111, 0b1010},
    /* CGPPI */ {0b0100, 0b1111, 0b0100, 0b1100},
    /* CNO   */ {0b1000, 0b1010, 0b1100, 0b1111},
};

constexpr std::array<std::array<std::uint8_t, 16>, 16> make_full_table() {
    std::array<std::array<std::uint8_t, 16>, 16> out{};
    for (unsigned r = 0; r < 16; ++r) {
        for (unsigned s = 0; s < 16; ++s) {
            std::uint8_t acc = 0;
            for (unsigned a = 0; a < 4; ++a) {
                if (!((r >> a) & 1u)) continue;
                for (unsigned b = 0; b < 4; ++b) {
                    if ((s >> b) & 1u) acc |= composition_table[a][b];
                }
            }
            out[r][s] = acc;
        }
    }
    return out;
}

inline constexpr auto full_composition = make_full_table();
} // namespace detail

constexpr Relation compose(Basic a, Basic b) noexcept {
    return Relation{detail::composition_table[static_cast<unsigned>(a)][static_cast<unsigned>(b)]};
}

// Union over all basic pairs; precomputed for all 256 operand combinations.
constexpr Relation compose(Relation r, Relation s) noexcept {
    return Relation{detail::full_composition[r.code()][s.code()]};
}

class RelationParseError : public std::runtime_error {
public:
    RelationParseError(std::string token, std::size_t position);
    const std::string& token() const noexcept { return token_; }
    std::size_t position() const noexcept { return position_; }

private:
    std::string token_;
    std::size_t position_;
};

std::string_view basic_name(Basic b) noexcept;

// Accepts NONE, ALL, or '|'-joined basic tokens (case-insensitive; CGPP-1 is
// an alias of CGPPi).
Relation parse_relation(std::string_view text);

// Canonical token string: NONE, ALL, or members in CG,CGPP,CGPPi,CNO order.
std::string format_relation(Relation r);

// Set notation for human-readable listings, e.g. "{CG,CGPP}".
std::string format_relation_braced(Relation r);

} // namespace mc4
