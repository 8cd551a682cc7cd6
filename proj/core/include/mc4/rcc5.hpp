#pragma once

// The correspondence between MC-4 basics and RCC-5 basics used to transfer
// hardness results. Mapping only; no RCC-5 reasoning lives here.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "mc4/algebra.hpp"
#include "mc4/network.hpp"

namespace mc4::rcc5 {

enum class Basic : std::uint8_t { eq = 0, dr = 1, po = 2, pp = 3, ppi = 4 };

inline constexpr std::array<Basic, 5> all_basics{Basic::eq, Basic::dr, Basic::po, Basic::pp, Basic::ppi};

constexpr Basic converse(Basic b) noexcept {
    switch (b) {
    case Basic::pp: return Basic::ppi;
    case Basic::ppi: return Basic::pp;
    default: return b;
    }
}

// Set of RCC-5 basics, 5-bit mask in Basic order.
class BasicSet {
public:
    constexpr BasicSet() noexcept = default;
    constexpr BasicSet(std::initializer_list<Basic> members) noexcept {
        for (Basic b : members) mask_ = static_cast<std::uint8_t>(mask_ | (1u << static_cast<unsigned>(b)));
    }
    constexpr bool contains(Basic b) const noexcept { return (mask_ >> static_cast<unsigned>(b)) & 1u; }
    constexpr std::uint8_t mask() const noexcept { return mask_; }
    friend constexpr bool operator==(BasicSet, BasicSet) noexcept = default;

private:
    std::uint8_t mask_ = 0;
};

// CG -> EQ, CGPP -> PP, CGPPi -> PP-1, CNO -> PO.
constexpr Basic omega(mc4::Basic b) noexcept {
    switch (b) {
    case mc4::Basic::cg: return Basic::eq;
    case mc4::Basic::cgpp: return Basic::pp;
    case mc4::Basic::cgppi: return Basic::ppi;
    case mc4::Basic::cno: return Basic::po;
    }
    return Basic::po;
}

// RCC-5 basics that may hold between two regions in the given MC-4 basic.
constexpr BasicSet envelope(mc4::Basic b) noexcept {
    switch (b) {
    case mc4::Basic::cg: return {Basic::eq, Basic::dr, Basic::po};
    case mc4::Basic::cgpp: return {Basic::pp, Basic::dr, Basic::po};
    case mc4::Basic::cgppi: return {Basic::ppi, Basic::dr, Basic::po};
    case mc4::Basic::cno: return {Basic::dr, Basic::po};
    }
    return {};
}

// MC-4 relation implied by an RCC-5 basic.
constexpr Relation lift(Basic b) noexcept {
    switch (b) {
    case Basic::eq: return rel::cg;
    case Basic::pp: return rel::cgpp;
    case Basic::ppi: return rel::cgppi;
    case Basic::po:
    case Basic::dr: return rel::top;
    }
    return rel::top;
}

std::string_view name(Basic b) noexcept;
std::string format(BasicSet s);

struct Scenario {
    std::vector<std::string> names;
    // (i, j, relation) with i < j.
    std::vector<std::tuple<Vertex, Vertex, Basic>> pairs;
};

// Edge-wise omega. Throws NotAtomicError unless every pair is basic.
Scenario omega_scenario(const mc4::Scenario& s);

// Same line format as MC-4 networks, with tokens EQ, DR, PO, PP, PP-1.
std::string serialize(const Scenario& s);

} // namespace mc4::rcc5
