#include "mc4/identities.hpp"

#include <stdexcept>

#include "mc4/subalgebra.hpp"

namespace mc4 {

namespace {

constexpr Relation leq = catalog::leq;            // R
constexpr Relation leq_cno = catalog::leq_or_cno;  // S
constexpr Relation nle = catalog::not_leq;         // T
constexpr Relation both = catalog::both_ways;      // B
constexpr Relation geq = converse(leq);            // R~

constexpr Relation pp_cno = rel::cgpp | rel::cno;
constexpr Relation ppi_cno = rel::cgppi | rel::cno;
constexpr Relation cg_pp_cno = rel::cg | rel::cgpp | rel::cno;
constexpr Relation cg_ppi_cno = rel::cg | rel::cgppi | rel::cno;

IdentityCheck check(std::string id, std::string expression, Relation expected, Relation actual) {
    return {std::move(id), std::move(expression), expected, actual};
}

} // namespace

Relation compose_power(Relation r, int n) {
    if (n < 1) throw std::invalid_argument("compose_power: exponent must be at least 1");
    Relation out = r;
    for (int k = 1; k < n; ++k) out = compose(out, r);
    return out;
}

// Notation: R = {CG,CGPP}, S = {CG,CNO}, T = {CGPP,CGPPi,CNO}, B =
// {CG,CGPP,CGPPi}, X~ the converse, & intersection, o composition.

std::vector<IdentityCheck> m99_generator_identities() {
    return {
        check("g99.1", "R & S & T", rel::bottom, leq & leq_cno & nle),
        check("g99.2", "R & R~", rel::cg, leq & geq),
        check("g99.3", "R & T", rel::cgpp, leq & nle),
        check("g99.4", "R~ & T", rel::cgppi, geq & nle),
        check("g99.5", "S & T", rel::cno, leq_cno & nle),
        check("g99.6", "R o T", rel::top, compose(leq, nle)),
        check("g99.7", "R~", rel::cg | rel::cgppi, geq),
        check("g99.8", "(R o S) & T", pp_cno, compose(leq, leq_cno) & nle),
        check("g99.9", "(R~ o S) & T", ppi_cno, compose(geq, leq_cno) & nle),
        check("g99.10", "R o S", cg_pp_cno, compose(leq, leq_cno)),
        check("g99.11", "R~ o S", cg_ppi_cno, compose(geq, leq_cno)),
    };
}

std::vector<IdentityCheck> m81_generator_identities() {
    return {
        check("g81.1", "R & R~ & T", rel::bottom, leq & geq & nle),
        check("g81.2", "R & R~", rel::cg, leq & geq),
        check("g81.3", "R & T", rel::cgpp, leq & nle),
        check("g81.4", "R~ & T", rel::cgppi, geq & nle),
        check("g81.5", "R~", rel::cg | rel::cgppi, geq),
        check("g81.6", "B & T", catalog::proper, both & nle),
        check("g81.7", "R o T", rel::top, compose(leq, nle)),
    };
}

std::vector<IdentityCheck> m99_implicit_identities(int n) {
    const std::string e = "^" + std::to_string(n);
    const Relation leq_n = compose_power(leq, n);
    const Relation geq_n = compose_power(geq, n);
    const Relation pp_n = compose_power(rel::cgpp, n);
    return {
        check("imp.1", "R" + e + " & (R~)" + e, rel::cg, leq_n & geq_n),
        check("imp.2", "R" + e + " & S", rel::cg, leq_n & leq_cno),
        check("imp.3", "R" + e + " & CGPP|CNO", rel::cgpp, leq_n & pp_cno),
        check("imp.4", "S & CGPP|CNO", rel::cno, leq_cno & pp_cno),
        check("imp.5", "CGPP|CNO & CGPPi|CNO", rel::cno, pp_cno & ppi_cno),
        check("imp.6", "CGPP|CNO & CG|CGPPi|CNO", rel::cno, pp_cno & cg_ppi_cno),
        check("imp.7", "CG|CGPP|CNO & CG|CGPPi|CNO", leq_cno, cg_pp_cno & cg_ppi_cno),
        check("imp.8", "CGPP" + e + " o CNO", pp_cno, compose(pp_n, rel::cno)),
        check("imp.9", "CGPP" + e + " o S", pp_cno, compose(pp_n, leq_cno)),
        check("imp.10", "CGPP" + e + " o CG|CGPP|CNO", pp_cno, compose(pp_n, cg_pp_cno)),
        check("imp.11", "R" + e + " o CNO", pp_cno, compose(leq_n, rel::cno)),
        check("imp.12", "CG|CGPP|CNO & T", pp_cno, cg_pp_cno & nle),
        check("imp.13", "R" + e + " o S", cg_pp_cno, compose(leq_n, leq_cno)),
    };
}

std::vector<SuiteLine> run_verification_suite() {
    std::vector<SuiteLine> out;
    const auto add = [&out](std::string name, bool passed, std::string detail = {}) {
        out.push_back({std::move(name), passed, std::move(detail)});
    };

    {
        bool ok = true;
        for (Basic a : all_basics) {
            for (Basic b : all_basics) ok = ok && converse(compose(a, b)) == compose(converse(b), converse(a));
        }
        add("converse law over 16 basic pairs", ok);
    }
    {
        bool ok = true;
        for (Basic a : all_basics) ok = ok && compose(Basic::cg, a) == Relation{a} && compose(a, Basic::cg) == Relation{a};
        add("CG is a two-sided identity", ok);
    }
    {
        bool ok = true;
        for (unsigned r = 0; r < 16; ++r) {
            const Relation a{static_cast<std::uint8_t>(r)};
            ok = ok && converse(converse(a)) == a;
            for (unsigned s = 0; s < 16; ++s) {
                const Relation b{static_cast<std::uint8_t>(s)};
                for (unsigned t = 0; t < 16; ++t) {
                    const Relation c{static_cast<std::uint8_t>(t)};
                    ok = ok && compose(a | b, c) == (compose(a, c) | compose(b, c));
                    ok = ok && compose(c, a | b) == (compose(c, a) | compose(c, b));
                }
            }
        }
        add("distributivity over union and converse involution", ok);
    }
    {
        bool ok = true;
        for (unsigned r = 0; r < 16; ++r) {
            for (unsigned r2 = 0; r2 < 16; ++r2) {
                if ((r & ~r2) != 0) continue;
                for (unsigned s = 0; s < 16; ++s) {
                    for (unsigned s2 = 0; s2 < 16; ++s2) {
                        if ((s & ~s2) != 0) continue;
                        const auto small = compose(Relation{static_cast<std::uint8_t>(r)}, Relation{static_cast<std::uint8_t>(s)});
                        const auto big = compose(Relation{static_cast<std::uint8_t>(r2)}, Relation{static_cast<std::uint8_t>(s2)});
                        ok = ok && small.is_subset_of(big);
                    }
                }
            }
        }
        add("composition is monotone", ok);
    }

    add("closure(G99) = M99, 14 relations", closure(catalog::g99) == catalog::m99 && catalog::m99.size() == 14,
        format_relation_set(closure(catalog::g99)));
    add("closure(G81) = M81, 10 relations", closure(catalog::g81) == catalog::m81 && catalog::m81.size() == 10,
        format_relation_set(closure(catalog::g81)));
    add("M72 has 9 relations and is closed", catalog::m72.size() == 9 && is_closed(catalog::m72));

    const auto add_identities = [&add](const std::vector<IdentityCheck>& checks, const std::string& suffix) {
        for (const auto& c : checks) {
            add(c.id + suffix + ": " + format_relation(c.expected) + " = " + c.expression, c.passed(),
                c.passed() ? std::string{} : "got " + format_relation(c.actual));
        }
    };
    add_identities(m99_generator_identities(), "");
    add_identities(m81_generator_identities(), "");
    add_identities(m99_implicit_identities(1), " (n=1)");
    add_identities(m99_implicit_identities(2), " (n=2)");

    add("M78 within M99", catalog::m78.is_subset_of(catalog::m99));
    add("M31 within M81", catalog::m31.is_subset_of(catalog::m81));
    const RelationSet maximal[] = {catalog::m72, catalog::m99, catalog::m81};
    const char* names[] = {"M72", "M99", "M81"};
    for (int k = 0; k < 3; ++k) add(std::string("maximality of ") + names[k], maximality_check(maximal[k]));
    {
        bool ok = true;
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) ok = ok && (a == b || !maximal[a].is_subset_of(maximal[b]));
        }
        add("M72, M99, M81 pairwise incomparable", ok);
    }
    {
        const auto all = enumerate_expressive();
        int unclassified = 0;
        for (RelationSet s : all) unclassified += classify(s).tag == TractabilityTag::unclassified;
        add("classification complete over expressive subalgebras", unclassified == 0,
            std::to_string(all.size()) + " subalgebras, " + std::to_string(unclassified) + " unclassified");
    }
    return out;
}

} // namespace mc4
