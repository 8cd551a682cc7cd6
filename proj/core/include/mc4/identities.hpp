#pragma once

// Algebraic identities behind the polynomial solvers, plus a self-check suite
// that evaluates them together with the composition-table laws.

#include <string>
#include <vector>

#include "mc4/algebra.hpp"

namespace mc4 {

struct IdentityCheck {
    std::string id;          // g99.N, g81.N or imp.N
    std::string expression;  // the right-hand side, in generator notation
    Relation expected;
    Relation actual;

    bool passed() const noexcept { return expected == actual; }
};

// r composed with itself `n` times (n >= 1).
Relation compose_power(Relation r, int n);

// Each relation of M99 written over {CG,CGPP}, {CG,CNO}, {CGPP,CGPPi,CNO}.
std::vector<IdentityCheck> m99_generator_identities();

// Each relation of M81 written over {CG,CGPP}, {CG,CGPP,CGPPi}, {CGPP,CGPPi,CNO}.
std::vector<IdentityCheck> m81_generator_identities();

// Relations of M99 that arise implicitly from chains of composition-idempotent
// relations; `n` is the chain length.
std::vector<IdentityCheck> m99_implicit_identities(int n);

struct SuiteLine {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Composition-table laws, generator closures, identity suites for n in {1,2},
// maximality of M72/M99/M81, and completeness of the classification.
std::vector<SuiteLine> run_verification_suite();

} // namespace mc4
