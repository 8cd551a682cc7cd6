#include <gtest/gtest.h>

#include "mc4/identities.hpp"
#include "mc4/subalgebra.hpp"

using namespace mc4;

TEST(Identities, GeneratorSuites) {
    const auto m99 = m99_generator_identities();
    const auto m81 = m81_generator_identities();
    EXPECT_EQ(m99.size(), 11u);
    EXPECT_EQ(m81.size(), 7u);
    for (const auto& c : m99) EXPECT_TRUE(c.passed()) << c.id;
    for (const auto& c : m81) EXPECT_TRUE(c.passed()) << c.id;
    EXPECT_EQ(m99[1].actual, rel::cg);
    EXPECT_EQ(m81[5].actual, catalog::proper);
}

TEST(Identities, GeneratorSuitesCoverTheirAlgebras) {
    RelationSet hit99{rel::top}, hit81;
    for (const auto& c : m99_generator_identities()) hit99.insert(c.expected);
    for (const auto& c : m81_generator_identities()) hit81.insert(c.expected);
    hit99 = hit99 | catalog::g99;
    hit81 = hit81 | catalog::g81;
    EXPECT_EQ(hit99, catalog::m99);
    EXPECT_EQ(hit81, catalog::m81);
}

TEST(Identities, ImplicitSuite) {
    for (int n = 1; n <= 4; ++n) {
        const auto checks = m99_implicit_identities(n);
        EXPECT_EQ(checks.size(), 13u);
        for (const auto& c : checks) EXPECT_TRUE(c.passed()) << c.id << " n=" << n;
    }
}

TEST(Identities, ComposePower) {
    EXPECT_EQ(compose_power(rel::cgpp, 3), rel::cgpp);
    EXPECT_EQ(compose_power(rel::cno, 2), rel::top);
    EXPECT_THROW(compose_power(rel::cg, 0), std::invalid_argument);
}

TEST(Identities, VerificationSuitePasses) {
    for (const auto& line : run_verification_suite()) EXPECT_TRUE(line.passed) << line.name << " " << line.detail;
}
