#include <gtest/gtest.h>

#include <set>

#include "mc4/rcc5.hpp"

using namespace mc4;
namespace r5 = mc4::rcc5;

TEST(Rcc5, OmegaRows) {
    EXPECT_EQ(r5::omega(Basic::cg), r5::Basic::eq);
    EXPECT_EQ(r5::omega(Basic::cgpp), r5::Basic::pp);
    EXPECT_EQ(r5::omega(Basic::cgppi), r5::Basic::ppi);
    EXPECT_EQ(r5::omega(Basic::cno), r5::Basic::po);
    std::set<r5::Basic> image;
    for (Basic b : all_basics) image.insert(r5::omega(b));
    EXPECT_EQ(image.size(), 4u);
}

TEST(Rcc5, OmegaRespectsConverse) {
    for (Basic b : all_basics) EXPECT_EQ(r5::omega(converse(b)), r5::converse(r5::omega(b)));
}

TEST(Rcc5, EnvelopeRows) {
    using B = r5::Basic;
    EXPECT_EQ(r5::envelope(Basic::cg), (r5::BasicSet{B::eq, B::dr, B::po}));
    EXPECT_EQ(r5::envelope(Basic::cgpp), (r5::BasicSet{B::pp, B::dr, B::po}));
    EXPECT_EQ(r5::envelope(Basic::cgppi), (r5::BasicSet{B::ppi, B::dr, B::po}));
    EXPECT_EQ(r5::envelope(Basic::cno), (r5::BasicSet{B::dr, B::po}));
    for (Basic b : all_basics) {
        EXPECT_TRUE(r5::envelope(b).contains(B::dr));
        EXPECT_TRUE(r5::envelope(b).contains(B::po));
        EXPECT_TRUE(r5::envelope(b).contains(r5::omega(b)));
    }
}

TEST(Rcc5, LiftRows) {
    EXPECT_EQ(r5::lift(r5::Basic::eq), rel::cg);
    EXPECT_EQ(r5::lift(r5::Basic::dr), rel::top);
    EXPECT_EQ(r5::lift(r5::Basic::po), rel::top);
    EXPECT_EQ(r5::lift(r5::Basic::pp), rel::cgpp);
    EXPECT_EQ(r5::lift(r5::Basic::ppi), rel::cgppi);
    // Every MC-4 basic whose envelope holds an RCC-5 basic lies in its lift.
    for (Basic b : all_basics) {
        for (r5::Basic r : r5::all_basics) {
            if (r5::envelope(b).contains(r)) EXPECT_TRUE(r5::lift(r).contains(b));
        }
    }
}

TEST(Rcc5, ScenarioMapping) {
    ConstraintNetwork net(std::vector<std::string>{"x", "y"});
    net.add_constraint(0, 1, rel::cgpp);
    const r5::Scenario s = r5::omega_scenario(net);
    ASSERT_EQ(s.pairs.size(), 1u);
    EXPECT_EQ(std::get<2>(s.pairs[0]), r5::Basic::pp);
    EXPECT_EQ(r5::serialize(s), "nodes: x y\nx y : PP\n");
    EXPECT_THROW(r5::omega_scenario(ConstraintNetwork(2)), NotAtomicError);
}
