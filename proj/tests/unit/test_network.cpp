#include <gtest/gtest.h>

#include <random>

#include "mc4/network.hpp"

using namespace mc4;

namespace {

ConstraintNetwork chain(std::initializer_list<Relation> labels) {
    ConstraintNetwork net(labels.size() + 1);
    Vertex v = 0;
    for (Relation r : labels) {
        net.add_constraint(v, v + 1, r);
        ++v;
    }
    return net;
}

// Path consistency only ever narrows labels.
bool survives(const ConstraintNetwork& net, const ConstraintNetwork& refined) {
    for (Vertex i = 0; i < net.size(); ++i) {
        for (Vertex j = 0; j < net.size(); ++j) {
            if (!refined.label(i, j).is_subset_of(net.label(i, j))) return false;
        }
    }
    return true;
}

} // namespace

TEST(Network, AddConstraint) {
    ConstraintNetwork net(2);
    EXPECT_EQ(net.label(0, 1), rel::top);
    net.add_constraint(0, 1, rel::top);
    EXPECT_EQ(net.label(0, 1), rel::top);
    net.add_constraint(1, 0, rel::cg | rel::cgpp);
    EXPECT_EQ(net.label(0, 1), rel::cg | rel::cgppi);
    EXPECT_EQ(net.label(1, 0), rel::cg | rel::cgpp);
    net.add_constraint(0, 1, rel::cg);
    net.add_constraint(0, 1, rel::cno);
    EXPECT_EQ(net.label(0, 1), rel::bottom);
    EXPECT_TRUE(net.has_empty_label());
}

TEST(Network, SelfLabels) {
    ConstraintNetwork net(2);
    EXPECT_EQ(net.label(1, 1), rel::cg);
    EXPECT_THROW(net.set_label(0, 0, rel::cg), std::invalid_argument);
    net.add_constraint(1, 1, rel::cgpp);
    EXPECT_TRUE(net.self_contradiction());
    EXPECT_EQ(net.self_contradiction_vertex(), Vertex{1});
}

TEST(Network, Profile) {
    EXPECT_EQ(relation_profile(ConstraintNetwork(3)), catalog::minimal_expressive);
    EXPECT_EQ(relation_profile(chain({rel::cgpp})), (RelationSet{rel::bottom, rel::cgpp, rel::cgppi, rel::top}));
    ConstraintNetwork net(3);
    net.add_constraint(0, 1, rel::cg | rel::cgpp);
    net.add_constraint(1, 2, rel::cg | rel::cno);
    EXPECT_EQ(relation_profile(net),
              (RelationSet{rel::bottom, rel::cg | rel::cgpp, rel::cg | rel::cgppi, rel::cg | rel::cno, rel::top}));
}

TEST(Network, PathConsistencyExamples) {
    auto r = path_consistency(chain({rel::cgpp, rel::cgpp}));
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.network.label(0, 2), rel::cgpp);

    ConstraintNetwork cycle = chain({rel::cgpp, rel::cgpp});
    cycle.add_constraint(2, 0, rel::cgpp);
    EXPECT_FALSE(path_consistency(cycle).ok);

    ConstraintNetwork scenario = chain({rel::cgpp, rel::cgpp});
    scenario.add_constraint(0, 2, rel::cgpp);
    auto s = path_consistency(scenario);
    EXPECT_TRUE(s.ok);
    EXPECT_EQ(s.network, scenario);
}

TEST(Network, PathConsistencySoundAndIdempotent) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const ConstraintNetwork net = random_network(6, 0.7, catalog::full, seed);
        const auto first = path_consistency(net);
        EXPECT_TRUE(survives(net, first.network));
        if (!first.ok) continue;
        const auto second = path_consistency(first.network);
        EXPECT_TRUE(second.ok);
        EXPECT_EQ(second.network, first.network);
        for (Vertex i = 0; i < net.size(); ++i) {
            for (Vertex j = 0; j < net.size(); ++j) {
                EXPECT_EQ(first.network.label(j, i), converse(first.network.label(i, j)));
                for (Vertex k = 0; k < net.size(); ++k) {
                    EXPECT_TRUE(first.network.label(i, j).is_subset_of(compose(first.network.label(i, k), first.network.label(k, j))));
                }
            }
        }
    }
}

TEST(Network, AlgebraicClosure) {
    ConstraintNetwork a = chain({rel::cgpp, rel::cgpp});
    a.add_constraint(0, 2, rel::cgpp);
    EXPECT_TRUE(is_algebraically_closed(a));
    ConstraintNetwork b = chain({rel::cg, rel::cg});
    b.add_constraint(0, 2, rel::cno);
    EXPECT_FALSE(is_algebraically_closed(b));
    EXPECT_TRUE(is_algebraically_closed(chain({rel::cno})));
    EXPECT_THROW(is_algebraically_closed(ConstraintNetwork(3)), NotAtomicError);
}

TEST(Network, Parse) {
    const ConstraintNetwork net = parse_network("nodes: a b\na b : CG|CGPP\n");
    ASSERT_EQ(net.size(), 2u);
    EXPECT_EQ(net.label(0, 1), rel::cg | rel::cgpp);
    EXPECT_EQ(net.name(1), "b");

    const ConstraintNetwork sparse = parse_network("# comment\nnodes: x y z\nx y : CNO\n");
    EXPECT_EQ(sparse.label(0, 2), rel::top);
    EXPECT_EQ(parse_network(serialize_network(sparse)), sparse);
}

TEST(Network, ParseErrorsCarryLine) {
    const auto line_of = [](const char* text) -> std::size_t {
        try {
            parse_network(text);
        } catch (const NetworkParseError& e) {
            return e.line();
        }
        return 0;
    };
    EXPECT_EQ(line_of("nodes: a b\na a : CGPP\n"), 2u);
    EXPECT_EQ(line_of("nodes: a b\n\na c : CG\n"), 3u);
    EXPECT_EQ(line_of("nodes: a a\n"), 1u);
    EXPECT_EQ(line_of("a b : CG\n"), 1u);
    EXPECT_EQ(line_of("nodes: a b\na b : CGX\n"), 2u);
    EXPECT_EQ(line_of("nodes: a b\na b CG\n"), 2u);
    EXPECT_EQ(line_of("nodes: a b\na a : CG|CGPP\n"), 0u);
}

TEST(Network, RandomGenerator) {
    EXPECT_EQ(random_network(5, 0.5, catalog::full, 42), random_network(5, 0.5, catalog::full, 42));
    EXPECT_EQ(random_network(6, 0.0, catalog::full, 3), ConstraintNetwork(6));
    const ConstraintNetwork t = random_network(6, 1.0, RelationSet{rel::cgpp}, 3);
    for (Vertex i = 0; i < 6; ++i) {
        for (Vertex j = i + 1; j < 6; ++j) EXPECT_TRUE(t.label(i, j) == rel::cgpp || t.label(i, j) == rel::cgppi);
    }
    const ConstraintNetwork m = random_network(30, 0.8, catalog::m99, 8);
    EXPECT_TRUE(relation_profile(m).is_subset_of(catalog::m99));
    EXPECT_THROW(random_network(3, 1.5, catalog::full, 1), std::invalid_argument);
    EXPECT_THROW(random_network(3, 0.5, RelationSet{rel::bottom}, 1), std::invalid_argument);
}
