#include <gtest/gtest.h>

#include <algorithm>

#include "mc4/solvers.hpp"

using namespace mc4;

namespace {

ConstraintNetwork network(std::size_t n, std::initializer_list<std::tuple<Vertex, Vertex, Relation>> edges) {
    ConstraintNetwork net(n);
    for (auto [i, j, r] : edges) net.add_constraint(i, j, r);
    return net;
}

const ConstraintNetwork cgpp_cycle = network(3, {{0, 1, rel::cgpp}, {1, 2, rel::cgpp}, {2, 0, rel::cgpp}});
const ConstraintNetwork cgpp_chain = network(3, {{0, 1, rel::cgpp}, {1, 2, rel::cgpp}});

// A consistent verdict must carry an atomic, closed refinement of the input.
void expect_valid_scenario(const ConstraintNetwork& net, const Verdict& v) {
    ASSERT_TRUE(v.consistent);
    ASSERT_TRUE(v.scenario.has_value());
    const Scenario& s = *v.scenario;
    ASSERT_EQ(s.size(), net.size());
    EXPECT_TRUE(s.is_atomic());
    EXPECT_TRUE(is_algebraically_closed(s));
    for (Vertex i = 0; i < net.size(); ++i) {
        for (Vertex j = 0; j < net.size(); ++j) EXPECT_TRUE(s.label(i, j).is_subset_of(net.label(i, j)));
    }
}

} // namespace

TEST(Oracle, Examples) {
    const Verdict cycle = solve_oracle(cgpp_cycle);
    EXPECT_FALSE(cycle.consistent);
    ASSERT_TRUE(cycle.witness.has_value());
    EXPECT_EQ(cycle.witness->kind, Witness::Kind::search_exhausted);

    const Verdict top = solve_oracle(ConstraintNetwork(2));
    expect_valid_scenario(ConstraintNetwork(2), top);
    EXPECT_EQ(top.scenario->label(0, 1), rel::cg);

    const ConstraintNetwork both = network(2, {{0, 1, rel::cg | rel::cgpp}, {1, 0, rel::cg | rel::cgpp}});
    EXPECT_EQ(both.label(0, 1), rel::cg);
    EXPECT_TRUE(solve_oracle(both).consistent);

    EXPECT_THROW(solve_oracle(ConstraintNetwork(7)), OracleLimitError);
    EXPECT_NO_THROW(solve_oracle(ConstraintNetwork(7), 7));
}

TEST(Backtracking, Examples) {
    const Verdict bottom = solve_backtracking(network(3, {{0, 1, rel::bottom}}));
    EXPECT_FALSE(bottom.consistent);
    ASSERT_TRUE(bottom.witness.has_value());
    EXPECT_EQ(bottom.witness->kind, Witness::Kind::bottom_edge);

    const ConstraintNetwork top(3);
    const Verdict v = solve_backtracking(top);
    expect_valid_scenario(top, v);
    for (Vertex i = 0; i < 3; ++i) {
        for (Vertex j = i + 1; j < 3; ++j) EXPECT_EQ(v.scenario->label(i, j), rel::cg);
    }
    EXPECT_FALSE(solve_backtracking(cgpp_cycle).consistent);
    expect_valid_scenario(cgpp_chain, solve_backtracking(cgpp_chain));
}

TEST(Backtracking, AgreesWithOracle) {
    for (std::uint64_t seed = 0; seed < 1500; ++seed) {
        const ConstraintNetwork net = random_network(2 + seed % 4, 0.8, catalog::full, seed);
        const Verdict b = solve_backtracking(net);
        EXPECT_EQ(b.consistent, solve_oracle(net).consistent) << serialize_network(net);
        if (b.consistent) expect_valid_scenario(net, b);
    }
}

TEST(Backtracking, PlantedNetworksAreConsistent) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const ConstraintNetwork net = planted_network(40, 0.6, catalog::full, seed);
        expect_valid_scenario(net, solve_backtracking(net));
    }
}

TEST(TrivialCore, Examples) {
    const ConstraintNetwork s = network(3, {{0, 1, rel::cg | rel::cno}, {1, 2, rel::cg | rel::cno}});
    expect_valid_scenario(s, solve_trivial_core(s, rel::cg));
    EXPECT_FALSE(solve_trivial_core(network(3, {{0, 1, rel::bottom}}), rel::cg).consistent);
    EXPECT_THROW(solve_trivial_core(network(2, {{0, 1, rel::cgpp}}), rel::cg), PreconditionError);
    EXPECT_THROW(solve_trivial_core(s, rel::cgpp), PreconditionError);

    const ConstraintNetwork proper = network(4, {{0, 1, catalog::proper}, {2, 1, rel::cgpp | rel::cgppi | rel::cno}});
    expect_valid_scenario(proper, solve_trivial_core(proper, catalog::proper));
    const ConstraintNetwork cno = network(3, {{0, 1, rel::cno | rel::cgpp}, {2, 1, rel::cno}});
    expect_valid_scenario(cno, solve_trivial_core(cno, rel::cno));
}

TEST(Gadgets, Psi99Examples) {
    const GadgetGraph pp = psi99(network(2, {{0, 1, rel::cgpp}}));
    EXPECT_EQ(pp.vertex_count, 2u);
    EXPECT_EQ(pp.leq_arcs, (std::vector<std::pair<std::uint32_t, std::uint32_t>>{{0, 1}}));
    EXPECT_EQ(pp.nle_edges.size(), 1u);
    EXPECT_TRUE(pp.eqx_edges.empty());

    const GadgetGraph aux = psi99(network(2, {{0, 1, rel::cg | rel::cgpp | rel::cno}}));
    EXPECT_EQ(aux.vertex_count, 3u);
    EXPECT_EQ(aux.leq_arcs, (std::vector<std::pair<std::uint32_t, std::uint32_t>>{{0, 2}}));
    ASSERT_EQ(aux.eqx_edges.size(), 1u);
    const auto [a, b] = aux.eqx_edges.front();
    EXPECT_EQ(std::min(a, b), 1u);
    EXPECT_EQ(std::max(a, b), 2u);

    const GadgetGraph top = psi99(ConstraintNetwork(2));
    EXPECT_TRUE(top.leq_arcs.empty() && top.eqx_edges.empty() && top.nle_edges.empty());
    EXPECT_TRUE(psi99(network(2, {{0, 1, rel::bottom}})).bottom_flag);
}

TEST(Gadgets, Psi81Examples) {
    const GadgetGraph proper = psi81(network(2, {{0, 1, catalog::proper}}));
    EXPECT_EQ(proper.bsy_edges.size(), 1u);
    EXPECT_EQ(proper.nle_edges.size(), 1u);
    EXPECT_TRUE(proper.leq_arcs.empty());

    const GadgetGraph cg = psi81(network(2, {{0, 1, rel::cg}}));
    auto arcs = cg.leq_arcs;
    std::sort(arcs.begin(), arcs.end());
    EXPECT_EQ(arcs, (std::vector<std::pair<std::uint32_t, std::uint32_t>>{{0, 1}, {1, 0}}));

    const GadgetGraph top = psi81(ConstraintNetwork(2));
    EXPECT_TRUE(top.leq_arcs.empty() && top.bsy_edges.empty() && top.nle_edges.empty());
    EXPECT_THROW(psi81(network(2, {{0, 1, rel::cno}})), PreconditionError);
    EXPECT_THROW(psi99(network(2, {{0, 1, catalog::proper}})), PreconditionError);
}

// x r y, y CG z, x b z is consistent exactly when b lies in r, so each gadget
// must admit precisely the basics of its relation.
TEST(Gadgets, EncodeExactlyTheirRelation) {
    const auto check = [](RelationSet algebra, auto solver) {
        for (Relation r : algebra.members()) {
            for (Basic b : all_basics) {
                if (!algebra.contains(Relation{b})) continue;
                ConstraintNetwork net(3);
                net.add_constraint(0, 1, r);
                net.add_constraint(1, 2, rel::cg);
                net.add_constraint(0, 2, Relation{b});
                EXPECT_EQ(solver(net).consistent, r.contains(b)) << format_relation(r) << " vs " << basic_name(b);
            }
        }
    };
    check(catalog::m99, solve_m99);
    check(catalog::m81, solve_m81);
}

// The empty relation written as three generator edges must be caught by the
// cycle detector itself, just like the shortcut flag.
TEST(Gadgets, GeneratorRouteForEmptyRelation) {
    GadgetGraph g99;
    g99.original_count = g99.vertex_count = 2;
    g99.leq_arcs = {{0, 1}};
    g99.eqx_edges = {{0, 1}};
    g99.nle_edges = {{0, 1}};
    EXPECT_FALSE(detect_m99(g99).consistent);
    EXPECT_FALSE(detect_m99(psi99(network(2, {{0, 1, rel::bottom}}))).consistent);

    GadgetGraph g81;
    g81.original_count = g81.vertex_count = 2;
    g81.leq_arcs = {{0, 1}, {1, 0}};
    g81.nle_edges = {{0, 1}};
    EXPECT_FALSE(detect_m81(g81).consistent);
    EXPECT_FALSE(detect_m81(psi81(network(2, {{0, 1, rel::bottom}}))).consistent);
}

TEST(DetectM99, Examples) {
    const Verdict cycle = solve_m99(cgpp_cycle);
    EXPECT_FALSE(cycle.consistent);
    ASSERT_TRUE(cycle.witness.has_value());
    EXPECT_EQ(cycle.witness->kind, Witness::Kind::cycle_chord);
    auto members = cycle.witness->vertices;
    std::sort(members.begin(), members.end());
    EXPECT_EQ(members, (std::vector<Vertex>{0, 1, 2}));

    GadgetGraph g = psi99(network(2, {{0, 1, catalog::leq}}));
    const GadgetGraph s = psi99(network(2, {{1, 0, catalog::leq_or_cno}}));
    const GadgetGraph t = psi99(network(2, {{0, 1, catalog::not_leq}}));
    g.eqx_edges.insert(g.eqx_edges.end(), s.eqx_edges.begin(), s.eqx_edges.end());
    g.nle_edges.insert(g.nle_edges.end(), t.nle_edges.begin(), t.nle_edges.end());
    DetectStats stats;
    EXPECT_FALSE(detect_m99(g, &stats).consistent);
    EXPECT_GE(stats.merges, 1u);

    EXPECT_TRUE(solve_m99(cgpp_chain).consistent);
}

TEST(DetectM81, Examples) {
    GadgetGraph g = psi81(network(2, {{0, 1, rel::cg}}));
    const GadgetGraph p = psi81(network(2, {{0, 1, catalog::proper}}));
    g.nle_edges.insert(g.nle_edges.end(), p.nle_edges.begin(), p.nle_edges.end());
    g.bsy_edges.insert(g.bsy_edges.end(), p.bsy_edges.begin(), p.bsy_edges.end());
    EXPECT_FALSE(detect_m81(g).consistent);

    GadgetGraph e = psi81(network(2, {{0, 1, rel::cgpp}}));
    const GadgetGraph back = psi81(network(2, {{1, 0, catalog::leq}}));
    e.leq_arcs.insert(e.leq_arcs.end(), back.leq_arcs.begin(), back.leq_arcs.end());
    EXPECT_FALSE(detect_m81(e).consistent);

    EXPECT_TRUE(solve_m81(cgpp_chain).consistent);
}

TEST(Tractable, AgreeWithOracle) {
    const std::pair<RelationSet, Verdict (*)(const ConstraintNetwork&)> cases[] = {
        {catalog::m99, solve_m99}, {catalog::g99, solve_m99}, {catalog::m81, solve_m81}, {catalog::g81, solve_m81}};
    for (const auto& [profile, solver] : cases) {
        for (std::uint64_t seed = 0; seed < 800; ++seed) {
            const ConstraintNetwork net = random_network(2 + seed % 4, 0.9, profile, seed);
            EXPECT_EQ(solver(net).consistent, solve_oracle(net).consistent) << serialize_network(net);
        }
    }
}

TEST(Tractable, PlantedNetworksAreConsistent) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        EXPECT_TRUE(solve_m99(planted_network(300, 0.8, catalog::m99, seed)).consistent);
        EXPECT_TRUE(solve_m81(planted_network(300, 0.8, catalog::m81, seed)).consistent);
    }
}

TEST(Dispatch, RoutesByProfile) {
    const ConstraintNetwork g99 = network(3, {{0, 1, catalog::leq}, {1, 2, catalog::leq_or_cno}, {0, 2, catalog::not_leq}});
    EXPECT_EQ(solve(g99).solver, "m99");
    const ConstraintNetwork hard = network(3, {{0, 1, rel::cno}, {1, 2, catalog::proper}});
    EXPECT_EQ(solve(hard).solver, "backtracking");
    EXPECT_EQ(solve(hard).tractability.tag, TractabilityTag::np_hard);
    const SolveResult top = solve(ConstraintNetwork(4));
    EXPECT_EQ(top.solver, "trivial_core");
    EXPECT_TRUE(top.verdict.consistent);
}

TEST(Dispatch, AgreesWithEveryApplicableSolver) {
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        const RelationSet profiles[] = {catalog::m72, catalog::m99, catalog::m81, catalog::full};
        const ConstraintNetwork net = random_network(5, 0.7, profiles[seed % 4], seed);
        const bool expected = solve_oracle(net).consistent;
        EXPECT_EQ(solve(net).verdict.consistent, expected);
        EXPECT_EQ(solve_backtracking(net).consistent, expected);
        const RelationSet p = relation_profile(net);
        if (p.is_subset_of(catalog::m99)) EXPECT_EQ(solve_m99(net).consistent, expected);
        if (p.is_subset_of(catalog::m81)) EXPECT_EQ(solve_m81(net).consistent, expected);
        if (p.is_subset_of(catalog::m72)) EXPECT_EQ(solve_trivial_core(net, rel::cg).consistent, expected);
    }
}

TEST(Verdicts, Json) {
    const std::string json = verdict_json(cgpp_cycle, solve_m99(cgpp_cycle), "m99");
    EXPECT_NE(json.find("\"consistent\":false"), std::string::npos);
    EXPECT_NE(json.find("\"scenario\":null"), std::string::npos);
    EXPECT_NE(json.find("\"cycle_chord\""), std::string::npos);
}
