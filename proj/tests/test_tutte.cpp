#include "tuttepo/families.hpp"
#include "tuttepo/tutte.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace tuttepo;

namespace {

const BiPoly X = BiPoly::x();
const BiPoly Y = BiPoly::y();

Multigraph random_tree(std::mt19937_64& rng, std::size_t n)
{
    Multigraph g(n);
    for (Vertex v = 1; v < n; ++v) {
        std::uniform_int_distribution<Vertex> parent(0, v - 1);
        g.add_edge(parent(rng), v);
    }
    return g;
}

} // namespace

TEST(Tutte, CycleClosedForm)
{
    EXPECT_EQ(tutte(cycle_graph(3)), X * X + X + Y);
    for (std::size_t n = 1; n <= 12; ++n) {
        BiPoly expected = Y;
        for (std::uint32_t i = 1; i < n; ++i)
            expected += BiPoly::x(i);
        EXPECT_EQ(tutte(cycle_graph(n)), expected) << n;
    }
}

TEST(Tutte, MultiedgeClosedForm)
{
    EXPECT_EQ(tutte(multiedge_graph(3)), X + Y + Y * Y);
    for (std::size_t m = 1; m <= 12; ++m) {
        BiPoly expected = X;
        for (std::uint32_t j = 1; j < m; ++j)
            expected += BiPoly::y(j);
        EXPECT_EQ(tutte(multiedge_graph(m)), expected) << m;
    }
}

TEST(Tutte, TreesArePowersOfX)
{
    std::mt19937_64 rng(1);
    for (std::size_t n = 1; n <= 14; ++n)
        EXPECT_EQ(tutte(random_tree(rng, n)), BiPoly::x(std::uint32_t(n - 1)));
    EXPECT_EQ(tutte(Multigraph(1)), BiPoly(1));
}

TEST(Tutte, OracleExamples)
{
    EXPECT_EQ(tutte_oracle(cycle_graph(3)), X * X + X + Y);
    EXPECT_EQ(tutte_oracle(multiedge_graph(1)), X);
    EXPECT_EQ(tutte_oracle(cycle_graph(2)), X + Y);
    EXPECT_THROW(tutte_oracle(complete_graph(7)), CapacityError);
}

TEST(Tutte, DerivedExamplesAgreeWithOracle)
{
    const Multigraph theta122 = build(theta_spec({1, 2, 2}));
    const BiPoly t122 = BiPoly::x(3) + 2 * BiPoly::x(2) + X + 2 * X * Y + Y + Y * Y;
    EXPECT_EQ(tutte_oracle(theta122), t122);
    EXPECT_EQ(tutte(theta122), t122);
    EXPECT_TRUE(isomorphic(theta122, delete_edge(complete_graph(4), Edge(0, 1))));

    const BiPoly k4 = BiPoly::x(3) + 3 * BiPoly::x(2) + 2 * X + 4 * X * Y + 2 * Y + 3 * Y * Y + BiPoly::y(3);
    EXPECT_EQ(tutte_oracle(complete_graph(4)), k4);
    EXPECT_EQ(tutte(complete_graph(4)), k4);
    EXPECT_EQ(k4.evaluate(Integer(1), Integer(1)), 16);
}

TEST(Tutte, RejectsDisconnected)
{
    EXPECT_THROW(tutte(Multigraph(2)), DomainError);
    const Multigraph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    EXPECT_THROW(tutte(two_triangles), DomainError);
    const BiPoly c3 = X * X + X + Y;
    EXPECT_EQ(default_engine().tutte_components(two_triangles), c3 * c3);
    EXPECT_EQ(tutte_oracle(two_triangles), c3 * c3);
}

TEST(Tutte, EarReduceExamples)
{
    // theta(1,2,3): the 1-ear
    const Multigraph t123 = build(theta_spec({1, 2, 3}));
    const auto ears = find_ears(t123);
    const Ear* one = nullptr;
    const Ear* two = nullptr;
    for (const Ear& e : ears) {
        if (e.length() == 1)
            one = &e;
        if (e.length() == 2)
            two = &e;
    }
    ASSERT_NE(one, nullptr);
    EarReduction r = ear_reduce(t123, *one);
    EXPECT_EQ(r.coefficient, BiPoly(1));
    EXPECT_TRUE(isomorphic(r.deleted, cycle_graph(5)));
    EXPECT_TRUE(isomorphic(r.contracted, build(parse_family("C2*C3"))));
    EXPECT_EQ(tutte_oracle(t123), tutte(cycle_graph(5)) + (X + Y) * (X * X + X + Y));
    EXPECT_EQ(r.coefficient * tutte_oracle(r.deleted) + tutte_oracle(r.contracted), tutte_oracle(t123));

    ASSERT_NE(two, nullptr);
    r = ear_reduce(t123, *two);
    EXPECT_EQ(r.coefficient, 1 + X);
    EXPECT_TRUE(isomorphic(r.deleted, cycle_graph(4)));

    // theta(2,2,2)
    const Multigraph t222 = build(theta_spec({2, 2, 2}));
    const Ear first = find_ears(t222).front();
    ASSERT_EQ(first.length(), 2u);
    r = ear_reduce(t222, first);
    EXPECT_EQ(r.coefficient, 1 + X);
    EXPECT_TRUE(isomorphic(r.deleted, cycle_graph(4)));
    EXPECT_TRUE(isomorphic(r.contracted, build(parse_family("C2*C2"))));
    EXPECT_EQ(r.coefficient * tutte_oracle(r.deleted) + tutte_oracle(r.contracted), tutte_oracle(t222));
}

TEST(Tutte, EarReduceRejectsBridges)
{
    const Multigraph paw(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    for (const Ear& e : find_ears(paw)) {
        const bool has_bridge = std::any_of(e.edges.begin(), e.edges.end(), [&](std::size_t i) { return i == 3; });
        if (has_bridge) {
            EXPECT_THROW(ear_reduce(paw, e), DomainError);
        } else {
            EXPECT_NO_THROW(ear_reduce(paw, e));
        }
    }
    EXPECT_THROW(ear_reduce(cycle_graph(4), find_ears(cycle_graph(4)).front()), DomainError);
}

TEST(Tutte, EarReductionHoldsOnRandomGraphs)
{
    std::mt19937_64 rng(77);
    for (int t = 0; t < 60; ++t) {
        const Multigraph g = oracle::random_two_connected(rng, 12);
        const BiPoly expected = tutte_oracle(g);
        for (const Ear& e : find_ears(g)) {
            if (e.cycle)
                continue;
            const EarReduction r = ear_reduce(g, e);
            EXPECT_EQ(r.coefficient * tutte_oracle(r.deleted) + tutte_oracle(r.contracted), expected);
            EXPECT_EQ(r.coefficient, geometric_sum(true, int(e.length())));
        }
    }
}

TEST(Tutte, MatchesOracleOnRandomMultigraphs)
{
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 100; ++t) {
        const Multigraph g = oracle::random_connected_multigraph(rng, 8, 14);
        EXPECT_EQ(tutte(g), tutte_oracle(g)) << to_edge_string(g);
    }
}

TEST(Tutte, IndependentOfStrategy)
{
    std::mt19937_64 rng(99);
    const std::vector<TutteOptions> strategies{
        {true, true, EdgeChoice::MaxDegreeSum}, {false, true, EdgeChoice::MaxDegreeSum},
        {true, false, EdgeChoice::MinDegreeSum}, {false, false, EdgeChoice::First},
        {true, true, EdgeChoice::First},
    };
    for (int t = 0; t < 60; ++t) {
        const Multigraph g = oracle::random_connected_multigraph(rng, 9, 16);
        const BiPoly reference = TutteEngine(strategies[0]).tutte(g);
        for (const auto& opts : strategies)
            EXPECT_EQ(TutteEngine(opts).tutte(g), reference);
        EXPECT_EQ(TutteEngine(strategies[0]).tutte(oracle::random_relabel(g, rng)), reference);
    }
}

TEST(Tutte, MultipliesOverBlocks)
{
    std::mt19937_64 rng(5150);
    for (int t = 0; t < 100; ++t) {
        const Multigraph a = oracle::random_two_connected(rng, 9);
        const Multigraph b = oracle::random_two_connected(rng, 9);
        std::uniform_int_distribution<Vertex> pa(0, Vertex(a.vertex_count() - 1)), pb(0, Vertex(b.vertex_count() - 1));
        const Multigraph joined = join_at(a, pa(rng), b, pb(rng));
        EXPECT_EQ(tutte(joined), tutte(a) * tutte(b));
    }
}

TEST(Tutte, EvaluationsCountSubgraphs)
{
    std::mt19937_64 rng(8);
    for (int t = 0; t < 80; ++t) {
        const Multigraph g = oracle::random_connected_multigraph(rng, 6, 12);
        const BiPoly tg = tutte(g);
        EXPECT_EQ(tg.evaluate(Integer(1), Integer(1)), oracle::count_spanning_trees(g));
        EXPECT_EQ(tg.evaluate(Integer(2), Integer(2)), Integer(1) << g.edge_count());
        EXPECT_TRUE(tg.all_coefficients_nonnegative());
    }
}

TEST(Tutte, CacheValuesMatchOracle)
{
    auto cache = std::make_shared<TutteCache>();
    const TutteEngine engine({}, cache);
    std::mt19937_64 rng(31);
    std::vector<Multigraph> blocks;
    for (int t = 0; t < 30; ++t) {
        blocks.push_back(oracle::random_two_connected(rng, 13));
        engine.tutte(blocks.back());
    }
    EXPECT_GT(cache->size(), 0u);
    for (const Multigraph& b : blocks) {
        if (b.vertex_count() == b.edge_count())
            continue; // cycles use the closed form and are never cached
        const auto hit = cache->find(canonical_key(b));
        ASSERT_TRUE(hit.has_value());
        EXPECT_EQ(*hit, tutte_oracle(b));
    }
    const auto hits_before = cache->hits();
    engine.tutte(complete_graph(5));
    engine.tutte(oracle::random_relabel(complete_graph(5), rng));
    EXPECT_GT(cache->hits(), hits_before);
}

TEST(Tutte, CacheByteCapStopsInsertion)
{
    auto cache = std::make_shared<TutteCache>(0);
    const TutteEngine engine({}, cache);
    EXPECT_EQ(engine.tutte(complete_graph(5)), tutte_oracle(complete_graph(5)));
    EXPECT_EQ(cache->size(), 0u);
}

TEST(Tutte, LargerGraphsStayExact)
{
    // K7 has 7^5 spanning trees; the engine handles it well beyond the oracle's range.
    const BiPoly k7 = tutte(complete_graph(7));
    EXPECT_EQ(k7.evaluate(Integer(1), Integer(1)), 16807);
    EXPECT_EQ(k7.evaluate(Integer(2), Integer(2)), Integer(1) << 21);
    // Petersen graph: 2000 spanning trees.
    Multigraph petersen(10);
    for (Vertex i = 0; i < 5; ++i) {
        petersen.add_edge(i, (i + 1) % 5);
        petersen.add_edge(i, i + 5);
        petersen.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    EXPECT_EQ(tutte(petersen).evaluate(Integer(1), Integer(1)), 2000);
}
