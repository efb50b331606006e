#include "tuttepo/canon.hpp"
#include "tuttepo/families.hpp"
#include "tuttepo/tutte.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tuttepo;

namespace {

Multigraph g(const std::string& dsl) { return build(parse_family(dsl)); }

void expect_counts(const std::string& dsl, std::size_t n, std::size_t m)
{
    const Multigraph graph = g(dsl);
    EXPECT_EQ(graph.vertex_count(), n) << dsl;
    EXPECT_EQ(graph.edge_count(), m) << dsl;
    EXPECT_TRUE(graph.is_connected()) << dsl;
}

} // namespace

TEST(Families, VertexAndEdgeCounts)
{
    expect_counts("C5", 5, 5);
    expect_counts("K2", 2, 1);
    expect_counts("M4", 2, 4);
    expect_counts("theta:1,2,3", 5, 6);
    expect_counts("theta:2,2,2,2", 6, 8);
    // delta: 3 branch vertices, box and cylinder: 4
    expect_counts("delta:1,2,1,2,3", 3 + 0 + 1 + 0 + 1 + 2, 9);
    expect_counts("box:1,1,1,1,1,1", 4, 6);
    expect_counts("box:2,1,1,1,1,3", 7, 9);
    expect_counts("cyl:1,2,2,1,1,1", 6, 8);
    expect_counts("C3*C4*K2", 7, 8);
}

TEST(Families, SmallMembersAreKnownGraphs)
{
    EXPECT_TRUE(isomorphic(g("box:1,1,1,1,1,1"), complete_graph(4)));
    EXPECT_TRUE(isomorphic(g("theta:1,2,2"), Multigraph(4, {{0, 1}, {0, 2}, {2, 1}, {0, 3}, {3, 1}})));
    EXPECT_TRUE(isomorphic(g("K2"), path_graph(1)));
    EXPECT_TRUE(isomorphic(g("M3"), multiedge_graph(3)));
    // theta(2,2,2) is K_{2,3}
    Multigraph k23(5);
    for (Vertex a : {0u, 1u})
        for (Vertex b : {2u, 3u, 4u})
            k23.add_edge(a, b);
    EXPECT_TRUE(isomorphic(g("theta:2,2,2"), k23));
}

TEST(Families, ParseErrorsCarryPositions)
{
    const std::vector<std::pair<std::string, std::size_t>> bad{
        {"", 0}, {"C", 1}, {"C3*", 3}, {"Q5", 0}, {"theta:1,2", 0}, {"box:1,1,1", 0},
        {"C0", 0}, {"C3 C4", 3}, {"theta:1,1,3", 0}, {"delta:1,1,2,2,2", 0},
    };
    for (const auto& [text, position] : bad) {
        try {
            parse_family(text);
            ADD_FAILURE() << "accepted '" << text << "'";
        } catch (const ParseError& e) {
            EXPECT_EQ(e.position(), position) << text;
        }
    }
    EXPECT_NO_THROW(parse_family(" C3 * C4 "));
    EXPECT_NO_THROW(parse_family("M2*C1"));
}

TEST(Families, RenderingRoundTrips)
{
    for (const std::string text : {"C5", "theta:1,2,3", "delta:1,2,2,2,3", "box:1,2,3,1,2,3", "cyl:2,2,1,2,1,1",
                                   "C3*C4*K2"})
        EXPECT_EQ(to_string(parse_family(text)), text);
}

TEST(Families, SimplicityOfSpecs)
{
    EXPECT_TRUE(is_simple_spec(parse_family("theta:1,2,2")));
    EXPECT_TRUE(is_simple_spec(parse_family("box:1,1,1,1,1,1")));
    EXPECT_FALSE(is_simple_spec(parse_family("M2")));
    EXPECT_FALSE(is_simple_spec(parse_family("C2*K2")));
    for (const char* dsl : {"theta:1,2,2", "delta:1,2,1,2,1", "cyl:1,2,1,2,1,1", "box:1,1,2,1,1,2"})
        EXPECT_TRUE(g(dsl).is_simple()) << dsl;
}

TEST(Families, CylinderAndDeltaShareTutte)
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> len(1, 4);
    for (int t = 0; t < 50; ++t) {
        int v[6];
        for (int& x : v)
            x = len(rng);
        const Multigraph cyl = build(cylinder_spec(v[0], v[1], v[2], v[3], v[4], v[5]));
        const Multigraph delta = build(delta_spec(v[0], v[1], v[2], v[3], v[4] + v[5]));
        EXPECT_EQ(tutte(cyl), tutte(delta));
        if (cyl.edge_count() <= 14) {
            EXPECT_EQ(tutte_oracle(cyl), tutte(delta));
        }
    }
}

TEST(Families, JoinOrderDoesNotChangeTutte)
{
    const BiPoly t = tutte(g("C3*theta:1,2,3*K2"));
    EXPECT_EQ(tutte(g("K2*C3*theta:1,2,3")), t);
    EXPECT_EQ(tutte(g("theta:1,2,3*K2*C3")), t);
    EXPECT_EQ(t, tutte(g("C3")) * tutte(g("theta:1,2,3")) * BiPoly::x());
}

TEST(Families, StarGraphs)
{
    EXPECT_EQ(to_string(theta_star_spec(4)), "theta:1,2,2");
    EXPECT_EQ(to_string(theta_star_spec(5)), "theta:2,2,2");
    EXPECT_EQ(to_string(theta_star_spec(6)), "theta:2,2,3");
    EXPECT_EQ(to_string(theta_star_spec(9)), "theta:3,3,4");
    EXPECT_EQ(to_string(box_star_spec(4)), "box:1,1,1,1,1,1");
    EXPECT_EQ(to_string(box_star_spec(5)), "box:2,1,1,1,1,1");
    EXPECT_EQ(to_string(box_star_spec(6)), "box:2,2,1,1,1,1");
    EXPECT_EQ(to_string(box_star_spec(7)), "box:2,2,2,1,1,1");
    EXPECT_EQ(to_string(box_star_spec(8)), "box:2,2,2,2,1,1");
    for (int n = 4; n <= 12; ++n) {
        const Multigraph th = theta_star(n), bx = box_star(n);
        EXPECT_TRUE(th.is_simple());
        EXPECT_TRUE(bx.is_simple());
        EXPECT_EQ(th.vertex_count(), std::size_t(n));
        EXPECT_EQ(th.edge_count(), std::size_t(n + 1));
        EXPECT_EQ(bx.vertex_count(), std::size_t(n));
        EXPECT_EQ(bx.edge_count(), std::size_t(n + 2));
    }
    EXPECT_THROW(theta_star(3), DomainError);
    EXPECT_THROW(box_star(3), DomainError);
}

TEST(Families, RecognitionRoundTripsUpToIsomorphism)
{
    std::mt19937_64 rng(11);
    for (const char* dsl : {"C7", "theta:1,3,4", "theta:2,2,3,3", "delta:1,2,3,2,2", "box:2,1,3,1,1,2",
                            "cyl:1,2,2,3,1,2", "C3*C3*K2", "theta:2,2,2*K2", "M3*C4"}) {
        const Multigraph graph = oracle::random_relabel(g(dsl), rng);
        const auto name = recognize_family(graph);
        ASSERT_TRUE(name.has_value()) << dsl;
        EXPECT_TRUE(isomorphic(g(*name), graph)) << dsl << " -> " << *name;
    }
    EXPECT_FALSE(recognize_family(complete_graph(5)).has_value());
    EXPECT_FALSE(recognize_family(Multigraph(3, {{0, 1}})).has_value());
}
