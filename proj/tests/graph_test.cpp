#include <gtest/gtest.h>

#include "burnkit/graph.hpp"
#include "generators.hpp"

namespace burnkit {
namespace {

std::vector<std::uint32_t> hops(const DistanceTable& d)
{
    return {d.hops().begin(), d.hops().end()};
}

TEST(ParseGraph, PathOnFourVertices)
{
    const Graph g = parse_graph("4 3\n0 1\n1 2\n2 3");
    EXPECT_EQ(g.vertex_count(), 4U);
    EXPECT_EQ(g.edge_count(), 3U);
    EXPECT_TRUE(g.has_edge(0, 1));
    EXPECT_TRUE(g.has_edge(2, 1));
    EXPECT_FALSE(g.has_edge(0, 3));
}

TEST(ParseGraph, SingleIsolatedVertex)
{
    const Graph g = parse_graph("1 0");
    EXPECT_EQ(g.vertex_count(), 1U);
    EXPECT_EQ(g.edge_count(), 0U);
}

TEST(ParseGraph, DuplicateEdgeReportsLine)
{
    try {
        (void)parse_graph("3 3\n0 1\n1 2\n0 1");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 4U);
        EXPECT_NE(std::string(e.what()).find("duplicate edge"), std::string::npos);
    }
}

TEST(ParseGraph, ReversedDuplicateIsDuplicate)
{
    EXPECT_THROW((void)parse_graph("2 2\n0 1\n1 0\n"), ParseError);
}

TEST(ParseGraph, RejectsMalformedInput)
{
    auto line_of = [](std::string_view text) -> std::size_t {
        try {
            (void)parse_graph(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    EXPECT_EQ(line_of(""), 1U);
    EXPECT_EQ(line_of("3"), 1U);
    EXPECT_EQ(line_of("x 1\n0 1"), 1U);
    EXPECT_EQ(line_of("3 1\n0 3"), 2U);
    EXPECT_EQ(line_of("3 1\n1 1"), 2U);
    EXPECT_EQ(line_of("3 2\n0 1"), 3U);
    EXPECT_EQ(line_of("3 1\n0 1\n1 2"), 3U);
    EXPECT_EQ(line_of("3 1\n0 1 2"), 2U);
}

TEST(ParseGraph, BlankLinesAreIgnored)
{
    const Graph g = parse_graph("\n3 2\n\n0 1\n  \n1 2\n\n");
    EXPECT_EQ(g.edge_count(), 2U);
}

TEST(ParseGraph, SerializeRoundTrip)
{
    testing::Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = testing::random_graph(rng, 1 + trial % 13, 0.3);
        const Graph h = parse_graph(serialize_graph(g));
        EXPECT_EQ(h.vertex_count(), g.vertex_count());
        EXPECT_EQ(h.edges(), g.edges());
    }
}

TEST(GraphCtor, RejectsBadEdges)
{
    EXPECT_THROW(Graph(2, {{0, 2}}), PreconditionError);
    EXPECT_THROW(Graph(2, {{1, 1}}), PreconditionError);
    EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), PreconditionError);
}

TEST(Bfs, SingleSourceOnPath)
{
    EXPECT_EQ(hops(bfs_distances(make_path(4), {0})), (std::vector<std::uint32_t>{0, 1, 2, 3}));
}

TEST(Bfs, TwoSourcesOnPath)
{
    EXPECT_EQ(hops(bfs_distances(make_path(4), {0, 3})), (std::vector<std::uint32_t>{0, 1, 1, 0}));
}

TEST(Bfs, UnreachableVertex)
{
    const Graph g(3, {{0, 1}});
    const auto d = bfs_distances(g, {0});
    EXPECT_FALSE(d.reachable(2));
    EXPECT_FALSE(d[2].has_value());
    EXPECT_EQ(d[1], 1U);
}

TEST(Bfs, RejectsEmptyOrInvalidSources)
{
    const Graph g = make_path(3);
    EXPECT_THROW((void)bfs_distances(g, std::span<const vertex_t>{}), PreconditionError);
    EXPECT_THROW((void)bfs_distances(g, {3}), PreconditionError);
}

TEST(Bfs, MatchesFloydWarshall)
{
    testing::Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint32_t n = 1 + trial % 17;
        const Graph g = testing::random_graph(rng, n, 0.05 + 0.02 * (trial % 10));
        const auto fw = testing::floyd_warshall(g);
        std::uniform_int_distribution<vertex_t> pick(0, n - 1);
        std::vector<vertex_t> sources{pick(rng), pick(rng)};
        std::sort(sources.begin(), sources.end());
        sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
        const auto d = bfs_distances(g, sources);
        for (vertex_t v = 0; v < n; ++v) {
            std::uint32_t best = kUnreachable;
            for (vertex_t s : sources) {
                best = std::min(best, fw[s][v]);
            }
            ASSERT_EQ(d.hops()[v], best) << "trial " << trial << " vertex " << v;
        }
    }
}

TEST(Components, Examples)
{
    EXPECT_EQ(connected_components(make_path(4)), (std::vector<std::vector<vertex_t>>{{0, 1, 2, 3}}));
    EXPECT_EQ(connected_components(Graph(3, {{0, 1}})), (std::vector<std::vector<vertex_t>>{{0, 1}, {2}}));
    EXPECT_TRUE(connected_components(Graph(0, {})).empty());
}

TEST(Components, PartitionAgreesWithReachability)
{
    testing::Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const std::uint32_t n = 1 + trial % 20;
        const Graph g = testing::random_graph(rng, n, 0.08);
        const auto fw = testing::floyd_warshall(g);
        const auto comps = connected_components(g);
        std::vector<int> label(n, -1);
        std::size_t total = 0;
        for (std::size_t c = 0; c < comps.size(); ++c) {
            total += comps[c].size();
            for (vertex_t v : comps[c]) {
                label[v] = static_cast<int>(c);
            }
        }
        ASSERT_EQ(total, n);
        for (vertex_t a = 0; a < n; ++a) {
            for (vertex_t b = 0; b < n; ++b) {
                ASSERT_EQ(label[a] == label[b], fw[a][b] != kUnreachable);
            }
        }
        EXPECT_EQ(is_connected(g), comps.size() == 1);
    }
}

TEST(Generators, Shapes)
{
    EXPECT_EQ(make_cycle(5).edge_count(), 5U);
    EXPECT_EQ(make_complete(5).edge_count(), 10U);
    EXPECT_EQ(make_star(5).degree(0), 4U);
    EXPECT_EQ(make_grid(3, 4).edge_count(), 17U);
    const Graph p = make_petersen();
    EXPECT_EQ(p.vertex_count(), 10U);
    EXPECT_EQ(p.edge_count(), 15U);
    for (vertex_t v = 0; v < 10; ++v) {
        EXPECT_EQ(p.degree(v), 3U);
    }
    // Diameter 2.
    const auto fw = testing::floyd_warshall(p);
    for (vertex_t a = 0; a < 10; ++a) {
        for (vertex_t b = 0; b < 10; ++b) {
            EXPECT_LE(fw[a][b], 2U);
        }
    }
    const Graph prism = make_prism();
    EXPECT_EQ(prism.vertex_count(), 6U);
    EXPECT_EQ(prism.edge_count(), 9U);
}

} // namespace
} // namespace burnkit
