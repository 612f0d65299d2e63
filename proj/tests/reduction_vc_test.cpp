#include <gtest/gtest.h>

#include "burnkit/reduction_vc.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace burnkit {
namespace {

using testing::minimum_cover;

std::size_t count_role(const VcInstance& inst, const std::string& name)
{
    return static_cast<std::size_t>(std::count_if(inst.roles.begin(), inst.roles.end(),
                                                  [&](const VcRole& r) { return role_name(r) == name; }));
}

TEST(BuildVc, K4Counts)
{
    const auto inst = build_vc_instance(make_complete(4), 1, 3, false);
    EXPECT_EQ(inst.gprime.vertex_count(), 99U);
    EXPECT_EQ(count_role(inst, "v"), 4U);
    EXPECT_EQ(count_role(inst, "e"), 12U);
    EXPECT_EQ(count_role(inst, "d"), 48U);
    EXPECT_EQ(count_role(inst, "tail"), 24U);
    EXPECT_EQ(count_role(inst, "isolated"), 11U);
    EXPECT_EQ(inst.round_bound(), 14U);

    const auto k2 = build_vc_instance(make_complete(4), 2, 3, false);
    EXPECT_EQ(k2.isolated.size(), 41U);
}

TEST(BuildVc, Preconditions)
{
    EXPECT_THROW((void)build_vc_instance(make_complete(3), 0, 1, false), PreconditionError);
    EXPECT_THROW((void)build_vc_instance(make_complete(3), 1, 0, false), PreconditionError);
    EXPECT_THROW((void)build_vc_instance(make_complete(3), 1, 4, false), PreconditionError);
    EXPECT_THROW((void)build_vc_instance(make_complete(3), 2, 2, true), PreconditionError);
    EXPECT_THROW((void)build_vc_instance(Graph(0, {}), 1, 1, true), PreconditionError);
    EXPECT_THROW((void)build_vc_instance(Graph(3, {{0, 1}}), 1, 1, false), PreconditionError);
}

TEST(BuildVc, StructureOnRandomGraphs)
{
    testing::Rng rng(321);
    for (int trial = 0; trial < 40; ++trial) {
        const std::uint32_t n = 2 + trial % 5;
        const std::uint32_t k = 1 + trial % 3;
        const Graph g = testing::random_connected_graph(rng, n, 0.3);
        const std::uint32_t q = 1 + trial % n;
        const auto inst = build_vc_instance(g, k, q, false);
        const std::size_t m = g.edge_count();
        const std::size_t divisions = 2 * n * k;
        const std::size_t isolated = (k - 1) * q + k * (divisions + 3);
        ASSERT_EQ(inst.gprime.vertex_count(), n + m * (2 + divisions + n) + isolated);
        ASSERT_EQ(inst.gprime.edge_count(), m * (divisions + 3 + n));
        ASSERT_EQ(count_role(inst, "isolated"), isolated);
        for (vertex_t v : inst.isolated) {
            ASSERT_EQ(inst.gprime.degree(v), 0U);
        }
        // Adjacent v-vertices sit 2nk+3 apart; each tail end sits nk+1+n from
        // the nearer endpoint.
        for (std::size_t e = 0; e < m; ++e) {
            const auto [b, c] = inst.base_edges[e];
            const auto db = bfs_distances(inst.gprime, b);
            ASSERT_EQ(db[c], divisions + 3);
            const auto dc = bfs_distances(inst.gprime, c);
            ASSERT_EQ(db[inst.tails[e].back()], n * k + 1 + n);
            ASSERT_EQ(dc[inst.tails[e].back()], n * k + 2 + n);
        }
    }
}

TEST(BuildVc, ConnectedBackbone)
{
    const auto inst = build_vc_instance(make_complete(3), 1, 3, true);
    EXPECT_TRUE(is_connected(inst.gprime));
    const std::uint32_t n = inst.params.n;
    EXPECT_EQ(n, 5U);
    ASSERT_TRUE(inst.pendant_w);
    EXPECT_TRUE(inst.base.has_edge(0, *inst.pendant_w));
    EXPECT_TRUE(inst.base.has_edge(*inst.pendant_w, *inst.pendant_z));
    EXPECT_EQ(inst.backbone.size(), (3 + 2 * n + 2) + (2 * n + 3) * (2 * n + 3));
    EXPECT_TRUE(inst.gprime.has_edge(*inst.pendant_w, inst.backbone.front()));
    EXPECT_EQ(inst.backbone.size() - inst.backbone_suffix_offset(), (2 * n + 3) * (2 * n + 3));
    EXPECT_EQ(count_role(inst, "isolated"), 0U);
}

TEST(VcToSchedule, Examples)
{
    const auto k4 = build_vc_instance(make_complete(4), 1, 3, false);
    const std::vector<vertex_t> cover{1, 2, 3};
    const auto s = vc_to_schedule(k4, cover);
    const auto rep = simulate(k4.gprime, s);
    EXPECT_TRUE(rep.valid);
    EXPECT_EQ(s.length(), 14U);
    EXPECT_EQ(rep.completion_round, 14U);
    EXPECT_EQ(schedule_to_vc(k4, s), cover);

    const auto k3 = build_vc_instance(make_complete(3), 1, 2, false);
    const std::vector<vertex_t> tri{0, 1};
    const auto t = vc_to_schedule(k3, tri);
    EXPECT_EQ(t.length(), 11U);
    EXPECT_EQ(simulate(k3.gprime, t).completion_round, 11U);
    EXPECT_EQ(schedule_to_vc(k3, t), tri);
}

TEST(VcToSchedule, RejectsBadCovers)
{
    const auto k4 = build_vc_instance(make_complete(4), 1, 3, false);
    EXPECT_THROW((void)vc_to_schedule(k4, std::vector<vertex_t>{0}), CertificateError);
    EXPECT_THROW((void)vc_to_schedule(k4, std::vector<vertex_t>{1, 1, 2, 3}), CertificateError);
    EXPECT_THROW((void)vc_to_schedule(k4, std::vector<vertex_t>{0, 1, 2, 3}), CertificateError);
}

TEST(ScheduleToVc, IsolatedOnlyScheduleFails)
{
    const auto k4 = build_vc_instance(make_complete(4), 1, 3, false);
    Schedule s{1, {}};
    for (vertex_t v : k4.isolated) {
        s.rounds.push_back({v});
    }
    try {
        (void)schedule_to_vc(k4, s);
        FAIL() << "expected CertificateError";
    } catch (const CertificateError& e) {
        EXPECT_NE(std::string(e.what()).find("cover"), std::string::npos);
    }
}

TEST(ScheduleToVc, RejectsWrongK)
{
    const auto k4 = build_vc_instance(make_complete(4), 1, 3, false);
    const auto s = vc_to_schedule(k4, std::vector<vertex_t>{1, 2, 3});
    Schedule wrong = s;
    wrong.k = 2;
    EXPECT_THROW((void)schedule_to_vc(k4, wrong), CertificateError);
}

TEST(ScheduleToVc, RejectsLateSchedule)
{
    // Cover vertices ignited after the isolated ones leave the gadgets burning too long.
    const auto k3 = build_vc_instance(make_complete(3), 1, 2, false);
    Schedule s{1, {}};
    for (vertex_t v : k3.isolated) {
        s.rounds.push_back({v});
    }
    s.rounds.push_back({0});
    s.rounds.push_back({1});
    s = pad_schedule(k3.gprime, s);
    EXPECT_THROW((void)schedule_to_vc(k3, s), CertificateError);
}

TEST(VcRoundTrip, StandardGraphs)
{
    const std::vector<std::pair<std::string, Graph>> graphs{
        {"K3", make_complete(3)}, {"K4", make_complete(4)}, {"prism", make_prism()}, {"petersen", make_petersen()}};
    for (const auto& [name, g] : graphs) {
        const auto cover = minimum_cover(g);
        for (std::uint32_t k : {1U, 2U}) {
            const auto q = static_cast<std::uint32_t>(cover.size());
            const auto inst = build_vc_instance(g, k, q, false);
            const auto s = vc_to_schedule(inst, cover);
            const auto rep = simulate(inst.gprime, s);
            ASSERT_TRUE(rep.valid) << name << " k=" << k;
            EXPECT_EQ(*rep.completion_round, inst.round_bound()) << name << " k=" << k;
            EXPECT_EQ(s.length(), inst.round_bound()) << name << " k=" << k;
            const auto back = schedule_to_vc(inst, s);
            EXPECT_TRUE(is_vertex_cover(g, back));
            EXPECT_LE(back.size(), q);
        }
    }
}

TEST(VcRoundTrip, RandomGraphsAndCoverOrders)
{
    testing::Rng rng(999);
    for (int trial = 0; trial < 40; ++trial) {
        const std::uint32_t n = 2 + trial % 6;
        const std::uint32_t k = 1 + trial % 2;
        const Graph g = testing::random_connected_graph(rng, n, 0.3);
        auto cover = minimum_cover(g);
        // Slack: allow one extra vertex when possible.
        const std::uint32_t q = static_cast<std::uint32_t>(std::min<std::size_t>(cover.size() + trial % 2, n));
        if (cover.size() < q) {
            for (vertex_t v = 0; v < n; ++v) {
                if (std::find(cover.begin(), cover.end(), v) == cover.end()) {
                    cover.push_back(v);
                    break;
                }
            }
        }
        std::shuffle(cover.begin(), cover.end(), rng);
        const auto inst = build_vc_instance(g, k, q, false);
        const auto s = vc_to_schedule(inst, cover);
        const auto rep = simulate(inst.gprime, s);
        ASSERT_TRUE(rep.valid) << "trial " << trial;
        ASSERT_LE(*rep.completion_round, inst.round_bound());
        const auto back = schedule_to_vc(inst, s);
        ASSERT_TRUE(is_vertex_cover(g, back)) << "trial " << trial;
        ASSERT_LE(back.size(), q);
    }
}

TEST(VcRoundTrip, ConnectedVariant)
{
    for (const Graph& g : {make_complete(3), make_complete(4), make_prism()}) {
        const auto inst0 = build_vc_instance(g, 1, 1, true);
        const auto cover = lift_cover(inst0, minimum_cover(g));
        ASSERT_EQ(cover, minimum_cover(inst0.base));
        const auto q = static_cast<std::uint32_t>(cover.size());
        const auto inst = build_vc_instance(g, 1, q, true);
        const auto s = vc_to_schedule(inst, cover);
        const auto rep = simulate(inst.gprime, s);
        ASSERT_TRUE(rep.valid);
        EXPECT_LE(*rep.completion_round, inst.round_bound());
        const auto back = schedule_to_vc(inst, s);
        EXPECT_TRUE(is_vertex_cover(inst.base, back));
        EXPECT_LE(back.size(), q);
    }
}

TEST(VcRoundTrip, ConnectedVariantAcceptsCoverWithZ)
{
    const Graph g = make_complete(3);
    const auto inst = build_vc_instance(g, 1, 3, true);
    const std::vector<vertex_t> cover{0, 1, *inst.pendant_z};
    const auto s = vc_to_schedule(inst, cover);
    EXPECT_TRUE(simulate(inst.gprime, s).valid);
    EXPECT_EQ(s.rounds.front(), (std::vector<vertex_t>{*inst.pendant_w}));
}

} // namespace
} // namespace burnkit
