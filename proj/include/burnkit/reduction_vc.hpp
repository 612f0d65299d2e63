#pragma once

// Vertex cover -> k-burning reduction.
//
// For a base graph on n vertices, every base edge (b, c), b < c, becomes the
// path b, bc, d_1 .. d_{2nk}, cb, c with an n-vertex tail hanging off d_{nk},
// so adjacent v-vertices sit 2nk+3 hops apart. The disconnected variant adds
// (k-1)q + k(2nk+3) isolated vertices. The connected variant (k = 1) first
// hangs a pendant path v0 - w - z off vertex 0 and then replaces the isolated
// vertices by a backbone path starting at w:
//
//   w, Q, Q', i_1, Q', i_2, ..., Q', i_{2n+3}     |Q| = q+2n+2, |Q'| = 2n+2
//
// so the part after w and Q holds exactly (2n+3)^2 vertices.
//
// A cover C with |C| <= q maps to a schedule of at most q+2nk+3 rounds, and a
// schedule of that length maps back to a cover of at most q vertices.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "burnkit/burning.hpp"
#include "burnkit/error.hpp"
#include "burnkit/graph.hpp"
#include "burnkit/paths.hpp"

namespace burnkit {

struct VVertex {
    vertex_t original;
};
/// The e-vertex next to v-vertex `from` on the path of edge {from, to}.
struct EVertex {
    vertex_t from;
    vertex_t to;
};
/// index is 1-based from the smaller endpoint's side.
struct DVertex {
    std::uint32_t edge;
    std::uint32_t index;
};
/// index is 1-based; index 1 is attached to the median d-vertex.
struct TailVertex {
    std::uint32_t edge;
    std::uint32_t index;
};
struct Isolated {
    std::uint32_t index;
};
/// 1-based position on the backbone after w.
struct Backbone {
    std::uint32_t index;
};

using VcRole = std::variant<VVertex, EVertex, DVertex, TailVertex, Isolated, Backbone>;

inline std::string role_name(const VcRole& role)
{
    return std::visit(
        [](const auto& r) -> std::string {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, VVertex>) {
                return "v";
            } else if constexpr (std::is_same_v<T, EVertex>) {
                return "e";
            } else if constexpr (std::is_same_v<T, DVertex>) {
                return "d";
            } else if constexpr (std::is_same_v<T, TailVertex>) {
                return "tail";
            } else if constexpr (std::is_same_v<T, Isolated>) {
                return "isolated";
            } else {
                return "backbone";
            }
        },
        role);
}

struct VcParams {
    std::uint32_t n = 0; ///< vertices of the base graph
    std::uint32_t k = 1;
    std::uint32_t q = 0;
    bool connected = false;
};

struct VcInstance {
    /// Graph whose covers the instance encodes: the input graph, plus the
    /// pendant path w, z in the connected variant.
    Graph base;
    Graph gprime;
    std::vector<VcRole> roles;
    VcParams params;

    std::vector<Edge> base_edges;
    /// Per base edge: b, bc, d_1 .. d_{2nk}, cb, c as G' ids.
    std::vector<std::vector<vertex_t>> edge_paths;
    std::vector<std::vector<vertex_t>> tails;
    std::vector<vertex_t> isolated;
    /// Connected variant: Q followed by the (2n+3)^2-vertex suffix.
    std::vector<vertex_t> backbone;
    std::optional<vertex_t> pendant_w;
    std::optional<vertex_t> pendant_z;

    /// q + 2nk + 3.
    [[nodiscard]] round_t round_bound() const
    {
        return params.q + 2 * params.n * params.k + 3;
    }

    [[nodiscard]] std::uint32_t division_count() const { return 2 * params.n * params.k; }

    [[nodiscard]] std::size_t backbone_suffix_offset() const
    {
        return params.q + 2 * std::size_t{params.n} + 2;
    }
};

/// Builds G' from a simple graph without isolated vertices. The connected
/// variant requires k = 1 and a nonempty graph; q must lie in 1..n where n
/// counts the base graph.
inline VcInstance build_vc_instance(const Graph& g, std::uint32_t k, std::uint32_t q, bool connected)
{
    if (k == 0) {
        throw PreconditionError("build_vc_instance: k must be positive");
    }
    if (connected && k != 1) {
        throw PreconditionError("build_vc_instance: the connected variant requires k = 1");
    }
    if (connected && g.vertex_count() == 0) {
        throw PreconditionError("build_vc_instance: the connected variant needs a vertex to attach to");
    }

    for (vertex_t v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) {
            // Such a vertex needs a source of its own that no cover accounts for.
            throw PreconditionError("build_vc_instance: vertex " + std::to_string(v) + " has no edges");
        }
    }

    VcInstance inst;
    if (connected) {
        const auto w = static_cast<vertex_t>(g.vertex_count());
        auto edges = g.edges();
        edges.push_back({0, w});
        edges.push_back({w, w + 1});
        inst.base = Graph(g.vertex_count() + 2, edges);
        inst.pendant_w = w;
        inst.pendant_z = w + 1;
    } else {
        inst.base = g;
    }

    const auto n = static_cast<std::uint32_t>(inst.base.vertex_count());
    if (q == 0 || q > n) {
        throw PreconditionError("build_vc_instance: q must lie in 1.." + std::to_string(n));
    }
    inst.params = {n, k, q, connected};
    inst.base_edges = inst.base.edges();

    const std::uint32_t divisions = 2 * n * k;
    const std::uint32_t median = n * k;
    std::vector<Edge> edges;
    auto& roles = inst.roles;
    auto fresh = [&roles](VcRole role) {
        roles.push_back(role);
        return static_cast<vertex_t>(roles.size() - 1);
    };

    for (vertex_t v = 0; v < n; ++v) {
        fresh(VVertex{v});
    }
    for (std::uint32_t e = 0; e < inst.base_edges.size(); ++e) {
        const auto [b, c] = inst.base_edges[e];
        std::vector<vertex_t> path{b, fresh(EVertex{b, c})};
        for (std::uint32_t i = 1; i <= divisions; ++i) {
            path.push_back(fresh(DVertex{e, i}));
        }
        path.push_back(fresh(EVertex{c, b}));
        path.push_back(c);
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            edges.push_back({path[i], path[i + 1]});
        }

        std::vector<vertex_t> tail;
        vertex_t prev = path[1 + median]; // d_{nk}
        for (std::uint32_t i = 1; i <= n; ++i) {
            const vertex_t t = fresh(TailVertex{e, i});
            edges.push_back({prev, t});
            tail.push_back(t);
            prev = t;
        }
        inst.edge_paths.push_back(std::move(path));
        inst.tails.push_back(std::move(tail));
    }

    if (!connected) {
        const std::uint64_t count = std::uint64_t{k - 1} * q + std::uint64_t{k} * (divisions + 3);
        for (std::uint32_t i = 1; i <= count; ++i) {
            inst.isolated.push_back(fresh(Isolated{i}));
        }
    } else {
        const std::uint32_t q_len = q + 2 * n + 2;
        const std::uint32_t block = 2 * n + 2;
        const std::uint32_t marks = 2 * n + 3;
        const std::size_t total = q_len + std::size_t{marks} * (block + 1);
        vertex_t prev = *inst.pendant_w;
        for (std::uint32_t i = 1; i <= total; ++i) {
            const vertex_t v = fresh(Backbone{i});
            edges.push_back({prev, v});
            inst.backbone.push_back(v);
            prev = v;
        }
    }

    inst.gprime = Graph(roles.size(), edges);
    return inst;
}

inline bool is_vertex_cover(const Graph& g, std::span<const vertex_t> cover)
{
    std::vector<bool> in(g.vertex_count(), false);
    for (vertex_t v : cover) {
        if (!g.contains(v)) {
            return false;
        }
        in[v] = true;
    }
    for (const auto& [u, v] : g.edges()) {
        if (!in[u] && !in[v]) {
            return false;
        }
    }
    return true;
}

/// Cover of the base graph -> strict schedule of at most q + 2nk + 3 rounds.
///
/// Cover vertices are ignited first (with k-1 isolated vertices alongside
/// each one when k > 1), then the isolated vertices k per round. In the
/// connected variant w goes first and the backbone suffix is burnt with the
/// optimal path schedule.
inline Schedule vc_to_schedule(const VcInstance& inst, std::span<const vertex_t> cover)
{
    std::vector<vertex_t> chosen(cover.begin(), cover.end());
    std::sort(chosen.begin(), chosen.end());
    if (std::adjacent_find(chosen.begin(), chosen.end()) != chosen.end()) {
        throw CertificateError("vc_to_schedule: cover lists a vertex twice");
    }
    if (!is_vertex_cover(inst.base, chosen)) {
        throw CertificateError("vc_to_schedule: not a vertex cover of the base graph");
    }
    if (chosen.size() > inst.params.q) {
        throw CertificateError("vc_to_schedule: cover has " + std::to_string(chosen.size()) +
                               " vertices, more than q = " + std::to_string(inst.params.q));
    }

    const std::uint32_t k = inst.params.k;
    Schedule s{k, {}};
    if (inst.params.connected) {
        const vertex_t w = *inst.pendant_w;
        const vertex_t z = *inst.pendant_z;
        if (!std::binary_search(chosen.begin(), chosen.end(), w)) {
            // The edge w-z forces z into the cover; w covers at least as much.
            std::replace(chosen.begin(), chosen.end(), z, w);
        }
        chosen.erase(std::remove(chosen.begin(), chosen.end(), w), chosen.end());
        std::sort(chosen.begin(), chosen.end());
        s.rounds.push_back({w});
        for (vertex_t v : chosen) {
            s.rounds.push_back({v});
        }
        const auto offset = static_cast<std::ptrdiff_t>(inst.backbone_suffix_offset());
        const std::span<const vertex_t> suffix(inst.backbone.begin() + offset, inst.backbone.end());
        const auto path = optimal_path_schedule(suffix.size(), 1);
        for (const auto& batch : path.rounds) {
            std::vector<vertex_t> mapped;
            for (vertex_t p : batch) {
                mapped.push_back(suffix[p]);
            }
            s.rounds.push_back(std::move(mapped));
        }
    } else {
        std::size_t next_isolated = 0;
        for (vertex_t v : chosen) {
            std::vector<vertex_t> batch{v};
            for (std::uint32_t i = 1; i < k && next_isolated < inst.isolated.size(); ++i) {
                batch.push_back(inst.isolated[next_isolated++]);
            }
            s.rounds.push_back(std::move(batch));
        }
        while (next_isolated < inst.isolated.size()) {
            std::vector<vertex_t> batch;
            for (std::uint32_t i = 0; i < k && next_isolated < inst.isolated.size(); ++i) {
                batch.push_back(inst.isolated[next_isolated++]);
            }
            s.rounds.push_back(std::move(batch));
        }
    }

    s = pad_schedule(inst.gprime, s);
    const auto report = simulate(inst.gprime, s);
    if (!report.valid || !report.completion_round || *report.completion_round > inst.round_bound()) {
        throw InternalError("vc_to_schedule: generated schedule does not finish within q+2nk+3 rounds");
    }
    return s;
}

/// Schedule -> cover of the base graph.
///
/// For each base edge (b, c), H_bc is the union of the (nk+1)-hop
/// neighborhoods of b and c in G', the edge's path and its tail. Every source
/// inside H_bc contributes whichever of b, c is closer in G' (ties go to the
/// smaller id). The result must cover every base edge with at most q
/// vertices, and the schedule must be strict-valid within q + 2nk + 3 rounds;
/// CertificateError otherwise.
inline std::vector<vertex_t> schedule_to_vc(const VcInstance& inst, const Schedule& s)
{
    const Graph& gp = inst.gprime;
    check_schedule_structure(gp, s);
    if (s.k != inst.params.k) {
        throw CertificateError("schedule_to_vc: schedule uses k = " + std::to_string(s.k) +
                               " but the instance has k = " + std::to_string(inst.params.k));
    }

    const std::uint32_t n = inst.params.n;
    const std::uint64_t radius = std::uint64_t{n} * inst.params.k + 1;
    std::vector<DistanceTable> from_base;
    from_base.reserve(n);
    for (vertex_t v = 0; v < n; ++v) {
        from_base.push_back(bfs_distances(gp, v));
    }
    auto hops = [&](vertex_t base, vertex_t x) -> std::uint64_t {
        const auto d = from_base[base][x];
        return d ? *d : UINT64_MAX;
    };
    auto on_gadget = [&](std::uint32_t e, vertex_t x) {
        const auto [b, c] = inst.base_edges[e];
        return std::visit(
            [&](const auto& r) {
                using T = std::decay_t<decltype(r)>;
                if constexpr (std::is_same_v<T, EVertex>) {
                    return (r.from == b && r.to == c) || (r.from == c && r.to == b);
                } else if constexpr (std::is_same_v<T, DVertex> || std::is_same_v<T, TailVertex>) {
                    return r.edge == e;
                } else if constexpr (std::is_same_v<T, VVertex>) {
                    return r.original == b || r.original == c;
                } else {
                    return false;
                }
            },
            inst.roles[x]);
    };

    const auto sources = ignitions_of(s);
    std::vector<bool> picked(n, false);
    for (std::uint32_t e = 0; e < inst.base_edges.size(); ++e) {
        const auto [b, c] = inst.base_edges[e];
        for (const auto& ign : sources) {
            const vertex_t x = ign.vertex;
            const auto db = hops(b, x);
            const auto dc = hops(c, x);
            if (db > radius && dc > radius && !on_gadget(e, x)) {
                continue;
            }
            picked[db <= dc ? b : c] = true;
        }
    }

    std::vector<vertex_t> cover;
    for (vertex_t v = 0; v < n; ++v) {
        if (picked[v]) {
            cover.push_back(v);
        }
    }
    if (!is_vertex_cover(inst.base, cover)) {
        throw CertificateError("schedule_to_vc: extracted set does not cover every base edge");
    }
    if (cover.size() > inst.params.q) {
        throw CertificateError("schedule_to_vc: extracted cover has " + std::to_string(cover.size()) +
                               " vertices, more than q = " + std::to_string(inst.params.q));
    }
    const auto report = simulate(gp, s);
    if (!report.valid) {
        throw CertificateError("schedule_to_vc: schedule is not strict-valid (" +
                               report.violations.front().reason() + ")");
    }
    if (*report.completion_round > inst.round_bound()) {
        throw CertificateError("schedule_to_vc: schedule needs " + std::to_string(*report.completion_round) +
                               " rounds, more than q+2nk+3 = " + std::to_string(inst.round_bound()));
    }
    return cover;
}

/// Lifts a cover of the original graph to the connected variant's base graph
/// by adding w.
inline std::vector<vertex_t> lift_cover(const VcInstance& inst, std::span<const vertex_t> cover)
{
    std::vector<vertex_t> out(cover.begin(), cover.end());
    if (inst.pendant_w) {
        out.push_back(*inst.pendant_w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace burnkit
