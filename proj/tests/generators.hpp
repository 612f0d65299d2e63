#pragma once

// Seeded random graphs and schedules for property tests. Every generator is
// deterministic in its engine state.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "burnkit/burning.hpp"
#include "burnkit/graph.hpp"

namespace burnkit::testing {

using Rng = std::mt19937;

/// G(n, p) restricted to simple graphs.
inline Graph random_graph(Rng& rng, std::uint32_t n, double p)
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (vertex_t u = 0; u < n; ++u) {
        for (vertex_t v = u + 1; v < n; ++v) {
            if (coin(rng)) {
                edges.push_back({u, v});
            }
        }
    }
    return Graph(n, edges);
}

/// Random spanning tree (random attachment) plus extra G(n, p) edges.
inline Graph random_connected_graph(Rng& rng, std::uint32_t n, double p)
{
    std::vector<vertex_t> perm(n);
    for (vertex_t v = 0; v < n; ++v) {
        perm[v] = v;
    }
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (std::uint32_t i = 1; i < n; ++i) {
        std::uniform_int_distribution<std::uint32_t> pick(0, i - 1);
        const vertex_t a = perm[i];
        const vertex_t b = perm[pick(rng)];
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    std::bernoulli_distribution coin(p);
    for (vertex_t u = 0; u < n; ++u) {
        for (vertex_t v = u + 1; v < n; ++v) {
            if (coin(rng)) {
                edges.push_back({u, v});
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(n, edges);
}

/// Random tree on n vertices.
inline Graph random_tree(Rng& rng, std::uint32_t n)
{
    return random_connected_graph(rng, n, 0.0);
}

/// Random ignition list: each vertex independently with probability p, at a
/// round in [1, max_round]. Never empty for n > 0.
inline std::vector<Ignition> random_ignitions(Rng& rng, std::uint32_t n, double p, round_t max_round)
{
    std::bernoulli_distribution coin(p);
    std::uniform_int_distribution<round_t> when(1, max_round);
    std::vector<Ignition> out;
    for (vertex_t v = 0; v < n; ++v) {
        if (coin(rng)) {
            out.push_back({v, when(rng)});
        }
    }
    if (out.empty() && n > 0) {
        std::uniform_int_distribution<vertex_t> any(0, n - 1);
        out.push_back({any(rng), 1});
    }
    return out;
}

/// All-pairs hop distances by Floyd-Warshall; kUnreachable when disconnected.
inline std::vector<std::vector<std::uint32_t>> floyd_warshall(const Graph& g)
{
    const std::uint32_t n = g.vertex_count();
    std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, kUnreachable));
    for (vertex_t v = 0; v < n; ++v) {
        d[v][v] = 0;
        for (vertex_t w : g.neighbors(v)) {
            d[v][w] = 1;
        }
    }
    for (vertex_t m = 0; m < n; ++m) {
        for (vertex_t a = 0; a < n; ++a) {
            if (d[a][m] == kUnreachable) {
                continue;
            }
            for (vertex_t b = 0; b < n; ++b) {
                if (d[m][b] != kUnreachable && d[a][m] + d[m][b] < d[a][b]) {
                    d[a][b] = d[a][m] + d[m][b];
                }
            }
        }
    }
    return d;
}

} // namespace burnkit::testing
