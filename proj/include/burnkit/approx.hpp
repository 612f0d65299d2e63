#pragma once

// Lower bound and 3-approximate schedule for the k-burning number.
//
// M_r denotes a maximal independent set of G^{2r}: members pairwise more than
// 2r hops apart, every vertex within 2r hops of a member. If the process can
// finish within r rounds, its at most k*r sources dominate G^r, and any
// dominating set of G^r is at least |M_r| large. So |M_r| > k*r proves
// b_k(G) > r. Igniting M_j at k per round finishes by round j + 2j.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "burnkit/burning.hpp"
#include "burnkit/error.hpp"
#include "burnkit/graph.hpp"

namespace burnkit {

struct MisResult {
    std::uint32_t radius = 0;
    /// Members in greedy pick order (ascending ids by construction).
    std::vector<vertex_t> order;

    [[nodiscard]] std::size_t size() const noexcept { return order.size(); }
};

/// Greedy maximal independent set of G^{2r}: scan ids ascending, take each
/// vertex not yet removed and remove everything within 2r hops of it.
///
/// The truncated BFS remembers, for every removed vertex, the largest hop
/// budget it was expanded with and only re-expands it with a strictly larger
/// budget, so most edges are scanned once.
namespace detail {

/// Buffers reused across the probes of one search.
struct MisWorkspace {
    std::vector<std::int32_t> budget;
    std::vector<vertex_t> queue;
};

inline MisResult mis_power(const Graph& g, std::uint32_t r, MisWorkspace& ws)
{
    if (r == 0) {
        throw PreconditionError("mis_power: radius must be positive");
    }
    const std::size_t n = g.vertex_count();
    // No BFS needs more than n hops.
    const auto reach =
        static_cast<std::int32_t>(std::min<std::uint64_t>({2 * std::uint64_t{r}, n, std::uint64_t{INT32_MAX}}));

    constexpr std::int32_t kUntouched = -1;
    auto& budget = ws.budget;
    auto& queue = ws.queue;
    budget.assign(n, kUntouched);
    queue.reserve(n);

    MisResult result{r, {}};
    for (vertex_t v = 0; v < n; ++v) {
        if (budget[v] != kUntouched) {
            continue;
        }
        result.order.push_back(v);
        budget[v] = reach;
        queue.clear();
        queue.push_back(v);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const vertex_t u = queue[head];
            const std::int32_t left = budget[u] - 1;
            if (left < 0) {
                continue;
            }
            for (vertex_t w : g.neighbors(u)) {
                if (budget[w] < left) {
                    budget[w] = left;
                    queue.push_back(w);
                }
            }
        }
    }
    return result;
}

/// Smallest vertex of every component, ascending, and the largest distance
/// from such a vertex to the rest of its component. Once 2r reaches that
/// distance the greedy set is exactly these vertices.
struct ComponentRoots {
    std::vector<vertex_t> roots;
    std::uint64_t reach = 0;
};

inline ComponentRoots component_roots(const Graph& g)
{
    ComponentRoots out;
    const std::size_t n = g.vertex_count();
    std::vector<std::uint32_t> dist(n, UINT32_MAX);
    std::vector<vertex_t> queue;
    queue.reserve(n);
    for (vertex_t s = 0; s < n; ++s) {
        if (dist[s] != UINT32_MAX) {
            continue;
        }
        out.roots.push_back(s);
        dist[s] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const vertex_t u = queue[head];
            out.reach = std::max<std::uint64_t>(out.reach, dist[u]);
            for (vertex_t w : g.neighbors(u)) {
                if (dist[w] == UINT32_MAX) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    return out;
}

} // namespace detail

inline MisResult mis_power(const Graph& g, std::uint32_t r)
{
    detail::MisWorkspace ws;
    return detail::mis_power(g, r, ws);
}

struct LowerBoundResult {
    std::uint32_t j = 0;
    MisResult mis; ///< M_j
};

/// Smallest-index search over j in [1, n] for |M_j| <= k*j.
///
/// Binary search needs |M_j| <= k*j to be monotone in j, which greedy sets do
/// not guarantee. The returned j is a valid lower bound either way: the
/// search only returns j when the predicate fails at j-1 (or j = 1).
/// verify_linear re-checks every j' < j and throws InternalError if the
/// predicate holds at any of them.
inline LowerBoundResult lower_bound_with_mis(const Graph& g, std::uint32_t k, bool verify_linear = false)
{
    if (k == 0) {
        throw PreconditionError("lower_bound: k must be positive");
    }
    const std::size_t n = g.vertex_count();
    if (n == 0) {
        throw PreconditionError("lower_bound: empty graph");
    }
    detail::MisWorkspace ws;
    const auto settled = detail::component_roots(g);
    auto holds = [&](std::uint32_t j, MisResult& out) {
        if (2 * std::uint64_t{j} >= settled.reach) {
            out = MisResult{j, settled.roots};
        } else {
            out = detail::mis_power(g, j, ws);
        }
        return out.size() <= std::uint64_t{k} * j;
    };

    // Invariant: predicate false below lo (or lo == 1), true at hi.
    std::uint32_t lo = 1;
    auto hi = static_cast<std::uint32_t>(n);
    MisResult at_hi;
    if (!holds(hi, at_hi)) {
        throw InternalError("lower_bound: predicate fails at j = n");
    }
    while (lo < hi) {
        const std::uint32_t mid = lo + (hi - lo) / 2;
        MisResult probe;
        if (holds(mid, probe)) {
            hi = mid;
            at_hi = std::move(probe);
        } else {
            lo = mid + 1;
        }
    }

    if (verify_linear) {
        for (std::uint32_t jp = 1; jp < hi; ++jp) {
            MisResult probe;
            if (holds(jp, probe)) {
                throw InternalError("lower_bound: |M_" + std::to_string(jp) + "| = " +
                                    std::to_string(probe.size()) + " <= k*j' although binary search returned j = " +
                                    std::to_string(hi));
            }
        }
    }
    return {hi, std::move(at_hi)};
}

inline std::uint32_t lower_bound(const Graph& g, std::uint32_t k, bool verify_linear = false)
{
    return lower_bound_with_mis(g, k, verify_linear).j;
}

struct ApproxResult {
    std::uint32_t lower_bound = 0;
    Schedule schedule;
    round_t completion = 0;
};

/// Ignites M_j in pick order, k per round, pads to strict semantics and
/// certifies lower_bound <= completion <= 3 * lower_bound by simulation.
inline ApproxResult approx_schedule(const Graph& g, std::uint32_t k)
{
    auto [j, mis] = lower_bound_with_mis(g, k);

    Schedule seed{k, {}};
    for (std::size_t i = 0; i < mis.order.size(); i += k) {
        const auto end = std::min(mis.order.size(), i + k);
        seed.rounds.emplace_back(mis.order.begin() + static_cast<std::ptrdiff_t>(i),
                                 mis.order.begin() + static_cast<std::ptrdiff_t>(end));
    }

    ApproxResult result{j, pad_schedule(g, seed), 0};
    const auto report = simulate(g, result.schedule);
    if (!report.valid || !report.completion_round) {
        throw InternalError("approx_schedule: padded schedule failed strict validation");
    }
    result.completion = *report.completion_round;
    if (result.completion > 3 * std::uint64_t{j}) {
        throw InternalError("approx_schedule: completion " + std::to_string(result.completion) +
                            " exceeds 3j = " + std::to_string(3 * std::uint64_t{j}));
    }
    if (result.completion < j) {
        throw InternalError("approx_schedule: completion below the lower bound");
    }
    return result;
}

} // namespace burnkit
