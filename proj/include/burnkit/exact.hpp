#pragma once

// Exact k-burning numbers and fixed-source scheduling for desk-scale graphs.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "burnkit/approx.hpp"
#include "burnkit/burning.hpp"
#include "burnkit/error.hpp"
#include "burnkit/graph.hpp"

namespace burnkit {

inline constexpr std::size_t kExactMaxVertices = 64;
inline constexpr std::size_t kOracleMaxVertices = 9;
inline constexpr std::size_t kSchedulingMaxSources = 24;

enum class ExactStatus {
    determined,
    round_bound_exceeded, ///< no schedule within max_rounds
    time_budget_exceeded,
};

struct ExactOptions {
    std::optional<round_t> max_rounds;
    std::optional<std::chrono::duration<double>> time_budget;
};

struct ExactResult {
    ExactStatus status = ExactStatus::determined;
    std::optional<round_t> burning_number;
    /// Lexicographically least strict schedule completing by burning_number.
    Schedule witness;
};

namespace detail {

using mask_t = std::uint64_t;

inline mask_t bit(vertex_t v) { return mask_t{1} << v; }

struct TimeUp {};

/// Depth-first search over strict schedules, one round at a time. The state
/// after the propagation phase of round r is fully described by (r, burnt
/// set), so failed states are memoized per round.
class StrictScheduleSearch {
public:
    StrictScheduleSearch(const Graph& g, std::uint32_t k) : n_(g.vertex_count()), k_(k)
    {
        all_ = n_ == 64 ? ~mask_t{0} : (bit(static_cast<vertex_t>(n_)) - 1);
        neighbors_.assign(n_, 0);
        for (vertex_t v = 0; v < n_; ++v) {
            for (vertex_t w : g.neighbors(v)) {
                neighbors_[v] |= bit(w);
            }
        }
        // balls_[c][rho]: vertices within rho hops of c.
        balls_.assign(n_, std::vector<mask_t>(n_ + 1, 0));
        for (vertex_t c = 0; c < n_; ++c) {
            mask_t ball = bit(c);
            for (std::size_t rho = 0; rho <= n_; ++rho) {
                balls_[c][rho] = ball;
                ball = expand(ball);
            }
        }
    }

    void set_deadline(std::optional<std::chrono::steady_clock::time_point> deadline)
    {
        deadline_ = deadline;
    }

    /// Finds the lexicographically least strict schedule finishing by round L.
    std::optional<Schedule> solve(round_t L)
    {
        limit_ = L;
        failed_.assign(L + 2, {});
        batches_.clear();
        if (search(1, 0)) {
            return Schedule{k_, batches_};
        }
        return std::nullopt;
    }

private:
    [[nodiscard]] mask_t expand(mask_t m) const
    {
        mask_t out = m;
        for (mask_t rest = m; rest; rest &= rest - 1) {
            out |= neighbors_[static_cast<std::size_t>(std::countr_zero(rest))];
        }
        return out;
    }

    [[nodiscard]] mask_t grow(mask_t m, round_t hops) const
    {
        for (round_t i = 0; i < hops && m != all_; ++i) {
            m = expand(m);
        }
        return m;
    }

    /// Vertices not reachable by the existing fire by round L must be covered
    /// by future sources; each round-r' source covers at most the best ball of
    /// radius L - r' intersected with them.
    [[nodiscard]] bool capacity_allows(round_t r, mask_t burnt) const
    {
        const mask_t residual = all_ & ~grow(burnt, limit_ - r);
        const auto needed = std::popcount(residual);
        if (needed == 0) {
            return true;
        }
        std::int64_t capacity = 0;
        for (round_t rr = r; rr <= limit_; ++rr) {
            const round_t rho = limit_ - rr;
            int best = 0;
            for (vertex_t c = 0; c < n_; ++c) {
                best = std::max(best, std::popcount(balls_[c][std::min<std::size_t>(rho, n_)] & residual));
            }
            capacity += std::int64_t{k_} * best;
            if (capacity >= needed) {
                return true;
            }
        }
        return false;
    }

    bool search(round_t r, mask_t burnt)
    {
        if (deadline_ && (++ticks_ & 0x3ff) == 0 && std::chrono::steady_clock::now() > *deadline_) {
            throw TimeUp{};
        }
        if (burnt == all_) {
            return true;
        }
        if (r > limit_) {
            return false;
        }
        const mask_t after = expand(burnt);
        if (after == all_) {
            return true;
        }
        if (failed_[r].contains(after)) {
            return false;
        }
        if (!capacity_allows(r, after)) {
            failed_[r].insert(after);
            return false;
        }

        const mask_t avail = all_ & ~after;
        std::vector<vertex_t> pool;
        for (mask_t rest = avail; rest; rest &= rest - 1) {
            pool.push_back(static_cast<vertex_t>(std::countr_zero(rest)));
        }
        const std::size_t need = std::min<std::size_t>(k_, pool.size());
        std::vector<std::size_t> pick(need);
        for (std::size_t i = 0; i < need; ++i) {
            pick[i] = i;
        }
        while (true) {
            mask_t batch_mask = 0;
            std::vector<vertex_t> batch;
            batch.reserve(need);
            for (std::size_t i : pick) {
                batch_mask |= bit(pool[i]);
                batch.push_back(pool[i]);
            }
            batches_.push_back(std::move(batch));
            if (search(r + 1, after | batch_mask)) {
                return true;
            }
            batches_.pop_back();

            // Next combination in lexicographic order.
            std::size_t i = need;
            while (i > 0 && pick[i - 1] == pool.size() - need + (i - 1)) {
                --i;
            }
            if (i == 0) {
                break;
            }
            ++pick[i - 1];
            for (std::size_t j = i; j < need; ++j) {
                pick[j] = pick[j - 1] + 1;
            }
        }
        failed_[r].insert(after);
        return false;
    }

    std::size_t n_;
    std::uint32_t k_;
    mask_t all_ = 0;
    std::vector<mask_t> neighbors_;
    std::vector<std::vector<mask_t>> balls_;
    round_t limit_ = 0;
    std::vector<std::unordered_set<mask_t>> failed_;
    std::vector<std::vector<vertex_t>> batches_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::uint64_t ticks_ = 0;
};

} // namespace detail

/// Smallest L admitting a strict schedule that completes by round L.
/// Deepening starts at the approximation lower bound and stops at
/// options.max_rounds (default ceil(n/k), which always suffices).
inline ExactResult exact_burning_number(const Graph& g, std::uint32_t k, const ExactOptions& options = {})
{
    const std::size_t n = g.vertex_count();
    if (n == 0) {
        throw PreconditionError("exact_burning_number: empty graph");
    }
    if (k == 0) {
        throw PreconditionError("exact_burning_number: k must be positive");
    }
    if (n > kExactMaxVertices) {
        throw ResourceError("exact_burning_number: " + std::to_string(n) + " vertices exceed the limit of " +
                            std::to_string(kExactMaxVertices));
    }

    std::optional<std::chrono::steady_clock::time_point> deadline;
    if (options.time_budget) {
        deadline = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(*options.time_budget);
    }

    const auto trivial_bound = static_cast<round_t>((n + k - 1) / k);
    const round_t max_rounds = options.max_rounds.value_or(trivial_bound);
    detail::StrictScheduleSearch search(g, k);
    search.set_deadline(deadline);

    ExactResult result;
    try {
        for (round_t L = lower_bound(g, k); L <= max_rounds; ++L) {
            if (auto witness = search.solve(L)) {
                const auto report = simulate(g, *witness);
                if (!report.valid || !report.completion_round || *report.completion_round > L) {
                    throw InternalError("exact_burning_number: witness failed validation");
                }
                result.burning_number = L;
                result.witness = std::move(*witness);
                return result;
            }
        }
    } catch (const detail::TimeUp&) {
        result.status = ExactStatus::time_budget_exceeded;
        return result;
    }
    result.status = ExactStatus::round_bound_exceeded;
    return result;
}

namespace detail {

inline bool naive_extend(const Graph& g, std::uint32_t k, round_t L, Schedule& prefix)
{
    const auto r = static_cast<round_t>(prefix.rounds.size() + 1);
    const auto lenient = simulate(g, prefix, SimulationMode::lenient);
    std::vector<vertex_t> avail;
    for (vertex_t v = 0; v < g.vertex_count(); ++v) {
        if (!lenient.burn_round[v] || *lenient.burn_round[v] > r) {
            avail.push_back(v);
        }
    }
    if (avail.empty() || r > L) {
        const auto report = simulate(g, prefix);
        return report.valid && report.completion_round && *report.completion_round <= L;
    }

    const std::size_t need = std::min<std::size_t>(k, avail.size());
    std::vector<bool> chosen(avail.size(), false);
    std::fill(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(need), true);
    do {
        std::vector<vertex_t> batch;
        for (std::size_t i = 0; i < avail.size(); ++i) {
            if (chosen[i]) {
                batch.push_back(avail[i]);
            }
        }
        prefix.rounds.push_back(std::move(batch));
        if (naive_extend(g, k, L, prefix)) {
            return true;
        }
        prefix.rounds.pop_back();
    } while (std::prev_permutation(chosen.begin(), chosen.end()));
    return false;
}

} // namespace detail

/// Brute force: does any strict schedule of at most L rounds finish by round
/// L? Every candidate is judged by simulate().
inline bool naive_oracle(const Graph& g, std::uint32_t k, round_t L)
{
    if (g.vertex_count() > kOracleMaxVertices) {
        throw ResourceError("naive_oracle: at most " + std::to_string(kOracleMaxVertices) + " vertices");
    }
    if (k == 0 || L == 0) {
        throw PreconditionError("naive_oracle: k and L must be positive");
    }
    Schedule prefix{k, {}};
    return detail::naive_extend(g, k, L, prefix);
}

// ---------------------------------------------------------------------------
// Scheduling a fixed source set.

struct SchedulingInstance {
    Graph graph;
    std::vector<vertex_t> sources;
    std::uint32_t k = 1;
};

/// Ignition round for each source; sources sorted ascending.
struct SourceOrdering {
    std::vector<vertex_t> sources;
    std::vector<round_t> rounds;

    [[nodiscard]] round_t round_of(vertex_t source) const
    {
        const auto it = std::find(sources.begin(), sources.end(), source);
        if (it == sources.end()) {
            throw PreconditionError("ordering: vertex " + std::to_string(source) + " is not a source");
        }
        return rounds[static_cast<std::size_t>(it - sources.begin())];
    }

    [[nodiscard]] Schedule to_schedule(std::uint32_t k) const
    {
        Schedule s{k, {}};
        const round_t last = rounds.empty() ? 0 : *std::max_element(rounds.begin(), rounds.end());
        s.rounds.resize(last);
        for (std::size_t i = 0; i < sources.size(); ++i) {
            s.rounds[rounds[i] - 1].push_back(sources[i]);
        }
        for (auto& batch : s.rounds) {
            std::sort(batch.begin(), batch.end());
        }
        return s;
    }
};

inline void check_instance(const SchedulingInstance& inst)
{
    if (inst.k == 0) {
        throw PreconditionError("scheduling: k must be positive");
    }
    if (inst.sources.empty()) {
        throw PreconditionError("scheduling: empty source set");
    }
    std::vector<bool> seen(inst.graph.vertex_count(), false);
    for (vertex_t s : inst.sources) {
        if (!inst.graph.contains(s)) {
            throw PreconditionError("scheduling: invalid source " + std::to_string(s));
        }
        if (seen[s]) {
            throw PreconditionError("scheduling: source " + std::to_string(s) + " listed twice");
        }
        seen[s] = true;
    }
}

inline round_t default_round_budget(const SchedulingInstance& inst)
{
    return static_cast<round_t>((inst.sources.size() + inst.k - 1) / inst.k);
}

/// Checks an ordering independently of the search: every source assigned a
/// round in 1..R, at most k per round, no source burnt before its round, and
/// every vertex burnt by round R (judged by simulate in lenient mode).
inline bool ordering_is_feasible(const SchedulingInstance& inst, const SourceOrdering& ordering, round_t R)
{
    check_instance(inst);
    auto sorted = inst.sources;
    std::sort(sorted.begin(), sorted.end());
    auto given = ordering.sources;
    std::sort(given.begin(), given.end());
    if (sorted != given || ordering.rounds.size() != ordering.sources.size()) {
        return false;
    }
    std::vector<std::uint32_t> load(R + 1, 0);
    for (round_t r : ordering.rounds) {
        if (r == 0 || r > R || ++load[r] > inst.k) {
            return false;
        }
    }
    const auto report = simulate(inst.graph, ordering.to_schedule(inst.k), SimulationMode::lenient);
    return report.valid && report.completion_round && *report.completion_round <= R;
}

/// Assigns every source a round in 1..R (at most k per round) so that each
/// source is unburnt when ignited and every vertex burns by round R. Returns
/// the lexicographically least assignment over ascending source ids.
///
/// Burn times are min over sources of round + distance, so both conditions
/// reduce to pairwise distance constraints between sources plus a covering
/// check; the search assigns sources in id order with those checks as pruning.
inline std::optional<SourceOrdering> schedule_sources(const SchedulingInstance& inst,
                                                      std::optional<round_t> round_budget = std::nullopt)
{
    check_instance(inst);
    if (inst.sources.size() > kSchedulingMaxSources) {
        throw ResourceError("schedule_sources: " + std::to_string(inst.sources.size()) +
                            " sources exceed the limit of " + std::to_string(kSchedulingMaxSources));
    }
    const round_t R = round_budget.value_or(default_round_budget(inst));
    if (R == 0) {
        throw PreconditionError("schedule_sources: round budget must be positive");
    }

    const Graph& g = inst.graph;
    const std::size_t n = g.vertex_count();
    auto sources = inst.sources;
    std::sort(sources.begin(), sources.end());
    const std::size_t m = sources.size();

    constexpr std::uint64_t kFar = std::uint64_t{1} << 40; // beyond any round budget
    std::vector<std::vector<std::uint64_t>> dist(m, std::vector<std::uint64_t>(n));
    for (std::size_t i = 0; i < m; ++i) {
        const auto table = bfs_distances(g, sources[i]);
        for (vertex_t v = 0; v < n; ++v) {
            dist[i][v] = table.reachable(v) ? std::uint64_t{*table[v]} : kFar;
        }
    }
    // optimistic[i][v]: earliest burn of v using only sources i.. at round 1.
    std::vector<std::vector<std::uint64_t>> optimistic(m + 1, std::vector<std::uint64_t>(n, UINT64_MAX));
    for (std::size_t i = m; i-- > 0;) {
        for (vertex_t v = 0; v < n; ++v) {
            optimistic[i][v] = std::min(optimistic[i + 1][v], 1 + dist[i][v]);
        }
    }
    for (vertex_t v = 0; v < n; ++v) {
        if (optimistic[0][v] > R) {
            return std::nullopt;
        }
    }

    std::vector<round_t> assigned(m, 0);
    std::vector<std::uint32_t> load(R + 1, 0);
    // best[i][v]: earliest burn of v using sources 0..i-1 as assigned.
    std::vector<std::vector<std::uint64_t>> best(m + 1, std::vector<std::uint64_t>(n, UINT64_MAX));

    auto place = [&](auto&& self, std::size_t i) -> bool {
        if (i == m) {
            return true;
        }
        for (round_t r = 1; r <= R; ++r) {
            if (load[r] >= inst.k) {
                continue;
            }
            bool compatible = true;
            for (std::size_t j = 0; j < i && compatible; ++j) {
                const std::uint64_t rj = assigned[j];
                if (rj < r) {
                    compatible = rj + dist[j][sources[i]] > r;
                } else if (r < rj) {
                    compatible = r + dist[i][sources[j]] > rj;
                }
            }
            if (!compatible) {
                continue;
            }
            bool covers = true;
            for (vertex_t v = 0; v < n; ++v) {
                best[i + 1][v] = std::min(best[i][v], r + dist[i][v]);
                if (std::min(best[i + 1][v], optimistic[i + 1][v]) > R) {
                    covers = false;
                    break;
                }
            }
            if (!covers) {
                continue;
            }
            assigned[i] = r;
            ++load[r];
            if (self(self, i + 1)) {
                return true;
            }
            --load[r];
        }
        return false;
    };

    if (!place(place, 0)) {
        return std::nullopt;
    }
    SourceOrdering ordering{sources, assigned};
    if (!ordering_is_feasible(inst, ordering, R)) {
        throw InternalError("schedule_sources: witness failed validation");
    }
    return ordering;
}

} // namespace burnkit
