#pragma once

// Round semantics of the k-burning process.
//
// Round t >= 1 runs in two phases:
//   1. propagation: every unburnt neighbor of a vertex burnt before round t burns;
//   2. ignition: the round-t batch of sources is burnt directly.
// Under strict semantics each batch must hold exactly min(k, unburnt after
// propagation) vertices, all unburnt when ignited. Rounds past the listed
// batches carry empty batches, which are strict only once nothing is left.
//
// A consequence used throughout: a source ignited at round r burns every
// vertex at hop distance d by round r + d.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "burnkit/error.hpp"
#include "burnkit/graph.hpp"

namespace burnkit {

/// Per-round batches of burning sources with spread factor k.
struct Schedule {
    std::uint32_t k = 1;
    std::vector<std::vector<vertex_t>> rounds;

    [[nodiscard]] std::size_t length() const noexcept { return rounds.size(); }
    [[nodiscard]] std::size_t source_count() const noexcept
    {
        std::size_t total = 0;
        for (const auto& batch : rounds) {
            total += batch.size();
        }
        return total;
    }
    friend bool operator==(const Schedule&, const Schedule&) = default;
};

/// One ignition: a source and the round it is burnt directly.
struct Ignition {
    vertex_t vertex;
    round_t round;
    friend bool operator==(const Ignition&, const Ignition&) = default;
};

enum class SimulationMode {
    strict,  ///< batch sizes must equal min(k, available)
    lenient, ///< smaller batches (including implicit empty ones) are accepted
};

enum class ViolationKind {
    already_burnt,
    short_batch,
    unburnable_residue,
};

inline std::string_view to_string(ViolationKind kind)
{
    switch (kind) {
    case ViolationKind::already_burnt:
        return "already burnt at ignition";
    case ViolationKind::short_batch:
        return "batch smaller than required";
    case ViolationKind::unburnable_residue:
        return "unburnable residue";
    }
    return "unknown";
}

struct Violation {
    round_t round;
    std::optional<vertex_t> vertex;
    ViolationKind kind;
    /// For short batches: the required batch size.
    std::uint32_t required = 0;

    [[nodiscard]] std::string reason() const { return std::string(to_string(kind)); }
};

struct BurnReport {
    /// Round in which each vertex burns; empty for vertices that never burn.
    std::vector<std::optional<round_t>> burn_round;
    /// Set exactly when every vertex burns.
    std::optional<round_t> completion_round;
    bool valid = false;
    std::vector<Violation> violations;

    [[nodiscard]] bool has_violation(ViolationKind kind) const
    {
        return std::any_of(violations.begin(), violations.end(),
                           [kind](const Violation& v) { return v.kind == kind; });
    }
};

/// Rejects structurally broken schedules: k = 0, batches over k, invalid ids,
/// or a vertex listed twice.
inline void check_schedule_structure(const Graph& g, const Schedule& s)
{
    if (s.k == 0) {
        throw PreconditionError("schedule: k must be positive");
    }
    std::vector<bool> listed(g.vertex_count(), false);
    for (std::size_t r = 0; r < s.rounds.size(); ++r) {
        const auto& batch = s.rounds[r];
        if (batch.size() > s.k) {
            throw PreconditionError("schedule: round " + std::to_string(r + 1) + " lists " +
                                    std::to_string(batch.size()) + " sources, more than k=" +
                                    std::to_string(s.k));
        }
        for (vertex_t v : batch) {
            if (!g.contains(v)) {
                throw PreconditionError("schedule: round " + std::to_string(r + 1) +
                                        " references invalid vertex " + std::to_string(v));
            }
            if (listed[v]) {
                throw PreconditionError("schedule: vertex " + std::to_string(v) +
                                        " appears more than once");
            }
            listed[v] = true;
        }
    }
}

/// Runs the process round by round and checks the schedule as a certificate.
/// Simulation continues past the listed batches until everything burns or
/// propagation stalls.
inline BurnReport simulate(const Graph& g, const Schedule& s,
                           SimulationMode mode = SimulationMode::strict)
{
    check_schedule_structure(g, s);
    const std::size_t n = g.vertex_count();

    BurnReport report;
    report.burn_round.assign(n, std::nullopt);
    std::size_t unburnt = n;
    std::vector<vertex_t> frontier;
    std::vector<vertex_t> next;
    round_t last_round = 0;

    for (round_t t = 1; unburnt > 0; ++t) {
        const bool listed = t <= s.rounds.size();
        if (!listed && frontier.empty()) {
            break; // no fire left to spread and no more sources
        }
        last_round = t;

        next.clear();
        for (vertex_t u : frontier) {
            for (vertex_t w : g.neighbors(u)) {
                if (!report.burn_round[w]) {
                    report.burn_round[w] = t;
                    --unburnt;
                    next.push_back(w);
                }
            }
        }

        const std::size_t required = std::min<std::size_t>(s.k, unburnt);
        const std::size_t listed_size = listed ? s.rounds[t - 1].size() : 0;
        if (listed) {
            for (vertex_t v : s.rounds[t - 1]) {
                if (report.burn_round[v]) {
                    report.violations.push_back({t, v, ViolationKind::already_burnt, 0});
                    continue;
                }
                report.burn_round[v] = t;
                --unburnt;
                next.push_back(v);
            }
        }
        if (mode == SimulationMode::strict && listed_size < required) {
            report.violations.push_back(
                {t, std::nullopt, ViolationKind::short_batch, static_cast<std::uint32_t>(required)});
        }
        frontier.swap(next);
    }

    // Batches listed after everything burnt name burnt vertices.
    for (std::size_t t = last_round; t < s.rounds.size(); ++t) {
        for (vertex_t v : s.rounds[t]) {
            report.violations.push_back(
                {static_cast<round_t>(t + 1), v, ViolationKind::already_burnt, 0});
        }
    }

    if (unburnt > 0) {
        const auto first = std::find(report.burn_round.begin(), report.burn_round.end(), std::nullopt);
        report.violations.push_back({last_round + 1,
                                     static_cast<vertex_t>(first - report.burn_round.begin()),
                                     ViolationKind::unburnable_residue, 0});
    } else {
        round_t completion = 0;
        for (const auto& r : report.burn_round) {
            completion = std::max(completion, *r);
        }
        report.completion_round = completion;
    }
    report.valid = report.violations.empty();
    return report;
}

/// Flattens a schedule into (vertex, round) pairs in listing order.
inline std::vector<Ignition> ignitions_of(const Schedule& s)
{
    std::vector<Ignition> out;
    for (std::size_t r = 0; r < s.rounds.size(); ++r) {
        for (vertex_t v : s.rounds[r]) {
            out.push_back({v, static_cast<round_t>(r + 1)});
        }
    }
    return out;
}

/// max over vertices v of min over ignitions (s, r) of r + dist(s, v),
/// evaluated with one BFS per ignition.
inline round_t completion_closed_form(const Graph& g, std::span<const Ignition> ignitions)
{
    const std::size_t n = g.vertex_count();
    std::vector<std::uint64_t> best(n, UINT64_MAX);
    for (const auto& [source, round] : ignitions) {
        if (!g.contains(source)) {
            throw PreconditionError("completion_closed_form: invalid vertex " + std::to_string(source));
        }
        if (round == 0) {
            throw PreconditionError("completion_closed_form: rounds are 1-based");
        }
        const auto dist = bfs_distances(g, source);
        for (vertex_t v = 0; v < n; ++v) {
            if (const auto d = dist[v]) {
                best[v] = std::min<std::uint64_t>(best[v], std::uint64_t{round} + *d);
            }
        }
    }
    std::uint64_t completion = 0;
    for (vertex_t v = 0; v < n; ++v) {
        if (best[v] == UINT64_MAX) {
            throw PreconditionError("completion_closed_form: vertex " + std::to_string(v) +
                                    " is unreachable from every ignition");
        }
        completion = std::max(completion, best[v]);
    }
    return static_cast<round_t>(completion);
}

inline round_t completion_closed_form(const Graph& g, std::initializer_list<Ignition> ignitions)
{
    return completion_closed_form(g, std::span<const Ignition>(ignitions.begin(), ignitions.size()));
}

/// Extends every batch to the strict size min(k, available) by appending the
/// smallest unburnt ids that are not scheduled later, and keeps adding rounds
/// until every vertex burns. A listed source that the extra fire reaches
/// before its round is dropped; when only later-scheduled vertices remain, the
/// smallest one is pulled forward. Burn rounds never get later, so the
/// completion round never increases.
inline Schedule pad_schedule(const Graph& g, const Schedule& s)
{
    const auto before = simulate(g, s, SimulationMode::lenient);
    if (before.has_violation(ViolationKind::already_burnt)) {
        throw PreconditionError("pad_schedule: input ignites an already burnt vertex");
    }

    const std::size_t n = g.vertex_count();
    constexpr round_t kNone = 0;
    std::vector<round_t> scheduled_at(n, kNone);
    for (std::size_t r = 0; r < s.rounds.size(); ++r) {
        for (vertex_t v : s.rounds[r]) {
            scheduled_at[v] = static_cast<round_t>(r + 1);
        }
    }

    Schedule out{s.k, {}};
    std::vector<bool> burnt(n, false);
    std::vector<bool> in_batch(n, false);
    std::size_t unburnt = n;
    std::vector<vertex_t> frontier;
    std::vector<vertex_t> next;
    vertex_t free_cursor = 0;  // smallest candidate never scheduled later
    vertex_t pulled_cursor = 0; // smallest candidate scheduled later

    for (round_t t = 1; unburnt > 0; ++t) {
        next.clear();
        for (vertex_t u : frontier) {
            for (vertex_t w : g.neighbors(u)) {
                if (!burnt[w]) {
                    burnt[w] = true;
                    --unburnt;
                    next.push_back(w);
                }
            }
        }
        if (unburnt == 0) {
            break;
        }

        std::vector<vertex_t> batch;
        if (t <= s.rounds.size()) {
            for (vertex_t v : s.rounds[t - 1]) {
                if (!burnt[v]) {
                    batch.push_back(v);
                    in_batch[v] = true;
                }
            }
        }
        const std::size_t required = std::min<std::size_t>(s.k, unburnt);
        while (batch.size() < required) {
            while (free_cursor < n &&
                   (burnt[free_cursor] || in_batch[free_cursor] || scheduled_at[free_cursor] > t)) {
                ++free_cursor;
            }
            if (free_cursor < n) {
                batch.push_back(free_cursor);
                in_batch[free_cursor] = true;
                continue;
            }
            while (pulled_cursor < n && (burnt[pulled_cursor] || in_batch[pulled_cursor] ||
                                         scheduled_at[pulled_cursor] <= t)) {
                ++pulled_cursor;
            }
            if (pulled_cursor == n) {
                throw InternalError("pad_schedule: ran out of candidates");
            }
            batch.push_back(pulled_cursor);
            in_batch[pulled_cursor] = true;
        }
        for (vertex_t v : batch) {
            burnt[v] = true;
            in_batch[v] = false;
            --unburnt;
            next.push_back(v);
        }
        out.rounds.push_back(std::move(batch));
        frontier.swap(next);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Schedule file: "k R", then R lines, each a space-separated batch (may be empty).

inline Schedule parse_schedule(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!detail::is_blank(line)) {
            break;
        }
        line.clear();
    }
    const auto header = detail::parse_uints(line);
    if (!header || header->size() != 2) {
        throw ParseError(line_no == 0 ? 1 : line_no, "malformed schedule header, expected \"k R\"");
    }
    if ((*header)[0] == 0 || (*header)[0] > UINT32_MAX) {
        throw ParseError(line_no, "k must be a positive 32-bit integer");
    }
    Schedule s{static_cast<std::uint32_t>((*header)[0]), {}};
    const auto rounds = (*header)[1];
    for (std::uint64_t r = 0; r < rounds; ++r) {
        if (!std::getline(in, line)) {
            // Trailing empty batches may lose their newline.
            s.rounds.emplace_back();
            ++line_no;
            continue;
        }
        ++line_no;
        const auto ids = detail::parse_uints(line);
        if (!ids) {
            throw ParseError(line_no, "malformed batch line");
        }
        std::vector<vertex_t> batch;
        for (auto id : *ids) {
            if (id >= kUnreachable) {
                throw ParseError(line_no, "vertex id too large");
            }
            batch.push_back(static_cast<vertex_t>(id));
        }
        s.rounds.push_back(std::move(batch));
    }
    while (std::getline(in, line)) {
        ++line_no;
        if (!detail::is_blank(line)) {
            throw ParseError(line_no, "trailing content after " + std::to_string(rounds) + " batches");
        }
    }
    return s;
}

inline std::string serialize_schedule(const Schedule& s)
{
    std::string out = std::to_string(s.k) + " " + std::to_string(s.rounds.size()) + "\n";
    for (const auto& batch : s.rounds) {
        for (std::size_t i = 0; i < batch.size(); ++i) {
            if (i > 0) {
                out += ' ';
            }
            out += std::to_string(batch[i]);
        }
        out += '\n';
    }
    return out;
}

} // namespace burnkit
