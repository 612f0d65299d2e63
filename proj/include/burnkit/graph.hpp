#pragma once

// Simple undirected graphs over dense integer ids, the edge-list text
// format, and breadth-first distance primitives.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "burnkit/error.hpp"

namespace burnkit {

using vertex_t = std::uint32_t;
using round_t = std::uint32_t;

/// Marker stored for vertices that no source reaches.
inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

struct Edge {
    vertex_t u;
    vertex_t v;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph in compressed adjacency form. Vertex ids
/// are 0..vertex_count()-1; every adjacency list is sorted ascending.
class Graph {
public:
    Graph() = default;

    /// Builds from an edge list. Throws PreconditionError on self-loops,
    /// out-of-range ids or repeated edges.
    Graph(std::size_t vertex_count, std::span<const Edge> edges) : offsets_(vertex_count + 1, 0)
    {
        for (const auto& [u, v] : edges) {
            if (u >= vertex_count || v >= vertex_count) {
                throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") references a vertex outside 0.." +
                                        std::to_string(vertex_count));
            }
            if (u == v) {
                throw PreconditionError("self-loop at vertex " + std::to_string(u));
            }
            ++offsets_[u + 1];
            ++offsets_[v + 1];
        }
        for (std::size_t v = 0; v < vertex_count; ++v) {
            offsets_[v + 1] += offsets_[v];
        }
        targets_.resize(offsets_.back());
        std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
        for (const auto& [u, v] : edges) {
            targets_[fill[u]++] = v;
            targets_[fill[v]++] = u;
        }
        for (vertex_t v = 0; v < vertex_count; ++v) {
            const auto first = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
            const auto last = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
            std::sort(first, last);
            if (std::adjacent_find(first, last) != last) {
                throw PreconditionError("duplicate edge at vertex " + std::to_string(v));
            }
        }
    }

    Graph(std::size_t vertex_count, std::initializer_list<Edge> edges)
        : Graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size()))
    {
    }

    [[nodiscard]] std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    [[nodiscard]] std::size_t edge_count() const noexcept { return targets_.size() / 2; }

    [[nodiscard]] std::span<const vertex_t> neighbors(vertex_t v) const
    {
        return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }
    [[nodiscard]] std::size_t degree(vertex_t v) const { return offsets_[v + 1] - offsets_[v]; }

    [[nodiscard]] bool has_edge(vertex_t u, vertex_t v) const
    {
        const auto nbrs = neighbors(u);
        return std::binary_search(nbrs.begin(), nbrs.end(), v);
    }

    [[nodiscard]] bool contains(vertex_t v) const noexcept { return v < vertex_count(); }

    /// Edges with u < v in ascending order.
    [[nodiscard]] std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        out.reserve(edge_count());
        for (vertex_t u = 0; u < vertex_count(); ++u) {
            for (vertex_t v : neighbors(u)) {
                if (u < v) {
                    out.push_back({u, v});
                }
            }
        }
        return out;
    }

private:
    // Neighbours of v are targets_[offsets_[v] .. offsets_[v+1]).
    std::vector<std::size_t> offsets_;
    std::vector<vertex_t> targets_;
};

/// Hop distances from the nearest member of a source set.
class DistanceTable {
public:
    DistanceTable(std::vector<vertex_t> sources, std::vector<std::uint32_t> hops)
        : sources_(std::move(sources)), hops_(std::move(hops))
    {
    }

    [[nodiscard]] std::optional<std::uint32_t> operator[](vertex_t v) const
    {
        if (hops_[v] == kUnreachable) {
            return std::nullopt;
        }
        return hops_[v];
    }

    [[nodiscard]] bool reachable(vertex_t v) const { return hops_[v] != kUnreachable; }
    [[nodiscard]] std::span<const vertex_t> sources() const noexcept { return sources_; }
    /// Raw table; unreachable entries hold kUnreachable.
    [[nodiscard]] std::span<const std::uint32_t> hops() const noexcept { return hops_; }
    [[nodiscard]] std::size_t size() const noexcept { return hops_.size(); }

private:
    std::vector<vertex_t> sources_;
    std::vector<std::uint32_t> hops_;
};

namespace detail {

inline void bfs_into(const Graph& g, std::span<const vertex_t> sources,
                     std::vector<std::uint32_t>& dist, std::uint32_t limit)
{
    std::vector<vertex_t> queue;
    queue.reserve(g.vertex_count());
    for (vertex_t s : sources) {
        if (dist[s] != 0) {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const vertex_t u = queue[head];
        if (dist[u] >= limit) {
            continue;
        }
        for (vertex_t w : g.neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
}

} // namespace detail

/// Multi-source BFS. Throws PreconditionError on an empty or invalid source set.
inline DistanceTable bfs_distances(const Graph& g, std::span<const vertex_t> sources)
{
    if (sources.empty()) {
        throw PreconditionError("bfs_distances: empty source set");
    }
    for (vertex_t s : sources) {
        if (!g.contains(s)) {
            throw PreconditionError("bfs_distances: invalid source id " + std::to_string(s));
        }
    }
    std::vector<std::uint32_t> dist(g.vertex_count(), kUnreachable);
    detail::bfs_into(g, sources, dist, kUnreachable);
    return DistanceTable({sources.begin(), sources.end()}, std::move(dist));
}

inline DistanceTable bfs_distances(const Graph& g, std::initializer_list<vertex_t> sources)
{
    return bfs_distances(g, std::span<const vertex_t>(sources.begin(), sources.size()));
}

inline DistanceTable bfs_distances(const Graph& g, vertex_t source)
{
    return bfs_distances(g, std::span<const vertex_t>(&source, 1));
}

/// Maximal connected vertex sets, each ascending, ordered by smallest member.
inline std::vector<std::vector<vertex_t>> connected_components(const Graph& g)
{
    std::vector<std::vector<vertex_t>> out;
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<vertex_t> stack;
    for (vertex_t root = 0; root < g.vertex_count(); ++root) {
        if (seen[root]) {
            continue;
        }
        std::vector<vertex_t> component;
        seen[root] = true;
        stack.push_back(root);
        while (!stack.empty()) {
            const vertex_t u = stack.back();
            stack.pop_back();
            component.push_back(u);
            for (vertex_t w : g.neighbors(u)) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(component.begin(), component.end());
        out.push_back(std::move(component));
    }
    return out;
}

inline bool is_connected(const Graph& g)
{
    return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

// ---------------------------------------------------------------------------
// Edge-list text format: "n m" on the first line, then m lines "u v".

namespace detail {

inline bool is_blank(std::string_view line)
{
    return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

/// Parses a line of whitespace-separated non-negative integers.
inline std::optional<std::vector<std::uint64_t>> parse_uints(std::string_view line)
{
    std::vector<std::uint64_t> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        if (i == line.size()) {
            break;
        }
        std::uint64_t value = 0;
        std::size_t digits = 0;
        while (i < line.size() && line[i] >= '0' && line[i] <= '9') {
            if (value > (std::numeric_limits<std::uint64_t>::max() - 9) / 10) {
                return std::nullopt;
            }
            value = value * 10 + static_cast<std::uint64_t>(line[i] - '0');
            ++i;
            ++digits;
        }
        if (digits == 0 || (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')) {
            return std::nullopt;
        }
        out.push_back(value);
    }
    return out;
}

} // namespace detail

/// Parses the edge-list format. Errors carry the 1-based line number.
inline Graph parse_graph(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;

    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (!detail::is_blank(line)) {
                return true;
            }
        }
        return false;
    };

    if (!next_line()) {
        throw ParseError(1, "missing header \"n m\"");
    }
    const auto header = detail::parse_uints(line);
    if (!header || header->size() != 2) {
        throw ParseError(line_no, "malformed header, expected \"n m\"");
    }
    const std::uint64_t n = (*header)[0];
    const std::uint64_t m = (*header)[1];
    if (n >= kUnreachable) {
        throw ParseError(line_no, "vertex count too large");
    }

    std::vector<std::vector<vertex_t>> seen(n);
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i) {
        if (!next_line()) {
            throw ParseError(line_no + 1, "expected " + std::to_string(m) + " edges, found " +
                                              std::to_string(i));
        }
        const auto fields = detail::parse_uints(line);
        if (!fields || fields->size() != 2) {
            throw ParseError(line_no, "malformed edge line, expected \"u v\"");
        }
        const auto u = (*fields)[0];
        const auto v = (*fields)[1];
        if (u >= n || v >= n) {
            throw ParseError(line_no, "vertex id out of range");
        }
        if (u == v) {
            throw ParseError(line_no, "self-loop");
        }
        const auto a = static_cast<vertex_t>(std::min(u, v));
        const auto b = static_cast<vertex_t>(std::max(u, v));
        if (std::find(seen[a].begin(), seen[a].end(), b) != seen[a].end()) {
            throw ParseError(line_no, "duplicate edge");
        }
        seen[a].push_back(b);
        edges.push_back({a, b});
    }
    if (next_line()) {
        throw ParseError(line_no, "trailing content after " + std::to_string(m) + " edges");
    }
    return Graph(static_cast<std::size_t>(n), edges);
}

/// Canonical form: header, then each edge once as "u v" with u < v, ascending.
inline std::string serialize_graph(const Graph& g)
{
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

// Small generators used by tests, the CLI and the acceptance suite.

inline Graph make_path(std::size_t n)
{
    std::vector<Edge> edges;
    for (vertex_t v = 0; v + 1 < n; ++v) {
        edges.push_back({v, v + 1});
    }
    return Graph(n, edges);
}

inline Graph make_cycle(std::size_t n)
{
    std::vector<Edge> edges;
    for (vertex_t v = 0; v + 1 < n; ++v) {
        edges.push_back({v, v + 1});
    }
    if (n >= 3) {
        edges.push_back({0, static_cast<vertex_t>(n - 1)});
    }
    return Graph(n, edges);
}

inline Graph make_complete(std::size_t n)
{
    std::vector<Edge> edges;
    for (vertex_t u = 0; u < n; ++u) {
        for (vertex_t v = u + 1; v < n; ++v) {
            edges.push_back({u, v});
        }
    }
    return Graph(n, edges);
}

/// Star with center 0.
inline Graph make_star(std::size_t n)
{
    std::vector<Edge> edges;
    for (vertex_t v = 1; v < n; ++v) {
        edges.push_back({0, v});
    }
    return Graph(n, edges);
}

/// rows x cols grid, row-major ids.
inline Graph make_grid(std::size_t rows, std::size_t cols)
{
    std::vector<Edge> edges;
    edges.reserve(2 * rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const auto v = static_cast<vertex_t>(r * cols + c);
            if (c + 1 < cols) {
                edges.push_back({v, v + 1});
            }
            if (r + 1 < rows) {
                edges.push_back({v, static_cast<vertex_t>(v + cols)});
            }
        }
    }
    return Graph(rows * cols, edges);
}

inline Graph make_petersen()
{
    return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7}, {3, 8},
                      {4, 9}, {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
}

/// Triangular prism: two triangles joined by a perfect matching.
inline Graph make_prism()
{
    return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

} // namespace burnkit
