#pragma once

// k-burning of paths: b_k(P_n) is the smallest b with k*b^2 >= n.

#include <algorithm>
#include <cstdint>

#include "burnkit/burning.hpp"
#include "burnkit/error.hpp"
#include "burnkit/graph.hpp"

namespace burnkit {

/// Smallest b with k*b*b >= n, in exact integer arithmetic.
inline std::uint64_t path_burning_number(std::uint64_t n, std::uint64_t k)
{
    if (n == 0 || k == 0) {
        throw PreconditionError("path_burning_number: n and k must be positive");
    }
    // q = ceil(n / k); the answer is ceil(sqrt(q)).
    const std::uint64_t q = n / k + (n % k != 0);
    std::uint64_t lo = 1;
    std::uint64_t hi = std::uint64_t{1} << 32;
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (static_cast<unsigned __int128>(mid) * mid >= q) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return lo;
}

/// Strict schedule on P_n (ids 0..n-1 along the path) finishing in exactly
/// path_burning_number(n, k) rounds.
///
/// The path is cut into k contiguous pieces of at most ceil(n/k) vertices.
/// Each piece is covered left to right by segments of 2b-1, 2b-3, ..., 1
/// vertices; the source at the center of the i-th segment is ignited in
/// round i+1, so all pieces burn in parallel. A segment cut short by the end
/// of its piece gets a source close enough to cover what is left.
inline Schedule optimal_path_schedule(std::uint64_t n, std::uint32_t k)
{
    const std::uint64_t b = path_burning_number(n, k);
    if (n >= kUnreachable) {
        throw PreconditionError("optimal_path_schedule: path too long");
    }
    Schedule s{k, std::vector<std::vector<vertex_t>>(b)};

    const std::uint64_t pieces = std::min<std::uint64_t>(k, n);
    const std::uint64_t base = n / pieces;
    const std::uint64_t extra = n % pieces;
    std::uint64_t start = 0;
    for (std::uint64_t p = 0; p < pieces; ++p) {
        const std::uint64_t len = base + (p < extra ? 1 : 0);
        const std::uint64_t end = start + len; // exclusive
        std::uint64_t seg_start = start;
        for (std::uint64_t i = 0; i < b && seg_start < end; ++i) {
            const std::uint64_t radius = b - 1 - i;
            const std::uint64_t center = std::min(seg_start + radius, end - 1);
            s.rounds[i].push_back(static_cast<vertex_t>(center));
            seg_start += 2 * radius + 1;
        }
        start = end;
    }
    for (auto& batch : s.rounds) {
        std::sort(batch.begin(), batch.end());
    }
    return pad_schedule(make_path(static_cast<std::size_t>(n)), s);
}

} // namespace burnkit
