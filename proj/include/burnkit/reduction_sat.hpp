#pragma once

// 3-SAT -> burning scheduling with fixed sources.
//
// Variables are 1-based. Literal x_i gets a literal vertex with a top path and
// a bottom path of 2(n-i) vertices each; so does its negation. A clause
// vertex hangs off the far end of the top path of each of its literals (off
// the literal vertex itself when the top path is empty), i.e. 2(n-i)+1 hops
// from the literal vertex. The 2n literal vertices are the sources and the
// round budget is 2n with k = 1.
//
// Bottom paths force x_j and its negation into rounds 2j-1 and 2j. A literal
// ignited in the odd round reaches its clauses exactly at round 2n; in the
// even round it is one round late. Odd round = true.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "burnkit/error.hpp"
#include "burnkit/exact.hpp"
#include "burnkit/graph.hpp"

namespace burnkit {

/// Literals are DIMACS style: +i for x_i, -i for its negation.
using Literal = std::int32_t;
using Clause = std::array<Literal, 3>;

struct Cnf3 {
    std::uint32_t variables = 0;
    std::vector<Clause> clauses;
};

/// Truth values indexed by variable - 1.
using Assignment = std::vector<bool>;

inline void check_cnf(const Cnf3& f)
{
    if (f.variables == 0) {
        throw PreconditionError("cnf: no variables declared");
    }
    if (f.clauses.empty()) {
        throw PreconditionError("cnf: empty clause list");
    }
    for (const auto& clause : f.clauses) {
        for (Literal lit : clause) {
            if (lit == 0 || static_cast<std::uint32_t>(std::abs(lit)) > f.variables) {
                throw PreconditionError("cnf: literal " + std::to_string(lit) + " is out of range");
            }
        }
    }
}

inline bool satisfies(const Cnf3& f, const Assignment& a)
{
    if (a.size() != f.variables) {
        return false;
    }
    return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const Clause& clause) {
        return std::any_of(clause.begin(), clause.end(), [&](Literal lit) {
            const bool value = a[static_cast<std::size_t>(std::abs(lit)) - 1];
            return lit > 0 ? value : !value;
        });
    });
}

/// DIMACS CNF: "c" comment lines, a "p cnf <vars> <clauses>" header, then
/// clauses as literal lists terminated by 0. Every clause must have exactly
/// three literals.
inline Cnf3 parse_dimacs(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::uint64_t declared_clauses = 0;
    Cnf3 f;
    std::vector<Literal> pending;
    std::size_t pending_line = 0;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string token;
        if (!(fields >> token) || token == "c" || token[0] == 'c' || token == "%") {
            continue;
        }
        if (token == "p") {
            std::string format;
            long long vars = -1;
            long long count = -1;
            if (have_header || !(fields >> format >> vars >> count) || format != "cnf" || vars <= 0 ||
                count < 0 || vars > INT32_MAX) {
                throw ParseError(line_no, "malformed \"p cnf <variables> <clauses>\" header");
            }
            have_header = true;
            f.variables = static_cast<std::uint32_t>(vars);
            declared_clauses = static_cast<std::uint64_t>(count);
            continue;
        }
        if (!have_header) {
            throw ParseError(line_no, "clause before the \"p cnf\" header");
        }
        do {
            char* end = nullptr;
            const long long lit = std::strtoll(token.c_str(), &end, 10);
            if (end == token.c_str() || *end != '\0') {
                throw ParseError(line_no, "malformed literal \"" + token + "\"");
            }
            if (lit == 0) {
                if (pending.size() != 3) {
                    throw ParseError(pending_line ? pending_line : line_no,
                                     "clause has " + std::to_string(pending.size()) + " literals, expected 3");
                }
                f.clauses.push_back({pending[0], pending[1], pending[2]});
                pending.clear();
                pending_line = 0;
                continue;
            }
            if (static_cast<unsigned long long>(std::llabs(lit)) > f.variables) {
                throw ParseError(line_no, "literal " + token + " exceeds the declared variable count");
            }
            if (pending.empty()) {
                pending_line = line_no;
            }
            pending.push_back(static_cast<Literal>(lit));
        } while (fields >> token);
    }
    if (!have_header) {
        throw ParseError(line_no + 1, "missing \"p cnf\" header");
    }
    if (!pending.empty()) {
        throw ParseError(pending_line, "clause not terminated by 0");
    }
    if (f.clauses.size() != declared_clauses) {
        throw ParseError(line_no, "header declares " + std::to_string(declared_clauses) + " clauses, found " +
                                      std::to_string(f.clauses.size()));
    }
    if (f.clauses.empty()) {
        throw ParseError(line_no, "empty clause list");
    }
    return f;
}

inline std::string serialize_dimacs(const Cnf3& f)
{
    std::string out = "p cnf " + std::to_string(f.variables) + " " + std::to_string(f.clauses.size()) + "\n";
    for (const auto& clause : f.clauses) {
        for (Literal lit : clause) {
            out += std::to_string(lit) + " ";
        }
        out += "0\n";
    }
    return out;
}

// Vertex roles of the scheduling instance.
struct LiteralVertex {
    Literal literal;
};
struct TopPathVertex {
    Literal literal;
    std::uint32_t index; ///< 1 is adjacent to the literal vertex
};
struct BottomPathVertex {
    Literal literal;
    std::uint32_t index;
};
struct ClauseVertex {
    std::uint32_t clause; ///< 0-based clause index
};

using SatRole = std::variant<LiteralVertex, TopPathVertex, BottomPathVertex, ClauseVertex>;

inline std::string role_name(const SatRole& role)
{
    return std::visit(
        [](const auto& r) -> std::string {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, LiteralVertex>) {
                return "literal";
            } else if constexpr (std::is_same_v<T, TopPathVertex>) {
                return "top";
            } else if constexpr (std::is_same_v<T, BottomPathVertex>) {
                return "bottom";
            } else {
                return "clause";
            }
        },
        role);
}

/// Position of a literal in literal_vertex: x_i -> 2(i-1), not x_i -> 2(i-1)+1.
inline std::size_t literal_slot(Literal lit)
{
    const auto var = static_cast<std::size_t>(std::abs(lit));
    return 2 * (var - 1) + (lit < 0 ? 1 : 0);
}

struct SatInstance {
    SchedulingInstance inst;
    Cnf3 formula;
    std::vector<vertex_t> literal_vertex; ///< by literal_slot
    std::vector<vertex_t> clause_vertex;
    std::vector<std::vector<vertex_t>> top_paths; ///< by literal_slot, literal side first
    std::vector<std::vector<vertex_t>> bottom_paths;
    std::vector<SatRole> roles;

    [[nodiscard]] round_t round_budget() const { return 2 * formula.variables; }
    [[nodiscard]] vertex_t vertex_of(Literal lit) const { return literal_vertex[literal_slot(lit)]; }
};

inline SatInstance build_sat_instance(const Cnf3& f)
{
    check_cnf(f);
    const std::uint32_t n = f.variables;
    SatInstance si;
    si.formula = f;
    std::vector<Edge> edges;
    auto fresh = [&si](SatRole role) {
        si.roles.push_back(role);
        return static_cast<vertex_t>(si.roles.size() - 1);
    };

    for (std::uint32_t i = 1; i <= n; ++i) {
        si.literal_vertex.push_back(fresh(LiteralVertex{static_cast<Literal>(i)}));
        si.literal_vertex.push_back(fresh(LiteralVertex{-static_cast<Literal>(i)}));
    }
    si.top_paths.resize(2 * std::size_t{n});
    si.bottom_paths.resize(2 * std::size_t{n});
    for (std::uint32_t i = 1; i <= n; ++i) {
        for (Literal lit : {static_cast<Literal>(i), -static_cast<Literal>(i)}) {
            const std::size_t slot = literal_slot(lit);
            const std::uint32_t length = 2 * (n - i);
            for (bool top : {true, false}) {
                auto& path = top ? si.top_paths[slot] : si.bottom_paths[slot];
                vertex_t prev = si.literal_vertex[slot];
                for (std::uint32_t j = 1; j <= length; ++j) {
                    const vertex_t v = top ? fresh(TopPathVertex{lit, j}) : fresh(BottomPathVertex{lit, j});
                    edges.push_back({prev, v});
                    path.push_back(v);
                    prev = v;
                }
            }
        }
    }
    for (std::uint32_t c = 0; c < f.clauses.size(); ++c) {
        const vertex_t cv = fresh(ClauseVertex{c});
        si.clause_vertex.push_back(cv);
        std::vector<vertex_t> anchors;
        for (Literal lit : f.clauses[c]) {
            const auto& top = si.top_paths[literal_slot(lit)];
            anchors.push_back(top.empty() ? si.vertex_of(lit) : top.back());
        }
        std::sort(anchors.begin(), anchors.end());
        anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());
        for (vertex_t a : anchors) {
            edges.push_back({a, cv});
        }
    }

    si.inst.graph = Graph(si.roles.size(), edges);
    si.inst.sources = si.literal_vertex;
    si.inst.k = 1;
    return si;
}

/// Feasible ordering -> satisfying assignment (odd round = true).
/// Throws CertificateError if a variable's two literals do not occupy rounds
/// 2j-1 and 2j, if the ordering is infeasible, or if the assignment fails a
/// clause.
inline Assignment schedule_to_assignment(const SatInstance& si, const SourceOrdering& ordering)
{
    const std::uint32_t n = si.formula.variables;
    Assignment a(n, false);
    for (std::uint32_t j = 1; j <= n; ++j) {
        const round_t pos = ordering.round_of(si.vertex_of(static_cast<Literal>(j)));
        const round_t neg = ordering.round_of(si.vertex_of(-static_cast<Literal>(j)));
        const round_t odd = 2 * j - 1;
        if (!((pos == odd && neg == odd + 1) || (neg == odd && pos == odd + 1))) {
            throw CertificateError("schedule_to_assignment: literals of x" + std::to_string(j) +
                                   " must occupy rounds " + std::to_string(odd) + " and " +
                                   std::to_string(odd + 1));
        }
        a[j - 1] = pos % 2 == 1;
    }
    if (!ordering_is_feasible(si.inst, ordering, si.round_budget())) {
        throw CertificateError("schedule_to_assignment: ordering does not burn every vertex within 2n rounds");
    }
    if (!satisfies(si.formula, a)) {
        throw CertificateError("schedule_to_assignment: extracted assignment violates a clause");
    }
    return a;
}

/// Satisfying assignment -> ordering over 2n rounds: the true literal of x_j
/// in round 2j-1, the false one in round 2j.
inline SourceOrdering assignment_to_schedule(const SatInstance& si, const Assignment& a)
{
    if (!satisfies(si.formula, a)) {
        throw CertificateError("assignment_to_schedule: assignment does not satisfy the formula");
    }
    SourceOrdering ordering;
    ordering.sources = si.inst.sources;
    std::sort(ordering.sources.begin(), ordering.sources.end());
    ordering.rounds.assign(ordering.sources.size(), 0);
    for (std::uint32_t j = 1; j <= si.formula.variables; ++j) {
        const auto lit = static_cast<Literal>(j);
        const Literal first = a[j - 1] ? lit : -lit;
        for (std::size_t i = 0; i < ordering.sources.size(); ++i) {
            if (ordering.sources[i] == si.vertex_of(first)) {
                ordering.rounds[i] = 2 * j - 1;
            } else if (ordering.sources[i] == si.vertex_of(-first)) {
                ordering.rounds[i] = 2 * j;
            }
        }
    }
    if (!ordering_is_feasible(si.inst, ordering, si.round_budget())) {
        throw InternalError("assignment_to_schedule: ordering fails to burn every vertex within 2n rounds");
    }
    return ordering;
}

} // namespace burnkit
