#pragma once

// burnkit command-line front end. Every command prints one JSON report on
// stdout; failures add a single "burnkit: error: <category>: <message>" line
// on stderr.
//
// Exit status: 0 success, 1 invalid certificate, 2 usage or parse error,
// 3 resource bound exceeded, 4 internal error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "burnkit/burnkit.hpp"

namespace burnkit::cli {

using json = nlohmann::ordered_json;

enum ExitStatus : int {
    kOk = 0,
    kInvalidCertificate = 1,
    kUsage = 2,
    kResourceBound = 3,
    kInternal = 4,
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised after a report was written when the certificate is invalid.
struct InvalidCertificate : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised after a report was written when a bound stopped the computation.
struct BoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read file " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw UsageError("cannot write file " + path);
    }
}

/// "3,0,7" -> {3, 0, 7}.
inline std::vector<long long> parse_list(const std::string& text, const std::string& flag)
{
    std::vector<long long> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) {
            continue;
        }
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size()) {
            throw UsageError(flag + ": malformed entry \"" + item + "\"");
        }
        out.push_back(value);
    }
    return out;
}

inline std::vector<vertex_t> parse_vertex_list(const std::string& text, const std::string& flag)
{
    std::vector<vertex_t> out;
    for (long long v : parse_list(text, flag)) {
        if (v < 0 || v >= kUnreachable) {
            throw UsageError(flag + ": vertex id " + std::to_string(v) + " out of range");
        }
        out.push_back(static_cast<vertex_t>(v));
    }
    return out;
}

inline json graph_summary(const Graph& g)
{
    return {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
}

inline json burn_report_json(const BurnReport& r)
{
    json rounds = json::array();
    for (const auto& b : r.burn_round) {
        rounds.push_back(b ? json(*b) : json(nullptr));
    }
    json violations = json::array();
    for (const auto& v : r.violations) {
        json item{{"round", v.round}, {"vertex", v.vertex ? json(*v.vertex) : json(nullptr)}, {"reason", v.reason()}};
        if (v.kind == ViolationKind::short_batch) {
            item["required"] = v.required;
        }
        violations.push_back(item);
    }
    return {{"burn_round", rounds},
            {"completion_round", r.completion_round ? json(*r.completion_round) : json(nullptr)},
            {"valid", r.valid},
            {"violations", violations}};
}

inline json ordering_json(const SourceOrdering& o)
{
    json items = json::array();
    for (std::size_t i = 0; i < o.sources.size(); ++i) {
        items.push_back({{"vertex", o.sources[i]}, {"round", o.rounds[i]}});
    }
    return items;
}

inline json vc_roles_json(const VcInstance& inst)
{
    json roles = json::array();
    for (vertex_t v = 0; v < inst.roles.size(); ++v) {
        json item{{"id", v}, {"role", role_name(inst.roles[v])}};
        std::visit(
            [&item](const auto& r) {
                using T = std::decay_t<decltype(r)>;
                if constexpr (std::is_same_v<T, VVertex>) {
                    item["original"] = r.original;
                } else if constexpr (std::is_same_v<T, EVertex>) {
                    item["from"] = r.from;
                    item["to"] = r.to;
                } else if constexpr (std::is_same_v<T, DVertex> || std::is_same_v<T, TailVertex>) {
                    item["edge"] = r.edge;
                    item["index"] = r.index;
                } else {
                    item["index"] = r.index;
                }
            },
            inst.roles[v]);
        roles.push_back(item);
    }
    json edges = json::array();
    for (const auto& e : inst.base_edges) {
        edges.push_back({e.u, e.v});
    }
    json doc{{"kind", "vertex-cover"},
             {"params",
              {{"n", inst.params.n}, {"k", inst.params.k}, {"q", inst.params.q}, {"connected", inst.params.connected}}},
             {"round_bound", inst.round_bound()},
             {"base_edges", edges}};
    if (inst.pendant_w) {
        doc["pendant"] = {{"w", *inst.pendant_w}, {"z", *inst.pendant_z}};
    }
    doc["roles"] = roles;
    return doc;
}

inline json sat_roles_json(const SatInstance& si)
{
    json roles = json::array();
    for (vertex_t v = 0; v < si.roles.size(); ++v) {
        json item{{"id", v}, {"role", role_name(si.roles[v])}};
        std::visit(
            [&item](const auto& r) {
                using T = std::decay_t<decltype(r)>;
                if constexpr (std::is_same_v<T, ClauseVertex>) {
                    item["clause"] = r.clause;
                } else if constexpr (std::is_same_v<T, LiteralVertex>) {
                    item["literal"] = r.literal;
                } else {
                    item["literal"] = r.literal;
                    item["index"] = r.index;
                }
            },
            si.roles[v]);
        roles.push_back(item);
    }
    json literals = json::object();
    for (std::uint32_t i = 1; i <= si.formula.variables; ++i) {
        literals[std::to_string(i)] = si.vertex_of(static_cast<Literal>(i));
        literals[std::to_string(-static_cast<Literal>(i))] = si.vertex_of(-static_cast<Literal>(i));
    }
    return {{"kind", "scheduling"},
            {"variables", si.formula.variables},
            {"clauses", si.formula.clauses.size()},
            {"k", si.inst.k},
            {"round_budget", si.round_budget()},
            {"sources", si.inst.sources},
            {"literal_vertex", literals},
            {"clause_vertex", si.clause_vertex},
            {"roles", roles}};
}

inline Assignment parse_assignment(const std::string& text, std::uint32_t variables)
{
    Assignment a(variables, false);
    std::vector<bool> seen(variables, false);
    for (long long lit : parse_list(text, "--assignment")) {
        const long long var = lit < 0 ? -lit : lit;
        if (lit == 0 || var > variables) {
            throw UsageError("--assignment: literal " + std::to_string(lit) + " out of range");
        }
        if (seen[var - 1]) {
            throw UsageError("--assignment: variable " + std::to_string(var) + " given twice");
        }
        seen[var - 1] = true;
        a[var - 1] = lit > 0;
    }
    for (std::uint32_t v = 0; v < variables; ++v) {
        if (!seen[v]) {
            throw UsageError("--assignment: variable " + std::to_string(v + 1) + " missing");
        }
    }
    return a;
}

/// Reads a schedule file holding one source per round into an ordering.
inline SourceOrdering ordering_from_schedule(const Schedule& s)
{
    SourceOrdering o;
    std::vector<std::pair<vertex_t, round_t>> items;
    for (const auto& ign : ignitions_of(s)) {
        items.emplace_back(ign.vertex, ign.round);
    }
    std::sort(items.begin(), items.end());
    for (const auto& [v, r] : items) {
        o.sources.push_back(v);
        o.rounds.push_back(r);
    }
    return o;
}

/// Runs one command. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"burnkit: k-burning simulation, bounds, exact search and reductions", "burnkit"};
    app.require_subcommand(1);

    std::string graph_path;
    std::string schedule_path;
    std::string cnf_path;
    std::string sources_text;
    std::string cover_text;
    std::string assignment_text;
    std::string out_prefix;
    std::string out_schedule;
    std::uint32_t k = 1;
    std::uint32_t q = 0;
    std::uint64_t n = 0;
    std::uint32_t max_rounds = 0;
    double time_budget = 0;
    bool connected = false;
    bool verify_linear = false;
    bool lenient = false;
    bool timing = false;

    auto add_k = [&k](CLI::App* sub) {
        sub->add_option("--k", k, "spread factor (sources per round)")->check(CLI::PositiveNumber);
    };
    auto add_graph = [&graph_path](CLI::App* sub) {
        sub->add_option("--graph", graph_path, "edge-list file")->required();
    };
    app.add_flag("--timing", timing, "add elapsed_ms to the report");

    auto* simulate_cmd = app.add_subcommand("simulate", "simulate a schedule and validate it");
    add_graph(simulate_cmd);
    simulate_cmd->add_option("--schedule", schedule_path, "schedule file")->required();
    simulate_cmd->add_flag("--lenient", lenient, "accept batches smaller than min(k, available)");

    auto* approx_cmd = app.add_subcommand("approx", "lower bound and 3-approximate schedule");
    add_graph(approx_cmd);
    add_k(approx_cmd);
    approx_cmd->add_option("--out-schedule", out_schedule, "also write the schedule file here");

    auto* exact_cmd = app.add_subcommand("exact", "exact burning number by search");
    add_graph(exact_cmd);
    add_k(exact_cmd);
    exact_cmd->add_option("--max-rounds", max_rounds, "give up beyond this many rounds");
    exact_cmd->add_option("--time-budget", time_budget, "seconds before reporting undetermined")
        ->check(CLI::NonNegativeNumber);
    exact_cmd->add_option("--out-schedule", out_schedule, "also write the witness schedule here");

    auto* lb_cmd = app.add_subcommand("lower-bound", "certified lower bound j");
    add_graph(lb_cmd);
    add_k(lb_cmd);
    lb_cmd->add_flag("--verify-linear", verify_linear, "re-check every smaller index");

    auto* sched_cmd = app.add_subcommand("schedule", "order a fixed source set");
    add_graph(sched_cmd);
    add_k(sched_cmd);
    sched_cmd->add_option("--sources", sources_text, "comma-separated source ids")->required();
    sched_cmd->add_option("--max-rounds", max_rounds, "round budget R (default ceil(|sources|/k))");
    sched_cmd->add_option("--out-schedule", out_schedule, "also write the ordering as a schedule file");

    auto* gen_vc = app.add_subcommand("gen-vc", "build the vertex-cover reduction instance");
    add_graph(gen_vc);
    add_k(gen_vc);
    gen_vc->add_option("--q", q, "cover budget")->required();
    gen_vc->add_flag("--connected", connected, "backbone path instead of isolated vertices (k = 1)");
    gen_vc->add_option("--out", out_prefix, "write <out>.graph and <out>.roles.json")->required();

    auto* gen_sat = app.add_subcommand("gen-sat", "build the 3-SAT scheduling instance");
    gen_sat->add_option("--cnf", cnf_path, "DIMACS CNF file")->required();
    gen_sat->add_option("--out", out_prefix, "write <out>.graph and <out>.roles.json")->required();

    auto* map_vc = app.add_subcommand("map-vc", "map a cover to a schedule or a schedule to a cover");
    add_graph(map_vc);
    add_k(map_vc);
    map_vc->add_option("--q", q, "cover budget")->required();
    map_vc->add_flag("--connected", connected, "connected variant (k = 1)");
    auto* cover_opt = map_vc->add_option("--cover", cover_text, "comma-separated cover of the base graph");
    auto* vc_sched_opt = map_vc->add_option("--schedule", schedule_path, "schedule file on the instance");
    cover_opt->excludes(vc_sched_opt);
    map_vc->add_option("--out-schedule", out_schedule, "write the produced schedule here");

    auto* map_sat = app.add_subcommand("map-sat", "map an assignment to an ordering or back");
    map_sat->add_option("--cnf", cnf_path, "DIMACS CNF file")->required();
    auto* assign_opt = map_sat->add_option("--assignment", assignment_text, "literals, e.g. 1,-2,3");
    auto* sat_sched_opt = map_sat->add_option("--schedule", schedule_path, "ordering as a schedule file");
    assign_opt->excludes(sat_sched_opt);
    map_sat->add_option("--out-schedule", out_schedule, "write the produced ordering here");

    auto* path_number = app.add_subcommand("path-number", "k-burning number of the n-vertex path");
    path_number->add_option("--n", n, "path length")->required()->check(CLI::PositiveNumber);
    add_k(path_number);

    auto* path_schedule = app.add_subcommand("path-schedule", "optimal schedule for the n-vertex path");
    path_schedule->add_option("--n", n, "path length")->required()->check(CLI::PositiveNumber);
    add_k(path_schedule);
    path_schedule->add_option("--out-schedule", out_schedule, "also write the schedule file here");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "burnkit: error: usage: " << e.what() << "\n";
        return kUsage;
    }

    const auto started = std::chrono::steady_clock::now();
    json report;
    int status = kOk;
    auto emit = [&]() {
        if (timing) {
            report["elapsed_ms"] =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
        }
        out << report.dump(2) << "\n";
    };

    try {
        auto load_graph = [&]() { return parse_graph(read_file(graph_path)); };

        if (simulate_cmd->parsed()) {
            const Graph g = load_graph();
            const Schedule s = parse_schedule(read_file(schedule_path));
            const auto r = simulate(g, s, lenient ? SimulationMode::lenient : SimulationMode::strict);
            report = {{"command", "simulate"},
                      {"graph", graph_path},
                      {"schedule", schedule_path},
                      {"mode", lenient ? "lenient" : "strict"},
                      {"k", s.k},
                      {"rounds", s.rounds.size()}};
            report.update(burn_report_json(r));
            emit();
            if (!r.valid) {
                throw InvalidCertificate(r.violations.front().reason());
            }
        } else if (approx_cmd->parsed()) {
            const Graph g = load_graph();
            const auto result = approx_schedule(g, k);
            const auto text = serialize_schedule(result.schedule);
            if (!out_schedule.empty()) {
                write_file(out_schedule, text);
            }
            report = {{"command", "approx"},
                      {"graph", graph_path},
                      {"k", k},
                      {"input", graph_summary(g)},
                      {"lower_bound", result.lower_bound},
                      {"completion_round", result.completion},
                      {"upper_limit", 3 * result.lower_bound},
                      {"schedule", text}};
            emit();
        } else if (exact_cmd->parsed()) {
            const Graph g = load_graph();
            ExactOptions options;
            if (max_rounds > 0) {
                options.max_rounds = max_rounds;
            }
            if (exact_cmd->count("--time-budget") > 0) {
                options.time_budget = std::chrono::duration<double>(time_budget);
            }
            const auto result = exact_burning_number(g, k, options);
            report = {{"command", "exact"}, {"graph", graph_path}, {"k", k}, {"input", graph_summary(g)}};
            if (options.max_rounds) {
                report["max_rounds"] = *options.max_rounds;
            }
            if (options.time_budget) {
                report["time_budget_s"] = time_budget;
            }
            if (result.status == ExactStatus::determined) {
                const auto text = serialize_schedule(result.witness);
                if (!out_schedule.empty()) {
                    write_file(out_schedule, text);
                }
                report["status"] = "determined";
                report["burning_number"] = *result.burning_number;
                report["schedule"] = text;
                emit();
            } else {
                const bool timed_out = result.status == ExactStatus::time_budget_exceeded;
                report["status"] = "undetermined";
                report["reason"] = timed_out ? "time budget exceeded" : "not determined within round bound";
                emit();
                throw BoundExceeded(report["reason"].get<std::string>());
            }
        } else if (lb_cmd->parsed()) {
            const Graph g = load_graph();
            const auto result = lower_bound_with_mis(g, k, verify_linear);
            report = {{"command", "lower-bound"},
                      {"graph", graph_path},
                      {"k", k},
                      {"verify_linear", verify_linear},
                      {"input", graph_summary(g)},
                      {"lower_bound", result.j},
                      {"mis_size", result.mis.size()}};
            emit();
        } else if (sched_cmd->parsed()) {
            SchedulingInstance inst{load_graph(), parse_vertex_list(sources_text, "--sources"), k};
            std::optional<round_t> budget;
            if (max_rounds > 0) {
                budget = max_rounds;
            }
            const round_t R = budget.value_or(inst.sources.empty() ? 0 : default_round_budget(inst));
            const auto ordering = schedule_sources(inst, budget);
            report = {{"command", "schedule"}, {"graph", graph_path}, {"k", k}, {"sources", inst.sources},
                      {"round_budget", R},      {"feasible", ordering.has_value()}};
            if (ordering) {
                const auto text = serialize_schedule(ordering->to_schedule(k));
                if (!out_schedule.empty()) {
                    write_file(out_schedule, text);
                }
                report["ordering"] = ordering_json(*ordering);
                report["schedule"] = text;
            }
            emit();
        } else if (gen_vc->parsed()) {
            const Graph g = load_graph();
            const auto inst = build_vc_instance(g, k, q, connected);
            write_file(out_prefix + ".graph", serialize_graph(inst.gprime));
            write_file(out_prefix + ".roles.json", vc_roles_json(inst).dump(1) + "\n");
            report = {{"command", "gen-vc"},
                      {"graph", graph_path},
                      {"k", k},
                      {"q", q},
                      {"connected", connected},
                      {"instance", graph_summary(inst.gprime)},
                      {"round_bound", inst.round_bound()},
                      {"files", {out_prefix + ".graph", out_prefix + ".roles.json"}}};
            emit();
        } else if (gen_sat->parsed()) {
            const auto si = build_sat_instance(parse_dimacs(read_file(cnf_path)));
            write_file(out_prefix + ".graph", serialize_graph(si.inst.graph));
            write_file(out_prefix + ".roles.json", sat_roles_json(si).dump(1) + "\n");
            report = {{"command", "gen-sat"},
                      {"cnf", cnf_path},
                      {"instance", graph_summary(si.inst.graph)},
                      {"sources", si.inst.sources},
                      {"round_budget", si.round_budget()},
                      {"files", {out_prefix + ".graph", out_prefix + ".roles.json"}}};
            emit();
        } else if (map_vc->parsed()) {
            const Graph g = load_graph();
            const auto inst = build_vc_instance(g, k, q, connected);
            report = {{"command", "map-vc"}, {"graph", graph_path}, {"k", k}, {"q", q}, {"connected", connected}};
            if (!cover_text.empty()) {
                const auto cover = parse_vertex_list(cover_text, "--cover");
                const auto s = vc_to_schedule(inst, cover);
                const auto text = serialize_schedule(s);
                if (!out_schedule.empty()) {
                    write_file(out_schedule, text);
                }
                report["direction"] = "cover-to-schedule";
                report["cover"] = cover;
                report["rounds"] = s.rounds.size();
                report["completion_round"] = *simulate(inst.gprime, s).completion_round;
                report["schedule"] = text;
            } else if (!schedule_path.empty()) {
                const auto s = parse_schedule(read_file(schedule_path));
                report["direction"] = "schedule-to-cover";
                report["schedule"] = schedule_path;
                report["cover"] = schedule_to_vc(inst, s);
            } else {
                throw UsageError("map-vc needs --cover or --schedule");
            }
            emit();
        } else if (map_sat->parsed()) {
            const auto si = build_sat_instance(parse_dimacs(read_file(cnf_path)));
            report = {{"command", "map-sat"}, {"cnf", cnf_path}};
            if (!assignment_text.empty()) {
                const auto a = parse_assignment(assignment_text, si.formula.variables);
                const auto ordering = assignment_to_schedule(si, a);
                const auto text = serialize_schedule(ordering.to_schedule(1));
                if (!out_schedule.empty()) {
                    write_file(out_schedule, text);
                }
                report["direction"] = "assignment-to-schedule";
                report["ordering"] = ordering_json(ordering);
                report["schedule"] = text;
            } else if (!schedule_path.empty()) {
                const auto ordering = ordering_from_schedule(parse_schedule(read_file(schedule_path)));
                const auto a = schedule_to_assignment(si, ordering);
                json literals = json::array();
                for (std::size_t i = 0; i < a.size(); ++i) {
                    const auto var = static_cast<long long>(i + 1);
                    literals.push_back(a[i] ? var : -var);
                }
                report["direction"] = "schedule-to-assignment";
                report["assignment"] = literals;
            } else {
                throw UsageError("map-sat needs --assignment or --schedule");
            }
            emit();
        } else if (path_number->parsed()) {
            report = {{"command", "path-number"}, {"n", n}, {"k", k}, {"burning_number", path_burning_number(n, k)}};
            emit();
        } else if (path_schedule->parsed()) {
            const auto s = optimal_path_schedule(n, k);
            const auto r = simulate(make_path(n), s);
            const auto text = serialize_schedule(s);
            if (!out_schedule.empty()) {
                write_file(out_schedule, text);
            }
            report = {{"command", "path-schedule"},
                      {"n", n},
                      {"k", k},
                      {"burning_number", path_burning_number(n, k)},
                      {"completion_round", r.completion_round ? json(*r.completion_round) : json(nullptr)},
                      {"valid", r.valid},
                      {"schedule", text}};
            emit();
        }
    } catch (const InvalidCertificate& e) {
        err << "burnkit: error: invalid-certificate: " << e.what() << "\n";
        status = kInvalidCertificate;
    } catch (const CertificateError& e) {
        err << "burnkit: error: invalid-certificate: " << e.what() << "\n";
        status = kInvalidCertificate;
    } catch (const BoundExceeded& e) {
        err << "burnkit: error: resource-bound: " << e.what() << "\n";
        status = kResourceBound;
    } catch (const ResourceError& e) {
        err << "burnkit: error: resource-bound: " << e.what() << "\n";
        status = kResourceBound;
    } catch (const ParseError& e) {
        err << "burnkit: error: parse: " << e.what() << "\n";
        status = kUsage;
    } catch (const PreconditionError& e) {
        err << "burnkit: error: usage: " << e.what() << "\n";
        status = kUsage;
    } catch (const UsageError& e) {
        err << "burnkit: error: usage: " << e.what() << "\n";
        status = kUsage;
    } catch (const InternalError& e) {
        err << "burnkit: error: internal: " << e.what() << "\n";
        status = kInternal;
    }
    return status;
}

} // namespace burnkit::cli
