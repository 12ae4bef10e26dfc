// biparrow: exact bipartite arrowing toolkit.
//
// Subcommands: arrows, ramsey, verify-constructions, theorem1, spectrum.
// Every command prints one JSON run record to stdout. Exit codes:
//   0  arrows-true / all claims pass / success
//   1  arrows-false (witness written) / a claim failed
//   2  undecided (budget) or bound exceeded
//   64 malformed input
//   65 family refused (use --sample)

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "biparrow/constructions.hpp"
#include "biparrow/io.hpp"
#include "biparrow/run_record.hpp"

using namespace biparrow;
using nlohmann::json;

namespace {

struct CommonOptions {
    std::uint64_t budget = unlimited_budget;
    int jobs = int(std::max(1u, std::thread::hardware_concurrency()));
    bool no_symmetry = false;
    bool no_cache = false;
    std::string order = "shell";
    std::string out_dir = ".";
    std::uint64_t seed = 0;
};

SearchOptions search_options(const CommonOptions &common) {
    SearchOptions options;
    options.budget = common.budget;
    options.jobs = common.jobs;
    options.symmetry_breaking = !common.no_symmetry;
    options.order = common.order == "rowmajor" ? EdgeOrderPolicy::degree_rowmajor
                                               : EdgeOrderPolicy::degree_shell;
    return options;
}

void add_common(CLI::App *cmd, CommonOptions &common, bool with_budget = true) {
    if (with_budget)
        cmd->add_option("--budget", common.budget, "node budget (default unlimited)");
    cmd->add_option("--jobs", common.jobs, "worker threads (default: available parallelism)");
    cmd->add_flag("--no-symmetry", common.no_symmetry, "disable the K_{N,N} symmetry cut");
    cmd->add_option("--order", common.order, "edge order tie-break: shell|rowmajor")
        ->check(CLI::IsMember({"shell", "rowmajor"}));
    cmd->add_option("--out-dir", common.out_dir, "directory for emitted files");
    cmd->add_option("--seed", common.seed, "seed for any randomness (default 0)");
}

// Graph inputs are file paths, or "complete:<n1>x<n2>" for quick K_{a,b}.
BipartiteGraph load_graph(const std::string &arg) {
    if (arg.rfind("complete:", 0) == 0) {
        const std::string dims = arg.substr(9);
        const auto x = dims.find('x');
        if (x == std::string::npos)
            throw ParseError("graph '" + arg + "': expected complete:<n1>x<n2>");
        return BipartiteGraph::complete(std::stoi(dims.substr(0, x)),
                                        std::stoi(dims.substr(x + 1)));
    }
    return read_graph_file(arg);
}

std::string sanitize(const std::string &target) {
    std::string out;
    for (char c : target)
        if (c != ':') out.push_back(c);
    return out;
}

json witness_to_json(const EdgeColoring &c) {
    json edges = json::array();
    for (const Edge &e : c.base().edges()) {
        const auto color = c.get(e.x, e.y);
        if (color) edges.push_back(json::array({e.x, e.y, std::string(1, color_char(*color))}));
    }
    return edges;
}

EdgeColoring witness_from_json(const BipartiteGraph &g, const json &edges) {
    EdgeColoring c = EdgeColoring::over(g);
    for (const auto &entry : edges)
        c.set(entry[0].get<int>(), entry[1].get<int>(),
              entry[2].get<std::string>() == "r" ? Color::red : Color::blue);
    return c;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void emit(const RunRecord &record) { std::cout << record.to_json().dump(2) << '\n'; }

// Cache-wrapped search: decided verdicts round-trip through the results
// cache, including counterexample witnesses. Cache keys are canonical, so a
// hit can come from an isomorphic host with different labels; a stored
// witness is replayed only if it fits this labeling and still verifies,
// otherwise the search reruns.
ArrowVerdict cached_search(const BipartiteGraph &g, const Target &t_red, const Target &t_blue,
                           const SearchOptions &options, const ResultCache &cache,
                           bool use_cache, bool &cache_hit) {
    cache_hit = false;
    const std::string key = ResultCache::key_for(g, t_red, t_blue);
    if (use_cache) {
        if (const auto cached = cache.lookup(key);
            cached && (*cached)["outcome"] != "undecided") {
            ArrowVerdict verdict;
            verdict.outcome = (*cached)["outcome"] == "arrows" ? ArrowOutcome::arrows
                                                               : ArrowOutcome::counterexample;
            verdict.degenerate = cached->value("degenerate", false);
            if (verdict.outcome == ArrowOutcome::arrows) {
                cache_hit = true;
                return verdict;
            }
            bool fits = true;
            for (const auto &entry : (*cached)["witness"])
                fits = fits && g.has_edge(entry[0].get<int>(), entry[1].get<int>());
            if (fits) {
                EdgeColoring witness = witness_from_json(g, (*cached)["witness"]);
                if (witness.is_total() &&
                    !contains_target(witness, Color::red, t_red).found &&
                    !contains_target(witness, Color::blue, t_blue).found) {
                    cache_hit = true;
                    verdict.witness = std::move(witness);
                    return verdict;
                }
            }
        }
    }
    ArrowVerdict verdict = find_bad_coloring(g, t_red, t_blue, options);
    if (use_cache && verdict.outcome != ArrowOutcome::undecided) {
        json value = {{"outcome", to_string(verdict.outcome)},
                      {"degenerate", verdict.degenerate}};
        if (verdict.witness) value["witness"] = witness_to_json(*verdict.witness);
        cache.store(key, value);
    }
    return verdict;
}

// ---------------------------------------------------------------- arrows --

int cmd_arrows(const std::string &graph_arg, const std::string &red_spec,
               const std::string &blue_spec, const CommonOptions &common,
               const std::string &witness_out, const std::string &verify_witness) {
    Timer timer;
    const BipartiteGraph g = load_graph(graph_arg);
    const Target t_red = Target::parse(red_spec);
    const Target t_blue = Target::parse(blue_spec);

    RunRecord record;
    record.command = "arrows";
    record.parameters = {{"graph", graph_arg},
                         {"red", t_red.to_string()},
                         {"blue", t_blue.to_string()},
                         {"jobs", common.jobs},
                         {"symmetry", !common.no_symmetry}};

    if (!verify_witness.empty()) {
        // round-trip check of an emitted witness file
        auto base = std::make_shared<const BipartiteGraph>(g);
        std::ifstream in(verify_witness);
        if (!in) throw ParseError("cannot open '" + verify_witness + "'");
        const EdgeColoring witness = read_coloring(in, base);
        const bool total = witness.is_total();
        const bool red_free = !contains_target(witness, Color::red, t_red).found;
        const bool blue_free = !contains_target(witness, Color::blue, t_blue).found;
        const bool valid = total && red_free && blue_free;
        record.parameters["verify_witness"] = verify_witness;
        record.verdict = {{"witness_valid", valid},
                          {"total", total},
                          {"red_target_absent", red_free},
                          {"blue_target_absent", blue_free}};
        record.wall_time_s = timer.seconds();
        emit(record);
        return valid ? 0 : 1;
    }

    ResultCache cache;
    bool cache_hit = false;
    const ArrowVerdict verdict = cached_search(g, t_red, t_blue, search_options(common), cache,
                                               !common.no_cache, cache_hit);

    record.verdict = {{"outcome", to_string(verdict.outcome)},
                      {"degenerate", verdict.degenerate},
                      {"cache_hit", cache_hit},
                      {"stats", stats_to_json(verdict.stats)}};

    if (verdict.witness) {
        const std::string path =
            witness_out.empty() ? (std::filesystem::path(common.out_dir) / "witness.bcol").string()
                                : witness_out;
        write_coloring_file(path, *verdict.witness);
        record.verdict["witness_file"] = path;
        record.witness_files.push_back(path);
        if (common.jobs > 1 && !cache_hit)
            record.verdict["witness_note"] =
                "witness identity (not existence) may vary across parallel runs";
    }
    record.wall_time_s = timer.seconds();
    emit(record);
    switch (verdict.outcome) {
        case ArrowOutcome::arrows: return 0;
        case ArrowOutcome::counterexample: return 1;
        case ArrowOutcome::undecided: return 2;
    }
    return 2;
}

// ---------------------------------------------------------------- ramsey --

int cmd_ramsey(const std::string &red_spec, const std::string &blue_spec, int max_n,
               const CommonOptions &common, const std::string &format) {
    Timer timer;
    const Target t_red = Target::parse(red_spec);
    const Target t_blue = Target::parse(blue_spec);

    // Same scan as bipartite_ramsey, but each K_{N,N} query goes through the
    // results cache (repeat scans and overlapping target pairs reuse hosts).
    ResultCache cache;
    const SearchOptions options = search_options(common);
    RamseyResult result;
    json steps = json::array();
    std::optional<EdgeColoring> last_witness;
    for (int n = 1; n <= max_n; ++n) {
        const BipartiteGraph g = BipartiteGraph::complete(n, n);
        bool cache_hit = false;
        const ArrowVerdict verdict =
            cached_search(g, t_red, t_blue, options, cache, !common.no_cache, cache_hit);
        result.steps.push_back({n, verdict.outcome, verdict.stats});
        steps.push_back({{"n", n},
                         {"outcome", to_string(verdict.outcome)},
                         {"cache_hit", cache_hit},
                         {"stats", stats_to_json(verdict.stats)}});
        if (verdict.outcome == ArrowOutcome::undecided) {
            result.undecided = true;
            break;
        }
        if (verdict.outcome == ArrowOutcome::arrows) {
            result.value = n;
            result.certificate_stats = verdict.stats;
            result.witness_below = std::move(last_witness);
            break;
        }
        last_witness = verdict.witness;
    }

    RunRecord record;
    record.command = "ramsey";
    record.parameters = {{"red", t_red.to_string()},
                         {"blue", t_blue.to_string()},
                         {"max_n", max_n},
                         {"jobs", common.jobs},
                         {"symmetry", !common.no_symmetry}};
    record.verdict = {{"steps", steps}};
    record.verdict["source"] = "computed";
    if (t_red.kind() == TargetKind::connected_matching &&
        t_blue.kind() == TargetKind::connected_matching && t_red == t_blue)
        record.verdict["note"] = "diagonal connected-matching values are computed, not published";

    int exit_code = 2;
    if (result.value) {
        record.verdict["value"] = *result.value;
        record.verdict["certificate_stats"] = stats_to_json(result.certificate_stats);
        if (result.witness_below && result.witness_below->base().n1() > 0) {
            const std::string path =
                (std::filesystem::path(common.out_dir) /
                 ("ramsey_" + sanitize(t_red.to_string()) + "_" + sanitize(t_blue.to_string()) +
                  "_witness_n" + std::to_string(*result.value - 1) + ".bcol"))
                    .string();
            write_coloring_file(path, *result.witness_below);
            record.verdict["witness_file"] = path;
            record.witness_files.push_back(path);
        }
        exit_code = 0;
    } else {
        record.verdict["value"] = nullptr;
        record.verdict[result.undecided ? "undecided" : "exceeds_bound"] = true;
    }
    record.wall_time_s = timer.seconds();

    if (format == "csv") {
        std::cout << "n,outcome,nodes\n";
        for (const RamseyStep &step : result.steps)
            std::cout << step.n << ',' << to_string(step.outcome) << ',' << step.stats.nodes
                      << '\n';
    } else {
        emit(record);
    }
    return exit_code;
}

// -------------------------------------------------- verify-constructions --

int cmd_verify_constructions(int m, int n, const std::string &which,
                             const CommonOptions &common) {
    Timer timer;
    const WitnessReport report = (which == "split") ? split_witness(m, n)
                                                    : construction_one(m, n);
    const Target t_red = Target::connected_matching(m);
    const Target t_blue = Target::connected_matching(n);
    const bool avoids = verify_witness(report, t_red, t_blue);

    const std::string stem = (which == "split" ? "split_" : "c1_") + std::to_string(m) + "_" +
                             std::to_string(n);
    const auto dir = std::filesystem::path(common.out_dir);
    const std::string graph_path = (dir / (stem + ".bg")).string();
    const std::string coloring_path = (dir / (stem + ".bcol")).string();
    write_graph_file(graph_path, *report.graph);
    write_coloring_file(coloring_path, report.coloring);

    RunRecord record;
    record.command = "verify-constructions";
    record.parameters = {{"m", m}, {"n", n}, {"which", which}};
    json claims = json::array();
    for (const WitnessClaim &claim : report.claims)
        claims.push_back({{"quantity", claim.quantity},
                          {"expected", claim.expected},
                          {"computed", claim.computed},
                          {"pass", claim.pass}});
    record.verdict = {{"claims", claims},
                      {"all_claims_pass", report.all_pass},
                      {"avoids_targets", avoids},
                      {"graph_file", graph_path},
                      {"coloring_file", coloring_path}};
    record.witness_files = {coloring_path};
    record.wall_time_s = timer.seconds();
    emit(record);
    return (report.all_pass && avoids) ? 0 : 1;
}

// -------------------------------------------------------------- theorem1 --

int cmd_theorem1(int m, int n, int sample, const CommonOptions &common) {
    Timer timer;
    const int N = m + n - 1;
    const int delta_min = (3 * N) / 4 + 1;
    const Target t_red = Target::connected_matching(m);
    const Target t_blue = Target::connected_matching(n);

    std::vector<BipartiteGraph> family;
    bool sampled = false;
    if (sample > 0) {
        sampled = true;
        for (int i = 0; i < sample; ++i)
            family.push_back(random_graph_with_min_degree(N, delta_min, common.seed + i));
    } else {
        family = dense_family(N, delta_min);
    }

    // family manifest: one graph file per member plus an index
    const auto dir = std::filesystem::path(common.out_dir) /
                     ("family_m" + std::to_string(m) + "_n" + std::to_string(n));
    std::filesystem::create_directories(dir);
    json digests = json::array();
    for (std::size_t i = 0; i < family.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof(name), "g%03zu.bg", i);
        write_graph_file((dir / name).string(), family[i]);
        digests.push_back(canonical_form(family[i], true).hex());
    }
    {
        std::ofstream index(dir / "index.json");
        index << json{{"count", family.size()},
                      {"n", N},
                      {"delta_min", delta_min},
                      {"sampled", sampled},
                      {"digests", digests}}
                     .dump(2)
              << '\n';
    }

    const FamilyReport report = arrows_family(family, t_red, t_blue, search_options(common));

    RunRecord record;
    record.command = "theorem1";
    record.parameters = {{"m", m},           {"n", n},
                         {"order", N},       {"delta_min", delta_min},
                         {"sampled", sampled}, {"jobs", common.jobs}};
    json members = json::array();
    for (const FamilyEntry &entry : report.entries)
        members.push_back({{"index", entry.index},
                           {"digest", digests[entry.index]},
                           {"outcome", to_string(entry.outcome)},
                           {"nodes", entry.stats.nodes}});
    record.verdict = {{"family_size", report.total},
                      {"all_arrow", report.all_arrow},
                      {"arrows", report.arrows_count},
                      {"counterexamples", report.counterexample_count},
                      {"undecided", report.undecided_count},
                      {"family_dir", dir.string()},
                      {"members", members}};
    record.wall_time_s = timer.seconds();
    emit(record);
    if (report.undecided_count > 0) return 2;
    return report.all_arrow ? 0 : 1;
}

// -------------------------------------------------------------- spectrum --

int cmd_spectrum(const std::string &path, int max_len, const std::string &color) {
    Timer timer;
    BipartiteGraph g = BipartiteGraph::from_edge_list(0, 0, {});
    const std::string kind = sniff_format(path);
    if (kind == "bgraph") {
        if (color != "none")
            throw ParseError("--color needs a coloring file, got a graph file");
        g = read_graph_file(path);
    } else if (kind == "bcol") {
        const EdgeColoring coloring = read_coloring_file(path);
        if (color == "r")
            g = coloring.mono_subgraph(Color::red);
        else if (color == "b")
            g = coloring.mono_subgraph(Color::blue);
        else
            g = coloring.base();
    } else {
        throw ParseError(path + ": unknown format '" + kind + "'");
    }

    const CycleSpectrum s = spectrum(g, max_len);
    RunRecord record;
    record.command = "spectrum";
    record.parameters = {{"input", path}, {"max_len", max_len}, {"color", color}};
    json witnesses = json::object();
    for (const auto &[len, cycle] : s.witnesses) {
        json vertices = json::array();
        for (const VertexRef &v : cycle)
            vertices.push_back(json::array({v.side == Side::X ? "x" : "y", v.index}));
        witnesses[std::to_string(len)] = vertices;
    }
    record.verdict = {{"lengths", s.present},
                      {"max_len_checked", s.max_len_checked},
                      {"witnesses", witnesses}};
    record.wall_time_s = timer.seconds();
    emit(record);
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"biparrow: exact bipartite arrowing toolkit"};
    app.set_version_flag("--version", std::string("biparrow ") + tool_version);
    app.require_subcommand(1);

    CommonOptions common;

    // arrows
    auto *arrows_cmd = app.add_subcommand("arrows", "decide g -> (red, blue)");
    std::string graph_arg, red_spec, blue_spec, witness_out, verify_witness_path;
    arrows_cmd->add_option("graph", graph_arg, "graph file or complete:<n1>x<n2>")->required();
    arrows_cmd->add_option("--red", red_spec, "red target, cm:<k> or cycle:<2k>")->required();
    arrows_cmd->add_option("--blue", blue_spec, "blue target")->required();
    arrows_cmd->add_option("--witness-out", witness_out, "witness file path");
    arrows_cmd->add_option("--verify-witness", verify_witness_path,
                           "check a coloring file instead of searching");
    arrows_cmd->add_flag("--no-cache", common.no_cache, "bypass the results cache");
    add_common(arrows_cmd, common);

    // ramsey
    auto *ramsey_cmd = app.add_subcommand("ramsey", "compute br(red, blue) by scanning K_{N,N}");
    int max_n = 8;
    std::string format = "json";
    ramsey_cmd->add_option("--red", red_spec, "red target")->required();
    ramsey_cmd->add_option("--blue", blue_spec, "blue target")->required();
    ramsey_cmd->add_option("--max-n", max_n, "largest N to test")->required();
    ramsey_cmd->add_option("--format", format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    ramsey_cmd->add_flag("--no-cache", common.no_cache, "bypass the results cache");
    add_common(ramsey_cmd, common);

    // verify-constructions
    auto *verify_cmd = app.add_subcommand("verify-constructions",
                                          "generate and verify an extremal witness");
    int m = 0, n = 0;
    std::string which = "c1";
    verify_cmd->add_option("--m", m, "red matching size")->required();
    verify_cmd->add_option("--n", n, "blue matching size")->required();
    verify_cmd->add_option("--which", which, "split|c1")
        ->check(CLI::IsMember({"split", "c1"}));
    add_common(verify_cmd, common, /*with_budget=*/false);

    // theorem1
    auto *theorem1_cmd =
        app.add_subcommand("theorem1", "verify the dense family arrows (CM_m, CM_n)");
    int sample = 0;
    theorem1_cmd->add_option("--m", m, "red matching size")->required();
    theorem1_cmd->add_option("--n", n, "blue matching size")->required();
    theorem1_cmd->add_option("--sample", sample, "sample this many graphs instead of enumerating");
    add_common(theorem1_cmd, common);

    // spectrum
    auto *spectrum_cmd = app.add_subcommand("spectrum", "even-cycle spectrum of a graph");
    std::string input_path, color = "none";
    int max_len = 8;
    spectrum_cmd->add_option("input", input_path, "graph or coloring file")->required();
    spectrum_cmd->add_option("--max-len", max_len, "largest even length to check")->required();
    spectrum_cmd->add_option("--color", color, "r|b|none")
        ->check(CLI::IsMember({"r", "b", "none"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (arrows_cmd->parsed())
            return cmd_arrows(graph_arg, red_spec, blue_spec, common, witness_out,
                              verify_witness_path);
        if (ramsey_cmd->parsed()) return cmd_ramsey(red_spec, blue_spec, max_n, common, format);
        if (verify_cmd->parsed()) return cmd_verify_constructions(m, n, which, common);
        if (theorem1_cmd->parsed()) return cmd_theorem1(m, n, sample, common);
        if (spectrum_cmd->parsed()) return cmd_spectrum(input_path, max_len, color);
    } catch (const FamilyTooLarge &e) {
        std::cerr << "error: " << e.what() << " (try --sample K --seed S)\n";
        return 65;
    } catch (const ParseError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 64;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 64;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 70;
    }
    return 64;
}
