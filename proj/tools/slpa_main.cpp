// Batch CLI: detection (run), evaluation (eval), scaling benchmark (bench),
// synthetic instance generation (synth), bipartite projection (project) and
// nested-community reporting (hierarchy).

#include <CLI11.hpp>

#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "slpa/attributes.hpp"
#include "slpa/bench.hpp"
#include "slpa/cover.hpp"
#include "slpa/errors.hpp"
#include "slpa/graph.hpp"
#include "slpa/metrics.hpp"
#include "slpa/pipeline.hpp"
#include "slpa/postprocess.hpp"
#include "slpa/report.hpp"
#include "slpa/slpa.hpp"
#include "slpa/synth.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int exit_usage = 64;    // bad flags or flag combinations
constexpr int exit_data = 65;     // unreadable or malformed input data
constexpr int exit_internal = 70; // everything else

// Seed lists accept "7", "1,5,9" and the range form "1..10".
std::vector<std::uint64_t> parse_seeds(const std::string& text) {
    auto number = [&](const std::string& s) -> std::uint64_t {
        try {
            std::size_t used = 0;
            std::uint64_t value = std::stoull(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return value;
        } catch (const std::exception&) {
            throw slpa::ConfigError("bad seed list '" + text + "'");
        }
    };
    std::vector<std::uint64_t> seeds;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto dots = item.find("..");
        if (dots != std::string::npos) {
            std::uint64_t lo = number(item.substr(0, dots));
            std::uint64_t hi = number(item.substr(dots + 2));
            if (hi < lo) throw slpa::ConfigError("seed range '" + item + "' is reversed");
            for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
        } else if (!item.empty()) {
            seeds.push_back(number(item));
        }
    }
    if (seeds.empty()) throw slpa::ConfigError("no seeds given");
    return seeds;
}

std::string format_r(double r) {
    std::ostringstream out;
    out << r;
    return out.str();
}

slpa::LoadedGraph load_graph_file(const std::string& path, bool bipartite) {
    std::ifstream in(path);
    if (!in) throw slpa::ParseError("cannot open input file '" + path + "'");
    return slpa::load_edge_list(in, bipartite);
}

slpa::Cover load_cover_file(const std::string& path, const slpa::Graph& graph) {
    std::ifstream in(path);
    if (!in) throw slpa::ParseError("cannot open cover file '" + path + "'");
    return slpa::load_cover(in, graph);
}

// Pulls "r=... T=... seed=..." tokens from a cover file's leading comments.
struct RunTags {
    std::string r, iterations, seed;
};
RunTags read_run_tags(const std::string& path) {
    RunTags tags;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] != '#') break;
        std::istringstream fields(line.substr(1));
        std::string token;
        while (fields >> token) {
            auto eq = token.find('=');
            if (eq == std::string::npos) continue;
            std::string key = token.substr(0, eq), value = token.substr(eq + 1);
            if (key == "r") tags.r = value;
            if (key == "T") tags.iterations = value;
            if (key == "seed") tags.seed = value;
        }
    }
    return tags;
}

struct RunOptions {
    std::string input;
    std::string out_dir = "slpa_out";
    std::uint32_t iterations = 100;
    std::vector<double> thresholds;
    std::string seeds = "1";
    bool bipartite = false;
    bool keep_subsets = false;
    bool disjoint = false;
    unsigned jobs = 1;
};

int cmd_run(const RunOptions& opt) {
    std::vector<std::uint64_t> seeds = parse_seeds(opt.seeds);
    std::vector<double> thresholds = opt.thresholds;
    if (thresholds.empty())
        for (int i = 1; i <= 10; ++i) thresholds.push_back(i * 0.01);
    std::vector<slpa::Threshold> validated;
    for (double r : thresholds) validated.emplace_back(r, opt.disjoint);

    auto loaded = load_graph_file(opt.input, opt.bipartite);
    const slpa::Graph& graph = loaded.graph;
    std::cerr << "loaded " << opt.input << ": n=" << graph.node_count()
              << " m=" << graph.edge_count() << " (dropped " << loaded.summary.duplicate_edges
              << " duplicate edges, " << loaded.summary.self_loops << " self-loops)\n";

    fs::create_directories(opt.out_dir);

    struct SeedResult {
        double evolve_seconds = 0.0;
        std::vector<slpa::Cover> covers; // one per threshold
    };
    std::vector<SeedResult> results(seeds.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= seeds.size()) return;
            slpa::RunConfig config{opt.iterations, seeds[i]};
            auto start = std::chrono::steady_clock::now();
            slpa::Memories memories = slpa::evolve(graph, config);
            auto stop = std::chrono::steady_clock::now();
            results[i].evolve_seconds = std::chrono::duration<double>(stop - start).count();
            for (const auto& threshold : validated)
                results[i].covers.push_back(
                    slpa::detect_from_memories(graph, memories, threshold, opt.keep_subsets));
        }
    };
    unsigned jobs = std::max(1u, std::min<unsigned>(opt.jobs, seeds.size()));
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    // single-writer output pass, deterministic order
    std::ofstream timing(fs::path(opt.out_dir) / "timing.csv");
    timing << "seed,evolve_seconds\n";
    std::vector<std::string> artifacts;
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        timing << seeds[i] << ',' << results[i].evolve_seconds << '\n';
        for (std::size_t t = 0; t < validated.size(); ++t) {
            std::string stem =
                "r" + format_r(validated[t].value) + "_s" + std::to_string(seeds[i]);
            fs::path cover_path = fs::path(opt.out_dir) / ("cover_" + stem + ".txt");
            std::ofstream cover_out(cover_path);
            std::string header = "r=" + format_r(validated[t].value) +
                                 " T=" + std::to_string(opt.iterations) +
                                 " seed=" + std::to_string(seeds[i]) + " input=" + opt.input;
            slpa::write_cover(results[i].covers[t], graph, cover_out, header);
            fs::path overlap_path = fs::path(opt.out_dir) / ("overlap_" + stem + ".txt");
            std::ofstream overlap_out(overlap_path);
            slpa::write_overlap_report(results[i].covers[t], graph, overlap_out);
            artifacts.push_back(cover_path.filename().string());
            artifacts.push_back(overlap_path.filename().string());
        }
    }

    std::ofstream manifest(fs::path(opt.out_dir) / "manifest.txt");
    manifest << "command=run\ninput=" << opt.input << "\nn=" << graph.node_count()
             << "\nm=" << graph.edge_count() << "\nT=" << opt.iterations << "\nr=";
    for (std::size_t t = 0; t < validated.size(); ++t)
        manifest << (t ? "," : "") << format_r(validated[t].value);
    manifest << "\nseeds=";
    for (std::size_t i = 0; i < seeds.size(); ++i) manifest << (i ? "," : "") << seeds[i];
    manifest << "\nbipartite=" << opt.bipartite << "\nkeep_subsets=" << opt.keep_subsets
             << "\ndisjoint=" << opt.disjoint << "\n";
    for (const auto& artifact : artifacts) manifest << "artifact=" << artifact << '\n';

    std::cerr << "wrote " << artifacts.size() << " artifacts to " << opt.out_dir << "\n";
    return 0;
}

struct EvalOptions {
    std::string input;
    std::vector<std::string> covers;
    std::string truth;
    std::string attrs;
    std::vector<std::string> metrics;
    std::vector<std::size_t> hist_edges;
    std::string out_dir;
    bool bipartite = false;
    bool hierarchy = false;
};

std::vector<std::size_t> default_hist_edges(const slpa::Cover& cover) {
    std::size_t max_size = 1;
    for (const auto& c : cover) max_size = std::max(max_size, c.size());
    std::vector<std::size_t> edges{1};
    while (edges.back() < max_size) edges.push_back(edges.back() * 2);
    if (edges.size() < 2) edges.push_back(2);
    return edges;
}

// Cover restricted to one side of a bipartite graph, re-expressed in the
// projection's own node ids.
slpa::Cover restrict_cover_to_side(const slpa::Cover& cover, const slpa::Graph& graph,
                                   const slpa::Graph& projection, slpa::Side side) {
    std::vector<std::vector<slpa::NodeId>> restricted;
    for (const auto& community : cover) {
        std::vector<slpa::NodeId> members;
        for (slpa::NodeId v : community)
            if (graph.side(v) == side) members.push_back(projection.id_of(graph.name(v)));
        if (!members.empty()) restricted.push_back(std::move(members));
    }
    return slpa::Cover(std::move(restricted));
}

int cmd_eval(const EvalOptions& opt) {
    auto loaded = load_graph_file(opt.input, opt.bipartite);
    const slpa::Graph& graph = loaded.graph;
    const std::size_t n = graph.node_count();

    std::vector<std::string> metrics = opt.metrics;
    if (metrics.empty()) {
        if (!opt.truth.empty())
            metrics = {"nmi", "omega", "fscore"};
        else
            metrics = {"qov"};
    }
    if (!opt.hist_edges.empty() &&
        std::find(metrics.begin(), metrics.end(), "hist") == metrics.end())
        metrics.push_back("hist");

    bool needs_truth = false;
    for (const auto& metric : metrics) {
        if (metric == "nmi" || metric == "omega" || metric == "fscore") needs_truth = true;
        else if (metric != "qov" && metric != "hist")
            throw slpa::ConfigError("unknown metric '" + metric + "'");
    }
    if (needs_truth && opt.truth.empty())
        throw slpa::ConfigError("metrics nmi/omega/fscore require --truth");

    std::optional<slpa::Cover> truth;
    if (!opt.truth.empty()) truth = load_cover_file(opt.truth, graph);

    std::optional<slpa::AttributeTable> attributes;
    if (!opt.attrs.empty()) {
        std::ifstream in(opt.attrs);
        if (!in) throw slpa::ParseError("cannot open attribute file '" + opt.attrs + "'");
        attributes = slpa::load_attribute_table(in, graph);
    }
    if (opt.hierarchy && !attributes)
        throw slpa::ConfigError("--hierarchy requires --attrs");

    slpa::Graph projection_one, projection_two;
    if (opt.bipartite) {
        projection_one = slpa::project_bipartite(graph, slpa::Side::one);
        projection_two = slpa::project_bipartite(graph, slpa::Side::two);
    }

    std::vector<slpa::MetricRow> rows;
    std::map<std::string, std::vector<double>> by_metric; // for mean/std
    auto push = [&](const std::string& metric, std::optional<double> value,
                    const std::string& run_id, const RunTags& tags) {
        rows.push_back({metric, value, run_id, tags.r, tags.iterations, tags.seed});
        if (value) by_metric[metric].push_back(*value);
    };

    if (!opt.out_dir.empty()) fs::create_directories(opt.out_dir);

    for (const auto& path : opt.covers) {
        slpa::Cover cover = load_cover_file(path, graph);
        RunTags tags = read_run_tags(path);
        std::string run_id = fs::path(path).filename().string();

        for (const auto& metric : metrics) {
            if (metric == "nmi") {
                push("nmi", slpa::extended_nmi(cover, *truth, n), run_id, tags);
            } else if (metric == "omega") {
                push("omega", slpa::omega_index(cover, *truth, n), run_id, tags);
            } else if (metric == "fscore") {
                auto confusion = slpa::overlap_fscore(cover, *truth, n);
                push("fscore", confusion.f_score().as_double(), run_id, tags);
                push("precision", confusion.precision().as_double(), run_id, tags);
                push("recall", confusion.recall().as_double(), run_id, tags);
                push("overlapping_detected",
                     static_cast<double>(confusion.detected_overlapping()), run_id, tags);
            } else if (metric == "qov") {
                if (opt.bipartite) {
                    auto side_one = restrict_cover_to_side(cover, graph, projection_one,
                                                           slpa::Side::one);
                    auto side_two = restrict_cover_to_side(cover, graph, projection_two,
                                                           slpa::Side::two);
                    push("qov_side1", slpa::overlapping_modularity(projection_one, side_one),
                         run_id, tags);
                    push("qov_side2", slpa::overlapping_modularity(projection_two, side_two),
                         run_id, tags);
                } else {
                    push("qov", slpa::overlapping_modularity(graph, cover), run_id, tags);
                }
            } else if (metric == "hist") {
                auto edges = opt.hist_edges.empty() ? default_hist_edges(cover) : opt.hist_edges;
                auto hist = slpa::size_histogram(cover, edges);
                for (std::size_t b = 0; b + 1 < hist.edges.size(); ++b) {
                    std::string name = "hist[" + std::to_string(hist.edges[b]) + ".." +
                                       std::to_string(hist.edges[b + 1]) +
                                       (b + 2 == hist.edges.size() ? "]" : ")");
                    push(name, static_cast<double>(hist.counts[b]), run_id, tags);
                }
                if (hist.underflow) push("hist_underflow", double(hist.underflow), run_id, tags);
                if (hist.overflow) push("hist_overflow", double(hist.overflow), run_id, tags);
            }
        }

        if (opt.hierarchy) {
            auto forest = slpa::containment_forest(cover);
            if (!opt.out_dir.empty()) {
                fs::path out_path = fs::path(opt.out_dir) /
                                    ("hierarchy_" + fs::path(path).stem().string() + ".txt");
                std::ofstream out(out_path);
                slpa::write_hierarchy(forest, cover, &*attributes, out);
            } else {
                // keep stdout clean for the CSV report
                slpa::write_hierarchy(forest, cover, &*attributes, std::cerr);
            }
        }
    }

    if (opt.covers.size() > 1) {
        for (const auto& [metric, values] : by_metric) {
            auto [mean, stddev] = slpa::mean_stddev(values);
            rows.push_back({metric + "_mean", mean, "summary", "", "", ""});
            rows.push_back({metric + "_stddev", stddev, "summary", "", "", ""});
        }
    }

    std::vector<std::string> comments = {
        "nmi_variant=per-community normalized conditional entropy (binary membership variables)"};
    slpa::write_metric_csv(rows, std::cout, comments);
    slpa::write_metric_summary(rows, std::cerr);
    if (!opt.out_dir.empty()) {
        std::ofstream out(fs::path(opt.out_dir) / "metrics.csv");
        slpa::write_metric_csv(rows, out, comments);
    }
    return 0;
}

struct BenchOptions {
    std::vector<std::size_t> nodes;
    std::vector<double> kbar;
    std::vector<std::size_t> edges;
    std::uint32_t iterations = 100;
    std::string seeds = "1";
    std::string out_dir;
};

int cmd_bench(const BenchOptions& opt) {
    std::vector<std::pair<std::size_t, double>> rungs;
    if (!opt.edges.empty()) {
        if (opt.kbar.size() > 1)
            throw slpa::ConfigError("--edges expects a single --kbar value");
        double kbar = opt.kbar.empty() ? 10.0 : opt.kbar.front();
        for (std::size_t m : opt.edges)
            rungs.emplace_back(static_cast<std::size_t>(std::llround(2.0 * m / kbar)), kbar);
    } else {
        std::vector<std::size_t> nodes = opt.nodes.empty() ? std::vector<std::size_t>{5000} : opt.nodes;
        std::vector<double> kbars = opt.kbar.empty() ? std::vector<double>{10.0} : opt.kbar;
        for (std::size_t n : nodes)
            for (double k : kbars) rungs.emplace_back(n, k);
    }
    if (rungs.size() < 4)
        std::cerr << "note: fewer than 4 rungs; the linear fit will be weak\n";

    auto points = slpa::bench_evolve(rungs, opt.iterations, parse_seeds(opt.seeds));

    std::ostringstream csv;
    csv << "n,m,seed,seconds,status\n";
    for (const auto& point : points) {
        csv << point.n << ',' << point.m << ',' << point.seed << ',' << point.seconds << ','
            << (point.failed ? point.error : "ok") << '\n';
    }
    std::cout << csv.str();

    std::vector<double> ms, seconds;
    slpa::median_per_rung(points, ms, seconds);
    if (ms.size() >= 2) {
        auto fit = slpa::fit_linear(ms, seconds);
        std::cout << "# fit seconds = " << fit.intercept << " + " << fit.slope
                  << " * m, R2 = " << fit.r_squared << '\n';
    }
    if (!opt.out_dir.empty()) {
        fs::create_directories(opt.out_dir);
        std::ofstream out(fs::path(opt.out_dir) / "timing.csv");
        out << csv.str();
    }
    return 0;
}

struct SynthOptions {
    std::string model = "planted";
    std::size_t n = 100;
    std::vector<std::size_t> sizes;
    std::vector<std::size_t> size_range; // min,max for the power-law sampler
    double size_exponent = 1.0;
    std::size_t overlapping = 0;
    std::size_t memberships = 2;
    double p_in = 0.3;
    double mu = 0.3;
    double kbar = 10.0;
    std::uint64_t seed = 1;
    std::string out_dir = "synth_out";
};

int cmd_synth(const SynthOptions& opt) {
    fs::create_directories(opt.out_dir);
    if (opt.model == "random") {
        slpa::Graph graph = slpa::homogeneous_random_graph(opt.n, opt.kbar, opt.seed);
        std::ofstream out(fs::path(opt.out_dir) / "graph.txt");
        slpa::write_edge_list(graph, out);
        std::cerr << "random graph: n=" << graph.node_count() << " m=" << graph.edge_count()
                  << "\n";
        return 0;
    }
    if (opt.model != "planted") throw slpa::ConfigError("unknown model '" + opt.model + "'");

    slpa::PlantedConfig config;
    config.n = opt.n;
    config.overlapping_nodes = opt.overlapping;
    config.memberships = opt.memberships;
    config.p_in = opt.p_in;
    config.mu = opt.mu;
    config.seed = opt.seed;
    const std::size_t slots = opt.n + opt.overlapping * (opt.memberships - 1);
    if (!opt.sizes.empty()) {
        config.community_sizes = opt.sizes;
    } else if (opt.size_range.size() == 2) {
        slpa::Rng rng(opt.seed ^ 0x9e3779b97f4a7c15ull);
        config.community_sizes = slpa::sample_community_sizes(
            slots, opt.size_range[0], opt.size_range[1], opt.size_exponent, rng);
    } else {
        throw slpa::ConfigError("provide --sizes or --size-range min,max");
    }

    auto instance = slpa::planted_cover_graph(config);
    {
        std::ofstream out(fs::path(opt.out_dir) / "graph.txt");
        slpa::write_edge_list(instance.graph, out);
    }
    {
        std::ofstream out(fs::path(opt.out_dir) / "truth.txt");
        slpa::write_cover(instance.cover, instance.graph, out);
    }
    std::ofstream manifest(fs::path(opt.out_dir) / "manifest.txt");
    manifest << "command=synth\nmodel=planted\nn=" << opt.n << "\nsizes=";
    for (std::size_t i = 0; i < config.community_sizes.size(); ++i)
        manifest << (i ? "," : "") << config.community_sizes[i];
    manifest << "\nO_n=" << opt.overlapping << "\nO_m=" << opt.memberships
             << "\np_in=" << opt.p_in << "\nmu=" << opt.mu << "\nseed=" << opt.seed << "\n";
    std::cerr << "planted instance: n=" << instance.graph.node_count()
              << " m=" << instance.graph.edge_count()
              << " communities=" << instance.cover.size() << "\n";
    return 0;
}

struct ProjectOptions {
    std::string input;
    int side = 1;
    std::string out_file;
};

int cmd_project(const ProjectOptions& opt) {
    auto loaded = load_graph_file(opt.input, /*bipartite=*/true);
    slpa::Graph projection = slpa::project_bipartite(
        loaded.graph, opt.side == 1 ? slpa::Side::one : slpa::Side::two);
    if (opt.out_file.empty()) {
        slpa::write_edge_list(projection, std::cout);
    } else {
        std::ofstream out(opt.out_file);
        slpa::write_edge_list(projection, out);
    }
    std::cerr << "projection side " << opt.side << ": n=" << projection.node_count()
              << " m=" << projection.edge_count() << "\n";
    return 0;
}

struct HierarchyOptions {
    std::string input;
    std::string cover;
    std::string attrs;
    std::string out_file;
};

int cmd_hierarchy(const HierarchyOptions& opt) {
    auto loaded = load_graph_file(opt.input, false);
    slpa::Cover cover = load_cover_file(opt.cover, loaded.graph);
    std::optional<slpa::AttributeTable> attributes;
    if (!opt.attrs.empty()) {
        std::ifstream in(opt.attrs);
        if (!in) throw slpa::ParseError("cannot open attribute file '" + opt.attrs + "'");
        attributes = slpa::load_attribute_table(in, loaded.graph);
    }
    auto forest = slpa::containment_forest(cover);
    if (opt.out_file.empty()) {
        slpa::write_hierarchy(forest, cover, attributes ? &*attributes : nullptr, std::cout);
    } else {
        std::ofstream out(opt.out_file);
        slpa::write_hierarchy(forest, cover, attributes ? &*attributes : nullptr, out);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"SLPA overlapping community detection"};
    app.require_subcommand(1);

    RunOptions run_opt;
    auto* run = app.add_subcommand("run", "detect communities and write cover files");
    run->add_option("-i,--input", run_opt.input, "edge list file")->required();
    run->add_option("-T,--iterations", run_opt.iterations, "iteration count (default 100)");
    run->add_option("-r,--threshold", run_opt.thresholds,
                    "post-processing threshold, repeatable (default sweep 0.01..0.1)");
    run->add_option("--seeds", run_opt.seeds, "seed list: N, a,b,c or lo..hi (default 1)");
    run->add_flag("--bipartite", run_opt.bipartite, "2-color the input, fail if not bipartite");
    run->add_flag("--keep-subsets", run_opt.keep_subsets, "retain subset communities");
    run->add_flag("--disjoint", run_opt.disjoint, "force one label per node (partition output)");
    run->add_option("--out", run_opt.out_dir, "output directory (default slpa_out)");
    run->add_option("--jobs", run_opt.jobs, "parallel seed pipelines (default 1)");

    EvalOptions eval_opt;
    auto* eval = app.add_subcommand("eval", "score covers against truth or the graph");
    eval->add_option("-i,--input", eval_opt.input, "edge list file")->required();
    eval->add_option("covers", eval_opt.covers, "detected cover file(s)")->required();
    eval->add_option("--truth", eval_opt.truth, "ground-truth cover file");
    eval->add_option("--attrs", eval_opt.attrs, "node attribute CSV");
    eval->add_option("--metrics", eval_opt.metrics, "csv list: nmi,omega,fscore,qov,hist")
        ->delimiter(',');
    eval->add_option("--hist", eval_opt.hist_edges, "histogram bin edges")->delimiter(',');
    eval->add_option("--out", eval_opt.out_dir, "also write metrics.csv (and hierarchies) here");
    eval->add_flag("--bipartite", eval_opt.bipartite, "bipartite input; qov per projected side");
    eval->add_flag("--hierarchy", eval_opt.hierarchy, "emit containment forest per cover");

    BenchOptions bench_opt;
    auto* bench = app.add_subcommand("bench", "time evolve on random graphs, fit time vs m");
    bench->add_option("--nodes", bench_opt.nodes, "node-count ladder")->delimiter(',');
    bench->add_option("--kbar", bench_opt.kbar, "mean degree (single or ladder)")->delimiter(',');
    bench->add_option("--edges", bench_opt.edges, "edge-count ladder (with single --kbar)")
        ->delimiter(',');
    bench->add_option("-T,--iterations", bench_opt.iterations, "iteration count (default 100)");
    bench->add_option("--seeds", bench_opt.seeds, "seeds per rung (default 1)");
    bench->add_option("--out", bench_opt.out_dir, "also write timing.csv here");

    SynthOptions synth_opt;
    auto* synth = app.add_subcommand("synth", "generate planted or homogeneous random instances");
    synth->add_option("--model", synth_opt.model, "planted | random (default planted)");
    synth->add_option("--n", synth_opt.n, "node count")->required();
    synth->add_option("--sizes", synth_opt.sizes, "community sizes")->delimiter(',');
    synth->add_option("--size-range", synth_opt.size_range, "min,max for sampled sizes")
        ->delimiter(',');
    synth->add_option("--size-exp", synth_opt.size_exponent, "size power-law exponent (default 1)");
    synth->add_option("--on", synth_opt.overlapping, "overlapping node count O_n");
    synth->add_option("--om", synth_opt.memberships, "memberships per overlapping node O_m");
    synth->add_option("--pin", synth_opt.p_in, "within-community edge probability");
    synth->add_option("--mu", synth_opt.mu, "target mixing fraction");
    synth->add_option("--kbar", synth_opt.kbar, "mean degree (random model)");
    synth->add_option("--seed", synth_opt.seed, "generator seed");
    synth->add_option("--out", synth_opt.out_dir, "output directory (default synth_out)");

    ProjectOptions project_opt;
    auto* project = app.add_subcommand("project", "one-mode projection of a bipartite graph");
    project->add_option("-i,--input", project_opt.input, "edge list file")->required();
    project->add_option("--side", project_opt.side, "side to project onto: 1 or 2")
        ->check(CLI::Range(1, 2));
    project->add_option("--out", project_opt.out_file, "output edge list (default stdout)");

    HierarchyOptions hierarchy_opt;
    auto* hierarchy = app.add_subcommand("hierarchy", "containment forest of a cover");
    hierarchy->add_option("-i,--input", hierarchy_opt.input, "edge list file")->required();
    hierarchy->add_option("cover", hierarchy_opt.cover, "cover file (keep subsets upstream)")
        ->required();
    hierarchy->add_option("--attrs", hierarchy_opt.attrs, "node attribute CSV");
    hierarchy->add_option("--out", hierarchy_opt.out_file, "output file (default stdout)");

    try {
        app.parse(argc, argv);
        if (run->parsed()) return cmd_run(run_opt);
        if (eval->parsed()) return cmd_eval(eval_opt);
        if (bench->parsed()) return cmd_bench(bench_opt);
        if (synth->parsed()) return cmd_synth(synth_opt);
        if (project->parsed()) return cmd_project(project_opt);
        if (hierarchy->parsed()) return cmd_hierarchy(hierarchy_opt);
        return exit_usage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    } catch (const slpa::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const slpa::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_data;
    } catch (const slpa::StructureError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_data;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
}
