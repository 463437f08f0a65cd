#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <new>
#include <string>
#include <vector>

#include "slpa/errors.hpp"
#include "slpa/graph.hpp"
#include "slpa/slpa.hpp"
#include "slpa/synth.hpp"

namespace slpa {

struct BenchPoint {
    std::size_t n = 0;
    std::size_t m = 0;
    std::uint64_t seed = 0;
    double seconds = 0.0;
    bool failed = false;
    std::string error;
};

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

inline LinearFit fit_linear(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw ConfigError("fit needs >= 2 points");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    if (std::abs(denom) < 1e-30) throw ConfigError("degenerate x values in fit");
    LinearFit fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss_res = 0, ss_tot = 0;
    const double mean_y = sy / n;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double p = fit.intercept + fit.slope * x[i];
        ss_res += (y[i] - p) * (y[i] - p);
        ss_tot += (y[i] - mean_y) * (y[i] - mean_y);
    }
    fit.r_squared = ss_tot <= 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
    return fit;
}

/// Times evolve only (generation and IO excluded) on one generated graph.
inline double time_evolve(const Graph& graph, std::uint32_t iterations, std::uint64_t seed) {
    RunConfig config{iterations, seed};
    auto start = std::chrono::steady_clock::now();
    Memories memories = evolve(graph, config);
    auto stop = std::chrono::steady_clock::now();
    // keep the result alive so the timed work cannot be elided
    volatile std::uint64_t sink = memories.empty() ? 0 : memories.front().total();
    (void)sink;
    return std::chrono::duration<double>(stop - start).count();
}

/// Runs the ladder: one homogeneous random graph per rung, evolve timed per
/// seed. An out-of-memory rung is recorded as failed and the run continues.
inline std::vector<BenchPoint> bench_evolve(const std::vector<std::pair<std::size_t, double>>& rungs,
                                            std::uint32_t iterations,
                                            const std::vector<std::uint64_t>& seeds) {
    if (seeds.empty()) throw ConfigError("bench needs at least one seed");
    std::vector<BenchPoint> points;
    for (std::size_t rung = 0; rung < rungs.size(); ++rung) {
        auto [n, kbar] = rungs[rung];
        try {
            Graph graph = homogeneous_random_graph(n, kbar, /*seed=*/1000 + rung);
            for (std::uint64_t seed : seeds) {
                BenchPoint point;
                point.n = graph.node_count();
                point.m = graph.edge_count();
                point.seed = seed;
                point.seconds = time_evolve(graph, iterations, seed);
                points.push_back(point);
            }
        } catch (const std::bad_alloc&) {
            BenchPoint point;
            point.n = n;
            point.m = static_cast<std::size_t>(static_cast<double>(n) * kbar / 2.0);
            point.failed = true;
            point.error = "out of memory";
            points.push_back(point);
        }
    }
    return points;
}

/// Median evolve seconds per distinct m over the successful points.
inline void median_per_rung(const std::vector<BenchPoint>& points, std::vector<double>& ms,
                            std::vector<double>& seconds) {
    ms.clear();
    seconds.clear();
    std::vector<std::pair<std::size_t, std::vector<double>>> grouped;
    for (const auto& point : points) {
        if (point.failed) continue;
        auto it = std::find_if(grouped.begin(), grouped.end(),
                               [&](const auto& g) { return g.first == point.m; });
        if (it == grouped.end()) {
            grouped.emplace_back(point.m, std::vector<double>{point.seconds});
        } else {
            it->second.push_back(point.seconds);
        }
    }
    for (auto& [m, times] : grouped) {
        std::sort(times.begin(), times.end());
        ms.push_back(static_cast<double>(m));
        seconds.push_back(times[times.size() / 2]);
    }
}

} // namespace slpa
