#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "slpa/cover.hpp"
#include "slpa/errors.hpp"
#include "slpa/graph.hpp"

namespace slpa {

/// Exact rational on int64, always reduced with positive denominator.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Fraction() = default;
    Fraction(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
        if (den == 0) throw ConfigError("fraction with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool is_zero() const { return num == 0; }
    double as_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend Fraction operator+(const Fraction& a, const Fraction& b) {
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    friend Fraction operator*(const Fraction& a, const Fraction& b) {
        return {a.num * b.num, a.den * b.den};
    }
    friend Fraction operator/(const Fraction& a, const Fraction& b) {
        if (b.num == 0) throw ConfigError("fraction division by zero");
        return {a.num * b.den, a.den * b.num};
    }
    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num == b.num && a.den == b.den;
    }
};

/// Overlapping-node detection treated as binary classification: a node is
/// overlapping iff it belongs to more than one community.
struct OverlapConfusion {
    std::int64_t true_positives = 0;
    std::int64_t false_positives = 0;
    std::int64_t false_negatives = 0;

    std::int64_t detected_overlapping() const { return true_positives + false_positives; }
    std::int64_t true_overlapping() const { return true_positives + false_negatives; }

    // precision = TP / O_n^d, recall = TP / O_n; 0 on an empty denominator.
    Fraction precision() const {
        return detected_overlapping() == 0 ? Fraction(0)
                                           : Fraction(true_positives, detected_overlapping());
    }
    Fraction recall() const {
        return true_overlapping() == 0 ? Fraction(0)
                                       : Fraction(true_positives, true_overlapping());
    }
    // F = 2 p r / (p + r), with the 0/0 case defined as the worst score 0.
    Fraction f_score() const {
        Fraction p = precision(), r = recall();
        Fraction sum = p + r;
        if (sum.is_zero()) return Fraction(0);
        return Fraction(2) * p * r / sum;
    }
};

inline OverlapConfusion overlap_fscore(const Cover& detected, const Cover& truth, std::size_t n) {
    auto detected_counts = detected.membership_counts(n);
    auto truth_counts = truth.membership_counts(n);
    OverlapConfusion confusion;
    for (std::size_t v = 0; v < n; ++v) {
        bool d = detected_counts[v] > 1;
        bool t = truth_counts[v] > 1;
        if (d && t)
            ++confusion.true_positives;
        else if (d && !t)
            ++confusion.false_positives;
        else if (!d && t)
            ++confusion.false_negatives;
    }
    return confusion;
}

namespace detail {

// Pair co-membership multiplicities, keyed by the (u < v) pair.
inline std::unordered_map<std::uint64_t, std::uint32_t> pair_multiplicities(const Cover& cover,
                                                                            std::size_t n) {
    std::unordered_map<std::uint64_t, std::uint32_t> mult;
    for (const auto& c : cover)
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                ++mult[static_cast<std::uint64_t>(c[i]) * n + c[j]];
    return mult;
}

} // namespace detail

/// Omega index: chance-corrected agreement over the number of communities
/// each unordered node pair shares, multiplicity 0 included. Returns nothing
/// when the expected agreement is 1 (the correction is undefined there).
inline std::optional<double> omega_index(const Cover& a, const Cover& b, std::size_t n) {
    if (n < 2) throw ConfigError("omega_index needs at least two nodes");
    const std::uint64_t total_pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    const double pairs = static_cast<double>(total_pairs);

    auto ma = detail::pair_multiplicities(a, n);
    auto mb = detail::pair_multiplicities(b, n);

    // Pairs absent from both maps agree at multiplicity 0.
    std::uint64_t agree = 0;
    std::uint64_t seen_in_either = ma.size();
    for (const auto& [key, mult] : mb) {
        auto it = ma.find(key);
        if (it == ma.end())
            ++seen_in_either;
        else if (it->second == mult)
            ++agree;
    }
    double observed =
        static_cast<double>(total_pairs - seen_in_either + agree) / pairs;

    std::unordered_map<std::uint32_t, std::uint64_t> ta, tb; // multiplicity -> #pairs
    for (const auto& [key, mult] : ma) ++ta[mult];
    for (const auto& [key, mult] : mb) ++tb[mult];
    ta[0] = total_pairs - ma.size();
    tb[0] = total_pairs - mb.size();

    double expected = 0.0;
    for (const auto& [mult, count] : ta) {
        auto it = tb.find(mult);
        if (it != tb.end())
            expected += static_cast<double>(count) * static_cast<double>(it->second);
    }
    expected /= pairs * pairs;

    if (std::abs(1.0 - expected) < 1e-15) return std::nullopt;
    return (observed - expected) / (1.0 - expected);
}

namespace detail {

// -(c/n) ln(c/n) over integer counts; identical counts give bit-identical
// terms, which keeps self-comparison exactly at zero conditional entropy.
inline double count_entropy(std::int64_t c, std::int64_t n) {
    if (c <= 0) return 0.0;
    double p = static_cast<double>(c) / static_cast<double>(n);
    return -p * std::log(p);
}

} // namespace detail

/// Extended NMI over covers, following the per-community binary-membership
/// construction: H(X_k|Y) is the best conditional entropy over communities
/// of Y, a pairing being admissible only when joint agreement entropy
/// h(p11)+h(p00) is no smaller than disagreement entropy h(p10)+h(p01);
/// inadmissible rows fall back to H(X_k). The per-community values are
/// normalized by H(X_k) and averaged, and
/// NMI = 1 - (N(X|Y) + N(Y|X)) / 2.
inline double extended_nmi(const Cover& x, const Cover& y, std::size_t n) {
    if (x.empty() || y.empty()) throw ConfigError("extended_nmi on empty cover");
    const std::int64_t total = static_cast<std::int64_t>(n);

    auto membership_index = [n](const Cover& cover) {
        std::vector<std::vector<std::size_t>> index(n);
        for (std::size_t l = 0; l < cover.size(); ++l)
            for (NodeId v : cover[l]) index[v].push_back(l);
        return index;
    };

    auto normalized_conditional = [&](const Cover& from, const Cover& to,
                                      const std::vector<std::vector<std::size_t>>& to_index) {
        double sum = 0.0;
        std::vector<std::int64_t> inter(to.size(), 0);
        for (std::size_t k = 0; k < from.size(); ++k) {
            std::int64_t a = static_cast<std::int64_t>(from[k].size());
            double h_from = detail::count_entropy(a, total) + detail::count_entropy(total - a, total);
            if (h_from <= 0.0) continue; // a constant variable carries no information
            std::fill(inter.begin(), inter.end(), 0);
            for (NodeId v : from[k])
                for (std::size_t l : to_index[v]) ++inter[l];
            double best = h_from; // fallback when no pairing is admissible
            for (std::size_t l = 0; l < to.size(); ++l) {
                std::int64_t b = static_cast<std::int64_t>(to[l].size());
                std::int64_t i = inter[l];
                double h11 = detail::count_entropy(i, total);
                double h10 = detail::count_entropy(a - i, total);
                double h01 = detail::count_entropy(b - i, total);
                double h00 = detail::count_entropy(total - a - b + i, total);
                if (h11 + h00 < h10 + h01) continue; // unmatchable pairing
                double h_to = detail::count_entropy(b, total) + detail::count_entropy(total - b, total);
                best = std::min(best, h11 + h10 + h01 + h00 - h_to);
            }
            sum += best / h_from;
        }
        return sum / static_cast<double>(from.size());
    };

    double nxy = normalized_conditional(x, y, membership_index(y));
    double nyx = normalized_conditional(y, x, membership_index(x));
    return 1.0 - 0.5 * (nxy + nyx);
}

struct QovConfig {
    // Steepness of the logistic belonging transform
    // f(x) = 1 / (1 + exp(-(2 p x - p))); f(0) ~ 0, f(1/2) = 1/2, f(1) ~ 1.
    double steepness = 30.0;
};

/// Overlapping modularity with uniform belonging coefficients
/// alpha(i,c) = 1 / |memberships(i)|. Edges are counted as directed arc
/// pairs and the whole sum is normalized by the arc count 2m. Returns
/// nothing for an edgeless graph.
inline std::optional<double> overlapping_modularity(const Graph& graph, const Cover& cover,
                                                    const QovConfig& config = {}) {
    const std::size_t n = graph.node_count();
    const double m = static_cast<double>(graph.edge_count());
    if (graph.edge_count() == 0) return std::nullopt;

    auto memberships = cover.membership_counts(n);
    for (std::size_t v = 0; v < n; ++v)
        if (memberships[v] == 0)
            throw ConfigError("overlapping_modularity requires the cover to cover every node");

    const double p = config.steepness;
    auto logistic = [p](double x) { return 1.0 / (1.0 + std::exp(-(2.0 * p * x - p))); };
    const double f0 = logistic(0.0);
    const double arcs = 2.0 * m;

    // Split f(alpha) = f0 + g with g supported on members only, so each
    // community costs O(|c| + internal edges) instead of O(n^2).
    std::vector<double> g_value(n, 0.0);
    std::vector<std::uint32_t> member_epoch(n, 0);
    std::uint32_t epoch = 0;

    double degree_total = 0.0;
    for (std::size_t v = 0; v < n; ++v) degree_total += static_cast<double>(graph.degree(v));

    double q = 0.0;
    for (const auto& community : cover) {
        ++epoch;
        double g_sum = 0.0, g_degree_sum = 0.0;
        for (NodeId v : community) {
            double g = logistic(1.0 / static_cast<double>(memberships[v])) - f0;
            g_value[v] = g;
            member_epoch[v] = epoch;
            g_sum += g;
            g_degree_sum += g * static_cast<double>(graph.degree(v));
        }
        double internal = 0.0; // sum over undirected member-member edges of g_u g_v
        for (NodeId u : community)
            for (NodeId v : graph.neighbors(u))
                if (u < v && member_epoch[v] == epoch) internal += g_value[u] * g_value[v];

        double edge_term = f0 * f0 * arcs + 2.0 * f0 * g_degree_sum + 2.0 * internal;
        double s_c = f0 * static_cast<double>(n) + g_sum;        // sum_j f(alpha_jc)
        double t_c = f0 * degree_total + g_degree_sum;           // sum_i f(alpha_ic) k_i
        double null_term = (s_c / static_cast<double>(n)) * t_c;
        q += edge_term - null_term * null_term / arcs;
    }
    return q / arcs;
}

/// Per-algorithm ranks over benchmark settings with weights summing to 1.
struct RankTable {
    std::vector<std::string> algorithms;
    std::vector<std::vector<int>> ranks; // ranks[i][j]: rank of algorithm i in setting j
    std::vector<double> weights;
};

/// Weighted average rank per algorithm; lower is better.
inline std::vector<double> ranking_score(const RankTable& table) {
    if (table.ranks.empty()) throw ConfigError("ranking_score on empty table");
    const std::size_t settings = table.ranks.front().size();
    if (table.weights.size() != settings)
        throw ConfigError("weight count must equal settings count");
    double weight_sum = std::accumulate(table.weights.begin(), table.weights.end(), 0.0);
    if (std::abs(weight_sum - 1.0) > 1e-9)
        throw ConfigError("ranking weights must sum to 1");
    std::vector<double> scores;
    scores.reserve(table.ranks.size());
    for (const auto& row : table.ranks) {
        if (row.size() != settings) throw ConfigError("ragged rank table");
        double rs = 0.0;
        for (std::size_t j = 0; j < settings; ++j) {
            if (row[j] < 1) throw ConfigError("ranks must be positive");
            rs += table.weights[j] * row[j];
        }
        scores.push_back(rs);
    }
    return scores;
}

/// Ascending RS order; index list into the rank table's algorithms.
inline std::vector<std::size_t> ranking_order(const std::vector<double>& scores) {
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
    return order;
}

/// Community-size histogram. Bins are right-open except the last, which is
/// closed; sizes outside the edge range land in underflow/overflow so the
/// total always equals the community count.
struct SizeHistogram {
    std::vector<std::size_t> edges;
    std::vector<std::size_t> counts;
    std::size_t underflow = 0;
    std::size_t overflow = 0;
};

inline SizeHistogram size_histogram(const Cover& cover, const std::vector<std::size_t>& edges) {
    if (edges.size() < 2) throw ConfigError("histogram needs at least two bin edges");
    if (!std::is_sorted(edges.begin(), edges.end()) ||
        std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw ConfigError("histogram bin edges must be strictly increasing");

    SizeHistogram hist;
    hist.edges = edges;
    hist.counts.assign(edges.size() - 1, 0);
    for (const auto& community : cover) {
        std::size_t size = community.size();
        if (size < edges.front()) {
            ++hist.underflow;
        } else if (size > edges.back()) {
            ++hist.overflow;
        } else if (size == edges.back()) {
            ++hist.counts.back();
        } else {
            auto it = std::upper_bound(edges.begin(), edges.end(), size);
            ++hist.counts[static_cast<std::size_t>(it - edges.begin()) - 1];
        }
    }
    return hist;
}

} // namespace slpa
