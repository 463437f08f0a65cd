// Independent brute-force reference implementations used to check the
// library's optimized paths. Everything here favors directness over speed.
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "slpa/cover.hpp"
#include "slpa/graph.hpp"
#include "slpa/slpa.hpp"

namespace oracle {

// Projection by definition: an edge iff the two same-side nodes share at
// least one neighbor.
inline std::set<std::pair<std::string, std::string>> brute_projection(const slpa::Graph& g,
                                                                      slpa::Side side) {
    std::set<std::pair<std::string, std::string>> edges;
    auto members = g.nodes_of_side(side);
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            bool shared = false;
            for (slpa::NodeId w : g.neighbors(members[i]))
                if (g.has_edge(w, members[j])) shared = true;
            if (shared) {
                auto a = g.name(members[i]), b = g.name(members[j]);
                edges.insert({std::min(a, b), std::max(a, b)});
            }
        }
    }
    return edges;
}

inline std::set<std::pair<std::string, std::string>> edge_set(const slpa::Graph& g) {
    std::set<std::pair<std::string, std::string>> edges;
    for (slpa::NodeId u = 0; u < g.node_count(); ++u)
        for (slpa::NodeId v : g.neighbors(u))
            if (u < v) {
                auto a = g.name(u), b = g.name(v);
                edges.insert({std::min(a, b), std::max(a, b)});
            }
    return edges;
}

// Per-label BFS over the induced subgraph, by definition.
inline std::set<std::vector<slpa::NodeId>> group_oracle(
    const slpa::Graph& g, const std::vector<std::vector<slpa::NodeId>>& node_labels) {
    std::set<slpa::LabelId> labels;
    for (const auto& ls : node_labels) labels.insert(ls.begin(), ls.end());
    std::set<std::vector<slpa::NodeId>> communities;
    for (slpa::LabelId label : labels) {
        std::set<slpa::NodeId> holders;
        for (slpa::NodeId v = 0; v < g.node_count(); ++v)
            if (std::count(node_labels[v].begin(), node_labels[v].end(), label))
                holders.insert(v);
        std::set<slpa::NodeId> unvisited = holders;
        while (!unvisited.empty()) {
            std::vector<slpa::NodeId> frontier{*unvisited.begin()};
            std::vector<slpa::NodeId> component;
            unvisited.erase(unvisited.begin());
            while (!frontier.empty()) {
                slpa::NodeId u = frontier.back();
                frontier.pop_back();
                component.push_back(u);
                for (slpa::NodeId w : g.neighbors(u)) {
                    if (holders.count(w) && unvisited.count(w)) {
                        unvisited.erase(w);
                        frontier.push_back(w);
                    }
                }
            }
            std::sort(component.begin(), component.end());
            communities.insert(component);
        }
    }
    return communities;
}

// Pair co-membership multiplicity, counted pair by pair.
inline int pair_multiplicity(const slpa::Cover& cover, slpa::NodeId u, slpa::NodeId v) {
    int count = 0;
    for (const auto& c : cover) {
        bool has_u = std::binary_search(c.begin(), c.end(), u);
        bool has_v = std::binary_search(c.begin(), c.end(), v);
        if (has_u && has_v) ++count;
    }
    return count;
}

struct OmegaOracle {
    bool defined = false;
    double value = 0.0;
};

inline OmegaOracle omega_oracle(const slpa::Cover& a, const slpa::Cover& b, std::size_t n) {
    std::map<int, long> ta, tb;
    long agree = 0, pairs = 0;
    for (slpa::NodeId u = 0; u < n; ++u) {
        for (slpa::NodeId v = u + 1; v < n; ++v) {
            int ja = pair_multiplicity(a, u, v);
            int jb = pair_multiplicity(b, u, v);
            ++ta[ja];
            ++tb[jb];
            if (ja == jb) ++agree;
            ++pairs;
        }
    }
    double observed = double(agree) / double(pairs);
    double expected = 0.0;
    for (const auto& [j, count] : ta)
        if (tb.count(j)) expected += double(count) * double(tb.at(j));
    expected /= double(pairs) * double(pairs);
    if (std::abs(1.0 - expected) < 1e-15) return {false, 0.0};
    return {true, (observed - expected) / (1.0 - expected)};
}

// Extended NMI straight from the entropy formulas over node sets.
inline double nmi_oracle(const slpa::Cover& xc, const slpa::Cover& yc, std::size_t n) {
    auto h = [](double p) { return p > 0.0 ? -p * std::log(p) : 0.0; };
    auto as_sets = [](const slpa::Cover& c) {
        std::vector<std::set<slpa::NodeId>> sets;
        for (const auto& community : c) sets.emplace_back(community.begin(), community.end());
        return sets;
    };
    auto xs = as_sets(xc), ys = as_sets(yc);
    auto norm_cond = [&](const std::vector<std::set<slpa::NodeId>>& xset,
                         const std::vector<std::set<slpa::NodeId>>& yset) {
        double sum = 0.0;
        for (const auto& xk : xset) {
            double px = double(xk.size()) / double(n);
            double hx = h(px) + h(1.0 - px);
            if (hx <= 0.0) continue;
            double best = hx;
            for (const auto& yl : yset) {
                std::size_t inter = 0;
                for (auto v : xk) inter += yl.count(v);
                double p11 = double(inter) / double(n);
                double p10 = double(xk.size() - inter) / double(n);
                double p01 = double(yl.size() - inter) / double(n);
                double p00 = double(n - xk.size() - yl.size() + inter) / double(n);
                if (h(p11) + h(p00) < h(p10) + h(p01)) continue;
                double py = double(yl.size()) / double(n);
                double hy = h(py) + h(1.0 - py);
                double cond = h(p11) + h(p10) + h(p01) + h(p00) - hy;
                best = std::min(best, cond);
            }
            sum += best / hx;
        }
        return sum / double(xset.size());
    };
    return 1.0 - 0.5 * (norm_cond(xs, ys) + norm_cond(ys, xs));
}

// Nicosia overlapping modularity as the literal O(|C| n^2) double sum.
inline double qov_naive(const slpa::Graph& g, const slpa::Cover& cover, double steepness = 30.0) {
    const std::size_t n = g.node_count();
    const double arcs = 2.0 * double(g.edge_count());
    std::vector<int> memberships(n, 0);
    for (const auto& c : cover)
        for (auto v : c) ++memberships[v];
    auto f = [steepness](double x) {
        return 1.0 / (1.0 + std::exp(-(2.0 * steepness * x - steepness)));
    };
    double q = 0.0;
    for (const auto& c : cover) {
        auto alpha = [&](slpa::NodeId i) {
            return std::binary_search(c.begin(), c.end(), i) ? 1.0 / memberships[i] : 0.0;
        };
        double edge_term = 0.0;
        for (slpa::NodeId i = 0; i < n; ++i)
            for (slpa::NodeId j : g.neighbors(i)) edge_term += f(alpha(i)) * f(alpha(j));
        double strength = 0.0;
        for (slpa::NodeId i = 0; i < n; ++i) {
            double beta = 0.0;
            for (slpa::NodeId j = 0; j < n; ++j) beta += f(alpha(i)) * f(alpha(j));
            beta /= double(n);
            strength += beta * double(g.degree(i));
        }
        q += edge_term - strength * strength / arcs;
    }
    return q / arcs;
}

// Mean over nodes of the fraction of incident edges leaving all of the
// node's communities; degree-0 nodes are skipped.
inline double measured_mixing(const slpa::Graph& g, const slpa::Cover& cover) {
    const std::size_t n = g.node_count();
    std::vector<std::set<std::size_t>> memberships(n);
    for (std::size_t c = 0; c < cover.size(); ++c)
        for (auto v : cover[c]) memberships[v].insert(c);
    double sum = 0.0;
    std::size_t counted = 0;
    for (slpa::NodeId v = 0; v < n; ++v) {
        if (g.degree(v) == 0) continue;
        std::size_t outside = 0;
        for (slpa::NodeId w : g.neighbors(v)) {
            bool shares = false;
            for (auto c : memberships[v])
                if (memberships[w].count(c)) shares = true;
            if (!shares) ++outside;
        }
        sum += double(outside) / double(g.degree(v));
        ++counted;
    }
    return counted == 0 ? 0.0 : sum / double(counted);
}

} // namespace oracle
