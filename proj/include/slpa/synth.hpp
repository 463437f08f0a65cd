#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_set>
#include <vector>

#include "slpa/cover.hpp"
#include "slpa/errors.hpp"
#include "slpa/graph.hpp"
#include "slpa/random.hpp"

namespace slpa {

/// Planted-partition-with-overlap benchmark instance. O_n nodes belong to
/// O_m communities each, everyone else to exactly one; mu is the target
/// expected fraction of a node's edges leaving all of its communities.
struct PlantedConfig {
    std::size_t n = 0;
    std::vector<std::size_t> community_sizes;
    std::size_t overlapping_nodes = 0; // O_n
    std::size_t memberships = 2;       // O_m, per overlapping node
    double p_in = 0.3;
    double mu = 0.0;
    std::uint64_t seed = 1;
};

struct PlantedInstance {
    Graph graph;
    Cover cover;
};

namespace detail {

inline std::uint64_t pair_key(NodeId u, NodeId v, std::size_t n) {
    return static_cast<std::uint64_t>(std::min(u, v)) * n + std::max(u, v);
}

// Overlappers first pick O_m distinct communities with free capacity; the
// remaining slots are shuffled and handed to the single-membership nodes.
// Dead ends (fewer than O_m communities left with capacity) retry with
// fresh draws.
inline std::vector<std::vector<NodeId>> assign_memberships(const PlantedConfig& config,
                                                           Rng& rng) {
    const std::size_t k = config.community_sizes.size();
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<NodeId> order(config.n);
        std::iota(order.begin(), order.end(), 0);
        rng.shuffle(order);

        std::vector<std::size_t> capacity = config.community_sizes;
        std::vector<std::vector<NodeId>> communities(k);
        bool dead_end = false;

        for (std::size_t i = 0; i < config.overlapping_nodes && !dead_end; ++i) {
            NodeId node = order[i];
            std::vector<std::size_t> open;
            for (std::size_t c = 0; c < k; ++c)
                if (capacity[c] > 0) open.push_back(c);
            if (open.size() < config.memberships) {
                dead_end = true;
                break;
            }
            for (std::size_t picked = 0; picked < config.memberships; ++picked) {
                std::size_t j = static_cast<std::size_t>(rng.below(open.size()));
                std::size_t c = open[j];
                open.erase(open.begin() + static_cast<std::ptrdiff_t>(j));
                communities[c].push_back(node);
                --capacity[c];
            }
        }
        if (dead_end) continue;

        std::vector<std::size_t> slots;
        for (std::size_t c = 0; c < k; ++c)
            slots.insert(slots.end(), capacity[c], c);
        rng.shuffle(slots);
        for (std::size_t i = config.overlapping_nodes; i < config.n; ++i)
            communities[slots[i - config.overlapping_nodes]].push_back(order[i]);
        return communities;
    }
    throw ConfigError("could not place overlapping nodes; community sizes too tight for O_m");
}

} // namespace detail

/// Deterministic generator for a graph with a known planted cover. The
/// returned cover is exactly the planted assignment.
inline PlantedInstance planted_cover_graph(const PlantedConfig& config) {
    const std::size_t slots = std::accumulate(config.community_sizes.begin(),
                                              config.community_sizes.end(), std::size_t{0});
    const std::size_t expected =
        config.n + config.overlapping_nodes * (config.memberships - 1);
    if (config.overlapping_nodes > config.n)
        throw ConfigError("O_n exceeds the node count");
    if (config.overlapping_nodes > 0 && config.memberships < 2)
        throw ConfigError("overlapping nodes need O_m >= 2");
    if (config.overlapping_nodes > 0 && config.community_sizes.size() < config.memberships)
        throw ConfigError("need at least O_m communities");
    if (slots != expected)
        throw ConfigError("community sizes sum to " + std::to_string(slots) + ", expected n + O_n*(O_m-1) = " +
                          std::to_string(expected));
    if (config.p_in <= 0.0 || config.p_in > 1.0) throw ConfigError("p_in must be in (0, 1]");
    if (config.mu < 0.0 || config.mu >= 1.0) throw ConfigError("mu must be in [0, 1)");
    for (std::size_t s : config.community_sizes)
        if (s == 0) throw ConfigError("community sizes must be positive");
    if (config.mu > 0.0 && config.community_sizes.size() < 2)
        throw ConfigError("mu > 0 needs at least two communities");

    Rng rng(config.seed);
    auto communities = detail::assign_memberships(config, rng);

    std::vector<std::vector<std::size_t>> memberships(config.n);
    for (std::size_t c = 0; c < communities.size(); ++c)
        for (NodeId v : communities[c]) memberships[v].push_back(c);

    // One trial per co-member pair, even when a pair shares several
    // communities.
    std::unordered_set<std::uint64_t> tried, edges;
    std::vector<std::pair<NodeId, NodeId>> edge_list;
    for (const auto& community : communities) {
        for (std::size_t i = 0; i < community.size(); ++i) {
            for (std::size_t j = i + 1; j < community.size(); ++j) {
                std::uint64_t key = detail::pair_key(community[i], community[j], config.n);
                if (!tried.insert(key).second) continue;
                if (rng.chance(config.p_in)) {
                    edges.insert(key);
                    edge_list.emplace_back(community[i], community[j]);
                }
            }
        }
    }

    // Inter-community edges between uniform non-co-member pairs until the
    // aggregate outside fraction reaches mu.
    const std::size_t internal_edges = edge_list.size();
    const auto target_out = static_cast<std::size_t>(
        std::llround(config.mu / (1.0 - config.mu) * static_cast<double>(internal_edges)));
    auto share_community = [&](NodeId u, NodeId v) {
        const auto& a = memberships[u];
        const auto& b = memberships[v];
        return std::find_first_of(a.begin(), a.end(), b.begin(), b.end()) != a.end();
    };
    std::size_t placed = 0, attempts = 0;
    const std::size_t attempt_limit = 200 * target_out + 10000;
    while (placed < target_out) {
        if (++attempts > attempt_limit)
            throw ConfigError("could not place the requested inter-community edges");
        NodeId u = static_cast<NodeId>(rng.below(config.n));
        NodeId v = static_cast<NodeId>(rng.below(config.n));
        if (u == v || share_community(u, v)) continue;
        std::uint64_t key = detail::pair_key(u, v, config.n);
        if (!edges.insert(key).second) continue;
        edge_list.emplace_back(u, v);
        ++placed;
    }

    GraphBuilder builder;
    for (std::size_t v = 0; v < config.n; ++v) builder.add_node(std::to_string(v + 1));
    for (auto [u, v] : edge_list) builder.add_edge_ids(u, v);
    PlantedInstance instance;
    instance.graph = builder.build();

    std::vector<std::vector<NodeId>> cover_sets;
    cover_sets.reserve(communities.size());
    for (auto& c : communities) cover_sets.push_back(std::move(c));
    instance.cover = Cover(std::move(cover_sets));
    return instance;
}

/// Uniform random simple graph with m = round(n * kbar / 2) distinct edges.
inline Graph homogeneous_random_graph(std::size_t n, double mean_degree, std::uint64_t seed) {
    if (n == 0) throw ConfigError("graph needs at least one node");
    if (mean_degree >= static_cast<double>(n) - 1.0 + 1e-12 && n > 1)
        throw ConfigError("target mean degree must be below n-1");
    const auto m = static_cast<std::size_t>(std::llround(static_cast<double>(n) * mean_degree / 2.0));
    const std::size_t max_edges = n * (n - 1) / 2;
    if (m > max_edges) throw ConfigError("requested edge count exceeds n*(n-1)/2");

    Rng rng(seed);
    GraphBuilder builder;
    for (std::size_t v = 0; v < n; ++v) builder.add_node(std::to_string(v + 1));
    std::unordered_set<std::uint64_t> edges;
    edges.reserve(m * 2);
    while (edges.size() < m) {
        NodeId u = static_cast<NodeId>(rng.below(n));
        NodeId v = static_cast<NodeId>(rng.below(n));
        if (u == v) continue;
        if (edges.insert(detail::pair_key(u, v, n)).second) builder.add_edge_ids(u, v);
    }
    return builder.build();
}

/// Community sizes drawn from a truncated power law p(s) ~ s^-exponent on
/// [min_size, max_size], adjusted so the sizes sum exactly to total_slots.
inline std::vector<std::size_t> sample_community_sizes(std::size_t total_slots,
                                                       std::size_t min_size,
                                                       std::size_t max_size, double exponent,
                                                       Rng& rng) {
    if (min_size == 0 || min_size > max_size) throw ConfigError("invalid size range");
    if (total_slots < min_size) throw ConfigError("total below the minimum community size");

    std::vector<double> cumulative;
    cumulative.reserve(max_size - min_size + 1);
    double acc = 0.0;
    for (std::size_t s = min_size; s <= max_size; ++s) {
        acc += std::pow(static_cast<double>(s), -exponent);
        cumulative.push_back(acc);
    }

    std::vector<std::size_t> sizes;
    std::size_t remaining = total_slots;
    while (remaining >= min_size) {
        double r = rng.next_double() * cumulative.back();
        auto it = std::lower_bound(cumulative.begin(), cumulative.end(), r);
        std::size_t size = min_size + static_cast<std::size_t>(it - cumulative.begin());
        size = std::min(size, remaining);
        if (remaining - size != 0 && remaining - size < min_size)
            size = remaining; // avoid an unfillable tail
        sizes.push_back(size);
        remaining -= size;
    }
    return sizes;
}

} // namespace slpa
