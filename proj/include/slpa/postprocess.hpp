#pragma once

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "slpa/attributes.hpp"
#include "slpa/cover.hpp"
#include "slpa/errors.hpp"
#include "slpa/graph.hpp"
#include "slpa/slpa.hpp"

namespace slpa {

/// Post-processing cutoff. Labels seen with probability below r are deleted;
/// r >= 0.5 (or the explicit disjoint flag) forces exactly one label per node.
struct Threshold {
    explicit Threshold(double r, bool disjoint = false) : value(r), disjoint(disjoint) {
        if (r < 0.0) throw ConfigError("threshold r must be non-negative");
        if (r > 0.5 && !disjoint)
            throw ConfigError("threshold r > 0.5 requires disjoint mode");
    }
    double value;
    bool disjoint;

    bool single_label() const { return disjoint || value >= 0.5; }
};

/// Normalizes a memory into label probabilities (sorted by label id).
inline std::vector<std::pair<LabelId, double>> membership_distribution(const LabelMemory& memory) {
    if (memory.total() == 0) throw ConfigError("membership_distribution on empty memory");
    std::vector<std::pair<LabelId, double>> dist;
    dist.reserve(memory.distinct_labels());
    const double total = static_cast<double>(memory.total());
    for (const auto& [label, count] : memory.entries())
        dist.emplace_back(label, static_cast<double>(count) / total);
    std::sort(dist.begin(), dist.end());
    return dist;
}

namespace detail {

// Highest count, ties to the smallest label id.
inline LabelId dominant_label(const LabelMemory& memory) {
    LabelId best_label = 0;
    std::uint64_t best_count = 0;
    for (const auto& [label, count] : memory.entries()) {
        if (count > best_count || (count == best_count && label < best_label)) {
            best_label = label;
            best_count = count;
        }
    }
    return best_label;
}

} // namespace detail

/// Deletes labels whose probability falls strictly below the threshold.
/// A boundary probability equal to r survives. Every node keeps at least
/// one label: if all fall below r (or in single-label mode), the highest
/// probability label wins, ties to the smallest label id.
inline std::vector<std::vector<LabelId>> apply_threshold(const Memories& memories,
                                                         const Threshold& threshold) {
    std::vector<std::vector<LabelId>> kept(memories.size());
    for (std::size_t v = 0; v < memories.size(); ++v) {
        const LabelMemory& memory = memories[v];
        if (memory.total() == 0) throw ConfigError("apply_threshold on empty memory");
        if (threshold.single_label()) {
            kept[v] = {detail::dominant_label(memory)};
            continue;
        }
        const double cutoff =
            threshold.value * static_cast<double>(memory.total()) - 1e-9;
        for (const auto& [label, count] : memory.entries())
            if (static_cast<double>(count) >= cutoff) kept[v].push_back(label);
        if (kept[v].empty()) kept[v] = {detail::dominant_label(memory)};
        std::sort(kept[v].begin(), kept[v].end());
    }
    return kept;
}

struct GroupedCover {
    Cover cover;
    // Smallest label id that contributed to each community (dedup can merge
    // equal node sets arising from different labels).
    std::vector<LabelId> labels;
};

/// For each label, every connected component of the subgraph induced by the
/// nodes carrying that label becomes a community. Equal node sets are merged.
inline GroupedCover group_connected(const Graph& graph,
                                    const std::vector<std::vector<LabelId>>& node_labels) {
    const std::size_t n = graph.node_count();
    if (node_labels.size() != n)
        throw ConfigError("group_connected: one label set per node required");
    std::map<LabelId, std::vector<NodeId>> holders;
    for (NodeId v = 0; v < n; ++v) {
        if (node_labels[v].empty()) throw ConfigError("group_connected: node without labels");
        for (LabelId l : node_labels[v]) holders[l].push_back(v);
    }

    std::vector<std::uint32_t> member_epoch(n, 0), visited_epoch(n, 0);
    std::uint32_t epoch = 0;
    std::vector<NodeId> stack;

    std::map<std::vector<NodeId>, LabelId> dedup; // first (smallest) label wins
    std::vector<std::vector<NodeId>> order;       // communities in discovery order

    for (const auto& [label, members] : holders) {
        ++epoch;
        for (NodeId v : members) member_epoch[v] = epoch;
        for (NodeId v : members) {
            if (visited_epoch[v] == epoch) continue;
            std::vector<NodeId> component;
            visited_epoch[v] = epoch;
            stack.assign(1, v);
            while (!stack.empty()) {
                NodeId u = stack.back();
                stack.pop_back();
                component.push_back(u);
                for (NodeId w : graph.neighbors(u)) {
                    if (member_epoch[w] == epoch && visited_epoch[w] != epoch) {
                        visited_epoch[w] = epoch;
                        stack.push_back(w);
                    }
                }
            }
            std::sort(component.begin(), component.end());
            if (dedup.emplace(component, label).second) order.push_back(std::move(component));
        }
    }

    GroupedCover result;
    result.labels.reserve(order.size());
    for (const auto& c : order) result.labels.push_back(dedup.at(c));
    result.cover = Cover(std::move(order));
    return result;
}

/// Removes every community that is a subset of another; the result is an
/// antichain under set inclusion.
inline Cover prune_subsets(const Cover& cover) {
    const auto& cs = cover.communities();
    std::vector<std::vector<std::size_t>> containing; // node -> community indices
    std::size_t max_node = 0;
    for (const auto& c : cs)
        for (NodeId v : c) max_node = std::max<std::size_t>(max_node, v);
    containing.resize(max_node + 1);
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (NodeId v : cs[i]) containing[v].push_back(i);

    std::vector<std::vector<NodeId>> kept;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        bool subset = false;
        for (std::size_t j : containing[cs[i].front()]) {
            if (j == i || cs[j].size() <= cs[i].size()) continue;
            if (std::includes(cs[j].begin(), cs[j].end(), cs[i].begin(), cs[i].end())) {
                subset = true;
                break;
            }
        }
        if (!subset) kept.push_back(cs[i]);
    }
    return Cover(std::move(kept));
}

/// Hierarchy over a cover: each community's parent is a minimal strict
/// superset among the cover members.
struct ContainmentForest {
    struct Entry {
        std::optional<std::size_t> parent;
        std::vector<std::size_t> children;
        // Set when several minimal strict supersets existed; the chosen
        // parent is the largest by size, ties to the lexicographically
        // smallest node list.
        std::vector<std::size_t> ambiguous_candidates;
    };
    std::vector<Entry> entries; // parallel to the cover
    std::vector<std::size_t> roots;
};

inline ContainmentForest containment_forest(const Cover& cover) {
    const auto& cs = cover.communities();
    const std::size_t k = cs.size();
    auto strict_subset = [&](std::size_t a, std::size_t b) {
        return cs[a].size() < cs[b].size() &&
               std::includes(cs[b].begin(), cs[b].end(), cs[a].begin(), cs[a].end());
    };

    ContainmentForest forest;
    forest.entries.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<std::size_t> supersets;
        for (std::size_t j = 0; j < k; ++j)
            if (j != i && strict_subset(i, j)) supersets.push_back(j);
        std::vector<std::size_t> minimal;
        for (std::size_t a : supersets) {
            bool has_smaller = false;
            for (std::size_t b : supersets)
                if (b != a && strict_subset(b, a)) {
                    has_smaller = true;
                    break;
                }
            if (!has_smaller) minimal.push_back(a);
        }
        if (minimal.empty()) {
            forest.roots.push_back(i);
            continue;
        }
        std::size_t parent = minimal.front();
        for (std::size_t c : minimal) {
            if (cs[c].size() > cs[parent].size() ||
                (cs[c].size() == cs[parent].size() && cs[c] < cs[parent]))
                parent = c;
        }
        forest.entries[i].parent = parent;
        forest.entries[parent].children.push_back(i);
        if (minimal.size() > 1) forest.entries[i].ambiguous_candidates = std::move(minimal);
    }
    return forest;
}

/// Matching score: the largest fraction of members sharing one value of one
/// attribute. Missing values never match. Ties go to table order.
inline std::pair<std::string, double> attribute_match(std::span<const NodeId> community,
                                                      const AttributeTable& table) {
    if (community.empty()) throw ConfigError("attribute_match on empty community");
    if (table.attribute_count() == 0) throw ConfigError("attribute_match needs >= 1 attribute");
    std::size_t best_attr = 0;
    double best_score = -1.0;
    for (std::size_t a = 0; a < table.attribute_count(); ++a) {
        std::unordered_map<std::string, std::size_t> tally;
        std::size_t top = 0;
        for (NodeId v : community) {
            const auto& value = table.value(v, a);
            if (value) top = std::max(top, ++tally[*value]);
        }
        double score = static_cast<double>(top) / static_cast<double>(community.size());
        if (score > best_score) {
            best_score = score;
            best_attr = a;
        }
    }
    return {table.attribute_names()[best_attr], best_score};
}

/// Indented text tree, one community per line. Names mirror the full
/// hierarchy path: child 25 of root 1 prints as C1-25.
inline void write_hierarchy(const ContainmentForest& forest, const Cover& cover,
                            const AttributeTable* attributes, std::ostream& out) {
    const auto& cs = cover.communities();
    auto sorted_by_size = [&](std::vector<std::size_t> ids) {
        std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
            if (cs[a].size() != cs[b].size()) return cs[a].size() > cs[b].size();
            return a < b;
        });
        return ids;
    };

    auto emit = [&](auto&& self, std::size_t id, const std::string& prefix,
                    std::size_t depth) -> void {
        std::string name = prefix.empty() ? "C" + std::to_string(id + 1)
                                          : prefix + "-" + std::to_string(id + 1);
        out << std::string(2 * depth, ' ') << name << " size=" << cs[id].size();
        if (attributes) {
            auto [attr, score] = attribute_match(cs[id], *attributes);
            out << " attr=" << attr << " score=" << std::fixed << std::setprecision(2) << score;
        }
        out << '\n';
        for (std::size_t child : sorted_by_size(forest.entries[id].children))
            self(self, child, name, depth + 1);
    };

    for (std::size_t root : sorted_by_size(forest.roots)) emit(emit, root, "", 0);

    for (std::size_t i = 0; i < forest.entries.size(); ++i) {
        const auto& entry = forest.entries[i];
        if (entry.ambiguous_candidates.empty()) continue;
        out << "# ambiguous parent for C" << i + 1 << ": candidates";
        for (std::size_t c : entry.ambiguous_candidates) out << " C" << c + 1;
        out << '\n';
    }
}

} // namespace slpa
