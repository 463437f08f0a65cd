#pragma once

#include "slpa/cover.hpp"
#include "slpa/graph.hpp"
#include "slpa/postprocess.hpp"
#include "slpa/slpa.hpp"

namespace slpa {

/// Stage 3 on finished memories: threshold, group, and (by default) drop
/// subset communities. Pure given the memories; reusable across r values.
inline Cover detect_from_memories(const Graph& graph, const Memories& memories,
                                  const Threshold& threshold, bool keep_subsets = false) {
    auto labels = apply_threshold(memories, threshold);
    auto grouped = group_connected(graph, labels);
    return keep_subsets ? grouped.cover : prune_subsets(grouped.cover);
}

/// Full single-run pipeline: evolve then post-process.
inline Cover detect_communities(const Graph& graph, const RunConfig& config,
                                const Threshold& threshold, bool keep_subsets = false) {
    Memories memories = evolve(graph, config);
    return detect_from_memories(graph, memories, threshold, keep_subsets);
}

} // namespace slpa
