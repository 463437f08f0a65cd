#pragma once

#include <cassert>
#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "slpa/errors.hpp"
#include "slpa/graph.hpp"
#include "slpa/random.hpp"

namespace slpa {

using LabelId = NodeId; // labels are the internal ids of their originating nodes

/// Counting multiset of labels a node has accepted, including its unique
/// initial label. Entries stay in first-acceptance order.
class LabelMemory {
public:
    LabelMemory() = default;
    explicit LabelMemory(LabelId initial) : entries_{{initial, 1}}, total_(1) {}

    void add(LabelId label) {
        for (auto& [l, c] : entries_) {
            if (l == label) {
                ++c;
                ++total_;
                return;
            }
        }
        entries_.emplace_back(label, 1);
        ++total_;
    }

    /// Speaker rule: a label drawn with probability count/total.
    LabelId speak(Rng& rng) const {
        assert(total_ > 0 && "speaker requires a non-empty memory");
        std::uint64_t r = rng.below(total_);
        for (const auto& [label, count] : entries_) {
            if (r < count) return label;
            r -= count;
        }
        return entries_.back().first; // unreachable
    }

    std::uint64_t total() const { return total_; }
    std::size_t distinct_labels() const { return entries_.size(); }
    std::span<const std::pair<LabelId, std::uint32_t>> entries() const { return entries_; }

    std::uint32_t count_of(LabelId label) const {
        for (const auto& [l, c] : entries_)
            if (l == label) return c;
        return 0;
    }

private:
    std::vector<std::pair<LabelId, std::uint32_t>> entries_;
    std::uint64_t total_ = 0;
};

using Memories = std::vector<LabelMemory>;

struct RunConfig {
    std::uint32_t iterations = 100; // stable for anything above ~20
    std::uint64_t seed = 1;
};

/// Stage 1: every node starts with one copy of its own unique label.
inline Memories initialize(const Graph& graph) {
    Memories memories;
    memories.reserve(graph.node_count());
    for (NodeId v = 0; v < graph.node_count(); ++v) memories.emplace_back(v);
    return memories;
}

inline LabelId speaker_choice(const LabelMemory& memory, Rng& rng) {
    if (memory.total() == 0) throw ConfigError("speaker_choice on empty memory");
    return memory.speak(rng);
}

namespace detail {

// Multiplicity count over the received list; candidates keep first-appearance
// order so the tie-break draw is deterministic for a given stream.
inline LabelId most_popular(std::span<const LabelId> received, Rng& rng,
                            std::vector<std::pair<LabelId, std::uint32_t>>& scratch) {
    scratch.clear();
    std::uint32_t best = 0;
    for (LabelId label : received) {
        bool found = false;
        for (auto& [l, c] : scratch) {
            if (l == label) {
                best = std::max(best, ++c);
                found = true;
                break;
            }
        }
        if (!found) {
            scratch.emplace_back(label, 1);
            best = std::max(best, 1u);
        }
    }
    std::uint32_t ties = 0;
    for (const auto& [l, c] : scratch)
        if (c == best) ++ties;
    if (ties == 1) {
        for (const auto& [l, c] : scratch)
            if (c == best) return l;
    }
    std::uint64_t pick = rng.below(ties);
    for (const auto& [l, c] : scratch) {
        if (c != best) continue;
        if (pick == 0) return l;
        --pick;
    }
    return scratch.front().first; // unreachable
}

} // namespace detail

/// Listener rule: the most frequent label in the received list, ties broken
/// uniformly at random. The tie-break consumes one draw only when needed.
inline LabelId listener_choice(std::span<const LabelId> received, Rng& rng) {
    if (received.empty()) throw ConfigError("listener_choice on empty received list");
    std::vector<std::pair<LabelId, std::uint32_t>> scratch;
    return detail::most_popular(received, rng, scratch);
}

/// Stage 2. Each iteration shuffles the node order, then every node listens
/// exactly once: all its neighbors speak, the listener accepts the most
/// popular label. Memories update immediately, so later listeners in the
/// same sweep observe earlier acceptances. Isolated nodes never listen.
///
/// Stream consumption order per iteration: the shuffle, then per listener
/// one speaker draw per neighbor (adjacency order) and one tie-break draw
/// when the received multiset has tied maxima.
inline Memories evolve(const Graph& graph, const RunConfig& config) {
    if (config.iterations < 1) throw ConfigError("iteration count must be >= 1");
    Memories memories = initialize(graph);
    Rng rng(config.seed);

    std::vector<NodeId> order(graph.node_count());
    std::iota(order.begin(), order.end(), 0);
    std::vector<LabelId> received;
    std::vector<std::pair<LabelId, std::uint32_t>> scratch;

    for (std::uint32_t t = 0; t < config.iterations; ++t) {
        rng.shuffle(order);
        for (NodeId listener : order) {
            auto neighbors = graph.neighbors(listener);
            if (neighbors.empty()) continue;
            received.clear();
            for (NodeId speaker : neighbors) received.push_back(memories[speaker].speak(rng));
            memories[listener].add(detail::most_popular(received, rng, scratch));
        }
    }
    return memories;
}

/// Audit format: "node_name label:count label:count ..." (one node per line,
/// labels named after their originating nodes).
inline void write_memories(const Memories& memories, const Graph& graph, std::ostream& out) {
    for (NodeId v = 0; v < memories.size(); ++v) {
        out << graph.name(v);
        for (const auto& [label, count] : memories[v].entries())
            out << ' ' << graph.name(label) << ':' << count;
        out << '\n';
    }
}

inline Memories read_memories(std::istream& in, const Graph& graph) {
    Memories memories(graph.node_count());
    std::vector<bool> seen(graph.node_count(), false);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string name;
        if (!(fields >> name)) continue;
        NodeId v = graph.id_of(name);
        if (seen[v]) throw ParseError("line " + std::to_string(line_no) + ": node '" + name +
                                      "' listed twice");
        seen[v] = true;
        LabelMemory memory;
        std::string item;
        while (fields >> item) {
            auto colon = item.rfind(':');
            if (colon == std::string::npos || colon + 1 == item.size())
                throw ParseError("line " + std::to_string(line_no) + ": expected label:count, got '" +
                                 item + "'");
            LabelId label = graph.id_of(item.substr(0, colon));
            unsigned long count = 0;
            try {
                std::size_t used = 0;
                count = std::stoul(item.substr(colon + 1), &used);
                if (used != item.size() - colon - 1) throw std::invalid_argument(item);
            } catch (const std::exception&) {
                throw ParseError("line " + std::to_string(line_no) + ": bad count in '" + item +
                                 "'");
            }
            if (count == 0)
                throw ParseError("line " + std::to_string(line_no) + ": zero count for label");
            for (unsigned long i = 0; i < count; ++i) memory.add(label);
        }
        if (memory.total() == 0)
            throw ParseError("line " + std::to_string(line_no) + ": node without labels");
        memories[v] = std::move(memory);
    }
    for (NodeId v = 0; v < graph.node_count(); ++v)
        if (!seen[v]) throw ParseError("memories file is missing node '" + graph.name(v) + "'");
    return memories;
}

} // namespace slpa
