#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "slpa/errors.hpp"
#include "slpa/graph.hpp"

namespace slpa {

/// A set of communities (node-id sets), possibly overlapping or nested.
/// Communities are kept sorted and deduplicated; order is deterministic.
class Cover {
public:
    Cover() = default;

    /// Normalizes: sorts each community, drops duplicate members inside a
    /// community, drops communities that repeat an earlier node set.
    explicit Cover(std::vector<std::vector<NodeId>> communities) {
        std::set<std::vector<NodeId>> seen;
        for (auto& c : communities) {
            if (c.empty()) throw ConfigError("cover contains an empty community");
            std::sort(c.begin(), c.end());
            c.erase(std::unique(c.begin(), c.end()), c.end());
            if (seen.insert(c).second) communities_.push_back(std::move(c));
        }
    }

    std::size_t size() const { return communities_.size(); }
    bool empty() const { return communities_.empty(); }
    const std::vector<NodeId>& operator[](std::size_t i) const { return communities_[i]; }
    const std::vector<std::vector<NodeId>>& communities() const { return communities_; }

    auto begin() const { return communities_.begin(); }
    auto end() const { return communities_.end(); }

    /// Number of communities each node of a graph with n nodes belongs to.
    std::vector<std::size_t> membership_counts(std::size_t n) const {
        std::vector<std::size_t> counts(n, 0);
        for (const auto& c : communities_)
            for (NodeId v : c) {
                if (v >= n) throw ConfigError("cover references node id beyond graph size");
                ++counts[v];
            }
        return counts;
    }

    /// Nodes with membership count >= 2.
    std::vector<NodeId> overlapping_nodes(std::size_t n) const {
        auto counts = membership_counts(n);
        std::vector<NodeId> out;
        for (NodeId v = 0; v < n; ++v)
            if (counts[v] >= 2) out.push_back(v);
        return out;
    }

    bool covers_all(std::size_t n) const {
        auto counts = membership_counts(n);
        return std::all_of(counts.begin(), counts.end(), [](std::size_t c) { return c > 0; });
    }

    std::vector<std::size_t> community_sizes() const {
        std::vector<std::size_t> sizes;
        sizes.reserve(communities_.size());
        for (const auto& c : communities_) sizes.push_back(c.size());
        return sizes;
    }

private:
    std::vector<std::vector<NodeId>> communities_;
};

/// Cover file: one community per line, whitespace-separated node names.
/// '#' starts a comment; a non-comment line with no members is rejected.
inline Cover load_cover(std::istream& in, const Graph& graph) {
    std::vector<std::vector<NodeId>> communities;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        bool had_comment = hash != std::string::npos;
        if (had_comment) line.erase(hash);
        std::istringstream fields(line);
        std::vector<NodeId> community;
        std::string name;
        while (fields >> name) {
            if (!graph.has_name(name))
                throw ParseError("line " + std::to_string(line_no) + ": unknown node name '" +
                                 name + "'");
            community.push_back(graph.id_of(name));
        }
        if (community.empty()) {
            if (had_comment) continue;
            throw ParseError("line " + std::to_string(line_no) + ": empty community");
        }
        communities.push_back(std::move(community));
    }
    return Cover(std::move(communities));
}

inline void write_cover(const Cover& cover, const Graph& graph, std::ostream& out,
                        const std::string& header_comment = {}) {
    if (!header_comment.empty()) out << "# " << header_comment << '\n';
    for (const auto& c : cover) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) out << ' ';
            out << graph.name(c[i]);
        }
        out << '\n';
    }
}

/// Overlap report: "node_name community_count" for nodes in >= 2 communities.
inline void write_overlap_report(const Cover& cover, const Graph& graph, std::ostream& out) {
    auto counts = cover.membership_counts(graph.node_count());
    for (NodeId v = 0; v < graph.node_count(); ++v)
        if (counts[v] >= 2) out << graph.name(v) << ' ' << counts[v] << '\n';
}

} // namespace slpa
