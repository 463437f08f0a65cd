#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "slpa/errors.hpp"

namespace slpa {

using NodeId = std::uint32_t;

enum class Side : std::uint8_t { one = 0, two = 1 };

/// Immutable undirected simple graph with contiguous internal ids,
/// external node names and optional bipartite side tags.
class Graph {
public:
    Graph() = default;

    std::size_t node_count() const { return names_.size(); }
    std::size_t edge_count() const { return neighbors_.size() / 2; }

    std::span<const NodeId> neighbors(NodeId v) const {
        return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
    }
    std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }

    double mean_degree() const {
        return node_count() == 0 ? 0.0 : 2.0 * static_cast<double>(edge_count()) / static_cast<double>(node_count());
    }

    bool has_edge(NodeId u, NodeId v) const {
        auto nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    const std::string& name(NodeId v) const { return names_[v]; }

    NodeId id_of(const std::string& name) const {
        auto it = ids_.find(name);
        if (it == ids_.end()) throw ParseError("unknown node name: '" + name + "'");
        return it->second;
    }
    bool has_name(const std::string& name) const { return ids_.count(name) > 0; }

    bool is_bipartite_tagged() const { return !sides_.empty(); }
    Side side(NodeId v) const { return sides_[v]; }

    std::vector<NodeId> nodes_of_side(Side s) const {
        std::vector<NodeId> out;
        for (NodeId v = 0; v < node_count(); ++v)
            if (sides_[v] == s) out.push_back(v);
        return out;
    }

private:
    friend class GraphBuilder;

    std::vector<std::size_t> offsets_;   // size n+1
    std::vector<NodeId> neighbors_;      // size 2m, sorted per node
    std::vector<std::string> names_;
    std::unordered_map<std::string, NodeId> ids_;
    std::vector<Side> sides_;            // empty unless bipartite-tagged
};

struct LoadSummary {
    std::size_t duplicate_edges = 0;
    std::size_t self_loops = 0;
};

/// Accumulates named edges, then normalizes to a simple graph:
/// self-loops dropped, duplicate edges collapsed, both counted.
class GraphBuilder {
public:
    NodeId add_node(const std::string& name) {
        auto it = ids_.find(name);
        if (it != ids_.end()) return it->second;
        NodeId id = static_cast<NodeId>(names_.size());
        names_.push_back(name);
        ids_.emplace(name, id);
        return id;
    }

    void add_edge(const std::string& a, const std::string& b) {
        NodeId u = add_node(a);
        NodeId v = add_node(b);
        add_edge_ids(u, v);
    }

    void add_edge_ids(NodeId u, NodeId v) {
        if (u == v) {
            ++summary_.self_loops;
            return;
        }
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }

    const LoadSummary& summary() const { return summary_; }

    /// Builds the graph. With tag_bipartite, 2-colors every component and
    /// fails with an odd-cycle witness edge if the graph is not bipartite.
    Graph build(bool tag_bipartite = false) {
        std::sort(edges_.begin(), edges_.end());
        auto last = std::unique(edges_.begin(), edges_.end());
        summary_.duplicate_edges += static_cast<std::size_t>(edges_.end() - last);
        edges_.erase(last, edges_.end());

        Graph g;
        g.names_ = std::move(names_);
        g.ids_ = std::move(ids_);
        const std::size_t n = g.names_.size();

        std::vector<std::size_t> deg(n, 0);
        for (auto [u, v] : edges_) {
            ++deg[u];
            ++deg[v];
        }
        g.offsets_.assign(n + 1, 0);
        for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + deg[i];
        g.neighbors_.resize(2 * edges_.size());
        std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
        for (auto [u, v] : edges_) {
            g.neighbors_[cursor[u]++] = v;
            g.neighbors_[cursor[v]++] = u;
        }
        for (std::size_t i = 0; i < n; ++i)
            std::sort(g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]),
                      g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]));

        if (tag_bipartite) g.sides_ = two_color(g);
        return g;
    }

private:
    static std::vector<Side> two_color(const Graph& g) {
        const std::size_t n = g.node_count();
        std::vector<std::uint8_t> color(n, 2); // 2 = unassigned
        std::deque<NodeId> queue;
        for (NodeId start = 0; start < n; ++start) {
            if (color[start] != 2) continue;
            color[start] = 0;
            queue.push_back(start);
            while (!queue.empty()) {
                NodeId u = queue.front();
                queue.pop_front();
                for (NodeId v : g.neighbors(u)) {
                    if (color[v] == 2) {
                        color[v] = static_cast<std::uint8_t>(1 - color[u]);
                        queue.push_back(v);
                    } else if (color[v] == color[u]) {
                        throw StructureError("graph is not bipartite: edge " + g.name(u) + " -- " +
                                             g.name(v) + " closes an odd cycle");
                    }
                }
            }
        }
        std::vector<Side> sides(n);
        for (std::size_t i = 0; i < n; ++i) sides[i] = color[i] == 0 ? Side::one : Side::two;
        return sides;
    }

    std::vector<std::pair<NodeId, NodeId>> edges_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, NodeId> ids_;
    LoadSummary summary_;
};

struct LoadedGraph {
    Graph graph;
    LoadSummary summary;
};

/// Edge list: one edge per line "name1 name2"; '#' starts a comment;
/// blank lines ignored.
inline LoadedGraph load_edge_list(std::istream& in, bool bipartite = false) {
    GraphBuilder builder;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a)) continue; // blank
        if (!(fields >> b) || (fields >> extra))
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected exactly two node names, got '" + line + "'");
        builder.add_edge(a, b);
    }
    Graph g = builder.build(bipartite);
    return {std::move(g), builder.summary()};
}

/// Writes the normalized edge set, one "name1 name2" line per edge.
inline void write_edge_list(const Graph& g, std::ostream& out) {
    for (NodeId u = 0; u < g.node_count(); ++u)
        for (NodeId v : g.neighbors(u))
            if (u < v) out << g.name(u) << ' ' << g.name(v) << '\n';
}

/// Unweighted one-mode projection: nodes of the selected side, an edge
/// between two of them iff they share at least one neighbor on the other
/// side. Degree-0 nodes of the side are retained.
inline Graph project_bipartite(const Graph& g, Side side) {
    if (!g.is_bipartite_tagged())
        throw StructureError("projection requires a bipartite side-tagged graph");

    GraphBuilder builder;
    std::vector<NodeId> members = g.nodes_of_side(side);
    for (NodeId v : members) builder.add_node(g.name(v));

    // For every opposite-side node, its neighborhood is a clique in the projection.
    Side other = side == Side::one ? Side::two : Side::one;
    for (NodeId w : g.nodes_of_side(other)) {
        auto nb = g.neighbors(w);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                builder.add_edge(g.name(nb[i]), g.name(nb[j]));
    }
    return builder.build();
}

} // namespace slpa
