#pragma once

#include <utility>
#include <vector>

#include "zfb/errors.hpp"

namespace zfb {

/// Dense edge index into one particular Graph value (0..m-1).
using EdgeId = int;

/// Immutable simple undirected graph. Vertices are 0..n-1, edges carry
/// stable dense indices 0..m-1 in construction order, endpoints stored
/// with the smaller vertex first.
class Graph {
public:
    Graph() = default;

    /// Validates and normalizes: rejects self-loops, parallel edges and
    /// out-of-range endpoints. Edge order is the caller's order.
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    std::pair<int, int> endpoints(EdgeId e) const { return edges_[static_cast<size_t>(e)]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// Sorted neighbor list.
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }

    /// Edge index between u and v, or -1 if not adjacent.
    EdgeId edge_between(int u, int v) const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

struct LineGraph {
    Graph graph;
    /// vertex i of the line graph <-> edge vertex_edge[i] of the base graph.
    /// The identity today, returned explicitly so callers never assume it.
    std::vector<EdgeId> vertex_edge;
};

/// Line graph: one vertex per edge of g, adjacent iff the edges share an
/// endpoint. Throws EmptyEdgeSet when g has no edges.
LineGraph line_graph(const Graph& g);

struct Component {
    Graph graph;
    /// vertex_map[new index] = vertex index in the parent graph.
    std::vector<int> vertex_map;
};

/// Connected components as induced subgraphs with dense re-indexed
/// vertices, ordered by smallest original vertex.
std::vector<Component> components(const Graph& g);

/// Disjoint union; vertices of b are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

bool is_connected(const Graph& g);

} // namespace zfb
