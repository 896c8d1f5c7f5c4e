#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "zfb/graph.hpp"

namespace zfb {

/// Permutation of 0..n-1; valid as a topological order of an orientation
/// when every directed edge goes from earlier to later.
using VertexOrder = std::vector<int>;

/// Per-edge direction assignment over a Graph held by value. Unoriented
/// edges impose no constraint anywhere; a "full" orientation has none.
class Orientation {
public:
    Orientation() = default;
    explicit Orientation(Graph g)
        : graph_(std::move(g)), dir_(static_cast<size_t>(graph_.edge_count()), Dir::none) {}

    const Graph& graph() const { return graph_; }

    bool oriented(EdgeId e) const { return dir_[static_cast<size_t>(e)] != Dir::none; }
    bool full() const;
    int oriented_count() const;

    /// Directs edge e away from tail (must be an endpoint of e).
    void orient(EdgeId e, int tail);

    int tail(EdgeId e) const;
    int head(EdgeId e) const;

    /// Oriented edges as (tail, head), ascending edge index.
    std::vector<std::pair<int, int>> directed_edges() const;

    /// Out-neighbor lists over oriented edges only, each sorted by edge index.
    std::vector<std::vector<int>> out_adjacency() const;
    std::vector<int> in_degrees() const;
    std::vector<int> out_degrees() const;

    bool operator==(const Orientation&) const = default;

private:
    enum class Dir : std::uint8_t { none, forward, backward }; // forward = endpoints.first -> .second

    Graph graph_;
    std::vector<Dir> dir_;
};

struct TopoResult {
    /// Set iff the orientation is acyclic.
    std::optional<VertexOrder> order;
    /// One directed cycle (v0 v1 ... vk-1, arc from each to the next and
    /// from the last back to v0) when a cycle exists.
    std::vector<int> cycle;

    bool acyclic() const { return order.has_value(); }
};

/// Kahn's algorithm; among ready vertices always picks the smallest index,
/// so the order is deterministic. A fully unoriented graph yields 0..n-1.
TopoResult topological_order(const Orientation& o);

bool is_acyclic(const Orientation& o);

/// Linear scan over directed edges.
bool is_topological_order(const Orientation& o, const VertexOrder& order);

/// Direction vector decoded from the low edge_count() bits of mask:
/// bit e clear = tail endpoints(e).first, set = tail endpoints(e).second.
Orientation orientation_from_mask(const Graph& g, std::uint64_t mask);

} // namespace zfb
