#pragma once

#include <vector>

namespace zfb {

/// Dinic's algorithm over an explicit arc list. Arc scan order is the
/// insertion order, so flows are deterministic for a fixed build sequence.
/// Capacities here are tiny integers; determinism matters more than speed.
class FlowNetwork {
public:
    explicit FlowNetwork(int node_count);

    /// Adds arc from->to with the given capacity (reverse capacity 0);
    /// returns the arc id.
    int add_arc(int from, int to, int capacity);

    int max_flow(int source, int sink);

    int flow_on(int arc) const;
    /// Forward residual capacity.
    int residual(int arc) const;
    /// Freezes an arc: zero residual in both directions, preserving the
    /// flow recorded so far.
    void freeze(int arc);

    int node_count() const { return static_cast<int>(adj_.size()); }

private:
    struct Arc {
        int to;
        int cap;   // residual
        int flow;  // net flow pushed over the forward arc
    };

    bool bfs(int source, int sink);
    int dfs(int v, int sink, int limit);

    std::vector<Arc> arcs_;                 // forward at even ids, reverse at odd
    std::vector<std::vector<int>> adj_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

} // namespace zfb
