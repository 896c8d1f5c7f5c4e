#include "zfb/orientation.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace zfb {

bool Orientation::full() const {
    return oriented_count() == graph_.edge_count();
}

int Orientation::oriented_count() const {
    return static_cast<int>(std::count_if(dir_.begin(), dir_.end(),
                                          [](Dir d) { return d != Dir::none; }));
}

void Orientation::orient(EdgeId e, int tail_vertex) {
    auto [u, v] = graph_.endpoints(e);
    if (tail_vertex == u)
        dir_[static_cast<size_t>(e)] = Dir::forward;
    else if (tail_vertex == v)
        dir_[static_cast<size_t>(e)] = Dir::backward;
    else
        throw Error("orient: vertex " + std::to_string(tail_vertex) +
                    " is not an endpoint of edge " + std::to_string(e));
}

int Orientation::tail(EdgeId e) const {
    auto [u, v] = graph_.endpoints(e);
    switch (dir_[static_cast<size_t>(e)]) {
    case Dir::forward: return u;
    case Dir::backward: return v;
    default: throw Error("tail of unoriented edge " + std::to_string(e));
    }
}

int Orientation::head(EdgeId e) const {
    auto [u, v] = graph_.endpoints(e);
    switch (dir_[static_cast<size_t>(e)]) {
    case Dir::forward: return v;
    case Dir::backward: return u;
    default: throw Error("head of unoriented edge " + std::to_string(e));
    }
}

std::vector<std::pair<int, int>> Orientation::directed_edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(dir_.size());
    for (EdgeId e = 0; e < graph_.edge_count(); ++e)
        if (oriented(e))
            out.emplace_back(tail(e), head(e));
    return out;
}

std::vector<std::vector<int>> Orientation::out_adjacency() const {
    std::vector<std::vector<int>> out(static_cast<size_t>(graph_.vertex_count()));
    for (EdgeId e = 0; e < graph_.edge_count(); ++e)
        if (oriented(e))
            out[static_cast<size_t>(tail(e))].push_back(head(e));
    return out;
}

std::vector<int> Orientation::in_degrees() const {
    std::vector<int> deg(static_cast<size_t>(graph_.vertex_count()), 0);
    for (EdgeId e = 0; e < graph_.edge_count(); ++e)
        if (oriented(e))
            ++deg[static_cast<size_t>(head(e))];
    return deg;
}

std::vector<int> Orientation::out_degrees() const {
    std::vector<int> deg(static_cast<size_t>(graph_.vertex_count()), 0);
    for (EdgeId e = 0; e < graph_.edge_count(); ++e)
        if (oriented(e))
            ++deg[static_cast<size_t>(tail(e))];
    return deg;
}

TopoResult topological_order(const Orientation& o) {
    const int n = o.graph().vertex_count();
    auto indeg = o.in_degrees();
    auto adj = o.out_adjacency();

    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int v = 0; v < n; ++v)
        if (indeg[static_cast<size_t>(v)] == 0)
            ready.push(v);

    TopoResult res;
    VertexOrder order;
    order.reserve(static_cast<size_t>(n));
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        order.push_back(v);
        for (int w : adj[static_cast<size_t>(v)])
            if (--indeg[static_cast<size_t>(w)] == 0)
                ready.push(w);
    }
    if (static_cast<int>(order.size()) == n) {
        res.order = std::move(order);
        return res;
    }

    // Every leftover vertex keeps an unprocessed in-neighbor, so walking
    // backwards (smallest in-neighbor first) must revisit a vertex; the
    // revisited stretch is a directed cycle, reported in arc direction.
    std::vector<std::vector<int>> in_adj(static_cast<size_t>(n));
    for (auto [t, h] : o.directed_edges())
        if (indeg[static_cast<size_t>(h)] > 0 && indeg[static_cast<size_t>(t)] > 0)
            in_adj[static_cast<size_t>(h)].push_back(t);
    for (auto& nb : in_adj)
        std::sort(nb.begin(), nb.end());

    int start = 0;
    while (indeg[static_cast<size_t>(start)] == 0)
        ++start;
    std::vector<int> walk{start};
    std::vector<int> pos(static_cast<size_t>(n), -1);
    pos[static_cast<size_t>(start)] = 0;
    for (;;) {
        int prev = in_adj[static_cast<size_t>(walk.back())].front();
        if (pos[static_cast<size_t>(prev)] != -1) {
            std::vector<int> cycle(walk.begin() + pos[static_cast<size_t>(prev)], walk.end());
            std::reverse(cycle.begin(), cycle.end());
            res.cycle = std::move(cycle);
            return res;
        }
        pos[static_cast<size_t>(prev)] = static_cast<int>(walk.size());
        walk.push_back(prev);
    }
}

bool is_acyclic(const Orientation& o) {
    return topological_order(o).acyclic();
}

bool is_topological_order(const Orientation& o, const VertexOrder& order) {
    const int n = o.graph().vertex_count();
    if (static_cast<int>(order.size()) != n)
        return false;
    std::vector<int> pos(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        int v = order[static_cast<size_t>(i)];
        if (v < 0 || v >= n || pos[static_cast<size_t>(v)] != -1)
            return false;
        pos[static_cast<size_t>(v)] = i;
    }
    for (auto [t, h] : o.directed_edges())
        if (pos[static_cast<size_t>(t)] >= pos[static_cast<size_t>(h)])
            return false;
    return true;
}

Orientation orientation_from_mask(const Graph& g, std::uint64_t mask) {
    Orientation o(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        o.orient(e, (mask >> e) & 1u ? v : u);
    }
    return o;
}

} // namespace zfb
