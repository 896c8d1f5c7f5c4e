#include "zfb/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace zfb {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0)
        throw Error("negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<size_t>(n), {});
    std::set<std::pair<int, int>> seen;
    g.edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u == v)
            throw SelfLoop("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error("edge endpoint out of range: " + std::to_string(u) + " " +
                        std::to_string(v));
        if (u > v)
            std::swap(u, v);
        if (!seen.insert({u, v}).second)
            throw DuplicateEdge("duplicate edge " + std::to_string(u) + "-" +
                                std::to_string(v));
        g.edges_.emplace_back(u, v);
        g.adj_[static_cast<size_t>(u)].push_back(v);
        g.adj_[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& nb : g.adj_)
        std::sort(nb.begin(), nb.end());
    return g;
}

EdgeId Graph::edge_between(int u, int v) const {
    if (u > v)
        std::swap(u, v);
    for (EdgeId e = 0; e < edge_count(); ++e)
        if (edges_[static_cast<size_t>(e)] == std::pair{u, v})
            return e;
    return -1;
}

LineGraph line_graph(const Graph& g) {
    const int m = g.edge_count();
    if (m == 0)
        throw EmptyEdgeSet("line graph of an edgeless graph");

    // Two distinct edges of a simple graph share at most one endpoint, so
    // collecting incident pairs per vertex produces each line edge once.
    std::vector<std::vector<EdgeId>> incident(static_cast<size_t>(g.vertex_count()));
    for (EdgeId e = 0; e < m; ++e) {
        auto [u, v] = g.endpoints(e);
        incident[static_cast<size_t>(u)].push_back(e);
        incident[static_cast<size_t>(v)].push_back(e);
    }
    std::vector<std::pair<int, int>> line_edges;
    for (const auto& inc : incident)
        for (size_t i = 0; i < inc.size(); ++i)
            for (size_t j = i + 1; j < inc.size(); ++j)
                line_edges.emplace_back(inc[i], inc[j]);
    std::sort(line_edges.begin(), line_edges.end());

    LineGraph out;
    out.graph = Graph::from_edges(m, std::move(line_edges));
    out.vertex_edge.resize(static_cast<size_t>(m));
    for (EdgeId e = 0; e < m; ++e)
        out.vertex_edge[static_cast<size_t>(e)] = e;
    return out;
}

std::vector<Component> components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(static_cast<size_t>(n), -1);
    int count = 0;
    for (int start = 0; start < n; ++start) {
        if (comp[static_cast<size_t>(start)] != -1)
            continue;
        std::vector<int> stack{start};
        comp[static_cast<size_t>(start)] = count;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if (comp[static_cast<size_t>(w)] == -1) {
                    comp[static_cast<size_t>(w)] = count;
                    stack.push_back(w);
                }
        }
        ++count;
    }

    std::vector<Component> out(static_cast<size_t>(count));
    std::vector<int> local(static_cast<size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        auto& c = out[static_cast<size_t>(comp[static_cast<size_t>(v)])];
        local[static_cast<size_t>(v)] = static_cast<int>(c.vertex_map.size());
        c.vertex_map.push_back(v);
    }
    std::vector<std::vector<std::pair<int, int>>> comp_edges(static_cast<size_t>(count));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        int c = comp[static_cast<size_t>(u)];
        comp_edges[static_cast<size_t>(c)].emplace_back(local[static_cast<size_t>(u)],
                                                        local[static_cast<size_t>(v)]);
    }
    for (int c = 0; c < count; ++c) {
        auto& out_c = out[static_cast<size_t>(c)];
        out_c.graph = Graph::from_edges(static_cast<int>(out_c.vertex_map.size()),
                                        std::move(comp_edges[static_cast<size_t>(c)]));
    }
    return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> edges = a.edges();
    const int shift = a.vertex_count();
    for (auto [u, v] : b.edges())
        edges.emplace_back(u + shift, v + shift);
    return Graph::from_edges(a.vertex_count() + b.vertex_count(), std::move(edges));
}

bool is_connected(const Graph& g) {
    return components(g).size() <= 1;
}

} // namespace zfb
