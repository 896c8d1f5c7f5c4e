#include "zfb/transfer.hpp"

#include <algorithm>
#include <string>

#include "json.hpp"

#include "zfb/formats.hpp"

namespace zfb {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json orientation_pairs(const Orientation& o) {
    ordered_json arr = ordered_json::array();
    for (auto [t, h] : o.directed_edges())
        arr.push_back({t, h});
    return arr;
}

ordered_json bundle_for(const Graph& g, const ChainDecomposition* cd,
                        const Orientation* partial) {
    ordered_json b;
    b["graph6"] = write_graph6(g);
    if (cd) {
        b["chains"] = cd->chains;
        b["long_chain_count"] = cd->long_count;
    }
    if (partial)
        b["partial_orientation"] = orientation_pairs(*partial);
    return b;
}

/// The single common endpoint of two distinct edges of a simple graph.
int shared_vertex(const Graph& g, EdgeId a, EdgeId b) {
    auto [au, av] = g.endpoints(a);
    auto [bu, bv] = g.endpoints(b);
    if (au == bu || au == bv)
        return au;
    if (av == bu || av == bv)
        return av;
    return -1;
}

int other_endpoint(const Graph& g, EdgeId e, int v) {
    auto [u, w] = g.endpoints(e);
    return u == v ? w : u;
}

void check_transfer_preconditions(const Graph& g) {
    if (g.vertex_count() == 0)
        throw EmptyGraph("transfer needs a graph");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0)
            throw IsolatedVertex("vertex " + std::to_string(v) + " is isolated");
    if (!is_connected(g))
        throw Disconnected("transfer needs a connected graph");
}

} // namespace

ChainDecomposition build_chains(const LineGraph& lg, const ForcingProcess& proc) {
    const Graph& lgraph = lg.graph;
    const int m = lgraph.vertex_count();

    std::vector<int> next(static_cast<size_t>(m), -1);
    for (auto [u, w] : proc.events) {
        if (next[static_cast<size_t>(u)] != -1)
            throw NotForcing("build_chains: vertex forces twice");
        next[static_cast<size_t>(u)] = w;
    }

    ChainDecomposition cd;
    std::vector<char> visited(static_cast<size_t>(m), 0);
    for (int z : proc.initial) {
        std::vector<EdgeId> chain;
        for (int at = z; at != -1; at = next[static_cast<size_t>(at)]) {
            if (visited[static_cast<size_t>(at)])
                throw NotForcing("build_chains: chains overlap");
            visited[static_cast<size_t>(at)] = 1;
            chain.push_back(lg.vertex_edge[static_cast<size_t>(at)]);
        }
        cd.chains.push_back(std::move(chain));
    }
    if (std::find(visited.begin(), visited.end(), 0) != visited.end())
        throw NotForcing("build_chains: chains do not cover the line graph");

    // Consecutive entries must be adjacent and nothing else may be: each
    // chain is an induced path in L(g). A failure would be an internal
    // inconsistency, reported with a reproducer.
    for (const auto& chain : cd.chains)
        for (size_t i = 0; i < chain.size(); ++i)
            for (size_t j = i + 1; j < chain.size(); ++j) {
                bool adjacent =
                    lgraph.edge_between(chain[i], chain[j]) != -1;
                if (adjacent != (j == i + 1)) {
                    ordered_json b;
                    b["line_graph6"] = write_graph6(lgraph);
                    b["z"] = proc.initial;
                    b["events"] = proc.events;
                    b["chains"] = cd.chains;
                    throw NotInducedPath("forcing chain is not an induced path",
                                         b.dump());
                }
            }

    std::stable_partition(cd.chains.begin(), cd.chains.end(),
                          [](const std::vector<EdgeId>& c) { return c.size() >= 2; });
    cd.long_count = static_cast<int>(std::count_if(
        cd.chains.begin(), cd.chains.end(),
        [](const std::vector<EdgeId>& c) { return c.size() >= 2; }));
    return cd;
}

Orientation orient_from_chains(const Graph& g, const ChainDecomposition& cd) {
    Orientation h(g);
    for (const auto& chain : cd.chains) {
        const int len = static_cast<int>(chain.size());
        for (int j = 1; j <= len; ++j) {
            EdgeId e = chain[static_cast<size_t>(j - 1)];
            int tail_from_prev = -1, tail_from_next = -1;
            if (j >= 2)
                tail_from_prev = shared_vertex(g, chain[static_cast<size_t>(j - 2)], e);
            if (j <= len - 1) {
                int head = shared_vertex(g, e, chain[static_cast<size_t>(j)]);
                if (head != -1)
                    tail_from_next = other_endpoint(g, e, head);
            }
            if ((j >= 2 && tail_from_prev == -1) || (j <= len - 1 && tail_from_next == -1))
                throw Error("orient_from_chains: consecutive chain edges share no vertex");
            if (tail_from_prev != -1 && tail_from_next != -1 &&
                tail_from_prev != tail_from_next) {
                ordered_json b = bundle_for(g, &cd, &h);
                b["edge"] = {g.endpoints(e).first, g.endpoints(e).second};
                throw ConflictingRules("orientation rules disagree on edge " +
                                           std::to_string(e),
                                       b.dump());
            }
            int tail = tail_from_prev != -1 ? tail_from_prev : tail_from_next;
            if (tail != -1)
                h.orient(e, tail);
        }
    }
    return h;
}

VertexOrder certify_acyclic(const Orientation& partial, const ChainDecomposition& cd) {
    TopoResult topo = topological_order(partial);
    if (!topo.acyclic()) {
        ordered_json b = bundle_for(partial.graph(), &cd, &partial);
        b["cycle"] = topo.cycle;
        throw CycleInOrientation("chain orientation contains a directed cycle",
                                 b.dump());
    }
    return *topo.order;
}

Orientation extend_orientation(const Orientation& partial, const VertexOrder& order) {
    if (!is_topological_order(partial, order))
        throw InvalidOrder("extend_orientation: not a topological order of the input");
    std::vector<int> pos(order.size());
    for (size_t i = 0; i < order.size(); ++i)
        pos[static_cast<size_t>(order[i])] = static_cast<int>(i);

    Orientation full = partial;
    const Graph& g = partial.graph();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (full.oriented(e))
            continue;
        auto [u, v] = g.endpoints(e);
        full.orient(e, pos[static_cast<size_t>(u)] < pos[static_cast<size_t>(v)] ? u : v);
    }
    if (!is_topological_order(full, order))
        throw Error("extend_orientation: order no longer topological"); // unreachable
    return full;
}

BrushWitness derive_brush_witness(const Graph& g, const ChainDecomposition& cd,
                                  const Orientation& full) {
    BrushWitness w;
    w.orientation = full;
    for (const auto& chain : cd.chains) {
        std::vector<int> path;
        if (chain.size() == 1) {
            path = {full.tail(chain[0]), full.head(chain[0])};
        } else {
            path.push_back(other_endpoint(g, chain[0],
                                          shared_vertex(g, chain[0], chain[1])));
            for (size_t j = 1; j < chain.size(); ++j)
                path.push_back(shared_vertex(g, chain[j - 1], chain[j]));
            path.push_back(other_endpoint(
                g, chain.back(), shared_vertex(g, chain[chain.size() - 2], chain.back())));
        }
        w.paths.push_back(std::move(path));
    }

    if (auto check = verify_brush_witness(g, w); !check.ok()) {
        ordered_json b = bundle_for(g, &cd, nullptr);
        b["full_orientation"] = orientation_pairs(full);
        b["paths"] = w.paths;
        b["violations"] = check.violations;
        throw WitnessInvalid("derived brush witness failed verification", b.dump());
    }
    return w;
}

std::pair<std::vector<int>, ForcingProcess> build_Y(const Graph& g,
                                                    const Orientation& full,
                                                    const std::vector<EdgeId>& z_edges) {
    const int n = g.vertex_count();
    if (!full.full())
        throw NotFull("build_Y needs a full orientation");

    std::vector<char> in_z(static_cast<size_t>(g.edge_count()), 0);
    for (EdgeId e : z_edges)
        in_z[static_cast<size_t>(e)] = 1;

    std::vector<std::vector<EdgeId>> out_edges(static_cast<size_t>(n));
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        out_edges[static_cast<size_t>(full.tail(e))].push_back(e);
    const auto in_deg = full.in_degrees();

    auto property_bundle = [&](int vertex) {
        ordered_json b;
        b["graph6"] = write_graph6(g);
        b["z_edge_indices"] = z_edges;
        b["full_orientation"] = orientation_pairs(full);
        b["vertex"] = vertex;
        return b.dump();
    };

    // Structural properties of the extended orientation: a source vertex has
    // only initial out-edges; any other vertex has at most one non-initial
    // out-edge.
    for (int u = 0; u < n; ++u) {
        int outside = 0;
        for (EdgeId e : out_edges[static_cast<size_t>(u)])
            if (!in_z[static_cast<size_t>(e)])
                ++outside;
        if (in_deg[static_cast<size_t>(u)] == 0 && outside > 0)
            throw PropertyViolated("source vertex with a non-initial out-edge",
                                   property_bundle(u));
        if (in_deg[static_cast<size_t>(u)] >= 1 && outside > 1)
            throw PropertyViolated("vertex with two non-initial out-edges",
                                   property_bundle(u));
    }

    TopoResult topo = topological_order(full);
    if (!topo.acyclic())
        throw NotAcyclic("build_Y needs an acyclic orientation");
    std::vector<int> pos(static_cast<size_t>(n));
    for (size_t i = 0; i < topo.order->size(); ++i)
        pos[static_cast<size_t>((*topo.order)[i])] = static_cast<int>(i);

    std::vector<char> in_y(static_cast<size_t>(n), 0);
    for (int u = 0; u < n; ++u) {
        if (in_deg[static_cast<size_t>(u)] == 0) {
            // u and all out-neighbors except the one latest in topo order
            in_y[static_cast<size_t>(u)] = 1;
            int omit = -1;
            for (EdgeId e : out_edges[static_cast<size_t>(u)]) {
                int h = full.head(e);
                if (omit == -1 || pos[static_cast<size_t>(h)] > pos[static_cast<size_t>(omit)])
                    omit = h;
            }
            for (EdgeId e : out_edges[static_cast<size_t>(u)]) {
                int h = full.head(e);
                if (h != omit)
                    in_y[static_cast<size_t>(h)] = 1;
            }
        } else {
            for (EdgeId e : out_edges[static_cast<size_t>(u)])
                if (in_z[static_cast<size_t>(e)])
                    in_y[static_cast<size_t>(full.head(e))] = 1;
        }
    }

    std::vector<int> y;
    for (int v = 0; v < n; ++v)
        if (in_y[static_cast<size_t>(v)])
            y.push_back(v);
    if (y.size() > z_edges.size())
        throw PropertyViolated("|Y| exceeds |Z|", property_bundle(-1));

    // Along the topological order, every vertex outside Y is forced by an
    // in-neighbor whose only out-neighbor outside Y it is.
    ForcingProcess proc;
    proc.initial = y;
    for (int v : *topo.order) {
        if (in_y[static_cast<size_t>(v)])
            continue;
        int forcer = -1;
        for (int u = 0; u < n && forcer == -1; ++u) {
            EdgeId uv = g.edge_between(u, v);
            if (uv == -1 || full.tail(uv) != u)
                continue;
            bool only_outside = true;
            for (EdgeId e : out_edges[static_cast<size_t>(u)])
                if (!in_y[static_cast<size_t>(full.head(e))] && full.head(e) != v)
                    only_outside = false;
            if (only_outside)
                forcer = u;
        }
        if (forcer == -1) {
            ordered_json b;
            b["graph6"] = write_graph6(g);
            b["z_edge_indices"] = z_edges;
            b["full_orientation"] = orientation_pairs(full);
            b["y"] = y;
            b["vertex"] = v;
            throw ForcingReplayFailed("no forcer for vertex " + std::to_string(v),
                                      b.dump());
        }
        proc.events.emplace_back(forcer, v);
    }

    auto bad = validate_process(g, proc);
    auto colored = closure(g, y);
    if (static_cast<int>(colored.size()) != n)
        bad.push_back("closure of Y does not cover the graph");
    if (!bad.empty()) {
        ordered_json b;
        b["graph6"] = write_graph6(g);
        b["z_edge_indices"] = z_edges;
        b["full_orientation"] = orientation_pairs(full);
        b["y"] = y;
        b["events"] = proc.events;
        b["violations"] = bad;
        throw ForcingReplayFailed("forcing process for Y failed replay", b.dump());
    }
    return {std::move(y), std::move(proc)};
}

TransferResult transfer(const Graph& g, const Budget& budget) {
    check_transfer_preconditions(g);
    LineGraph lg = line_graph(g);
    auto [k, z] = zero_forcing_number(lg.graph, budget);
    (void)k;
    ForcingProcess proc = record_process(lg.graph, z);
    return transfer_with_process(g, proc);
}

TransferResult transfer_with_process(const Graph& g, const ForcingProcess& proc) {
    check_transfer_preconditions(g);
    LineGraph lg = line_graph(g);
    if (auto bad = validate_process(lg.graph, proc); !bad.empty())
        throw NotForcing("transfer_with_process: invalid process: " + bad.front());

    TransferResult r;
    r.graph = g;
    for (int v : proc.initial)
        r.z_edges.push_back(lg.vertex_edge[static_cast<size_t>(v)]);

    r.chains = build_chains(lg, proc);
    r.assertions.chains_induced = true;

    r.partial = orient_from_chains(g, r.chains);
    r.assertions.rules_consistent = true;

    r.topo = certify_acyclic(r.partial, r.chains);
    r.assertions.partial_acyclic = true;

    r.full = extend_orientation(r.partial, r.topo);
    r.assertions.full_acyclic = is_acyclic(r.full);
    r.assertions.order_preserved = is_topological_order(r.full, r.topo);
    if (!r.assertions.full_acyclic || !r.assertions.order_preserved)
        throw Error("transfer: extension broke acyclicity"); // unreachable

    r.brush = derive_brush_witness(g, r.chains, r.full);
    r.assertions.brush_witness_valid = true;
    r.assertions.paths_count_equals_z = r.brush.paths.size() == r.z_edges.size();
    if (!r.assertions.paths_count_equals_z)
        throw Error("transfer: path count differs from |Z|"); // unreachable

    auto [y, yproc] = build_Y(g, r.full, r.z_edges);
    r.assertions.structural_bullets = true;
    r.assertions.y_size_within_bound = y.size() <= r.z_edges.size();
    r.assertions.y_forcing_valid = true;
    r.y = std::move(y);
    r.y_process = std::move(yproc);
    return r;
}

} // namespace zfb
