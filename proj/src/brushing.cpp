#include "zfb/brushing.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "zfb/maxflow.hpp"

namespace zfb {

namespace {

void check_bounds(const Orientation& o, int count) {
    // Sanity sandwich: every path leaves a vertex at most once, so count is
    // at least the largest out-degree; directing one unit along every arc
    // and closing the imbalances at the endpoints is feasible, so count is
    // at most sum_v max(0, outdeg - indeg).
    const auto out = o.out_degrees();
    const auto in = o.in_degrees();
    int max_out = 0, imbalance = 0;
    for (size_t v = 0; v < out.size(); ++v) {
        max_out = std::max(max_out, out[v]);
        imbalance += std::max(0, out[v] - in[v]);
    }
    if (count < max_out || count > imbalance)
        throw Error("min_path_edge_cover: count " + std::to_string(count) +
                    " outside bounds [" + std::to_string(max_out) + ", " +
                    std::to_string(imbalance) + "]");
}

} // namespace

std::pair<int, std::vector<std::vector<int>>> min_path_edge_cover(const Orientation& o) {
    const Graph& g = o.graph();
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (m == 0)
        throw NoEdges("min_path_edge_cover needs at least one edge");
    if (!o.full())
        throw NotFull("min_path_edge_cover needs a full orientation");
    if (!is_acyclic(o))
        throw NotAcyclic("min_path_edge_cover needs an acyclic orientation");

    // Minimum flow with lower bound 1 on every arc. Node layout: vertices,
    // then S, T and the super source/sink SS, TT of the standard
    // lower-bounds transformation (arc [1, c] becomes [0, c-1] plus SS->head
    // and tail->TT capacity 1, aggregated per vertex). Arc insertion order
    // (S->v by vertex, arcs by edge index, v->T by vertex) fixes the path
    // decomposition below.
    const int S = n, T = n + 1, SS = n + 2, TT = n + 3;
    FlowNetwork net(n + 4);
    std::vector<int> s_arc(static_cast<size_t>(n)), t_arc(static_cast<size_t>(n)),
        e_arc(static_cast<size_t>(m));
    for (int v = 0; v < n; ++v)
        s_arc[static_cast<size_t>(v)] = net.add_arc(S, v, m);
    for (EdgeId e = 0; e < m; ++e)
        e_arc[static_cast<size_t>(e)] = net.add_arc(o.tail(e), o.head(e), m - 1);
    for (int v = 0; v < n; ++v)
        t_arc[static_cast<size_t>(v)] = net.add_arc(v, T, m);
    int ts_arc = net.add_arc(T, S, m);

    const auto out_deg = o.out_degrees();
    const auto in_deg = o.in_degrees();
    std::vector<int> ss_arcs, tt_arcs;
    for (int v = 0; v < n; ++v) {
        if (in_deg[static_cast<size_t>(v)] > 0)
            ss_arcs.push_back(net.add_arc(SS, v, in_deg[static_cast<size_t>(v)]));
        if (out_deg[static_cast<size_t>(v)] > 0)
            tt_arcs.push_back(net.add_arc(v, TT, out_deg[static_cast<size_t>(v)]));
    }

    // Phase 1: satisfy the lower bounds (always feasible here: each arc on
    // its own is a path). Phase 2: cancel as much S->T flow as possible.
    net.max_flow(SS, TT);
    for (int a : ss_arcs)
        if (net.residual(a) != 0)
            throw Error("min_path_edge_cover: lower bounds not saturated");
    for (int a : ss_arcs)
        net.freeze(a);
    for (int a : tt_arcs)
        net.freeze(a);
    net.freeze(ts_arc);
    net.max_flow(T, S);

    int count = 0;
    for (int v = 0; v < n; ++v)
        count += net.flow_on(s_arc[static_cast<size_t>(v)]);

    // Decompose into count source-to-sink paths, always following the
    // lowest-indexed positive-flow arc; in a DAG every unit reaches T.
    std::vector<int> f_s(static_cast<size_t>(n)), f_t(static_cast<size_t>(n)),
        f_e(static_cast<size_t>(m));
    for (int v = 0; v < n; ++v) {
        f_s[static_cast<size_t>(v)] = net.flow_on(s_arc[static_cast<size_t>(v)]);
        f_t[static_cast<size_t>(v)] = net.flow_on(t_arc[static_cast<size_t>(v)]);
    }
    for (EdgeId e = 0; e < m; ++e)
        f_e[static_cast<size_t>(e)] = 1 + net.flow_on(e_arc[static_cast<size_t>(e)]);

    std::vector<std::vector<int>> paths;
    for (int p = 0; p < count; ++p) {
        int start = 0;
        while (f_s[static_cast<size_t>(start)] == 0)
            ++start;
        --f_s[static_cast<size_t>(start)];
        std::vector<int> path{start};
        for (;;) {
            int at = path.back();
            EdgeId next = -1;
            for (EdgeId e = 0; e < m; ++e)
                if (f_e[static_cast<size_t>(e)] > 0 && o.tail(e) == at) {
                    next = e;
                    break;
                }
            if (next == -1) {
                if (f_t[static_cast<size_t>(at)] <= 0)
                    throw Error("min_path_edge_cover: flow decomposition stuck");
                --f_t[static_cast<size_t>(at)];
                break;
            }
            --f_e[static_cast<size_t>(next)];
            path.push_back(o.head(next));
        }
        if (path.size() < 2)
            throw Error("min_path_edge_cover: degenerate path in decomposition");
        paths.push_back(std::move(path));
    }

    check_bounds(o, count);
    return {count, std::move(paths)};
}

std::pair<int, BrushWitness> brushing_number(const Graph& g, const Budget& budget) {
    const int m = g.edge_count();
    if (m == 0)
        throw NoEdges("brushing number needs at least one edge");
    BudgetClock clock(budget);

    // All 2^m direction vectors in binary order; the witness keeps the first
    // optimal orientation.
    int best = std::numeric_limits<int>::max();
    BrushWitness witness;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        clock.tick("brushing_number");
        Orientation o = orientation_from_mask(g, mask);
        if (!is_acyclic(o))
            continue;
        auto [count, paths] = min_path_edge_cover(o);
        if (count < best) {
            best = count;
            witness.orientation = std::move(o);
            witness.paths = std::move(paths);
            if (best == 1)
                break;
        }
    }
    if (auto check = verify_brush_witness(g, witness); !check.ok())
        throw Error("brushing_number: witness failed self-check: " +
                    check.violations.front());
    return {best, std::move(witness)};
}

WitnessCheck verify_brush_witness(const Graph& g, const BrushWitness& w) {
    WitnessCheck check;
    auto add = [&check](const std::string& clause) {
        if (std::find(check.violations.begin(), check.violations.end(), clause) ==
            check.violations.end())
            check.violations.push_back(clause);
    };

    if (w.orientation.graph() != g) {
        add("host mismatch");
        return check;
    }
    if (!w.orientation.full())
        add("not full");
    if (!is_acyclic(w.orientation))
        add("not acyclic");

    const int m = g.edge_count();
    std::vector<char> covered(static_cast<size_t>(m), 0);
    for (const auto& path : w.paths) {
        if (path.size() < 2) {
            add("empty path");
            continue;
        }
        std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
        for (int v : path) {
            if (v < 0 || v >= g.vertex_count()) {
                add("invalid step");
                break;
            }
            if (seen[static_cast<size_t>(v)])
                add("repeated vertex");
            seen[static_cast<size_t>(v)] = 1;
        }
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            EdgeId e = g.edge_between(path[i], path[i + 1]);
            if (e == -1 || !w.orientation.oriented(e) ||
                w.orientation.tail(e) != path[i]) {
                add("invalid step");
                continue;
            }
            covered[static_cast<size_t>(e)] = 1;
        }
    }
    if (std::find(covered.begin(), covered.end(), 0) != covered.end())
        add("uncovered edge");
    return check;
}

} // namespace zfb
