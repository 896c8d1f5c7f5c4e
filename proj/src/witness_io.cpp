#include "zfb/witness_io.hpp"

#include <algorithm>
#include <set>

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

ordered_json endpoint_pairs(const Graph& g, const std::vector<EdgeId>& ids) {
    ordered_json arr = ordered_json::array();
    for (EdgeId e : ids) {
        auto [u, v] = g.endpoints(e);
        arr.push_back({u, v});
    }
    return arr;
}

} // namespace

std::string witness_to_json(const TransferResult& r) {
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["graph6"] = write_graph6(r.graph);
    doc["z_edges"] = endpoint_pairs(r.graph, r.z_edges);
    doc["chains"] = r.chains.chains;
    doc["partial_orientation"] = orientation_pairs(r.partial);
    doc["full_orientation"] = orientation_pairs(r.full);
    doc["topo_order"] = r.topo;
    doc["paths"] = r.brush.paths;
    doc["y"] = r.y;
    doc["assertions"] = {
        {"chains_induced", r.assertions.chains_induced},
        {"rules_consistent", r.assertions.rules_consistent},
        {"partial_acyclic", r.assertions.partial_acyclic},
        {"full_acyclic", r.assertions.full_acyclic},
        {"order_preserved", r.assertions.order_preserved},
        {"brush_witness_valid", r.assertions.brush_witness_valid},
        {"paths_count_equals_z", r.assertions.paths_count_equals_z},
        {"structural_bullets", r.assertions.structural_bullets},
        {"y_size_within_bound", r.assertions.y_size_within_bound},
        {"y_forcing_valid", r.assertions.y_forcing_valid},
    };
    return doc.dump(2) + "\n";
}

std::vector<std::string> verify_witness_json(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const ordered_json::exception& e) {
        throw Error(std::string("malformed witness document: ") + e.what());
    }

    std::vector<std::string> bad;
    auto add = [&bad](const std::string& clause) {
        if (std::find(bad.begin(), bad.end(), clause) == bad.end())
            bad.push_back(clause);
    };

    Graph g;
    std::vector<EdgeId> z_ids;
    ChainDecomposition cd;
    Orientation partial(Graph{}), full(Graph{});
    std::vector<std::vector<int>> paths;
    std::vector<int> y, topo;
    try {
        g = parse_graph6(doc.at("graph6").get<std::string>());

        for (const auto& pair : doc.at("z_edges")) {
            EdgeId e = g.edge_between(pair.at(0).get<int>(), pair.at(1).get<int>());
            if (e == -1) {
                add("initial edge not in graph");
                return bad;
            }
            z_ids.push_back(e);
        }
        cd.chains = doc.at("chains").get<std::vector<std::vector<int>>>();
        cd.long_count = static_cast<int>(std::count_if(
            cd.chains.begin(), cd.chains.end(),
            [](const std::vector<EdgeId>& c) { return c.size() >= 2; }));
        topo = doc.at("topo_order").get<std::vector<int>>();
        paths = doc.at("paths").get<std::vector<std::vector<int>>>();
        y = doc.at("y").get<std::vector<int>>();

        auto read_orientation = [&g, &add](const ordered_json& arr,
                                           const std::string& label) {
            Orientation o(g);
            for (const auto& pair : arr) {
                int t = pair.at(0).get<int>(), h = pair.at(1).get<int>();
                EdgeId e = g.edge_between(t, h);
                if (e == -1 || o.oriented(e)) {
                    add(label + " orientation invalid");
                    continue;
                }
                o.orient(e, t);
            }
            return o;
        };
        partial = read_orientation(doc.at("partial_orientation"), "partial");
        full = read_orientation(doc.at("full_orientation"), "full");

        for (const auto& [key, value] : doc.at("assertions").items())
            if (!value.get<bool>())
                add("recorded assertion failure: " + key);
    } catch (const ordered_json::exception& e) {
        throw Error(std::string("malformed witness document: ") + e.what());
    }
    if (!bad.empty())
        return bad;

    const int m = g.edge_count();

    // chains partition the edge set and start at the initial edges
    std::vector<int> times_used(static_cast<size_t>(m), 0);
    bool in_range = true;
    for (const auto& chain : cd.chains) {
        if (chain.empty())
            add("empty chain");
        for (EdgeId e : chain) {
            if (e < 0 || e >= m) {
                in_range = false;
                continue;
            }
            ++times_used[static_cast<size_t>(e)];
        }
    }
    if (!in_range)
        add("chain entry out of range");
    else if (std::count(times_used.begin(), times_used.end(), 1) != m)
        add("chains are not a partition of the edge set");
    if (!in_range || !bad.empty())
        return bad;

    std::set<EdgeId> heads;
    for (const auto& chain : cd.chains)
        heads.insert(chain.front());
    if (heads != std::set<EdgeId>(z_ids.begin(), z_ids.end()))
        add("chain heads differ from initial set");

    bool seen_singleton = false;
    for (const auto& chain : cd.chains) {
        if (chain.size() == 1)
            seen_singleton = true;
        else if (seen_singleton)
            add("chain ordering violated");
    }

    LineGraph lg = line_graph(g);
    for (const auto& chain : cd.chains)
        for (size_t i = 0; i < chain.size(); ++i)
            for (size_t j = i + 1; j < chain.size(); ++j)
                if ((lg.graph.edge_between(chain[i], chain[j]) != -1) != (j == i + 1))
                    add("chain not an induced path");
    if (!bad.empty())
        return bad;

    try {
        if (orient_from_chains(g, cd) != partial)
            add("partial orientation differs from the chain rules");
    } catch (const DiagnosticError&) {
        add("chain rules conflict");
    }
    if (!is_acyclic(partial))
        add("partial orientation cyclic");

    if (!full.full())
        add("full orientation not full");
    for (EdgeId e = 0; e < m; ++e)
        if (partial.oriented(e) && full.oriented(e) &&
            full.tail(e) != partial.tail(e))
            add("full orientation does not extend partial");
    if (!is_topological_order(partial, topo))
        add("topo order invalid for partial orientation");
    if (!is_topological_order(full, topo))
        add("topo order invalid for full orientation");

    BrushWitness bw;
    bw.orientation = full;
    bw.paths = paths;
    for (const auto& clause : verify_brush_witness(g, bw).violations)
        add(clause);
    if (paths.size() != cd.chains.size())
        add("path count differs from chain count");
    if (paths.size() != z_ids.size())
        add("path count differs from |Z|");

    if (full.full()) {
        std::vector<char> in_z(static_cast<size_t>(m), 0);
        for (EdgeId e : z_ids)
            in_z[static_cast<size_t>(e)] = 1;
        const auto in_deg = full.in_degrees();
        std::vector<int> outside(static_cast<size_t>(g.vertex_count()), 0);
        for (EdgeId e = 0; e < m; ++e)
            if (!in_z[static_cast<size_t>(e)])
                ++outside[static_cast<size_t>(full.tail(e))];
        for (int u = 0; u < g.vertex_count(); ++u) {
            if (in_deg[static_cast<size_t>(u)] == 0 && outside[static_cast<size_t>(u)] > 0)
                add("structural property violated at a source vertex");
            if (in_deg[static_cast<size_t>(u)] >= 1 && outside[static_cast<size_t>(u)] > 1)
                add("structural property violated at an internal vertex");
        }
    }

    if (y.size() > z_ids.size())
        add("|Y| exceeds |Z|");
    for (int v : y)
        if (v < 0 || v >= g.vertex_count())
            add("Y vertex out of range");
    if (bad.empty() &&
        static_cast<int>(closure(g, y).size()) != g.vertex_count())
        add("Y is not a zero forcing set");

    return bad;
}

} // namespace zfb
