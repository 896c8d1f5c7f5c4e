#include "zfb/family.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace zfb {

namespace {

int get_int(const std::map<std::string, std::string>& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end())
        throw BadParams("missing parameter '" + key + "'");
    try {
        size_t used = 0;
        int v = std::stoi(it->second, &used);
        if (used != it->second.size())
            throw BadParams("bad integer for '" + key + "'");
        return v;
    } catch (const BadParams&) {
        throw;
    } catch (const std::exception&) {
        throw BadParams("bad integer for '" + key + "'");
    }
}

double get_double(const std::map<std::string, std::string>& params,
                  const std::string& key) {
    auto it = params.find(key);
    if (it == params.end())
        throw BadParams("missing parameter '" + key + "'");
    try {
        size_t used = 0;
        double v = std::stod(it->second, &used);
        if (used != it->second.size())
            throw BadParams("bad number for '" + key + "'");
        return v;
    } catch (const BadParams&) {
        throw;
    } catch (const std::exception&) {
        throw BadParams("bad number for '" + key + "'");
    }
}

std::uint64_t get_u64(const std::map<std::string, std::string>& params,
                      const std::string& key) {
    auto it = params.find(key);
    if (it == params.end())
        throw BadParams("missing parameter '" + key + "'");
    try {
        size_t used = 0;
        auto v = std::stoull(it->second, &used);
        if (used != it->second.size())
            throw BadParams("bad integer for '" + key + "'");
        return v;
    } catch (const BadParams&) {
        throw;
    } catch (const std::exception&) {
        throw BadParams("bad integer for '" + key + "'");
    }
}

} // namespace

Graph generate_family(const std::string& name,
                      const std::map<std::string, std::string>& params) {
    std::vector<std::pair<int, int>> edges;
    if (name == "path") {
        int n = get_int(params, "n");
        if (n < 1)
            throw BadParams("path needs n >= 1");
        for (int i = 0; i + 1 < n; ++i)
            edges.emplace_back(i, i + 1);
        return Graph::from_edges(n, std::move(edges));
    }
    if (name == "cycle") {
        int n = get_int(params, "n");
        if (n < 3)
            throw BadParams("cycle needs n >= 3");
        for (int i = 0; i < n; ++i)
            edges.emplace_back(i, (i + 1) % n);
        return Graph::from_edges(n, std::move(edges));
    }
    if (name == "complete") {
        int n = get_int(params, "n");
        if (n < 1)
            throw BadParams("complete needs n >= 1");
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                edges.emplace_back(u, v);
        return Graph::from_edges(n, std::move(edges));
    }
    if (name == "star") {
        int n = get_int(params, "n");
        if (n < 2)
            throw BadParams("star needs n >= 2");
        for (int v = 1; v < n; ++v)
            edges.emplace_back(0, v);
        return Graph::from_edges(n, std::move(edges));
    }
    if (name == "complete_bipartite") {
        int a = get_int(params, "a"), b = get_int(params, "b");
        if (a < 1 || b < 1)
            throw BadParams("complete_bipartite needs a, b >= 1");
        for (int u = 0; u < a; ++u)
            for (int v = 0; v < b; ++v)
                edges.emplace_back(u, a + v);
        return Graph::from_edges(a + b, std::move(edges));
    }
    if (name == "random_gnp") {
        int n = get_int(params, "n");
        double p = get_double(params, "p");
        std::uint64_t seed = get_u64(params, "seed");
        if (n < 0 || p < 0.0 || p > 1.0)
            throw BadParams("random_gnp needs n >= 0 and p in [0, 1]");
        // Explicit bit-to-double conversion: uniform_real_distribution is not
        // pinned down by the standard, and corpora must match across builds.
        std::mt19937_64 rng(seed);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                double r = static_cast<double>(rng() >> 11) * 0x1.0p-53;
                if (r < p)
                    edges.emplace_back(u, v);
            }
        return Graph::from_edges(n, std::move(edges));
    }
    throw BadParams("unknown family '" + name + "'");
}

Graph generate_family_spec(const std::string& spec) {
    std::string name = spec;
    std::map<std::string, std::string> params;
    if (auto colon = spec.find(':'); colon != std::string::npos) {
        name = spec.substr(0, colon);
        std::string rest = spec.substr(colon + 1);
        size_t start = 0;
        while (start <= rest.size()) {
            size_t end = rest.find(',', start);
            if (end == std::string::npos)
                end = rest.size();
            std::string item = rest.substr(start, end - start);
            if (!item.empty()) {
                auto eq = item.find('=');
                if (eq == std::string::npos)
                    throw BadParams("expected key=value, got '" + item + "'");
                params[item.substr(0, eq)] = item.substr(eq + 1);
            }
            start = end + 1;
        }
    }
    return generate_family(name, params);
}

} // namespace zfb
