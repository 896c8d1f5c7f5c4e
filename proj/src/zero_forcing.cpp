#include "zfb/zero_forcing.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <numeric>

namespace zfb {

namespace {

// Closure is the innermost loop of the exhaustive solver, so the colored set
// keeps a per-vertex uncolored-neighbor counter updated on every coloring.
struct ClosureState {
    std::vector<char> colored;
    std::vector<int> uncolored_neighbors;

    explicit ClosureState(const Graph& g)
        : colored(static_cast<size_t>(g.vertex_count()), 0),
          uncolored_neighbors(static_cast<size_t>(g.vertex_count())) {
        for (int v = 0; v < g.vertex_count(); ++v)
            uncolored_neighbors[static_cast<size_t>(v)] = g.degree(v);
    }

    bool color(const Graph& g, int v, std::vector<int>& worklist) {
        if (colored[static_cast<size_t>(v)])
            return false;
        colored[static_cast<size_t>(v)] = 1;
        for (int w : g.neighbors(v)) {
            --uncolored_neighbors[static_cast<size_t>(w)];
            if (colored[static_cast<size_t>(w)] &&
                uncolored_neighbors[static_cast<size_t>(w)] == 1)
                worklist.push_back(w);
        }
        if (uncolored_neighbors[static_cast<size_t>(v)] == 1)
            worklist.push_back(v);
        return true;
    }
};

int sole_uncolored_neighbor(const Graph& g, const ClosureState& st, int v) {
    int found = -1;
    for (int w : g.neighbors(v))
        if (!st.colored[static_cast<size_t>(w)]) {
            if (found != -1)
                return -1;
            found = w;
        }
    return found;
}

// 64-bit adjacency masks for the solver's hot path (line graphs and corpus
// graphs all fit; anything larger falls back to the generic closure).
std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint64_t> adj(static_cast<size_t>(g.vertex_count()), 0);
    for (auto [u, v] : g.edges()) {
        adj[static_cast<size_t>(u)] |= std::uint64_t{1} << v;
        adj[static_cast<size_t>(v)] |= std::uint64_t{1} << u;
    }
    return adj;
}

std::uint64_t closure_mask(const std::vector<std::uint64_t>& adj, int n,
                           std::uint64_t colored) {
    for (bool changed = true; changed;) {
        changed = false;
        std::uint64_t pending = colored;
        while (pending) {
            int u = std::countr_zero(pending);
            pending &= pending - 1;
            std::uint64_t open = adj[static_cast<size_t>(u)] & ~colored;
            if (open != 0 && (open & (open - 1)) == 0) {
                colored |= open;
                changed = true;
            }
        }
        if (colored == (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1))
            break;
    }
    return colored;
}

bool next_combination(std::vector<int>& c, int n) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[static_cast<size_t>(i)] < n - k + i) {
            ++c[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

std::vector<int> closure(const Graph& g, const std::vector<int>& start, Worklist kind) {
    ClosureState st(g);
    std::vector<int> worklist;
    for (int v : start)
        st.color(g, v, worklist);

    std::deque<int> queue(worklist.begin(), worklist.end());
    worklist.clear();
    while (!queue.empty()) {
        int u;
        if (kind == Worklist::queue) {
            u = queue.front();
            queue.pop_front();
        } else {
            u = queue.back();
            queue.pop_back();
        }
        int w = sole_uncolored_neighbor(g, st, u);
        if (w == -1)
            continue;
        st.color(g, w, worklist);
        for (int x : worklist)
            queue.push_back(x);
        worklist.clear();
    }

    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (st.colored[static_cast<size_t>(v)])
            out.push_back(v);
    return out;
}

bool is_zero_forcing(const Graph& g, const std::vector<int>& s) {
    return static_cast<int>(closure(g, s).size()) == g.vertex_count();
}

std::pair<int, std::vector<int>> zero_forcing_number(const Graph& g, const Budget& budget) {
    const int n = g.vertex_count();
    if (n == 0)
        throw EmptyGraph("zero forcing number undefined for the empty graph");
    BudgetClock clock(budget);

    const bool small = n <= 64;
    std::vector<std::uint64_t> adj;
    std::uint64_t all = 0;
    if (small) {
        adj = adjacency_masks(g);
        all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    }

    for (int k = 1; k <= n; ++k) {
        std::vector<int> subset(static_cast<size_t>(k));
        std::iota(subset.begin(), subset.end(), 0);
        do {
            clock.tick("zero_forcing_number");
            if (small) {
                std::uint64_t mask = 0;
                for (int v : subset)
                    mask |= std::uint64_t{1} << v;
                if (closure_mask(adj, n, mask) == all)
                    return {k, subset};
            } else if (is_zero_forcing(g, subset)) {
                return {k, subset};
            }
        } while (next_combination(subset, n));
    }
    throw Error("zero_forcing_number: no forcing set found"); // k = n always forces
}

ForcingProcess record_process(const Graph& g, const std::vector<int>& s) {
    if (!is_zero_forcing(g, s))
        throw NotForcing("record_process: not a zero forcing set");

    ForcingProcess proc;
    proc.initial = s;
    std::sort(proc.initial.begin(), proc.initial.end());

    ClosureState st(g);
    std::vector<int> sink;
    for (int v : proc.initial)
        st.color(g, v, sink);

    for (;;) {
        bool fired = false;
        for (int u = 0; u < g.vertex_count() && !fired; ++u) {
            if (!st.colored[static_cast<size_t>(u)])
                continue;
            int w = sole_uncolored_neighbor(g, st, u);
            if (w == -1)
                continue;
            st.color(g, w, sink);
            proc.events.emplace_back(u, w);
            fired = true;
        }
        if (!fired)
            break;
    }
    return proc;
}

ForcingProcess record_process_random(const Graph& g, const std::vector<int>& s,
                                     std::mt19937_64& rng) {
    if (!is_zero_forcing(g, s))
        throw NotForcing("record_process_random: not a zero forcing set");

    ForcingProcess proc;
    proc.initial = s;
    std::sort(proc.initial.begin(), proc.initial.end());

    ClosureState st(g);
    std::vector<int> sink;
    for (int v : proc.initial)
        st.color(g, v, sink);

    for (;;) {
        std::vector<std::pair<int, int>> available;
        for (int u = 0; u < g.vertex_count(); ++u) {
            if (!st.colored[static_cast<size_t>(u)])
                continue;
            int w = sole_uncolored_neighbor(g, st, u);
            if (w != -1)
                available.emplace_back(u, w);
        }
        if (available.empty())
            break;
        auto [u, w] = available[static_cast<size_t>(rng() % available.size())];
        st.color(g, w, sink);
        proc.events.emplace_back(u, w);
    }
    return proc;
}

std::vector<std::string> validate_process(const Graph& g, const ForcingProcess& p) {
    std::vector<std::string> bad;
    const int n = g.vertex_count();
    std::vector<char> colored(static_cast<size_t>(n), 0);
    std::vector<char> has_forced(static_cast<size_t>(n), 0);

    for (int v : p.initial) {
        if (v < 0 || v >= n) {
            bad.push_back("initial vertex out of range");
            return bad;
        }
        colored[static_cast<size_t>(v)] = 1;
    }
    for (auto [u, w] : p.events) {
        if (u < 0 || u >= n || w < 0 || w >= n) {
            bad.push_back("event vertex out of range");
            return bad;
        }
        if (!colored[static_cast<size_t>(u)])
            bad.push_back("forcer not colored");
        if (colored[static_cast<size_t>(w)])
            bad.push_back(std::find(p.initial.begin(), p.initial.end(), w) !=
                                  p.initial.end()
                              ? "initial vertex forced"
                              : "vertex forced twice");
        if (has_forced[static_cast<size_t>(u)])
            bad.push_back("vertex forces twice");
        int open = -1;
        bool unique = true;
        for (int x : g.neighbors(u))
            if (!colored[static_cast<size_t>(x)]) {
                if (open != -1)
                    unique = false;
                open = x;
            }
        if (open != w || !unique)
            bad.push_back("forced vertex is not the unique uncolored neighbor");
        colored[static_cast<size_t>(w)] = 1;
        has_forced[static_cast<size_t>(u)] = 1;
        if (!bad.empty())
            return bad;
    }
    if (std::count(colored.begin(), colored.end(), 1) != n)
        bad.push_back("initial plus forced vertices do not cover the graph");
    return bad;
}

} // namespace zfb
