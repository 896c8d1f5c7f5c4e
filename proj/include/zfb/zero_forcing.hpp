#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "zfb/budget.hpp"
#include "zfb/graph.hpp"

namespace zfb {

/// An initial vertex set plus the ordered force events realizing a full
/// coloring: replaying events in order, each forced vertex is the unique
/// uncolored neighbor of its (colored) forcer at that moment.
struct ForcingProcess {
    std::vector<int> initial;                 // sorted
    std::vector<std::pair<int, int>> events;  // (forcer, forced)
};

enum class Worklist { queue, stack };

/// Fixed point of the color-change rule: a colored vertex with exactly one
/// uncolored neighbor colors it. The result does not depend on the worklist
/// discipline; both are exposed so that can be tested. Returns the colored
/// set sorted ascending.
std::vector<int> closure(const Graph& g, const std::vector<int>& start,
                         Worklist kind = Worklist::queue);

bool is_zero_forcing(const Graph& g, const std::vector<int>& s);

/// Exact Z(g) by exhaustive subset search, sizes ascending and sets in
/// lexicographic order within a size; the witness is the first forcing set
/// encountered, hence the lexicographically smallest minimum one.
/// Intended for small graphs; throws BudgetExceeded when a budget runs out
/// and EmptyGraph for n = 0 (Z is undefined there; Z(K_1) = 1).
std::pair<int, std::vector<int>> zero_forcing_number(const Graph& g,
                                                     const Budget& budget = {});

/// Deterministic recorded process for a given forcing set: repeatedly scan
/// colored vertices in ascending index and apply the first available force.
/// Throws NotForcing if s is not a zero forcing set.
ForcingProcess record_process(const Graph& g, const std::vector<int>& s);

/// Same contract, but each step picks uniformly among all available
/// (forcer, forced) pairs. Used to sample the space of valid processes.
ForcingProcess record_process_random(const Graph& g, const std::vector<int>& s,
                                     std::mt19937_64& rng);

/// Replays the process and reports every violated invariant clause
/// (empty result = valid).
std::vector<std::string> validate_process(const Graph& g, const ForcingProcess& p);

} // namespace zfb
