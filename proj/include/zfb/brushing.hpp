#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zfb/budget.hpp"
#include "zfb/orientation.hpp"

namespace zfb {

/// Certificate that B(host) <= paths.size(): a full acyclic orientation
/// together with directed paths jointly covering every directed edge.
struct BrushWitness {
    Orientation orientation;
    std::vector<std::vector<int>> paths; // vertex sequences, each of length >= 2
};

struct WitnessCheck {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Exact minimum number of directed paths covering every arc of a full
/// acyclic orientation at least once, with a witness. Solved as a minimum
/// flow with lower bound 1 per arc (auxiliary source/sink arcs to every
/// vertex, standard lower-bounds reduction to max flow), then decomposed
/// into paths by repeatedly following the lowest-indexed positive-flow arc.
/// Throws NotFull / NotAcyclic / NoEdges on bad inputs.
std::pair<int, std::vector<std::vector<int>>> min_path_edge_cover(const Orientation& o);

/// Exact B(g): minimum of min_path_edge_cover over all acyclic orientations,
/// enumerated as direction vectors 0..2^m-1 in binary order; the witness
/// comes from the first optimal orientation. Throws NoEdges when m = 0.
std::pair<int, BrushWitness> brushing_number(const Graph& g, const Budget& budget = {});

/// Checks every BrushWitness invariant against g; all violated clauses are
/// reported ("host mismatch", "not full", "not acyclic", "empty path",
/// "invalid step", "repeated vertex", "uncovered edge").
WitnessCheck verify_brush_witness(const Graph& g, const BrushWitness& w);

} // namespace zfb
