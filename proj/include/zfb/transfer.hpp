#pragma once

#include <cstdint>
#include <vector>

#include "zfb/brushing.hpp"
#include "zfb/budget.hpp"
#include "zfb/graph.hpp"
#include "zfb/orientation.hpp"
#include "zfb/zero_forcing.hpp"

namespace zfb {

/// Forcing chains of a process on L(g), as sequences of edge ids of g.
/// Chains of length >= 2 come first (their relative order follows the
/// initial set's order), singletons after; long_count is the split.
struct ChainDecomposition {
    std::vector<std::vector<EdgeId>> chains;
    int long_count = 0;

    int chain_count() const { return static_cast<int>(chains.size()); }
};

/// Every artifact of one pipeline run, with the assertion outcomes that
/// were checked along the way (all true for a result that was returned).
struct TransferResult {
    Graph graph;
    std::vector<EdgeId> z_edges;        // initial set of the L(g) process
    ChainDecomposition chains;
    Orientation partial;                // chain-rule orientation of the long-chain edges
    Orientation full;                   // extended over the remaining edges
    VertexOrder topo;                   // topological order used for the extension
    BrushWitness brush;                 // |paths| = |z_edges|
    std::vector<int> y;                 // zero forcing set of g, |y| <= |z_edges|
    ForcingProcess y_process;

    struct Assertions {
        bool chains_induced = false;
        bool rules_consistent = false;
        bool partial_acyclic = false;
        bool full_acyclic = false;
        bool order_preserved = false;
        bool brush_witness_valid = false;
        bool paths_count_equals_z = false;
        bool structural_bullets = false;
        bool y_size_within_bound = false;
        bool y_forcing_valid = false;

        bool all() const {
            return chains_induced && rules_consistent && partial_acyclic &&
                   full_acyclic && order_preserved && brush_witness_valid &&
                   paths_count_equals_z && structural_bullets &&
                   y_size_within_bound && y_forcing_valid;
        }
    } assertions;
};

/// Follows the forces relation from each initial vertex of proc. Verifies
/// that every chain is an induced path in lg and throws NotInducedPath
/// (with a reproducer bundle) otherwise.
ChainDecomposition build_chains(const LineGraph& lg, const ForcingProcess& proc);

/// The two-rule partial orientation: edge at position j of a chain gets its
/// tail at the vertex shared with the previous edge (j >= 2) and its head at
/// the vertex shared with the next edge (j <= length-1). Only edges in
/// chains of length >= 2 are directed. Throws ConflictingRules if the rules
/// ever disagree.
Orientation orient_from_chains(const Graph& g, const ChainDecomposition& cd);

/// Topological order of the partial orientation. A cycle here would
/// contradict the acyclicity guarantee of the chain construction, so it is
/// raised as CycleInOrientation with a full reproducer bundle.
VertexOrder certify_acyclic(const Orientation& partial, const ChainDecomposition& cd);

/// Directs every unoriented edge from its earlier endpoint in order.
/// Throws InvalidOrder if order is not a topological order of partial
/// covering all vertices; asserts that order remains topological afterwards.
Orientation extend_orientation(const Orientation& partial, const VertexOrder& order);

/// One directed path per chain: the edge set of each chain traced through
/// its shared endpoints, directed per the full orientation; the paths cover
/// every edge. Verified before returning (WitnessInvalid otherwise).
BrushWitness derive_brush_witness(const Graph& g, const ChainDecomposition& cd,
                                  const Orientation& full);

/// The forcing-set construction: first asserts the structural properties of
/// the full orientation (an in-degree-0 vertex has all out-edges initial; any
/// other vertex has at most one non-initial out-edge; PropertyViolated
/// otherwise), then collects Y -- an in-degree-0 vertex joins Y with all its
/// out-neighbors except the one latest in topological order, every other
/// vertex contributes its out-neighbors along initial edges. Builds the
/// forcing process along the topological order and validates it by replay
/// (ForcingReplayFailed otherwise), checking |Y| <= |z_edges| and
/// closure(g, Y) = V(g).
std::pair<std::vector<int>, ForcingProcess> build_Y(const Graph& g,
                                                    const Orientation& full,
                                                    const std::vector<EdgeId>& z_edges);

/// Full pipeline on a connected graph with n >= 2: minimum zero forcing set
/// of L(g), recorded process, chains, both orientations, brush witness and
/// forcing set, every intermediate assertion enabled. The result certifies
/// B(g) <= Z(L(g)) and Z(g) <= Z(L(g)) constructively.
TransferResult transfer(const Graph& g, const Budget& budget = {});

/// Same pipeline from an explicit process on L(g) (the initial set need not
/// be minimum); used for randomized process sampling.
TransferResult transfer_with_process(const Graph& g, const ForcingProcess& proc);

} // namespace zfb
