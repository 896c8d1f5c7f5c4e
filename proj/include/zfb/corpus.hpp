#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zfb/budget.hpp"
#include "zfb/graph.hpp"

namespace zfb {

struct CorpusOptions {
    /// Wall-clock budget per graph per solver.
    std::optional<std::chrono::milliseconds> budget;
    /// Worker threads; results are merged in input order regardless.
    int jobs = 1;
    /// Exact brushing is attempted only up to this many edges per
    /// component; beyond it the transfer witness stands in as an
    /// upper-bound certificate and the B cell stays unknown.
    int brush_exact_max_edges = 12;
    /// Extra randomized processes per graph fed through the pipeline.
    int random_processes = 0;
    std::uint64_t random_seed = 1;
};

struct CorpusRow {
    std::string graph6;
    int n = 0;
    int m = 0;
    int component_count = 0;
    int isolated_vertices = 0;
    std::optional<int> z;            // exact Z(G), isolated vertices included
    std::optional<int> z_line;       // exact Z(L(G)); empty when G has no edges
    std::optional<int> b;            // exact B(G) when within budget
    bool b_degenerate = false;       // m = 0: B reported as 0 by convention
    std::optional<int> y_size;       // summed |Y| over components
    std::optional<int> transfer_paths;
    bool verified = false;
    std::vector<std::string> violations;   // failed theorem/invariant clauses
    std::vector<std::string> bundles;      // diagnostic reproducers, if any
    std::optional<std::string> error;      // per-row failure (budget, parse, ...)
    std::int64_t t_z_ms = 0;
    std::int64_t t_z_line_ms = 0;
    std::int64_t t_b_ms = 0;
    std::int64_t t_transfer_ms = 0;
};

struct CorpusReport {
    std::vector<CorpusRow> rows;
    int violation_count = 0;
    int error_count = 0;
    std::optional<int> max_gap_zl_minus_b;
    std::optional<int> max_gap_zl_minus_z;
};

/// Runs the per-graph pipeline (component decomposition, isolated-vertex
/// stripping, exact solvers, transfer with all verifiers) over every input
/// graph, in input order. Row-level errors are recorded, never thrown.
CorpusReport run_corpus(const std::vector<Graph>& inputs, const CorpusOptions& opts);

/// Fixed field order per docs/report_schema.md. with_timings = false zeroes
/// every timing cell, which makes reports byte-comparable across runs.
std::string report_to_json(const CorpusReport& r, bool with_timings = true);
std::string report_to_csv(const CorpusReport& r, bool with_timings = true);

} // namespace zfb
