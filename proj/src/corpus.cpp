#include "zfb/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "zfb/brushing.hpp"
#include "zfb/formats.hpp"
#include "zfb/transfer.hpp"
#include "zfb/witness_io.hpp"
#include "zfb/zero_forcing.hpp"

namespace zfb {

namespace {

using ordered_json = nlohmann::ordered_json;

std::int64_t ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

class StopWatch {
public:
    explicit StopWatch(std::int64_t& cell) : cell_(cell), t0_(std::chrono::steady_clock::now()) {}
    ~StopWatch() { cell_ += ms_since(t0_); }

private:
    std::int64_t& cell_;
    std::chrono::steady_clock::time_point t0_;
};

CorpusRow run_one(const Graph& g, const CorpusOptions& opts) {
    CorpusRow row;
    row.graph6 = write_graph6(g);
    row.n = g.vertex_count();
    row.m = g.edge_count();

    Budget budget{opts.budget, std::nullopt};
    try {
        auto comps = components(g);
        row.component_count = static_cast<int>(comps.size());
        for (const auto& c : comps)
            if (c.graph.vertex_count() == 1)
                ++row.isolated_vertices;

        // Z(G): exact per component; an isolated vertex contributes 1.
        // Z(L(G)) and B(G) ignore isolated vertices entirely.
        int z_total = 0;
        {
            StopWatch sw(row.t_z_ms);
            for (const auto& c : comps)
                z_total += zero_forcing_number(c.graph, budget).first;
        }
        row.z = z_total;

        if (row.m == 0) {
            row.b = 0;
            row.b_degenerate = true;
            row.verified = true;
            return row;
        }

        int z_line_total = 0, y_total = 0, paths_total = 0;
        std::vector<TransferResult> transfers;
        {
            StopWatch sw(row.t_transfer_ms);
            for (const auto& c : comps) {
                if (c.graph.edge_count() == 0)
                    continue;
                TransferResult tr = transfer(c.graph, budget);
                z_line_total += static_cast<int>(tr.z_edges.size());
                y_total += static_cast<int>(tr.y.size());
                paths_total += static_cast<int>(tr.brush.paths.size());
                if (!tr.assertions.all())
                    row.violations.push_back("transfer assertion failed");
                transfers.push_back(std::move(tr));
            }
        }
        row.z_line = z_line_total;
        row.y_size = y_total;
        row.transfer_paths = paths_total;
        row.t_z_line_ms = row.t_transfer_ms; // the transfer pass computes Z(L(G))

        bool brush_within_reach = true;
        for (const auto& c : comps)
            if (c.graph.edge_count() > opts.brush_exact_max_edges)
                brush_within_reach = false;
        if (brush_within_reach) {
            try {
                StopWatch sw(row.t_b_ms);
                int b_total = 0;
                for (const auto& c : comps)
                    if (c.graph.edge_count() > 0)
                        b_total += brushing_number(c.graph, budget).first;
                row.b = b_total;
            } catch (const BudgetExceeded&) {
                row.b.reset();
            }
        }

        if (opts.random_processes > 0) {
            std::mt19937_64 rng(opts.random_seed);
            for (const auto& c : comps) {
                if (c.graph.edge_count() == 0)
                    continue;
                LineGraph lg = line_graph(c.graph);
                auto z = zero_forcing_number(lg.graph, budget).second;
                for (int i = 0; i < opts.random_processes; ++i) {
                    auto proc = record_process_random(lg.graph, z, rng);
                    transfer_with_process(c.graph, proc);
                }
            }
        }

        // Theorem checks over the exact cells.
        if (*row.z > z_line_total + row.isolated_vertices)
            row.violations.push_back("Z(G) exceeds Z(L(G)) plus isolated vertices");
        if (row.b && *row.b > z_line_total)
            row.violations.push_back("B(G) exceeds Z(L(G))");
        if (paths_total != z_line_total)
            row.violations.push_back("witness path count differs from Z(L(G))");
        if (y_total > z_line_total)
            row.violations.push_back("|Y| exceeds Z(L(G))");
        for (const auto& tr : transfers)
            if (auto check = verify_brush_witness(tr.graph, tr.brush); !check.ok())
                for (const auto& clause : check.violations)
                    row.violations.push_back("brush witness: " + clause);

        row.verified = row.violations.empty();
    } catch (const DiagnosticError& e) {
        row.error = e.what();
        row.violations.push_back(e.what());
        row.bundles.push_back(e.bundle);
        row.verified = false;
    } catch (const Error& e) {
        row.error = e.what();
        row.verified = false;
    }
    return row;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

CorpusReport run_corpus(const std::vector<Graph>& inputs, const CorpusOptions& opts) {
    CorpusReport report;
    report.rows.resize(inputs.size());

    const int jobs = std::max(1, opts.jobs);
    if (jobs == 1 || inputs.size() <= 1) {
        for (size_t i = 0; i < inputs.size(); ++i)
            report.rows[i] = run_one(inputs[i], opts);
    } else {
        // Workers pull the next input index; each row lands in its input
        // slot, so the merged report never depends on scheduling.
        std::atomic<size_t> cursor{0};
        auto work = [&] {
            for (;;) {
                size_t i = cursor.fetch_add(1);
                if (i >= inputs.size())
                    return;
                report.rows[i] = run_one(inputs[i], opts);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back(work);
        for (auto& th : pool)
            th.join();
    }

    for (const auto& row : report.rows) {
        if (!row.violations.empty())
            ++report.violation_count;
        if (row.error)
            ++report.error_count;
        if (row.z_line) {
            if (row.b) {
                int gap = *row.z_line - *row.b;
                if (!report.max_gap_zl_minus_b || gap > *report.max_gap_zl_minus_b)
                    report.max_gap_zl_minus_b = gap;
            }
            if (row.z && row.isolated_vertices == 0) {
                int gap = *row.z_line - *row.z;
                if (!report.max_gap_zl_minus_z || gap > *report.max_gap_zl_minus_z)
                    report.max_gap_zl_minus_z = gap;
            }
        }
    }
    return report;
}

std::string report_to_json(const CorpusReport& r, bool with_timings) {
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["rows"] = ordered_json::array();
    for (const auto& row : r.rows) {
        ordered_json j;
        j["graph6"] = row.graph6;
        j["n"] = row.n;
        j["m"] = row.m;
        j["components"] = row.component_count;
        j["isolated_vertices"] = row.isolated_vertices;
        j["z"] = row.z ? ordered_json(*row.z) : ordered_json(nullptr);
        j["z_line"] = row.z_line ? ordered_json(*row.z_line) : ordered_json(nullptr);
        j["b"] = row.b ? ordered_json(*row.b) : ordered_json(nullptr);
        j["b_degenerate"] = row.b_degenerate;
        j["y_size"] = row.y_size ? ordered_json(*row.y_size) : ordered_json(nullptr);
        j["transfer_paths"] =
            row.transfer_paths ? ordered_json(*row.transfer_paths) : ordered_json(nullptr);
        j["verified"] = row.verified;
        j["violations"] = row.violations;
        j["bundles"] = row.bundles;
        j["error"] = row.error ? ordered_json(*row.error) : ordered_json(nullptr);
        j["timings_ms"] = {
            {"z", with_timings ? row.t_z_ms : 0},
            {"z_line", with_timings ? row.t_z_line_ms : 0},
            {"b", with_timings ? row.t_b_ms : 0},
            {"transfer", with_timings ? row.t_transfer_ms : 0},
        };
        doc["rows"].push_back(std::move(j));
    }
    doc["summary"] = {
        {"graphs", r.rows.size()},
        {"violations", r.violation_count},
        {"errors", r.error_count},
        {"max_gap_zl_minus_b",
         r.max_gap_zl_minus_b ? ordered_json(*r.max_gap_zl_minus_b) : ordered_json(nullptr)},
        {"max_gap_zl_minus_z",
         r.max_gap_zl_minus_z ? ordered_json(*r.max_gap_zl_minus_z) : ordered_json(nullptr)},
    };
    return doc.dump(2) + "\n";
}

std::string report_to_csv(const CorpusReport& r, bool with_timings) {
    std::ostringstream out;
    out << "graph6,n,m,components,isolated_vertices,z,z_line,b,b_degenerate,"
           "y_size,transfer_paths,verified,violations,error,"
           "t_z_ms,t_z_line_ms,t_b_ms,t_transfer_ms\n";
    auto opt = [](const std::optional<int>& v) {
        return v ? std::to_string(*v) : std::string();
    };
    for (const auto& row : r.rows) {
        std::string violations;
        for (const auto& v : row.violations) {
            if (!violations.empty())
                violations += ';';
            violations += v;
        }
        out << csv_escape(row.graph6) << ',' << row.n << ',' << row.m << ','
            << row.component_count << ',' << row.isolated_vertices << ','
            << opt(row.z) << ',' << opt(row.z_line) << ',' << opt(row.b) << ','
            << (row.b_degenerate ? "true" : "false") << ',' << opt(row.y_size) << ','
            << opt(row.transfer_paths) << ',' << (row.verified ? "true" : "false")
            << ',' << csv_escape(violations) << ','
            << csv_escape(row.error.value_or("")) << ','
            << (with_timings ? row.t_z_ms : 0) << ','
            << (with_timings ? row.t_z_line_ms : 0) << ','
            << (with_timings ? row.t_b_ms : 0) << ','
            << (with_timings ? row.t_transfer_ms : 0) << '\n';
    }
    return out.str();
}

} // namespace zfb
