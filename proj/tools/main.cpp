#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "zfb/brushing.hpp"
#include "zfb/corpus.hpp"
#include "zfb/family.hpp"
#include "zfb/formats.hpp"
#include "zfb/transfer.hpp"
#include "zfb/witness_io.hpp"
#include "zfb/zero_forcing.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw zfb::Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

zfb::Graph read_graph(const std::string& path, const std::string& format) {
    std::string text = read_input(path);
    if (format == "edgelist")
        return zfb::parse_edgelist(text);
    // graph6: first non-empty line
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty() && line != "\r")
            return zfb::parse_graph6(line);
    throw zfb::MalformedGraph6("no graph in input");
}

void write_output(const std::string& path, const std::string& contents) {
    if (path.empty() || path == "-") {
        std::cout << contents;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw zfb::Error("cannot write '" + path + "'");
    out << contents;
}

std::string format_set(const std::vector<int>& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ", ";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

struct GraphInput {
    std::string path;
    std::string format = "graph6";

    void attach(CLI::App* cmd) {
        cmd->add_option("input", path, "graph file, or - for stdin")->required();
        cmd->add_option("--format", format, "input format")
            ->check(CLI::IsMember({"graph6", "edgelist"}));
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph parameter toolkit: zero forcing, brushing, line-graph transfer"};
    app.require_subcommand(1);

    GraphInput zf_in, brush_in, lg_in, tr_in;

    auto* zf_cmd = app.add_subcommand("zf", "exact zero forcing number with witness");
    zf_in.attach(zf_cmd);

    auto* brush_cmd = app.add_subcommand("brush", "exact brushing number with witness");
    brush_in.attach(brush_cmd);

    auto* lg_cmd = app.add_subcommand("linegraph", "line graph in graph6");
    lg_in.attach(lg_cmd);
    bool lg_map = false;
    lg_cmd->add_flag("--map", lg_map, "also print the vertex-to-edge mapping");

    auto* tr_cmd = app.add_subcommand("transfer",
                                      "derive brush and forcing certificates from L(G)");
    tr_in.attach(tr_cmd);
    std::string tr_out, tr_dot;
    int tr_random = 0;
    std::uint64_t tr_seed = 1;
    tr_cmd->add_option("--out", tr_out, "witness JSON destination (default stdout)");
    tr_cmd->add_option("--dot", tr_dot, "write the extended orientation as DOT");
    tr_cmd->add_option("--random-process", tr_random,
                       "also replay N randomized valid processes");
    tr_cmd->add_option("--seed", tr_seed, "seed for --random-process");

    auto* corpus_cmd = app.add_subcommand("corpus", "run the full pipeline over a corpus");
    std::string corpus_input, corpus_out;
    corpus_cmd->add_option("input", corpus_input,
                           "graph6 file (one graph per line), - for stdin, or a "
                           "family spec like path:n=6 or random_gnp:n=8,p=0.5,seed=1")
        ->required();
    long long budget_ms = 0;
    corpus_cmd->add_option("--budget", budget_ms, "wall-clock budget per graph per solver, ms");
    int jobs = 1;
    corpus_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    corpus_cmd->add_option("--out", corpus_out,
                           "report destination; .csv extension selects CSV");
    bool no_timings = false;
    corpus_cmd->add_flag("--no-timings", no_timings,
                         "zero the timing cells (byte-stable reports)");
    int brush_max_edges = 12;
    corpus_cmd->add_option("--brush-max-edges", brush_max_edges,
                           "exact B(G) only up to this many edges per component");
    int corpus_random = 0;
    corpus_cmd->add_option("--random-processes", corpus_random,
                           "extra randomized processes per graph");
    std::uint64_t corpus_seed = 1;
    corpus_cmd->add_option("--seed", corpus_seed, "seed for --random-processes");

    auto* verify_cmd = app.add_subcommand("verify", "re-check a serialized witness");
    std::string verify_path;
    verify_cmd->add_option("witness", verify_path, "witness JSON file, or - for stdin")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*zf_cmd) {
            zfb::Graph g = read_graph(zf_in.path, zf_in.format);
            auto [k, witness] = zfb::zero_forcing_number(g);
            std::cout << "Z = " << k << "\n";
            std::cout << "witness = " << format_set(witness) << "\n";
            return 0;
        }
        if (*brush_cmd) {
            zfb::Graph g = read_graph(brush_in.path, brush_in.format);
            if (g.edge_count() == 0) {
                std::cout << "B = 0 (degenerate: no edges)\n";
                return 0;
            }
            auto [b, witness] = zfb::brushing_number(g);
            std::cout << "B = " << b << "\n";
            std::cout << "orientation:";
            for (auto [t, h] : witness.orientation.directed_edges())
                std::cout << ' ' << t << "->" << h;
            std::cout << "\n";
            for (const auto& path : witness.paths) {
                std::cout << "path:";
                for (int v : path)
                    std::cout << ' ' << v;
                std::cout << "\n";
            }
            return 0;
        }
        if (*lg_cmd) {
            zfb::Graph g = read_graph(lg_in.path, lg_in.format);
            zfb::LineGraph lg = zfb::line_graph(g);
            std::cout << zfb::write_graph6(lg.graph) << "\n";
            if (lg_map)
                for (size_t i = 0; i < lg.vertex_edge.size(); ++i) {
                    auto [u, v] = g.endpoints(lg.vertex_edge[i]);
                    std::cout << i << ": " << u << " " << v << "\n";
                }
            return 0;
        }
        if (*tr_cmd) {
            zfb::Graph g = read_graph(tr_in.path, tr_in.format);
            zfb::TransferResult result = zfb::transfer(g);
            write_output(tr_out, zfb::witness_to_json(result));
            if (!tr_dot.empty())
                write_output(tr_dot, zfb::to_dot(result.full));
            if (tr_random > 0) {
                std::mt19937_64 rng(tr_seed);
                zfb::LineGraph lg = zfb::line_graph(g);
                auto z = zfb::zero_forcing_number(lg.graph).second;
                for (int i = 0; i < tr_random; ++i) {
                    auto proc = zfb::record_process_random(lg.graph, z, rng);
                    zfb::transfer_with_process(g, proc);
                }
                std::cerr << "random processes: " << tr_random << " ok\n";
            }
            return 0;
        }
        if (*corpus_cmd) {
            std::vector<zfb::Graph> graphs;
            if (corpus_input == "-" || std::filesystem::exists(corpus_input))
                graphs = zfb::parse_graph6_file(read_input(corpus_input));
            else
                graphs.push_back(zfb::generate_family_spec(corpus_input));

            zfb::CorpusOptions opts;
            if (budget_ms > 0)
                opts.budget = std::chrono::milliseconds(budget_ms);
            opts.jobs = jobs;
            opts.brush_exact_max_edges = brush_max_edges;
            opts.random_processes = corpus_random;
            opts.random_seed = corpus_seed;

            zfb::CorpusReport report = zfb::run_corpus(graphs, opts);
            bool csv = corpus_out.size() > 4 &&
                       corpus_out.substr(corpus_out.size() - 4) == ".csv";
            write_output(corpus_out, csv ? zfb::report_to_csv(report, !no_timings)
                                         : zfb::report_to_json(report, !no_timings));
            if (report.violation_count > 0 || report.error_count > 0) {
                std::cerr << report.violation_count << " violation(s), "
                          << report.error_count << " error(s)\n";
                return 1;
            }
            return 0;
        }
        if (*verify_cmd) {
            auto clauses = zfb::verify_witness_json(read_input(verify_path));
            if (clauses.empty()) {
                std::cout << "ok\n";
                return 0;
            }
            for (const auto& clause : clauses)
                std::cout << "violated: " << clause << "\n";
            return 1;
        }
    } catch (const zfb::DiagnosticError& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << "bundle: " << e.bundle << "\n";
        return 1;
    } catch (const zfb::BadParams& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const zfb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
