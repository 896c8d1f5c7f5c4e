#include "zfb/formats.hpp"

#include <sstream>
#include <string>

namespace zfb {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

} // namespace

Graph parse_graph6(std::string_view bytes) {
    if (bytes.starts_with(kGraph6Header))
        bytes.remove_prefix(kGraph6Header.size());
    while (bytes.ends_with('\n') || bytes.ends_with('\r'))
        bytes.remove_suffix(1);
    if (bytes.empty())
        throw MalformedGraph6("empty input");
    for (char c : bytes)
        if (c < 63 || c > 126)
            throw MalformedGraph6("byte out of range 63..126");
    if (bytes[0] == 126)
        throw MalformedGraph6("long form (n > 62) not supported");

    const int n = bytes[0] - 63;
    const int bits = n * (n - 1) / 2;
    const size_t expected = 1 + (static_cast<size_t>(bits) + 5) / 6;
    if (bytes.size() != expected)
        throw MalformedGraph6("bad length for n = " + std::to_string(n));

    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++bit) {
            int group = bytes[static_cast<size_t>(1 + bit / 6)] - 63;
            if ((group >> (5 - bit % 6)) & 1)
                edges.emplace_back(row, col);
        }
    // padding bits must be zero
    for (; bit % 6 != 0; ++bit) {
        int group = bytes[static_cast<size_t>(1 + bit / 6)] - 63;
        if ((group >> (5 - bit % 6)) & 1)
            throw MalformedGraph6("nonzero padding");
    }
    return Graph::from_edges(n, std::move(edges));
}

std::string write_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 62)
        throw MalformedGraph6("short form supports n <= 62");
    std::string out(1, static_cast<char>(n + 63));

    std::vector<bool> upper(static_cast<size_t>(n * (n - 1) / 2), false);
    auto cell = [](int row, int col) { return col * (col - 1) / 2 + row; };
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        upper[static_cast<size_t>(cell(u, v))] = true;
    }
    int group = 0, filled = 0;
    for (bool b : upper) {
        group = (group << 1) | (b ? 1 : 0);
        if (++filled == 6) {
            out.push_back(static_cast<char>(group + 63));
            group = 0;
            filled = 0;
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

Graph parse_edgelist(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::pair<int, int>> edges;
    int declared_n = -1;
    bool first_content_line = true;
    int max_index = -1;

    auto parse_int = [](const std::string& tok) {
        size_t used = 0;
        int value;
        try {
            value = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw BadToken("not an integer: '" + tok + "'");
        }
        if (used != tok.size() || value < 0)
            throw BadToken("not a nonnegative integer: '" + tok + "'");
        return value;
    };

    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a))
            continue; // blank line
        if (!(ls >> b) || (ls >> extra))
            throw BadToken("expected two tokens per line: '" + line + "'");
        if (first_content_line && a == "n") {
            declared_n = parse_int(b);
            first_content_line = false;
            continue;
        }
        first_content_line = false;
        int u = parse_int(a);
        int v = parse_int(b);
        if (u == v)
            throw SelfLoop("self-loop at vertex " + std::to_string(u));
        for (auto [x, y] : edges)
            if ((x == std::min(u, v) && y == std::max(u, v)))
                throw DuplicateEdge("duplicate edge " + a + " " + b);
        edges.emplace_back(std::min(u, v), std::max(u, v));
        max_index = std::max({max_index, u, v});
    }
    int n = declared_n >= 0 ? declared_n : max_index + 1;
    if (max_index >= n)
        throw BadToken("vertex index " + std::to_string(max_index) +
                       " exceeds declared count " + std::to_string(n));
    return Graph::from_edges(n, std::move(edges));
}

std::vector<Graph> parse_graph6_file(std::string_view contents) {
    std::vector<Graph> out;
    size_t start = 0;
    while (start < contents.size()) {
        size_t end = contents.find('\n', start);
        if (end == std::string_view::npos)
            end = contents.size();
        std::string_view line = contents.substr(start, end - start);
        if (!line.empty() && line != "\r")
            out.push_back(parse_graph6(line));
        start = end + 1;
    }
    return out;
}

std::string to_dot(const Orientation& o) {
    const Graph& g = o.graph();
    std::ostringstream out;
    out << "digraph {\n";
    std::vector<bool> touched(static_cast<size_t>(g.vertex_count()), false);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        touched[static_cast<size_t>(u)] = touched[static_cast<size_t>(v)] = true;
        if (o.oriented(e))
            out << "  " << o.tail(e) << " -> " << o.head(e) << ";\n";
        else
            out << "  " << u << " -- " << v << ";\n";
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!touched[static_cast<size_t>(v)])
            out << "  " << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace zfb
