#include "prclab/graph_io.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace prclab {

namespace {

std::string strip_g6_prefix(const std::string& s) {
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) return s.substr(header.size());
    return s;
}

}  // namespace

Graph parse_graph6(const std::string& raw) {
    std::string text = strip_g6_prefix(raw);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    if (text.empty()) throw std::invalid_argument("graph6: malformed header");

    unsigned char first = static_cast<unsigned char>(text[0]);
    if (first == 126)
        throw std::invalid_argument("graph6: malformed header (multi-byte size unsupported)");
    if (first < 63 || first > 126) throw std::invalid_argument("graph6: malformed header");
    int n = first - 63;

    size_t bits_needed = static_cast<size_t>(n) * (n - 1) / 2;
    size_t bytes_needed = (bits_needed + 5) / 6;
    if (text.size() - 1 < bytes_needed) throw std::invalid_argument("graph6: truncated bitstream");
    if (text.size() - 1 > bytes_needed) throw std::invalid_argument("graph6: trailing data");

    std::vector<std::pair<int, int>> edges;
    size_t bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            unsigned char ch = static_cast<unsigned char>(text[1 + bit / 6]);
            if (ch < 63 || ch > 126) throw std::invalid_argument("graph6: out-of-range character");
            int group = ch - 63;
            if ((group >> (5 - bit % 6)) & 1) edges.emplace_back(row, col);
        }
    }
    // Padding bits must be zero; tolerate nonzero padding silently? No:
    // canonical encoders always pad with zeros, anything else is damage.
    for (size_t b = bit; b < bytes_needed * 6; ++b) {
        unsigned char ch = static_cast<unsigned char>(text[1 + b / 6]);
        if (ch < 63 || ch > 126) throw std::invalid_argument("graph6: out-of-range character");
        if (((ch - 63) >> (5 - b % 6)) & 1)
            throw std::invalid_argument("graph6: trailing data");
    }
    return Graph::from_edges(n, std::move(edges));
}

std::string write_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n > 62) throw std::invalid_argument("graph6: order above 62 unsupported");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    size_t bits = static_cast<size_t>(n) * (n - 1) / 2;
    std::vector<int> groups((bits + 5) / 6, 0);
    size_t bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            if (g.adjacent(row, col)) groups[bit / 6] |= 1 << (5 - bit % 6);
        }
    }
    for (int grp : groups) out.push_back(static_cast<char>(63 + grp));
    return out;
}

std::vector<Graph> parse_graph6_lines(const std::string& text) {
    std::vector<Graph> graphs;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        graphs.push_back(parse_graph6(line));
    }
    return graphs;
}

EdgeListParse parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    int header_n = 0;
    long header_m = -1;
    std::vector<std::pair<int, int>> edges;
    bool duplicates = false;
    int max_id = -1;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        long a, b;
        if (!(ls >> a)) continue;  // blank line
        if (!(ls >> b))
            throw std::invalid_argument("edge list: expected two integers at line " +
                                        std::to_string(lineno));
        std::string rest;
        if (ls >> rest)
            throw std::invalid_argument("edge list: trailing tokens at line " +
                                        std::to_string(lineno));
        if (lineno == 1 && edges.empty() && !have_header && a >= 0 && b >= 0) {
            // Heuristic-free rule: a first line is a header iff a second line
            // exists or it cannot be an edge (a == b handled below). We treat
            // the first line as "n m" only when the remaining line count
            // matches m; collected below after reading everything.
        }
        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    // Decide whether the first pair was an "n m" header: accept it when it is
    // consistent (m equals the number of following lines) and not consistent
    // with being an edge of that same count.
    if (!edges.empty()) {
        auto [a, b] = edges.front();
        if (b == static_cast<int>(edges.size()) - 1 && a >= 1) {
            have_header = true;
            header_n = a;
            header_m = b;
            edges.erase(edges.begin());
        }
    }
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0)
            throw std::invalid_argument("edge list: negative vertex id");
        if (u == v) throw std::invalid_argument("edge list: self-loop");
        if (have_header && (u >= header_n || v >= header_n))
            throw std::invalid_argument("edge list: vertex id >= n");
        if (u > v) std::swap(u, v);
        max_id = std::max({max_id, u, v});
    }
    std::sort(edges.begin(), edges.end());
    auto last = std::unique(edges.begin(), edges.end());
    if (last != edges.end()) {
        duplicates = true;
        edges.erase(last, edges.end());
    }
    (void)header_m;
    int n = have_header ? header_n : max_id + 1;
    EdgeListParse out{Graph::from_edges(n, std::move(edges)), duplicates};
    return out;
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace prclab
