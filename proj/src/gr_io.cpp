#include "tdt/gr_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tdt {

namespace {

std::runtime_error parse_error(int line, const std::string& what) {
    return std::runtime_error("line " + std::to_string(line) + ": " + what);
}

}  // namespace

Graph parse_gr(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    int n = 0;
    long long m = 0, edges_seen = 0;
    Graph g;
    while (std::getline(in, line)) {
        lineno++;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (!have_header) {
            std::string p, tw;
            if (!(ls >> p >> tw >> n >> m) || p != "p" || tw != "tw")
                throw parse_error(lineno, "expected header 'p tw <n> <m>'");
            if (n < 0 || m < 0) throw parse_error(lineno, "negative count in header");
            have_header = true;
            g = Graph(n);
            continue;
        }
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "p") throw parse_error(lineno, "duplicate header");
        int u, v;
        try {
            u = std::stoi(tok);
        } catch (...) {
            throw parse_error(lineno, "malformed edge line");
        }
        if (!(ls >> v)) throw parse_error(lineno, "malformed edge line");
        if (u < 1 || u > n || v < 1 || v > n)
            throw parse_error(lineno, "edge index out of range: " + std::to_string(u < 1 || u > n ? u : v));
        if (u == v) throw parse_error(lineno, "self-loop at " + std::to_string(u));
        add_edge(g, u - 1, v - 1);
        edges_seen++;
    }
    if (!have_header) throw std::runtime_error("missing 'p tw' header");
    if (edges_seen != m)
        throw std::runtime_error("header declares " + std::to_string(m) + " edges, found " +
                                 std::to_string(edges_seen));
    finish_edges(g);
    return g;
}

std::string write_gr(const Graph& g) {
    std::ostringstream out;
    out << "p tw " << g.n << " " << g.num_edges() << "\n";
    for (int u = 0; u < g.n; u++)
        for (int v : g.adj[u])
            if (u < v) out << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

std::string write_labels(const Graph& g) {
    std::ostringstream out;
    for (int v = 0; v < g.n; v++) out << v + 1 << "\t" << g.labels[v] << "\n";
    return out.str();
}

void parse_labels(const std::string& text, Graph& g) {
    g.labels.assign(g.n, "");
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        if (line.empty()) continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) throw parse_error(lineno, "expected '<id>\\t<label>'");
        int id;
        try {
            id = std::stoi(line.substr(0, tab));
        } catch (...) {
            throw parse_error(lineno, "malformed label id");
        }
        if (id < 1 || id > g.n) throw parse_error(lineno, "label id out of range");
        g.labels[id - 1] = line.substr(tab + 1);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace tdt
