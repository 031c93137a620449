#include "tdt/td_io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tdt {

namespace {

std::runtime_error parse_error(int line, const std::string& what) {
    return std::runtime_error("line " + std::to_string(line) + ": " + what);
}

}  // namespace

TreeDecomposition parse_td(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    int nbags = 0, maxbag = 0, n = 0;
    TreeDecomposition td;
    std::vector<char> bag_seen;
    int edges_seen = 0;
    while (std::getline(in, line)) {
        lineno++;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (!have_header) {
            std::string s, tdtok;
            if (!(ls >> s >> tdtok >> nbags >> maxbag >> n) || s != "s" || tdtok != "td")
                throw parse_error(lineno, "expected header 's td <#bags> <max-bag-size> <n>'");
            if (nbags < 0 || maxbag < 0 || n < 0) throw parse_error(lineno, "negative header field");
            have_header = true;
            td.num_nodes = nbags;
            td.bags.assign(nbags, {});
            bag_seen.assign(nbags, 0);
            continue;
        }
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "s") throw parse_error(lineno, "duplicate header");
        if (tok == "b") {
            int id;
            if (!(ls >> id)) throw parse_error(lineno, "malformed bag line");
            if (id < 1 || id > nbags) throw parse_error(lineno, "bag id out of range");
            if (bag_seen[id - 1]) throw parse_error(lineno, "duplicate bag id");
            bag_seen[id - 1] = 1;
            int v;
            while (ls >> v) {
                if (v < 1 || v > n) throw parse_error(lineno, "bag vertex out of range");
                td.bags[id - 1].push_back(v - 1);
            }
            std::sort(td.bags[id - 1].begin(), td.bags[id - 1].end());
            td.bags[id - 1].erase(std::unique(td.bags[id - 1].begin(), td.bags[id - 1].end()),
                                  td.bags[id - 1].end());
            if ((int)td.bags[id - 1].size() > maxbag)
                throw parse_error(lineno, "bag exceeds declared max bag size");
            continue;
        }
        int a, b;
        try {
            a = std::stoi(tok);
        } catch (...) {
            throw parse_error(lineno, "malformed tree edge line");
        }
        if (!(ls >> b)) throw parse_error(lineno, "malformed tree edge line");
        if (a < 1 || a > nbags || b < 1 || b > nbags)
            throw parse_error(lineno, "tree edge endpoint out of range");
        td.edges.emplace_back(a - 1, b - 1);
        edges_seen++;
    }
    if (!have_header) throw std::runtime_error("missing 's td' header");
    if (edges_seen != std::max(0, nbags - 1))
        throw std::runtime_error("expected " + std::to_string(std::max(0, nbags - 1)) +
                                 " tree edges, found " + std::to_string(edges_seen));
    auto bad = structural_violations(td);
    if (!bad.empty()) throw std::runtime_error(bad.front());
    return td;
}

std::string write_td(const TreeDecomposition& td) {
    int maxbag = 0, maxv = -1;
    for (const auto& b : td.bags) {
        maxbag = std::max(maxbag, (int)b.size());
        for (int v : b) maxv = std::max(maxv, v);
    }
    std::ostringstream out;
    out << "s td " << td.num_nodes << " " << maxbag << " " << maxv + 1 << "\n";
    for (int t = 0; t < td.num_nodes; t++) {
        out << "b " << t + 1;
        for (int v : td.bags[t]) out << " " << v + 1;
        out << "\n";
    }
    auto edges = td.edges;
    for (auto& [a, b] : edges)
        if (a > b) std::swap(a, b);
    std::sort(edges.begin(), edges.end());
    for (auto [a, b] : edges) out << a + 1 << " " << b + 1 << "\n";
    return out.str();
}

}  // namespace tdt
