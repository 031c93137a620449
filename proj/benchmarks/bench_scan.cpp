// Times the two bag-scan kernels with the OpenMP path on and off. The serial
// path is the reference the tests trust, so besides the timings this asserts
// that both paths report the identical witness.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <vector>

#ifdef TDT_HAVE_OPENMP
#include <omp.h>
#endif

#include "tdt/decomp.hpp"
#include "tdt/graph.hpp"
#include "tdt/treewidth.hpp"
#include "tdt/verify.hpp"
#include "tdt/zoo.hpp"

using namespace tdt;

namespace {

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

// Min-degree elimination decomposition: node i holds the i-th eliminated
// vertex and its not-yet-eliminated neighbors in the fill graph; the node
// joins the node of the first of those neighbors to leave.
TreeDecomposition elimination_td(const Graph& g) {
    int n = g.n;
    std::vector<std::vector<int>> nb(g.adj);
    std::vector<char> gone(n, 0);
    std::vector<int> when(n, -1);
    TreeDecomposition td;
    td.num_nodes = n;
    td.bags.resize(n);
    for (int step = 0; step < n; ++step) {
        int v = -1;
        for (int u = 0; u < n; ++u)
            if (!gone[u] && (v < 0 || nb[u].size() < nb[v].size())) v = u;
        gone[v] = 1;
        when[v] = step;
        std::vector<int> live;
        for (int u : nb[v])
            if (!gone[u]) live.push_back(u);
        td.bags[step] = set_union(live, {v});
        for (int a : live)
            for (int b : live)
                if (a < b && !set_contains(nb[a], b)) {
                    nb[a] = set_union(nb[a], {b});
                    nb[b] = set_union(nb[b], {a});
                }
        for (int u : live) nb[u] = set_minus(nb[u], {v});
    }
    for (int step = 0; step < n; ++step) {
        int next = -1;
        for (int u : td.bags[step])
            if (when[u] > step && (next < 0 || when[u] < when[next])) next = u;
        if (next >= 0)
            td.edges.push_back({when[next], step});
        else if (step + 1 < n)
            td.edges.push_back({step + 1, step});
    }
    return td;
}

bool same_lean(const std::optional<LeannessViolation>& a,
               const std::optional<LeannessViolation>& b) {
    if (a.has_value() != b.has_value()) return false;
    if (!a) return true;
    return a->s == b->s && a->t == b->t && a->ell == b->ell && a->Zs == b->Zs && a->Zt == b->Zt &&
           a->X == b->X;
}

bool same_slink(const std::optional<LinkViolation>& a,
                const std::optional<LinkViolation>& b) {
    if (a.has_value() != b.has_value()) return false;
    if (!a) return true;
    return a->s == b->s && a->t == b->t && a->required == b->required && a->flow == b->flow &&
           a->X == b->X;
}

}  // namespace

int main() {
#ifdef TDT_HAVE_OPENMP
    std::printf("OpenMP on, %d threads\n\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run the serial path\n\n");
#endif
    std::printf("%-28s %10s %10s %8s\n", "input", "serial", "parallel", "speedup");

    int disagreements = 0;
    double serial_total = 0, parallel_total = 0;

    for (uint64_t seed : {11, 12, 13}) {
        Graph g = gen_random(16, 0.35, seed);
        auto td = treewidth_exact(g).td;
        LeanOptions serial, parallel;
        serial.parallel = false;
        parallel.parallel = true;
        double t0 = now_ms();
        auto a = check_lean(g, td, serial);
        double t1 = now_ms();
        auto b = check_lean(g, td, parallel);
        double t2 = now_ms();
        if (!same_lean(a, b)) ++disagreements;
        serial_total += t1 - t0;
        parallel_total += t2 - t1;
        char name[64];
        std::snprintf(name, sizeof name, "lean n=16 seed=%llu w=%d", (unsigned long long)seed,
                      width(td));
        std::printf("%-28s %8.1fms %8.1fms %7.2fx\n", name, t1 - t0, t2 - t1,
                    (t2 - t1) > 0 ? (t1 - t0) / (t2 - t1) : 0.0);
    }

    for (int n : {90, 120}) {
        Graph g = gen_random(n, 0.06, 5);
        auto td = elimination_td(g);
        double t0 = now_ms();
        auto a = check_strongly_linked(g, td, false);
        double t1 = now_ms();
        auto b = check_strongly_linked(g, td, true);
        double t2 = now_ms();
        if (!same_slink(a, b)) ++disagreements;
        serial_total += t1 - t0;
        parallel_total += t2 - t1;
        char name[64];
        std::snprintf(name, sizeof name, "slink n=%d w=%d", n, width(td));
        std::printf("%-28s %8.1fms %8.1fms %7.2fx\n", name, t1 - t0, t2 - t1,
                    (t2 - t1) > 0 ? (t1 - t0) / (t2 - t1) : 0.0);
    }

    std::printf("\ntotal %.1fms serial, %.1fms parallel\n", serial_total, parallel_total);
    if (disagreements) {
        std::printf("witness mismatch between the two paths: %d\n", disagreements);
        return 1;
    }
    std::printf("witnesses identical on every input\n");
    return 0;
}
