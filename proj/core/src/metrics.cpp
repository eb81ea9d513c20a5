#include "prclab/metrics.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace prclab {

namespace {

// Carraghan-Pardalos style expansion over a candidate set.
void clique_expand(const Graph& g, const std::vector<int>& order,
                   std::vector<int>& cand, int depth, int& best) {
    if (depth + static_cast<int>(cand.size()) <= best) return;
    if (cand.empty()) {
        best = std::max(best, depth);
        return;
    }
    while (!cand.empty()) {
        if (depth + static_cast<int>(cand.size()) <= best) return;
        int v = cand.back();
        cand.pop_back();
        std::vector<int> next;
        for (int w : cand)
            if (g.adjacent(v, w)) next.push_back(w);
        clique_expand(g, order, next, depth + 1, best);
    }
}

}  // namespace

int clique_number(const Graph& g, int limit) {
    if (g.vertex_count() > limit)
        throw std::domain_error("clique number: exact limit exceeded");
    if (g.vertex_count() == 0) return 0;
    std::vector<int> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.degree(a) < g.degree(b); });
    int best = 1;
    std::vector<int> cand = order;  // ascending degree; back() is max degree
    clique_expand(g, order, cand, 0, best);
    return best;
}

std::optional<int> girth(const Graph& g) {
    // Shortest cycle through each start vertex via BFS; an edge closing two
    // BFS branches at depths d(u), d(v) witnesses a cycle of d(u)+d(v)+1.
    int best = -1;
    int n = g.vertex_count();
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1), parent(n, -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbours(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push(w);
                } else if (w != parent[v] && parent[w] != v) {
                    int len = dist[v] + dist[w] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

int diameter_or_throw(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("diameter: empty graph");
    int diam = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto dist = bfs_distances(g, v);
        for (int d : dist) {
            if (d < 0) throw std::invalid_argument("diameter: disconnected graph");
            diam = std::max(diam, d);
        }
    }
    return diam;
}

GraphMetrics metrics(const Graph& g, const MetricsOptions& opts) {
    GraphMetrics m;
    int n = g.vertex_count();
    if (n == 0) return m;

    m.max_degree = 0;
    m.min_degree = g.degree(0);
    for (int v = 0; v < n; ++v) {
        m.max_degree = std::max(m.max_degree, g.degree(v));
        m.min_degree = std::min(m.min_degree, g.degree(v));
    }
    m.average_degree = Rational{2LL * g.edge_count(), n};
    m.is_connected = is_connected(g);
    if (m.is_connected) m.diameter = diameter_or_throw(g);

    // Bipartite check: BFS 2-colouring.
    {
        std::vector<int> side(n, -1);
        bool ok = true;
        for (int s = 0; s < n && ok; ++s) {
            if (side[s] >= 0) continue;
            side[s] = 0;
            std::queue<int> q;
            q.push(s);
            while (!q.empty() && ok) {
                int v = q.front();
                q.pop();
                for (int w : g.neighbours(v)) {
                    if (side[w] < 0) {
                        side[w] = side[v] ^ 1;
                        q.push(w);
                    } else if (side[w] == side[v]) {
                        ok = false;
                        break;
                    }
                }
            }
        }
        m.is_bipartite = ok;
    }

    m.is_overfull =
        (n % 2 == 1) && (2LL * g.edge_count() > static_cast<long long>(m.max_degree) * (n - 1));

    if (n <= opts.clique_exact_limit) m.clique_number = clique_number(g, opts.clique_exact_limit);
    return m;
}

}  // namespace prclab
