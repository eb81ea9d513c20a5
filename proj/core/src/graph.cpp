#include "prclab/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace prclab {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("graph: endpoint out of range");
        if (u == v) throw std::invalid_argument("graph: self-loop");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("graph: duplicate edge");

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.build_index();
    return g;
}

void Graph::build_index() {
    adj_.assign(n_, {});
    inc_.assign(n_, {});
    edge_id_.assign(static_cast<size_t>(n_) * n_, -1);
    for (int e = 0; e < edge_count(); ++e) {
        auto [u, v] = edges_[e];
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        edge_id_[static_cast<size_t>(u) * n_ + v] = e;
        edge_id_[static_cast<size_t>(v) * n_ + u] = e;
    }
    for (int v = 0; v < n_; ++v) {
        std::sort(adj_[v].begin(), adj_[v].end());
        for (int w : adj_[v]) inc_[v].push_back(edge_index(v, w));
    }
}

bool Graph::adjacent(int u, int v) const { return edge_index(u, v) >= 0; }

int Graph::edge_index(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return -1;
    return edge_id_[static_cast<size_t>(u) * n_ + v];
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbours(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

}  // namespace prclab
