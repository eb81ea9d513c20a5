#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace prclab {

// Simple undirected graph on vertex ids 0..n-1.
//
// Edges are kept in canonical order: pairs (u,v) with u < v, sorted
// lexicographically. The position of an edge in this list is its global
// edge index; every edge colouring in the library is an array over it.
class Graph {
public:
    Graph() = default;

    // Builds a graph from an edge list. Throws std::invalid_argument on
    // self-loops, duplicate edges or out-of-range endpoints.
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool adjacent(int u, int v) const;

    // Canonical edge index of {u,v}, or -1 if not an edge.
    int edge_index(int u, int v) const;

    // Incident edge indices of v, ordered by the neighbour id.
    const std::vector<int>& incident_edges(int v) const { return inc_[v]; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> inc_;
    std::vector<int> edge_id_;  // n*n lookup, -1 for non-edges

    void build_index();
};

// True if every vertex is reachable from vertex 0 (true for n <= 1).
bool is_connected(const Graph& g);

// BFS distances from src; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, int src);

}  // namespace prclab
