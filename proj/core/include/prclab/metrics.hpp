#pragma once

#include <optional>

#include "prclab/graph.hpp"

namespace prclab {

// Exact average degree 2m/n kept as a fraction.
struct Rational {
    long long num = 0;
    long long den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    long long ceil() const { return (num + den - 1) / den; }
    long long floor() const { return num / den; }
};

struct GraphMetrics {
    int max_degree = 0;
    int min_degree = 0;
    Rational average_degree;          // 2m/n
    std::optional<int> diameter;      // nullopt when disconnected
    std::optional<int> clique_number; // nullopt when n exceeds the exact limit
    bool is_connected = false;
    bool is_bipartite = false;
    bool is_overfull = false;         // n odd and 2m > max_degree*(n-1)
};

struct MetricsOptions {
    int clique_exact_limit = 16;
};

GraphMetrics metrics(const Graph& g, const MetricsOptions& opts = {});

// Exact clique number by branch and bound with a degree-sorted pivot order.
// Throws std::domain_error("clique number: exact limit exceeded") when
// n > limit.
int clique_number(const Graph& g, int limit = 16);

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

int diameter_or_throw(const Graph& g);  // requires connected

}  // namespace prclab
