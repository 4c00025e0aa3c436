#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qwmix {

using AdjacencyMatrix = Eigen::MatrixXi;

/// Simple labelled graph stored as a dense symmetric 0/1 adjacency matrix.
struct Graph {
    AdjacencyMatrix adj;
    std::string label;

    [[nodiscard]] int n() const { return static_cast<int>(adj.rows()); }
    [[nodiscard]] bool adjacent(int u, int v) const { return adj(u, v) != 0; }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj == b.adj; }
};

struct SrgParams {
    int n = 0;
    int k = 0;
    int lambda = 0;
    int mu = 0;

    /// k(k - lambda - 1) = (n - k - 1) mu.
    [[nodiscard]] bool feasible() const;
    /// Connected with connected complement: 0 < mu < k and k < n - 1.
    [[nodiscard]] bool primitive() const;
    /// Parameters of the complementary graph.
    [[nodiscard]] SrgParams complement() const;

    friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

struct Bipartition {
    std::vector<int> first;
    std::vector<int> second;
};

// Vertex cap applied by every constructor. Default 256.
int size_cap();
void set_size_cap(int cap);
constexpr int default_size_cap = 256;

/// Throws InvalidArgument unless adj is square, symmetric, 0/1 with zero diagonal and n >= 1.
void validate(const Graph& g);
[[nodiscard]] bool is_valid(const Graph& g);

Graph from_adjacency(AdjacencyMatrix adj, std::string label);

Graph cycle(int n);
Graph complete(int n);
Graph cartesian_product(const Graph& g, const Graph& h);
Graph hamming(int d, int q);
Graph paley(int q);
Graph complement(const Graph& g);

std::optional<Bipartition> bipartition(const Graph& g);
std::optional<int> is_regular(const Graph& g);
[[nodiscard]] bool is_connected(const Graph& g);
std::optional<SrgParams> srg_params(const Graph& g);

/// Length of the cycle if g is a connected 2-regular graph (any labelling).
std::optional<int> cycle_length(const Graph& g);

[[nodiscard]] bool is_prime(long long n);

} // namespace qwmix
