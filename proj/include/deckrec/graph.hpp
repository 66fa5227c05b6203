#pragma once

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "deckrec/errors.hpp"

namespace deckrec {

// Simple undirected graph on labeled vertices 0..n-1, n <= 62.
// Adjacency is stored as one 64-bit neighbor mask per vertex.
class Graph {
public:
    static constexpr int max_vertices = 62;

    explicit Graph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const;

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return rows_[u] >> v & 1;
    }

    void add_edge(int u, int v);

    std::uint64_t neighbor_mask(int v) const {
        check_vertex(v);
        return rows_[v];
    }

    int degree(int v) const { return std::popcount(neighbor_mask(v)); }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            fail(ErrorKind::InvalidArgument, "vertex label out of range");
    }

    int n_;
    std::vector<std::uint64_t> rows_;
};

Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

// Sorted non-increasing.
std::vector<int> degree_sequence(const Graph& g);

int common_neighbors(const Graph& g, int x, int y);

bool is_connected(const Graph& g);

// Pairwise shortest-path distances; unreachable pairs hold `unreachable`.
class DistanceMatrix {
public:
    static constexpr int unreachable = -1;

    explicit DistanceMatrix(int n) : n_(n), d_(std::size_t(n) * n, unreachable) {}

    int vertex_count() const { return n_; }

    int at(int i, int j) const { return d_[std::size_t(i) * n_ + j]; }
    int& at(int i, int j) { return d_[std::size_t(i) * n_ + j]; }

private:
    int n_;
    std::vector<int> d_;
};

DistanceMatrix distance_matrix(const Graph& g);

// Subgraph induced by the vertices set in `keep`, relabeled 0..k-1 in
// ascending order of their original labels.
Graph induced_subgraph(const Graph& g, std::uint64_t keep);
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);

long long binomial(int n, int k);

} // namespace deckrec
