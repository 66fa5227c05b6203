#include "deckrec/graph.hpp"

#include <algorithm>
#include <string>

namespace deckrec {

Graph::Graph(int n) : n_(n), rows_(n > 0 ? n : 0, 0) {
    if (n < 1 || n > max_vertices)
        fail(ErrorKind::InvalidArgument,
             "vertex count must be between 1 and " + std::to_string(max_vertices));
}

int Graph::edge_count() const {
    int twice = 0;
    for (std::uint64_t row : rows_) twice += std::popcount(row);
    return twice / 2;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) fail(ErrorKind::InvalidArgument, "loops are not allowed");
    rows_[u] |= std::uint64_t(1) << v;
    rows_[v] |= std::uint64_t(1) << u;
}

Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> deg(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) deg[v] = g.degree(v);
    std::sort(deg.begin(), deg.end(), std::greater<>());
    return deg;
}

int common_neighbors(const Graph& g, int x, int y) {
    if (x == y) fail(ErrorKind::InvalidArgument, "common_neighbors needs two distinct vertices");
    return std::popcount(g.neighbor_mask(x) & g.neighbor_mask(y));
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f;) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= g.neighbor_mask(v);
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (std::uint64_t(1) << n) - 1;
}

DistanceMatrix distance_matrix(const Graph& g) {
    const int n = g.vertex_count();
    DistanceMatrix d(n);
    for (int s = 0; s < n; ++s) {
        d.at(s, s) = 0;
        std::uint64_t seen = std::uint64_t(1) << s;
        std::uint64_t frontier = seen;
        int dist = 0;
        while (frontier) {
            ++dist;
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f;) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= g.neighbor_mask(v);
            }
            frontier = next & ~seen;
            seen |= next;
            for (std::uint64_t f = frontier; f;) {
                int v = std::countr_zero(f);
                f &= f - 1;
                d.at(s, v) = dist;
            }
        }
    }
    return d;
}

Graph induced_subgraph(const Graph& g, std::uint64_t keep) {
    const int n = g.vertex_count();
    if (keep == 0) fail(ErrorKind::InvalidArgument, "induced subgraph needs at least one vertex");
    if (n < 64 && (keep >> n) != 0)
        fail(ErrorKind::InvalidArgument, "induced subgraph mask selects missing vertices");

    std::vector<int> verts;
    for (std::uint64_t m = keep; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        verts.push_back(v);
    }
    Graph sub(int(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j])) sub.add_edge(int(i), int(j));
    return sub;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    std::uint64_t mask = 0;
    for (int v : keep) {
        if (v < 0 || v >= g.vertex_count())
            fail(ErrorKind::InvalidArgument, "induced subgraph vertex out of range");
        std::uint64_t bit = std::uint64_t(1) << v;
        if (mask & bit) fail(ErrorKind::InvalidArgument, "induced subgraph vertex repeated");
        mask |= bit;
    }
    return induced_subgraph(g, mask);
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    __int128 r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return (long long)r;
}

} // namespace deckrec
