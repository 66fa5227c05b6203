#include "deckrec/generators.hpp"

#include <numeric>
#include <set>
#include <string>

namespace deckrec {

namespace {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

} // namespace

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

Graph cycle(int n) {
    if (n < 3) fail(ErrorKind::InvalidArgument, "cycle needs at least 3 vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph complete_multipartite(const std::vector<int>& parts) {
    if (parts.empty()) fail(ErrorKind::InvalidArgument, "multipartite graph needs at least one part");
    long long total = 0;
    for (int p : parts) {
        if (p < 1) fail(ErrorKind::InvalidArgument, "multipartite part sizes must be positive");
        total += p;
    }
    if (total > Graph::max_vertices)
        fail(ErrorKind::InvalidArgument, "multipartite graph has too many vertices");

    Graph g(static_cast<int>(total));
    int begin = 0;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        const int end = begin + parts[p];
        for (int u = begin; u < end; ++u)
            for (int v = end; v < total; ++v) g.add_edge(u, v);
        begin = end;
    }
    return g;
}

Graph hypercube(int d) {
    if (d < 0 || d > 5) fail(ErrorKind::InvalidArgument, "hypercube dimension must be between 0 and 5");
    Graph g(1 << d);
    for (int u = 0; u < (1 << d); ++u)
        for (int b = 0; b < d; ++b)
            if (!(u >> b & 1)) g.add_edge(u, u | 1 << b);
    return g;
}

Graph rook(int a, int b) {
    if (a < 1 || b < 1) fail(ErrorKind::InvalidArgument, "rook grid sides must be positive");
    if ((long long)a * b > Graph::max_vertices)
        fail(ErrorKind::InvalidArgument, "rook grid has too many vertices");
    Graph g(a * b);
    for (int u = 0; u < a * b; ++u)
        for (int v = u + 1; v < a * b; ++v)
            if (u / b == v / b || u % b == v % b) g.add_edge(u, v);
    return g;
}

Graph paley(int q) {
    if (q < 5 || q > 61 || !is_prime(q) || q % 4 != 1)
        fail(ErrorKind::InvalidArgument,
             "paley order must be a prime = 1 (mod 4) between 5 and 61");
    std::set<int> squares;
    for (int x = 1; x < q; ++x) squares.insert(x * x % q);
    Graph g(q);
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
            if (squares.count((j - i) % q)) g.add_edge(i, j);
    return g;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int n = g.vertex_count() + h.vertex_count();
    if (n > Graph::max_vertices)
        fail(ErrorKind::InvalidArgument, "disjoint union has too many vertices");
    Graph u(n);
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = i + 1; j < g.vertex_count(); ++j)
            if (g.has_edge(i, j)) u.add_edge(i, j);
    const int shift = g.vertex_count();
    for (int i = 0; i < h.vertex_count(); ++i)
        for (int j = i + 1; j < h.vertex_count(); ++j)
            if (h.has_edge(i, j)) u.add_edge(shift + i, shift + j);
    return u;
}

Graph subdivided_star() {
    return from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
}

std::pair<Graph, Graph> collision_pair(int l) {
    if (l < 2) fail(ErrorKind::InvalidArgument, "collision pair needs l >= 2");
    if (2 * l > Graph::max_vertices)
        fail(ErrorKind::InvalidArgument, "collision pair has too many vertices");
    return {path(2 * l), disjoint_union(cycle(l + 1), path(l - 1))};
}

std::optional<SrgParams> srg_params(const Graph& g) {
    const int n = g.vertex_count();
    const int k = g.degree(0);
    for (int v = 1; v < n; ++v)
        if (g.degree(v) != k) return std::nullopt;

    std::optional<int> lambda, mu;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const int common = common_neighbors(g, u, v);
            std::optional<int>& slot = g.has_edge(u, v) ? lambda : mu;
            if (slot && *slot != common) return std::nullopt;
            slot = common;
        }
    if (!lambda || !mu || *mu < 1) return std::nullopt;
    return SrgParams{k, *lambda, *mu};
}

std::optional<WdrParams> wdr_params(const Graph& g) {
    const int n = g.vertex_count();
    const int k = g.degree(0);
    for (int v = 1; v < n; ++v)
        if (g.degree(v) != k) return std::nullopt;

    const DistanceMatrix dist = distance_matrix(g);
    std::optional<int> lambda, mu_prime;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const int d = dist.at(u, v);
            if (d != 1 && d != 2) continue;
            const int common = common_neighbors(g, u, v);
            std::optional<int>& slot = d == 1 ? lambda : mu_prime;
            if (slot && *slot != common) return std::nullopt;
            slot = common;
        }
    if (!lambda || !mu_prime) return std::nullopt;
    return WdrParams{k, *lambda, *mu_prime};
}

std::optional<IntersectionArraySrg> intersection_array_srg(const Graph& g) {
    const std::optional<SrgParams> p = srg_params(g);
    if (!p) return std::nullopt;

    const IntersectionArraySrg arr{{p->k, p->k - p->lambda - 1, 0}, {0, 1, p->mu}};
    const int n = g.vertex_count();
    const DistanceMatrix dist = distance_matrix(g);

    for (int u = 0; u < n; ++u)
        for (int x = 0; x < n; ++x) {
            const int j = dist.at(u, x);
            if (j < 0 || j > 2) return std::nullopt; // disconnected or diameter > 2
            int up = 0, down = 0;
            for (std::uint64_t m = g.neighbor_mask(x); m;) {
                const int y = std::countr_zero(m);
                m &= m - 1;
                if (dist.at(u, y) == j + 1) ++up;
                if (dist.at(u, y) == j - 1) ++down;
            }
            if (up != arr.b[std::size_t(j)] || down != arr.c[std::size_t(j)]) return std::nullopt;
        }
    return arr;
}

} // namespace deckrec
