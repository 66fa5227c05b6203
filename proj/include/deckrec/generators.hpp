#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "deckrec/graph.hpp"
#include "deckrec/recognize.hpp"

namespace deckrec {

// Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9
// (5+i ~ 5+((i+2) mod 5)), spokes i ~ i+5.
Graph petersen();

Graph cycle(int n);                                   // n >= 3
Graph path(int n);                                    // n >= 1
Graph complete(int n);                                // 1 <= n <= 62
Graph complete_multipartite(const std::vector<int>& parts);
Graph hypercube(int d);                               // 0 <= d <= 5, vertices binary-coded
Graph rook(int a, int b);                             // vertex (i,j) -> i*b + j

// Paley graph on GF(q), q prime, q = 1 (mod 4), 5 <= q <= 61:
// i ~ j iff i-j is a nonzero square mod q.
Graph paley(int q);

Graph disjoint_union(const Graph& g, const Graph& h); // h's labels shifted up

// Star K_{1,3} with one edge subdivided: edges 01, 02, 03, 34.
Graph subdivided_star();

// Smallest graphs sharing an l-deck: (P_{2l}, C_{l+1} + P_{l-1}), l >= 2.
std::pair<Graph, Graph> collision_pair(int l);

// Present iff g is strongly regular in the connected sense: k-regular with
// at least one adjacent and one nonadjacent pair, constant lambda and
// constant mu >= 1.
std::optional<SrgParams> srg_params(const Graph& g);

// Present iff g is regular with constant lambda over adjacent pairs and
// constant mu' over distance-2 pairs, both kinds of pair occurring.
std::optional<WdrParams> wdr_params(const Graph& g);

// Distance-regular intersection array {b0,b1,b2; c1,c2,c3} restricted to
// diameter 2: (k, k-lambda-1, 0; 0, 1, mu), verified against the graph.
struct IntersectionArraySrg {
    std::array<int, 3> b;
    std::array<int, 3> c;

    friend bool operator==(const IntersectionArraySrg&, const IntersectionArraySrg&) = default;
};

std::optional<IntersectionArraySrg> intersection_array_srg(const Graph& g);

} // namespace deckrec
