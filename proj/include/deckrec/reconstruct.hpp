#pragma once

#include <map>
#include <utility>
#include <vector>

#include "deckrec/recognize.hpp"

namespace deckrec {

// Whether two degree-(k-1) card vertices attach to the same omitted vertex.
enum class PairLabel { Same, Different };

using PairLabels = std::map<std::pair<int, int>, PairLabel>;

enum class Branch { Complete, CliqueUnion, Srg, Wdr };

struct ReconstructionReport {
    Branch branch;
    int k = 0;
    int lambda = 0;
    int mu = 0; // mu for the srg branch, mu' for the wdr branch
    CanonicalCode card_code; // card used, srg/wdr branches only
    std::pair<int, int> class_sizes{0, 0}; // |A|, |B| of the split
    bool verified = false;
};

// Rebuild a k-regular graph from one card missing a single vertex: the card
// must have exactly k vertices of degree k-1 and the rest of degree k.
Graph reconstruct_regular_1card(int k, const Graph& card);

// For two degree-(k-1) vertices of a card with omitted pair {u,v}: they
// share rho common neighbors in the host graph (rho = lambda if adjacent,
// mu if not); seeing rho in the card means their missing neighbors differ,
// rho-1 means both attach to the same omitted vertex.
PairLabel classify_pair_srg(const Graph& card, const SrgParams& params, int x, int y);

// Same rule with mu' for distance-2 pairs; nonadjacent pairs with no common
// neighbor in the card are at distance 3, hence attach to different omitted
// vertices. Needs mu' >= 2.
PairLabel classify_pair_wdr(const Graph& card, const WdrParams& params, int x, int y);

// Split S by the Same-labels (an equivalence); the side holding the
// smallest vertex comes first. Labels must cover every pair of S and be
// consistent with a two-sided split.
std::pair<std::vector<int>, std::vector<int>> split_S(const std::vector<int>& S,
                                                      const PairLabels& labels);

// Complete a nonadjacent-omitted card of a strongly regular graph with
// parameters `params` to the full n-vertex graph.
Graph reconstruct_srg(int n, const SrgParams& params, const Graph& card);

// Complete a card of a weakly distance-regular graph whose omitted pair is
// at distance 2 (mu' >= 2).
Graph reconstruct_wdr(int n, const WdrParams& params, const Graph& card);

// Full pipeline: complete / clique-union / srg / wdr in that order, then
// verify the rebuilt graph reproduces the deck.
std::pair<Graph, ReconstructionReport> reconstruct_from_deck(int n, const Deck& deck,
                                                             int workers = 1);

} // namespace deckrec
