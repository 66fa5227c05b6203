#pragma once

#include <optional>
#include <vector>

#include "deckrec/deck.hpp"

namespace deckrec {

// Parameters (k, lambda, mu) of a strongly regular graph: k-regular,
// adjacent pairs share lambda neighbors, nonadjacent pairs share mu >= 1.
struct SrgParams {
    int k;
    int lambda;
    int mu;

    friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

// Parameters (k, lambda, mu_prime) of a weakly distance-regular graph:
// k-regular, adjacent pairs share lambda neighbors, pairs at distance two
// share mu_prime neighbors.
struct WdrParams {
    int k;
    int lambda;
    int mu_prime;

    friend bool operator==(const WdrParams&, const WdrParams&) = default;
};

// What an (n-2)-deck card of a k-regular graph says about its omitted pair:
// adjacent-omitted cards miss 2k-1 host edges, nonadjacent-omitted miss 2k,
// and the omitted pair's common neighbors are the card's degree-(k-2)
// vertices.
struct CardClassification {
    bool omitted_adjacent;
    int common_count;

    friend bool operator==(const CardClassification&, const CardClassification&) = default;
};

// Degree k of the original graph if the (n-2)-deck is consistent with a
// k-regular graph (2e/n integral, every card missing 2k-1 or 2k edges).
std::optional<int> infer_regular_degree(int n, const Deck& deck);

CardClassification classify_card(const Card& card, int k, int e);

// Present iff every adjacent-omitted card shows the same common count
// lambda, every nonadjacent-omitted card the same count mu, with both card
// kinds present and mu >= 1.
std::optional<SrgParams> recognize_srg(int n, const Deck& deck);

// Like recognize_srg, but nonadjacent-omitted cards with zero common
// neighbors are allowed (omitted pair at distance > 2); the remaining
// nonadjacent counts must agree on a single mu_prime >= 1.
std::optional<WdrParams> recognize_wdr(int n, const Deck& deck);

bool is_complete(int n, const Deck& deck);

// Part sizes (all equal to k+1, largest first) when the deck is P3-free and
// consistent with a k-regular graph, i.e. a disjoint union of equal cliques.
std::optional<std::vector<int>> recognize_clique_union(int n, const Deck& deck);

} // namespace deckrec
