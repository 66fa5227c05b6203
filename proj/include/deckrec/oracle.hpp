#pragma once

#include <cstdint>
#include <vector>

#include "deckrec/deck.hpp"

namespace deckrec {

struct PreimageResult {
    std::uint64_t digest = 0; // deck_digest of the query deck
    std::vector<CanonicalCode> preimages;
    bool truncated = false;
};

// One representative per isomorphism class of n-vertex graphs, in canonical
// code order. Exhaustive over all 2^C(n,2) labeled graphs, so n <= 7.
std::vector<Graph> enumerate_graphs(int n, int workers = 1);

// All isomorphism classes on deck.n() vertices whose deck.k()-deck equals
// the given deck, stopping after cap matches.
PreimageResult find_deck_preimages(int n, const Deck& deck, int cap, int workers = 1);

// Whether the (n-l)-deck of g determines g among all n-vertex graphs.
bool is_l_reconstructible(const Graph& g, int l, int workers = 1);

// Groups of two or more isomorphism classes on n vertices sharing a k-deck,
// each group in code order, groups ordered by their first member.
std::vector<std::vector<CanonicalCode>> find_collisions(int n, int k, int workers = 1);

} // namespace deckrec
