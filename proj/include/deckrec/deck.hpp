#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "deckrec/canonical.hpp"
#include "deckrec/graph.hpp"

namespace deckrec {

struct Card {
    CanonicalCode code;
    Graph representative; // some labeled member of the class
    long long multiplicity;
};

// Multiset of isomorphism classes of k-vertex induced subgraphs of an
// n-vertex graph, keyed (and ordered) by canonical code.
class Deck {
public:
    Deck(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }

    const std::map<CanonicalCode, Card>& cards() const { return cards_; }
    std::size_t class_count() const { return cards_.size(); }
    long long total_multiplicity() const;

    const Card* find(const CanonicalCode& code) const;

    // Canonicalizes and merges; an already-present class keeps its
    // first-seen representative.
    void add(const Graph& representative, long long multiplicity);

    // Merges a pre-canonicalized card without recomputing its code.
    void add_card(Card card);

private:
    int n_, k_;
    std::map<CanonicalCode, Card> cards_;
};

// The k-deck of g. workers <= 0 means one worker per hardware thread; the
// result is identical for every worker count.
Deck compute_deck(const Graph& g, int k, int workers = 1);

// The k'-deck derived from a k-deck by re-subsampling every card and
// dividing by the overcount factor C(n-k', k-k').
Deck subdeck(const Deck& deck, int k_prime);

bool decks_equal(const Deck& a, const Deck& b);

// Edge count of the original graph, from an (n-2)-deck.
int edge_count_from_deck(const Deck& deck);

// Edges of the host graph missing from this card (host edge count e).
int missing_edge_count(const Card& card, int e);

// Text form: header "deck n=<n> k=<k>", then one "<graph6>\t<multiplicity>"
// line per class in canonical-code order, representatives canonically
// relabeled; equal decks serialize to identical bytes.
std::string format_deck(const Deck& deck);
Deck parse_deck(std::string_view text);

// Order-independent fingerprint (FNV-1a over the sorted class list).
std::uint64_t deck_digest(const Deck& deck);

} // namespace deckrec
