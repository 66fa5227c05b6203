#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deckrec/generators.hpp"
#include "deckrec/recognize.hpp"

using namespace deckrec;

namespace {

Deck deck_of(const Graph& g) { return compute_deck(g, g.vertex_count() - 2); }

} // namespace

TEST_CASE("infer_regular_degree on regular graphs") {
    CHECK(infer_regular_degree(10, deck_of(petersen())) == 3);
    CHECK(infer_regular_degree(6, deck_of(complete_multipartite({3, 3}))) == 3);
    CHECK(infer_regular_degree(7, deck_of(complete(7))) == 6);
    CHECK(infer_regular_degree(6, deck_of(cycle(6))) == 2);
    CHECK(infer_regular_degree(7, deck_of(Graph(7))) == 0);
    // disconnected but regular
    CHECK(infer_regular_degree(7, deck_of(disjoint_union(cycle(3), cycle(4)))) == 2);
}

TEST_CASE("infer_regular_degree rejects irregular decks") {
    // path: 2e/n = 10/6 is not integral
    CHECK(!infer_regular_degree(6, deck_of(path(6))));
    // C5+K1: 2e/n = 10/6 again
    CHECK(!infer_regular_degree(6, deck_of(disjoint_union(cycle(5), path(1)))));
    // K4+K2: e = 7, 2e/n = 14/6
    CHECK(!infer_regular_degree(6, deck_of(disjoint_union(complete(4), complete(2)))));
    // right edge sum for 2-regular, but one card misses too few edges
    CHECK(!infer_regular_degree(6, deck_of(from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}}))));
}

TEST_CASE("infer_regular_degree preconditions") {
    CHECK_THROWS_AS(infer_regular_degree(5, compute_deck(complete(5), 3)), Error);
    CHECK_THROWS_AS(infer_regular_degree(10, compute_deck(petersen(), 7)), Error);
    CHECK_THROWS_AS(infer_regular_degree(9, compute_deck(petersen(), 8)), Error);
    try {
        infer_regular_degree(5, compute_deck(disjoint_union(cycle(4), path(1)), 3));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidArgument);
    }
}

TEST_CASE("classify_card splits adjacent from nonadjacent omissions") {
    const Deck d = deck_of(petersen());
    const int e = edge_count_from_deck(d);
    CHECK(e == 15);
    int adjacent_cards = 0, nonadjacent_cards = 0;
    for (const auto& [code, card] : d.cards()) {
        const CardClassification c = classify_card(card, 3, e);
        if (c.omitted_adjacent) {
            CHECK(c.common_count == 0); // lambda
            adjacent_cards += int(card.multiplicity);
        } else {
            CHECK(c.common_count == 1); // mu
            nonadjacent_cards += int(card.multiplicity);
        }
    }
    CHECK(adjacent_cards == 15);
    CHECK(nonadjacent_cards == 30);

    // K33: nonadjacent pairs (same part) share all 3 neighbors
    const Deck d33 = deck_of(complete_multipartite({3, 3}));
    const int e33 = edge_count_from_deck(d33);
    for (const auto& [code, card] : d33.cards()) {
        const CardClassification c = classify_card(card, 3, e33);
        CHECK(c.common_count == (c.omitted_adjacent ? 0 : 3));
    }
}

TEST_CASE("classify_card rejects a wrong degree") {
    const Deck d = deck_of(petersen());
    const Card& card = d.cards().begin()->second;
    try {
        classify_card(card, 4, edge_count_from_deck(d));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotRegularConsistent);
    }
}

TEST_CASE("recognize_srg on strongly regular decks") {
    CHECK(recognize_srg(10, deck_of(petersen())) == SrgParams{3, 0, 1});
    CHECK(recognize_srg(6, deck_of(complete_multipartite({3, 3}))) == SrgParams{3, 0, 3});
    CHECK(recognize_srg(6, deck_of(complete_multipartite({2, 2, 2}))) == SrgParams{4, 2, 4});
    CHECK(recognize_srg(9, deck_of(rook(3, 3))) == SrgParams{4, 1, 2});
    CHECK(recognize_srg(13, deck_of(paley(13))) == SrgParams{6, 2, 3});
}

TEST_CASE("recognize_srg returns absent where it should") {
    CHECK(!recognize_srg(6, deck_of(cycle(6))));          // mu varies (1 at d2, 0 at d3)
    CHECK(!recognize_srg(7, deck_of(complete(7))));       // no nonadjacent pair
    CHECK(!recognize_srg(7, deck_of(Graph(7))));          // no adjacent pair, mu = 0
    CHECK(!recognize_srg(6, deck_of(path(6))));           // irregular
    CHECK(!recognize_srg(8, deck_of(hypercube(3))));      // mu' = 2 but distance-3 pairs exist
    CHECK(!recognize_srg(6, deck_of(disjoint_union(complete(3), complete(3))))); // mu = 0
    CHECK(!recognize_srg(6, deck_of(rook(3, 2))));        // lambda varies in the prism
}

TEST_CASE("recognize_wdr on weakly distance-regular decks") {
    CHECK(recognize_wdr(8, deck_of(hypercube(3))) == WdrParams{3, 0, 2});
    CHECK(recognize_wdr(6, deck_of(cycle(6))) == WdrParams{2, 0, 1});
    CHECK(recognize_wdr(7, deck_of(cycle(7))) == WdrParams{2, 0, 1});
    CHECK(recognize_wdr(10, deck_of(petersen())) == WdrParams{3, 0, 1});
    CHECK(recognize_wdr(16, deck_of(hypercube(4))) == WdrParams{4, 0, 2});
    // strongly regular decks are weakly distance-regular with mu' = mu
    CHECK(recognize_wdr(6, deck_of(complete_multipartite({3, 3}))) == WdrParams{3, 0, 3});
}

TEST_CASE("recognize_wdr returns absent where it should") {
    CHECK(!recognize_wdr(6, deck_of(rook(3, 2))));   // prism: lambda varies
    CHECK(!recognize_wdr(7, deck_of(complete(7))));  // no nonadjacent card
    CHECK(!recognize_wdr(6, deck_of(path(6))));      // irregular
    CHECK(!recognize_wdr(7, deck_of(Graph(7))));     // every common count zero
    CHECK(!recognize_wdr(6, deck_of(disjoint_union(complete(3), complete(3)))));
}

TEST_CASE("is_complete") {
    CHECK(is_complete(7, deck_of(complete(7))));
    CHECK(is_complete(6, deck_of(complete(6))));
    CHECK(!is_complete(10, deck_of(petersen())));
    CHECK(!is_complete(6, deck_of(cycle(6))));

    // K6 minus one edge is not complete
    Graph k6e(6);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (!(i == 0 && j == 1)) k6e.add_edge(i, j);
    CHECK(!is_complete(6, deck_of(k6e)));

    CHECK_THROWS_AS(is_complete(3, compute_deck(complete(3), 1)), Error);
    CHECK_THROWS_AS(is_complete(7, compute_deck(complete(7), 4)), Error);
}

TEST_CASE("recognize_clique_union") {
    const auto two_triangles = recognize_clique_union(6, deck_of(disjoint_union(complete(3), complete(3))));
    CHECK(two_triangles == std::vector<int>{3, 3});

    const auto three_edges =
        recognize_clique_union(6, deck_of(disjoint_union(disjoint_union(complete(2), complete(2)), complete(2))));
    CHECK(three_edges == std::vector<int>{2, 2, 2});

    const auto one_clique = recognize_clique_union(7, deck_of(complete(7)));
    CHECK(one_clique == std::vector<int>{7});

    const auto isolated = recognize_clique_union(6, deck_of(Graph(6)));
    CHECK(isolated == std::vector<int>{1, 1, 1, 1, 1, 1});

    CHECK(!recognize_clique_union(6, deck_of(cycle(6))));      // P3s present
    CHECK(!recognize_clique_union(10, deck_of(petersen())));   // P3s present
    // P3-free but irregular: out of scope, absent
    CHECK(!recognize_clique_union(6, deck_of(disjoint_union(complete(4), complete(2)))));
}

TEST_CASE("recognize_clique_union propagates deck inconsistency") {
    // a synthetic P3-free deck that no graph ever produces: all n=7 cards
    // claimed to be K3+2K1 or K3+K2 with plausible edge totals
    Deck fake(7, 5);
    fake.add(from_edges(5, {{0, 1}, {1, 2}, {0, 2}}), 14);
    fake.add(from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}}), 7);
    try {
        recognize_clique_union(7, fake);
        FAIL("expected inconsistency");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InconsistentDeck);
    }
}
