#include "deckrec/recognize.hpp"

namespace deckrec {

namespace {

void check_recognition_input(int n, const Deck& deck) {
    if (n < 6) fail(ErrorKind::InvalidArgument, "deck recognition needs n >= 6");
    if (deck.n() != n) fail(ErrorKind::InvalidArgument, "deck size disagrees with n");
    if (deck.k() != n - 2) fail(ErrorKind::InvalidArgument, "deck recognition needs an (n-2)-deck");
}

int count_degree(const Graph& g, int d) {
    int c = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == d) ++c;
    return c;
}

} // namespace

std::optional<int> infer_regular_degree(int n, const Deck& deck) {
    check_recognition_input(n, deck);

    const int e = edge_count_from_deck(deck);
    if ((2LL * e) % n != 0) return std::nullopt;
    const int k = int(2LL * e / n);
    if (k > n - 1) return std::nullopt;

    for (const auto& [code, card] : deck.cards()) {
        const int missing = missing_edge_count(card, e);
        if (missing != 2 * k - 1 && missing != 2 * k) return std::nullopt;
    }
    return k;
}

CardClassification classify_card(const Card& card, int k, int e) {
    const int missing = missing_edge_count(card, e);
    if (missing != 2 * k - 1 && missing != 2 * k)
        fail(ErrorKind::NotRegularConsistent,
             "card misses neither 2k-1 nor 2k edges of a k-regular graph");
    const bool adjacent = missing == 2 * k - 1;
    return CardClassification{adjacent, count_degree(card.representative, k - 2)};
}

std::optional<SrgParams> recognize_srg(int n, const Deck& deck) {
    const std::optional<int> k = infer_regular_degree(n, deck);
    if (!k) return std::nullopt;

    const int e = edge_count_from_deck(deck);
    std::optional<int> lambda, mu;
    for (const auto& [code, card] : deck.cards()) {
        const CardClassification c = classify_card(card, *k, e);
        std::optional<int>& slot = c.omitted_adjacent ? lambda : mu;
        if (slot && *slot != c.common_count) return std::nullopt;
        slot = c.common_count;
    }

    if (!lambda || !mu) return std::nullopt;
    if (*mu < 1 || *mu > *k) return std::nullopt;
    if (*lambda < 0 || *lambda > *k - 1) return std::nullopt;
    return SrgParams{*k, *lambda, *mu};
}

std::optional<WdrParams> recognize_wdr(int n, const Deck& deck) {
    const std::optional<int> k = infer_regular_degree(n, deck);
    if (!k) return std::nullopt;

    const int e = edge_count_from_deck(deck);
    std::optional<int> lambda, mu_prime;
    for (const auto& [code, card] : deck.cards()) {
        const CardClassification c = classify_card(card, *k, e);
        if (c.omitted_adjacent) {
            if (lambda && *lambda != c.common_count) return std::nullopt;
            lambda = c.common_count;
        } else if (c.common_count > 0) { // zero commons = omitted pair beyond distance 2
            if (mu_prime && *mu_prime != c.common_count) return std::nullopt;
            mu_prime = c.common_count;
        }
    }

    if (!lambda || !mu_prime) return std::nullopt;
    if (*mu_prime > *k) return std::nullopt;
    if (*lambda < 0 || *lambda > *k - 1) return std::nullopt;
    return WdrParams{*k, *lambda, *mu_prime};
}

bool is_complete(int n, const Deck& deck) {
    if (n < 4) fail(ErrorKind::InvalidArgument, "completeness test needs n >= 4");
    if (deck.n() != n) fail(ErrorKind::InvalidArgument, "deck size disagrees with n");
    if (deck.k() != n - 2) fail(ErrorKind::InvalidArgument, "completeness test needs an (n-2)-deck");

    const long long full = binomial(deck.k(), 2);
    for (const auto& [code, card] : deck.cards())
        if (card.representative.edge_count() != full) return false;
    return true;
}

std::optional<std::vector<int>> recognize_clique_union(int n, const Deck& deck) {
    check_recognition_input(n, deck);

    const Deck triples = subdeck(deck, 3);
    const CanonicalCode p3 = canonical_form(from_edges(3, {{0, 1}, {1, 2}}));
    if (triples.find(p3)) return std::nullopt;

    const std::optional<int> k = infer_regular_degree(n, deck);
    if (!k) return std::nullopt;

    if (n % (*k + 1) != 0)
        fail(ErrorKind::InconsistentDeck,
             "P3-free deck of a regular graph needs k+1 dividing n");
    return std::vector<int>(std::size_t(n / (*k + 1)), *k + 1);
}

} // namespace deckrec
