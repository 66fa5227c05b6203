#include "deckrec/reconstruct.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "deckrec/generators.hpp"

namespace deckrec {

namespace {

std::vector<int> vertices_of_degree(const Graph& g, int d) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == d) out.push_back(v);
    return out;
}

void check_pair_in_S(const Graph& card, int k, int x, int y) {
    if (x == y) fail(ErrorKind::InvalidArgument, "pair classification needs two distinct vertices");
    if (card.degree(x) != k - 1 || card.degree(y) != k - 1)
        fail(ErrorKind::InvalidArgument, "pair classification needs two degree-(k-1) vertices");
}

PairLabel label_from_counts(int common, int rho) {
    if (common == rho) return PairLabel::Different;
    if (common == rho - 1) return PairLabel::Same;
    fail(ErrorKind::InconsistentCard,
         "common neighbor count " + std::to_string(common) + " fits neither " +
             std::to_string(rho) + " (different) nor " + std::to_string(rho - 1) + " (same)");
}

// Checks the degree profile of a nonadjacent-omitted card (common vertices
// of degree k-2, attachment set S of degree k-1, the rest of degree k) and
// attaches the omitted pair according to the pair classifier.
template <typename Classify>
Graph complete_nonadjacent_card(int n, int k, int mu, const Graph& card, Classify classify) {
    if (card.vertex_count() != n - 2)
        fail(ErrorKind::InvalidArgument, "card must have n-2 vertices");

    const std::vector<int> M = vertices_of_degree(card, k - 2);
    const std::vector<int> S = vertices_of_degree(card, k - 1);
    const int plain = int(vertices_of_degree(card, k).size());

    if (int(M.size()) != mu || int(S.size()) != 2 * k - 2 * mu ||
        int(M.size() + S.size()) + plain != card.vertex_count())
        fail(ErrorKind::NotANonadjacentCard,
             "degree profile does not match a nonadjacent-omitted card");

    PairLabels labels;
    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = i + 1; j < S.size(); ++j)
            labels[{S[i], S[j]}] = classify(card, S[i], S[j]);
    const auto [A, B] = split_S(S, labels);

    Graph g(n);
    for (int i = 0; i < card.vertex_count(); ++i)
        for (int j = i + 1; j < card.vertex_count(); ++j)
            if (card.has_edge(i, j)) g.add_edge(i, j);
    const int u = n - 2, v = n - 1;
    for (int x : A) g.add_edge(u, x);
    for (int x : B) g.add_edge(v, x);
    for (int x : M) {
        g.add_edge(u, x);
        g.add_edge(v, x);
    }
    return g;
}

} // namespace

Graph reconstruct_regular_1card(int k, const Graph& card) {
    if (k < 0) fail(ErrorKind::InvalidArgument, "degree must be nonnegative");
    if (card.vertex_count() + 1 > Graph::max_vertices)
        fail(ErrorKind::InvalidArgument, "reconstructed graph would be too large");

    const std::vector<int> S = vertices_of_degree(card, k - 1);
    const std::vector<int> rest = vertices_of_degree(card, k);
    if (int(S.size()) != k || int(S.size() + rest.size()) != card.vertex_count())
        fail(ErrorKind::NotACardOfRegular,
             "card does not have exactly k degree-(k-1) vertices and the rest of degree k");

    Graph g(card.vertex_count() + 1);
    for (int i = 0; i < card.vertex_count(); ++i)
        for (int j = i + 1; j < card.vertex_count(); ++j)
            if (card.has_edge(i, j)) g.add_edge(i, j);
    for (int x : S) g.add_edge(card.vertex_count(), x);
    return g;
}

PairLabel classify_pair_srg(const Graph& card, const SrgParams& params, int x, int y) {
    check_pair_in_S(card, params.k, x, y);
    const int rho = card.has_edge(x, y) ? params.lambda : params.mu;
    return label_from_counts(common_neighbors(card, x, y), rho);
}

PairLabel classify_pair_wdr(const Graph& card, const WdrParams& params, int x, int y) {
    if (params.mu_prime < 2)
        fail(ErrorKind::Mu1Unsupported, "pair classification needs mu' >= 2");
    check_pair_in_S(card, params.k, x, y);

    if (card.has_edge(x, y))
        return label_from_counts(common_neighbors(card, x, y), params.lambda);
    const int common = common_neighbors(card, x, y);
    if (common == 0) return PairLabel::Different; // distance 3 in the card, one neighbor each side
    return label_from_counts(common, params.mu_prime);
}

std::pair<std::vector<int>, std::vector<int>> split_S(const std::vector<int>& S,
                                                      const PairLabels& labels) {
    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = i + 1; j < S.size(); ++j) {
            const auto key = std::minmax(S[i], S[j]);
            if (!labels.count({key.first, key.second}))
                fail(ErrorKind::InvalidArgument, "labels must cover every pair of S");
        }
    if (labels.size() != std::size_t(binomial(int(S.size()), 2)))
        fail(ErrorKind::InvalidArgument, "labels must mention only pairs of S");

    if (S.empty()) return {{}, {}};

    // union-find with side parity relative to the parent
    std::map<int, int> parent, side;
    for (int v : S) parent[v] = v, side[v] = 0;
    const auto find = [&](int v) {
        int p = 0;
        int root = v;
        while (parent[root] != root) p ^= side[root], root = parent[root];
        while (parent[v] != root) {
            const int next = parent[v], s = side[v];
            parent[v] = root;
            side[v] = p;
            p ^= s;
            v = next;
        }
        return root;
    };
    for (const auto& [pair, label] : labels) {
        const int want = label == PairLabel::Same ? 0 : 1;
        const int ra = find(pair.first), rb = find(pair.second);
        if (ra == rb) {
            if ((side[pair.first] ^ side[pair.second]) != want)
                fail(ErrorKind::InconsistentCard, "pair labels admit no two-sided split");
        } else {
            parent[ra] = rb;
            side[ra] = side[pair.first] ^ side[pair.second] ^ want;
        }
    }

    const int anchor = *std::min_element(S.begin(), S.end());
    find(anchor);
    const int anchor_side = side[anchor];
    std::vector<int> A, B;
    for (int v : S) {
        find(v);
        (side[v] == anchor_side ? A : B).push_back(v);
    }
    std::sort(A.begin(), A.end());
    std::sort(B.begin(), B.end());
    return {A, B};
}

Graph reconstruct_srg(int n, const SrgParams& params, const Graph& card) {
    if (n < 6) fail(ErrorKind::InvalidArgument, "reconstruction needs n >= 6");
    return complete_nonadjacent_card(
        n, params.k, params.mu, card,
        [&params](const Graph& c, int x, int y) { return classify_pair_srg(c, params, x, y); });
}

Graph reconstruct_wdr(int n, const WdrParams& params, const Graph& card) {
    if (n < 6) fail(ErrorKind::InvalidArgument, "reconstruction needs n >= 6");
    if (params.mu_prime < 2)
        fail(ErrorKind::Mu1Unsupported, "reconstruction from a deck with mu' = 1 is unsupported");
    if (card.vertex_count() == n - 2 && vertices_of_degree(card, params.k - 2).empty())
        fail(ErrorKind::NeedDistance2Card,
             "card's omitted pair is at distance > 2; use a card with degree-(k-2) vertices");
    return complete_nonadjacent_card(
        n, params.k, params.mu_prime, card,
        [&params](const Graph& c, int x, int y) { return classify_pair_wdr(c, params, x, y); });
}

std::pair<Graph, ReconstructionReport> reconstruct_from_deck(int n, const Deck& deck,
                                                             int workers) {
    if (n < 6) fail(ErrorKind::InvalidArgument, "reconstruction needs n >= 6");
    if (deck.n() != n) fail(ErrorKind::InvalidArgument, "deck size disagrees with n");
    if (deck.k() != n - 2) fail(ErrorKind::InvalidArgument, "reconstruction needs an (n-2)-deck");
    if (deck.total_multiplicity() != binomial(n, 2))
        fail(ErrorKind::InconsistentDeck, "deck must hold C(n,2) cards");

    Graph g(1);
    ReconstructionReport report{};

    if (is_complete(n, deck)) {
        g = complete(n);
        report.branch = Branch::Complete;
        report.k = n - 1;
        report.lambda = n - 2;
    } else if (const auto parts = recognize_clique_union(n, deck)) {
        const int size = parts->front();
        g = complete(size);
        for (std::size_t i = 1; i < parts->size(); ++i) g = disjoint_union(g, complete(size));
        report.branch = Branch::CliqueUnion;
        report.k = size - 1;
        report.lambda = size > 1 ? size - 2 : 0;
    } else if (const auto srg = recognize_srg(n, deck)) {
        const int e = edge_count_from_deck(deck);
        const Card* chosen = nullptr;
        for (const auto& [code, card] : deck.cards())
            if (!classify_card(card, srg->k, e).omitted_adjacent) {
                chosen = &card;
                break; // map order = code order, so this is the smallest code
            }
        if (!chosen) fail(ErrorKind::InconsistentDeck, "no nonadjacent-omitted card present");
        g = reconstruct_srg(n, *srg, chosen->representative);
        report.branch = Branch::Srg;
        report.k = srg->k;
        report.lambda = srg->lambda;
        report.mu = srg->mu;
        report.card_code = chosen->code;
        report.class_sizes = {std::popcount(g.neighbor_mask(n - 2) & ~g.neighbor_mask(n - 1)),
                              std::popcount(g.neighbor_mask(n - 1) & ~g.neighbor_mask(n - 2))};
    } else if (const auto wdr = recognize_wdr(n, deck)) {
        if (wdr->mu_prime < 2)
            fail(ErrorKind::Mu1Unsupported,
                 "deck is weakly distance-regular with mu' = 1; reconstruction unsupported");
        const int e = edge_count_from_deck(deck);
        const Card* chosen = nullptr;
        for (const auto& [code, card] : deck.cards()) {
            const CardClassification c = classify_card(card, wdr->k, e);
            if (!c.omitted_adjacent && c.common_count > 0) {
                chosen = &card;
                break; // smallest-code card whose omitted pair is at distance 2
            }
        }
        if (!chosen) fail(ErrorKind::NeedDistance2Card, "no distance-2 card in the deck");
        g = reconstruct_wdr(n, *wdr, chosen->representative);
        report.branch = Branch::Wdr;
        report.k = wdr->k;
        report.lambda = wdr->lambda;
        report.mu = wdr->mu_prime;
        report.card_code = chosen->code;
        report.class_sizes = {std::popcount(g.neighbor_mask(n - 2) & ~g.neighbor_mask(n - 1)),
                              std::popcount(g.neighbor_mask(n - 1) & ~g.neighbor_mask(n - 2))};
    } else {
        fail(ErrorKind::Unrecognized, "deck matches no supported reconstruction branch");
    }

    if (!decks_equal(compute_deck(g, n - 2, workers), deck))
        fail(ErrorKind::DeckMismatch, "reconstructed graph does not reproduce the deck");
    report.verified = true;
    return {std::move(g), report};
}

} // namespace deckrec
