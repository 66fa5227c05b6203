#include "deckrec/deck.hpp"

#include <algorithm>
#include <charconv>
#include <future>
#include <thread>
#include <vector>

#include "deckrec/graph6.hpp"

namespace deckrec {

namespace {

int resolve_workers(int workers, long long total) {
    if (workers <= 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        workers = hw ? int(hw) : 1;
    }
    if (total < workers) workers = int(std::max<long long>(total, 1));
    return workers;
}

// Lexicographically first k-subset of 0..n-1.
std::vector<int> first_subset(int k) {
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) s[i] = i;
    return s;
}

bool next_subset(std::vector<int>& s, int n) {
    const int k = int(s.size());
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i) --i;
    if (i < 0) return false;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    return true;
}

// Subset of the given lexicographic rank.
std::vector<int> unrank_subset(int n, int k, long long rank) {
    std::vector<int> s(k);
    int v = 0;
    for (int pos = 0; pos < k; ++pos) {
        while (true) {
            const long long below = binomial(n - v - 1, k - pos - 1);
            if (rank < below) break;
            rank -= below;
            ++v;
        }
        s[pos] = v++;
    }
    return s;
}

std::uint64_t subset_mask(const std::vector<int>& s) {
    std::uint64_t m = 0;
    for (int v : s) m |= std::uint64_t(1) << v;
    return m;
}

Deck deck_of_range(const Graph& g, int k, long long begin, long long end) {
    Deck d(g.vertex_count(), k);
    std::vector<int> subset = unrank_subset(g.vertex_count(), k, begin);
    for (long long r = begin; r < end; ++r) {
        d.add(induced_subgraph(g, subset_mask(subset)), 1);
        if (r + 1 < end) next_subset(subset, g.vertex_count());
    }
    return d;
}

} // namespace

Deck::Deck(int n, int k) : n_(n), k_(k) {
    if (n < 1 || n > Graph::max_vertices)
        fail(ErrorKind::InvalidArgument, "deck vertex count out of range");
    if (k < 1 || k > n)
        fail(ErrorKind::InvalidArgument, "deck card size must be between 1 and n");
}

long long Deck::total_multiplicity() const {
    long long t = 0;
    for (const auto& [code, card] : cards_) t += card.multiplicity;
    return t;
}

const Card* Deck::find(const CanonicalCode& code) const {
    const auto it = cards_.find(code);
    return it == cards_.end() ? nullptr : &it->second;
}

void Deck::add(const Graph& representative, long long multiplicity) {
    if (representative.vertex_count() != k_)
        fail(ErrorKind::InvalidArgument, "card has the wrong number of vertices");
    add_card(Card{canonical_form(representative), representative, multiplicity});
}

void Deck::add_card(Card card) {
    if (card.representative.vertex_count() != k_)
        fail(ErrorKind::InvalidArgument, "card has the wrong number of vertices");
    const auto [it, inserted] = cards_.try_emplace(card.code, std::move(card));
    if (!inserted) it->second.multiplicity += card.multiplicity;
}

Deck compute_deck(const Graph& g, int k, int workers) {
    const int n = g.vertex_count();
    if (k < 1 || k > n)
        fail(ErrorKind::InvalidArgument, "deck card size must be between 1 and n");

    const long long total = binomial(n, k);
    workers = resolve_workers(workers, total);
    if (workers == 1) return deck_of_range(g, k, 0, total);

    std::vector<std::future<Deck>> parts;
    parts.reserve(std::size_t(workers));
    for (int w = 0; w < workers; ++w) {
        const long long begin = total * w / workers;
        const long long end = total * (w + 1) / workers;
        parts.push_back(std::async(std::launch::async,
                                   [&g, k, begin, end] { return deck_of_range(g, k, begin, end); }));
    }
    // merge in rank order so first-seen representatives match a serial run
    Deck out(n, k);
    for (auto& part : parts) {
        const Deck part_deck = part.get();
        for (const auto& [code, card] : part_deck.cards()) out.add_card(card);
    }
    return out;
}

Deck subdeck(const Deck& deck, int k_prime) {
    if (k_prime < 1 || k_prime >= deck.k())
        fail(ErrorKind::InvalidArgument, "subdeck size must be between 1 and k-1");

    Deck raw(deck.n(), k_prime);
    for (const auto& [code, card] : deck.cards()) {
        std::vector<int> subset = first_subset(k_prime);
        do {
            raw.add(induced_subgraph(card.representative, subset_mask(subset)),
                    card.multiplicity);
        } while (next_subset(subset, deck.k()));
    }

    const long long factor = binomial(deck.n() - k_prime, deck.k() - k_prime);
    Deck out(deck.n(), k_prime);
    for (const auto& [code, card] : raw.cards()) {
        if (card.multiplicity % factor != 0)
            fail(ErrorKind::InconsistentDeck,
                 "subdeck multiplicities are not divisible by the overcount factor");
        out.add_card(Card{card.code, card.representative, card.multiplicity / factor});
    }
    return out;
}

bool decks_equal(const Deck& a, const Deck& b) {
    if (a.n() != b.n() || a.k() != b.k()) return false;
    if (a.class_count() != b.class_count()) return false;
    auto ia = a.cards().begin();
    auto ib = b.cards().begin();
    for (; ia != a.cards().end(); ++ia, ++ib) {
        if (ia->first != ib->first) return false;
        if (ia->second.multiplicity != ib->second.multiplicity) return false;
    }
    return true;
}

int edge_count_from_deck(const Deck& deck) {
    if (deck.n() < 4 || deck.k() != deck.n() - 2)
        fail(ErrorKind::InvalidArgument, "edge count needs an (n-2)-deck with n >= 4");

    long long weighted = 0;
    for (const auto& [code, card] : deck.cards())
        weighted += card.multiplicity * card.representative.edge_count();

    const long long factor = binomial(deck.n() - 2, 2);
    if (weighted % factor != 0)
        fail(ErrorKind::InconsistentDeck, "total card edge count is not divisible by C(n-2,2)");
    return int(weighted / factor);
}

int missing_edge_count(const Card& card, int e) {
    const int missing = e - card.representative.edge_count();
    if (missing < 0)
        fail(ErrorKind::InconsistentDeck, "card has more edges than the whole graph");
    return missing;
}

std::string format_deck(const Deck& deck) {
    std::string out = "deck n=" + std::to_string(deck.n()) + " k=" + std::to_string(deck.k()) + "\n";
    for (const auto& [code, card] : deck.cards()) {
        out += code.bytes;
        out += '\t';
        out += std::to_string(card.multiplicity);
        out += '\n';
    }
    return out;
}

Deck parse_deck(std::string_view text) {
    // header line
    const std::size_t nl = text.find('\n');
    if (nl == std::string_view::npos) fail(ErrorKind::ParseError, "deck file is missing its header line");
    const std::string_view header = text.substr(0, nl);

    int n = 0, k = 0;
    {
        const std::string_view prefix = "deck n=";
        if (header.substr(0, prefix.size()) != prefix)
            fail(ErrorKind::ParseError, "deck header must start with 'deck n='");
        const char* p = header.data() + prefix.size();
        const char* last = header.data() + header.size();
        auto r1 = std::from_chars(p, last, n);
        if (r1.ec != std::errc{} || std::string_view(r1.ptr, last - r1.ptr).substr(0, 3) != " k=")
            fail(ErrorKind::ParseError, "deck header must be 'deck n=<n> k=<k>'");
        auto r2 = std::from_chars(r1.ptr + 3, last, k);
        if (r2.ec != std::errc{} || r2.ptr != last)
            fail(ErrorKind::ParseError, "deck header must be 'deck n=<n> k=<k>'");
    }
    if (n < 1 || n > Graph::max_vertices || k < 1 || k > n)
        fail(ErrorKind::ParseError, "deck header sizes out of range");

    Deck deck(n, k);
    std::string_view rest = text.substr(nl + 1);
    while (!rest.empty()) {
        const std::size_t eol = rest.find('\n');
        const std::string_view line = rest.substr(0, eol);
        rest = eol == std::string_view::npos ? std::string_view{} : rest.substr(eol + 1);
        if (line.empty()) {
            if (!rest.empty()) fail(ErrorKind::ParseError, "blank line inside deck file");
            break;
        }

        const std::size_t tab = line.find('\t');
        if (tab == std::string_view::npos || line.find('\t', tab + 1) != std::string_view::npos)
            fail(ErrorKind::ParseError, "deck line must be '<graph6>\\t<multiplicity>'");

        const Graph rep = parse_graph6(line.substr(0, tab));
        if (rep.vertex_count() != k)
            fail(ErrorKind::ParseError, "deck card size disagrees with the header");

        long long mult = 0;
        const std::string_view mtext = line.substr(tab + 1);
        auto r = std::from_chars(mtext.data(), mtext.data() + mtext.size(), mult);
        if (r.ec != std::errc{} || r.ptr != mtext.data() + mtext.size() || mult <= 0)
            fail(ErrorKind::ParseError, "deck multiplicity must be a positive integer");

        const CanonicalCode code = canonical_form(rep);
        if (deck.find(code)) fail(ErrorKind::ParseError, "duplicate card class in deck file");
        deck.add_card(Card{code, rep, mult});
    }
    return deck;
}

std::uint64_t deck_digest(const Deck& deck) {
    std::uint64_t h = 1469598103934665603ull;
    const auto mix = [&h](unsigned char byte) {
        h ^= byte;
        h *= 1099511628211ull;
    };
    const auto mix_int = [&mix](long long v) {
        for (int i = 0; i < 8; ++i) mix((unsigned char)(v >> (8 * i)));
    };
    mix_int(deck.n());
    mix_int(deck.k());
    for (const auto& [code, card] : deck.cards()) {
        for (char c : code.bytes) mix((unsigned char)c);
        mix((unsigned char)'\t');
        mix_int(card.multiplicity);
    }
    return h;
}

} // namespace deckrec
