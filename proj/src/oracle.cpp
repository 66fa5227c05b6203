#include "deckrec/oracle.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <thread>

namespace deckrec {

namespace {

constexpr int kMaxOracleN = 7;

int resolve_workers(int workers, long long total) {
    if (workers <= 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        workers = hw ? int(hw) : 1;
    }
    if (total < workers) workers = int(std::max<long long>(total, 1));
    return workers;
}

// Graph whose upper-triangle bits (column-major, pair t = (i,j)) are `mask`.
Graph graph_from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int t = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++t)
            if (mask >> t & 1) g.add_edge(i, j);
    return g;
}

using ClassMap = std::map<CanonicalCode, std::uint64_t>; // code -> first mask seen

ClassMap classes_in_range(int n, std::uint64_t begin, std::uint64_t end) {
    ClassMap classes;
    for (std::uint64_t mask = begin; mask < end; ++mask)
        classes.try_emplace(canonical_form(graph_from_mask(n, mask)), mask);
    return classes;
}

void check_oracle_n(int n) {
    if (n < 1 || n > kMaxOracleN)
        fail(ErrorKind::OutOfOracleRange,
             "exhaustive enumeration covers only 1 <= n <= " + std::to_string(kMaxOracleN));
}

} // namespace

std::vector<Graph> enumerate_graphs(int n, int workers) {
    check_oracle_n(n);

    const std::uint64_t total = std::uint64_t(1) << (n * (n - 1) / 2);
    workers = resolve_workers(workers, (long long)total);

    ClassMap classes;
    if (workers == 1) {
        classes = classes_in_range(n, 0, total);
    } else {
        std::vector<std::future<ClassMap>> parts;
        parts.reserve(std::size_t(workers));
        for (int w = 0; w < workers; ++w) {
            const std::uint64_t begin = total / std::uint64_t(workers) * std::uint64_t(w);
            const std::uint64_t end =
                w + 1 == workers ? total : total / std::uint64_t(workers) * std::uint64_t(w + 1);
            parts.push_back(std::async(std::launch::async,
                                       [n, begin, end] { return classes_in_range(n, begin, end); }));
        }
        // keep the lowest-mask representative, as a serial sweep would
        for (auto& part : parts) {
            const ClassMap part_map = part.get();
            for (const auto& [code, mask] : part_map) {
                const auto it = classes.find(code);
                if (it == classes.end())
                    classes.emplace(code, mask);
                else if (mask < it->second)
                    it->second = mask;
            }
        }
    }

    std::vector<Graph> out;
    out.reserve(classes.size());
    for (const auto& [code, mask] : classes) out.push_back(graph_from_mask(n, mask));
    return out;
}

PreimageResult find_deck_preimages(int n, const Deck& deck, int cap, int workers) {
    check_oracle_n(n);
    if (deck.n() != n) fail(ErrorKind::InvalidArgument, "deck size disagrees with n");
    if (cap < 1) fail(ErrorKind::InvalidArgument, "preimage cap must be positive");

    PreimageResult result;
    result.digest = deck_digest(deck);
    for (const Graph& g : enumerate_graphs(n, workers)) {
        if (!decks_equal(compute_deck(g, deck.k()), deck)) continue;
        if (int(result.preimages.size()) == cap) {
            result.truncated = true;
            break;
        }
        result.preimages.push_back(canonical_form(g));
    }
    return result;
}

bool is_l_reconstructible(const Graph& g, int l, int workers) {
    const int n = g.vertex_count();
    check_oracle_n(n);
    if (l < 1 || l >= n)
        fail(ErrorKind::InvalidArgument, "deck size n-l must leave at least one vertex");

    const Deck deck = compute_deck(g, n - l, workers);
    const PreimageResult r = find_deck_preimages(n, deck, 2, workers);
    return !r.truncated && r.preimages.size() == 1 && r.preimages.front() == canonical_form(g);
}

std::vector<std::vector<CanonicalCode>> find_collisions(int n, int k, int workers) {
    check_oracle_n(n);
    if (k < 1 || k >= n)
        fail(ErrorKind::InvalidArgument, "collision deck size must be between 1 and n-1");

    const std::vector<Graph> classes = enumerate_graphs(n, workers);
    std::vector<Deck> decks;
    decks.reserve(classes.size());
    for (const Graph& g : classes) decks.push_back(compute_deck(g, k));

    // bucket by digest, then confirm with exact equality
    std::map<std::uint64_t, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < decks.size(); ++i)
        buckets[deck_digest(decks[i])].push_back(i);

    std::vector<std::vector<std::size_t>> groups;
    for (const auto& [digest, members] : buckets) {
        if (members.size() < 2) continue;
        std::vector<std::vector<std::size_t>> sub;
        for (const std::size_t i : members) {
            bool placed = false;
            for (auto& s : sub)
                if (decks_equal(decks[s.front()], decks[i])) {
                    s.push_back(i);
                    placed = true;
                    break;
                }
            if (!placed) sub.push_back({i});
        }
        for (auto& s : sub)
            if (s.size() >= 2) groups.push_back(std::move(s));
    }

    std::vector<std::vector<CanonicalCode>> out;
    out.reserve(groups.size());
    for (auto& g : groups) {
        std::vector<CanonicalCode> codes;
        codes.reserve(g.size());
        for (const std::size_t i : g) codes.push_back(canonical_form(classes[i]));
        out.push_back(std::move(codes));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace deckrec
