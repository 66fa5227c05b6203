#include "deckrec/canonical.hpp"

#include <algorithm>
#include <cstring>

#include "deckrec/graph6.hpp"

namespace deckrec {

namespace {

constexpr int kMaxN = Graph::max_vertices;
constexpr int kMaxBits = kMaxN * (kMaxN - 1) / 2;
constexpr int kMaxWords = (kMaxBits + 63) / 64;

// Ordered partition of the vertices: order[] lists vertices, start[s] marks
// slots where a cell begins. Cell order is driven only by label-independent
// data (cell positions and neighbor counts), so the partition reached from
// isomorphic graphs is the image of the same cell sequence.
struct State {
    int order[kMaxN];
    bool start[kMaxN + 1];
};

class Canonizer {
public:
    explicit Canonizer(const Graph& g) : n_(g.vertex_count()) {
        for (int v = 0; v < n_; ++v) rows_[v] = g.neighbor_mask(v);
    }

    // Returns the canonical vertex order (slot -> original vertex).
    std::vector<int> run() {
        State root;
        for (int v = 0; v < n_; ++v) root.order[v] = v;
        std::fill(root.start, root.start + n_ + 1, false);
        root.start[0] = root.start[n_] = true;
        have_best_ = false;
        search(root);
        return std::vector<int>(best_order_, best_order_ + n_);
    }

private:
    // Split cells by neighbor counts into splitter masks until equitable.
    void refine(State& st) const {
        std::uint64_t queue[4 * kMaxN];
        int head = 0, tail = 0;
        for (int s = 0; s < n_;) {
            int e = cell_end(st, s);
            queue[tail++] = cell_mask(st, s, e);
            s = e;
        }
        int counts[kMaxN];
        while (head < tail) {
            const std::uint64_t m = queue[head++];
            for (int s = 0; s < n_;) {
                const int e = cell_end(st, s);
                if (e - s > 1) {
                    bool uniform = true;
                    for (int t = s; t < e; ++t) {
                        counts[t] = std::popcount(rows_[st.order[t]] & m);
                        if (counts[t] != counts[s]) uniform = false;
                    }
                    if (!uniform) {
                        // stable insertion sort by count, ascending
                        for (int t = s + 1; t < e; ++t) {
                            const int c = counts[t], v = st.order[t];
                            int p = t;
                            while (p > s && counts[p - 1] > c) {
                                counts[p] = counts[p - 1];
                                st.order[p] = st.order[p - 1];
                                --p;
                            }
                            counts[p] = c;
                            st.order[p] = v;
                        }
                        int sub = s;
                        for (int t = s + 1; t <= e; ++t) {
                            if (t == e || counts[t] != counts[t - 1]) {
                                st.start[sub] = true;
                                std::uint64_t sm = 0;
                                for (int q = sub; q < t; ++q)
                                    sm |= std::uint64_t(1) << st.order[q];
                                queue[tail++] = sm;
                                sub = t;
                            }
                        }
                    }
                }
                s = e;
            }
        }
    }

    int cell_end(const State& st, int s) const {
        int e = s + 1;
        while (!st.start[e]) ++e;
        return e;
    }

    static std::uint64_t cell_mask(const State& st, int s, int e) {
        std::uint64_t m = 0;
        for (int t = s; t < e; ++t) m |= std::uint64_t(1) << st.order[t];
        return m;
    }

    // Vertices u,v are twins when they have identical adjacency outside {u,v}.
    bool all_twins(const State& st, int s, int e) const {
        for (int a = s; a < e; ++a)
            for (int b = a + 1; b < e; ++b) {
                const int u = st.order[a], v = st.order[b];
                const std::uint64_t out = ~((std::uint64_t(1) << u) | (std::uint64_t(1) << v));
                if ((rows_[u] & out) != (rows_[v] & out)) return false;
            }
        return true;
    }

    // Pack the upper triangle (column-major) of the first f slots; bits are
    // laid out MSB-first so word comparison equals bit-string comparison.
    int pack_prefix(const State& st, int f, std::uint64_t* words) const {
        int bits = 0;
        std::uint64_t cur = 0;
        int word = 0;
        for (int j = 1; j < f; ++j) {
            const std::uint64_t row = rows_[st.order[j]];
            for (int i = 0; i < j; ++i) {
                cur = cur << 1 | (row >> st.order[i] & 1);
                if (++bits % 64 == 0) words[word++] = cur, cur = 0;
            }
        }
        if (bits % 64 != 0) words[word] = cur << (64 - bits % 64);
        return bits;
    }

    // -1 / 0 / +1 comparing the first `bits` of a against best.
    int compare_prefix(const std::uint64_t* a, int bits) const {
        const int full = bits / 64;
        for (int w = 0; w < full; ++w) {
            if (a[w] != best_words_[w]) return a[w] < best_words_[w] ? -1 : 1;
        }
        const int rem = bits % 64;
        if (rem) {
            const std::uint64_t mask = ~std::uint64_t(0) << (64 - rem);
            const std::uint64_t x = a[full] & mask, y = best_words_[full] & mask;
            if (x != y) return x < y ? -1 : 1;
        }
        return 0;
    }

    void search(State st) {
        refine(st);

        int f = 0;
        while (f < n_ && st.start[f] && st.start[f + 1]) ++f;

        std::uint64_t words[kMaxWords];
        const int bits = pack_prefix(st, f, words);
        if (have_best_ && compare_prefix(words, bits) > 0) return;

        if (f == n_) {
            if (!have_best_ || compare_prefix(words, bits) < 0) {
                std::memcpy(best_words_, words, sizeof(std::uint64_t) * std::size_t((bits + 63) / 64));
                std::memcpy(best_order_, st.order, sizeof(int) * std::size_t(n_));
                have_best_ = true;
            }
            return;
        }

        const int e = cell_end(st, f);
        if (all_twins(st, f, e)) {
            // any order inside a twin cell yields the same string; fix ascending
            std::sort(st.order + f, st.order + e);
            for (int t = f; t < e; ++t) st.start[t] = true;
            search(st);
            return;
        }

        for (int idx = f; idx < e; ++idx) {
            State child = st;
            const int v = st.order[idx];
            child.order[f] = v;
            int w = f + 1;
            for (int t = f; t < e; ++t)
                if (st.order[t] != v) child.order[w++] = st.order[t];
            child.start[f + 1] = true;
            search(child);
        }
    }

    int n_;
    std::uint64_t rows_[kMaxN];
    std::uint64_t best_words_[kMaxWords];
    int best_order_[kMaxN];
    bool have_best_;
};

} // namespace

CanonicalCode canonical_form(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 1) return CanonicalCode{to_graph6(g)};

    Canonizer canon(g);
    const std::vector<int> order = canon.run();

    Graph relabeled(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (g.has_edge(order[i], order[j])) relabeled.add_edge(i, j);
    return CanonicalCode{to_graph6(relabeled)};
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    if (degree_sequence(a) != degree_sequence(b)) return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace deckrec
