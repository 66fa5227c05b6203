#include "deckrec/graph6.hpp"

namespace deckrec {

namespace {
constexpr int kBias = 63;
}

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    out.reserve(1 + (std::size_t(n) * (n - 1) / 2 + 5) / 6);
    out.push_back(char(kBias + n));

    int group = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = group << 1 | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(char(kBias + group));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(char(kBias + (group << (6 - filled))));
    return out;
}

Graph parse_graph6(std::string_view text) {
    if (text.empty()) fail(ErrorKind::ParseError, "empty graph6 string");

    const int first = (unsigned char)text[0];
    if (first == 126) fail(ErrorKind::ParseError, "long-form graph6 sizes are not supported");
    if (first < kBias + 1 || first > kBias + Graph::max_vertices)
        fail(ErrorKind::ParseError, "graph6 size byte out of range");

    const int n = first - kBias;
    const long long nbits = (long long)n * (n - 1) / 2;
    const long long nbytes = (nbits + 5) / 6;
    if ((long long)text.size() != 1 + nbytes)
        fail(ErrorKind::ParseError, "graph6 string has wrong length for its size byte");

    Graph g(n);
    long long bit = 0;
    int i = 0, j = 1;
    for (long long b = 0; b < nbytes; ++b) {
        const int byte = (unsigned char)text[1 + b];
        if (byte < kBias || byte > kBias + 63)
            fail(ErrorKind::ParseError, "graph6 data byte out of range");
        const int group = byte - kBias;
        for (int t = 5; t >= 0; --t, ++bit) {
            const int value = group >> t & 1;
            if (bit < nbits) {
                if (value) g.add_edge(i, j);
                if (++i == j) {
                    i = 0;
                    ++j;
                }
            } else if (value) {
                fail(ErrorKind::ParseError, "graph6 padding bits must be zero");
            }
        }
    }
    return g;
}

} // namespace deckrec
