#include "ramsey/graph6.hpp"

namespace ramsey {

namespace {
constexpr int kBias = 63;
constexpr char kLongHeader = 126;  // '~'
}  // namespace

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(kBias + n));
    } else {
        // 18-bit header form, valid up to n = 258047; we only reach 64.
        out.push_back(kLongHeader);
        out.push_back(static_cast<char>(kBias + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(kBias + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(kBias + (n & 63)));
    }
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col) {
        for (int r = 0; r < col; ++r) {
            acc = (acc << 1) | (g.adjacent(r, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(kBias + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(kBias + (acc << (6 - nbits))));
    return out;
}

Graph parse_graph6(const std::string& text) {
    if (text.empty()) throw MalformedGraph6("empty graph6 string");
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= text.size()) throw MalformedGraph6("truncated graph6 string");
        unsigned char c = static_cast<unsigned char>(text[pos++]);
        if (c < kBias || c > kLongHeader)
            throw MalformedGraph6("character out of graph6 range");
        return c - kBias;
    };

    long n;
    if (static_cast<unsigned char>(text[0]) == kLongHeader) {
        ++pos;
        if (pos < text.size() && static_cast<unsigned char>(text[pos]) == kLongHeader)
            throw MalformedGraph6("eight-byte headers are not supported");
        long a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = next();
        if (n == 63) throw MalformedGraph6("malformed header");
    }
    if (n > kMaxVertices)
        throw MalformedGraph6("vertex count exceeds 64: " + std::to_string(n));

    Graph g(static_cast<int>(n));
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col) {
        for (int r = 0; r < col; ++r) {
            if (nbits == 0) {
                acc = next();
                nbits = 6;
            }
            if ((acc >> (nbits - 1)) & 1) g.add_edge(r, col);
            --nbits;
        }
    }
    if (nbits > 0 && (acc & ((1 << nbits) - 1)) != 0)
        throw MalformedGraph6("nonzero padding bits");
    if (pos != text.size()) throw MalformedGraph6("trailing garbage after graph data");
    return g;
}

}  // namespace ramsey
