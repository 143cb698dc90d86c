#include "isolab/graph6.hpp"

namespace isolab {

namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;

}  // namespace

// Body bits enumerate the upper triangle column by column: (0,1),(0,2),(1,2),(0,3),...
// packed six per byte, most significant bit first, zero padded.
Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw Graph6Error(Graph6Error::Kind::EmptyLine, "graph6: empty line");
    const int lead = static_cast<unsigned char>(text[0]);
    if (lead < kBias || lead > kBias + kGraph6MaxOrder) {
        throw Graph6Error(Graph6Error::Kind::BadLength,
                          "graph6: length byte " + std::to_string(lead) + " outside short form");
    }
    const int n = lead - kBias;
    const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t byte_count = (bit_count + 5) / 6;
    const std::string_view body = text.substr(1);
    for (char c : body) {
        const int b = static_cast<unsigned char>(c);
        if (b < kBias || b > kMaxByte) {
            throw Graph6Error(Graph6Error::Kind::CharOutOfRange,
                              "graph6: byte " + std::to_string(b) + " out of range");
        }
    }
    if (body.size() != byte_count) {
        throw Graph6Error(Graph6Error::Kind::WrongByteCount,
                          "graph6: expected " + std::to_string(byte_count) + " body bytes, got " +
                              std::to_string(body.size()));
    }

    std::vector<VertexSet> rows(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int chunk = static_cast<unsigned char>(body[k / 6]) - kBias;
            if ((chunk >> (5 - k % 6)) & 1) {
                rows[i].insert(j);
                rows[j].insert(i);
            }
        }
    }
    if (byte_count > 0) {
        const int pad = static_cast<int>(byte_count * 6 - bit_count);
        const int last = static_cast<unsigned char>(body.back()) - kBias;
        if ((last & ((1 << pad) - 1)) != 0) {
            throw Graph6Error(Graph6Error::Kind::NonzeroPadding, "graph6: nonzero padding bits");
        }
    }
    return Graph::from_rows(std::move(rows));
}

std::string emit_graph6(const Graph& g) {
    const int n = g.n();
    if (n > kGraph6MaxOrder) {
        throw CapacityError("graph6 short form supports at most 62 vertices");
    }
    std::string out;
    out.push_back(static_cast<char>(n + kBias));
    int chunk = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + kBias));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
    return out;
}

}  // namespace isolab
