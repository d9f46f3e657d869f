#include "gcensus/graph6.hpp"

#include <istream>
#include <ostream>

#include "gcensus/config.hpp"
#include "gcensus/errors.hpp"

namespace gcensus {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void append_sextets(std::string& out, std::uint64_t value, int count) {
    for (int i = count - 1; i >= 0; --i)
        out.push_back(static_cast<char>(((value >> (6 * i)) & 63) + 63));
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    const std::int64_t n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        append_sextets(out, static_cast<std::uint64_t>(n), 3);
    } else {
        out.push_back('~');
        out.push_back('~');
        append_sextets(out, static_cast<std::uint64_t>(n), 6);
    }
    // Upper triangle in column order, packed big-endian 6 bits per byte.
    int acc = 0, acc_bits = 0;
    for (int v = 1; v < n; ++v) {
        const std::uint64_t* rv = g.row(v);
        for (int u = 0; u < v; ++u) {
            int bit = (rv[u >> 6] >> (u & 63)) & 1u;
            acc = (acc << 1) | bit;
            if (++acc_bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                acc_bits = 0;
            }
        }
    }
    if (acc_bits > 0) out.push_back(static_cast<char>((acc << (6 - acc_bits)) + 63));
    return out;
}

Graph graph6_decode(std::string_view bytes) {
    std::size_t base = 0;
    if (bytes.substr(0, kHeader.size()) == kHeader) base = kHeader.size();
    std::string_view s = bytes.substr(base);
    if (s.empty()) throw MalformedGraph6("empty graph6 record", base);

    for (std::size_t i = 0; i < s.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw MalformedGraph6("byte outside graph6 alphabet", base + i);
    }

    auto sextet = [&](std::size_t i) { return static_cast<std::uint64_t>(s[i] - 63); };

    std::size_t pos = 0;
    std::uint64_t n64 = 0;
    if (s[0] != '~') {
        n64 = sextet(0);
        pos = 1;
    } else if (s.size() >= 2 && s[1] != '~') {
        if (s.size() < 4) throw MalformedGraph6("truncated order field", base + s.size());
        n64 = (sextet(1) << 12) | (sextet(2) << 6) | sextet(3);
        if (n64 < 63) throw MalformedGraph6("non-canonical order field", base + 1);
        pos = 4;
    } else {
        if (s.size() < 8) throw MalformedGraph6("truncated order field", base + s.size());
        for (int i = 0; i < 6; ++i) n64 = (n64 << 6) | sextet(2 + i);
        if (n64 < 258048) throw MalformedGraph6("non-canonical order field", base + 2);
        pos = 8;
    }
    if (n64 > static_cast<std::uint64_t>(max_order()))
        throw TooLarge("graph6 order " + std::to_string(n64) + " exceeds max_order() = " +
                       std::to_string(max_order()));
    int n = static_cast<int>(n64);

    std::int64_t pair_bits = static_cast<std::int64_t>(n) * (n - 1) / 2;
    std::size_t need = static_cast<std::size_t>((pair_bits + 5) / 6);
    if (s.size() - pos < need)
        throw MalformedGraph6("truncated adjacency data", base + s.size());
    if (s.size() - pos > need)
        throw MalformedGraph6("trailing bytes after adjacency data", base + pos + need);

    Graph::Builder b(n);
    std::int64_t bit_index = 0;
    int u = 0, v = 1;
    for (std::size_t i = pos; i < s.size(); ++i) {
        std::uint64_t word = sextet(i);
        for (int j = 5; j >= 0; --j, ++bit_index) {
            int bit = (word >> j) & 1u;
            if (bit_index >= pair_bits) {
                if (bit) throw MalformedGraph6("nonzero padding bit", base + i);
                continue;
            }
            if (bit) b.add_edge(u, v);
            if (++u == v) {
                u = 0;
                ++v;
            }
        }
    }
    return std::move(b).build();
}

std::vector<Graph> graph6_read_lines(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        try {
            out.push_back(graph6_decode(line));
        } catch (const MalformedGraph6& e) {
            throw MalformedGraph6("line " + std::to_string(lineno) + ": " + e.what(),
                                  e.byte_offset);
        }
    }
    return out;
}

void graph6_write_line(std::ostream& out, const Graph& g) {
    out << graph6_encode(g) << '\n';
}

}  // namespace gcensus
