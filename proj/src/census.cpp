#include "gcensus/census.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "gcensus/analyzers.hpp"
#include "gcensus/errors.hpp"

namespace gcensus {

namespace {

std::int64_t c2(std::int64_t x) { return x < 2 ? 0 : x * (x - 1) / 2; }
std::int64_t c3(std::int64_t x) { return x < 3 ? 0 : x * (x - 1) * (x - 2) / 6; }
std::int64_t c4(std::int64_t x) { return x < 4 ? 0 : x * (x - 1) * (x - 2) * (x - 3) / 24; }

// Class of a 4-vertex graph from its 6 upper-triangle bits, pair order
// (0,1),(0,2),(1,2),(0,3),(1,3),(2,3).
constexpr std::array<std::pair<int, int>, 6> kPairs4 = {
    {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}}};

Class4 classify_code4(unsigned code) {
    int deg[4] = {0, 0, 0, 0};
    int edges = 0;
    for (int i = 0; i < 6; ++i) {
        if ((code >> i) & 1u) {
            ++edges;
            ++deg[kPairs4[i].first];
            ++deg[kPairs4[i].second];
        }
    }
    int dmax = std::max(std::max(deg[0], deg[1]), std::max(deg[2], deg[3]));
    switch (edges) {
        case 0: return Class4::E4;
        case 1: return Class4::K2_2I;
        case 2: return dmax == 1 ? Class4::TwoK2 : Class4::P3_I;
        case 3:
            if (dmax == 3) return Class4::K13;
            return (deg[0] == 0 || deg[1] == 0 || deg[2] == 0 || deg[3] == 0) ? Class4::K3_I
                                                                              : Class4::P4;
        case 4: return dmax == 2 ? Class4::C4 : Class4::TPlus;
        case 5: return Class4::K4Minus;
        default: return Class4::K4;
    }
}

const std::array<Class4, 64>& code4_table() {
    static const std::array<Class4, 64> table = [] {
        std::array<Class4, 64> t{};
        for (unsigned c = 0; c < 64; ++c) t[c] = classify_code4(c);
        return t;
    }();
    return table;
}

inline bool row_bit(const std::uint64_t* r, int v) { return (r[v >> 6] >> (v & 63)) & 1u; }

// Words of interest for "neighbours above v" style masks.
inline std::uint64_t above_mask(int v) { return ~((std::uint64_t(2) << (v & 63)) - 1); }

// Counts complete quadruples: for each edge uv, restrict to common neighbours
// above v, then count adjacent pairs inside that set, each above its anchor.
std::int64_t count_k4(const Graph& g) {
    const int n = g.order();
    const int words = g.words();
    std::int64_t total = 0;
    std::vector<std::uint64_t> common(static_cast<std::size_t>(words));
    g.for_each_edge([&](int u, int v) {
        const std::uint64_t* ru = g.row(u);
        const std::uint64_t* rv = g.row(v);
        int w0 = v >> 6;
        for (int w = w0; w < words; ++w) common[w] = ru[w] & rv[w];
        common[w0] &= above_mask(v);
        for (int w = w0; w < words; ++w) {
            std::uint64_t bitset = common[w];
            while (bitset) {
                int x = (w << 6) + std::countr_zero(bitset);
                bitset &= bitset - 1;
                const std::uint64_t* rx = g.row(x);
                int wx = x >> 6;
                total += std::popcount(common[wx] & rx[wx] & above_mask(x));
                for (int w2 = wx + 1; w2 < words; ++w2)
                    total += std::popcount(common[w2] & rx[w2]);
            }
        }
    });
    (void)n;
    return total;
}

// Triangle count via edge-codegree sums; independent of profile3's algebra.
std::int64_t count_triangles(const Graph& g) {
    const int words = g.words();
    std::int64_t sum = 0;
    g.for_each_edge([&](int u, int v) {
        const std::uint64_t* ru = g.row(u);
        const std::uint64_t* rv = g.row(v);
        for (int w = 0; w < words; ++w) sum += std::popcount(ru[w] & rv[w]);
    });
    return sum / 3;
}

// One-edge triples counted directly: per edge, vertices adjacent to neither
// endpoint.
std::int64_t count_one_edge_triples(const Graph& g) {
    const int n = g.order();
    std::int64_t sum = 0;
    g.for_each_edge([&](int u, int v) {
        std::int64_t cd = 0;
        const std::uint64_t* ru = g.row(u);
        const std::uint64_t* rv = g.row(v);
        for (int w = 0; w < g.words(); ++w) cd += std::popcount(ru[w] & rv[w]);
        sum += n - g.degree(u) - g.degree(v) + cd;
    });
    return sum;
}

}  // namespace

// ------------------------------------------------------------------- types

std::int64_t Census4::total() const {
    std::int64_t t = 0;
    for (std::int64_t c : counts) t += c;
    return t;
}

Class4 complement_class(Class4 c) {
    switch (c) {
        case Class4::E4: return Class4::K4;
        case Class4::K2_2I: return Class4::K4Minus;
        case Class4::TwoK2: return Class4::C4;
        case Class4::P3_I: return Class4::TPlus;
        case Class4::K3_I: return Class4::K13;
        case Class4::P4: return Class4::P4;
        case Class4::K13: return Class4::K3_I;
        case Class4::C4: return Class4::TwoK2;
        case Class4::TPlus: return Class4::P3_I;
        case Class4::K4Minus: return Class4::K2_2I;
        default: return Class4::E4;
    }
}

std::string_view class4_name(Class4 c) {
    switch (c) {
        case Class4::E4: return "E4";
        case Class4::K2_2I: return "K2+2I";
        case Class4::TwoK2: return "2K2";
        case Class4::P3_I: return "P3+I";
        case Class4::K3_I: return "K3+I";
        case Class4::P4: return "P4";
        case Class4::K13: return "K13";
        case Class4::C4: return "C4";
        case Class4::TPlus: return "TPLUS";
        case Class4::K4Minus: return "K4MINUS";
        default: return "K4";
    }
}

// ------------------------------------------------------------------- brute

Profile3 profile3_brute(const Graph& g) {
    const int n = g.order();
    if (n > 400) throw TooLarge("profile3_brute is bounded to 400 vertices");
    Profile3 p;
    for (int a = 0; a < n; ++a) {
        const std::uint64_t* ra = g.row(a);
        for (int b = a + 1; b < n; ++b) {
            const std::uint64_t* rb = g.row(b);
            int ab = row_bit(ra, b);
            for (int c = b + 1; c < n; ++c)
                ++p.counts[static_cast<std::size_t>(ab + row_bit(ra, c) + row_bit(rb, c))];
        }
    }
    return p;
}

Census4 census4_brute(const Graph& g) {
    const int n = g.order();
    if (n > 120) throw TooLarge("census4_brute is bounded to 120 vertices");
    const auto& table = code4_table();
    Census4 out;
    for (int a = 0; a < n; ++a) {
        const std::uint64_t* ra = g.row(a);
        for (int b = a + 1; b < n; ++b) {
            const std::uint64_t* rb = g.row(b);
            unsigned ab = row_bit(ra, b);
            for (int c = b + 1; c < n; ++c) {
                const std::uint64_t* rc = g.row(c);
                unsigned abc = ab | (row_bit(ra, c) << 1) | (row_bit(rb, c) << 2);
                for (int d = c + 1; d < n; ++d) {
                    unsigned code = abc | (row_bit(ra, d) << 3) | (row_bit(rb, d) << 4) |
                                    (row_bit(rc, d) << 5);
                    ++out.counts[static_cast<std::size_t>(table[code])];
                }
            }
        }
    }
    return out;
}

// ------------------------------------------------------------- accelerated

Profile3 profile3(const Graph& g) {
    const std::int64_t n = g.order();
    Profile3 p;
    if (n < 3) return p;

    const std::int64_t e = g.edge_count();
    std::int64_t d3 = count_triangles(g);

    // Degree-pair identity pins D0 once D3 is known; the remaining two
    // counts follow from the linear relations with e and the triple total.
    std::int64_t degree_side = -c3(n);
    for (int v = 0; v < n; ++v) {
        std::int64_t d = g.degree(v);
        degree_side += c2(d) + c2(n - 1 - d);
    }
    std::int64_t d0 = degree_side / 2 - d3;

    std::int64_t a = (n - 2) * e - 3 * d3;        // 2*D2 + D1
    std::int64_t b = c3(n) - d0 - d3;             // D2 + D1
    p.counts = {d0, 2 * b - a, a - b, d3};
    return p;
}

Census4 census4(const Graph& g) {
    const int n = g.order();
    Census4 out;
    if (n < 4) return out;

    const int words = g.words();
    std::int64_t se2 = 0, sn2 = 0, sp4 = 0;
    std::int64_t se2bar = 0, sn2bar = 0;
    std::vector<std::int64_t> esum(n, 0), cowedge(n, 0);
    std::vector<std::int64_t> esum_bar(n, 0), cowedge_bar(n, 0);

    for (int u = 0; u < n; ++u) {
        const std::uint64_t* ru = g.row(u);
        const std::int64_t du = g.degree(u);
        for (int v = u + 1; v < n; ++v) {
            const std::uint64_t* rv = g.row(v);
            std::int64_t cd = 0;
            for (int w = 0; w < words; ++w) cd += std::popcount(ru[w] & rv[w]);
            const std::int64_t dv = g.degree(v);
            const bool adj = row_bit(ru, v);
            const std::int64_t cdbar = (n - 2) - du - dv + cd + (adj ? 2 : 0);
            if (adj) {
                se2 += c2(cd);
                sp4 += (du - cd - 1) * (dv - cd - 1);
                esum[u] += cd;
                esum[v] += cd;
                cowedge[u] += c2(cd);
                cowedge[v] += c2(cd);
                sn2bar += c2(cdbar);
            } else {
                sn2 += c2(cd);
                se2bar += c2(cdbar);
                esum_bar[u] += cdbar;
                esum_bar[v] += cdbar;
                cowedge_bar[u] += c2(cdbar);
                cowedge_bar[v] += c2(cdbar);
            }
        }
    }

    const std::int64_t k4 = count_k4(g);
    const std::int64_t e4 = count_k4(complement(g));

    const std::int64_t k4minus = se2 - 6 * k4;
    const std::int64_t c4cnt = (sn2 - k4minus) / 2;
    const std::int64_t p4 = sp4 - 4 * c4cnt;
    const std::int64_t k2_2i = se2bar - 6 * e4;
    const std::int64_t two_k2 = (sn2bar - k2_2i) / 2;

    std::int64_t s2 = 0, s2bar = 0, k13 = 0, k3_i = 0;
    for (int v = 0; v < n; ++v) {
        const std::int64_t d = g.degree(v);
        const std::int64_t dbar = n - 1 - d;
        s2 += c3(d);
        s2bar += c3(dbar);
        k13 += c3(d) - (esum[v] / 2) * (d - 2) + cowedge[v];
        k3_i += c3(dbar) - (esum_bar[v] / 2) * (dbar - 2) + cowedge_bar[v];
    }
    k13 -= 4 * k4;
    k3_i -= 4 * e4;

    const std::int64_t tplus = s2 - 4 * k4 - 2 * k4minus - k13;
    const std::int64_t p3_i = s2bar - 4 * e4 - 2 * k2_2i - k3_i;

    out[Class4::E4] = e4;
    out[Class4::K2_2I] = k2_2i;
    out[Class4::TwoK2] = two_k2;
    out[Class4::P3_I] = p3_i;
    out[Class4::K3_I] = k3_i;
    out[Class4::P4] = p4;
    out[Class4::K13] = k13;
    out[Class4::C4] = c4cnt;
    out[Class4::TPlus] = tplus;
    out[Class4::K4Minus] = k4minus;
    out[Class4::K4] = k4;

    if (out.total() != c4(n)) throw Error("internal: census4 totals disagree with C(n,4)");
    return out;
}

// ------------------------------------------------------------ induced_count

std::int64_t induced_count(const Graph& g, const Graph& h) {
    const int k = h.order();
    const std::int64_t n = g.order();
    if (k > 6) throw TooLarge("induced_count patterns are bounded to 6 vertices");
    switch (k) {
        case 0: return 1;
        case 1: return n;
        case 2: return h.edge_count() == 1 ? g.edge_count() : c2(n) - g.edge_count();
        case 3: {
            int e = static_cast<int>(h.edge_count());
            return profile3(g).counts[static_cast<std::size_t>(e)];
        }
        case 4: {
            unsigned code = 0;
            for (int i = 0; i < 6; ++i)
                if (h.adjacent(kPairs4[i].first, kPairs4[i].second)) code |= 1u << i;
            return census4(g)[code4_table()[code]];
        }
        default: {
            int bound = k == 5 ? 300 : 120;
            if (n > bound)
                throw TooLarge("induced_count host is bounded to " + std::to_string(bound) +
                               " vertices for " + std::to_string(k) + "-vertex patterns");
            const IsoClassTable& table = enumerate_classes(k);
            std::uint64_t code = canonical_form(h);
            int target = -1;
            for (std::size_t i = 0; i < table.codes.size(); ++i)
                if (table.codes[i] == code) target = static_cast<int>(i);
            std::vector<std::int64_t> counts = subset_class_counts(g, k);
            return counts[static_cast<std::size_t>(target)];
        }
    }
}

// -------------------------------------------------------- identity checkers

bool verify_goodman(const Graph& g) {
    const std::int64_t n = g.order();
    std::int64_t d3 = count_triangles(g);
    std::int64_t d0 = count_triangles(complement(g));
    std::int64_t degree_side = -c3(n);
    for (int v = 0; v < n; ++v) {
        std::int64_t d = g.degree(v);
        degree_side += c2(d) + c2(n - 1 - d);
    }
    return 2 * (d0 + d3) == degree_side;
}

bool verify_vertex_edge_identities(const Graph& g) {
    const std::int64_t n = g.order();
    Graph gc = complement(g);
    std::int64_t d3 = count_triangles(g);
    std::int64_t d0 = count_triangles(gc);
    std::int64_t d1 = count_one_edge_triples(g);
    std::int64_t d2 = count_one_edge_triples(gc);
    if (d0 + d1 + d2 + d3 != c3(n)) return false;
    return 3 * d3 + 2 * d2 + d1 == (n - 2) * g.edge_count() &&
           3 * d0 + 2 * d1 + d2 == (n - 2) * gc.edge_count();
}

bool verify_edge_pair_identity(const Graph& g) {
    Census4 c = census4(g);
    std::int64_t lhs = c[Class4::TwoK2] + c[Class4::P4] + c[Class4::TPlus] +
                       2 * c[Class4::C4] + 2 * c[Class4::K4Minus] + 3 * c[Class4::K4];
    std::int64_t rhs = c2(g.edge_count());
    for (int v = 0; v < g.order(); ++v) rhs -= c2(g.degree(v));
    return lhs == rhs;
}

// ----------------------------------------------------------------- metrics

VertexSet exceptional_vertices(const Graph& g, double eps) {
    if (!(eps >= 0.0)) throw InvalidParameter("eps must be nonnegative");
    const int n = g.order();
    std::vector<int> out;
    for (int v = 0; v < n; ++v) {
        // |d - n/2| >= eps*n, inclusive on the exceptional side.
        double dev = std::abs(2.0 * g.degree(v) - n);
        if (dev >= 2.0 * eps * n) out.push_back(v);
    }
    return VertexSet(std::move(out));
}

double quasirandom_deviation(const Graph& g) {
    const std::int64_t n = g.order();
    if (n < 2) return 0.0;
    const int words = g.words();
    std::int64_t sum = 0;  // sum of |4*codeg - n| over unordered pairs
    for (int u = 0; u < n; ++u) {
        const std::uint64_t* ru = g.row(u);
        for (int v = u + 1; v < n; ++v) {
            const std::uint64_t* rv = g.row(v);
            std::int64_t cd = 0;
            for (int w = 0; w < words; ++w) cd += std::popcount(ru[w] & rv[w]);
            sum += std::abs(4 * cd - n);
        }
    }
    return static_cast<double>(sum) / (4.0 * static_cast<double>(n) * static_cast<double>(n) *
                                       static_cast<double>(n));
}

namespace {

Rational reduced(std::int64_t num, std::int64_t den) {
    if (den == 0) return Rational{0, 1};
    std::int64_t g = std::gcd(num, den);
    if (g == 0) return Rational{0, 1};
    return Rational{num / g, den / g};
}

}  // namespace

DensityVector densities(const Profile3& p, int n) {
    std::int64_t den = c3(n);
    DensityVector out;
    out.subset_size = 3;
    for (std::int64_t c : p.counts) out.values.push_back(reduced(c, den));
    return out;
}

DensityVector densities(const Census4& c, int n) {
    std::int64_t den = c4(n);
    DensityVector out;
    out.subset_size = 4;
    for (std::int64_t cnt : c.counts) out.values.push_back(reduced(cnt, den));
    return out;
}

}  // namespace gcensus
