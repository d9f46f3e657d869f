#include "gcensus/analyzers.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <deque>
#include <numeric>

#include "gcensus/constructions.hpp"
#include "gcensus/config.hpp"
#include "gcensus/errors.hpp"
#include "gcensus/graph6.hpp"

namespace gcensus {

namespace {

// Upper-triangle bit position of pair (i, j), i < j.
inline int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

inline bool row_bit(const std::uint64_t* r, int v) { return (r[v >> 6] >> (v & 63)) & 1u; }

std::vector<std::vector<int>> permutations_of(int ell) {
    std::vector<int> p(ell);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::uint64_t permute_code(std::uint64_t code, const std::vector<int>& p, int ell) {
    std::uint64_t img = 0;
    for (int j = 1; j < ell; ++j)
        for (int i = 0; i < j; ++i)
            if ((code >> pair_index(i, j)) & 1u) {
                int a = p[i], b = p[j];
                if (a > b) std::swap(a, b);
                img |= std::uint64_t(1) << pair_index(a, b);
            }
    return img;
}

struct ClassData {
    IsoClassTable table;
    std::vector<std::int32_t> class_of_code;  // dense, size 2^C(ell,2)
};

std::string class_name(int ell, std::uint64_t code) {
    switch (ell) {
        case 1: return "K1";
        case 2: return code ? "K2" : "E2";
        case 3: {
            static const char* names[4] = {"E3", "K2+I", "P3", "K3"};
            return names[std::popcount(code)];
        }
        case 4: {
            Census4 c = census4_brute(graph_from_code(4, code));
            for (int i = 0; i < kClass4Count; ++i)
                if (c.counts[static_cast<std::size_t>(i)] == 1)
                    return std::string(class4_name(static_cast<Class4>(i)));
            return "?";
        }
        default: return "g" + std::to_string(ell) + "_" + std::to_string(code);
    }
}

ClassData build_class_data(int ell) {
    const int nbits = ell * (ell - 1) / 2;
    const std::uint64_t ncodes = std::uint64_t(1) << nbits;
    const auto perms = permutations_of(ell);

    ClassData d;
    d.table.order = ell;
    d.class_of_code.assign(ncodes, -1);
    // Ascending scan: the first unseen code is its orbit's canonical form.
    for (std::uint64_t code = 0; code < ncodes; ++code) {
        if (d.class_of_code[code] != -1) continue;
        auto id = static_cast<std::int32_t>(d.table.codes.size());
        d.table.codes.push_back(code);
        for (const auto& p : perms) d.class_of_code[permute_code(code, p, ell)] = id;
    }
    for (std::uint64_t code : d.table.codes) d.table.names.push_back(class_name(ell, code));
    return d;
}

const ClassData& class_data(int ell) {
    switch (ell) {
        case 1: { static const ClassData d = build_class_data(1); return d; }
        case 2: { static const ClassData d = build_class_data(2); return d; }
        case 3: { static const ClassData d = build_class_data(3); return d; }
        case 4: { static const ClassData d = build_class_data(4); return d; }
        case 5: { static const ClassData d = build_class_data(5); return d; }
        case 6: { static const ClassData d = build_class_data(6); return d; }
        default:
            if (ell < 1) throw InvalidParameter("class tables need at least one vertex");
            throw TooLarge("isomorphism classes are tabulated for 1..6 vertices");
    }
}

std::uint64_t code_of_vertices(const Graph& g, const int* verts, int ell) {
    std::uint64_t code = 0;
    for (int j = 1; j < ell; ++j) {
        const std::uint64_t* r = g.row(verts[j]);
        for (int i = 0; i < j; ++i)
            if (row_bit(r, verts[i])) code |= std::uint64_t(1) << pair_index(i, j);
    }
    return code;
}

// Enumerates all ell-subsets in lexicographic order; leaf(code, verts)
// returning true stops the scan. Codes use the fixed pair order.
template <class Leaf>
bool scan_subsets(const Graph& g, int ell, Leaf&& leaf) {
    const int n = g.order();
    if (n < ell) return false;
    std::array<int, 6> verts{};
    std::array<std::uint64_t, 7> codes{};
    std::array<const std::uint64_t*, 6> rows{};

    // Depth-first over positions 0..ell-1; codes[t] is the prefix code.
    auto rec = [&](auto&& self, int t) -> bool {
        int lo = t == 0 ? 0 : verts[t - 1] + 1;
        int hi = n - (ell - 1 - t);
        for (int v = lo; v < hi; ++v) {
            std::uint64_t code = codes[t];
            for (int i = 0; i < t; ++i)
                if (row_bit(rows[i], v)) code |= std::uint64_t(1) << pair_index(i, t);
            verts[t] = v;
            if (t + 1 == ell) {
                if (leaf(code, verts.data())) return true;
            } else {
                codes[t + 1] = code;
                rows[t] = g.row(v);
                if (self(self, t + 1)) return true;
            }
        }
        return false;
    };
    return rec(rec, 0);
}

// Deterministic random probes, independent of any user-facing seed.
template <class Leaf>
bool sample_subsets(const Graph& g, int ell, std::int64_t tries, Leaf&& leaf) {
    const int n = g.order();
    if (n < ell) return false;
    SplitMix64 gen{0x5ca1ab1eu + static_cast<std::uint64_t>(ell)};
    std::array<int, 6> verts{};
    for (std::int64_t t = 0; t < tries; ++t) {
        int got = 0;
        while (got < ell) {
            int v = static_cast<int>(gen.next() % static_cast<std::uint64_t>(n));
            bool dup = false;
            for (int i = 0; i < got; ++i) dup |= (verts[i] == v);
            if (!dup) verts[got++] = v;
        }
        std::sort(verts.begin(), verts.begin() + ell);
        if (leaf(code_of_vertices(g, verts.data(), ell), verts.data())) return true;
    }
    return false;
}

int scan_bound(int ell) {
    switch (ell) {
        case 3: return 400;
        case 4: return 300;
        case 5: return 300;
        default: return 120;
    }
}

}  // namespace

// --------------------------------------------------------- canonical forms

Graph graph_from_code(int ell, std::uint64_t code) {
    Graph::Builder b(ell);
    for (int j = 1; j < ell; ++j)
        for (int i = 0; i < j; ++i)
            if ((code >> pair_index(i, j)) & 1u) b.add_edge(i, j);
    return std::move(b).build();
}

std::uint64_t canonical_form(const Graph& g) {
    const int n = g.order();
    if (n > 8) throw TooLarge("canonical_form is bounded to 8 vertices");
    std::uint64_t code = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (g.adjacent(i, j)) code |= std::uint64_t(1) << pair_index(i, j);
    if (n <= 1) return 0;
    if (n <= 6) {
        const ClassData& d = class_data(n);
        return d.table.codes[static_cast<std::size_t>(d.class_of_code[code])];
    }
    std::uint64_t best = code;
    for (const auto& p : permutations_of(n)) best = std::min(best, permute_code(code, p, n));
    return best;
}

const IsoClassTable& enumerate_classes(int ell) { return class_data(ell).table; }

std::vector<std::int64_t> subset_class_counts(const Graph& g, int ell) {
    if (ell < 3 || ell > 6)
        throw InvalidParameter("subset_class_counts covers 3 to 6 vertices");
    if (g.order() > scan_bound(ell))
        throw TooLarge("subset_class_counts host is bounded to " +
                       std::to_string(scan_bound(ell)) + " vertices for ell = " +
                       std::to_string(ell));
    const ClassData& d = class_data(ell);
    std::vector<std::int64_t> counts(d.table.codes.size(), 0);
    scan_subsets(g, ell, [&](std::uint64_t code, const int*) {
        ++counts[static_cast<std::size_t>(d.class_of_code[code])];
        return false;
    });
    return counts;
}

// ------------------------------------------------------------- universality

UniversalityReport is_l_universal(const Graph& g, int ell) {
    if (ell < 1) throw InvalidParameter("is_l_universal needs a positive subgraph order");
    if (ell > 6) throw TooLarge("is_l_universal covers 1 to 6 vertices");
    const ClassData& d = class_data(ell);
    const int classes = static_cast<int>(d.table.codes.size());
    const int n = g.order();

    UniversalityReport rep;
    rep.ell = ell;
    std::vector<char> found(classes, 0);

    auto finish = [&](const char* method) {
        rep.method = method;
        for (int i = 0; i < classes; ++i) {
            if (found[i]) {
                rep.present.push_back(d.table.codes[static_cast<std::size_t>(i)]);
            } else {
                rep.missing.push_back(d.table.codes[static_cast<std::size_t>(i)]);
                rep.missing_names.push_back(d.table.names[static_cast<std::size_t>(i)]);
            }
        }
        rep.verdict = rep.missing.empty();
        return rep;
    };

    if (n < ell) return finish("exhaustive");

    if (ell == 1) {
        found[0] = n > 0;
        return finish("census");
    }
    if (ell == 2) {
        std::int64_t e = g.edge_count();
        std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
        found[0] = pairs - e > 0;
        found[1] = e > 0;
        return finish("census");
    }
    if (ell == 3) {
        Profile3 p = profile3(g);
        for (int i = 0; i < classes; ++i)
            found[i] = p.counts[static_cast<std::size_t>(
                           std::popcount(d.table.codes[static_cast<std::size_t>(i)]))] > 0;
        return finish("census");
    }
    if (ell == 4) {
        Census4 c = census4(g);
        for (int i = 0; i < classes; ++i) {
            Census4 one = census4_brute(graph_from_code(4, d.table.codes[static_cast<std::size_t>(i)]));
            for (int cls = 0; cls < kClass4Count; ++cls)
                if (one.counts[static_cast<std::size_t>(cls)] == 1)
                    found[i] = c.counts[static_cast<std::size_t>(cls)] > 0;
        }
        return finish("census");
    }

    // ell = 5 or 6: probe by sampling, then fall back to the full scan.
    int found_count = 0;
    if (n > 60) {
        sample_subsets(g, ell, 200000, [&](std::uint64_t code, const int*) {
            std::int32_t cls = d.class_of_code[code];
            if (!found[cls]) {
                found[cls] = 1;
                ++found_count;
            }
            return found_count == classes;
        });
        if (found_count == classes) return finish("sampled");
    }
    if (n > scan_bound(ell))
        throw TooLarge("cannot settle universality for ell = " + std::to_string(ell) +
                       " beyond " + std::to_string(scan_bound(ell)) + " vertices");
    scan_subsets(g, ell, [&](std::uint64_t code, const int*) {
        std::int32_t cls = d.class_of_code[code];
        if (!found[cls]) {
            found[cls] = 1;
            ++found_count;
        }
        return found_count == classes;
    });
    return finish("exhaustive");
}

// ------------------------------------------------------------ clique search

namespace {

struct MaxCliqueSearch {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> adj;  // rows in internal (degree-sorted) ids
    std::vector<int> orig;           // internal -> input labels
    std::vector<int> current;
    std::vector<int> best_set;
    int best = 0;
    bool timed_out = false;
    std::uint64_t tick = 0;
    std::chrono::steady_clock::time_point deadline;

    // Per-depth scratch, grown on demand. Deques keep references stable when
    // a deeper recursion level extends the pools.
    std::deque<std::vector<std::uint64_t>> cand_pool, avail_pool, uncolored_pool;
    std::deque<std::vector<std::pair<int, int>>> order_pool;

    const std::uint64_t* row(int v) const {
        return adj.data() + static_cast<std::size_t>(v) * words;
    }

    void ensure_depth(int depth) {
        while (static_cast<int>(cand_pool.size()) <= depth + 1) {
            cand_pool.emplace_back(words, 0);
            avail_pool.emplace_back(words, 0);
            uncolored_pool.emplace_back(words, 0);
            order_pool.emplace_back();
        }
    }

    void record_if_better() {
        if (static_cast<int>(current.size()) > best) {
            best = static_cast<int>(current.size());
            best_set = current;
        }
    }

    void expand(int depth) {
        if (timed_out) return;
        if ((++tick & 1023u) == 0 && std::chrono::steady_clock::now() > deadline) {
            timed_out = true;
            return;
        }
        ensure_depth(depth + 1);
        std::vector<std::uint64_t>& cand = cand_pool[static_cast<std::size_t>(depth)];
        std::vector<std::uint64_t>& uncolored = uncolored_pool[static_cast<std::size_t>(depth)];
        std::vector<std::uint64_t>& avail = avail_pool[static_cast<std::size_t>(depth)];
        std::vector<std::uint64_t>& next = cand_pool[static_cast<std::size_t>(depth) + 1];
        auto& order = order_pool[static_cast<std::size_t>(depth)];
        order.clear();

        // Greedy coloring in id order; the color is an upper bound for the
        // clique extension through that vertex.
        std::copy(cand.begin(), cand.end(), uncolored.begin());
        int color = 0;
        bool any = true;
        while (any) {
            any = false;
            for (int w = 0; w < words; ++w)
                if (uncolored[w]) {
                    any = true;
                    break;
                }
            if (!any) break;
            ++color;
            std::copy(uncolored.begin(), uncolored.end(), avail.begin());
            for (int w = 0; w < words; ++w) {
                while (avail[w]) {
                    int v = (w << 6) + std::countr_zero(avail[w]);
                    order.emplace_back(v, color);
                    uncolored[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
                    const std::uint64_t* rv = row(v);
                    for (int w2 = w; w2 < words; ++w2) avail[w2] &= ~rv[w2];
                    avail[w] &= ~(std::uint64_t(1) << (v & 63));
                }
            }
        }

        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            auto [v, vcolor] = *it;
            if (static_cast<int>(current.size()) + vcolor <= best) return;  // colors only shrink
            const std::uint64_t* rv = row(v);
            bool empty = true;
            for (int w = 0; w < words; ++w) {
                next[w] = cand[w] & rv[w];
                empty &= (next[w] == 0);
            }
            current.push_back(v);
            if (empty) {
                record_if_better();
            } else {
                expand(depth + 1);
            }
            current.pop_back();
            if (timed_out) return;
            cand[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
        }
    }
};

CliqueResult run_max_clique(const Graph& g, double budget_seconds) {
    if (!(budget_seconds > 0)) throw InvalidParameter("clique budget must be positive");
    const int n = g.order();
    if (n == 0) return CliqueResult{0, VertexSet{}, true};

    std::vector<int> by_degree(n);
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });

    MaxCliqueSearch s;
    s.n = n;
    s.words = (n + 63) / 64;
    s.orig = by_degree;
    std::vector<int> internal_of(n);
    for (int i = 0; i < n; ++i) internal_of[by_degree[static_cast<std::size_t>(i)]] = i;
    s.adj.assign(static_cast<std::size_t>(n) * s.words, 0);
    g.for_each_edge([&](int u, int v) {
        int a = internal_of[u], b = internal_of[v];
        s.adj[static_cast<std::size_t>(a) * s.words + (b >> 6)] |= std::uint64_t(1) << (b & 63);
        s.adj[static_cast<std::size_t>(b) * s.words + (a >> 6)] |= std::uint64_t(1) << (a & 63);
    });
    s.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(budget_seconds));

    // Greedy warm start in internal order.
    for (int v = 0; v < n; ++v) {
        bool ok = true;
        for (int u : s.current) ok &= row_bit(s.row(u), v);
        if (ok) s.current.push_back(v);
    }
    s.best = static_cast<int>(s.current.size());
    s.best_set = s.current;
    s.current.clear();

    s.ensure_depth(0);
    for (int v = 0; v < n; ++v)
        s.cand_pool[0][v >> 6] |= std::uint64_t(1) << (v & 63);
    s.expand(0);

    std::vector<int> labels;
    labels.reserve(s.best_set.size());
    for (int v : s.best_set) labels.push_back(s.orig[static_cast<std::size_t>(v)]);
    return CliqueResult{s.best, VertexSet(std::move(labels)), !s.timed_out};
}

}  // namespace

CliqueResult clique_number(const Graph& g, double budget_seconds) {
    return run_max_clique(g, budget_seconds);
}

CliqueResult independence_number(const Graph& g, double budget_seconds) {
    return run_max_clique(complement(g), budget_seconds);
}

// -------------------------------------------------------------- has_induced

InducedWitness has_induced(const Graph& g, const Graph& h) {
    const int k = h.order();
    const int n = g.order();
    if (k > 6) throw TooLarge("has_induced patterns are bounded to 6 vertices");
    if (k == 0) return InducedWitness{true, VertexSet{}};
    if (n < k) return InducedWitness{false, VertexSet{}};
    if (k == 1) return InducedWitness{true, VertexSet({0})};

    if (k == 2) {
        bool want_edge = h.edge_count() == 1;
        if (want_edge) {
            InducedWitness w{false, VertexSet{}};
            scan_subsets(g, 2, [&](std::uint64_t code, const int* verts) {
                if (code == 1) {
                    w = InducedWitness{true, VertexSet({verts[0], verts[1]})};
                    return true;
                }
                return false;
            });
            return w;
        }
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!g.adjacent(u, v)) return InducedWitness{true, VertexSet({u, v})};
        return InducedWitness{false, VertexSet{}};
    }

    const ClassData& d = class_data(k);
    const std::int32_t target = d.class_of_code[canonical_form(h)];
    auto probe = [&](std::uint64_t code, const int* verts, InducedWitness& out) {
        if (d.class_of_code[code] != target) return false;
        out = InducedWitness{true, VertexSet(std::vector<int>(verts, verts + k))};
        return true;
    };

    if (k <= 4) {
        if (induced_count(g, h) == 0) return InducedWitness{false, VertexSet{}};
        InducedWitness w{false, VertexSet{}};
        if (n > 60 &&
            sample_subsets(g, k, 200000,
                           [&](std::uint64_t code, const int* verts) { return probe(code, verts, w); }))
            return w;
        if (n <= scan_bound(k)) {
            scan_subsets(g, k, [&](std::uint64_t code, const int* verts) {
                return probe(code, verts, w);
            });
            return w;
        }
        // Present by count, but too large to pin down a witness.
        return InducedWitness{true, VertexSet{}};
    }

    InducedWitness w{false, VertexSet{}};
    if (n > 60 &&
        sample_subsets(g, k, 200000,
                       [&](std::uint64_t code, const int* verts) { return probe(code, verts, w); }))
        return w;
    if (n > scan_bound(k))
        throw TooLarge("cannot settle induced-subgraph absence for " + std::to_string(k) +
                       "-vertex patterns beyond " + std::to_string(scan_bound(k)) + " vertices");
    scan_subsets(g, k, [&](std::uint64_t code, const int* verts) { return probe(code, verts, w); });
    return w;
}

// ----------------------------------------------------------- obstruction

ObstructionCertificate obstruction_certificate(int ell, int n, Seed seed, double budget_seconds) {
    if (ell < 1) throw InvalidParameter("obstruction level must be at least 1");
    if (ell > 20) throw TooLarge("obstruction witness order overflows any permitted graph");
    const std::int64_t m = 24ll * ell * (1ll << ell);
    if (m > max_order())
        throw TooLarge("obstruction witness order " + std::to_string(m) +
                       " exceeds max_order() = " + std::to_string(max_order()));
    if (n < 12 * ell)
        throw InvalidParameter("obstruction premise needs part size n >= 12*ell");

    const int threshold = 12 * ell;
    ObstructionCertificate cert;
    cert.ell = ell;
    cert.n = n;
    cert.threshold = threshold;
    cert.witness_order = static_cast<int>(m);

    constexpr int kMaxAttempts = 8;
    Graph witness;
    bool have_witness = false;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Seed ws = seed.child(0x0b5, static_cast<std::uint64_t>(attempt));
        Graph w = random_graph(static_cast<int>(m), ws);
        CliqueResult om = clique_number(w, budget_seconds);
        if (!om.exact) throw Timeout("clique search budget expired while certifying");
        if (om.size >= threshold) continue;
        CliqueResult al = independence_number(w, budget_seconds);
        if (!al.exact) throw Timeout("independence search budget expired while certifying");
        if (al.size >= threshold) continue;
        cert.omega = om.size;
        cert.alpha = al.size;
        cert.retries = attempt;
        cert.seed_used = ws;
        witness = std::move(w);
        have_witness = true;
        break;
    }
    if (!have_witness)
        throw CertificateFailed("every sampled witness had a clique or independent set of size " +
                                std::to_string(threshold));

    // Structural half: the representative tower must consist of 2^ell
    // consecutive blocks, each the complete bipartite block or its
    // complement. Block interiors are seed-independent.
    Graph tower = oplus_tower(ell, n, seed);
    Graph::Builder proto(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) proto.add_edge(i, n + j);
    Graph knn = std::move(proto).build();
    Graph knn_c = complement(knn);

    cert.block_count = 1 << ell;
    cert.block_order = 2 * n;
    cert.blocks_ok = tower.order() == cert.block_count * 2 * n;
    for (int b = 0; cert.blocks_ok && b < cert.block_count; ++b) {
        std::vector<int> range(static_cast<std::size_t>(2 * n));
        std::iota(range.begin(), range.end(), b * 2 * n);
        Graph block = induced(tower, VertexSet(std::move(range)));
        cert.blocks_ok = (block == knn) || (block == knn_c);
    }

    cert.witness_graph6 = graph6_encode(witness);
    cert.verdict = cert.blocks_ok && cert.omega < threshold && cert.alpha < threshold;
    return cert;
}

// ------------------------------------------------------------- limit table

std::vector<LimitRow> limit_table(const std::string& family,
                                  const std::function<Graph(std::int64_t)>& builder,
                                  const std::vector<std::int64_t>& ks, double eps) {
    if (!(eps >= 0)) throw InvalidParameter("limit_table eps must be nonnegative");
    std::vector<LimitRow> rows;
    for (std::int64_t k : ks) {
        Graph g = builder(k);
        LimitRow row;
        row.family = family;
        row.k = k;
        row.order = g.order();
        row.p3 = densities(profile3(g), g.order());
        double p0 = row.p3.values[0].value();
        double p1 = row.p3.values[1].value();
        double p2 = row.p3.values[2].value();
        double p3 = row.p3.values[3].value();
        row.dev_pair_sum = std::abs(p0 + p3 - 0.25);
        row.dev_p0 = std::abs(p0 - 0.125);
        row.dev_p3 = std::abs(p3 - 0.125);
        row.dev_p1 = std::abs(p1 - 3 * p3);
        row.dev_p2 = std::abs(p2 - 3 * p0);
        row.goodman_consistent = row.dev_pair_sum < eps;
        row.random_like_consistent = row.dev_p0 < eps && row.dev_p3 < eps;
        row.ratio_consistent = row.dev_p1 < eps && row.dev_p2 < eps;
        try {
            Graph c5 = from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
            row.c5_presence = has_induced(g, c5).found ? "yes" : "no";
        } catch (const TooLarge&) {
            row.c5_presence = "unknown";  // sampling missed it and the host is past scan bounds
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace gcensus
