#include "gcensus/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

#include "gcensus/config.hpp"
#include "gcensus/errors.hpp"

namespace gcensus {

namespace {

int words_for(int n) { return (n + 63) / 64; }

std::uint64_t tail_mask(int n) {
    int r = n & 63;
    return r == 0 ? ~std::uint64_t(0) : ((std::uint64_t(1) << r) - 1);
}

void check_order(int n) {
    if (n < 0) throw InvalidParameter("graph order must be nonnegative");
    if (n > max_order())
        throw TooLarge("graph order " + std::to_string(n) + " exceeds max_order() = " +
                       std::to_string(max_order()));
}

int popcount_row(const std::uint64_t* r, int words) {
    int c = 0;
    for (int w = 0; w < words; ++w) c += std::popcount(r[w]);
    return c;
}

}  // namespace

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::vector<int> members) : members_(std::move(members)) {
    for (int v : members_)
        if (v < 0) throw IndexOutOfRange("vertex set member " + std::to_string(v) + " is negative");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(int v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

// -------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    int n = static_cast<int>(image_.size());
    std::vector<char> seen(n, 0);
    for (int v : image_) {
        if (v < 0 || v >= n)
            throw InvalidParameter("permutation image " + std::to_string(v) + " out of range");
        if (seen[v]) throw InvalidParameter("permutation repeats image " + std::to_string(v));
        seen[v] = 1;
    }
}

int Permutation::operator()(int i) const {
    if (i < 0 || i >= size()) throw IndexOutOfRange("permutation argument out of range");
    return image_[i];
}

// ------------------------------------------------------------------- Graph

int Graph::lowest_bit(std::uint64_t w) noexcept { return std::countr_zero(w); }

Graph::Graph(int n) {
    check_order(n);
    n_ = n;
    words_ = words_for(n);
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
    degrees_.assign(n_, 0);
}

Graph::Graph(int n, std::vector<std::uint64_t> bits, std::int64_t edges)
    : n_(n), words_(words_for(n)), edges_(edges), bits_(std::move(bits)) {
    degrees_.resize(n_);
    std::int64_t total = 0;
    for (int u = 0; u < n_; ++u) {
        degrees_[u] = popcount_row(row(u), words_);
        total += degrees_[u];
    }
    if (total != 2 * edges_) throw Error("internal: edge count does not match bit rows");
}

void Graph::check_vertex(int u) const {
    if (u < 0 || u >= n_)
        throw IndexOutOfRange("vertex " + std::to_string(u) + " outside [0, " +
                              std::to_string(n_) + ")");
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (row(u)[v >> 6] >> (v & 63)) & 1u;
}

int Graph::degree(int u) const {
    check_vertex(u);
    return degrees_[u];
}

int Graph::codegree(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw SameVertex("codegree needs two distinct vertices");
    const std::uint64_t* a = row(u);
    const std::uint64_t* b = row(v);
    int c = 0;
    for (int w = 0; w < words_; ++w) c += std::popcount(a[w] & b[w]);
    return c;
}

int Graph::codegree_minus(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw SameVertex("codegree_minus needs two distinct vertices");
    const std::uint64_t* a = row(u);
    const std::uint64_t* b = row(v);
    int c = 0;
    for (int w = 0; w < words_; ++w) c += std::popcount(a[w] & ~b[w]);
    return c;
}

bool Graph::check_invariants() const {
    if (static_cast<std::int64_t>(bits_.size()) != static_cast<std::int64_t>(n_) * words_)
        return false;
    std::int64_t degree_sum = 0;
    for (int u = 0; u < n_; ++u) {
        const std::uint64_t* r = row(u);
        if ((r[u >> 6] >> (u & 63)) & 1u) return false;  // irreflexive
        if (words_ > 0 && (r[words_ - 1] & ~tail_mask(n_)) != 0) return false;
        if (popcount_row(r, words_) != degrees_[u]) return false;
        degree_sum += degrees_[u];
        for (int v = u + 1; v < n_; ++v) {
            bool uv = (r[v >> 6] >> (v & 63)) & 1u;
            bool vu = (row(v)[u >> 6] >> (u & 63)) & 1u;
            if (uv != vu) return false;  // symmetric
        }
    }
    return degree_sum == 2 * edges_;
}

// ----------------------------------------------------------------- Builder

Graph::Builder::Builder(int n) {
    check_order(n);
    n_ = n;
    words_ = words_for(n);
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::Builder::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw IndexOutOfRange("edge endpoint outside [0, " + std::to_string(n_) + ")");
    if (u == v) throw LoopEdge("loop at vertex " + std::to_string(u));
    std::uint64_t& wu = bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)];
    std::uint64_t bu = std::uint64_t(1) << (v & 63);
    if (wu & bu) return;  // already present
    wu |= bu;
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t(1) << (u & 63);
    ++edges_;
}

bool Graph::Builder::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
}

Graph Graph::Builder::build() && { return Graph(n_, std::move(bits_), edges_); }

// ---------------------------------------------------------------- builders

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph::Builder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return std::move(b).build();
}

Graph complement(const Graph& g) {
    int n = g.order();
    int words = g.words_;
    std::vector<std::uint64_t> bits(static_cast<std::size_t>(n) * words, 0);
    std::uint64_t tail = tail_mask(n);
    for (int u = 0; u < n; ++u) {
        const std::uint64_t* src = g.row(u);
        std::uint64_t* dst = bits.data() + static_cast<std::size_t>(u) * words;
        for (int w = 0; w < words; ++w) dst[w] = ~src[w];
        if (words > 0) dst[words - 1] &= tail;
        dst[u >> 6] &= ~(std::uint64_t(1) << (u & 63));
    }
    std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
    return Graph(n, std::move(bits), pairs - g.edge_count());
}

Graph induced(const Graph& g, const VertexSet& s) {
    const std::vector<int>& m = s.members();
    for (int v : m)
        if (v >= g.order())
            throw IndexOutOfRange("vertex set member " + std::to_string(v) +
                                  " outside the host graph");
    int k = s.size();
    Graph::Builder b(k);
    for (int i = 0; i < k; ++i) {
        const std::uint64_t* r = g.row(m[i]);
        for (int j = i + 1; j < k; ++j)
            if ((r[m[j] >> 6] >> (m[j] & 63)) & 1u) b.add_edge(i, j);
    }
    return std::move(b).build();
}

Graph blow_up(const Graph& g, int t) {
    if (t < 1) throw InvalidParameter("blow_up factor must be at least 1");
    std::int64_t big = static_cast<std::int64_t>(g.order()) * t;
    if (big > max_order())
        throw Overflow("blow_up order " + std::to_string(big) + " exceeds max_order() = " +
                       std::to_string(max_order()));
    Graph::Builder b(static_cast<int>(big));
    g.for_each_edge([&](int u, int v) {
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j) b.add_edge(u * t + i, v * t + j);
    });
    return std::move(b).build();
}

namespace {

// Exact test of d*r > k for integer d, k: the fma residue recovers the bits
// the product rounding discarded.
bool dist_exceeds(std::int64_t d, double r, std::int64_t k) {
    double p = static_cast<double>(d) * r;
    double kd = static_cast<double>(k);
    if (p != kd) return p > kd;
    return std::fma(static_cast<double>(d), r, -p) > 0.0;
}

// Exact test of d*(6+2*sqrt(3)) > k in integers: when 6d < k both sides of
// 2*sqrt(3)*d > k-6d are positive, so squares compare faithfully.
bool dist_exceeds_opt(std::int64_t d, std::int64_t k) {
    if (6 * d >= k) return d > 0;
    std::int64_t rest = k - 6 * d;
    return 12 * d * d > rest * rest;
}

}  // namespace

Graph circulant(int k, double r) {
    if (k < 1) throw InvalidParameter("circulant needs at least one vertex");
    if (!(r > 0.0)) throw InvalidParameter("circulant threshold ratio must be positive");
    if (r <= 2.0)
        std::fprintf(stderr,
                     "[gcensus] warning: circulant(k=%d, r=%g): k/r reaches every cyclic "
                     "distance, graph is empty\n",
                     k, r);
    bool opt = (r == kCirculantOptR);
    Graph::Builder b(k);
    for (int d = 1; d <= k / 2; ++d) {
        bool edge = opt ? dist_exceeds_opt(d, k) : dist_exceeds(d, r, k);
        if (!edge) continue;
        for (int i = 0; i < k; ++i) b.add_edge(i, (i + d) % k);
    }
    return std::move(b).build();
}

bool check_isomorphism_witness(const Graph& g, const Permutation& p, bool to_complement) {
    if (p.size() != g.order()) throw SizeMismatch("permutation size differs from graph order");
    int n = g.order();
    const std::vector<int>& im = p.image();
    for (int u = 0; u < n; ++u) {
        const std::uint64_t* ru = g.row(u);
        const std::uint64_t* rpu = g.row(im[u]);
        for (int v = u + 1; v < n; ++v) {
            bool e = (ru[v >> 6] >> (v & 63)) & 1u;
            bool f = (rpu[im[v] >> 6] >> (im[v] & 63)) & 1u;
            if (e != (to_complement ? !f : f)) return false;
        }
    }
    return true;
}

}  // namespace gcensus
