#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace gcensus {

// Sorted, duplicate-free vertex list.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> members);

    const std::vector<int>& members() const noexcept { return members_; }
    int size() const noexcept { return static_cast<int>(members_.size()); }
    bool contains(int v) const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<int> members_;
};

// Bijection on {0..n-1}; image() is the full image vector.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> image);

    int size() const noexcept { return static_cast<int>(image_.size()); }
    int operator()(int i) const;
    const std::vector<int>& image() const noexcept { return image_; }

private:
    std::vector<int> image_;
};

// Simple undirected graph on {0..n-1}. Adjacency lives in packed 64-bit rows
// so the counting kernels can run word-wise. Immutable once built.
class Graph {
public:
    // Row-level write access for the construction routines; everything the
    // library hands out is built through this.
    class Builder {
    public:
        explicit Builder(int n);

        // Dedups silently, rejects loops and out-of-range endpoints.
        void add_edge(int u, int v);
        bool has_edge(int u, int v) const;
        int order() const noexcept { return n_; }
        Graph build() &&;

    private:
        int n_ = 0;
        int words_ = 0;
        std::int64_t edges_ = 0;
        std::vector<std::uint64_t> bits_;
    };

    explicit Graph(int n = 0);  // edgeless

    int order() const noexcept { return n_; }
    std::int64_t edge_count() const noexcept { return edges_; }

    // Number of 64-bit words per adjacency row.
    int words() const noexcept { return words_; }
    // Raw row; valid u only. Bit v of the row is the adjacency to v.
    const std::uint64_t* row(int u) const noexcept {
        return bits_.data() + static_cast<std::size_t>(u) * words_;
    }

    bool adjacent(int u, int v) const;  // adjacent(u,u) is false
    int degree(int u) const;
    // |N(u) ∩ N(v)| and |N(u) \ N(v)|; the latter includes v itself whenever
    // uv is an edge, so degree(u) == codegree(u,v) + codegree_minus(u,v).
    int codegree(int u, int v) const;
    int codegree_minus(int u, int v) const;

    template <class F>
    void for_each_edge(F&& f) const {
        for (int u = 0; u < n_; ++u) {
            const std::uint64_t* r = row(u);
            for (int w = u >> 6; w < words_; ++w) {
                std::uint64_t word = r[w];
                if (w == (u >> 6)) word &= ~((std::uint64_t(2) << (u & 63)) - 1);
                while (word) {
                    int v = (w << 6) + lowest_bit(word);
                    f(u, v);
                    word &= word - 1;
                }
            }
        }
    }

    bool check_invariants() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    Graph(int n, std::vector<std::uint64_t> bits, std::int64_t edges);
    void check_vertex(int u) const;
    static int lowest_bit(std::uint64_t w) noexcept;

    int n_ = 0;
    int words_ = 0;
    std::int64_t edges_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<int> degrees_;

    friend Graph complement(const Graph&);
};

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);
Graph complement(const Graph& g);
Graph induced(const Graph& g, const VertexSet& s);

// Replaces every vertex by t pairwise nonadjacent clones; clone i of u is
// vertex u*t + i. Edges join all clone pairs of adjacent originals.
Graph blow_up(const Graph& g, int t);

// Vertices 0..k-1, edge iff the cyclic distance of the pair strictly exceeds
// k/r. The comparison d*r > k is evaluated exactly (fma residue), so ties go
// to non-edges no matter how k/r rounds. r <= 2 gives the empty graph and a
// stderr warning. Passing r == kCirculantOptR routes to the exact integer
// predicate for that threshold.
Graph circulant(int k, double r);

// 6 + 2*sqrt(3), the edge-density-optimal threshold ratio for the family.
inline constexpr double kCirculantOptR = 9.46410161513775458705489268301174473;
inline constexpr const char* kCirculantOptRDigits =
    "9.4641016151377545870548926830117447338856105076207612561116139589038660338176";

// True iff p maps g onto g (to_complement=false) or onto its complement
// (to_complement=true), checking every pair.
bool check_isomorphism_witness(const Graph& g, const Permutation& p, bool to_complement);

}  // namespace gcensus
