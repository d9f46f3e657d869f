#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "gcensus/graph.hpp"
#include "gcensus/rng.hpp"

namespace gcensus {

// G(n, 1/2): one fair coin per pair, row-major over u < v.
Graph random_graph(int n, Seed seed);

// Level 1 is the 5-cycle; each further level replaces every vertex by five
// clones (clone i of u is 5u+i) and lays a 5-cycle over each clone class in
// index order. Order is 5^level.
Graph iterated_blowup(int level);

// Two copies of V(g) stacked: vertex i and its double n+i. Copy edges match
// g, cross edges join i to n+j exactly when i != j and ij is not an edge.
// The result is (n-1)-regular with no vertex joined to its own double.
Graph doubled(const Graph& g);

// Disjoint union of two equal-order graphs plus a fair coin for every cross
// pair; left keeps its labels, right is shifted by |left|. Coins are drawn
// row-major over (left vertex, right vertex).
Graph random_join(const Graph& left, const Graph& right, Seed seed);

// random_join of the complete bipartite K_{n,n} and its complement (two
// disjoint K_n). Order 4n; the two 2n-blocks are deterministic, only the
// cross edges depend on the seed.
Graph cgw(int n, Seed seed);

// Repeated random_join doubling: level 1 is cgw(n, seed); level L joins two
// independent level L-1 towers. Order is 2^level * 2n and the 2^level
// deterministic 2n-blocks survive at every level.
Graph oplus_tower(int level, int n, Seed seed);

// Candidate complement self-map for iterated_blowup(level): each base-5
// digit d of the vertex index maps to 2d mod 5. The returned flag is the
// outcome of check_isomorphism_witness against the complement; callers
// should trust the flag, not the construction.
struct SelfCompWitness {
    Permutation perm;
    bool verified;
};
SelfCompWitness selfcomp_witness_blowup(int level);

// Serializable description of a construction. parse() validates the whole
// document; build() reconstructs the same graph on every run. Seeded kinds
// fall back to an optional top-level "seed", then to kDefaultSeed.
class ConstructionSpec {
public:
    static ConstructionSpec parse(const std::string& json_text);

    std::string to_json() const;
    const nlohmann::ordered_json& doc() const { return doc_; }
    std::string kind() const;
    Graph build() const;

    static ConstructionSpec iterated_blowup(int level);
    static ConstructionSpec circulant(int k, double r);
    static ConstructionSpec doubled(ConstructionSpec inner);
    static ConstructionSpec random_join(ConstructionSpec left, ConstructionSpec right,
                                        std::uint64_t seed);
    static ConstructionSpec cgw(int n, std::uint64_t seed);
    static ConstructionSpec oplus_tower(int level, int n, std::uint64_t seed);
    static ConstructionSpec random(int n, std::uint64_t seed);
    static ConstructionSpec complete(int n);
    static ConstructionSpec empty(int n);

private:
    explicit ConstructionSpec(nlohmann::ordered_json doc) : doc_(std::move(doc)) {}
    nlohmann::ordered_json doc_;
};

}  // namespace gcensus
