#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "gcensus/graph.hpp"

namespace gcensus {

// Induced 3-vertex subgraph counts, indexed by number of edges.
struct Profile3 {
    std::array<std::int64_t, 4> counts{0, 0, 0, 0};

    std::int64_t operator[](int edges) const { return counts[static_cast<std::size_t>(edges)]; }
    std::int64_t total() const { return counts[0] + counts[1] + counts[2] + counts[3]; }

    friend bool operator==(const Profile3&, const Profile3&) = default;
};

// The 11 isomorphism classes of 4-vertex graphs, ordered by edge count and
// paired with the complement class via complement_class.
enum class Class4 : int {
    E4 = 0,      // no edges
    K2_2I = 1,   // one edge
    TwoK2 = 2,   // perfect matching
    P3_I = 3,    // path on 3 plus isolated
    K3_I = 4,    // triangle plus isolated
    P4 = 5,      // path on 4 (self-complementary)
    K13 = 6,     // star
    C4 = 7,      // 4-cycle
    TPlus = 8,   // triangle with a pendant edge
    K4Minus = 9, // K4 minus one edge
    K4 = 10,
};

inline constexpr int kClass4Count = 11;

Class4 complement_class(Class4 c);
std::string_view class4_name(Class4 c);  // stable ids: E4, K2+2I, 2K2, ...

struct Census4 {
    std::array<std::int64_t, kClass4Count> counts{};

    std::int64_t operator[](Class4 c) const { return counts[static_cast<std::size_t>(c)]; }
    std::int64_t& operator[](Class4 c) { return counts[static_cast<std::size_t>(c)]; }
    std::int64_t total() const;

    friend bool operator==(const Census4&, const Census4&) = default;
};

// Exact subgraph density as a reduced fraction of the relevant binomial.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Rational&, const Rational&) = default;
};

struct DensityVector {
    int subset_size = 0;
    std::vector<Rational> values;
};

// Reference counters: direct enumeration of all 3- resp. 4-subsets. Kept
// deliberately independent of the accelerated routes below so the two can
// cross-check each other. Bounded to n <= 400 resp. n <= 120 (TooLarge).
Profile3 profile3_brute(const Graph& g);
Census4 census4_brute(const Graph& g);

// Accelerated exact counters built on codegree popcount passes.
Profile3 profile3(const Graph& g);
Census4 census4(const Graph& g);

// Number of induced copies of h (|h| <= 6) in g.
std::int64_t induced_count(const Graph& g, const Graph& h);

// Identity checks over independently counted quantities; false means a
// counting bug, never a property of the input graph.
bool verify_goodman(const Graph& g);
bool verify_vertex_edge_identities(const Graph& g);
bool verify_edge_pair_identity(const Graph& g);

// Vertices whose degree strays from n/2 by at least eps*n.
VertexSet exceptional_vertices(const Graph& g, double eps);

// (1/n^3) * sum over unordered pairs of |codeg(u,v) - n/4|.
double quasirandom_deviation(const Graph& g);

DensityVector densities(const Profile3& p, int n);
DensityVector densities(const Census4& c, int n);

}  // namespace gcensus
