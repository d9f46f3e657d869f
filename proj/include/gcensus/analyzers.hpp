#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gcensus/census.hpp"
#include "gcensus/graph.hpp"
#include "gcensus/rng.hpp"

namespace gcensus {

// Order-preserving canonical code for graphs on at most 8 vertices: the
// minimum upper-triangle bit code over all vertex relabelings. Codes are
// comparable only between graphs of equal order.
std::uint64_t canonical_form(const Graph& g);

struct IsoClassTable {
    int order = 0;
    std::vector<std::uint64_t> codes;  // ascending canonical codes
    std::vector<std::string> names;    // stable ids for order <= 4, else "g<order>_<code>"
};

// All isomorphism classes on ell <= 6 vertices; built once and cached.
const IsoClassTable& enumerate_classes(int ell);

// Graph on ell vertices from upper-triangle bits in pair order
// (0,1),(0,2),(1,2),(0,3),...
Graph graph_from_code(int ell, std::uint64_t code);

// Exact per-class counts of induced ell-subsets, aligned with
// enumerate_classes(ell).codes. ell = 5 needs order <= 300, ell = 6 <= 120.
std::vector<std::int64_t> subset_class_counts(const Graph& g, int ell);

struct UniversalityReport {
    int ell = 0;
    bool verdict = false;
    // "census": settled by exact 3- or 4-subset counts; "sampled": every
    // class was exhibited by sampling; "exhaustive": full subset scan.
    std::string method;
    std::vector<std::uint64_t> present;  // canonical codes
    std::vector<std::uint64_t> missing;
    std::vector<std::string> missing_names;
};

// Does every graph on ell vertices occur induced in g? ell <= 4 is settled
// at any order; ell = 5 (6) may need an exhaustive scan, bounded to order
// 300 (120) -- beyond that a true verdict can still come from sampling, and
// an unsettled case throws TooLarge.
UniversalityReport is_l_universal(const Graph& g, int ell);

struct CliqueResult {
    int size = 0;
    VertexSet witness;
    bool exact = true;  // false when the budget expired; size is a lower bound
};

CliqueResult clique_number(const Graph& g, double budget_seconds = 60.0);
CliqueResult independence_number(const Graph& g, double budget_seconds = 60.0);

struct InducedWitness {
    bool found = false;
    VertexSet witness;  // may be empty for a positive verdict on huge hosts
};

// Induced-copy search for |h| <= 6, same size policy as is_l_universal.
InducedWitness has_induced(const Graph& g, const Graph& h);

// Evidence that a specific sampled graph W on 24*ell*2^ell vertices embeds in
// no level-ell tower with part size n: small clique and independence numbers
// for W plus the verified block structure of a representative tower.
struct ObstructionCertificate {
    int ell = 0;
    int n = 0;
    int witness_order = 0;
    std::string witness_graph6;
    int omega = 0;
    int alpha = 0;
    int threshold = 0;    // 12*ell; both numbers must stay below it
    int block_count = 0;  // 2^ell
    int block_order = 0;  // 2n
    bool blocks_ok = false;
    int retries = 0;
    Seed seed_used;
    bool verdict = false;
};

ObstructionCertificate obstruction_certificate(int ell, int n, Seed seed,
                                               double budget_seconds = 60.0);

struct LimitRow {
    std::string family;
    std::int64_t k = 0;
    int order = 0;
    DensityVector p3;
    double dev_pair_sum = 0;  // |p0 + p3 - 1/4|
    double dev_p0 = 0;        // |p0 - 1/8|
    double dev_p3 = 0;        // |p3 - 1/8|
    double dev_p1 = 0;        // |p1 - 3*p3|
    double dev_p2 = 0;        // |p2 - 3*p0|
    bool goodman_consistent = false;      // dev_pair_sum < eps
    bool random_like_consistent = false;  // dev_p0, dev_p3 < eps
    bool ratio_consistent = false;        // dev_p1, dev_p2 < eps
    std::string c5_presence;              // "yes", "no", or "unknown" (reported, not asserted)
};

// Evaluates a parameterized family at the given sizes and flags how close
// each instance sits to the random-like density pattern.
std::vector<LimitRow> limit_table(const std::string& family,
                                  const std::function<Graph(std::int64_t)>& builder,
                                  const std::vector<std::int64_t>& ks, double eps);

}  // namespace gcensus
