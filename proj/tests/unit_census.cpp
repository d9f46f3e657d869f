#include <numeric>
#include <utility>
#include <vector>

#include "doctest.h"

#include "gcensus/census.hpp"
#include "gcensus/constructions.hpp"
#include "gcensus/errors.hpp"
#include "gcensus/graph.hpp"
#include "gcensus/rng.hpp"

using namespace gcensus;

namespace {

Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return from_edge_list(n, edges);
}

Graph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return from_edge_list(n, edges);
}

Graph complete(int n) { return complement(Graph(n)); }

Graph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(i, i + 5);                // spokes
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return from_edge_list(10, edges);
}

}  // namespace

TEST_SUITE("census") {

TEST_CASE("triple counts on fixed graphs") {
    Profile3 c5 = profile3(cycle(5));
    CHECK(c5.counts == std::array<std::int64_t, 4>{0, 5, 5, 0});
    CHECK(profile3_brute(cycle(5)).counts == c5.counts);

    CHECK(profile3(complete(6))[3] == 20);
    CHECK(profile3(Graph(6))[0] == 20);
    CHECK(profile3(petersen())[3] == 0);
    CHECK(profile3(Graph(2)).total() == 0);
}

TEST_CASE("quadruple counts on fixed graphs") {
    Census4 c5 = census4(cycle(5));
    for (int i = 0; i < kClass4Count; ++i) {
        std::int64_t want = (static_cast<Class4>(i) == Class4::P4) ? 5 : 0;
        CHECK(c5.counts[static_cast<std::size_t>(i)] == want);
    }
    CHECK(census4(cycle(5)) == census4_brute(cycle(5)));

    CHECK(census4(complete(4))[Class4::K4] == 1);
    CHECK(census4(Graph(4))[Class4::E4] == 1);
    CHECK(census4(path(4))[Class4::P4] == 1);

    Census4 pet = census4(petersen());
    CHECK(pet[Class4::K4] == 0);
    CHECK(pet[Class4::K4Minus] == 0);
    CHECK(pet[Class4::TPlus] == 0);
    CHECK(pet[Class4::K3_I] == 0);
    CHECK(pet[Class4::C4] == 0);
    CHECK(pet[Class4::K13] == 10);
    CHECK(pet[Class4::P4] == 60);
    CHECK(pet[Class4::TwoK2] == 15);
    CHECK(pet[Class4::E4] == 5);
    CHECK(pet.total() == 210);
}

TEST_CASE("class metadata") {
    CHECK(complement_class(Class4::E4) == Class4::K4);
    CHECK(complement_class(Class4::K2_2I) == Class4::K4Minus);
    CHECK(complement_class(Class4::TwoK2) == Class4::C4);
    CHECK(complement_class(Class4::P3_I) == Class4::TPlus);
    CHECK(complement_class(Class4::K3_I) == Class4::K13);
    CHECK(complement_class(Class4::P4) == Class4::P4);
    CHECK(class4_name(Class4::K2_2I) == "K2+2I");
    CHECK(class4_name(Class4::K4) == "K4");
}

TEST_CASE("complement swaps paired counts") {
    Graph g = random_graph(45, Seed{31});
    Census4 a = census4(g);
    Census4 b = census4(complement(g));
    for (int i = 0; i < kClass4Count; ++i) {
        Class4 c = static_cast<Class4>(i);
        CHECK(a[c] == b[complement_class(c)]);
    }
    Profile3 p = profile3(g);
    Profile3 q = profile3(complement(g));
    for (int i = 0; i < 4; ++i) CHECK(p[i] == q[3 - i]);
}

TEST_CASE("accelerated counts match direct enumeration across word boundaries") {
    for (int n : {1, 2, 3, 4, 20, 63, 64, 65, 90}) {
        Graph g = random_graph(n, Seed{static_cast<std::uint64_t>(n) * 13 + 1});
        CHECK(profile3(g) == profile3_brute(g));
        CHECK(census4(g) == census4_brute(g));
    }
}

TEST_CASE("direct enumeration size gates") {
    CHECK_THROWS_AS(profile3_brute(Graph(401)), TooLarge);
    CHECK_THROWS_AS(census4_brute(Graph(121)), TooLarge);
    CHECK_NOTHROW(profile3(Graph(500)));
    CHECK_NOTHROW(census4(Graph(500)));
}

TEST_CASE("induced_count on small patterns") {
    Graph c5 = cycle(5);
    CHECK(induced_count(c5, path(4)) == 5);
    CHECK(induced_count(c5, c5) == 1);
    CHECK(induced_count(c5, complete(3)) == 0);
    CHECK(induced_count(complete(6), complete(4)) == 15);
    CHECK(induced_count(cycle(6), path(3)) == 6);
    CHECK(induced_count(cycle(6), Graph(3)) == 2);
    CHECK(induced_count(cycle(6), Graph(1)) == 6);
    CHECK(induced_count(cycle(6), cycle(6)) == 1);
    // removing vertices from a cycle leaves paths, never a smaller cycle
    CHECK(induced_count(cycle(7), cycle(5)) == 0);
    CHECK(induced_count(cycle(7), path(5)) == 7);
    CHECK(induced_count(complete(7), complete(5)) == 21);
    CHECK(induced_count(complete(7), complete(6)) == 7);
    CHECK_THROWS_AS(induced_count(c5, Graph(7)), TooLarge);
}

TEST_CASE("counting identities hold on assorted graphs") {
    for (int i = 0; i < 25; ++i) {
        Graph g = random_graph(4 + i * 3, Seed{static_cast<std::uint64_t>(i) + 500});
        CHECK(verify_goodman(g));
        CHECK(verify_vertex_edge_identities(g));
        CHECK(verify_edge_pair_identity(g));
    }
    for (const Graph& g : {cycle(5), petersen(), complete(7), Graph(6), path(2)}) {
        CHECK(verify_goodman(g));
        CHECK(verify_vertex_edge_identities(g));
        CHECK(verify_edge_pair_identity(g));
    }
}

TEST_CASE("densities reduce to exact fractions") {
    DensityVector d = densities(profile3(cycle(5)), 5);
    CHECK(d.subset_size == 3);
    REQUIRE(d.values.size() == 4);
    CHECK(d.values[0] == Rational{0, 1});
    CHECK(d.values[1] == Rational{1, 2});
    CHECK(d.values[2] == Rational{1, 2});
    CHECK(d.values[3] == Rational{0, 1});

    DensityVector q = densities(census4(complete(4)), 4);
    CHECK(q.values[static_cast<std::size_t>(Class4::K4)] == Rational{1, 1});

    // tiny hosts have no subsets at all; densities stay defined
    DensityVector tiny = densities(profile3(Graph(2)), 2);
    for (const Rational& r : tiny.values) CHECK(r.den != 0);
}

TEST_CASE("density values sum to one") {
    Graph g = random_graph(40, Seed{8});
    DensityVector d3 = densities(profile3(g), 40);
    DensityVector d4 = densities(census4(g), 40);
    double s3 = 0, s4 = 0;
    for (const Rational& r : d3.values) s3 += r.value();
    for (const Rational& r : d4.values) s4 += r.value();
    CHECK(s3 == doctest::Approx(1.0));
    CHECK(s4 == doctest::Approx(1.0));
}

TEST_CASE("exceptional vertices flag degree outliers") {
    // complete graph: every degree n-1 strays n/2-1 from n/2
    CHECK(exceptional_vertices(complete(10), 0.1).size() == 10);
    // 2-regular on 4 vertices sits exactly at n/2
    CHECK(exceptional_vertices(cycle(4), 0.1).size() == 0);
    // a single isolated vertex in an otherwise balanced graph
    Graph::Builder b(6);
    b.add_edge(0, 1);
    b.add_edge(0, 2);
    b.add_edge(1, 2);
    Graph g = std::move(b).build();
    VertexSet ex = exceptional_vertices(g, 0.4);
    CHECK(ex.contains(3));
    CHECK(ex.contains(4));
    CHECK(ex.contains(5));
}

TEST_CASE("quasirandom deviation exact on the complete graph") {
    // every pair has codegree n-2, so each term is |(n-2) - n/4| = (3n-8)/4
    Graph k8 = complete(8);
    CHECK(quasirandom_deviation(k8) == doctest::Approx(28.0 * 4.0 / 512.0));
    // a balanced random graph sits near zero
    CHECK(quasirandom_deviation(random_graph(300, Seed{77})) < 0.02);
}

}  // TEST_SUITE
