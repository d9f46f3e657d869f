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

Graph complete(int n) { return complement(Graph(n)); }

bool regular(const Graph& g, int d) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != d) return false;
    return true;
}

VertexSet range_set(int lo, int hi) {
    std::vector<int> v;
    for (int i = lo; i < hi; ++i) v.push_back(i);
    return VertexSet(std::move(v));
}

}  // namespace

TEST_SUITE("constructions") {

TEST_CASE("random graphs are seeded and reproducible") {
    Graph a = random_graph(30, Seed{7});
    CHECK(a == random_graph(30, Seed{7}));
    CHECK(a != random_graph(30, Seed{8}));
    CHECK(a.edge_count() > 150);
    CHECK(a.edge_count() < 290);
    CHECK(random_graph(0, Seed{1}).order() == 0);
}

TEST_CASE("iterated blow-up levels") {
    Graph b1 = iterated_blowup(1);
    CHECK(b1 == cycle(5));

    Graph b2 = iterated_blowup(2);
    CHECK(b2.order() == 25);
    CHECK(regular(b2, 12));
    // clones of one base vertex carry a fresh 5-cycle
    CHECK(b2.adjacent(0, 1));
    CHECK(b2.adjacent(0, 4));
    CHECK_FALSE(b2.adjacent(0, 2));
    // clone classes of base-adjacent vertices are fully joined
    for (int i = 0; i < 5; ++i)
        for (int j = 5; j < 10; ++j) CHECK(b2.adjacent(i, j));
    // base vertices 0 and 2 are non-adjacent on the 5-cycle
    for (int i = 0; i < 5; ++i)
        for (int j = 10; j < 15; ++j) CHECK_FALSE(b2.adjacent(i, j));

    CHECK(iterated_blowup(3).order() == 125);
    CHECK(regular(iterated_blowup(3), 62));

    CHECK_THROWS_AS(iterated_blowup(0), InvalidParameter);
    CHECK_THROWS_AS(iterated_blowup(7), Overflow);   // 5^7 > 20000
    CHECK_THROWS_AS(iterated_blowup(40), Overflow);  // 5^40 overflows int64 too
}

TEST_CASE("blow-up complement witness verifies") {
    for (int level = 1; level <= 3; ++level) {
        SelfCompWitness w = selfcomp_witness_blowup(level);
        CHECK(w.verified);
        CHECK(w.perm.size() == iterated_blowup(level).order());
    }
}

TEST_CASE("doubled graph structure") {
    // doubling the edgeless pair gives a perfect matching
    Graph m = doubled(Graph(2));
    CHECK(m.order() == 4);
    CHECK(m.edge_count() == 2);
    CHECK(m.adjacent(0, 3));
    CHECK(m.adjacent(1, 2));
    CHECK_FALSE(m.adjacent(0, 2));  // no vertex meets its own double

    // doubling a triangle gives two disjoint triangles
    Graph t = doubled(complete(3));
    CHECK(t.order() == 6);
    CHECK(t.edge_count() == 6);
    CHECK(profile3(t)[3] == 2);

    Graph g = random_graph(20, Seed{11});
    Graph d = doubled(g);
    CHECK(d.order() == 40);
    CHECK(regular(d, 19));
    CHECK(induced(d, range_set(0, 20)) == g);
    CHECK(induced(d, range_set(20, 40)) == g);
    for (int i = 0; i < 20; ++i) {
        CHECK_FALSE(d.adjacent(i, 20 + i));
        for (int j = 0; j < 20; ++j)
            if (i != j) CHECK(d.adjacent(i, 20 + j) == !g.adjacent(i, j));
    }
}

TEST_CASE("doubling transfer identities") {
    for (int i = 0; i < 20; ++i) {
        Graph g = random_graph(5 + i, Seed{static_cast<std::uint64_t>(i) + 900});
        Profile3 pg = profile3(g);
        Profile3 pd = profile3(doubled(g));
        CHECK(pd[3] == 2 * (pg[3] + pg[1]));
        CHECK(pd[0] == 2 * (pg[0] + pg[2]));
    }
}

TEST_CASE("random join keeps both parts and matches orders") {
    Graph j = random_join(complete(3), Graph(3), Seed{4});
    CHECK(j.order() == 6);
    CHECK(induced(j, range_set(0, 3)) == complete(3));
    CHECK(induced(j, range_set(3, 6)) == Graph(3));
    CHECK(j == random_join(complete(3), Graph(3), Seed{4}));
    CHECK_THROWS_AS(random_join(complete(3), Graph(4), Seed{1}), SizeMismatch);
}

TEST_CASE("cgw blocks are the complete bipartite graph and its complement") {
    Graph g = cgw(3, Seed{21});
    CHECK(g.order() == 12);
    Graph left = induced(g, range_set(0, 6));
    Graph right = induced(g, range_set(6, 12));
    // left block: K_{3,3}
    CHECK(left.edge_count() == 9);
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) CHECK(left.adjacent(i, j));
    // right block: two disjoint triangles
    CHECK(right == complement(left));
    CHECK(g == cgw(3, Seed{21}));
    CHECK(g != cgw(3, Seed{22}));
    CHECK_THROWS_AS(cgw(0, Seed{1}), InvalidParameter);
}

TEST_CASE("towers stack joins of the base block") {
    CHECK(oplus_tower(1, 5, Seed{3}) == cgw(5, Seed{3}));

    Graph t2 = oplus_tower(2, 5, Seed{3});
    CHECK(t2.order() == 40);
    // the two level-1 children are reconstructible from the recursion seeds
    CHECK(induced(t2, range_set(0, 20)) == cgw(5, Seed{3}.child(2, 0)));
    CHECK(induced(t2, range_set(20, 40)) == cgw(5, Seed{3}.child(2, 1)));

    CHECK(oplus_tower(2, 15, Seed{1}).order() == 120);
    CHECK(oplus_tower(3, 5, Seed{1}).order() == 80);
    CHECK_THROWS_AS(oplus_tower(0, 5, Seed{1}), InvalidParameter);
    CHECK_THROWS_AS(oplus_tower(1, 0, Seed{1}), InvalidParameter);
    CHECK_THROWS_AS(oplus_tower(30, 100, Seed{1}), Overflow);
}

TEST_CASE("construction specs round trip") {
    std::vector<ConstructionSpec> specs;
    specs.push_back(ConstructionSpec::iterated_blowup(2));
    specs.push_back(ConstructionSpec::circulant(30, 4.0));
    specs.push_back(ConstructionSpec::circulant(40, kCirculantOptR));
    specs.push_back(ConstructionSpec::doubled(ConstructionSpec::circulant(20, 4.0)));
    specs.push_back(ConstructionSpec::random_join(ConstructionSpec::iterated_blowup(2),
                                                  ConstructionSpec::random(25, 6), 9));
    specs.push_back(ConstructionSpec::cgw(6, 5));
    specs.push_back(ConstructionSpec::oplus_tower(2, 4, 8));
    specs.push_back(ConstructionSpec::random(12, 3));
    specs.push_back(ConstructionSpec::complete(5));
    specs.push_back(ConstructionSpec::empty(5));
    for (const ConstructionSpec& s : specs) {
        ConstructionSpec back = ConstructionSpec::parse(s.to_json());
        CHECK(back.kind() == s.kind());
        CHECK(back.build() == s.build());
    }
}

TEST_CASE("construction specs build the same graphs as the direct calls") {
    CHECK(ConstructionSpec::iterated_blowup(2).build() == iterated_blowup(2));
    CHECK(ConstructionSpec::circulant(30, 4.0).build() == circulant(30, 4.0));
    CHECK(ConstructionSpec::cgw(5, 9).build() == cgw(5, Seed{9}));
    CHECK(ConstructionSpec::oplus_tower(2, 4, 8).build() == oplus_tower(2, 4, Seed{8}));
    CHECK(ConstructionSpec::random(20, 3).build() == random_graph(20, Seed{3}));
    CHECK(ConstructionSpec::complete(5).build() == complete(5));
    CHECK(ConstructionSpec::empty(5).build() == Graph(5));
    CHECK(ConstructionSpec::doubled(ConstructionSpec::circulant(20, 4.0)).build() ==
          doubled(circulant(20, 4.0)));
    // join coins come from the node seed; deterministic children ignore it
    CHECK(ConstructionSpec::random_join(ConstructionSpec::iterated_blowup(2),
                                        ConstructionSpec::circulant(25, 4.0), 9)
              .build() == random_join(iterated_blowup(2), circulant(25, 4.0), Seed{9}));
}

TEST_CASE("construction spec validation rejects malformed documents") {
    CHECK_THROWS_AS(ConstructionSpec::parse("not json"), InvalidParameter);
    CHECK_THROWS_AS(ConstructionSpec::parse("[1,2]"), InvalidParameter);
    CHECK_THROWS_AS(ConstructionSpec::parse(R"({"kind":"nonsense"})"), InvalidParameter);
    CHECK_THROWS_AS(ConstructionSpec::parse(R"({"kind":"cgw"})"), InvalidParameter);
    CHECK_THROWS_AS(ConstructionSpec::parse(R"({"kind":"cgw","n":5,"extra":1})"),
                    InvalidParameter);
    CHECK_THROWS_AS(ConstructionSpec::parse(R"({"kind":"cgw","n":"five"})"), InvalidParameter);
    CHECK_THROWS_AS(ConstructionSpec::parse(R"({"kind":"cgw","n":5,"seed":-3})"),
                    InvalidParameter);
    CHECK_THROWS_AS(ConstructionSpec::parse(R"({"kind":"doubled"})"), InvalidParameter);
    CHECK_THROWS_AS(
        ConstructionSpec::parse(R"({"kind":"doubled","inner":{"kind":"nonsense"}})"),
        InvalidParameter);
    CHECK_THROWS_AS(ConstructionSpec::parse(R"({"kind":"circulant","k":10})"), InvalidParameter);
    // out-of-range sizes pass parsing but are refused at build time
    CHECK_THROWS_AS(ConstructionSpec::parse(R"({"kind":"cgw","n":900000000000})").build(),
                    InvalidParameter);

    // a top-level seed threads down to unseeded children
    ConstructionSpec a = ConstructionSpec::parse(
        R"({"kind":"doubled","inner":{"kind":"random","n":10},"seed":5})");
    ConstructionSpec b = ConstructionSpec::parse(
        R"({"kind":"doubled","inner":{"kind":"random","n":10},"seed":6})");
    CHECK(a.build() != b.build());
    CHECK(a.build() == a.build());
}

}  // TEST_SUITE
