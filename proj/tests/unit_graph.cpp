#include <sstream>
#include <utility>
#include <vector>

#include "doctest.h"

#include "gcensus/config.hpp"
#include "gcensus/constructions.hpp"
#include "gcensus/errors.hpp"
#include "gcensus/graph.hpp"
#include "gcensus/graph6.hpp"
#include "gcensus/rng.hpp"

using namespace gcensus;

namespace {

Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return from_edge_list(n, edges);
}

Graph complete(int n) { return complement(Graph(n)); }

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("builder dedups and validates") {
    Graph::Builder b(4);
    b.add_edge(0, 1);
    b.add_edge(1, 0);
    b.add_edge(2, 3);
    CHECK(b.has_edge(0, 1));
    CHECK_THROWS_AS(b.add_edge(2, 2), LoopEdge);
    CHECK_THROWS_AS(b.add_edge(0, 4), IndexOutOfRange);
    CHECK_THROWS_AS(b.add_edge(-1, 0), IndexOutOfRange);
    Graph g = std::move(b).build();
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK_FALSE(g.adjacent(1, 1));
    CHECK(g.check_invariants());
}

TEST_CASE("order cap enforced") {
    CHECK_THROWS_AS(Graph(max_order() + 1), TooLarge);
    CHECK_THROWS_AS(Graph(-1), InvalidParameter);
    set_max_order(10);
    CHECK_THROWS_AS(Graph(11), TooLarge);
    set_max_order(20000);
    CHECK_NOTHROW(Graph(11));
}

TEST_CASE("degree and codegree bookkeeping") {
    Graph c5 = cycle(5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
    CHECK(c5.codegree(0, 1) == 0);   // adjacent on a 5-cycle share nothing
    CHECK(c5.codegree(0, 2) == 1);   // vertex 1
    CHECK_THROWS_AS(c5.codegree(0, 0), SameVertex);
    CHECK_THROWS_AS(c5.codegree_minus(2, 2), SameVertex);

    Graph g = random_graph(75, Seed{42});
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v) {
            if (u == v) continue;
            CHECK(g.degree(u) == g.codegree(u, v) + g.codegree_minus(u, v));
        }
}

TEST_CASE("for_each_edge visits each edge once with u < v") {
    Graph g = random_graph(70, Seed{9});
    std::int64_t seen = 0;
    g.for_each_edge([&](int u, int v) {
        CHECK(u < v);
        CHECK(g.adjacent(u, v));
        ++seen;
    });
    CHECK(seen == g.edge_count());
}

TEST_CASE("complement is an involution and complements edges") {
    for (int n : {1, 2, 5, 63, 64, 65, 70}) {
        Graph g = random_graph(n, Seed{static_cast<std::uint64_t>(n)});
        Graph gc = complement(g);
        CHECK(complement(gc) == g);
        CHECK(g.edge_count() + gc.edge_count() ==
              static_cast<std::int64_t>(n) * (n - 1) / 2);
        for (int u = 0; u < n; ++u) {
            CHECK_FALSE(gc.adjacent(u, u));
            for (int v = u + 1; v < n; ++v) CHECK(gc.adjacent(u, v) == !g.adjacent(u, v));
        }
        CHECK(gc.check_invariants());
    }
}

TEST_CASE("induced subgraph keeps the selected adjacency") {
    Graph c5 = cycle(5);
    Graph p3 = induced(c5, VertexSet({0, 1, 2}));
    CHECK(p3.order() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.adjacent(0, 1));
    CHECK(p3.adjacent(1, 2));
    CHECK_FALSE(p3.adjacent(0, 2));
    CHECK(induced(c5, VertexSet(std::vector<int>{})).order() == 0);
    CHECK_THROWS_AS(induced(c5, VertexSet({0, 5})), IndexOutOfRange);
}

TEST_CASE("vertex sets sort, dedup, and validate") {
    VertexSet s({3, 1, 2, 1});
    CHECK(s.size() == 3);
    CHECK(s.members() == std::vector<int>{1, 2, 3});
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(0));
    CHECK_THROWS_AS(VertexSet({-1}), IndexOutOfRange);
}

TEST_CASE("permutations must be bijections") {
    CHECK_NOTHROW(Permutation({2, 0, 1}));
    CHECK_THROWS(Permutation({0, 0, 1}));
    CHECK_THROWS(Permutation({0, 1, 3}));
    Permutation p({2, 0, 1});
    CHECK(p(0) == 2);
    CHECK(p.size() == 3);
}

TEST_CASE("isomorphism witness checking") {
    Graph c5 = cycle(5);
    // rotation is an automorphism
    CHECK(check_isomorphism_witness(c5, Permutation({1, 2, 3, 4, 0}), false));
    // doubling the index maps the 5-cycle onto its complement
    CHECK(check_isomorphism_witness(c5, Permutation({0, 2, 4, 1, 3}), true));
    CHECK_FALSE(check_isomorphism_witness(c5, Permutation({1, 2, 3, 4, 0}), true));
    CHECK_FALSE(check_isomorphism_witness(c5, Permutation({0, 2, 4, 1, 3}), false));
    CHECK_THROWS_AS(check_isomorphism_witness(c5, Permutation({0, 1, 2}), false),
                    SizeMismatch);
}

TEST_CASE("blow_up multiplies vertices and joins clone classes of edges") {
    Graph k2 = from_edge_list(2, {{0, 1}});
    Graph k33 = blow_up(k2, 3);
    CHECK(k33.order() == 6);
    CHECK(k33.edge_count() == 9);
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) CHECK(k33.adjacent(i, j));
    CHECK_FALSE(k33.adjacent(0, 1));
    CHECK_THROWS_AS(blow_up(k2, 0), InvalidParameter);
    CHECK_THROWS_AS(blow_up(Graph(max_order()), 2), Overflow);
}

TEST_CASE("circulant edges are strict threshold exceedances") {
    // k=12, r=4: edge iff cyclic distance > 3, so distances 4,5,6 qualify
    Graph g = circulant(12, 4.0);
    for (int v = 0; v < 12; ++v) CHECK(g.degree(v) == 5);
    CHECK(g.adjacent(0, 4));
    CHECK(g.adjacent(0, 6));
    CHECK_FALSE(g.adjacent(0, 3));  // the tie d*r == k stays a non-edge
    CHECK(g.edge_count() == 30);

    // below the threshold nothing qualifies
    CHECK(circulant(5, 2.4).edge_count() == 0);
    CHECK(circulant(7, 2.0).edge_count() == 0);

    // the optimal ratio routes through the exact integer predicate;
    // at k=60 the edge distances are 7..30
    Graph opt = circulant(60, kCirculantOptR);
    for (int v = 0; v < 60; ++v) CHECK(opt.degree(v) == 47);
    CHECK_FALSE(opt.adjacent(0, 6));
    CHECK(opt.adjacent(0, 7));
    CHECK_THROWS_AS(circulant(-1, 4.0), InvalidParameter);
}

TEST_CASE("graph6 known encodings") {
    CHECK(graph6_encode(Graph(1)) == "@");
    CHECK(graph6_encode(Graph(2)) == "A?");
    CHECK(graph6_encode(complete(2)) == "A_");
    CHECK(graph6_decode("@") == Graph(1));
    CHECK(graph6_decode("A_") == complete(2));
    CHECK(graph6_decode(">>graph6<<A_") == complete(2));
}

TEST_CASE("graph6 round trips across size forms") {
    for (int n : {1, 2, 10, 62, 63, 64, 100, 200}) {
        Graph g = random_graph(n, Seed{static_cast<std::uint64_t>(n) + 77});
        CHECK(graph6_decode(graph6_encode(g)) == g);
    }
}

TEST_CASE("graph6 strict decoding") {
    CHECK_THROWS_AS(graph6_decode(""), MalformedGraph6);
    CHECK_THROWS_AS(graph6_decode("A"), MalformedGraph6);       // truncated record
    CHECK_THROWS_AS(graph6_decode("A_x"), MalformedGraph6);     // stray byte
    CHECK_THROWS_AS(graph6_decode("A@"), MalformedGraph6);      // nonzero padding
    CHECK_THROWS_AS(graph6_decode("A "), MalformedGraph6);      // byte below the alphabet
    CHECK_THROWS_AS(graph6_decode("\x7f\x7f"), MalformedGraph6);

    // order field beyond the configured cap
    std::string big = graph6_encode(Graph(100));
    set_max_order(50);
    CHECK_THROWS_AS(graph6_decode(big), TooLarge);
    set_max_order(20000);
    CHECK_NOTHROW(graph6_decode(big));
}

TEST_CASE("graph6 line io") {
    Graph a = random_graph(9, Seed{1});
    Graph b = random_graph(30, Seed{2});
    std::ostringstream os;
    graph6_write_line(os, a);
    graph6_write_line(os, b);
    std::istringstream is("\n" + os.str() + "\n");
    std::vector<Graph> back = graph6_read_lines(is);
    REQUIRE(back.size() == 2);
    CHECK(back[0] == a);
    CHECK(back[1] == b);

    std::istringstream bad("A_\nA@\n");
    CHECK_THROWS_AS(graph6_read_lines(bad), MalformedGraph6);
}

TEST_CASE("seeded bit streams are reproducible") {
    BitStream a(Seed{123});
    BitStream b(Seed{123});
    BitStream c(Seed{124});
    int diff = 0;
    for (int i = 0; i < 256; ++i) {
        bool x = a.next_bit();
        CHECK(x == b.next_bit());
        if (x != c.next_bit()) ++diff;
    }
    CHECK(diff > 64);  // distinct seeds decorrelate

    Seed s{5};
    CHECK(s.child(1, 2) == s.child(1, 2));
    CHECK(s.child(1, 2) != s.child(1, 3));
    CHECK(s.child(1, 2) != s.child(2, 2));
    CHECK(s.child(1) == s.child(1, 0));
}

}  // TEST_SUITE
