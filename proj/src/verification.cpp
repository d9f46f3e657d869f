#include "gcensus/verification.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "gcensus/analyzers.hpp"
#include "gcensus/census.hpp"
#include "gcensus/constructions.hpp"
#include "gcensus/errors.hpp"
#include "gcensus/rng.hpp"

namespace gcensus {

namespace {

// Every random input below derives from this root, so the whole suite is
// reproducible run to run.
const Seed kSuiteRoot{kDefaultSeed};

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return from_edge_list(n, edges);
}

std::string fmt(double x) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << x;
    return os.str();
}

struct Failure {
    std::string text;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

// ------------------------------------------------------------ 1: identities

std::string check_identities() {
    Seed s = kSuiteRoot.child(101, 0);
    SplitMix64 sizes{s.value};
    int graphs = 0;
    for (int i = 0; i < 1000; ++i) {
        int n = 4 + static_cast<int>(sizes.next() % 97);  // 4..100
        Graph g = random_graph(n, s.child(1, static_cast<std::uint64_t>(i)));
        expect(verify_goodman(g), "degree-pair identity failed on random graph " + std::to_string(i));
        expect(verify_vertex_edge_identities(g),
               "vertex-edge identities failed on random graph " + std::to_string(i));
        expect(verify_edge_pair_identity(g),
               "edge-pair identity failed on random graph " + std::to_string(i));
        ++graphs;
    }
    for (const auto& [name, g] : small_construction_suite()) {
        expect(verify_goodman(g), "degree-pair identity failed on " + name);
        expect(verify_vertex_edge_identities(g), "vertex-edge identities failed on " + name);
        expect(verify_edge_pair_identity(g), "edge-pair identity failed on " + name);
        ++graphs;
    }
    return "all three identity families hold on " + std::to_string(graphs) + " graphs";
}

// ------------------------------------------------------ 2: oracle agreement

std::string check_oracles() {
    Seed s = kSuiteRoot.child(102, 0);
    SplitMix64 sizes{s.value};
    int graphs = 0;
    for (int i = 0; i < 500; ++i) {
        int n = 4 + static_cast<int>(sizes.next() % 97);
        Graph g = random_graph(n, s.child(2, static_cast<std::uint64_t>(i)));
        expect(profile3(g) == profile3_brute(g),
               "triple counts disagree on random graph " + std::to_string(i));
        if (n <= 120)
            expect(census4(g) == census4_brute(g),
                   "quadruple counts disagree on random graph " + std::to_string(i));
        ++graphs;
    }
    for (const auto& [name, g] : small_construction_suite()) {
        expect(profile3(g) == profile3_brute(g), "triple counts disagree on " + name);
        expect(census4(g) == census4_brute(g), "quadruple counts disagree on " + name);
        ++graphs;
    }
    return "accelerated and direct counts agree on " + std::to_string(graphs) + " graphs";
}

// ------------------------------------------------------ 3: circulant limits

std::string check_circulant_densities() {
    Graph g = circulant(2000, kCirculantOptR);
    DensityVector d = densities(profile3(g), g.order());
    double p1 = d.values[1].value(), p3 = d.values[3].value();
    expect(std::abs(p3 - 0.466497) <= 0.01,
           "p3 = " + fmt(p3) + " strays more than 0.01 from 0.466497");
    expect(std::abs(p1 - 0.033503) <= 0.005,
           "p1 = " + fmt(p1) + " strays more than 0.005 from 0.033503");
    expect(std::abs(p1 + p3 - 0.5) <= 0.005,
           "p1+p3 = " + fmt(p1 + p3) + " strays more than 0.005 from 0.5");
    return "k=2000: p3 = " + fmt(p3) + ", p1 = " + fmt(p1) + ", p1+p3 = " + fmt(p1 + p3);
}

// ------------------------------------------- 4: doubled circulant densities

std::string check_doubled_densities() {
    Graph g = doubled(circulant(1000, kCirculantOptR));
    DensityVector d = densities(profile3(g), g.order());
    double p0 = d.values[0].value(), p1 = d.values[1].value();
    double p2 = d.values[2].value(), p3 = d.values[3].value();
    expect(std::abs(p0 - 0.125) <= 0.01, "p0 = " + fmt(p0) + " strays more than 0.01 from 1/8");
    expect(std::abs(p3 - 0.125) <= 0.01, "p3 = " + fmt(p3) + " strays more than 0.01 from 1/8");
    expect(std::abs(p1 - 3 * p3) <= 0.02, "p1 - 3*p3 = " + fmt(p1 - 3 * p3) + " exceeds 0.02");
    expect(std::abs(p2 - 3 * p0) <= 0.02, "p2 - 3*p0 = " + fmt(p2 - 3 * p0) + " exceeds 0.02");
    return "k=1000 doubled: p = (" + fmt(p0) + ", " + fmt(p1) + ", " + fmt(p2) + ", " + fmt(p3) +
           ")";
}

// ----------------------------------------------------------- 5: clique caps

std::string check_clique_bounds() {
    Graph base = circulant(100, kCirculantOptR);
    CliqueResult a = clique_number(base, 240.0);
    expect(a.exact, "clique search on the 100-vertex circulant hit its budget");
    expect(a.size <= 9, "circulant clique number " + std::to_string(a.size) + " exceeds 9");
    Graph d = doubled(base);
    CliqueResult b = clique_number(d, 240.0);
    expect(b.exact, "clique search on the doubled circulant hit its budget");
    expect(b.size <= 9, "doubled clique number " + std::to_string(b.size) + " exceeds 9");
    return "omega(circulant) = " + std::to_string(a.size) +
           ", omega(doubled) = " + std::to_string(b.size) + ", both exact";
}

// ----------------------------------------------------- 6: doubling transfer

std::string check_doubling_transfer() {
    Seed s = kSuiteRoot.child(106, 0);
    SplitMix64 sizes{s.value};
    for (int i = 0; i < 200; ++i) {
        int n = 2 + static_cast<int>(sizes.next() % 39);  // 2..40
        Graph g = random_graph(n, s.child(6, static_cast<std::uint64_t>(i)));
        Profile3 pg = profile3_brute(g);
        Profile3 ph = profile3_brute(doubled(g));
        expect(ph.counts[3] == 2 * (pg.counts[3] + pg.counts[1]),
               "triangle transfer failed on graph " + std::to_string(i));
        expect(ph.counts[0] == 2 * (pg.counts[0] + pg.counts[2]),
               "anti-triangle transfer failed on graph " + std::to_string(i));
    }
    return "both transfer identities exact on 200 random graphs";
}

// ------------------------------------------------------- 7: blow-up family

std::string check_blowup_family() {
    Graph b3 = iterated_blowup(3);
    Graph p5 = path_graph(5);
    expect(induced_count(b3, p5) == 0, "level-3 blow-up contains an induced 5-path");
    for (int v = 0; v < b3.order(); ++v)
        expect(b3.degree(v) == 62, "level-3 blow-up is not 62-regular");
    UniversalityReport u4 = is_l_universal(b3, 4);
    expect(u4.verdict, "level-3 blow-up misses a 4-vertex class");
    UniversalityReport u5 = is_l_universal(b3, 5);
    expect(!u5.verdict, "level-3 blow-up unexpectedly 5-universal");
    std::uint64_t p5code = canonical_form(p5);
    bool p5missing =
        std::find(u5.missing.begin(), u5.missing.end(), p5code) != u5.missing.end();
    expect(p5missing, "5-path absent from the missing-class list");
    return "no induced 5-path, 62-regular, 4-universal, " +
           std::to_string(u5.missing.size()) + " missing 5-classes including the 5-path";
}

// ------------------------------------------------------- 8: tower densities

std::string check_tower_densities() {
    Graph g = cgw(150, kSuiteRoot);
    DensityVector d = densities(profile3(g), g.order());
    const double want[4] = {0.125, 0.375, 0.375, 0.125};
    for (int i = 0; i < 4; ++i)
        expect(std::abs(d.values[static_cast<std::size_t>(i)].value() - want[i]) <= 0.02,
               "cgw p" + std::to_string(i) + " = " +
                   fmt(d.values[static_cast<std::size_t>(i)].value()) +
                   " strays more than 0.02 from " + fmt(want[i]));
    Graph t = oplus_tower(2, 75, kSuiteRoot);
    DensityVector dt = densities(profile3(t), t.order());
    for (int i = 0; i < 4; ++i)
        expect(std::abs(dt.values[static_cast<std::size_t>(i)].value() - want[i]) <= 0.03,
               "tower p" + std::to_string(i) + " = " +
                   fmt(dt.values[static_cast<std::size_t>(i)].value()) +
                   " strays more than 0.03 from " + fmt(want[i]));
    return "cgw(150) p3 = " + fmt(d.values[3].value()) + ", tower(2,75) p3 = " +
           fmt(dt.values[3].value());
}

// ------------------------------------------------- 9: obstruction at level 1

std::string check_obstruction() {
    ObstructionCertificate cert = obstruction_certificate(1, 12, kSuiteRoot, 540.0);
    expect(cert.verdict, "certificate verdict false");
    expect(cert.omega <= 11, "witness clique number " + std::to_string(cert.omega) + " > 11");
    expect(cert.alpha <= 11,
           "witness independence number " + std::to_string(cert.alpha) + " > 11");
    return "48-vertex witness: omega = " + std::to_string(cert.omega) +
           ", alpha = " + std::to_string(cert.alpha) + ", blocks verified, verdict true";
}

// --------------------------------------------------- 10: 4-universal family

std::string check_four_universality() {
    struct Entry {
        const char* name;
        Graph g;
    };
    std::vector<Entry> entries;
    entries.push_back({"iterated_blowup(3)", iterated_blowup(3)});
    entries.push_back({"doubled(circulant(1000))", doubled(circulant(1000, kCirculantOptR))});
    entries.push_back({"cgw(150)", cgw(150, kSuiteRoot)});
    for (const auto& e : entries) {
        UniversalityReport rep = is_l_universal(e.g, 4);
        expect(rep.verdict, std::string(e.name) + " misses a 4-vertex class");
    }
    return "all three order >= 125 instances contain every 4-vertex graph";
}

// --------------------------------------------- 11: quasirandom separation

std::string check_quasirandom_separation() {
    double dev_random = quasirandom_deviation(random_graph(500, kSuiteRoot.child(111, 0)));
    expect(dev_random < 0.02, "G(500,1/2) deviation " + fmt(dev_random) + " not below 0.02");
    double dev_blowup = quasirandom_deviation(iterated_blowup(3));
    expect(dev_blowup > 0.03, "blow-up deviation " + fmt(dev_blowup) + " not above 0.03");
    double dev_cgw = quasirandom_deviation(cgw(150, kSuiteRoot));
    expect(dev_cgw > 0.03, "cgw deviation " + fmt(dev_cgw) + " not above 0.03");
    return "deviations: random " + fmt(dev_random) + ", blow-up " + fmt(dev_blowup) + ", cgw " +
           fmt(dev_cgw);
}

}  // namespace

std::vector<std::pair<std::string, Graph>> small_construction_suite() {
    Seed s = kSuiteRoot.child(100, 0);
    std::vector<std::pair<std::string, Graph>> out;
    out.emplace_back("five_cycle", from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}));
    out.emplace_back("k4", complement(Graph(4)));
    out.emplace_back("path5", path_graph(5));
    out.emplace_back("empty6", Graph(6));
    out.emplace_back("complete7", complement(Graph(7)));
    out.emplace_back("blowup1", iterated_blowup(1));
    out.emplace_back("blowup2", iterated_blowup(2));
    out.emplace_back("circulant12_r4", circulant(12, 4.0));
    out.emplace_back("circulant60_opt", circulant(60, kCirculantOptR));
    out.emplace_back("circulant120_opt", circulant(120, kCirculantOptR));
    out.emplace_back("circulant5_r2.4", circulant(5, 2.4));
    out.emplace_back("doubled_circulant30", doubled(circulant(30, kCirculantOptR)));
    out.emplace_back("doubled_blowup2", doubled(iterated_blowup(2)));
    out.emplace_back("join_blowup2_circulant25",
                     random_join(iterated_blowup(2), circulant(25, 4.0), s.child(1, 0)));
    out.emplace_back("cgw25", cgw(25, s.child(2, 0)));
    out.emplace_back("cgw30", cgw(30, s.child(3, 0)));
    out.emplace_back("tower1_30", oplus_tower(1, 30, s.child(4, 0)));
    out.emplace_back("tower2_15", oplus_tower(2, 15, s.child(5, 0)));
    out.emplace_back("random64_seed5", random_graph(64, Seed{5}));
    return out;
}

std::vector<CheckResult> run_verification_suite(const std::vector<int>& only) {
    struct Check {
        int id;
        const char* name;
        std::string (*run)();
    };
    static const Check checks[] = {
        {1, "count-identities", check_identities},
        {2, "oracle-equivalence", check_oracles},
        {3, "circulant-densities", check_circulant_densities},
        {4, "doubled-circulant-densities", check_doubled_densities},
        {5, "clique-bounds", check_clique_bounds},
        {6, "doubling-transfer", check_doubling_transfer},
        {7, "blowup-family", check_blowup_family},
        {8, "tower-densities", check_tower_densities},
        {9, "obstruction-certificate", check_obstruction},
        {10, "four-universality", check_four_universality},
        {11, "quasirandom-separation", check_quasirandom_separation},
    };

    std::vector<CheckResult> results;
    for (const Check& c : checks) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
        CheckResult r;
        r.id = c.id;
        r.name = c.name;
        try {
            r.detail = c.run();
            r.pass = true;
        } catch (const Failure& f) {
            r.pass = false;
            r.detail = f.text;
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace gcensus
