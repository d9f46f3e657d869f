#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gcensus/analyzers.hpp"
#include "gcensus/census.hpp"
#include "gcensus/config.hpp"
#include "gcensus/constructions.hpp"
#include "gcensus/errors.hpp"
#include "gcensus/graph.hpp"
#include "gcensus/graph6.hpp"
#include "gcensus/rng.hpp"
#include "gcensus/verification.hpp"

namespace {

using gcensus::Graph;
using gcensus::Seed;
using nlohmann::ordered_json;

constexpr const char* kProfile3Names[4] = {"E3", "K2+I", "P3", "K3"};

std::string fmt_double(double x) {
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return os.str();
}

// Shared head of every output document. Outputs carry their full run
// configuration so a file can be regenerated without the shell history.
ordered_json output_header(const std::string& command) {
    ordered_json j;
    j["schema_version"] = 1;
    j["tool"] = gcensus::kToolName;
    j["version"] = gcensus::kToolVersion;
    j["command"] = command;
    return j;
}

std::string read_stream_text(std::istream& in) {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string read_file_text(const std::string& path) {
    if (path == "-") return read_stream_text(std::cin);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw gcensus::InvalidParameter("cannot open file: " + path);
    return read_stream_text(in);
}

struct NamedGraph {
    std::string name;
    Graph g;
};

std::vector<NamedGraph> read_graphs(const std::string& path, const std::string& label) {
    std::vector<Graph> gs;
    std::string base = label;
    if (path.empty() || path == "-") {
        gs = gcensus::graph6_read_lines(std::cin);
        if (base.empty()) base = "stdin";
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw gcensus::InvalidParameter("cannot open input file: " + path);
        gs = gcensus::graph6_read_lines(in);
        if (base.empty()) base = path;
    }
    std::vector<NamedGraph> out;
    out.reserve(gs.size());
    for (std::size_t i = 0; i < gs.size(); ++i) {
        std::string name = gs.size() == 1 ? base : base + ":" + std::to_string(i + 1);
        out.push_back({std::move(name), std::move(gs[i])});
    }
    return out;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw gcensus::InvalidParameter("cannot open output file: " + path);
    out << text;
    if (!out) throw gcensus::InvalidParameter("write failed: " + path);
}

std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

// ----------------------------------------------------------------- gen

struct GenArgs {
    int blowup = 0;
    int circulant_k = 0;
    double r = gcensus::kCirculantOptR;
    int tower_level = 0;
    int n = 0;
    int cgw_n = 0;
    int random_n = 0;
    int complete_n = 0;
    int empty_n = 0;
    std::string spec_path;
    bool doubled = false;
    std::uint64_t seed = gcensus::kDefaultSeed;
    std::string out;

    CLI::Option* o_blowup = nullptr;
    CLI::Option* o_circulant = nullptr;
    CLI::Option* o_tower = nullptr;
    CLI::Option* o_cgw = nullptr;
    CLI::Option* o_random = nullptr;
    CLI::Option* o_complete = nullptr;
    CLI::Option* o_empty = nullptr;
    CLI::Option* o_spec = nullptr;
};

int run_gen(const GenArgs& a) {
    using gcensus::ConstructionSpec;
    std::optional<ConstructionSpec> spec;
    if (a.o_blowup->count()) {
        spec = ConstructionSpec::iterated_blowup(a.blowup);
    } else if (a.o_circulant->count()) {
        spec = ConstructionSpec::circulant(a.circulant_k, a.r);
    } else if (a.o_tower->count()) {
        spec = ConstructionSpec::oplus_tower(a.tower_level, a.n, a.seed);
    } else if (a.o_cgw->count()) {
        spec = ConstructionSpec::cgw(a.cgw_n, a.seed);
    } else if (a.o_random->count()) {
        spec = ConstructionSpec::random(a.random_n, a.seed);
    } else if (a.o_complete->count()) {
        spec = ConstructionSpec::complete(a.complete_n);
    } else if (a.o_empty->count()) {
        spec = ConstructionSpec::empty(a.empty_n);
    } else {
        spec = ConstructionSpec::parse(read_file_text(a.spec_path));
    }
    if (a.doubled) spec = ConstructionSpec::doubled(std::move(*spec));

    Graph g = spec->build();
    std::ostringstream os;
    gcensus::graph6_write_line(os, g);
    write_text(a.out, os.str());

    // graph6 has no comment syntax, so the run configuration rides in a
    // sidecar next to the output file. Stdout output gets no sidecar.
    if (!a.out.empty() && a.out != "-") {
        ordered_json j = output_header("gen");
        j["spec"] = spec->doc();
        j["order"] = g.order();
        j["edges"] = g.edge_count();
        write_text(a.out + ".provenance.json", dump_json(j));
    }
    return 0;
}

// --------------------------------------------------------------- census

struct CensusArgs {
    int order = 3;
    std::string in;
    std::string name;
    std::string format = "csv";
    std::string out;
};

int run_census(const CensusArgs& a) {
    auto graphs = read_graphs(a.in, a.name);
    ordered_json header = output_header("census");
    header["subset_size"] = a.order;
    header["input"] = a.in.empty() ? "stdin" : a.in;

    struct Row {
        std::vector<std::string> names;
        std::vector<std::int64_t> counts;
        std::vector<double> dens;
    };

    std::ostringstream csv;
    ordered_json results = ordered_json::array();
    if (a.format == "csv") {
        csv << "# " << header.dump() << "\n";
        csv << "construction,order,subset_size,class,count,density,"
               "goodman_ok,vertex_edge_ok,edge_pair_ok\n";
    }

    for (const NamedGraph& ng : graphs) {
        Row row;
        gcensus::DensityVector d;
        if (a.order == 3) {
            gcensus::Profile3 p = gcensus::profile3(ng.g);
            d = gcensus::densities(p, ng.g.order());
            for (int i = 0; i < 4; ++i) {
                row.names.emplace_back(kProfile3Names[i]);
                row.counts.push_back(p[i]);
            }
        } else {
            gcensus::Census4 c = gcensus::census4(ng.g);
            d = gcensus::densities(c, ng.g.order());
            for (int i = 0; i < gcensus::kClass4Count; ++i) {
                row.names.emplace_back(gcensus::class4_name(static_cast<gcensus::Class4>(i)));
                row.counts.push_back(c.counts[static_cast<std::size_t>(i)]);
            }
        }
        for (const gcensus::Rational& v : d.values) row.dens.push_back(v.value());

        bool ok_goodman = gcensus::verify_goodman(ng.g);
        bool ok_ve = gcensus::verify_vertex_edge_identities(ng.g);
        bool ok_ep = gcensus::verify_edge_pair_identity(ng.g);

        if (a.format == "csv") {
            for (std::size_t i = 0; i < row.names.size(); ++i) {
                csv << ng.name << ',' << ng.g.order() << ',' << a.order << ',' << row.names[i]
                    << ',' << row.counts[i] << ',' << fmt_double(row.dens[i]) << ','
                    << int(ok_goodman) << ',' << int(ok_ve) << ',' << int(ok_ep) << "\n";
            }
        } else {
            ordered_json r;
            r["construction"] = ng.name;
            r["order"] = ng.g.order();
            r["subset_size"] = a.order;
            ordered_json counts, dens;
            for (std::size_t i = 0; i < row.names.size(); ++i) {
                counts[row.names[i]] = row.counts[i];
                dens[row.names[i]] = row.dens[i];
            }
            r["counts"] = std::move(counts);
            r["densities"] = std::move(dens);
            r["identities"] = {
                {"goodman", ok_goodman}, {"vertex_edge", ok_ve}, {"edge_pair", ok_ep}};
            results.push_back(std::move(r));
        }
    }

    if (a.format == "csv") {
        write_text(a.out, csv.str());
    } else {
        header["results"] = std::move(results);
        write_text(a.out, dump_json(header));
    }
    return 0;
}

// ------------------------------------------------------------ universal

struct UniversalArgs {
    int l = 4;
    std::string in;
    std::string name;
    std::string out;
    std::string expect;  // "", "true", or "false"
};

int run_universal(const UniversalArgs& a) {
    auto graphs = read_graphs(a.in, a.name);
    ordered_json header = output_header("universal");
    header["l"] = a.l;
    header["input"] = a.in.empty() ? "stdin" : a.in;
    ordered_json results = ordered_json::array();

    bool expectation_met = true;
    for (const NamedGraph& ng : graphs) {
        gcensus::UniversalityReport u = gcensus::is_l_universal(ng.g, a.l);
        ordered_json r;
        r["construction"] = ng.name;
        r["order"] = ng.g.order();
        r["l"] = u.ell;
        r["verdict"] = u.verdict;
        r["method"] = u.method;
        r["present_count"] = static_cast<std::int64_t>(u.present.size());
        ordered_json miss = ordered_json::array();
        for (std::size_t i = 0; i < u.missing.size(); ++i) {
            ordered_json m;
            m["code"] = u.missing[i];
            m["name"] = u.missing_names[i];
            m["graph6"] = gcensus::graph6_encode(gcensus::graph_from_code(a.l, u.missing[i]));
            miss.push_back(std::move(m));
        }
        r["missing"] = std::move(miss);
        results.push_back(std::move(r));
        if (!a.expect.empty() && u.verdict != (a.expect == "true")) expectation_met = false;
    }

    header["results"] = std::move(results);
    write_text(a.out, dump_json(header));
    return (!a.expect.empty() && !expectation_met) ? 2 : 0;
}

// --------------------------------------------------------------- clique

struct CliqueArgs {
    std::string in;
    std::string name;
    std::string out;
    double budget = 60.0;
    int expect_max = -1;
};

int run_clique(const CliqueArgs& a) {
    auto graphs = read_graphs(a.in, a.name);
    ordered_json header = output_header("clique");
    header["budget_seconds"] = a.budget;
    header["input"] = a.in.empty() ? "stdin" : a.in;
    ordered_json results = ordered_json::array();

    bool expectation_met = true;
    for (const NamedGraph& ng : graphs) {
        gcensus::CliqueResult c = gcensus::clique_number(ng.g, a.budget);
        ordered_json r;
        r["construction"] = ng.name;
        r["order"] = ng.g.order();
        r["omega"] = c.size;
        r["exact"] = c.exact;
        r["witness"] = c.witness.members();
        r["witness_graph6"] = gcensus::graph6_encode(gcensus::induced(ng.g, c.witness));
        results.push_back(std::move(r));
        if (a.expect_max >= 0 && (!c.exact || c.size > a.expect_max)) expectation_met = false;
    }

    header["results"] = std::move(results);
    write_text(a.out, dump_json(header));
    return (a.expect_max >= 0 && !expectation_met) ? 2 : 0;
}

// ------------------------------------------------------------- obstruct

struct ObstructArgs {
    int l = 1;
    int n = 12;
    std::uint64_t seed = gcensus::kDefaultSeed;
    double budget = 60.0;
    std::string out;
    bool expect = false;
};

int run_obstruct(const ObstructArgs& a) {
    gcensus::ObstructionCertificate c =
        gcensus::obstruction_certificate(a.l, a.n, Seed{a.seed}, a.budget);
    ordered_json j = output_header("obstruct");
    j["l"] = c.ell;
    j["n"] = c.n;
    j["seed"] = a.seed;
    j["budget_seconds"] = a.budget;
    j["witness_order"] = c.witness_order;
    j["witness_graph6"] = c.witness_graph6;
    j["omega"] = c.omega;
    j["alpha"] = c.alpha;
    j["threshold"] = c.threshold;
    j["block_count"] = c.block_count;
    j["block_order"] = c.block_order;
    j["blocks_ok"] = c.blocks_ok;
    j["retries"] = c.retries;
    j["seed_used"] = c.seed_used.value;
    j["verdict"] = c.verdict;
    write_text(a.out, dump_json(j));
    return (a.expect && !c.verdict) ? 2 : 0;
}

// --------------------------------------------------------------- limits

struct LimitsArgs {
    std::string family;
    std::vector<std::int64_t> ks;
    int level = 1;
    double r = gcensus::kCirculantOptR;
    std::uint64_t seed = gcensus::kDefaultSeed;
    double eps = -1.0;  // negative means pick the per-family default
    std::string format = "csv";
    std::string out;
};

int run_limits(const LimitsArgs& a) {
    bool deterministic =
        a.family == "blowup" || a.family == "circulant" || a.family == "doubled-circulant";
    double eps = a.eps >= 0 ? a.eps : (deterministic ? 0.01 : 0.02);

    Seed root{a.seed};
    std::function<Graph(std::int64_t)> builder;
    if (a.family == "blowup") {
        builder = [](std::int64_t k) { return gcensus::iterated_blowup(static_cast<int>(k)); };
    } else if (a.family == "circulant") {
        builder = [r = a.r](std::int64_t k) {
            return gcensus::circulant(static_cast<int>(k), r);
        };
    } else if (a.family == "doubled-circulant") {
        builder = [r = a.r](std::int64_t k) {
            return gcensus::doubled(gcensus::circulant(static_cast<int>(k), r));
        };
    } else if (a.family == "cgw") {
        builder = [root](std::int64_t k) {
            return gcensus::cgw(static_cast<int>(k), root.child(static_cast<std::uint64_t>(k)));
        };
    } else {  // tower
        builder = [root, lvl = a.level](std::int64_t k) {
            return gcensus::oplus_tower(lvl, static_cast<int>(k),
                                        root.child(static_cast<std::uint64_t>(k)));
        };
    }
    for (std::int64_t k : a.ks)
        if (k < 0 || k > gcensus::max_order())
            throw gcensus::InvalidParameter("k out of range: " + std::to_string(k));

    std::vector<gcensus::LimitRow> rows = gcensus::limit_table(a.family, builder, a.ks, eps);

    ordered_json header = output_header("limits");
    header["family"] = a.family;
    header["k"] = a.ks;
    header["eps"] = eps;
    header["seed"] = a.seed;
    if (a.family == "tower") header["level"] = a.level;
    if (a.family == "circulant" || a.family == "doubled-circulant") header["r"] = a.r;

    if (a.format == "csv") {
        std::ostringstream csv;
        csv << "# " << header.dump() << "\n";
        csv << "family,k,order,p0,p1,p2,p3,dev_pair_sum,dev_p0,dev_p3,dev_p1,dev_p2,"
               "goodman_consistent,random_like_consistent,ratio_consistent,c5_presence\n";
        for (const gcensus::LimitRow& row : rows) {
            csv << row.family << ',' << row.k << ',' << row.order;
            for (const gcensus::Rational& v : row.p3.values) csv << ',' << fmt_double(v.value());
            csv << ',' << fmt_double(row.dev_pair_sum) << ',' << fmt_double(row.dev_p0) << ','
                << fmt_double(row.dev_p3) << ',' << fmt_double(row.dev_p1) << ','
                << fmt_double(row.dev_p2) << ',' << int(row.goodman_consistent) << ','
                << int(row.random_like_consistent) << ',' << int(row.ratio_consistent) << ','
                << row.c5_presence << "\n";
        }
        write_text(a.out, csv.str());
    } else {
        ordered_json results = ordered_json::array();
        for (const gcensus::LimitRow& row : rows) {
            ordered_json r;
            r["family"] = row.family;
            r["k"] = row.k;
            r["order"] = row.order;
            ordered_json dens = ordered_json::array();
            for (const gcensus::Rational& v : row.p3.values) dens.push_back(v.value());
            r["densities"] = std::move(dens);
            r["dev_pair_sum"] = row.dev_pair_sum;
            r["dev_p0"] = row.dev_p0;
            r["dev_p3"] = row.dev_p3;
            r["dev_p1"] = row.dev_p1;
            r["dev_p2"] = row.dev_p2;
            r["goodman_consistent"] = row.goodman_consistent;
            r["random_like_consistent"] = row.random_like_consistent;
            r["ratio_consistent"] = row.ratio_consistent;
            r["c5_presence"] = row.c5_presence;
            results.push_back(std::move(r));
        }
        header["results"] = std::move(results);
        write_text(a.out, dump_json(header));
    }
    return 0;
}

// --------------------------------------------------------- verify-paper

int run_verify(const std::vector<int>& only) {
    std::vector<int> ids = only;
    if (ids.empty())
        for (int i = 1; i <= 11; ++i) ids.push_back(i);

    int passed = 0, total = 0;
    for (int id : ids) {
        // One check per call so each line lands as soon as it is known.
        for (const gcensus::CheckResult& r : gcensus::run_verification_suite({id})) {
            ++total;
            if (r.pass) ++passed;
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << std::setw(2) << r.id << "  "
                      << r.name << ": " << r.detail << std::endl;
        }
    }
    std::cout << passed << "/" << total << " checks passed" << std::endl;
    return passed == total ? 0 : 2;
}

// -------------------------------------------------------------- plumbing

int classify_exit(const std::exception& e) {
    if (dynamic_cast<const gcensus::TooLarge*>(&e) || dynamic_cast<const gcensus::Timeout*>(&e) ||
        dynamic_cast<const gcensus::Overflow*>(&e) ||
        dynamic_cast<const gcensus::CertificateFailed*>(&e))
        return 4;
    if (dynamic_cast<const gcensus::Error*>(&e) || dynamic_cast<const nlohmann::json::exception*>(&e))
        return 3;
    return 1;
}

bool apply_max_order_env() {
    const char* env = std::getenv("GCENSUS_MAX_ORDER");
    if (!env) return true;
    std::istringstream is{std::string(env)};
    long long v = 0;
    char trailing = 0;
    if (!(is >> v) || (is >> trailing) || v < 1 || v > 1000000000LL) {
        std::cerr << "gcensus: GCENSUS_MAX_ORDER must be a positive integer, got \"" << env
                  << "\"\n";
        return false;
    }
    gcensus::set_max_order(static_cast<int>(std::min(v, 2147483647LL)));
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (!apply_max_order_env()) return 3;

    CLI::App app{"graph family construction and induced-subgraph census tool"};
    app.set_version_flag("--version", std::string(gcensus::kToolName) + " " +
                                          gcensus::kToolVersion);
    app.require_subcommand(1);

    int max_order_flag = 0;
    app.add_option("--max-order", max_order_flag, "override the graph order cap")
        ->check(CLI::PositiveNumber);
    int threads = -1;
    app.add_option("--threads", threads, "worker thread count, 0 for auto")
        ->check(CLI::NonNegativeNumber);

    GenArgs gen;
    CLI::App* cmd_gen = app.add_subcommand("gen", "build a graph, write graph6");
    {
        CLI::Option_group* src = cmd_gen->add_option_group("source", "what to build");
        gen.o_blowup = src->add_option("--blowup", gen.blowup, "iterated blow-up of this level");
        gen.o_circulant =
            src->add_option("--circulant", gen.circulant_k, "circulant on this many vertices");
        gen.o_tower = src->add_option("--tower", gen.tower_level, "randomized join tower level");
        gen.o_cgw = src->add_option("--cgw", gen.cgw_n, "base tower block with this part size");
        gen.o_random = src->add_option("--random", gen.random_n, "uniform random graph order");
        gen.o_complete = src->add_option("--complete", gen.complete_n, "complete graph order");
        gen.o_empty = src->add_option("--empty", gen.empty_n, "edgeless graph order");
        gen.o_spec = src->add_option("--spec", gen.spec_path,
                                     "JSON construction description, - for stdin");
        src->require_option(1);
        CLI::Option* o_r =
            cmd_gen->add_option("--r", gen.r, "circulant threshold ratio (default optimal)");
        o_r->needs(gen.o_circulant);
        CLI::Option* o_n = cmd_gen->add_option("--n", gen.n, "tower part size");
        gen.o_tower->needs(o_n);
        o_n->needs(gen.o_tower);
        cmd_gen->add_flag("--doubled", gen.doubled, "apply the doubling construction on top");
        cmd_gen->add_option("--seed", gen.seed, "seed for randomized constructions");
        cmd_gen->add_option("--out", gen.out, "output file (default stdout)");
    }

    CensusArgs census;
    CLI::App* cmd_census = app.add_subcommand("census", "induced subgraph counts and densities");
    cmd_census->add_option("order", census.order, "subset size, 3 or 4")
        ->required()
        ->check(CLI::IsMember({3, 4}));
    cmd_census->add_option("--in", census.in, "graph6 input file (default stdin)");
    cmd_census->add_option("--name", census.name, "label for the construction column");
    cmd_census->add_option("--format", census.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd_census->add_option("--out", census.out, "output file (default stdout)");

    UniversalArgs universal;
    CLI::App* cmd_universal =
        app.add_subcommand("universal", "does the graph contain every graph on l vertices");
    cmd_universal->add_option("--l", universal.l, "subgraph order to cover")
        ->required()
        ->check(CLI::Range(1, 6));
    cmd_universal->add_option("--in", universal.in, "graph6 input file (default stdin)");
    cmd_universal->add_option("--name", universal.name, "label for the report");
    cmd_universal->add_option("--out", universal.out, "output file (default stdout)");
    cmd_universal->add_option("--expect", universal.expect, "exit 2 unless the verdict matches")
        ->check(CLI::IsMember({"true", "false"}));

    CliqueArgs clique;
    CLI::App* cmd_clique = app.add_subcommand("clique", "exact maximum clique");
    cmd_clique->add_option("--in", clique.in, "graph6 input file (default stdin)");
    cmd_clique->add_option("--name", clique.name, "label for the report");
    cmd_clique->add_option("--budget", clique.budget, "search budget in seconds")
        ->check(CLI::PositiveNumber);
    cmd_clique->add_option("--expect-max", clique.expect_max,
                           "exit 2 unless omega is exact and at most this")
        ->check(CLI::NonNegativeNumber);
    cmd_clique->add_option("--out", clique.out, "output file (default stdout)");

    ObstructArgs obstruct;
    CLI::App* cmd_obstruct =
        app.add_subcommand("obstruct", "non-universality certificate for the tower family");
    cmd_obstruct->add_option("--l", obstruct.l, "tower level")->required();
    cmd_obstruct->add_option("--n", obstruct.n, "tower part size")->required();
    cmd_obstruct->add_option("--seed", obstruct.seed, "witness sampling seed");
    cmd_obstruct->add_option("--budget", obstruct.budget, "clique search budget in seconds")
        ->check(CLI::PositiveNumber);
    cmd_obstruct->add_flag("--expect", obstruct.expect, "exit 2 unless the verdict is true");
    cmd_obstruct->add_option("--out", obstruct.out, "output file (default stdout)");

    LimitsArgs limits;
    CLI::App* cmd_limits = app.add_subcommand("limits", "density table along a family sweep");
    cmd_limits->add_option("--family", limits.family, "family to sweep")
        ->required()
        ->check(CLI::IsMember({"blowup", "circulant", "doubled-circulant", "cgw", "tower"}));
    cmd_limits->add_option("--k", limits.ks, "parameter values, one instance each")
        ->required()
        ->expected(1, -1);
    cmd_limits->add_option("--level", limits.level, "tower level (tower family only)");
    cmd_limits->add_option("--r", limits.r, "circulant threshold ratio (default optimal)");
    cmd_limits->add_option("--seed", limits.seed, "root seed for randomized families");
    cmd_limits->add_option("--eps", limits.eps, "consistency threshold (default per family)");
    cmd_limits->add_option("--format", limits.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd_limits->add_option("--out", limits.out, "output file (default stdout)");

    std::vector<int> verify_only;
    CLI::App* cmd_verify =
        app.add_subcommand("verify-paper", "run the built-in verification suite");
    cmd_verify->add_option("--only", verify_only, "check ids to run (default all)")
        ->check(CLI::Range(1, 11));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }

    try {
        if (max_order_flag > 0) gcensus::set_max_order(max_order_flag);
        if (threads >= 0) gcensus::set_thread_count(threads);

        if (*cmd_gen) return run_gen(gen);
        if (*cmd_census) return run_census(census);
        if (*cmd_universal) return run_universal(universal);
        if (*cmd_clique) return run_clique(clique);
        if (*cmd_obstruct) return run_obstruct(obstruct);
        if (*cmd_limits) return run_limits(limits);
        if (*cmd_verify) return run_verify(verify_only);
    } catch (const std::exception& e) {
        std::cerr << "gcensus: " << e.what() << "\n";
        return classify_exit(e);
    }
    return 0;
}
