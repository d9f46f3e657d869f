#include "gcensus/constructions.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gcensus/config.hpp"
#include "gcensus/errors.hpp"

namespace gcensus {

using nlohmann::ordered_json;

Graph random_graph(int n, Seed seed) {
    Graph::Builder b(n);
    BitStream coins(seed);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coins.next_bit()) b.add_edge(u, v);
    return std::move(b).build();
}

namespace {

std::int64_t pow5(int level) {
    std::int64_t p = 1;
    for (int i = 0; i < level; ++i) {
        p *= 5;
        if (p > max_order()) return p;  // caller only compares against the cap
    }
    return p;
}

// One blow-up step plus the fresh 5-cycles over clone classes.
Graph blowup_step(const Graph& g) {
    Graph::Builder b(g.order() * 5);
    g.for_each_edge([&](int u, int v) {
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) b.add_edge(u * 5 + i, v * 5 + j);
    });
    for (int v = 0; v < g.order(); ++v)
        for (int i = 0; i < 5; ++i) b.add_edge(v * 5 + i, v * 5 + (i + 1) % 5);
    return std::move(b).build();
}

Graph five_cycle() {
    return from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
}

Graph complete_bipartite(int n) {
    Graph::Builder b(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b.add_edge(i, n + j);
    return std::move(b).build();
}

}  // namespace

Graph iterated_blowup(int level) {
    if (level < 1) throw InvalidParameter("iterated_blowup level must be at least 1");
    if (pow5(level) > max_order())
        throw Overflow("iterated_blowup order 5^" + std::to_string(level) +
                       " exceeds max_order() = " + std::to_string(max_order()));
    Graph g = five_cycle();
    for (int l = 2; l <= level; ++l) g = blowup_step(g);
    return g;
}

Graph doubled(const Graph& g) {
    const int n = g.order();
    Graph::Builder b(2 * n);
    g.for_each_edge([&](int u, int v) {
        b.add_edge(u, v);
        b.add_edge(n + u, n + v);
    });
    for (int i = 0; i < n; ++i) {
        const std::uint64_t* ri = g.row(i);
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            if (!((ri[j >> 6] >> (j & 63)) & 1u)) b.add_edge(i, n + j);
        }
    }
    return std::move(b).build();
}

Graph random_join(const Graph& left, const Graph& right, Seed seed) {
    if (left.order() != right.order())
        throw SizeMismatch("random_join needs equal part orders, got " +
                           std::to_string(left.order()) + " and " +
                           std::to_string(right.order()));
    const int n = left.order();
    Graph::Builder b(2 * n);
    left.for_each_edge([&](int u, int v) { b.add_edge(u, v); });
    right.for_each_edge([&](int u, int v) { b.add_edge(n + u, n + v); });
    BitStream coins(seed);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (coins.next_bit()) b.add_edge(i, n + j);
    return std::move(b).build();
}

Graph cgw(int n, Seed seed) {
    if (n < 1) throw InvalidParameter("cgw part size must be at least 1");
    Graph left = complete_bipartite(n);
    return random_join(left, complement(left), seed);
}

Graph oplus_tower(int level, int n, Seed seed) {
    if (level < 1) throw InvalidParameter("oplus_tower level must be at least 1");
    if (n < 1) throw InvalidParameter("oplus_tower part size must be at least 1");
    if ((static_cast<std::int64_t>(2 * n) << level) > max_order())
        throw Overflow("oplus_tower order exceeds max_order() = " + std::to_string(max_order()));
    if (level == 1) return cgw(n, seed);
    Graph a = oplus_tower(level - 1, n, seed.child(level, 0));
    Graph b = oplus_tower(level - 1, n, seed.child(level, 1));
    return random_join(a, b, seed.child(level, 2));
}

SelfCompWitness selfcomp_witness_blowup(int level) {
    Graph g = iterated_blowup(level);
    const int n = g.order();
    std::vector<int> image(n);
    for (int x = 0; x < n; ++x) {
        int rest = x, mapped = 0, place = 1;
        for (int l = 0; l < level; ++l) {
            int digit = rest % 5;
            rest /= 5;
            mapped += (2 * digit % 5) * place;
            place *= 5;
        }
        image[x] = mapped;
    }
    Permutation p(std::move(image));
    bool ok = check_isomorphism_witness(g, p, /*to_complement=*/true);
    return SelfCompWitness{std::move(p), ok};
}

// --------------------------------------------------------- ConstructionSpec

namespace {

const std::set<std::string> kKinds = {"iterated_blowup", "circulant", "doubled", "random_join",
                                      "cgw", "oplus_tower", "random", "complete", "empty"};

void require_keys(const ordered_json& node, const std::set<std::string>& allowed) {
    for (auto it = node.begin(); it != node.end(); ++it)
        if (!allowed.count(it.key()))
            throw InvalidParameter("construction spec: unexpected key \"" + it.key() + "\"");
}

std::int64_t int_field(const ordered_json& node, const std::string& key) {
    if (!node.contains(key))
        throw InvalidParameter("construction spec: missing \"" + key + "\"");
    const auto& v = node.at(key);
    if (!v.is_number_integer() && !v.is_number_unsigned())
        throw InvalidParameter("construction spec: \"" + key + "\" must be an integer");
    return v.get<std::int64_t>();
}

std::uint64_t seed_field(const ordered_json& node) {
    const auto& v = node.at("seed");
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0)
        return static_cast<std::uint64_t>(v.get<std::int64_t>());
    throw InvalidParameter("construction spec: \"seed\" must be a nonnegative integer");
}

void validate_node(const ordered_json& node) {
    if (!node.is_object()) throw InvalidParameter("construction spec: node must be an object");
    if (!node.contains("kind") || !node.at("kind").is_string())
        throw InvalidParameter("construction spec: missing \"kind\"");
    std::string kind = node.at("kind").get<std::string>();
    if (!kKinds.count(kind))
        throw InvalidParameter("construction spec: unknown kind \"" + kind + "\"");
    if (node.contains("seed")) seed_field(node);

    if (kind == "iterated_blowup") {
        require_keys(node, {"kind", "level", "seed"});
        int_field(node, "level");
    } else if (kind == "circulant") {
        require_keys(node, {"kind", "k", "r", "seed"});
        int_field(node, "k");
        if (!node.contains("r") || !node.at("r").is_number())
            throw InvalidParameter("construction spec: circulant needs numeric \"r\"");
    } else if (kind == "doubled") {
        require_keys(node, {"kind", "inner", "seed"});
        if (!node.contains("inner"))
            throw InvalidParameter("construction spec: doubled needs \"inner\"");
        validate_node(node.at("inner"));
    } else if (kind == "random_join") {
        require_keys(node, {"kind", "left", "right", "seed"});
        if (!node.contains("left") || !node.contains("right"))
            throw InvalidParameter("construction spec: random_join needs \"left\" and \"right\"");
        validate_node(node.at("left"));
        validate_node(node.at("right"));
    } else if (kind == "cgw") {
        require_keys(node, {"kind", "n", "seed"});
        int_field(node, "n");
    } else if (kind == "oplus_tower") {
        require_keys(node, {"kind", "level", "n", "seed"});
        int_field(node, "level");
        int_field(node, "n");
    } else {  // random, complete, empty
        require_keys(node, {"kind", "n", "seed"});
        int_field(node, "n");
    }
}

int checked_int(std::int64_t v, const char* what) {
    if (v < 0 || v > max_order())
        throw InvalidParameter(std::string("construction spec: ") + what + " out of range");
    return static_cast<int>(v);
}

// Explicit node seeds win; otherwise the inherited stream, forked per slot so
// sibling subtrees and cross coins never share a generator state.
Graph build_node(const ordered_json& node, Seed inherited) {
    std::string kind = node.at("kind").get<std::string>();
    Seed eff = node.contains("seed") ? Seed{seed_field(node)} : inherited;
    if (kind == "iterated_blowup")
        return iterated_blowup(checked_int(int_field(node, "level"), "level"));
    if (kind == "circulant")
        return circulant(checked_int(int_field(node, "k"), "k"), node.at("r").get<double>());
    if (kind == "doubled") return doubled(build_node(node.at("inner"), eff.child(0xd, 0)));
    if (kind == "random_join") {
        Graph left = build_node(node.at("left"), eff.child(0xa, 0));
        Graph right = build_node(node.at("right"), eff.child(0xa, 1));
        return random_join(left, right, eff);
    }
    if (kind == "cgw") return cgw(checked_int(int_field(node, "n"), "n"), eff);
    if (kind == "oplus_tower")
        return oplus_tower(checked_int(int_field(node, "level"), "level"),
                           checked_int(int_field(node, "n"), "n"), eff);
    if (kind == "random") return random_graph(checked_int(int_field(node, "n"), "n"), eff);
    if (kind == "complete") return complement(Graph(checked_int(int_field(node, "n"), "n")));
    return Graph(checked_int(int_field(node, "n"), "n"));  // empty
}

}  // namespace

ConstructionSpec ConstructionSpec::parse(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidParameter(std::string("construction spec: ") + e.what());
    }
    validate_node(doc);
    return ConstructionSpec(std::move(doc));
}

std::string ConstructionSpec::to_json() const { return doc_.dump(); }

std::string ConstructionSpec::kind() const { return doc_.at("kind").get<std::string>(); }

Graph ConstructionSpec::build() const { return build_node(doc_, Seed{kDefaultSeed}); }

ConstructionSpec ConstructionSpec::iterated_blowup(int level) {
    return ConstructionSpec(ordered_json{{"kind", "iterated_blowup"}, {"level", level}});
}

ConstructionSpec ConstructionSpec::circulant(int k, double r) {
    return ConstructionSpec(ordered_json{{"kind", "circulant"}, {"k", k}, {"r", r}});
}

ConstructionSpec ConstructionSpec::doubled(ConstructionSpec inner) {
    ordered_json doc{{"kind", "doubled"}};
    doc["inner"] = std::move(inner.doc_);
    return ConstructionSpec(std::move(doc));
}

ConstructionSpec ConstructionSpec::random_join(ConstructionSpec left, ConstructionSpec right,
                                               std::uint64_t seed) {
    ordered_json doc{{"kind", "random_join"}};
    doc["left"] = std::move(left.doc_);
    doc["right"] = std::move(right.doc_);
    doc["seed"] = seed;
    return ConstructionSpec(std::move(doc));
}

ConstructionSpec ConstructionSpec::cgw(int n, std::uint64_t seed) {
    return ConstructionSpec(ordered_json{{"kind", "cgw"}, {"n", n}, {"seed", seed}});
}

ConstructionSpec ConstructionSpec::oplus_tower(int level, int n, std::uint64_t seed) {
    return ConstructionSpec(
        ordered_json{{"kind", "oplus_tower"}, {"level", level}, {"n", n}, {"seed", seed}});
}

ConstructionSpec ConstructionSpec::random(int n, std::uint64_t seed) {
    return ConstructionSpec(ordered_json{{"kind", "random"}, {"n", n}, {"seed", seed}});
}

ConstructionSpec ConstructionSpec::complete(int n) {
    return ConstructionSpec(ordered_json{{"kind", "complete"}, {"n", n}});
}

ConstructionSpec ConstructionSpec::empty(int n) {
    return ConstructionSpec(ordered_json{{"kind", "empty"}, {"n", n}});
}

}  // namespace gcensus
