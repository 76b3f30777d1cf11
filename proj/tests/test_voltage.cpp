#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "dcdkit/dcd.hpp"
#include "dcdkit/error.hpp"
#include "dcdkit/voltage.hpp"

using namespace dcdkit;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::InvalidArgument;
}

Graph danzer() { return kronecker_cover(odd_graph(4)).graph.without_colors(); }

const PermGroupWitness& danzer_group() {
    static const PermGroupWitness g = automorphism_group(danzer());
    return g;
}

// Neighbor projections of every cover vertex match the base star, loops
// counted from both ends and semi-edges once.
void check_local_bijection(const VoltageGraph& vg, const CoverResult& c) {
    std::vector<std::multiset<int>> star(vg.vertex_count);
    for (const auto& a : vg.arcs) {
        if (a.u == a.v && (2 * a.s) % vg.k == 0) {
            star[a.u].insert(a.u);
            continue;
        }
        star[a.u].insert(a.v);
        star[a.v].insert(a.u);
    }
    for (int v = 0; v < c.graph.vertex_count(); ++v) {
        std::multiset<int> images;
        for (int w : c.graph.neighbors(v)) images.insert(c.projection[w]);
        CHECK(images == star[c.projection[v]]);
    }
}

}  // namespace

TEST_CASE("small covers") {
    const VoltageGraph loop{1, 6, {{0, 0, 1}}, {}};
    const auto c6 = cover(loop);
    CHECK(isomorphic(c6.graph, cycle_graph(6)).has_value());
    check_local_bijection(loop, c6);

    const VoltageGraph theta{2, 3, {{0, 1, 0}, {0, 1, 1}, {0, 1, 2}}, {}};
    const auto k33 = cover(theta);
    std::set<Edge> expected;
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) expected.insert({i, j});
    CHECK(std::set<Edge>(k33.graph.edges().begin(), k33.graph.edges().end()) == expected);
    CHECK(k33.projection == std::vector<int>{0, 0, 0, 1, 1, 1});

    // A 6-cycle plus its three long diagonals is K3,3 again.
    const VoltageGraph mobius{1, 6, {{0, 0, 1}, {0, 0, 3}}, {}};
    const auto m = cover(mobius);
    CHECK(m.graph.edge_count() == 9);
    CHECK(isomorphic(m.graph, complete_bipartite_graph(3, 3).without_colors()).has_value());
    check_local_bijection(mobius, m);
}

TEST_CASE("covers must stay simple") {
    CHECK(kind_of([] { cover({1, 5, {{0, 0, 0}}, {}}); }) == ErrorKind::MultiEdgeInCover);
    CHECK(kind_of([] { cover({2, 5, {{0, 1, 1}, {0, 1, 1}}, {}}); }) == ErrorKind::MultiEdgeInCover);
    CHECK(kind_of([] { cover({2, 5, {{0, 1, 1}, {1, 0, 4}}, {}}); }) == ErrorKind::MultiEdgeInCover);
    CHECK(kind_of([] { cover({2, 5, {{0, 2, 1}}, {}}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("semiregular automorphisms of the Danzer graph") {
    for (int k : {5, 7}) {
        const auto found = semiregular_cyclic(danzer(), danzer_group(), k);
        REQUIRE_FALSE(found.empty());
        for (const auto& a : found) CHECK(is_semiregular(danzer(), a));
        const auto vg = quotient(danzer(), found.front());
        CHECK(vg.vertex_count == 70 / k);
        CHECK(vg.arcs.size() == 140 / static_cast<std::size_t>(k));
        CHECK(quotient_round_trip(danzer(), found.front()));
        check_local_bijection(vg, cover(vg));
    }
    CHECK_FALSE(semiregular_cyclic(danzer(), danzer_group(), 10).empty());
    CHECK_FALSE(semiregular_cyclic(danzer(), danzer_group(), 14).empty());
    CHECK(semiregular_cyclic(danzer(), danzer_group(), 3).empty());
}

TEST_CASE("quotients of the 6-cycle") {
    CHECK(semiregular_cyclic(cycle_graph(6), 4).empty());
    const Permutation rot2 = {2, 3, 4, 5, 0, 1};
    const auto vg = quotient(cycle_graph(6), rot2);
    CHECK(vg.vertex_count == 2);
    CHECK(vg.k == 3);
    CHECK(vg.arcs.size() == 2);
    CHECK(isomorphic(cover(vg).graph, cycle_graph(6)).has_value());
    const Permutation reflection = {0, 5, 4, 3, 2, 1};
    CHECK(kind_of([&] { quotient(cycle_graph(6), reflection); }) == ErrorKind::NotSemiregular);
    const Permutation not_auto = {1, 0, 2, 3, 4, 5};
    CHECK(kind_of([&] { quotient(cycle_graph(6), not_auto); }) == ErrorKind::NotSemiregular);
}

TEST_CASE("tree arcs carry voltage zero") {
    const auto found = semiregular_cyclic(danzer(), danzer_group(), 7, {1000000, 1});
    const auto vg = quotient(danzer(), found.front());
    // Union-find over zero-voltage arcs must span the base.
    std::vector<int> parent(vg.vertex_count);
    for (int i = 0; i < vg.vertex_count; ++i) parent[i] = i;
    std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
    for (const auto& a : vg.arcs)
        if (a.s == 0) parent[root(a.u)] = root(a.v);
    std::set<int> roots;
    for (int i = 0; i < vg.vertex_count; ++i) roots.insert(root(i));
    CHECK(roots.size() == 1);
}

TEST_CASE("colored quotients keep the point and line classes") {
    const Graph levi = levi_graph(dcd_build(4).structure).graph;
    const auto found = semiregular_cyclic(levi, 7, {1000000, 1});
    REQUIRE(found.size() == 1);
    const auto vg = quotient(levi, found.front());
    CHECK(vg.colors == std::vector<int>{0, 0, 0, 0, 0, 1, 1, 1, 1, 1});
    CHECK(quotient_round_trip(levi, found.front()));
    CHECK(cover_is_bipartite_by_voltages(vg));
}

TEST_CASE("voltage text and JSON") {
    const VoltageGraph vg{3, 5, {{0, 1, 2}, {1, 2, 4}, {2, 0, 0}, {0, 0, 1}}, {0, 1, 0}};
    CHECK(voltage_from_text(to_text(vg)) == vg);
    CHECK(voltage_from_json(to_json(vg)) == vg);
    CHECK(voltage_from_text("# comment\nv 1 k 6\n0 0 7  # reduced\n").arcs.front().s == 1);
    CHECK(kind_of([] { voltage_from_text("0 1 2\n"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { voltage_from_text("v 2 k 3\n0 1\n"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { voltage_from_text("v 2 k 3\n0 5 1\n"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { voltage_from_json(nlohmann::json::parse(R"({"vertices":2})")); }) == ErrorKind::ParseError);
}

TEST_CASE("bipartiteness is readable from the voltages") {
    std::mt19937_64 rng(11);
    int compared = 0;
    for (int trial = 0; trial < 400; ++trial) {
        std::uniform_int_distribution<int> nv(1, 4), kd(2, 6), na(1, 6);
        VoltageGraph vg;
        vg.vertex_count = nv(rng);
        vg.k = kd(rng);
        std::uniform_int_distribution<int> vert(0, vg.vertex_count - 1), volt(0, vg.k - 1);
        const int arcs = na(rng);
        for (int i = 0; i < arcs; ++i) vg.arcs.push_back({vert(rng), vert(rng), volt(rng)});
        CoverResult c;
        try {
            c = cover(vg);
        } catch (const Error&) {
            continue;
        }
        ++compared;
        CHECK(c.graph.is_bipartite() == cover_is_bipartite_by_voltages(vg));
    }
    CHECK(compared > 100);
}
