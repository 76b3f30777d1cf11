#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "dcdkit/dcd.hpp"
#include "dcdkit/error.hpp"
#include "dcdkit/io.hpp"
#include "dcdkit/voltage.hpp"
#include "oracles.hpp"

using namespace dcdkit;

namespace {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution edge(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// Same structure with points and blocks listed in a random order.
IncidenceStructure shuffle_structure(const IncidenceStructure& s, std::mt19937_64& rng) {
    const auto pp = random_permutation(s.point_count(), rng), bp = random_permutation(s.block_count(), rng);
    std::vector<std::string> pl(s.point_count()), bl(s.block_count());
    for (int i = 0; i < s.point_count(); ++i) pl[pp[i]] = s.point_labels()[i];
    for (int i = 0; i < s.block_count(); ++i) bl[bp[i]] = s.block_labels()[i];
    std::vector<Flag> flags;
    for (const auto& [p, b] : s.incidences()) flags.emplace_back(pp[p], bp[b]);
    return {pl, bl, flags};
}

bool brute_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> p(a.vertex_count());
    std::iota(p.begin(), p.end(), 0);
    do {
        if (a.relabeled(p) == b) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

}  // namespace

TEST_CASE("relabeling a structure changes nothing invariant") {
    std::mt19937_64 rng(1);
    for (const auto& s : {dcd_build(3).structure, dcd_build(4).structure, steiner_plucker(), cyclic_configuration({0, 1, 3}, 7)}) {
        const auto sig = validate_configuration(s);
        for (int t = 0; t < 10; ++t) {
            const auto r = shuffle_structure(s, rng);
            CHECK(validate_configuration(r) == sig);
            CHECK(isomorphic_structures(r, s));
            CHECK(same_labelled_structure(r, s));
            CHECK(to_json(r) == to_json(s));
            CHECK(canonical_form(levi_graph(r).graph) == canonical_form(levi_graph(s).graph));
        }
    }
}

TEST_CASE("dual is an involution with transposed signature") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 30; ++t) {
        const auto s = shuffle_structure(t % 2 ? steiner_plucker() : dcd_build(3).structure, rng);
        CHECK(same_labelled_structure(dual(dual(s)), s));
        const auto a = validate_configuration(s), b = validate_configuration(dual(s));
        CHECK(a.p == b.n);
        CHECK(a.q == b.k);
    }
}

TEST_CASE("incidence sums add counts") {
    std::mt19937_64 rng(3);
    const auto a = steiner_plucker(), b = cayley_salmon();
    for (int t = 0; t < 20; ++t) {
        std::vector<CrossIncidence> cross;
        std::set<std::tuple<int, int, int>> used;
        std::uniform_int_distribution<int> side(0, 1), pick(0, 14);
        const int count = t;
        while (static_cast<int>(cross.size()) < count) {
            const int sd = side(rng), p = pick(rng), bl = pick(rng);
            if (!used.insert({sd, p, bl}).second) continue;
            cross.push_back({sd ? Summand::Second : Summand::First, p, bl});
        }
        const auto sum = incidence_sum({a, b, cross});
        CHECK(sum.point_count() == a.point_count() + b.point_count());
        CHECK(sum.block_count() == a.block_count() + b.block_count());
        CHECK(sum.incidences().size() == a.incidences().size() + b.incidences().size() + cross.size());
    }
}

TEST_CASE("canonical forms decide isomorphism on small random graphs") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 60; ++t) {
        const Graph g = random_graph(7, 0.45, rng);
        const Graph h = t % 3 == 0 ? g.relabeled(random_permutation(7, rng)) : random_graph(7, 0.45, rng);
        const bool truth = brute_isomorphic(g, h);
        CHECK((canonical_form(g) == canonical_form(h)) == truth);
        const auto iso = isomorphic(g, h);
        CHECK(iso.has_value() == truth);
        if (iso) CHECK(is_isomorphism(g, h, *iso));
    }
}

TEST_CASE("automorphism counts and girth agree with brute force") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
        const Graph g = random_graph(8, 0.4, rng);
        CHECK(automorphism_group(g).order() == oracle::count_automorphisms(g));
        CHECK(girth(g).value_or(0) == oracle::girth(g));
        const auto group = automorphism_group(g);
        for (const auto& gen : group.generators()) CHECK(is_automorphism(g, gen));
    }
}

TEST_CASE("Kronecker covers of random graphs") {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 40; ++t) {
        const Graph g = random_graph(9, 0.3, rng);
        const auto kc = kronecker_cover(g);
        CHECK(kc.graph.is_bipartite());
        CHECK(kc.graph.edge_count() == 2 * g.edge_count());
        CHECK(kc.graph.is_connected() == (g.is_connected() && !g.is_bipartite()));
    }
}

TEST_CASE("cover of quotient is the original graph") {
    const Graph danzer = kronecker_cover(odd_graph(4)).graph.without_colors();
    const auto group = automorphism_group(danzer);
    std::mt19937_64 rng(7);
    for (int k : {5, 7, 10, 14}) {
        auto found = semiregular_cyclic(danzer, group, k);
        REQUIRE_FALSE(found.empty());
        std::shuffle(found.begin(), found.end(), rng);
        for (std::size_t i = 0; i < std::min<std::size_t>(found.size(), 4); ++i) {
            CHECK(quotient_round_trip(danzer, found[i]));
            const auto vg = quotient(danzer, found[i]);
            CHECK(voltage_from_text(to_text(vg)) == vg);
        }
    }
    for (const Graph& g : {coxeter_graph(), odd_graph(3), cycle_graph(12)}) {
        const auto grp = automorphism_group(g);
        for (int k = 2; k <= g.vertex_count(); ++k) {
            if (g.vertex_count() % k) continue;
            for (const auto& a : semiregular_cyclic(g, grp, k, {1000000, 3})) CHECK(quotient_round_trip(g, a));
        }
    }
}

TEST_CASE("polarity witnesses are involutions") {
    for (const auto& s : {dcd_build(3).structure, cyclic_configuration({0, 1, 3}, 7), cyclic_configuration({0, 1, 8, 14}, 35)}) {
        const auto w = is_self_polar(s);
        REQUIRE(w.has_value());
        CHECK(is_identity(compose(w->levi_map, w->levi_map)));
        for (const auto& [p, b] : s.incidences()) CHECK(s.incident(w->block_to_point[b], w->point_to_block[p]));
    }
}

TEST_CASE("edge list round trip on random graphs") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 20; ++t) {
        const Graph g = random_graph(12, 0.3, rng);
        CHECK(graph_from_edgelist(to_edgelist(g)) == g);
        CHECK(graph_from_json(to_json(g)) == g);
    }
}
