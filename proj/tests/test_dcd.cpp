#include <doctest.h>

#include "dcdkit/dcd.hpp"
#include "dcdkit/error.hpp"
#include "oracles.hpp"

using namespace dcdkit;

TEST_CASE("type formula") {
    const char* expected[] = {"", "", "(3_2)", "(10_3)", "(35_4)", "(126_5)"};
    for (int n = 2; n <= 5; ++n) {
        const auto d = dcd_build(n);
        CHECK(d.ground_size == 2 * n - 1);
        CHECK(d.structure.point_count() == binomial(2 * n - 1, n - 1));
        CHECK(validate_configuration(d.structure).to_string() == expected[n]);
        // Incidence is containment, checked over all pairs.
        for (int p = 0; p < d.structure.point_count(); ++p)
            for (int b = 0; b < d.structure.block_count(); ++b)
                CHECK(d.structure.incident(p, b) == subset_contains(d.point_subsets[p], d.block_subsets[b]));
    }
    CHECK(dcd_build(4).structure.point_labels().front() == "0123");
    CHECK(dcd_build(4).structure.block_labels().back() == "456");
}

TEST_CASE("Levi graph is the Kronecker cover of the odd graph") {
    for (int n = 2; n <= 4; ++n) {
        const Graph levi = levi_graph(dcd_build(n).structure).graph;
        const Graph cover = kronecker_cover(odd_graph(n)).graph;
        CHECK(canonical_form(levi) == canonical_form(cover));
        CHECK(isomorphic(levi, cover).has_value());
    }
}

TEST_CASE("decomposition along a hyperplane") {
    for (int n = 2; n <= 5; ++n) {
        const auto d = dcd_build(n);
        for (int h = 0; h < d.ground_size; ++h) {
            const auto dec = decompose(d, h);
            const auto s1 = validate_configuration(dec.c1);
            const auto s2 = validate_configuration(dec.c2);
            // Pascal's rule splits the type formula.
            CHECK(s1.p == binomial(2 * n - 2, n));
            CHECK(s1.n == binomial(2 * n - 2, n - 1));
            CHECK(s1.p + s2.p == d.structure.point_count());
            CHECK(s2.p == s1.n);
            CHECK(s2.n == s1.p);
            CHECK(dec.cross.size() == static_cast<std::size_t>(binomial(2 * n - 2, n - 1)));
            for (const auto& c : dec.cross) CHECK(c.point_side == Summand::Second);
            CHECK(delta_is_duality(dec));
            CHECK(same_labelled_structure(reassemble(dec), d.structure));
            const auto rev = decompose(d, h, false);
            CHECK(same_labelled_structure(reassemble(rev), d.structure));
            CHECK(delta_is_duality(rev));
        }
    }
    const auto d4 = decompose(dcd_build(4), 0);
    CHECK(validate_configuration(d4.c1).to_string() == "(15_4, 20_3)");
    CHECK(validate_configuration(d4.c2).to_string() == "(20_3, 15_4)");
    CHECK(d4.cross.size() == 20);
    CHECK(decompose(dcd_build(3), 2).cross.size() == 6);
    CHECK(validate_configuration(decompose(dcd_build(3), 1).c1).to_string() == "(4_3, 6_2)");
    // phi adds h back to a line avoiding it.
    for (std::size_t l = 0; l < d4.c1_lines.size(); ++l) CHECK(d4.c2_points[d4.phi[l]] == (d4.c1_lines[l] | 1u));
    bool threw = false;
    try {
        decompose(dcd_build(4), 7);
    } catch (const Error& e) {
        threw = e.kind() == ErrorKind::IndexOutOfRange;
    }
    CHECK(threw);
}

TEST_CASE("complementation polarity") {
    for (int n = 2; n <= 5; ++n) {
        const auto d = dcd_build(n);
        const auto pi = polarity(d);
        const Graph levi = levi_graph(d.structure).graph.without_colors();
        CHECK(is_automorphism(levi, pi.levi_map));
        CHECK(is_identity(compose(pi.levi_map, pi.levi_map)));
        CHECK(is_polarity(d.structure, pi.levi_map));
        const int count = d.structure.point_count();
        for (int v = 0; v < 2 * count; ++v) CHECK((v < count) != (pi.levi_map[v] < count));
        CHECK(polarity_from_decomposition(d, decompose(d, 0)).levi_map == pi.levi_map);
        CHECK(polarity_from_decomposition(d, decompose(d, 1)).levi_map == pi.levi_map);
    }
    const auto d = dcd_build(4);
    const auto pi = polarity(d);
    const int p = d.point_of(subset_from_elements({0, 1, 2, 3}));
    CHECK(d.structure.block_labels()[pi.point_to_block[p]] == "456");
}

TEST_CASE("Steiner-Pluecker and Cayley-Salmon") {
    const auto sp = steiner_plucker(), cs = cayley_salmon();
    CHECK(validate_configuration(sp).to_string() == "(20_3, 15_4)");
    CHECK(validate_configuration(cs).to_string() == "(15_4, 20_3)");
    CHECK(isomorphic_structures(dual(sp), cs));
    const Graph lsp = levi_graph(sp).graph.without_colors(), lcs = levi_graph(cs).graph.without_colors();
    CHECK(canonical_form(lsp) == canonical_form(lcs));
    CHECK(oracle::girth(lsp) == 6);
    CHECK(edge_transitive(lsp));
    for (const auto& label : sp.point_labels()) CHECK(label.find('0') != std::string::npos);
    for (const auto& label : cs.point_labels()) CHECK(label.find('0') == std::string::npos);
}

TEST_CASE("phi relabeling") {
    const auto phi = phi_relabeling();
    CHECK(phi == std::vector<int>{0, 6, 5, 4, 3, 2, 1});
    std::vector<int> twice(7);
    for (int i = 0; i < 7; ++i) twice[i] = phi[phi[i]];
    CHECK(twice == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
    CHECK(relabeling_is_automorphism(steiner_plucker(), phi));
    CHECK(relabeling_is_automorphism(cayley_salmon(), phi));
    CHECK(phi_check());
    // A relabeling moving 0 breaks the Steiner-Pluecker labels.
    CHECK_FALSE(relabeling_is_automorphism(steiner_plucker(), {1, 0, 2, 3, 4, 5, 6}));
}

TEST_CASE("flag transitivity") {
    const std::size_t expected[] = {0, 0, 6, 30, 140, 630};
    for (int n = 2; n <= 5; ++n) {
        const auto r = flag_transitive_dcd(n);
        CHECK(r.transitive());
        CHECK(r.orbit_size == expected[n]);
        CHECK(r.flag_count == dcd_build(n).structure.incidences().size());
    }
}
