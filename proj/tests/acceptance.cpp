// Acceptance harness: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "dcdkit/dcd.hpp"
#include "dcdkit/error.hpp"
#include "dcdkit/euclid.hpp"
#include "dcdkit/projgeom.hpp"
#include "dcdkit/rot_search.hpp"
#include "dcdkit/subsets.hpp"
#include "dcdkit/voltage.hpp"

using namespace dcdkit;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<Outcome()> run;
};

Graph danzer_graph() { return levi_graph(dcd_build(4).structure).graph.without_colors(); }

Outcome type_formula() {
    const std::vector<std::string> expected = {"(3_2)", "(10_3)", "(35_4)", "(126_5)"};
    std::string seen;
    bool ok = true;
    for (int n = 2; n <= 5; ++n) {
        const auto sig = validate_configuration(dcd_build(n).structure);
        const auto want = static_cast<int>(binomial(2 * n - 1, n - 1));
        ok = ok && sig.balanced && sig.p == want && sig.k == n && sig.to_string() == expected[n - 2];
        seen += (n > 2 ? " " : "") + sig.to_string();
    }
    return {ok, seen};
}

Outcome kronecker_theorem() {
    bool ok = true;
    for (int n : {3, 4}) {
        const Graph levi = levi_graph(dcd_build(n).structure).graph.without_colors();
        const Graph cover = kronecker_cover(odd_graph(n)).graph.without_colors();
        ok = ok && canonical_form(levi) == canonical_form(cover) && isomorphic(levi, cover).has_value();
    }
    return {ok, "n = 3, 4"};
}

Outcome decomposition() {
    const auto d = dcd_build(4);
    const auto dec = decompose(d, 0);
    const auto s1 = validate_configuration(dec.c1).to_string(), s2 = validate_configuration(dec.c2).to_string();
    const auto whole = reassemble(dec);
    const bool ok = s1 == "(15_4, 20_3)" && s2 == "(20_3, 15_4)" && dec.cross.size() == 20 && delta_is_duality(dec) &&
                    same_labelled_structure(whole, d.structure) && isomorphic_structures(whole, d.structure);
    return {ok, s1 + " + " + s2 + ", " + std::to_string(dec.cross.size()) + " cross incidences"};
}

Outcome self_polarity() {
    bool ok = true;
    for (int n = 2; n <= 5; ++n) {
        const auto d = dcd_build(n);
        const auto levi = levi_graph(d.structure);
        const auto pol = polarity(d);
        const auto& m = pol.levi_map;
        bool swaps = true;
        for (int v = 0; v < levi.graph.vertex_count(); ++v) swaps = swaps && levi.coloring[m[v]] != levi.coloring[v];
        ok = ok && swaps && permutation_order(m) == 2 && is_automorphism(levi.graph.without_colors(), m) &&
             is_polarity(d.structure, m);
    }
    return {ok, "n = 2..5"};
}

Outcome danzer_aut() {
    const Graph g = danzer_graph();
    const auto group = automorphism_group(g);
    const auto order = group.order();
    const bool ok = order == 10080 && edge_transitive(g, group) && girth(g) == 6;
    return {ok, "order " + order.get_str() + ", girth " + std::to_string(girth(g).value_or(0))};
}

Outcome census() {
    const auto c = cyclic_configuration({0, 1, 8, 14}, 35);
    const auto sig = validate_configuration(c);
    const bool polar = is_self_polar(c).has_value();
    const bool flag_transitive = edge_transitive(levi_graph(c).graph);
    const bool same = isomorphic_structures(c, dcd_build(4).structure);
    const bool ok = sig.to_string() == "(35_4)" && polar && flag_transitive && !same;
    return {ok, sig.to_string() + (polar ? ", self-polar" : "") + (flag_transitive ? ", flag-transitive" : "") +
                    (same ? ", isomorphic to DCD(4)" : ", not isomorphic to DCD(4)")};
}

Outcome realization() {
    const auto arr = random_arrangement(4, 7, 1);
    const auto spatial = realize_dcd(4, arr);
    const auto proj = find_projection(spatial, 1);
    const auto planar_incidences = verify_planar_incidences(proj.planar);
    const bool ok = spatial.verified_incidences == 140 && planar_incidences == 140 && proj.scan.clean() &&
                    proj.scan.collinear_sets.size() == 35;
    return {ok, std::to_string(planar_incidences) + " incidences, " + std::to_string(proj.scan.triples_checked) +
                    " triples scanned, " + std::to_string(proj.scan.unexpected_sets.size()) + " extra collinearities"};
}

Outcome steiner() {
    int good = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const auto ls = random_certified_lines(4, seed);
        const auto r = steiner_quadrilateral<Rat>({ls[0], ls[1], ls[2], ls[3]});
        good += r.holds() ? 1 : 0;
    }
    return {good == 100, std::to_string(good) + "/100 arrangements"};
}

Outcome construction_two() {
    const auto ls = random_certified_lines(7, 1);
    const auto dcd4 = dcd_build(4).structure;
    const auto ortho = construction2_report<Rat>(ls);
    const auto circles = point_circle_wallace_report<Rat>(ls);
    const auto so = validate_configuration(ortho.configuration.structure).to_string();
    const auto sc = validate_configuration(circles.configuration.structure).to_string();
    const bool ok = ortho.report.clean() && circles.report.clean() && so == "(35_4)" && sc == "(35_4)" &&
                    isomorphic_structures(ortho.configuration.structure, dcd4) &&
                    isomorphic_structures(circles.configuration.structure, dcd4);
    return {ok, "orthocenters " + so + ", Wallace circles " + sc + ", " +
                    std::to_string(ortho.report.size() + circles.report.size()) + " defects"};
}

Outcome coxeter_chain() {
    const Graph g = coxeter_graph();
    const auto triples = coxeter_triples();
    const auto all = k_subsets(7, 3);
    const Graph k73 = kneser_graph(7, 3);
    auto index = [&](SubsetMask s) { return static_cast<int>(std::find(all.begin(), all.end(), s) - all.begin()); };
    bool induced = true;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            induced = induced && g.adjacent(u, v) == k73.adjacent(index(triples[u]), index(triples[v]));
    const auto sig = validate_configuration(v_construction(g)).to_string();
    const auto order = automorphism_group(g).order();
    const bool ok = g.regular_degree() == 3 && girth(g) == 7 && order == 336 && induced && sig == "(28_3)";
    return {ok, "order " + order.get_str() + ", " + sig};
}

Outcome polycyclic() {
    const Graph g = danzer_graph();
    const auto group = automorphism_group(g);
    bool ok = true;
    std::string detail;
    for (int k : {5, 7}) {
        const auto found = semiregular_cyclic(g, group, k, {1000000, 1});
        const bool round = !found.empty() && quotient_round_trip(g, found.front());
        ok = ok && round;
        detail += (k == 5 ? "" : ", ") + std::string("Z_") + std::to_string(k) + (round ? " round-trips" : " missing");
    }
    return {ok, detail};
}

Outcome hamiltonicity() {
    const Graph g = danzer_graph();
    const auto cycle = hamilton_cycle(g);
    const bool ok = cycle && cycle->size() == 70 && is_hamilton_cycle(g, *cycle);
    return {ok, cycle ? std::to_string(cycle->size()) + "-cycle" : "none found"};
}

Outcome conjecture_probe() {
    SearchOptions opt;
    opt.seeds = 200;
    std::string detail;
    bool ok = true;
    for (int k : {5, 7}) {
        const auto report = search(RotationalSystem(danzer_rotational_quotient(k)), opt);
        const auto found = report.count(Classification::Realization);
        ok = ok && found == 0 && !report.budget_exhausted;
        detail += "k=" + std::to_string(k) + ": " + report.summary() + "; ";
    }
    SearchOptions control;
    control.seeds = 40;
    const auto cox = search(RotationalSystem(coxeter_rotational_quotient()), control);
    const auto& best = cox.best();
    ok = ok && best.classification == Classification::Realization && best.residual < 1e-18;
    char buf[64];
    std::snprintf(buf, sizeof buf, "Coxeter Z_7 best residual %.1e", best.residual);
    return {ok, detail + buf};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"type formula", 1, type_formula},
        {"Kronecker cover of the odd graph", 10, kronecker_theorem},
        {"decomposition of DCD(4)", 5, decomposition},
        {"self-polarity", 1, self_polarity},
        {"Danzer graph automorphisms", 120, danzer_aut},
        {"cyclic (35_4) is a different configuration", 60, census},
        {"realization from seven hyperplanes", 120, realization},
        {"Steiner quadrilateral theorem", 60, steiner},
        {"orthocenter and Wallace (35_4)", 120, construction_two},
        {"Coxeter graph chain", 30, coxeter_chain},
        {"semiregular automorphisms of orders 5 and 7", 120, polycyclic},
        {"Hamilton cycle in the Danzer graph", 300, hamiltonicity},
        {"rotational realization probe", 1800, conjecture_probe},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.budget_seconds;
        const bool pass = out.ok && in_time;
        failures += pass ? 0 : 1;
        std::printf("%s %2zu %s: %s (%.3f s of %.0f s)%s\n", pass ? "PASS" : "FAIL", i + 1, c.name.c_str(),
                    out.detail.c_str(), secs, c.budget_seconds, in_time ? "" : " over budget");
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
