#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dcdkit/error.hpp"
#include "dcdkit/incidence.hpp"
#include "dcdkit/rot_search.hpp"

using namespace dcdkit;

namespace {

const VoltageGraph& quotient_k(int k) {
    static const VoltageGraph q5 = danzer_rotational_quotient(5);
    static const VoltageGraph q7 = danzer_rotational_quotient(7);
    return k == 5 ? q5 : q7;
}

const SearchReport& coxeter_search() {
    static const SearchReport r = [] {
        SearchOptions opt;
        opt.seeds = 20;
        return search(RotationalSystem(coxeter_rotational_quotient()), opt);
    }();
    return r;
}

Eigen::VectorXd random_params(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1, 1);
    Eigen::VectorXd x(n);
    for (int i = 0; i < n; ++i) x[i] = u(rng);
    return x;
}

}  // namespace

TEST_CASE("term counts follow the quotient") {
    for (int k : {5, 7}) {
        const auto& vg = quotient_k(k);
        const RotationalSystem sys(vg);
        CHECK(sys.k() == k);
        CHECK(sys.term_count() == static_cast<int>(vg.arcs.size()));
        CHECK(sys.point_orbit_count() == 35 / k);
        CHECK(sys.line_orbit_count() == 35 / k);
        CHECK(sys.parameter_count() == 70 / k);
    }
    const RotationalSystem cox(coxeter_rotational_quotient());
    CHECK(cox.term_count() == 12);
    CHECK(cox.parameter_count() == 8);
    CHECK(RotationalSystem(quotient_k(7)).multipliers() == std::vector<int>{1, 2, 3});
    CHECK(RotationalSystem(quotient_k(5)).multipliers() == std::vector<int>{1, 2});
}

TEST_CASE("base must be bipartite") {
    const VoltageGraph triangle{3, 5, {{0, 1, 0}, {1, 2, 0}, {2, 0, 1}}, {}};
    bool threw = false;
    try {
        RotationalSystem sys(triangle);
    } catch (const Error& e) {
        threw = e.kind() == ErrorKind::NonBipartiteBase;
    }
    CHECK(threw);
    VoltageGraph same_color = quotient_k(7);
    same_color.colors.assign(same_color.vertex_count, 0);
    threw = false;
    try {
        RotationalSystem sys(same_color);
    } catch (const Error& e) {
        threw = e.kind() == ErrorKind::NonBipartiteBase;
    }
    CHECK(threw);
    const VoltageGraph thin{2, 5, {{0, 1, 0}}, {0, 1}};
    threw = false;
    try {
        RotationalSystem sys(thin);
    } catch (const Error& e) {
        threw = e.kind() == ErrorKind::InvalidArgument;
    }
    CHECK(threw);
}

TEST_CASE("cover structure is the Danzer configuration") {
    for (int k : {5, 7}) {
        const RotationalSystem sys(quotient_k(k));
        const auto s = sys.cover_structure();
        CHECK(validate_configuration(s).to_string() == "(35_4)");
        CHECK(isomorphic(levi_graph(s).graph.without_colors(), kronecker_cover(odd_graph(4)).graph.without_colors()).has_value());
    }
    const RotationalSystem cox(coxeter_rotational_quotient());
    CHECK(isomorphic_structures(cox.cover_structure(), v_construction(coxeter_graph())));
}

TEST_CASE("analytic Jacobian matches finite differences") {
    for (int k : {5, 7}) {
        const RotationalSystem sys(quotient_k(k));
        for (int m : sys.multipliers()) {
            const Eigen::VectorXd x = random_params(sys.parameter_count(), 100 + m);
            const Eigen::MatrixXd jac = sys.jacobian(x, m);
            const double h = 1e-6;
            for (int i = 0; i < x.size(); ++i) {
                Eigen::VectorXd xp = x, xm = x;
                xp[i] += h;
                xm[i] -= h;
                const Eigen::VectorXd fd = (sys.term_values(xp, m) - sys.term_values(xm, m)) / (2 * h);
                CHECK((fd - jac.col(i)).cwiseAbs().maxCoeff() < 1e-6);
            }
        }
    }
}

TEST_CASE("residual is scale invariant and vanishes on defining terms") {
    const RotationalSystem sys(quotient_k(7));
    const Eigen::VectorXd x = random_params(sys.parameter_count(), 5);
    CHECK(sys.residual(x, 1) > 0);
    CHECK(sys.residual(3.7 * x, 1) == doctest::Approx(sys.residual(x, 1)).epsilon(1e-12));
    const Eigen::VectorXd f = sys.term_values(x, 2);
    for (int t = 0; t < sys.term_count(); ++t)
        if (sys.terms()[t].defining) CHECK(f[t] == 0.0);
}

TEST_CASE("symmetric collapse") {
    const RotationalSystem sys(quotient_k(7));
    Eigen::VectorXd x(sys.parameter_count());
    for (int o = 0; o < sys.point_orbit_count(); ++o) {
        x[2 * o] = 1.0;
        x[2 * o + 1] = 0.0;
    }
    CHECK(sys.residual(x, 1) > 0);
    const auto co = coincidence_check(sys, x, 1);
    int pairs = 0;
    for (const auto& c : co)
        if (c.kind == Coincidence::Kind::PointPoint && c.shift == 0) ++pairs;
    const int n = sys.point_orbit_count();
    CHECK(pairs == n * (n - 1) / 2);
    CHECK(coincidence_check(sys, random_params(sys.parameter_count(), 77), 1).empty());
}

TEST_CASE("descent is monotone") {
    const RotationalSystem sys(quotient_k(5));
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto r = descend(sys, random_params(sys.parameter_count(), seed), 1 + static_cast<int>(seed % 2));
        REQUIRE_FALSE(r.trace.empty());
        for (std::size_t i = 1; i < r.trace.size(); ++i) CHECK(r.trace[i] < r.trace[i - 1]);
        CHECK(r.residual == r.trace.back());
        CHECK(r.residual >= 0);
    }
}

TEST_CASE("classification does not depend on the drawing scale") {
    const RotationalSystem sys(quotient_k(7));
    SearchOptions opt;
    opt.seeds = 12;
    const auto report = search(sys, opt);
    for (const auto& run : report.runs) {
        ResidualReport scaled = run;
        scaled.params *= 250.0;
        classify(sys, scaled);
        CHECK(scaled.classification == run.classification);
        scaled.params = run.params * 1e-3;
        classify(sys, scaled);
        CHECK(scaled.classification == run.classification);
    }
}

TEST_CASE("the Coxeter control has a rotational realization") {
    const auto& report = coxeter_search();
    CHECK(report.count(Classification::Realization) > 0);
    const auto& best = report.best();
    CHECK(best.residual < 1e-18);
    CHECK(best.classification == Classification::Realization);
    const RotationalSystem sys(coxeter_rotational_quotient());
    const auto d = rotational_drawing(sys, best.params, best.multiplier);
    CHECK(count_incidences(d, 1e-8) == 84);
    // Independent check of the drawing: incident pairs are near, others far.
    double rmax = 0;
    for (const auto& p : d.points) rmax = std::max(rmax, p.norm());
    for (int p = 0; p < 28; ++p)
        for (int l = 0; l < 28; ++l) {
            const double dist = std::fabs(d.lines[l].head<2>().dot(d.points[p]) + d.lines[l].z()) / rmax;
            if (d.structure.incident(p, l)) CHECK(dist < 1e-8);
            else CHECK(dist > 1e-6);
        }
    for (int p = 0; p < 28; ++p)
        for (int q = p + 1; q < 28; ++q) CHECK((d.points[p] - d.points[q]).norm() / rmax > 1e-6);
}

TEST_CASE("Danzer searches find only degenerate solutions") {
    for (int k : {5, 7}) {
        const RotationalSystem sys(quotient_k(k));
        SearchOptions opt;
        opt.seeds = 40;
        const auto report = search(sys, opt);
        CHECK(report.runs.size() == 40);
        CHECK(report.count(Classification::Realization) == 0);
        for (const auto& run : report.runs) {
            if (run.classification == Classification::Degenerate) CHECK_FALSE(run.coincidences.empty());
            if (run.classification == Classification::Realization) CHECK(run.coincidences.empty());
        }
        CHECK(report.summary() == "no non-degenerate solution found in 40 starts");
    }
}

TEST_CASE("search is deterministic and reports budgets") {
    const RotationalSystem sys(quotient_k(7));
    SearchOptions opt;
    opt.seeds = 8;
    opt.threads = 1;
    const auto a = search(sys, opt);
    opt.threads = 3;
    const auto b = search(sys, opt);
    REQUIRE(a.runs.size() == b.runs.size());
    for (std::size_t i = 0; i < a.runs.size(); ++i) {
        CHECK(a.runs[i].seed == b.runs[i].seed);
        CHECK(a.runs[i].residual == b.runs[i].residual);
        CHECK(a.runs[i].multiplier == b.runs[i].multiplier);
    }
    CHECK(a.to_json().dump() == b.to_json().dump());
    opt.time_budget_seconds = 1e-12;
    const auto c = search(sys, opt);
    CHECK(c.budget_exhausted);
    CHECK(c.runs.size() < 8);
    const auto j = a.to_json();
    CHECK(j["seeds"] == 8);
    CHECK(j["histogram"]["realization"] == 0);
    CHECK(j.contains("best"));
}

TEST_CASE("perturbed export") {
    const RotationalSystem sys(quotient_k(7));
    SearchOptions opt;
    opt.seeds = 6;
    const auto report = search(sys, opt);
    const auto& best = report.best();
    const auto plain = rotational_drawing(sys, best.params, best.multiplier);
    const auto same = perturb_export(sys, best.params, best.multiplier, 0.0);
    for (std::size_t i = 0; i < plain.points.size(); ++i) CHECK(same.drawing.points[i] == plain.points[i]);
    for (std::size_t i = 0; i < plain.lines.size(); ++i) CHECK(same.drawing.lines[i] == plain.lines[i]);
    CHECK(same.total_incidences == 140);
    const auto wild = perturb_export(sys, best.params, best.multiplier, 3.0, 1, 1e-8, 0);
    CHECK(wild.surviving_incidences < 140);
    CHECK(wild.total_incidences == 140);

    const RotationalSystem cox(coxeter_rotational_quotient());
    const auto& cb = coxeter_search().best();
    const auto near = perturb_export(cox, cb.params, cb.multiplier, 1e-3);
    CHECK(near.surviving_incidences == 84);
    const std::string svg = to_svg(near.drawing, 400);
    CHECK(svg.rfind("<svg", 0) == 0);
    const auto j = to_json(near.drawing);
    CHECK(j["points"].size() == 28);
    CHECK(j["lines"][0]["points"].size() == 3);
}
