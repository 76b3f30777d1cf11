#include <doctest.h>

#include <map>

#include "dcdkit/dcd.hpp"
#include "dcdkit/error.hpp"
#include "dcdkit/projgeom.hpp"

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

const SpatialRealization& realization4() {
    static const SpatialRealization r = realize_dcd(4, random_arrangement(4, 7, 1));
    return r;
}

const ProjectionResult& projection4() {
    static const ProjectionResult p = find_projection(realization4(), 1);
    return p;
}

bool flat_has(const Flat& f, const RatVec& v) {
    RatMat m = f.basis;
    m.push_back(v);
    return rank(m) == f.rank();
}

// Three points given by their homogeneous coordinates are collinear.
bool collinear3(const RatVec& a, const RatVec& b, const RatVec& c) { return is_zero(det3(a, b, c)); }

}  // namespace

TEST_CASE("generic arrangements") {
    const auto a = random_arrangement(4, 7, 1);
    CHECK(a.hyperplanes.size() == 7);
    CHECK(a.certificate.subsets_checked == 21);
    for (const auto& h : a.hyperplanes) {
        REQUIRE(h.coeffs.size() == 5);
        CHECK_FALSE(is_zero_vector(h.coeffs));
        CHECK(normalize_projective(h.coeffs) == h.coeffs);
    }
    // Every 5-subset has full rank, checked directly.
    for (SubsetMask s : k_subsets(7, 5)) {
        RatMat m;
        for (int i : subset_elements(s)) m.push_back(a.hyperplanes[i].coeffs);
        CHECK(rank(m) == 5);
    }
    const auto planar = random_arrangement(2, 5, 3);
    CHECK(planar.certificate.subsets_checked == 10);
    // Same seed, same arrangement.
    const auto again = random_arrangement(4, 7, 1);
    for (int i = 0; i < 7; ++i) CHECK(again.hyperplanes[i].coeffs == a.hyperplanes[i].coeffs);
}

TEST_CASE("dependent hyperplanes fail the certificate") {
    auto hs = random_arrangement(4, 5, 2).hyperplanes;
    RatVec sum(5);
    for (int j = 0; j < 5; ++j) sum[j] = hs[0].coeffs[j] + hs[1].coeffs[j];
    hs[4] = make_hyperplane(sum);
    CHECK(kind_of([&] { certify_general_position(hs, 4); }) == ErrorKind::CertificateFailed);
    CHECK(kind_of([&] { meet({hs[0], hs[1], hs[4]}); }) == ErrorKind::UnexpectedRank);
    CHECK(meet({hs[0], hs[1], hs[4]}, false).rank() == 3);
}

TEST_CASE("meets have the expected rank") {
    const auto a = random_arrangement(4, 7, 1);
    for (int size = 1; size <= 5; ++size)
        for (SubsetMask s : k_subsets(7, size)) {
            const Flat f = meet(a, s);
            CHECK(f.rank() == 5 - size);
            for (const auto& v : f.basis)
                for (int i : subset_elements(s)) CHECK(is_zero(dot(a.hyperplanes[i].coeffs, v)));
        }
}

TEST_CASE("spatial realization of DCD(4)") {
    const auto& r = realization4();
    CHECK(r.points.size() == 35);
    CHECK(r.lines.size() == 35);
    CHECK(r.verified_incidences == 140);
    CHECK(same_labelled_structure(r.structure, dcd_build(4).structure));
    for (std::size_t p = 0; p < 35; ++p) {
        REQUIRE(r.points[p].rank() == 1);
        for (std::size_t l = 0; l < 35; ++l) {
            CHECK(r.lines[l].rank() == 2);
            CHECK(flat_has(r.lines[l], r.points[p].basis[0]) == subset_contains(r.point_subsets[p], r.line_subsets[l]));
        }
    }
}

TEST_CASE("projection to the plane keeps exactly the configuration") {
    const auto& pr = projection4();
    const auto& pc = pr.planar;
    CHECK(verify_planar_incidences(pc) == 140);
    CHECK(pr.scan.triples_checked == 6545);
    CHECK(pr.scan.collinear_sets.size() == 35);
    CHECK(pr.scan.clean());
    // Independent triple scan: collinear triples are exactly those on a line.
    std::size_t collinear = 0, expected = 0;
    for (int i = 0; i < 35; ++i)
        for (int j = i + 1; j < 35; ++j)
            for (int k = j + 1; k < 35; ++k) {
                if (!collinear3(pc.points[i], pc.points[j], pc.points[k])) continue;
                ++collinear;
                bool on_common_line = false;
                for (int l : pc.structure.blocks_of(i))
                    on_common_line = on_common_line || (pc.structure.incident(j, l) && pc.structure.incident(k, l));
                CHECK(on_common_line);
            }
    for (int l = 0; l < 35; ++l) expected += 4;  // C(4,3) triples per line
    CHECK(collinear == expected);
    for (const auto& p : pc.points) CHECK_FALSE(is_zero(p[2]));
}

TEST_CASE("a center on a configuration line is rejected") {
    const auto& r = realization4();
    const Flat center = r.lines[0];
    CHECK(kind_of([&] { project_to_plane(r, center, coordinate_image_plane(center)); }) == ErrorKind::CenterHitsConfiguration);
    const Flat bad_plane = span({{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)}}, 5);
    CHECK(kind_of([&] { project_to_plane(r, projection4().projection.center, bad_plane); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("Desargues and the trilateral") {
    const auto r3 = realize_dcd(3, random_arrangement(3, 5, 2));
    const auto p3 = find_projection(r3, 2);
    CHECK(validate_configuration(p3.planar.structure).to_string() == "(10_3)");
    CHECK(p3.scan.collinear_sets.size() == 10);
    CHECK(p3.scan.clean());
    const auto r2 = realize_dcd(2, random_arrangement(2, 3, 2));
    CHECK(r2.verified_incidences == 6);
    const auto section = cayley_section(1);
    CHECK(verify_planar_incidences(section) == 30);
    CHECK(same_labelled_structure(section.structure, dcd_build(3).structure));
    CHECK(scan_collinear_triples(section).clean());
}

TEST_CASE("Steiner-Pluecker and Cayley-Salmon as restrictions") {
    const auto& pc = projection4().planar;
    const auto sp = planar_steiner_plucker(pc), cs = planar_cayley_salmon(pc);
    CHECK(same_labelled_structure(sp.structure, steiner_plucker()));
    CHECK(same_labelled_structure(cs.structure, cayley_salmon()));
    CHECK(verify_planar_incidences(sp) == 60);
    CHECK(verify_planar_incidences(cs) == 60);
}

TEST_CASE("perspective triangles") {
    const auto& pc = projection4().planar;
    const auto sp = planar_steiner_plucker(pc);
    const auto rep = verify_perspectivity_instance(sp);
    CHECK(rep.common_label == "0123");
    CHECK(rep.meeting_label == "0456");
    CHECK(rep.pairs.size() == 3);
    // Independent check: the three axes pass through the point 0456.
    const RatVec& meet_point = sp.points[sp.point_by_label("0456")];
    for (const auto& pair : rep.pairs) {
        CHECK(is_zero(dot(pair.axis, meet_point)));
        CHECK(proportional(pair.center, sp.points[sp.point_by_label("0123")]));
    }
    const auto cs = planar_cayley_salmon(pc);
    const auto dual_rep = verify_dual_perspectivity_instance(cs);
    CHECK(dual_rep.common_label == "456");
    CHECK(dual_rep.meeting_label == "123");
    for (const auto& pair : dual_rep.pairs) CHECK(is_zero(dot(cs.lines[cs.line_by_label("123")], pair.center)));

    auto broken = sp;
    broken.points[broken.point_by_label("0124")][0] += Rat(1, 1000);
    CHECK(kind_of([&] { verify_perspectivity_instance(broken); }) == ErrorKind::IncidenceMismatch);
    CHECK(kind_of([&] { verify_planar_incidences(broken); }) == ErrorKind::IncidenceMismatch);
}

TEST_CASE("perspectivity of two explicit triangles") {
    // Triangles perspective from the origin.
    const std::array<RatVec, 3> a = {RatVec{Rat(1), Rat(0), Rat(1)}, RatVec{Rat(0), Rat(1), Rat(1)}, RatVec{Rat(1), Rat(1), Rat(1)}};
    const std::array<RatVec, 3> b = {RatVec{Rat(2), Rat(0), Rat(1)}, RatVec{Rat(0), Rat(3), Rat(1)}, RatVec{Rat(5), Rat(5), Rat(1)}};
    const auto t = perspectivity(a, b);
    CHECK(proportional(t.center, {Rat(0), Rat(0), Rat(1)}));
    const std::array<RatVec, 3> c = {RatVec{Rat(2), Rat(0), Rat(1)}, RatVec{Rat(0), Rat(3), Rat(1)}, RatVec{Rat(5), Rat(7), Rat(1)}};
    CHECK(kind_of([&] { perspectivity(a, c); }) == ErrorKind::IncidenceMismatch);
}

TEST_CASE("exact JSON and SVG export") {
    const auto& pc = projection4().planar;
    const auto j = to_json(pc);
    CHECK(j["mode"] == "exact");
    CHECK(j["points"].size() == 35);
    CHECK(j["points"][0]["coords"][0].is_string());
    const auto back = planar_from_json(j);
    CHECK(back.points == pc.points);
    CHECK(back.lines == pc.lines);
    CHECK(same_labelled_structure(back.structure, pc.structure));
    const std::string svg = to_svg(pc, 400);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg == to_svg(pc, 400));
    std::size_t dots = 0;
    for (std::size_t pos = svg.find("<circle"); pos != std::string::npos; pos = svg.find("<circle", pos + 1)) ++dots;
    CHECK(dots == 35);
}
