#include "dcdkit/euclid.hpp"

#include <complex>
#include <numbers>
#include <random>

#include "dcdkit/subsets.hpp"
#include "dcdkit/svg.hpp"

namespace dcdkit {

namespace {

template <class T>
Point2T<T> vertex(const std::vector<Line2T<T>>& ls, int i, int j, double tol) {
    const auto p = intersect(ls[i], ls[j], tol);
    if (!p) throw Error(ErrorKind::DegenerateArrangement, "lines " + std::to_string(i) + " and " + std::to_string(j) + " are parallel");
    return *p;
}

// Vertices of the triangle cut out by the three lines of a 3-subset.
template <class T>
std::array<Point2T<T>, 3> triangle(const std::vector<Line2T<T>>& ls, SubsetMask s, double tol) {
    const auto e = subset_elements(s);
    return {vertex(ls, e[1], e[2], tol), vertex(ls, e[0], e[2], tol), vertex(ls, e[0], e[1], tol)};
}

template <class T>
Point2T<T> reflect(const Point2T<T>& p, const Point2T<T>& a, const Point2T<T>& b) {
    const T dx = b.x - a.x, dy = b.y - a.y;
    const T vx = p.x - a.x, vy = p.y - a.y;
    const T t = (vx * dx + vy * dy) / (dx * dx + dy * dy);
    return {a.x + 2 * t * dx - vx, a.y + 2 * t * dy - vy};
}

// Common point of the circumcircles of the four triangles of four lines: the
// circles of the first two triangles meet at the vertex of their two shared
// lines and at the point sought, its mirror image in the line of centers.
template <class T>
std::optional<Point2T<T>> miquel_point(const CircleT<T>& c0, const CircleT<T>& c1, const Point2T<T>& shared, double tol) {
    if (same_point(c0.center, c1.center, tol)) return std::nullopt;
    return reflect(shared, c0.center, c1.center);
}

std::string label_of(SubsetMask s, int ground) { return subset_label(s, ground); }

template <class T>
void check_incidences(const IncidenceStructure& s, const std::function<bool(int, int)>& on, CoincidenceReport& rep) {
    for (int p = 0; p < s.point_count(); ++p)
        for (int b = 0; b < s.block_count(); ++b) {
            const bool is_on = on(p, b);
            const bool expected = s.incident(p, b);
            if (is_on && !expected) rep.extra_incidences.emplace_back(s.point_labels()[p], s.block_labels()[b]);
            if (!is_on && expected) rep.missing_incidences.emplace_back(s.point_labels()[p], s.block_labels()[b]);
        }
}

IncidenceStructure containment(const std::vector<SubsetMask>& points, const std::vector<SubsetMask>& blocks, int ground,
                               bool points_inside) {
    std::vector<std::string> pl, bl;
    for (SubsetMask s : points) pl.push_back(label_of(s, ground));
    for (SubsetMask s : blocks) bl.push_back(label_of(s, ground));
    std::vector<Flag> flags;
    for (int p = 0; p < static_cast<int>(points.size()); ++p)
        for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
            const bool inc = points_inside ? subset_contains(blocks[b], points[p]) : subset_contains(points[p], blocks[b]);
            if (inc) flags.emplace_back(p, b);
        }
    return IncidenceStructure(std::move(pl), std::move(bl), std::move(flags));
}

template <class T>
nlohmann::json scalar_json(const T& v) {
    if constexpr (std::is_same_v<T, Rat>) return to_string(v);
    else return v;
}

}  // namespace

template <class T>
void certify_lines(const std::vector<Line2T<T>>& ls, double tol) {
    const int n = static_cast<int>(ls.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const auto p = intersect(ls[i], ls[j], tol);
            if (!p) throw Error(ErrorKind::DegenerateArrangement, "lines " + std::to_string(i) + " and " + std::to_string(j) + " are parallel");
            for (int k = j + 1; k < n; ++k)
                if (on_line(ls[k], *p, tol)) {
                    throw Error(ErrorKind::DegenerateArrangement, "lines " + std::to_string(i) + ", " + std::to_string(j) + ", " +
                                                                      std::to_string(k) + " are concurrent");
                }
        }
}

template <class T>
WallaceReportT<T> steiner_quadrilateral(const std::array<Line2T<T>, 4>& input, double tol) {
    const std::vector<Line2T<T>> ls(input.begin(), input.end());
    certify_lines(ls, tol);
    WallaceReportT<T> rep;
    rep.lines = input;
    const auto triples = k_subsets(4, 3);
    for (int t = 0; t < 4; ++t) {
        rep.triangles[t] = triangle(ls, triples[t], tol);
        const auto& v = rep.triangles[t];
        rep.circumcircles[t] = circumcircle(v[0], v[1], v[2], tol);
        rep.orthocenters[t] = orthocenter(v[0], v[1], v[2], tol);
    }
    const auto f = miquel_point(rep.circumcircles[0], rep.circumcircles[1], vertex(ls, 0, 1, tol), tol);
    if (!f) throw Error(ErrorKind::DegenerateArrangement, "circumcircles share their center");
    rep.wallace_point = *f;
    rep.circles_concurrent = true;
    for (const auto& c : rep.circumcircles) rep.circles_concurrent = rep.circles_concurrent && on_circle(c, rep.wallace_point, tol);
    const auto& cs = rep.circumcircles;
    try {
        rep.centers_circle = circumcircle(cs[0].center, cs[1].center, cs[2].center, tol);
    } catch (const Error&) {
        throw Error(ErrorKind::DegenerateArrangement, "centers of the circumcircles are collinear");
    }
    rep.centers_concyclic = on_circle(rep.centers_circle, cs[3].center, tol);
    // Two perpendicular lines make two orthocenters coincide; use any distinct pair.
    std::size_t other = 1;
    while (other < 4 && same_point(rep.orthocenters[0], rep.orthocenters[other], tol)) ++other;
    if (other == 4) throw Error(ErrorKind::DegenerateArrangement, "orthocenters coincide");
    rep.orthocenter_line = line_through(rep.orthocenters[0], rep.orthocenters[other], tol);
    rep.orthocenters_collinear = true;
    for (const auto& h : rep.orthocenters) rep.orthocenters_collinear = rep.orthocenters_collinear && on_line(rep.orthocenter_line, h, tol);
    return rep;
}

template <class T>
Construction2ResultT<T> construction2_report(const std::vector<Line2T<T>>& ls, double tol) {
    if (ls.size() != 7) throw Error(ErrorKind::InvalidArgument, "construction needs seven lines");
    certify_lines(ls, tol);
    const auto triples = k_subsets(7, 3);
    const auto quads = k_subsets(7, 4);
    Construction2ResultT<T> out;
    auto& cfg = out.configuration;
    cfg.structure = containment(triples, quads, 7, true);
    for (SubsetMask t : triples) {
        const auto v = triangle(ls, t, tol);
        cfg.points.push_back(orthocenter(v[0], v[1], v[2], tol));
    }
    auto index3 = [&](SubsetMask s) { return static_cast<int>(std::lower_bound(triples.begin(), triples.end(), s) - triples.begin()); };
    for (SubsetMask q : quads) {
        const auto inside = k_subsets(4, 3);
        const auto e = subset_elements(q);
        std::vector<int> hs;
        for (SubsetMask local : inside) {
            SubsetMask global = 0;
            for (int i : subset_elements(local)) global |= SubsetMask{1} << e[i];
            hs.push_back(index3(global));
        }
        const auto& a = cfg.points[hs[0]];
        const auto& b = cfg.points[hs[1]];
        if (same_point(a, b, tol)) {
            out.report.degenerate.push_back("orthocenter line " + label_of(q, 7));
            cfg.lines.push_back(normalized_line<T>(T(1), T(0), T(0), tol));
        } else {
            cfg.lines.push_back(line_through(a, b, tol));
        }
    }
    const auto& s = cfg.structure;
    for (int i = 0; i < s.point_count(); ++i)
        for (int j = i + 1; j < s.point_count(); ++j)
            if (same_point(cfg.points[i], cfg.points[j], tol)) out.report.coincident_points.emplace_back(s.point_labels()[i], s.point_labels()[j]);
    for (int i = 0; i < s.block_count(); ++i)
        for (int j = i + 1; j < s.block_count(); ++j)
            if (same_line(cfg.lines[i], cfg.lines[j], tol)) out.report.coincident_blocks.emplace_back(s.block_labels()[i], s.block_labels()[j]);
    check_incidences<T>(s, [&](int p, int b) { return on_line(cfg.lines[b], cfg.points[p], tol); }, out.report);
    return out;
}

PointLineConfigurationT<Rat> construction2(const std::vector<Line2>& ls) {
    auto r = construction2_report<Rat>(ls, 0);
    if (!r.report.clean()) {
        throw Error(ErrorKind::SpuriousIncidence, std::to_string(r.report.size()) + " geometric defects in the orthocenter construction");
    }
    return std::move(r.configuration);
}

template <class T>
PointCircleResultT<T> point_circle_wallace_report(const std::vector<Line2T<T>>& ls, double tol) {
    if (ls.size() != 7) throw Error(ErrorKind::InvalidArgument, "construction needs seven lines");
    certify_lines(ls, tol);
    const auto triples = k_subsets(7, 3);
    const auto quads = k_subsets(7, 4);
    PointCircleResultT<T> out;
    auto& cfg = out.configuration;
    cfg.structure = containment(quads, triples, 7, false);
    for (SubsetMask t : triples) {
        const auto v = triangle(ls, t, tol);
        cfg.circles.push_back(circumcircle(v[0], v[1], v[2], tol));
    }
    auto index3 = [&](SubsetMask s) { return static_cast<int>(std::lower_bound(triples.begin(), triples.end(), s) - triples.begin()); };
    for (SubsetMask q : quads) {
        const auto e = subset_elements(q);
        // Colex-first two triples of q share the lines e[0], e[1].
        const SubsetMask t0 = (SubsetMask{1} << e[0]) | (SubsetMask{1} << e[1]) | (SubsetMask{1} << e[2]);
        const SubsetMask t1 = (SubsetMask{1} << e[0]) | (SubsetMask{1} << e[1]) | (SubsetMask{1} << e[3]);
        const auto f = miquel_point(cfg.circles[index3(t0)], cfg.circles[index3(t1)], vertex(ls, e[0], e[1], tol), tol);
        if (!f) {
            out.report.degenerate.push_back("Wallace point " + label_of(q, 7));
            cfg.points.push_back(vertex(ls, e[0], e[1], tol));
        } else {
            cfg.points.push_back(*f);
        }
    }
    const auto& s = cfg.structure;
    for (int i = 0; i < s.point_count(); ++i)
        for (int j = i + 1; j < s.point_count(); ++j)
            if (same_point(cfg.points[i], cfg.points[j], tol)) out.report.coincident_points.emplace_back(s.point_labels()[i], s.point_labels()[j]);
    for (int i = 0; i < s.block_count(); ++i)
        for (int j = i + 1; j < s.block_count(); ++j)
            if (same_circle(cfg.circles[i], cfg.circles[j], tol)) out.report.coincident_blocks.emplace_back(s.block_labels()[i], s.block_labels()[j]);
    check_incidences<T>(s, [&](int p, int b) { return on_circle(cfg.circles[b], cfg.points[p], tol); }, out.report);
    return out;
}

template <class T>
PointCircleResultT<T> point_circle_centers_report(const std::vector<Line2T<T>>& ls, double tol) {
    if (ls.size() != 7) throw Error(ErrorKind::InvalidArgument, "construction needs seven lines");
    certify_lines(ls, tol);
    const auto triples = k_subsets(7, 3);
    const auto quads = k_subsets(7, 4);
    PointCircleResultT<T> out;
    auto& cfg = out.configuration;
    cfg.structure = containment(triples, quads, 7, true);
    for (SubsetMask t : triples) {
        const auto v = triangle(ls, t, tol);
        cfg.points.push_back(circumcircle(v[0], v[1], v[2], tol).center);
    }
    auto index3 = [&](SubsetMask s) { return static_cast<int>(std::lower_bound(triples.begin(), triples.end(), s) - triples.begin()); };
    for (SubsetMask q : quads) {
        const auto e = subset_elements(q);
        std::vector<int> idx;
        for (SubsetMask local : k_subsets(4, 3)) {
            SubsetMask global = 0;
            for (int i : subset_elements(local)) global |= SubsetMask{1} << e[i];
            idx.push_back(index3(global));
        }
        try {
            cfg.circles.push_back(circumcircle(cfg.points[idx[0]], cfg.points[idx[1]], cfg.points[idx[2]], tol));
        } catch (const Error&) {
            out.report.degenerate.push_back("centers circle " + label_of(q, 7));
            cfg.circles.push_back({cfg.points[idx[0]], T(0)});
        }
    }
    const auto& s = cfg.structure;
    for (int i = 0; i < s.point_count(); ++i)
        for (int j = i + 1; j < s.point_count(); ++j)
            if (same_point(cfg.points[i], cfg.points[j], tol)) out.report.coincident_points.emplace_back(s.point_labels()[i], s.point_labels()[j]);
    for (int i = 0; i < s.block_count(); ++i)
        for (int j = i + 1; j < s.block_count(); ++j)
            if (same_circle(cfg.circles[i], cfg.circles[j], tol)) out.report.coincident_blocks.emplace_back(s.block_labels()[i], s.block_labels()[j]);
    check_incidences<T>(s, [&](int p, int b) { return on_circle(cfg.circles[b], cfg.points[p], tol); }, out.report);
    return out;
}

PointCircleConfiguration point_circle_wallace(const std::vector<Line2>& ls) {
    auto r = point_circle_wallace_report<Rat>(ls, 0);
    if (!r.report.clean()) throw Error(ErrorKind::SpuriousIncidence, std::to_string(r.report.size()) + " geometric defects in the Wallace construction");
    return std::move(r.configuration);
}

PointCircleConfiguration point_circle_centers(const std::vector<Line2>& ls) {
    auto r = point_circle_centers_report<Rat>(ls, 0);
    if (!r.report.clean()) throw Error(ErrorKind::SpuriousIncidence, std::to_string(r.report.size()) + " geometric defects in the centers construction");
    return std::move(r.configuration);
}

std::vector<Line2> random_certified_lines(int count, std::uint64_t seed, int retry_budget) {
    if (count < 1) throw Error(ErrorKind::InvalidArgument, "line count must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> den(1, 10);
    auto draw = [&]() {
        const int b = den(rng);
        std::uniform_int_distribution<int> num(-10 * b, 10 * b);
        return make_rat(num(rng), b);
    };
    for (int attempt = 0; attempt < retry_budget; ++attempt) {
        std::vector<Line2> ls;
        for (int i = 0; i < count; ++i) {
            const Rat s = draw(), t = draw();
            // y = s x + t
            ls.push_back(normalized_line<Rat>(s, Rat(-1), t));
        }
        try {
            certify_lines(ls, 0);
            return ls;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::DegenerateArrangement) throw;
        }
    }
    throw Error(ErrorKind::DegenerateArrangement, "no certified line arrangement within the retry budget");
}

std::vector<Line2d> d7_heptagon_lines() {
    std::vector<Line2d> ls;
    for (int i = 0; i < 7; ++i) {
        const double phi = 2.0 * std::numbers::pi * i / 7.0;
        ls.push_back(normalized_line<double>(std::cos(phi), std::sin(phi), -1.0, kDefaultFloatTolerance));
    }
    return ls;
}

template <class T>
PointCircleConfigurationT<T> v_construction_circles(const Graph& g, const std::vector<Point2T<T>>& coords,
                                                    const std::vector<std::string>& labels, double tol) {
    const int n = g.vertex_count();
    if (static_cast<int>(coords.size()) != n) throw Error(ErrorKind::InvalidArgument, "one coordinate pair per vertex required");
    for (int v = 0; v < n; ++v)
        if (g.degree(v) < 3) throw Error(ErrorKind::InvalidArgument, "vertex " + std::to_string(v) + " has fewer than three neighbors");
    PointCircleConfigurationT<T> out;
    out.structure = v_construction(g, labels);
    out.points = coords;
    const auto& s = out.structure;
    for (int v = 0; v < n; ++v) {
        const auto& nb = g.neighbors(v);
        if (collinear(coords[nb[0]], coords[nb[1]], coords[nb[2]], tol)) {
            throw Error(ErrorKind::CollinearNeighborhood, "neighborhood of vertex " + s.point_labels()[v] + " is collinear");
        }
        const auto c = circumcircle(coords[nb[0]], coords[nb[1]], coords[nb[2]], tol);
        for (std::size_t i = 3; i < nb.size(); ++i)
            if (!on_circle(c, coords[nb[i]], tol)) {
                throw Error(ErrorKind::NotConcyclic, "neighborhood of vertex " + s.point_labels()[v] + " is not concyclic");
            }
        out.circles.push_back(c);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (same_point(coords[i], coords[j], tol)) {
                throw Error(ErrorKind::SpuriousIncidence, "vertices " + s.point_labels()[i] + " and " + s.point_labels()[j] + " coincide");
            }
    for (int p = 0; p < n; ++p)
        for (int b = 0; b < n; ++b)
            if (!s.incident(p, b) && on_circle(out.circles[b], coords[p], tol)) {
                throw Error(ErrorKind::SpuriousIncidence, "point " + s.point_labels()[p] + " lies on circle " + s.block_labels()[b]);
            }
    return out;
}

namespace {

// Z7 orbits of 3-subsets of Z7: three are invariant under x -> -x (their
// representatives are fixed by it and sit on the x-axis), the remaining two
// are swapped by it and placed as mirror images.
struct O4Orbits {
    std::vector<int> orbit;  ///< per colex vertex: 0..2 axis orbits, 3 free, 4 mirror
    std::vector<int> shift;  ///< rotation exponent from the representative
};

SubsetMask rotate_subset(SubsetMask s, int m) {
    SubsetMask out = 0;
    for (int e : subset_elements(s)) out |= SubsetMask{1} << ((e + m) % 7);
    return out;
}

O4Orbits o4_orbits() {
    const std::array<SubsetMask, 5> reps = {
        subset_from_elements({0, 1, 6}), subset_from_elements({0, 3, 4}), subset_from_elements({0, 2, 5}),
        subset_from_elements({0, 1, 3}), subset_from_elements({0, 4, 6})};
    O4Orbits o;
    for (SubsetMask v : k_subsets(7, 3)) {
        bool found = false;
        for (int r = 0; r < 5 && !found; ++r)
            for (int m = 0; m < 7 && !found; ++m)
                if (rotate_subset(reps[r], m) == v) {
                    o.orbit.push_back(r);
                    o.shift.push_back(m);
                    found = true;
                }
    }
    return o;
}

std::vector<Point2d> o4_positions(const O4Orbits& o, const std::array<double, 3>& axis, double r, double theta) {
    std::vector<Point2d> out;
    for (std::size_t v = 0; v < o.orbit.size(); ++v) {
        std::complex<double> z;
        switch (o.orbit[v]) {
            case 3: z = std::polar(r, theta); break;
            case 4: z = std::polar(r, -theta); break;
            default: z = axis[o.orbit[v]];
        }
        z *= std::polar(1.0, 2.0 * std::numbers::pi * o.shift[v] / 7.0);
        out.push_back({z.real(), z.imag()});
    }
    return out;
}

double incircle(const Point2d& a, const Point2d& b, const Point2d& c, const Point2d& d) {
    auto row = [&](const Point2d& p) { return std::array<double, 3>{p.x - d.x, p.y - d.y, (p.x - d.x) * (p.x - d.x) + (p.y - d.y) * (p.y - d.y)}; };
    const auto A = row(a), B = row(b), C = row(c);
    return A[0] * (B[1] * C[2] - B[2] * C[1]) - A[1] * (B[0] * C[2] - B[2] * C[0]) + A[2] * (B[0] * C[1] - B[1] * C[0]);
}

}  // namespace

O4Layout o4_d7_layout(std::uint64_t seed, int attempts) {
    const auto orbits = o4_orbits();
    const Graph g = odd_graph(4);
    const auto verts = k_subsets(7, 3);
    const int free_rep = static_cast<int>(std::find(verts.begin(), verts.end(), subset_from_elements({0, 1, 3})) - verts.begin());
    const auto& nb = g.neighbors(free_rep);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> radius(0.3, 1.5), sign(-1.0, 1.0), phase(0.05, 2.0 * std::numbers::pi / 7.0 - 0.05);
    for (int attempt = 0; attempt < attempts; ++attempt) {
        std::array<double, 3> axis = {radius(rng), radius(rng), 1.0};
        if (sign(rng) < 0) axis[0] = -axis[0];
        if (sign(rng) < 0) axis[1] = -axis[1];
        const double r = radius(rng), theta = phase(rng);
        // The concyclicity defect of the free representative's neighborhood is
        // quadratic in the radius of the third axis orbit.
        auto defect = [&](double x) {
            auto a = axis;
            a[2] = x;
            const auto pos = o4_positions(orbits, a, r, theta);
            return incircle(pos[nb[0]], pos[nb[1]], pos[nb[2]], pos[nb[3]]);
        };
        const double f0 = defect(0.0), f1 = defect(1.0), fm = defect(-1.0);
        const double qa = (f1 + fm) / 2.0 - f0, qb = (f1 - fm) / 2.0, qc = f0;
        std::vector<double> roots;
        if (std::fabs(qa) < 1e-14) {
            if (std::fabs(qb) > 1e-14) roots.push_back(-qc / qb);
        } else {
            const double disc = qb * qb - 4 * qa * qc;
            if (disc < 0) continue;
            const double sq = std::sqrt(disc);
            const double q = -0.5 * (qb + (qb >= 0 ? sq : -sq));
            roots.push_back(q / qa);
            if (q != 0) roots.push_back(qc / q);
        }
        for (double root : roots) {
            if (!std::isfinite(root) || std::fabs(root) < 0.2 || std::fabs(root) > 5.0) continue;
            auto a = axis;
            a[2] = root;
            auto pos = o4_positions(orbits, a, r, theta);
            double scale = 0;
            for (const auto& p : pos) scale = std::max(scale, std::hypot(p.x, p.y));
            for (auto& p : pos) p = {p.x / scale, p.y / scale};
            try {
                v_construction_circles<double>(g, pos, {}, kDefaultFloatTolerance);
            } catch (const Error&) {
                continue;
            }
            O4Layout layout;
            layout.coords = std::move(pos);
            layout.axis_radii[0] = axis[0] / scale;
            layout.axis_radii[1] = axis[1] / scale;
            layout.axis_radii[2] = root / scale;
            layout.free_radius = r / scale;
            layout.free_phase = theta;
            layout.solved_radius = root / scale;
            return layout;
        }
    }
    throw Error(ErrorKind::NotConcyclic, "no concyclic D7 layout found within the attempt budget");
}

template <class T>
nlohmann::json to_json(const PointCircleConfigurationT<T>& pc) {
    using nlohmann::json;
    const auto& s = pc.structure;
    json points = json::array(), circles = json::array();
    for (int p = 0; p < s.point_count(); ++p)
        points.push_back({{"label", s.point_labels()[p]}, {"x", scalar_json(pc.points[p].x)}, {"y", scalar_json(pc.points[p].y)}});
    for (int b = 0; b < s.block_count(); ++b) {
        json on = json::array();
        for (int p : s.points_of(b)) on.push_back(s.point_labels()[p]);
        const auto& c = pc.circles[b];
        circles.push_back({{"label", s.block_labels()[b]},
                           {"center", {scalar_json(c.center.x), scalar_json(c.center.y)}},
                           {"r2", scalar_json(c.r2)},
                           {"points", on}});
    }
    return {{"mode", Scalar<T>::mode}, {"points", points}, {"circles", circles}};
}

template <class T>
nlohmann::json to_json(const PointLineConfigurationT<T>& pc) {
    using nlohmann::json;
    const auto& s = pc.structure;
    json points = json::array(), lines = json::array();
    for (int p = 0; p < s.point_count(); ++p)
        points.push_back({{"label", s.point_labels()[p]}, {"x", scalar_json(pc.points[p].x)}, {"y", scalar_json(pc.points[p].y)}});
    for (int b = 0; b < s.block_count(); ++b) {
        json on = json::array();
        for (int p : s.points_of(b)) on.push_back(s.point_labels()[p]);
        const auto& l = pc.lines[b];
        lines.push_back({{"label", s.block_labels()[b]}, {"coeffs", {scalar_json(l.a), scalar_json(l.b), scalar_json(l.c)}}, {"points", on}});
    }
    return {{"mode", Scalar<T>::mode}, {"points", points}, {"lines", lines}};
}

template <class T>
std::string to_svg(const PointCircleConfigurationT<T>& pc, int size, const std::vector<int>& point_orbits) {
    BoundingBox box;
    for (const auto& c : pc.circles) {
        const double x = Scalar<T>::to_double(c.center.x), y = Scalar<T>::to_double(c.center.y);
        const double r = std::sqrt(Scalar<T>::to_double(c.r2));
        box.include(x - r, y - r);
        box.include(x + r, y + r);
    }
    for (const auto& p : pc.points) box.include(Scalar<T>::to_double(p.x), Scalar<T>::to_double(p.y));
    SvgCanvas canvas(box, size);
    for (std::size_t b = 0; b < pc.circles.size(); ++b) {
        const auto& c = pc.circles[b];
        const int orbit = point_orbits.empty() ? static_cast<int>(b) : point_orbits[b];
        canvas.circle(Scalar<T>::to_double(c.center.x), Scalar<T>::to_double(c.center.y), std::sqrt(Scalar<T>::to_double(c.r2)),
                      palette_color(orbit), 0.6);
    }
    for (std::size_t p = 0; p < pc.points.size(); ++p) {
        const int orbit = point_orbits.empty() ? 9 : point_orbits[p];
        canvas.dot(Scalar<T>::to_double(pc.points[p].x), Scalar<T>::to_double(pc.points[p].y), 3.0,
                   point_orbits.empty() ? "#000000" : palette_color(orbit));
    }
    return canvas.str();
}

PlanarConfiguration to_planar(const PointLineConfigurationT<Rat>& pc) {
    PlanarConfiguration out;
    for (const auto& p : pc.points) out.points.push_back({p.x, p.y, Rat(1)});
    for (const auto& l : pc.lines) out.lines.push_back({l.a, l.b, l.c});
    out.structure = pc.structure;
    return out;
}

#define DCDKIT_EUCLID_INSTANTIATE(T)                                                                                    \
    template void certify_lines<T>(const std::vector<Line2T<T>>&, double);                                              \
    template WallaceReportT<T> steiner_quadrilateral<T>(const std::array<Line2T<T>, 4>&, double);                       \
    template Construction2ResultT<T> construction2_report<T>(const std::vector<Line2T<T>>&, double);                    \
    template PointCircleResultT<T> point_circle_wallace_report<T>(const std::vector<Line2T<T>>&, double);               \
    template PointCircleResultT<T> point_circle_centers_report<T>(const std::vector<Line2T<T>>&, double);               \
    template PointCircleConfigurationT<T> v_construction_circles<T>(const Graph&, const std::vector<Point2T<T>>&,       \
                                                                    const std::vector<std::string>&, double);           \
    template nlohmann::json to_json<T>(const PointCircleConfigurationT<T>&);                                            \
    template nlohmann::json to_json<T>(const PointLineConfigurationT<T>&);                                              \
    template std::string to_svg<T>(const PointCircleConfigurationT<T>&, int, const std::vector<int>&);

DCDKIT_EUCLID_INSTANTIATE(Rat)
DCDKIT_EUCLID_INSTANTIATE(double)

#undef DCDKIT_EUCLID_INSTANTIATE

}  // namespace dcdkit
