#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dcdkit/error.hpp"
#include "dcdkit/graph.hpp"
#include "dcdkit/incidence.hpp"
#include "dcdkit/projgeom.hpp"
#include "dcdkit/rational.hpp"

namespace dcdkit {

// Scalar policy: exact rationals compare with zero exactly, doubles within a
// tolerance that is meant for drawings normalized to unit scale.
template <class T>
struct Scalar;

template <>
struct Scalar<Rat> {
    static bool zero(const Rat& x, double) { return sgn(x) == 0; }
    static double to_double(const Rat& x) { return x.get_d(); }
    static constexpr const char* mode = "exact";
};

template <>
struct Scalar<double> {
    static bool zero(double x, double tol) { return std::fabs(x) <= tol; }
    static double to_double(double x) { return x; }
    static constexpr const char* mode = "float";
};

constexpr double kDefaultFloatTolerance = 1e-9;

template <class T>
struct Point2T {
    T x{}, y{};
    bool operator==(const Point2T&) const = default;
};

/// a x + b y + c = 0.
template <class T>
struct Line2T {
    T a{}, b{}, c{};
};

template <class T>
struct CircleT {
    Point2T<T> center;
    T r2{};
};

using Point2 = Point2T<Rat>;
using Line2 = Line2T<Rat>;
using Circle = CircleT<Rat>;
using Point2d = Point2T<double>;
using Line2d = Line2T<double>;
using Circled = CircleT<double>;

/// Exact lines are scaled so the first nonzero of (a, b) is 1; float lines
/// get a unit normal with a > 0, or b > 0 when a vanishes.
template <class T>
Line2T<T> normalized_line(T a, T b, T c, double tol = 0) {
    if (Scalar<T>::zero(a, tol) && Scalar<T>::zero(b, tol)) throw Error(ErrorKind::InvalidArgument, "line has no direction");
    if constexpr (std::is_same_v<T, Rat>) {
        const T lead = sgn(a) == 0 ? b : a;
        return {a / lead, b / lead, c / lead};
    } else {
        double norm = std::hypot(a, b);
        if (a < -tol || (std::fabs(a) <= tol && b < 0)) norm = -norm;
        return {a / norm, b / norm, c / norm};
    }
}

template <class T>
Line2T<T> line_through(const Point2T<T>& p, const Point2T<T>& q, double tol = 0) {
    return normalized_line<T>(p.y - q.y, q.x - p.x, p.x * q.y - q.x * p.y, tol);
}

template <class T>
std::optional<Point2T<T>> intersect(const Line2T<T>& l, const Line2T<T>& m, double tol = 0) {
    const T det = l.a * m.b - l.b * m.a;
    if (Scalar<T>::zero(det, tol)) return std::nullopt;
    return Point2T<T>{(l.b * m.c - l.c * m.b) / det, (l.c * m.a - l.a * m.c) / det};
}

template <class T>
T cross(const Point2T<T>& o, const Point2T<T>& p, const Point2T<T>& q) {
    return (p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x);
}

template <class T>
T squared_distance(const Point2T<T>& p, const Point2T<T>& q) {
    return (p.x - q.x) * (p.x - q.x) + (p.y - q.y) * (p.y - q.y);
}

template <class T>
bool same_point(const Point2T<T>& p, const Point2T<T>& q, double tol = 0) {
    if constexpr (std::is_same_v<T, Rat>) return p == q;
    else return std::sqrt(squared_distance(p, q)) <= tol;
}

template <class T>
bool collinear(const Point2T<T>& p, const Point2T<T>& q, const Point2T<T>& r, double tol = 0) {
    const T c = cross(p, q, r);
    if constexpr (std::is_same_v<T, Rat>) return sgn(c) == 0;
    else {
        const double scale = std::max({1.0, squared_distance(p, q), squared_distance(p, r), squared_distance(q, r)});
        return std::fabs(c) <= tol * scale;
    }
}

template <class T>
bool on_line(const Line2T<T>& l, const Point2T<T>& p, double tol = 0) {
    const T v = l.a * p.x + l.b * p.y + l.c;
    if constexpr (std::is_same_v<T, Rat>) return sgn(v) == 0;
    else return std::fabs(v) / std::sqrt(l.a * l.a + l.b * l.b) <= tol;
}

template <class T>
bool on_circle(const CircleT<T>& c, const Point2T<T>& p, double tol = 0) {
    const T v = squared_distance(c.center, p) - c.r2;
    if constexpr (std::is_same_v<T, Rat>) return sgn(v) == 0;
    else return std::fabs(v) <= tol * std::max(1.0, c.r2);
}

template <class T>
bool same_circle(const CircleT<T>& a, const CircleT<T>& b, double tol = 0) {
    if constexpr (std::is_same_v<T, Rat>) return a.center == b.center && a.r2 == b.r2;
    else return same_point(a.center, b.center, tol) && std::fabs(a.r2 - b.r2) <= tol * std::max(1.0, a.r2);
}

template <class T>
bool same_line(const Line2T<T>& l, const Line2T<T>& m, double tol = 0) {
    if constexpr (std::is_same_v<T, Rat>) return l.a == m.a && l.b == m.b && l.c == m.c;
    else return std::fabs(l.a - m.a) <= tol && std::fabs(l.b - m.b) <= tol && std::fabs(l.c - m.c) <= tol;
}

/// Throws CollinearInput.
template <class T>
CircleT<T> circumcircle(const Point2T<T>& p, const Point2T<T>& q, const Point2T<T>& r, double tol = 0) {
    if (collinear(p, q, r, tol)) throw Error(ErrorKind::CollinearInput, "circumcircle of collinear points");
    // Perpendicular bisectors: 2(q-p).X = |q|^2-|p|^2, 2(r-p).X = |r|^2-|p|^2.
    const T a1 = 2 * (q.x - p.x), b1 = 2 * (q.y - p.y);
    const T c1 = q.x * q.x + q.y * q.y - p.x * p.x - p.y * p.y;
    const T a2 = 2 * (r.x - p.x), b2 = 2 * (r.y - p.y);
    const T c2 = r.x * r.x + r.y * r.y - p.x * p.x - p.y * p.y;
    const T det = a1 * b2 - a2 * b1;
    Point2T<T> center{(c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det};
    return {center, squared_distance(center, p)};
}

/// Throws CollinearInput.
template <class T>
Point2T<T> orthocenter(const Point2T<T>& p, const Point2T<T>& q, const Point2T<T>& r, double tol = 0) {
    if (collinear(p, q, r, tol)) throw Error(ErrorKind::CollinearInput, "orthocenter of collinear points");
    // Altitudes: (r-q).X = (r-q).p and (r-p).X = (r-p).q.
    const T a1 = r.x - q.x, b1 = r.y - q.y, c1 = a1 * p.x + b1 * p.y;
    const T a2 = r.x - p.x, b2 = r.y - p.y, c2 = a2 * q.x + b2 * q.y;
    const T det = a1 * b2 - a2 * b1;
    return {(c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det};
}

struct ConcyclicResult {
    bool holds = false;
    bool collinear = false;  ///< all points on one line, the circle of infinite radius
    explicit operator bool() const { return holds; }
};

template <class T>
ConcyclicResult concyclic(const std::vector<Point2T<T>>& ps, double tol = 0) {
    const int n = static_cast<int>(ps.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                if (collinear(ps[i], ps[j], ps[k], tol)) continue;
                const auto c = circumcircle(ps[i], ps[j], ps[k], tol);
                for (const auto& p : ps)
                    if (!on_circle(c, p, tol)) return {false, false};
                return {true, false};
            }
    return {true, true};
}

/// Four lines, pairwise non-parallel with no three concurrent.
template <class T>
struct WallaceReportT {
    std::array<Line2T<T>, 4> lines;
    std::array<std::array<Point2T<T>, 3>, 4> triangles;  ///< triangle t omits line 3-t (colex 3-subsets)
    std::array<CircleT<T>, 4> circumcircles;
    Point2T<T> wallace_point;
    CircleT<T> centers_circle;
    std::array<Point2T<T>, 4> orthocenters;
    Line2T<T> orthocenter_line;
    bool circles_concurrent = false;
    bool centers_concyclic = false;
    bool orthocenters_collinear = false;
    bool holds() const { return circles_concurrent && centers_concyclic && orthocenters_collinear; }
};

using WallaceReport = WallaceReportT<Rat>;

/// Throws DegenerateArrangement.
template <class T>
WallaceReportT<T> steiner_quadrilateral(const std::array<Line2T<T>, 4>& ls, double tol = 0);

// Point-line or point-circle structures carry subset labels as produced by
// the constructions below; the abstract structure is verified to be exactly
// subset containment.
template <class T>
struct PointLineConfigurationT {
    std::vector<Point2T<T>> points;
    std::vector<Line2T<T>> lines;
    IncidenceStructure structure;
};

template <class T>
struct PointCircleConfigurationT {
    std::vector<Point2T<T>> points;
    std::vector<CircleT<T>> circles;
    IncidenceStructure structure;
};

using PointCircleConfiguration = PointCircleConfigurationT<Rat>;
using PointCircleConfigurationd = PointCircleConfigurationT<double>;

/// Geometric defects found when checking a construction against its
/// intended incidence structure.
struct CoincidenceReport {
    std::vector<std::pair<std::string, std::string>> coincident_points;
    std::vector<std::pair<std::string, std::string>> coincident_blocks;
    std::vector<std::pair<std::string, std::string>> extra_incidences;    ///< (point, block)
    std::vector<std::pair<std::string, std::string>> missing_incidences;  ///< (point, block)
    std::vector<std::string> degenerate;                                  ///< undefined objects
    bool clean() const {
        return coincident_points.empty() && coincident_blocks.empty() && extra_incidences.empty() &&
               missing_incidences.empty() && degenerate.empty();
    }
    std::size_t size() const {
        return coincident_points.size() + coincident_blocks.size() + extra_incidences.size() + missing_incidences.size() +
               degenerate.size();
    }
};

template <class T>
struct Construction2ResultT {
    PointLineConfigurationT<T> configuration;
    CoincidenceReport report;
};

/// Orthocenters of the 35 triangles (3-subsets) against the 35 orthocenter
/// lines (4-subsets). Throws DegenerateArrangement on parallel or concurrent
/// input; geometric defects are collected in the report.
template <class T>
Construction2ResultT<T> construction2_report(const std::vector<Line2T<T>>& ls, double tol = 0);

/// Exact construction; throws SpuriousIncidence when the report is not clean.
PointLineConfigurationT<Rat> construction2(const std::vector<Line2>& ls);

template <class T>
struct PointCircleResultT {
    PointCircleConfigurationT<T> configuration;
    CoincidenceReport report;
};

/// Wallace points (4-subsets) on circumcircles (3-subsets).
template <class T>
PointCircleResultT<T> point_circle_wallace_report(const std::vector<Line2T<T>>& ls, double tol = 0);
/// Circumcenters (3-subsets) on centers circles (4-subsets).
template <class T>
PointCircleResultT<T> point_circle_centers_report(const std::vector<Line2T<T>>& ls, double tol = 0);

/// Exact variants; throw SpuriousIncidence when the report is not clean.
PointCircleConfiguration point_circle_wallace(const std::vector<Line2>& ls);
PointCircleConfiguration point_circle_centers(const std::vector<Line2>& ls);

/// Lines y = s x + t with s, t rational of the form a/b, |a| <= 10 b <= 100,
/// certified pairwise non-parallel with no three concurrent.
std::vector<Line2> random_certified_lines(int count, std::uint64_t seed, int retry_budget = 1000);

/// Throws DegenerateArrangement if two lines are parallel or three concurrent.
template <class T>
void certify_lines(const std::vector<Line2T<T>>& ls, double tol = 0);

/// Tangents to the unit circle at the vertices of a regular heptagon.
std::vector<Line2d> d7_heptagon_lines();

/// V-construction drawn with circles: each vertex neighborhood must be
/// concyclic. Throws InvalidArgument for neighborhoods of fewer than three
/// vertices, CollinearNeighborhood, NotConcyclic, and SpuriousIncidence when a
/// point lies on a circle it does not belong to.
template <class T>
PointCircleConfigurationT<T> v_construction_circles(const Graph& g, const std::vector<Point2T<T>>& coords,
                                                    const std::vector<std::string>& labels = {}, double tol = 0);

/// D7-symmetric layout of O4 (3-subsets of Z7 in colex order) with every
/// neighborhood concyclic. Radii of the three reflection-invariant orbits are
/// free parameters; the fourth-orbit radius solves the remaining concyclicity
/// equation.
struct O4Layout {
    std::vector<Point2d> coords;
    double axis_radii[3] = {0, 0, 0};
    double free_radius = 0;
    double free_phase = 0;
    double solved_radius = 0;
};
O4Layout o4_d7_layout(std::uint64_t seed = 1, int attempts = 200);

template <class T>
nlohmann::json to_json(const PointCircleConfigurationT<T>& pc);
template <class T>
nlohmann::json to_json(const PointLineConfigurationT<T>& pc);
template <class T>
std::string to_svg(const PointCircleConfigurationT<T>& pc, int size = 800, const std::vector<int>& point_orbits = {});

/// Exact point-line configuration in homogeneous form, for the collinearity scan.
PlanarConfiguration to_planar(const PointLineConfigurationT<Rat>& pc);

}  // namespace dcdkit
