#include "dcdkit/projgeom.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "dcdkit/error.hpp"
#include "dcdkit/svg.hpp"

namespace dcdkit {

namespace {

constexpr int kCoeffBound = 20;

RatVec random_integer_vector(std::mt19937_64& rng, int length) {
    std::uniform_int_distribution<int> coeff(-kCoeffBound, kCoeffBound);
    RatVec v(length);
    do {
        for (auto& x : v) x = coeff(rng);
    } while (is_zero_vector(v));
    return v;
}

RatMat coefficient_rows(const std::vector<Hyperplane>& hs) {
    RatMat m;
    for (const auto& h : hs) m.push_back(h.coeffs);
    return m;
}

std::string subset_name(const std::vector<int>& idx) {
    std::string s = "{";
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
    return s + "}";
}

using IntVec = std::vector<BigInt>;

BigInt int_det3(const IntVec& a, const IntVec& b, const IntVec& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

IntVec int_cross(const IntVec& u, const IntVec& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

IntVec primitive(IntVec v) {
    BigInt g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) return v;
    for (const auto& x : v)
        if (sgn(x) != 0) {
            if (sgn(x) < 0) g = -g;
            break;
        }
    for (auto& x : v) x /= g;
    return v;
}

// Coordinates of v in the basis formed by the rows of `basis` (full rank).
struct BasisSolver {
    RatMat inv;
    explicit BasisSolver(const RatMat& basis) {
        const int n = static_cast<int>(basis.size());
        RatMat columns(n, RatVec(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) columns[j][i] = basis[i][j];
        inv = inverse(columns);
    }
    RatVec solve(const RatVec& v) const { return multiply(inv, v); }
};

}  // namespace

Hyperplane make_hyperplane(RatVec coeffs) {
    if (is_zero_vector(coeffs)) throw Error(ErrorKind::InvalidArgument, "hyperplane covector is zero");
    return {normalize_projective(std::move(coeffs))};
}

Flat span(const RatMat& vectors, int ambient) {
    Flat f;
    f.ambient = ambient;
    if (!vectors.empty()) f.basis = rref(vectors).rows;
    return f;
}

bool flat_contains(const Flat& outer, const RatVec& v) {
    RatMat m = outer.basis;
    m.push_back(v);
    return rank(m) == outer.rank();
}

bool flat_contains(const Flat& outer, const Flat& inner) {
    for (const auto& v : inner.basis)
        if (!flat_contains(outer, v)) return false;
    return true;
}

GeneralPositionCertificate certify_general_position(const std::vector<Hyperplane>& hs, int d) {
    const int m = static_cast<int>(hs.size());
    if (d < 1 || m < d + 1) throw Error(ErrorKind::InvalidArgument, "need at least d+1 hyperplanes");
    if (m > 63) throw Error(ErrorKind::InvalidArgument, "too many hyperplanes");
    GeneralPositionCertificate cert;
    cert.dimension = d;
    for (SubsetMask s : k_subsets(m, d + 1)) {
        RatMat rows;
        const auto idx = subset_elements(s);
        for (int i : idx) {
            if (static_cast<int>(hs[i].coeffs.size()) != d + 1) throw Error(ErrorKind::InvalidArgument, "covector length mismatch");
            rows.push_back(hs[i].coeffs);
        }
        if (rank(rows) != d + 1) throw Error(ErrorKind::CertificateFailed, "hyperplanes " + subset_name(idx) + " are dependent");
        ++cert.subsets_checked;
    }
    return cert;
}

Arrangement random_arrangement(int d, int m, std::uint64_t seed, int retry_budget) {
    if (d < 1 || m < d + 1) throw Error(ErrorKind::InvalidArgument, "random_arrangement needs m >= d+1");
    std::mt19937_64 rng(seed);
    for (int attempt = 1; attempt <= retry_budget; ++attempt) {
        std::vector<Hyperplane> hs;
        for (int i = 0; i < m; ++i) hs.push_back(make_hyperplane(random_integer_vector(rng, d + 1)));
        try {
            auto cert = certify_general_position(hs, d);
            return {d, seed, attempt, std::move(hs), cert};
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::CertificateFailed) throw;
        }
    }
    throw Error(ErrorKind::CertificateFailed, "no arrangement in general position within the retry budget");
}

Flat meet(const std::vector<Hyperplane>& hs, bool expect_general) {
    if (hs.empty()) throw Error(ErrorKind::InvalidArgument, "meet of an empty set");
    const int ambient = static_cast<int>(hs.front().coeffs.size());
    Flat f;
    f.ambient = ambient;
    f.basis = nullspace(coefficient_rows(hs), ambient);
    if (expect_general) {
        const int expected = std::max(0, ambient - static_cast<int>(hs.size()));
        if (f.rank() != expected) {
            throw Error(ErrorKind::UnexpectedRank,
                        "meet has rank " + std::to_string(f.rank()) + ", expected " + std::to_string(expected));
        }
    }
    for (auto& v : f.basis) v = normalize_projective(std::move(v));
    return f;
}

Flat meet(const Arrangement& a, SubsetMask subset) {
    std::vector<Hyperplane> hs;
    for (int i : subset_elements(subset)) {
        if (i >= static_cast<int>(a.hyperplanes.size())) throw Error(ErrorKind::InvalidArgument, "hyperplane index out of range");
        hs.push_back(a.hyperplanes[i]);
    }
    return meet(hs);
}

SpatialRealization realize_dcd(int n, const Arrangement& a) {
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "realize_dcd needs n >= 2");
    if (a.dimension != n || static_cast<int>(a.hyperplanes.size()) != 2 * n - 1) {
        throw Error(ErrorKind::InvalidArgument, "arrangement must have 2n-1 hyperplanes in dimension n");
    }
    const int ground = 2 * n - 1;
    SpatialRealization r;
    r.n = n;
    r.dimension = n;
    r.point_subsets = k_subsets(ground, n);
    r.line_subsets = k_subsets(ground, n - 1);
    for (SubsetMask s : r.point_subsets) r.points.push_back(meet(a, s));
    for (SubsetMask s : r.line_subsets) r.lines.push_back(meet(a, s));
    std::vector<std::string> pl, ll;
    std::vector<Flag> flags;
    for (SubsetMask s : r.point_subsets) pl.push_back(subset_label(s, ground));
    for (SubsetMask s : r.line_subsets) ll.push_back(subset_label(s, ground));
    for (int p = 0; p < static_cast<int>(r.points.size()); ++p) {
        for (int l = 0; l < static_cast<int>(r.lines.size()); ++l) {
            const bool expected = subset_contains(r.point_subsets[p], r.line_subsets[l]);
            const bool found = flat_contains(r.lines[l], r.points[p]);
            if (expected != found) {
                throw Error(ErrorKind::IncidenceMismatch, "point " + pl[p] + (found ? " lies on" : " misses") + " line " + ll[l]);
            }
            if (found) flags.emplace_back(p, l);
        }
    }
    r.verified_incidences = flags.size();
    r.structure = IncidenceStructure(std::move(pl), std::move(ll), std::move(flags));
    return r;
}

int PlanarConfiguration::point_by_label(const std::string& label) const {
    const auto i = structure.point_index(label);
    if (!i) throw Error(ErrorKind::InvalidArgument, "no point labelled " + label);
    return *i;
}

int PlanarConfiguration::line_by_label(const std::string& label) const {
    const auto i = structure.block_index(label);
    if (!i) throw Error(ErrorKind::InvalidArgument, "no line labelled " + label);
    return *i;
}

std::size_t verify_planar_incidences(const PlanarConfiguration& pc) {
    const auto& s = pc.structure;
    std::size_t count = 0;
    for (int p = 0; p < s.point_count(); ++p)
        for (int l = 0; l < s.block_count(); ++l) {
            const bool on = sgn(dot(pc.points[p], pc.lines[l])) == 0;
            if (on != s.incident(p, l)) {
                throw Error(ErrorKind::IncidenceMismatch, "point " + s.point_labels()[p] + (on ? " lies on" : " misses") + " line " +
                                                              s.block_labels()[l]);
            }
            count += on ? 1 : 0;
        }
    return count;
}

CollinearityScan scan_collinear_triples(const PlanarConfiguration& pc) {
    CollinearityScan scan;
    const int n = static_cast<int>(pc.points.size());
    std::vector<IntVec> pts;
    for (const auto& p : pc.points) pts.push_back(primitive_integer_vector(p));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (pts[i] == pts[j]) scan.coincident_points.emplace_back(i, j);
    std::map<IntVec, std::set<int>> by_line;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (pts[i] == pts[j]) continue;
            IntVec through;
            bool have_line = false;
            for (int k = j + 1; k < n; ++k) {
                ++scan.triples_checked;
                if (sgn(int_det3(pts[i], pts[j], pts[k])) != 0) continue;
                ++scan.collinear_triples;
                if (!have_line) {
                    through = primitive(int_cross(pts[i], pts[j]));
                    have_line = true;
                }
                auto& members = by_line[through];
                members.insert({i, j, k});
            }
        }
    std::set<std::vector<int>> expected;
    for (int l = 0; l < pc.structure.block_count(); ++l) {
        const auto& on = pc.structure.points_of(l);
        if (on.size() >= 3) expected.insert(on);
    }
    for (const auto& [line, members] : by_line) {
        std::vector<int> set(members.begin(), members.end());
        if (!expected.count(set)) scan.unexpected_sets.push_back(set);
        scan.collinear_sets.push_back(std::move(set));
    }
    std::sort(scan.collinear_sets.begin(), scan.collinear_sets.end());
    std::sort(scan.unexpected_sets.begin(), scan.unexpected_sets.end());
    return scan;
}

Flat coordinate_image_plane(const Flat& center) {
    const int ambient = center.ambient;
    for (SubsetMask s : k_subsets(ambient, 3)) {
        RatMat rows = center.basis;
        RatMat plane;
        for (int i : subset_elements(s)) {
            RatVec e(ambient, Rat(0));
            e[i] = 1;
            rows.push_back(e);
            plane.push_back(e);
        }
        if (rank(rows) == ambient) return span(plane, ambient);
    }
    throw Error(ErrorKind::InvalidArgument, "center has no complementary coordinate plane");
}

PlanarConfiguration project_to_plane(const SpatialRealization& r, const Flat& center, const Flat& image_plane) {
    const int ambient = r.dimension + 1;
    if (center.rank() != ambient - 3 || image_plane.rank() != 3) {
        throw Error(ErrorKind::InvalidArgument, "center must have rank d-2 and the image plane rank 3");
    }
    RatMat basis = center.basis;
    for (const auto& e : image_plane.basis) basis.push_back(e);
    if (rank(basis) != ambient) throw Error(ErrorKind::InvalidArgument, "center and image plane are not complementary");
    const BasisSolver solver(basis);
    const int offset = center.rank();
    auto image = [&](const RatVec& v) {
        const RatVec c = solver.solve(v);
        return RatVec(c.begin() + offset, c.end());
    };
    PlanarConfiguration pc;
    pc.structure = r.structure;
    for (std::size_t i = 0; i < r.points.size(); ++i) {
        RatVec q = image(r.points[i].basis.front());
        if (is_zero_vector(q)) {
            throw Error(ErrorKind::CenterHitsConfiguration, "center contains point " + r.structure.point_labels()[i]);
        }
        pc.points.push_back(normalize_projective(std::move(q)));
    }
    for (std::size_t i = 0; i < r.lines.size(); ++i) {
        const RatVec a = image(r.lines[i].basis[0]);
        const RatVec b = image(r.lines[i].basis[1]);
        RatVec l = cross3(a, b);
        if (is_zero_vector(l)) {
            throw Error(ErrorKind::CenterHitsConfiguration, "center meets line " + r.structure.block_labels()[i]);
        }
        pc.lines.push_back(normalize_projective(std::move(l)));
    }
    verify_planar_incidences(pc);
    const auto scan = scan_collinear_triples(pc);
    if (!scan.clean()) {
        throw Error(ErrorKind::SpuriousIncidence, std::to_string(scan.unexpected_sets.size()) + " unexpected collinear sets, " +
                                                      std::to_string(scan.coincident_points.size()) + " coincident point pairs");
    }
    return pc;
}

ProjectionResult find_projection(const SpatialRealization& r, std::uint64_t seed, int retry_budget) {
    const int ambient = r.dimension + 1;
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (int attempt = 1; attempt <= retry_budget; ++attempt) {
        RatMat gens;
        for (int i = 0; i < ambient - 3; ++i) gens.push_back(random_integer_vector(rng, ambient));
        const Flat center = span(gens, ambient);
        if (center.rank() != ambient - 3) continue;
        try {
            const Flat plane = coordinate_image_plane(center);
            auto pc = project_to_plane(r, center, plane);
            const bool finite = std::all_of(pc.points.begin(), pc.points.end(), [](const RatVec& p) { return sgn(p[2]) != 0; });
            if (!finite) continue;
            auto scan = scan_collinear_triples(pc);
            return {std::move(pc), {center, plane}, std::move(scan), attempt};
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::CenterHitsConfiguration && e.kind() != ErrorKind::SpuriousIncidence &&
                e.kind() != ErrorKind::InvalidArgument) {
                throw;
            }
        }
    }
    throw Error(ErrorKind::SpuriousIncidence, "no clean projection within the retry budget");
}

PlanarConfiguration cayley_section(std::uint64_t seed, int retry_budget) {
    std::mt19937_64 rng(seed);
    const auto pairs = k_subsets(5, 2);
    const auto triples = k_subsets(5, 3);
    for (int attempt = 0; attempt < retry_budget; ++attempt) {
        RatMat pts;
        for (int i = 0; i < 5; ++i) pts.push_back(random_integer_vector(rng, 4));
        // Five points of P^3 in general position: every four independent.
        bool general = true;
        for (SubsetMask s : k_subsets(5, 4)) {
            RatMat rows;
            for (int i : subset_elements(s)) rows.push_back(pts[i]);
            general = general && rank(rows) == 4;
        }
        if (!general) continue;
        const RatVec plane = random_integer_vector(rng, 4);
        // Plane coordinates: a basis of the plane completed by a vector off it.
        RatMat basis = nullspace({plane}, 4);
        RatMat full = basis;
        for (int i = 0; i < 4; ++i) {
            RatVec e(4, Rat(0));
            e[i] = 1;
            if (sgn(dot(plane, e)) != 0) {
                full.push_back(e);
                break;
            }
        }
        const BasisSolver solver(full);
        auto in_plane = [&](const RatVec& v) {
            const RatVec c = solver.solve(v);
            return RatVec(c.begin(), c.begin() + 3);
        };
        PlanarConfiguration pc;
        bool ok = true;
        std::vector<std::string> pl, ll;
        for (SubsetMask s : pairs) {
            const auto ij = subset_elements(s);
            // Point of the line P_i P_j on the plane: (u.P_j) P_i - (u.P_i) P_j.
            const Rat a = dot(plane, pts[ij[1]]);
            const Rat b = dot(plane, pts[ij[0]]);
            RatVec x(4);
            for (int t = 0; t < 4; ++t) x[t] = a * pts[ij[0]][t] - b * pts[ij[1]][t];
            if (is_zero_vector(x)) {
                ok = false;
                break;
            }
            pc.points.push_back(normalize_projective(in_plane(x)));
            pl.push_back(subset_label(subset_complement(s, 5), 5));
        }
        if (!ok) continue;
        std::vector<Flag> flags;
        for (int t = 0; t < static_cast<int>(triples.size()); ++t) {
            const auto ijk = subset_elements(triples[t]);
            std::vector<int> on;
            for (int p = 0; p < static_cast<int>(pairs.size()); ++p)
                if (subset_contains(triples[t], pairs[p])) on.push_back(p);
            RatVec l = cross3(pc.points[on[0]], pc.points[on[1]]);
            if (is_zero_vector(l)) {
                ok = false;
                break;
            }
            pc.lines.push_back(normalize_projective(std::move(l)));
            ll.push_back(subset_label(subset_complement(triples[t], 5), 5));
            for (int p : on) flags.emplace_back(p, t);
        }
        if (!ok) continue;
        pc.structure = IncidenceStructure(pl, ll, flags);
        // Reorder into the colex order of the DCD(3) labels.
        const auto dcd_points = k_subsets(5, 3);
        const auto dcd_lines = k_subsets(5, 2);
        PlanarConfiguration sorted;
        std::vector<int> point_pos, line_pos;
        for (SubsetMask s : dcd_points) point_pos.push_back(pc.point_by_label(subset_label(s, 5)));
        for (SubsetMask s : dcd_lines) line_pos.push_back(pc.line_by_label(subset_label(s, 5)));
        std::vector<int> point_rank(point_pos.size()), line_rank(line_pos.size());
        std::vector<std::string> spl, sll;
        for (std::size_t i = 0; i < point_pos.size(); ++i) {
            point_rank[point_pos[i]] = static_cast<int>(i);
            sorted.points.push_back(pc.points[point_pos[i]]);
            spl.push_back(pl[point_pos[i]]);
        }
        for (std::size_t i = 0; i < line_pos.size(); ++i) {
            line_rank[line_pos[i]] = static_cast<int>(i);
            sorted.lines.push_back(pc.lines[line_pos[i]]);
            sll.push_back(ll[line_pos[i]]);
        }
        std::vector<Flag> sflags;
        for (const auto& [p, l] : flags) sflags.emplace_back(point_rank[p], line_rank[l]);
        sorted.structure = IncidenceStructure(spl, sll, sflags);
        try {
            verify_planar_incidences(sorted);
        } catch (const Error&) {
            continue;
        }
        if (!scan_collinear_triples(sorted).clean()) continue;
        return sorted;
    }
    throw Error(ErrorKind::SpuriousIncidence, "no clean section within the retry budget");
}

PlanarConfiguration restrict_configuration(const PlanarConfiguration& pc,
                                           const std::function<bool(const std::string&)>& keep_point,
                                           const std::function<bool(const std::string&)>& keep_line) {
    const auto& s = pc.structure;
    std::vector<int> point_new(s.point_count(), -1), line_new(s.block_count(), -1);
    PlanarConfiguration out;
    std::vector<std::string> pl, ll;
    for (int p = 0; p < s.point_count(); ++p)
        if (keep_point(s.point_labels()[p])) {
            point_new[p] = static_cast<int>(pl.size());
            pl.push_back(s.point_labels()[p]);
            out.points.push_back(pc.points[p]);
        }
    for (int l = 0; l < s.block_count(); ++l)
        if (keep_line(s.block_labels()[l])) {
            line_new[l] = static_cast<int>(ll.size());
            ll.push_back(s.block_labels()[l]);
            out.lines.push_back(pc.lines[l]);
        }
    std::vector<Flag> flags;
    for (const auto& [p, l] : s.incidences())
        if (point_new[p] >= 0 && line_new[l] >= 0) flags.emplace_back(point_new[p], line_new[l]);
    out.structure = IncidenceStructure(std::move(pl), std::move(ll), std::move(flags));
    return out;
}

PlanarConfiguration planar_steiner_plucker(const PlanarConfiguration& dcd4) {
    auto has0 = [](const std::string& l) { return l.find('0') != std::string::npos; };
    return restrict_configuration(dcd4, has0, has0);
}

PlanarConfiguration planar_cayley_salmon(const PlanarConfiguration& dcd4) {
    auto no0 = [](const std::string& l) { return l.find('0') == std::string::npos; };
    return restrict_configuration(dcd4, no0, no0);
}

TrianglePerspectivity perspectivity(const std::array<RatVec, 3>& a, const std::array<RatVec, 3>& b) {
    std::array<RatVec, 3> joins, meets;
    for (int i = 0; i < 3; ++i) {
        joins[i] = cross3(a[i], b[i]);
        if (is_zero_vector(joins[i])) throw Error(ErrorKind::IncidenceMismatch, "corresponding vertices coincide");
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        meets[i] = cross3(cross3(a[j], a[k]), cross3(b[j], b[k]));
        if (is_zero_vector(meets[i])) throw Error(ErrorKind::IncidenceMismatch, "corresponding sides coincide");
    }
    if (sgn(det3(joins[0], joins[1], joins[2])) != 0) {
        throw Error(ErrorKind::IncidenceMismatch, "joins of corresponding vertices are not concurrent");
    }
    if (sgn(det3(meets[0], meets[1], meets[2])) != 0) {
        throw Error(ErrorKind::IncidenceMismatch, "meets of corresponding sides are not collinear");
    }
    return {normalize_projective(cross3(joins[0], joins[1])), normalize_projective(cross3(meets[0], meets[1]))};
}

namespace {

const std::array<std::array<int, 2>, 3> kPairs = {{{0, 1}, {0, 2}, {1, 2}}};

std::array<std::string, 3> triangle_labels(char x, bool complement) {
    std::array<std::string, 3> out = {std::string("012") + x, std::string("013") + x, std::string("023") + x};
    if (complement) {
        for (auto& l : out) l = subset_label(subset_complement(parse_subset_label(l, 7), 7), 7);
    }
    return out;
}

}  // namespace

PerspectivityReport verify_perspectivity_instance(const PlanarConfiguration& sp) {
    PerspectivityReport rep;
    std::vector<std::array<RatVec, 3>> tri;
    for (char x : {'4', '5', '6'}) {
        rep.triangles.push_back(triangle_labels(x, false));
        std::array<RatVec, 3> t;
        for (int i = 0; i < 3; ++i) t[i] = sp.points[sp.point_by_label(rep.triangles.back()[i])];
        tri.push_back(t);
    }
    rep.common_label = "0123";
    rep.meeting_label = "0456";
    const RatVec& center = sp.points[sp.point_by_label(rep.common_label)];
    for (const auto& [i, j] : kPairs) {
        rep.pairs.push_back(perspectivity(tri[i], tri[j]));
        if (!proportional(rep.pairs.back().center, center)) {
            throw Error(ErrorKind::IncidenceMismatch, "center of perspectivity differs from point 0123");
        }
    }
    const auto& ax = rep.pairs;
    if (sgn(det3(ax[0].axis, ax[1].axis, ax[2].axis)) != 0) throw Error(ErrorKind::IncidenceMismatch, "axes are not concurrent");
    rep.meeting = normalize_projective(cross3(ax[0].axis, ax[1].axis));
    if (!proportional(rep.meeting, sp.points[sp.point_by_label(rep.meeting_label)])) {
        throw Error(ErrorKind::IncidenceMismatch, "axes meet away from point 0456");
    }
    return rep;
}

PerspectivityReport verify_dual_perspectivity_instance(const PlanarConfiguration& cs) {
    PerspectivityReport rep;
    std::vector<std::array<RatVec, 3>> tri;
    for (char x : {'4', '5', '6'}) {
        rep.triangles.push_back(triangle_labels(x, true));
        std::array<RatVec, 3> sides;
        for (int i = 0; i < 3; ++i) sides[i] = cs.lines[cs.line_by_label(rep.triangles.back()[i])];
        std::array<RatVec, 3> t;
        for (int i = 0; i < 3; ++i) {
            t[i] = normalize_projective(cross3(sides[(i + 1) % 3], sides[(i + 2) % 3]));
            if (is_zero_vector(t[i])) throw Error(ErrorKind::IncidenceMismatch, "trilateral sides coincide");
        }
        tri.push_back(t);
    }
    rep.common_label = "456";
    rep.meeting_label = "123";
    const RatVec& axis = cs.lines[cs.line_by_label(rep.common_label)];
    for (const auto& [i, j] : kPairs) {
        rep.pairs.push_back(perspectivity(tri[i], tri[j]));
        if (!proportional(rep.pairs.back().axis, axis)) {
            throw Error(ErrorKind::IncidenceMismatch, "axis of perspectivity differs from line 456");
        }
    }
    const auto& pr = rep.pairs;
    if (sgn(det3(pr[0].center, pr[1].center, pr[2].center)) != 0) {
        throw Error(ErrorKind::IncidenceMismatch, "centers are not collinear");
    }
    rep.meeting = normalize_projective(cross3(pr[0].center, pr[1].center));
    if (!proportional(rep.meeting, cs.lines[cs.line_by_label(rep.meeting_label)])) {
        throw Error(ErrorKind::IncidenceMismatch, "centers lie off line 123");
    }
    return rep;
}

nlohmann::json to_json(const PlanarConfiguration& pc) {
    using nlohmann::json;
    const auto& s = pc.structure;
    json points = json::array(), lines = json::array();
    for (int p = 0; p < s.point_count(); ++p) {
        json c = json::array();
        for (const auto& x : pc.points[p]) c.push_back(to_string(x));
        points.push_back({{"label", s.point_labels()[p]}, {"coords", c}});
    }
    for (int l = 0; l < s.block_count(); ++l) {
        json c = json::array(), on = json::array();
        for (const auto& x : pc.lines[l]) c.push_back(to_string(x));
        for (int p : s.points_of(l)) on.push_back(s.point_labels()[p]);
        lines.push_back({{"label", s.block_labels()[l]}, {"coeffs", c}, {"points", on}});
    }
    return {{"mode", "exact"}, {"homogeneous", true}, {"points", points}, {"lines", lines}};
}

PlanarConfiguration planar_from_json(const nlohmann::json& j) {
    try {
        PlanarConfiguration pc;
        std::vector<std::string> pl, ll;
        for (const auto& p : j.at("points")) {
            pl.push_back(p.at("label").get<std::string>());
            RatVec v;
            for (const auto& x : p.at("coords")) v.push_back(parse_rat(x.get<std::string>()));
            if (v.size() != 3) throw Error(ErrorKind::ParseError, "point needs three homogeneous coordinates");
            pc.points.push_back(std::move(v));
        }
        std::map<std::string, int> index;
        for (std::size_t i = 0; i < pl.size(); ++i) index[pl[i]] = static_cast<int>(i);
        std::vector<Flag> flags;
        for (const auto& l : j.at("lines")) {
            const int b = static_cast<int>(ll.size());
            ll.push_back(l.at("label").get<std::string>());
            RatVec v;
            for (const auto& x : l.at("coeffs")) v.push_back(parse_rat(x.get<std::string>()));
            if (v.size() != 3) throw Error(ErrorKind::ParseError, "line needs three coefficients");
            pc.lines.push_back(std::move(v));
            for (const auto& p : l.at("points")) {
                const auto it = index.find(p.get<std::string>());
                if (it == index.end()) throw Error(ErrorKind::ParseError, "line references unknown point");
                flags.emplace_back(it->second, b);
            }
        }
        pc.structure = IncidenceStructure(std::move(pl), std::move(ll), std::move(flags));
        return pc;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

std::string to_svg(const PlanarConfiguration& pc, int size) {
    const auto& s = pc.structure;
    std::vector<std::pair<double, double>> xy;
    BoundingBox box;
    for (const auto& p : pc.points) {
        if (sgn(p[2]) == 0) {
            xy.emplace_back(0.0, 0.0);
            continue;
        }
        const double x = Rat(p[0] / p[2]).get_d(), y = Rat(p[1] / p[2]).get_d();
        xy.emplace_back(x, y);
        box.include(x, y);
    }
    SvgCanvas canvas(box, size);
    for (int l = 0; l < s.block_count(); ++l) {
        const auto& on = s.points_of(l);
        if (on.size() < 2) continue;
        // Extreme incident points along the line's direction.
        const auto& a = pc.lines[l];
        const double dx = -a[1].get_d(), dy = a[0].get_d();
        auto key = [&](int p) { return xy[p].first * dx + xy[p].second * dy; };
        const auto [lo, hi] = std::minmax_element(on.begin(), on.end(), [&](int u, int v) { return key(u) < key(v); });
        canvas.segment(xy[*lo].first, xy[*lo].second, xy[*hi].first, xy[*hi].second, palette_color(l), 1.0);
    }
    for (int p = 0; p < s.point_count(); ++p) {
        canvas.dot(xy[p].first, xy[p].second, 3.0, "#000000");
        canvas.label(xy[p].first, xy[p].second, s.point_labels()[p]);
    }
    return canvas.str();
}

}  // namespace dcdkit
