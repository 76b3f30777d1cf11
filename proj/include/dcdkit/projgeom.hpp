#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dcdkit/incidence.hpp"
#include "dcdkit/linalg.hpp"
#include "dcdkit/subsets.hpp"

namespace dcdkit {

/// Covector of length d+1, first nonzero coefficient 1.
struct Hyperplane {
    RatVec coeffs;
};

Hyperplane make_hyperplane(RatVec coeffs);

/// Linear subspace of homogeneous coordinates; rank 1 is a projective point,
/// rank 2 a projective line.
struct Flat {
    RatMat basis;
    int ambient = 0;  ///< d + 1
    int rank() const { return static_cast<int>(basis.size()); }
};

Flat span(const RatMat& vectors, int ambient);
bool flat_contains(const Flat& outer, const RatVec& v);
bool flat_contains(const Flat& outer, const Flat& inner);

struct GeneralPositionCertificate {
    int dimension = 0;
    std::size_t subsets_checked = 0;
};

struct Arrangement {
    int dimension = 0;
    std::uint64_t seed = 0;
    int attempts = 0;
    std::vector<Hyperplane> hyperplanes;
    GeneralPositionCertificate certificate;
};

/// Every (d+1)-subset of the covectors has full rank. Throws CertificateFailed
/// naming the first dependent subset.
GeneralPositionCertificate certify_general_position(const std::vector<Hyperplane>& hs, int d);

/// Integer coefficients uniform in [-20, 20], redrawn until certified.
Arrangement random_arrangement(int d, int m, std::uint64_t seed, int retry_budget = 64);

/// Common zero set of the covectors. When expect_general is set the rank must
/// be max(0, d + 1 - |hs|), otherwise UnexpectedRank.
Flat meet(const std::vector<Hyperplane>& hs, bool expect_general = true);
Flat meet(const Arrangement& a, SubsetMask subset);

// DCD(n) realized by an arrangement of 2n-1 hyperplanes in P^n: the point
// with label S is the meet of the hyperplanes in S, likewise for lines.
struct SpatialRealization {
    int n = 0;
    int dimension = 0;
    std::vector<SubsetMask> point_subsets;
    std::vector<SubsetMask> line_subsets;
    std::vector<Flat> points;
    std::vector<Flat> lines;
    IncidenceStructure structure;
    std::size_t verified_incidences = 0;
};

/// Throws UnexpectedRank or IncidenceMismatch (also for any extra containment).
SpatialRealization realize_dcd(int n, const Arrangement& a);

// Points and lines of the projective plane in homogeneous coordinates.
struct PlanarConfiguration {
    std::vector<RatVec> points;  ///< (x : y : w)
    std::vector<RatVec> lines;   ///< (a : b : c), ax + by + cw = 0
    IncidenceStructure structure;

    int point_by_label(const std::string& label) const;
    int line_by_label(const std::string& label) const;
};

/// Checks point-on-line for exactly the structure's incidences; returns the
/// number verified, throws IncidenceMismatch otherwise.
std::size_t verify_planar_incidences(const PlanarConfiguration& pc);

struct CollinearityScan {
    std::size_t triples_checked = 0;
    std::size_t collinear_triples = 0;
    std::vector<std::vector<int>> collinear_sets;  ///< maximal, each of size >= 3, sorted
    std::vector<std::vector<int>> unexpected_sets; ///< collinear sets not equal to a line's point set
    std::vector<std::pair<int, int>> coincident_points;
    bool clean() const { return unexpected_sets.empty() && coincident_points.empty(); }
};

/// Exhaustive triple scan; the expected collinear sets are the point sets of
/// the lines with at least three points.
CollinearityScan scan_collinear_triples(const PlanarConfiguration& pc);

struct Projection {
    Flat center;
    Flat image_plane;
};

/// Central projection from `center` (rank d-2) onto `image_plane` (rank 3).
/// Throws InvalidArgument when they are not complementary,
/// CenterHitsConfiguration when a point or line meets the center and
/// SpuriousIncidence when the image has collinearities or coincidences
/// beyond the configuration's own.
PlanarConfiguration project_to_plane(const SpatialRealization& r, const Flat& center, const Flat& image_plane);

/// First coordinate subspace of rank 3 complementary to the center.
Flat coordinate_image_plane(const Flat& center);

struct ProjectionResult {
    PlanarConfiguration planar;
    Projection projection;
    CollinearityScan scan;
    int attempts = 0;
};

/// Random centers spanned by integer points until the image is clean and
/// every image point is finite (w != 0).
ProjectionResult find_projection(const SpatialRealization& r, std::uint64_t seed, int retry_budget = 64);

/// DCD(3) as the section of five generic points of P^3 by a generic plane:
/// the join of P_i, P_j gives the point labelled by the complementary triple,
/// the plane through P_i, P_j, P_k the line labelled by the complementary pair.
PlanarConfiguration cayley_section(std::uint64_t seed, int retry_budget = 64);

PlanarConfiguration restrict_configuration(const PlanarConfiguration& pc,
                                           const std::function<bool(const std::string&)>& keep_point,
                                           const std::function<bool(const std::string&)>& keep_line);

/// Points and lines whose labels contain (Steiner-Pluecker) or avoid
/// (Cayley-Salmon) the element 0 of a planar DCD(4).
PlanarConfiguration planar_steiner_plucker(const PlanarConfiguration& dcd4);
PlanarConfiguration planar_cayley_salmon(const PlanarConfiguration& dcd4);

struct TrianglePerspectivity {
    RatVec center;
    RatVec axis;
};

/// Triangles given by vertices, matched by index. Throws IncidenceMismatch
/// unless perspective from a point and from a line.
TrianglePerspectivity perspectivity(const std::array<RatVec, 3>& a, const std::array<RatVec, 3>& b);

struct PerspectivityReport {
    std::vector<std::array<std::string, 3>> triangles;  ///< labels of vertices or sides
    std::vector<TrianglePerspectivity> pairs;           ///< pairs (0,1), (0,2), (1,2)
    std::string common_label;    ///< shared center (resp. axis)
    std::string meeting_label;   ///< concurrency point of the axes (resp. line of the centers)
    RatVec meeting;
};

/// Triangles {012x, 013x, 023x}, x = 4, 5, 6, perspective from 0123 with
/// axes concurrent at 0456. Throws IncidenceMismatch.
PerspectivityReport verify_perspectivity_instance(const PlanarConfiguration& sp);

/// Dual statement on the Cayley-Salmon part: trilaterals with sides the
/// complements of 012x, 013x, 023x are perspective from the line 456 and
/// their centers lie on the line 123. Throws IncidenceMismatch.
PerspectivityReport verify_dual_perspectivity_instance(const PlanarConfiguration& cs);

nlohmann::json to_json(const PlanarConfiguration& pc);
PlanarConfiguration planar_from_json(const nlohmann::json& j);
std::string to_svg(const PlanarConfiguration& pc, int size = 800);

}  // namespace dcdkit
