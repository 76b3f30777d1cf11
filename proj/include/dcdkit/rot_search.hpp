#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "dcdkit/incidence.hpp"
#include "dcdkit/voltage.hpp"

namespace dcdkit {

/// Point (orbit, shift): the orbit representative rotated `shift` times.
struct OrbitPoint {
    int orbit = 0;
    int shift = 0;
    bool operator==(const OrbitPoint&) const = default;
    auto operator<=>(const OrbitPoint&) const = default;
};

// Polynomial system for a k-fold rotational realization of the configuration
// whose Levi graph covers a colored Z_k voltage graph (color 0 = points). Each
// point orbit has a representative (x, y); the cover point (P, i) sits at
// R^i (x_P, y_P) where R is the rotation by 2 pi m / k for the multiplier m.
// Line (L, 0) is spanned by its two incident points with the smallest
// (orbit, shift); one determinant term per base incidence demands that the
// incident point lies on it (the two defining terms vanish identically).
class RotationalSystem {
public:
    struct Term {
        int line_orbit = 0;
        OrbitPoint point;
        bool defining = false;
    };
    struct LineOrbit {
        int base_vertex = 0;
        std::vector<OrbitPoint> incidences;  ///< sorted
    };

    /// Throws NonBipartiteBase when an arc joins two vertices of one color,
    /// and InvalidArgument when a line orbit has fewer than two points.
    explicit RotationalSystem(const VoltageGraph& vg);

    int k() const { return k_; }
    int point_orbit_count() const { return static_cast<int>(point_base_.size()); }
    int line_orbit_count() const { return static_cast<int>(lines_.size()); }
    int parameter_count() const { return 2 * point_orbit_count(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    const std::vector<Term>& terms() const { return terms_; }
    const std::vector<LineOrbit>& line_orbits() const { return lines_; }
    const std::vector<int>& point_base_vertices() const { return point_base_; }

    /// Multipliers m in 1..k/2 coprime to k; m and -m give mirror images.
    std::vector<int> multipliers() const;

    /// Determinant of every term divided by the mean squared radius of the
    /// orbit representatives, so the residual is invariant under scaling.
    Eigen::VectorXd term_values(const Eigen::VectorXd& params, int multiplier) const;
    Eigen::MatrixXd jacobian(const Eigen::VectorXd& params, int multiplier) const;
    /// Sum of squared term values.
    double residual(const Eigen::VectorXd& params, int multiplier) const;

    Eigen::Vector2d point_position(const Eigen::VectorXd& params, int multiplier, OrbitPoint p) const;

    /// Cover configuration: points (P, i) in order P * k + i, lines likewise.
    IncidenceStructure cover_structure() const;

private:
    int k_ = 1;
    std::vector<int> point_base_;         ///< point orbit -> base vertex
    std::vector<LineOrbit> lines_;
    std::vector<Term> terms_;
};

enum class Classification { Realization, Degenerate, Floor };
std::string to_string(Classification c);

struct Coincidence {
    enum class Kind { OrbitCollapse, PointPoint, LineUndefined, LineLine, ExtraIncidence };
    Kind kind = Kind::PointPoint;
    int a = 0;      ///< orbit (point or line, by kind)
    int b = 0;      ///< second orbit, or -1
    int shift = 0;  ///< rotation relating the two
    std::string describe() const;
};

/// Orbit-level coincidences of a drawing scaled to maximal radius 1: a point
/// orbit at the center, points or lines of two orbits (or one orbit) that
/// agree up to rotation, lines whose two defining points agree, and points
/// incident with lines they do not belong to.
std::vector<Coincidence> coincidence_check(const RotationalSystem& sys, const Eigen::VectorXd& params, int multiplier,
                                           double tol = 1e-8);

struct ResidualReport {
    int seed = 0;
    int multiplier = 1;
    Eigen::VectorXd params;
    double residual = 0;
    Classification classification = Classification::Floor;
    std::vector<Coincidence> coincidences;
    std::vector<double> trace;  ///< residual after each accepted step, starting with the initial value
    int iterations = 0;
};

struct LmOptions {
    int max_iterations = 400;
    double initial_damping = 1e-3;
    double stop_residual = 1e-28;
};

/// Damped Gauss-Newton descent: a step is accepted iff the residual
/// decreases; the damping doubles on rejection and halves on acceptance.
ResidualReport descend(const RotationalSystem& sys, Eigen::VectorXd params, int multiplier, const LmOptions& opt = {});

/// Sub-tolerance residual with coincidences is degenerate, without is a
/// realization; anything else is a floor.
void classify(const RotationalSystem& sys, ResidualReport& r, double tol = 1e-20, double coincidence_tol = 1e-8);

struct SearchOptions {
    int seeds = 200;
    std::uint64_t base_seed = 1;
    double tol = 1e-20;
    double coincidence_tol = 1e-8;
    double time_budget_seconds = 0;  ///< 0 = unlimited
    int threads = 0;                 ///< 0 = DCDKIT_THREADS or hardware concurrency
    std::vector<int> multipliers;    ///< empty = all of RotationalSystem::multipliers()
    LmOptions lm;
};

struct SearchReport {
    int k = 0;
    int seeds_requested = 0;
    std::vector<ResidualReport> runs;  ///< by seed index; skipped seeds are absent
    bool budget_exhausted = false;

    std::size_t count(Classification c) const;
    /// Least residual, ties broken by seed index.
    const ResidualReport& best() const;
    std::string summary() const;
    nlohmann::json to_json() const;
};

/// Independent multi-start descents from seeded random orbit positions
/// (radius in [0.2, 1], uniform phase), cycling through the multipliers.
SearchReport search(const RotationalSystem& sys, const SearchOptions& opt = {});

/// Colored Levi quotients used as search inputs.
VoltageGraph danzer_rotational_quotient(int k);
VoltageGraph coxeter_rotational_quotient();

// Full planar drawing without symmetry constraints.
struct PlanarDrawing {
    std::vector<Eigen::Vector2d> points;
    std::vector<Eigen::Vector3d> lines;  ///< (a, b, c) with a^2 + b^2 = 1
    IncidenceStructure structure;
    std::vector<int> point_orbit;
    std::vector<int> line_orbit;
};

PlanarDrawing rotational_drawing(const RotationalSystem& sys, const Eigen::VectorXd& params, int multiplier);

struct PerturbResult {
    PlanarDrawing drawing;
    std::size_t surviving_incidences = 0;
    std::size_t total_incidences = 0;
    double residual = 0;  ///< sum of squared point-line distances
};

/// Jitters every point by epsilon times a standard normal, fits each line to
/// its points and runs the descent on all point-line distances. epsilon = 0
/// returns the symmetric drawing untouched.
PerturbResult perturb_export(const RotationalSystem& sys, const Eigen::VectorXd& params, int multiplier, double epsilon,
                             std::uint64_t seed = 1, double incidence_tol = 1e-8, int max_iterations = 200);

std::size_t count_incidences(const PlanarDrawing& d, double tol);
std::string to_svg(const PlanarDrawing& d, int size = 800);
nlohmann::json to_json(const PlanarDrawing& d);

}  // namespace dcdkit
