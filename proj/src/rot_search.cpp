#include "dcdkit/rot_search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>
#include <thread>

#include "dcdkit/dcd.hpp"
#include "dcdkit/error.hpp"
#include "dcdkit/svg.hpp"

namespace dcdkit {

namespace {

Eigen::Matrix2d rotation(double angle) {
    Eigen::Matrix2d r;
    r << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
    return r;
}

double step_angle(int k, int multiplier) { return 2.0 * std::numbers::pi * multiplier / k; }

double cross2(const Eigen::Vector2d& u, const Eigen::Vector2d& v) { return u.x() * v.y() - u.y() * v.x(); }

// a x + b y + c = 0 through p, q with unit normal; zero vector if p == q.
Eigen::Vector3d line_through(const Eigen::Vector2d& p, const Eigen::Vector2d& q) {
    Eigen::Vector2d d = q - p;
    const double len = d.norm();
    if (len == 0) return Eigen::Vector3d::Zero();
    Eigen::Vector2d n(-d.y() / len, d.x() / len);
    return {n.x(), n.y(), -n.dot(p)};
}

Eigen::Vector3d rotate_line(const Eigen::Vector3d& l, double angle) {
    const Eigen::Vector2d n = rotation(angle) * Eigen::Vector2d(l.x(), l.y());
    return {n.x(), n.y(), l.z()};
}

bool same_line(const Eigen::Vector3d& a, const Eigen::Vector3d& b, double tol) {
    return (a - b).norm() < tol || (a + b).norm() < tol;
}

double mean_squared_radius(const Eigen::VectorXd& x) { return x.squaredNorm() / (x.size() / 2); }

void normalize_scale(Eigen::VectorXd& x) {
    const double m = mean_squared_radius(x);
    if (m > 0 && std::isfinite(m)) x /= std::sqrt(m);
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("DCDKIT_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

RotationalSystem::RotationalSystem(const VoltageGraph& input) {
    VoltageGraph vg = input;
    vg.normalize();
    k_ = vg.k;
    std::vector<int> color = vg.colors;
    if (color.empty()) {
        // Two-color the base, the side of vertex 0 being points.
        color.assign(vg.vertex_count, -1);
        std::vector<std::vector<int>> adj(vg.vertex_count);
        for (const auto& a : vg.arcs) {
            if (a.u == a.v) throw Error(ErrorKind::NonBipartiteBase, "base has a loop");
            adj[a.u].push_back(a.v);
            adj[a.v].push_back(a.u);
        }
        for (int s = 0; s < vg.vertex_count; ++s) {
            if (color[s] >= 0) continue;
            color[s] = 0;
            std::deque<int> q{s};
            while (!q.empty()) {
                const int u = q.front();
                q.pop_front();
                for (int v : adj[u]) {
                    if (color[v] < 0) {
                        color[v] = 1 - color[u];
                        q.push_back(v);
                    }
                }
            }
        }
    }
    std::vector<int> orbit_index(vg.vertex_count, -1);
    for (int v = 0; v < vg.vertex_count; ++v) {
        if (color[v] == 0) {
            orbit_index[v] = static_cast<int>(point_base_.size());
            point_base_.push_back(v);
        } else {
            orbit_index[v] = static_cast<int>(lines_.size());
            lines_.push_back({v, {}});
        }
    }
    for (const auto& a : vg.arcs) {
        if (color[a.u] == color[a.v]) {
            throw Error(ErrorKind::NonBipartiteBase, "arc " + std::to_string(a.u) + " " + std::to_string(a.v) + " joins one color class");
        }
        // (u, i) ~ (v, i + s): line (L, 0) meets point (P, -s) or (P, s).
        if (color[a.u] == 0) {
            lines_[orbit_index[a.v]].incidences.push_back({orbit_index[a.u], static_cast<int>((k_ - a.s) % k_)});
        } else {
            lines_[orbit_index[a.u]].incidences.push_back({orbit_index[a.v], static_cast<int>(a.s)});
        }
    }
    for (int l = 0; l < line_orbit_count(); ++l) {
        auto& inc = lines_[l].incidences;
        std::sort(inc.begin(), inc.end());
        if (inc.size() < 2) throw Error(ErrorKind::InvalidArgument, "line orbit with fewer than two points");
        for (std::size_t i = 0; i < inc.size(); ++i) terms_.push_back({l, inc[i], i < 2});
    }
    if (point_base_.empty()) throw Error(ErrorKind::InvalidArgument, "no point orbits");
}

std::vector<int> RotationalSystem::multipliers() const {
    std::vector<int> out;
    for (int m = 1; 2 * m <= k_; ++m)
        if (std::gcd(m, k_) == 1) out.push_back(m);
    if (out.empty()) out.push_back(1);
    return out;
}

Eigen::Vector2d RotationalSystem::point_position(const Eigen::VectorXd& x, int multiplier, OrbitPoint p) const {
    return rotation(step_angle(k_, multiplier) * p.shift) * Eigen::Vector2d(x[2 * p.orbit], x[2 * p.orbit + 1]);
}

Eigen::VectorXd RotationalSystem::term_values(const Eigen::VectorXd& x, int multiplier) const {
    const double m = mean_squared_radius(x);
    Eigen::VectorXd out(term_count());
    for (int t = 0; t < term_count(); ++t) {
        const auto& term = terms_[t];
        const auto& inc = lines_[term.line_orbit].incidences;
        const Eigen::Vector2d a = point_position(x, multiplier, term.point);
        const Eigen::Vector2d b = point_position(x, multiplier, inc[0]);
        const Eigen::Vector2d c = point_position(x, multiplier, inc[1]);
        out[t] = term.defining ? 0.0 : cross2(b - a, c - a) / m;
    }
    return out;
}

Eigen::MatrixXd RotationalSystem::jacobian(const Eigen::VectorXd& x, int multiplier) const {
    const int np = point_orbit_count();
    const double m = mean_squared_radius(x);
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(term_count(), parameter_count());
    const double theta = step_angle(k_, multiplier);
    for (int t = 0; t < term_count(); ++t) {
        const auto& term = terms_[t];
        if (term.defining) continue;
        const auto& inc = lines_[term.line_orbit].incidences;
        const std::array<OrbitPoint, 3> pts = {term.point, inc[0], inc[1]};
        std::array<Eigen::Vector2d, 3> pos;
        for (int i = 0; i < 3; ++i) pos[i] = point_position(x, multiplier, pts[i]);
        const auto& a = pos[0];
        const auto& b = pos[1];
        const auto& c = pos[2];
        const double det = cross2(b - a, c - a);
        // Gradients of a x b + b x c + c x a with respect to a, b, c.
        const std::array<Eigen::Vector2d, 3> grad = {Eigen::Vector2d(b.y() - c.y(), c.x() - b.x()),
                                                     Eigen::Vector2d(c.y() - a.y(), a.x() - c.x()),
                                                     Eigen::Vector2d(a.y() - b.y(), b.x() - a.x())};
        for (int i = 0; i < 3; ++i) {
            const Eigen::Vector2d g = rotation(theta * pts[i].shift).transpose() * grad[i];
            jac(t, 2 * pts[i].orbit) += g.x() / m;
            jac(t, 2 * pts[i].orbit + 1) += g.y() / m;
        }
        // Quotient rule for the scale normalization.
        for (int o = 0; o < np; ++o) {
            jac(t, 2 * o) -= det / (m * m) * 2.0 * x[2 * o] / np;
            jac(t, 2 * o + 1) -= det / (m * m) * 2.0 * x[2 * o + 1] / np;
        }
    }
    return jac;
}

double RotationalSystem::residual(const Eigen::VectorXd& x, int multiplier) const {
    return term_values(x, multiplier).squaredNorm();
}

IncidenceStructure RotationalSystem::cover_structure() const {
    std::vector<std::string> pl, ll;
    std::vector<Flag> flags;
    for (int p = 0; p < point_orbit_count(); ++p)
        for (int i = 0; i < k_; ++i) pl.push_back("p" + std::to_string(p) + "." + std::to_string(i));
    for (int l = 0; l < line_orbit_count(); ++l)
        for (int i = 0; i < k_; ++i) {
            ll.push_back("l" + std::to_string(l) + "." + std::to_string(i));
            for (const auto& op : lines_[l].incidences) flags.emplace_back(op.orbit * k_ + (op.shift + i) % k_, l * k_ + i);
        }
    return IncidenceStructure(std::move(pl), std::move(ll), std::move(flags));
}

std::string to_string(Classification c) {
    switch (c) {
        case Classification::Realization: return "realization";
        case Classification::Degenerate: return "degenerate";
        case Classification::Floor: return "floor";
    }
    return "floor";
}

std::string Coincidence::describe() const {
    const std::string s = std::to_string(shift);
    switch (kind) {
        case Kind::OrbitCollapse: return "point orbit " + std::to_string(a) + " collapses to the center";
        case Kind::PointPoint: return "point orbits " + std::to_string(a) + " and " + std::to_string(b) + " coincide (shift " + s + ")";
        case Kind::LineUndefined: return "line orbit " + std::to_string(a) + " has coincident defining points";
        case Kind::LineLine: return "line orbits " + std::to_string(a) + " and " + std::to_string(b) + " coincide (shift " + s + ")";
        case Kind::ExtraIncidence: return "point orbit " + std::to_string(b) + " (shift " + s + ") lies on line orbit " + std::to_string(a);
    }
    return "";
}

std::vector<Coincidence> coincidence_check(const RotationalSystem& sys, const Eigen::VectorXd& params, int multiplier, double tol) {
    using Kind = Coincidence::Kind;
    const int k = sys.k();
    const int np = sys.point_orbit_count();
    const int nl = sys.line_orbit_count();
    Eigen::VectorXd x = params;
    double rmax = 0;
    for (int o = 0; o < np; ++o) rmax = std::max(rmax, std::hypot(x[2 * o], x[2 * o + 1]));
    if (rmax > 0) x /= rmax;
    std::vector<Coincidence> out;
    auto pos = [&](int orbit, int shift) { return sys.point_position(x, multiplier, {orbit, shift}); };
    for (int o = 0; o < np; ++o)
        if (pos(o, 0).norm() < tol) out.push_back({Kind::OrbitCollapse, o, -1, 0});
    for (int p = 0; p < np; ++p)
        for (int q = p + 1; q < np; ++q)
            for (int t = 0; t < k; ++t)
                if ((pos(p, t) - pos(q, 0)).norm() < tol) out.push_back({Kind::PointPoint, p, q, t});
    std::vector<Eigen::Vector3d> lines(nl, Eigen::Vector3d::Zero());
    std::vector<bool> defined(nl, false);
    for (int l = 0; l < nl; ++l) {
        const auto& inc = sys.line_orbits()[l].incidences;
        const auto a = pos(inc[0].orbit, inc[0].shift);
        const auto b = pos(inc[1].orbit, inc[1].shift);
        if ((a - b).norm() < tol) {
            out.push_back({Kind::LineUndefined, l, -1, 0});
            continue;
        }
        lines[l] = line_through(a, b);
        defined[l] = true;
    }
    const double theta = step_angle(k, multiplier);
    for (int l = 0; l < nl; ++l) {
        if (!defined[l]) continue;
        for (int m = l; m < nl; ++m) {
            if (!defined[m]) continue;
            for (int t = (m == l ? 1 : 0); t < k; ++t)
                if (same_line(rotate_line(lines[m], theta * t), lines[l], tol)) out.push_back({Kind::LineLine, l, m, t});
        }
        const auto& inc = sys.line_orbits()[l].incidences;
        for (int p = 0; p < np; ++p)
            for (int t = 0; t < k; ++t) {
                if (std::binary_search(inc.begin(), inc.end(), OrbitPoint{p, t})) continue;
                const auto q = pos(p, t);
                if (std::fabs(lines[l].x() * q.x() + lines[l].y() * q.y() + lines[l].z()) < tol) {
                    out.push_back({Kind::ExtraIncidence, l, p, t});
                }
            }
    }
    return out;
}

ResidualReport descend(const RotationalSystem& sys, Eigen::VectorXd x, int multiplier, const LmOptions& opt) {
    ResidualReport rep;
    rep.multiplier = multiplier;
    normalize_scale(x);
    Eigen::VectorXd f = sys.term_values(x, multiplier);
    double res = f.squaredNorm();
    rep.trace.push_back(res);
    double lambda = opt.initial_damping;
    const int n = sys.parameter_count();
    int it = 0;
    for (; it < opt.max_iterations && res > opt.stop_residual; ++it) {
        const Eigen::MatrixXd jac = sys.jacobian(x, multiplier);
        const Eigen::MatrixXd jtj = jac.transpose() * jac;
        const Eigen::VectorXd g = jac.transpose() * f;
        const Eigen::MatrixXd lhs = jtj + lambda * Eigen::MatrixXd::Identity(n, n);
        const Eigen::VectorXd delta = lhs.ldlt().solve(-g);
        Eigen::VectorXd trial = x + delta;
        normalize_scale(trial);
        const Eigen::VectorXd ft = sys.term_values(trial, multiplier);
        const double rt = ft.squaredNorm();
        if (std::isfinite(rt) && rt < res) {
            x = std::move(trial);
            f = ft;
            res = rt;
            rep.trace.push_back(res);
            lambda = std::max(lambda / 2.0, 1e-15);
        } else {
            lambda *= 2.0;
            if (lambda > 1e16) break;
        }
    }
    rep.iterations = it;
    rep.params = std::move(x);
    rep.residual = res;
    return rep;
}

void classify(const RotationalSystem& sys, ResidualReport& r, double tol, double coincidence_tol) {
    r.coincidences.clear();
    if (!(r.residual < tol)) {
        r.classification = Classification::Floor;
        return;
    }
    r.coincidences = coincidence_check(sys, r.params, r.multiplier, coincidence_tol);
    r.classification = r.coincidences.empty() ? Classification::Realization : Classification::Degenerate;
}

std::size_t SearchReport::count(Classification c) const {
    return static_cast<std::size_t>(std::count_if(runs.begin(), runs.end(), [&](const ResidualReport& r) { return r.classification == c; }));
}

const ResidualReport& SearchReport::best() const {
    if (runs.empty()) throw Error(ErrorKind::BudgetExhausted, "no completed runs");
    const ResidualReport* best = &runs.front();
    for (const auto& r : runs)
        if (r.residual < best->residual) best = &r;
    return *best;
}

std::string SearchReport::summary() const {
    const std::size_t real = count(Classification::Realization);
    std::string s;
    if (real == 0) {
        s = "no non-degenerate solution found in " + std::to_string(runs.size()) + " starts";
    } else {
        s = std::to_string(real) + " non-degenerate solution(s) found in " + std::to_string(runs.size()) + " starts";
    }
    if (budget_exhausted) s += " (budget exhausted after " + std::to_string(runs.size()) + " of " + std::to_string(seeds_requested) + ")";
    return s;
}

nlohmann::json SearchReport::to_json() const {
    using nlohmann::json;
    json runs_json = json::array();
    for (const auto& r : runs) {
        json co = json::array();
        for (const auto& c : r.coincidences) co.push_back(c.describe());
        runs_json.push_back({{"seed", r.seed},
                             {"multiplier", r.multiplier},
                             {"residual", r.residual},
                             {"classification", dcdkit::to_string(r.classification)},
                             {"iterations", r.iterations},
                             {"coincidences", co}});
    }
    json j = {{"k", k},
              {"seeds", seeds_requested},
              {"completed", runs.size()},
              {"budget_exhausted", budget_exhausted},
              {"histogram",
               {{"realization", count(Classification::Realization)},
                {"degenerate", count(Classification::Degenerate)},
                {"floor", count(Classification::Floor)}}},
              {"summary", summary()},
              {"runs", runs_json}};
    if (!runs.empty()) {
        const auto& b = best();
        std::vector<double> params(b.params.data(), b.params.data() + b.params.size());
        j["best"] = {{"seed", b.seed}, {"multiplier", b.multiplier}, {"residual", b.residual},
                     {"classification", dcdkit::to_string(b.classification)}, {"params", params}};
    }
    return j;
}

SearchReport search(const RotationalSystem& sys, const SearchOptions& opt) {
    const std::vector<int> mults = opt.multipliers.empty() ? sys.multipliers() : opt.multipliers;
    SearchReport report;
    report.k = sys.k();
    report.seeds_requested = opt.seeds;
    std::vector<std::optional<ResidualReport>> slots(std::max(0, opt.seeds));
    std::atomic<int> next{0};
    std::atomic<bool> out_of_time{false};
    const auto start = std::chrono::steady_clock::now();
    auto worker = [&]() {
        for (;;) {
            const int s = next.fetch_add(1);
            if (s >= opt.seeds) return;
            if (opt.time_budget_seconds > 0 &&
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() > opt.time_budget_seconds) {
                out_of_time = true;
                return;
            }
            std::mt19937_64 rng(opt.base_seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(s));
            std::uniform_real_distribution<double> radius(0.2, 1.0), phase(0.0, 2.0 * std::numbers::pi);
            Eigen::VectorXd x(sys.parameter_count());
            for (int o = 0; o < sys.point_orbit_count(); ++o) {
                const double r = radius(rng), a = phase(rng);
                x[2 * o] = r * std::cos(a);
                x[2 * o + 1] = r * std::sin(a);
            }
            const int m = mults[static_cast<std::size_t>(s) % mults.size()];
            ResidualReport r = descend(sys, x, m, opt.lm);
            r.seed = s;
            classify(sys, r, opt.tol, opt.coincidence_tol);
            slots[s] = std::move(r);
        }
    };
    const int threads = std::min(resolve_threads(opt.threads), std::max(1, opt.seeds));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (auto& s : slots)
        if (s) report.runs.push_back(std::move(*s));
    report.budget_exhausted = out_of_time || static_cast<int>(report.runs.size()) < opt.seeds;
    return report;
}

namespace {

VoltageGraph rotational_quotient(const Graph& levi, int k) {
    SemiregularOptions opt;
    opt.max_results = 1;
    const auto found = semiregular_cyclic(levi, k, opt);
    if (found.empty()) throw Error(ErrorKind::InvalidArgument, "no color-preserving semiregular automorphism of order " + std::to_string(k));
    return quotient(levi, found.front());
}

}  // namespace

VoltageGraph danzer_rotational_quotient(int k) { return rotational_quotient(levi_graph(dcd_build(4).structure).graph, k); }

VoltageGraph coxeter_rotational_quotient() { return rotational_quotient(levi_graph(v_construction(coxeter_graph())).graph, 7); }

PlanarDrawing rotational_drawing(const RotationalSystem& sys, const Eigen::VectorXd& params, int multiplier) {
    PlanarDrawing d;
    const int k = sys.k();
    const double theta = step_angle(k, multiplier);
    d.structure = sys.cover_structure();
    for (int p = 0; p < sys.point_orbit_count(); ++p)
        for (int i = 0; i < k; ++i) {
            d.points.push_back(sys.point_position(params, multiplier, {p, i}));
            d.point_orbit.push_back(p);
        }
    for (int l = 0; l < sys.line_orbit_count(); ++l) {
        const auto& inc = sys.line_orbits()[l].incidences;
        Eigen::Vector3d base = line_through(sys.point_position(params, multiplier, inc[0]), sys.point_position(params, multiplier, inc[1]));
        if (base.isZero()) base = Eigen::Vector3d(1, 0, 0);
        for (int i = 0; i < k; ++i) {
            d.lines.push_back(rotate_line(base, theta * i));
            d.line_orbit.push_back(l);
        }
    }
    return d;
}

std::size_t count_incidences(const PlanarDrawing& d, double tol) {
    double rmax = 0;
    for (const auto& p : d.points) rmax = std::max(rmax, p.norm());
    if (rmax == 0) rmax = 1;
    std::size_t n = 0;
    for (const auto& [p, l] : d.structure.incidences()) {
        const auto& q = d.points[p];
        const auto& ln = d.lines[l];
        const double norm = std::hypot(ln.x(), ln.y());
        if (norm > 0 && std::fabs(ln.x() * q.x() + ln.y() * q.y() + ln.z()) / norm / rmax < tol) ++n;
    }
    return n;
}

namespace {

// Total least squares line through the given points.
Eigen::Vector3d fit_line(const std::vector<Eigen::Vector2d>& pts) {
    Eigen::Vector2d mean = Eigen::Vector2d::Zero();
    for (const auto& p : pts) mean += p;
    mean /= static_cast<double>(pts.size());
    Eigen::Matrix2d cov = Eigen::Matrix2d::Zero();
    for (const auto& p : pts) cov += (p - mean) * (p - mean).transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(cov);
    const Eigen::Vector2d n = es.eigenvectors().col(0);
    return {n.x(), n.y(), -n.dot(mean)};
}

struct FullSystem {
    const PlanarDrawing& d;
    double target_m;

    int unknowns() const { return 2 * static_cast<int>(d.points.size()) + 3 * static_cast<int>(d.lines.size()); }
    int rows() const { return static_cast<int>(d.structure.incidences().size() + d.lines.size()) + 1; }

    Eigen::VectorXd values(const Eigen::VectorXd& z) const {
        const int np = static_cast<int>(d.points.size());
        Eigen::VectorXd f(rows());
        int r = 0;
        for (const auto& [p, l] : d.structure.incidences()) {
            const int li = 2 * np + 3 * l;
            f[r++] = z[li] * z[2 * p] + z[li + 1] * z[2 * p + 1] + z[li + 2];
        }
        for (std::size_t l = 0; l < d.lines.size(); ++l) {
            const int li = 2 * np + 3 * static_cast<int>(l);
            f[r++] = z[li] * z[li] + z[li + 1] * z[li + 1] - 1.0;
        }
        f[r] = z.head(2 * np).squaredNorm() / np - target_m;
        return f;
    }

    Eigen::MatrixXd jacobian(const Eigen::VectorXd& z) const {
        const int np = static_cast<int>(d.points.size());
        Eigen::MatrixXd j = Eigen::MatrixXd::Zero(rows(), unknowns());
        int r = 0;
        for (const auto& [p, l] : d.structure.incidences()) {
            const int li = 2 * np + 3 * l;
            j(r, 2 * p) = z[li];
            j(r, 2 * p + 1) = z[li + 1];
            j(r, li) = z[2 * p];
            j(r, li + 1) = z[2 * p + 1];
            j(r, li + 2) = 1.0;
            ++r;
        }
        for (std::size_t l = 0; l < d.lines.size(); ++l) {
            const int li = 2 * np + 3 * static_cast<int>(l);
            j(r, li) = 2 * z[li];
            j(r, li + 1) = 2 * z[li + 1];
            ++r;
        }
        for (int i = 0; i < 2 * np; ++i) j(r, i) = 2 * z[i] / np;
        return j;
    }
};

}  // namespace

PerturbResult perturb_export(const RotationalSystem& sys, const Eigen::VectorXd& params, int multiplier, double epsilon,
                             std::uint64_t seed, double incidence_tol, int max_iterations) {
    PerturbResult out;
    out.drawing = rotational_drawing(sys, params, multiplier);
    auto& d = out.drawing;
    out.total_incidences = d.structure.incidences().size();
    auto distance_residual = [&]() {
        double rmax = 0;
        for (const auto& p : d.points) rmax = std::max(rmax, p.norm());
        if (rmax == 0) rmax = 1;
        double s = 0;
        for (const auto& [p, l] : d.structure.incidences()) {
            const double v = d.lines[l].x() * d.points[p].x() + d.lines[l].y() * d.points[p].y() + d.lines[l].z();
            s += v * v;
        }
        return s / (rmax * rmax);
    };
    if (epsilon == 0) {
        out.surviving_incidences = count_incidences(d, incidence_tol);
        out.residual = distance_residual();
        return out;
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, 1.0);
    double rmax = 0;
    for (const auto& p : d.points) rmax = std::max(rmax, p.norm());
    for (auto& p : d.points) p += epsilon * rmax * Eigen::Vector2d(noise(rng), noise(rng));
    for (std::size_t l = 0; l < d.lines.size(); ++l) {
        std::vector<Eigen::Vector2d> on;
        for (int p : d.structure.points_of(static_cast<int>(l))) on.push_back(d.points[p]);
        d.lines[l] = fit_line(on);
    }
    const int np = static_cast<int>(d.points.size());
    Eigen::VectorXd z(2 * np + 3 * static_cast<int>(d.lines.size()));
    double m = 0;
    for (int p = 0; p < np; ++p) {
        z[2 * p] = d.points[p].x();
        z[2 * p + 1] = d.points[p].y();
        m += d.points[p].squaredNorm();
    }
    for (std::size_t l = 0; l < d.lines.size(); ++l) z.segment<3>(2 * np + 3 * static_cast<int>(l)) = d.lines[l];
    FullSystem full{d, m / np};
    Eigen::VectorXd f = full.values(z);
    double res = f.squaredNorm();
    double lambda = 1e-3;
    const int n = full.unknowns();
    for (int it = 0; it < max_iterations && res > 1e-30; ++it) {
        const Eigen::MatrixXd jac = full.jacobian(z);
        const Eigen::MatrixXd lhs = jac.transpose() * jac + lambda * Eigen::MatrixXd::Identity(n, n);
        const Eigen::VectorXd delta = lhs.ldlt().solve(-(jac.transpose() * f));
        const Eigen::VectorXd trial = z + delta;
        const Eigen::VectorXd ft = full.values(trial);
        const double rt = ft.squaredNorm();
        if (std::isfinite(rt) && rt < res) {
            z = trial;
            f = ft;
            res = rt;
            lambda = std::max(lambda / 2.0, 1e-15);
        } else {
            lambda *= 2.0;
            if (lambda > 1e16) break;
        }
    }
    for (int p = 0; p < np; ++p) d.points[p] = {z[2 * p], z[2 * p + 1]};
    for (std::size_t l = 0; l < d.lines.size(); ++l) {
        Eigen::Vector3d ln = z.segment<3>(2 * np + 3 * static_cast<int>(l));
        const double norm = std::hypot(ln.x(), ln.y());
        if (norm > 0) ln /= norm;
        d.lines[l] = ln;
    }
    out.surviving_incidences = count_incidences(d, incidence_tol);
    out.residual = distance_residual();
    return out;
}

std::string to_svg(const PlanarDrawing& d, int size) {
    BoundingBox box;
    for (const auto& p : d.points) box.include(p.x(), p.y());
    SvgCanvas canvas(box, size);
    for (std::size_t l = 0; l < d.lines.size(); ++l) {
        const auto& on = d.structure.points_of(static_cast<int>(l));
        if (on.size() < 2) continue;
        const Eigen::Vector2d dir(-d.lines[l].y(), d.lines[l].x());
        auto key = [&](int p) { return d.points[p].dot(dir); };
        const auto [lo, hi] = std::minmax_element(on.begin(), on.end(), [&](int u, int v) { return key(u) < key(v); });
        canvas.segment(d.points[*lo].x(), d.points[*lo].y(), d.points[*hi].x(), d.points[*hi].y(),
                       palette_color(d.line_orbit.empty() ? 0 : d.line_orbit[l]), 0.8);
    }
    for (std::size_t p = 0; p < d.points.size(); ++p) {
        canvas.dot(d.points[p].x(), d.points[p].y(), 3.0, palette_color(d.point_orbit.empty() ? 9 : d.point_orbit[p]));
    }
    return canvas.str();
}

nlohmann::json to_json(const PlanarDrawing& d) {
    using nlohmann::json;
    json points = json::array(), lines = json::array();
    for (std::size_t p = 0; p < d.points.size(); ++p) {
        points.push_back({{"label", d.structure.point_labels()[p]},
                          {"x", d.points[p].x()},
                          {"y", d.points[p].y()},
                          {"orbit", d.point_orbit.empty() ? 0 : d.point_orbit[p]}});
    }
    for (std::size_t l = 0; l < d.lines.size(); ++l) {
        json on = json::array();
        for (int p : d.structure.points_of(static_cast<int>(l))) on.push_back(d.structure.point_labels()[p]);
        lines.push_back({{"label", d.structure.block_labels()[l]},
                         {"coeffs", {d.lines[l].x(), d.lines[l].y(), d.lines[l].z()}},
                         {"orbit", d.line_orbit.empty() ? 0 : d.line_orbit[l]},
                         {"points", on}});
    }
    return {{"mode", "float"}, {"points", points}, {"lines", lines}};
}

}  // namespace dcdkit
