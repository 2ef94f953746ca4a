#ifndef CVXINFO_CONVEX_SET_HPP
#define CVXINFO_CONVEX_SET_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cvxinfo/ext_real.hpp"
#include "cvxinfo/phi.hpp"
#include "cvxinfo/simplex_lp.hpp"

namespace cvxinfo {

struct Halfspace {
    Vec normal;
    double offset = 0.0;  // <normal, x> <= offset
};

/// hyp(-phi*) in R^2; its support function is the closed perspective of phi.
struct PhiHypograph {
    PhiGenerator phi;
};

/// conv(vertices) + cone(rays).
struct VPolyhedron {
    std::vector<Vec> vertices;
    std::vector<Vec> rays;
};

/// Intersection of halfspaces; A and b cache the stacked constraints.
struct HPolyhedron {
    std::vector<Halfspace> halfspaces;
    Mat A;
    Vec b;
};

/// {d : <1_n, d> <= 0, d_i <= 1 for all i}.
struct DVarN {
    int n = 2;
};

/// Support at x becomes the previous support at matrix * x.
struct LinearPullback {
    Mat matrix;
};
struct Translate {
    Vec p;
};
struct HadamardScale {
    Vec v;
};

class ConvexSpec {
public:
    using Rep = std::variant<PhiHypograph, VPolyhedron, HPolyhedron, DVarN>;
    using Transform = std::variant<LinearPullback, Translate, HadamardScale>;

    static ConvexSpec phi_hypograph(PhiGenerator phi) { return ConvexSpec(PhiHypograph{std::move(phi)}, 2); }

    static ConvexSpec vpolyhedron(std::vector<Vec> vertices, std::vector<Vec> rays = {}) {
        if (vertices.empty()) throw std::invalid_argument("VPolyhedron: vertex list is empty");
        const auto n = vertices.front().size();
        if (n <= 0) throw std::invalid_argument("VPolyhedron: zero-dimensional vertices");
        for (const auto& v : vertices)
            if (v.size() != n) throw std::invalid_argument("VPolyhedron: vertices of unequal dimension");
        for (const auto& r : rays)
            if (r.size() != n) throw std::invalid_argument("VPolyhedron: ray dimension differs from vertices");
        return ConvexSpec(VPolyhedron{std::move(vertices), std::move(rays)}, static_cast<int>(n));
    }

    static ConvexSpec hpolyhedron(std::vector<Halfspace> halfspaces) {
        if (halfspaces.empty()) throw std::invalid_argument("HPolyhedron: no halfspaces");
        const auto n = halfspaces.front().normal.size();
        HPolyhedron h;
        h.A.resize(static_cast<Eigen::Index>(halfspaces.size()), n);
        h.b.resize(static_cast<Eigen::Index>(halfspaces.size()));
        for (std::size_t i = 0; i < halfspaces.size(); ++i) {
            if (halfspaces[i].normal.size() != n)
                throw std::invalid_argument("HPolyhedron: normals of unequal dimension");
            h.A.row(static_cast<Eigen::Index>(i)) = halfspaces[i].normal.transpose();
            h.b(static_cast<Eigen::Index>(i)) = halfspaces[i].offset;
        }
        if (!lp::feasible(h.A, h.b)) throw std::invalid_argument("HPolyhedron: empty feasible region");
        h.halfspaces = std::move(halfspaces);
        return ConvexSpec(std::move(h), static_cast<int>(n));
    }

    static ConvexSpec dvar(int n) {
        if (n < 1) throw std::invalid_argument("DVarN: n must be positive");
        return ConvexSpec(DVarN{n}, n);
    }

    [[nodiscard]] int dim() const { return dim_; }
    [[nodiscard]] int base_dim() const { return base_dim_; }
    [[nodiscard]] const Rep& rep() const { return rep_; }
    [[nodiscard]] const std::vector<Transform>& transforms() const { return transforms_; }

    /// Returns a copy with one more transform on the stack.
    [[nodiscard]] ConvexSpec then(Transform t) const {
        ConvexSpec out = *this;
        if (const auto* pb = std::get_if<LinearPullback>(&t)) {
            if (pb->matrix.rows() != dim_) throw dimension_error("pullback matrix rows", pb->matrix.rows());
            out.dim_ = static_cast<int>(pb->matrix.cols());
        } else if (const auto* tr = std::get_if<Translate>(&t)) {
            if (tr->p.size() != dim_) throw dimension_error("translation vector", tr->p.size());
        } else if (const auto* hs = std::get_if<HadamardScale>(&t)) {
            if (hs->v.size() != dim_) throw dimension_error("hadamard vector", hs->v.size());
        }
        out.transforms_.push_back(std::move(t));
        return out;
    }

    [[nodiscard]] std::invalid_argument dimension_error(const std::string& what, Eigen::Index got) const {
        std::ostringstream os;
        os << "dimension mismatch: " << what << " has size " << got << ", set has dimension " << dim_;
        return std::invalid_argument(os.str());
    }

private:
    ConvexSpec(Rep rep, int dim) : rep_(std::move(rep)), base_dim_(dim), dim_(dim) {}

    Rep rep_;
    int base_dim_;
    int dim_;
    std::vector<Transform> transforms_;
};

namespace detail {

constexpr double kRayTol = 1e-12;
constexpr double kOrthantTol = 1e-14;

inline void check_dim(const ConvexSpec& D, const Vec& x) {
    if (x.size() != D.dim()) throw D.dimension_error("argument", x.size());
}

/// Treats entries within rounding of zero as zero; returns nullopt when a
/// genuinely negative entry is present.
inline std::optional<Vec> clamp_orthant(const Vec& x) {
    const double scale = x.size() ? x.cwiseAbs().maxCoeff() : 0.0;
    Vec y = x;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
        if (y(i) < 0.0) {
            if (y(i) < -kOrthantTol * scale) return std::nullopt;
            y(i) = 0.0;
        }
    }
    return y;
}

inline bool ray_ascends(const Vec& x, const Vec& r) {
    return x.dot(r) > kRayTol * std::max(1.0, x.norm() * r.norm());
}

inline bool lex_less(const Vec& a, const Vec& b) {
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

inline Vec dvar_vertex(int n, int j) {
    Vec v = Vec::Ones(n);
    v(j) -= n;
    return v;
}

inline ExtReal base_support(const ConvexSpec::Rep& rep, const Vec& x) {
    return std::visit(
        [&x](const auto& r) -> ExtReal {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, PhiHypograph>) {
                const auto y = clamp_orthant(x);
                if (!y) return ExtReal::pos_inf();
                return perspective(r.phi, (*y)(0), (*y)(1));
            } else if constexpr (std::is_same_v<T, VPolyhedron>) {
                for (const auto& ray : r.rays)
                    if (ray_ascends(x, ray)) return ExtReal::pos_inf();
                double best = -kInf;
                for (const auto& v : r.vertices) best = std::max(best, x.dot(v));
                return best;
            } else if constexpr (std::is_same_v<T, HPolyhedron>) {
                const auto res = lp::maximize(x, r.A, r.b);
                if (res.status == lp::Status::infeasible)
                    throw std::logic_error("HPolyhedron: feasible region is empty");
                if (res.status == lp::Status::unbounded) return ExtReal::pos_inf();
                return res.value;
            } else {
                const auto y = clamp_orthant(x);
                if (!y) return ExtReal::pos_inf();
                return y->sum() - r.n * y->minCoeff();
            }
        },
        rep);
}

inline Vec base_subgradient(const ConvexSpec::Rep& rep, const Vec& x) {
    return std::visit(
        [&x](const auto& r) -> Vec {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, PhiHypograph>) {
                const auto y = clamp_orthant(x);
                if (!y) throw std::domain_error("support_subgradient: support is +inf at x");
                const auto g = perspective_gradient(r.phi, (*y)(0), (*y)(1));
                if (!g) throw std::domain_error("support_subgradient: x outside the domain of the subdifferential");
                return Vec{{g->first, g->second}};
            } else if constexpr (std::is_same_v<T, VPolyhedron>) {
                for (const auto& ray : r.rays)
                    if (ray_ascends(x, ray)) throw std::domain_error("support_subgradient: support is +inf at x");
                double best = -kInf;
                for (const auto& v : r.vertices) best = std::max(best, x.dot(v));
                const double tol = 1e-12 * (1.0 + std::abs(best));
                const Vec* pick = nullptr;
                for (const auto& v : r.vertices)
                    if (x.dot(v) >= best - tol && (pick == nullptr || lex_less(v, *pick))) pick = &v;
                return *pick;
            } else if constexpr (std::is_same_v<T, HPolyhedron>) {
                const auto res = lp::maximize(x, r.A, r.b);
                if (res.status != lp::Status::optimal)
                    throw std::domain_error("support_subgradient: support is +inf at x");
                return res.x;
            } else {
                const auto y = clamp_orthant(x);
                if (!y) throw std::domain_error("support_subgradient: support is +inf at x");
                Eigen::Index j = 0;
                y->minCoeff(&j);  // first minimiser
                return dvar_vertex(r.n, static_cast<int>(j));
            }
        },
        rep);
}

inline ExtReal support_at(const ConvexSpec& D, std::size_t level, const Vec& x) {
    if (level == 0) return base_support(D.rep(), x);
    return std::visit(
        [&](const auto& t) -> ExtReal {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, LinearPullback>) {
                return support_at(D, level - 1, t.matrix * x);
            } else if constexpr (std::is_same_v<T, Translate>) {
                return support_at(D, level - 1, x) + ExtReal(t.p.dot(x));
            } else {
                return support_at(D, level - 1, t.v.cwiseProduct(x));
            }
        },
        D.transforms()[level - 1]);
}

inline Vec subgradient_at(const ConvexSpec& D, std::size_t level, const Vec& x) {
    if (level == 0) return base_subgradient(D.rep(), x);
    return std::visit(
        [&](const auto& t) -> Vec {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, LinearPullback>) {
                return t.matrix.transpose() * subgradient_at(D, level - 1, t.matrix * x);
            } else if constexpr (std::is_same_v<T, Translate>) {
                return subgradient_at(D, level - 1, x) + t.p;
            } else {
                return t.v.cwiseProduct(subgradient_at(D, level - 1, t.v.cwiseProduct(x)));
            }
        },
        D.transforms()[level - 1]);
}

/// Fixed probe directions: signed basis vectors, +-1_n and seeded random
/// unit vectors (evenly spaced on the circle when n = 2).
inline std::vector<Vec> probe_directions(int n, int count = 256) {
    std::vector<Vec> out;
    if (n == 2) {
        for (int k = 0; k < 4 * count; ++k) {
            const double a = 2.0 * M_PI * k / (4.0 * count);
            out.push_back(Vec{{std::cos(a), std::sin(a)}});
        }
        return out;
    }
    for (int i = 0; i < n; ++i) {
        out.push_back(Vec::Unit(n, i));
        out.push_back(-Vec::Unit(n, i));
    }
    out.push_back(Vec::Ones(n));
    out.push_back(-Vec::Ones(n));
    std::mt19937_64 rng(0x5eedcafeULL);
    std::normal_distribution<double> g;
    for (int k = 0; k < count; ++k) {
        Vec v(n);
        for (int i = 0; i < n; ++i) v(i) = g(rng);
        out.push_back(v.normalized());
    }
    return out;
}

}  // namespace detail

/// sigma_D(x) = sup_{d in D} <x, d> as an extended real.
inline ExtReal support(const ConvexSpec& D, const Vec& x) {
    detail::check_dim(D, x);
    return detail::support_at(D, D.transforms().size(), x);
}

/**
 * A point d in D attaining the support at x, so <d, x> = sigma_D(x).
 *
 * Ties: lexicographically smallest optimal vertex (vertex form), the
 * terminal basic solution (halfspace form), the first minimising index
 * (DVarN), and the midpoint of one-sided derivatives at kinks of phi.
 * Throws std::domain_error where the support is infinite or no finite
 * subgradient exists.
 */
inline Vec support_subgradient(const ConvexSpec& D, const Vec& x) {
    detail::check_dim(D, x);
    return detail::subgradient_at(D, D.transforms().size(), x);
}

/// Set with support x -> sigma_D(M x); the point set M^T D.
inline ConvexSpec pullback(const ConvexSpec& D, const Mat& M) { return D.then(LinearPullback{M}); }

inline ConvexSpec translate(const ConvexSpec& D, const Vec& p) { return D.then(Translate{p}); }

/// {v (.) d : d in D}; v must have no zero component.
inline ConvexSpec hadamard_scale(const ConvexSpec& D, const Vec& v) {
    if (v.size() != D.dim()) throw D.dimension_error("hadamard vector", v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v(i) == 0.0) throw std::invalid_argument("hadamard_scale: zero component in scaling vector");
    return D.then(HadamardScale{v});
}

/// Eager vertex form of D with its transforms applied, when the base set
/// has one (VPolyhedron, DVarN).
inline std::optional<VPolyhedron> materialize_vertices(const ConvexSpec& D) {
    VPolyhedron out;
    if (const auto* v = std::get_if<VPolyhedron>(&D.rep())) {
        out = *v;
    } else if (const auto* d = std::get_if<DVarN>(&D.rep())) {
        for (int j = 0; j < d->n; ++j) out.vertices.push_back(detail::dvar_vertex(d->n, j));
        for (int i = 0; i < d->n; ++i) out.rays.push_back(-Vec::Unit(d->n, i));
    } else {
        return std::nullopt;
    }
    for (const auto& t : D.transforms()) {
        std::visit(
            [&out](const auto& tr) {
                using T = std::decay_t<decltype(tr)>;
                for (auto& v : out.vertices) {
                    if constexpr (std::is_same_v<T, LinearPullback>) v = tr.matrix.transpose() * v;
                    else if constexpr (std::is_same_v<T, Translate>) v = v + tr.p;
                    else v = tr.v.cwiseProduct(v);
                }
                for (auto& r : out.rays) {
                    if constexpr (std::is_same_v<T, LinearPullback>) r = tr.matrix.transpose() * r;
                    else if constexpr (std::is_same_v<T, HadamardScale>) r = tr.v.cwiseProduct(r);
                }
            },
            t);
    }
    return out;
}

/**
 * Membership test for a single point. Exact (LP feasibility) for vertex
 * forms, exact for untransformed halfspace sets and phi-hypographs with a
 * closed-form conjugate, and a support-function probe otherwise.
 */
inline bool contains(const ConvexSpec& D, const Vec& p, double tol = 1e-9) {
    detail::check_dim(D, p);
    if (auto V = materialize_vertices(D)) {
        const auto nv = static_cast<Eigen::Index>(V->vertices.size());
        const auto nr = static_cast<Eigen::Index>(V->rays.size());
        const Eigen::Index n = D.dim();
        const Eigen::Index k = nv + nr;
        Mat P(n, k);
        for (Eigen::Index j = 0; j < nv; ++j) P.col(j) = V->vertices[j];
        for (Eigen::Index j = 0; j < nr; ++j) P.col(nv + j) = V->rays[j];
        Mat A = Mat::Zero(2 * n + 2 + k, k);
        Vec b = Vec::Zero(2 * n + 2 + k);
        A.topRows(n) = P;
        b.head(n) = p.array() + tol;
        A.middleRows(n, n) = -P;
        b.segment(n, n) = -p.array() + tol;
        A.row(2 * n).head(nv).setOnes();
        b(2 * n) = 1.0;
        A.row(2 * n + 1).head(nv).setConstant(-1.0);
        b(2 * n + 1) = -1.0;
        A.bottomRows(k) = -Mat::Identity(k, k);
        return lp::feasible(A, b);
    }
    if (D.transforms().empty()) {
        if (const auto* h = std::get_if<HPolyhedron>(&D.rep()))
            return ((h->A * p - h->b).array() <= tol).all();
        if (const auto* f = std::get_if<PhiHypograph>(&D.rep()); f && f->phi.has_conjugate()) {
            const ExtReal c = f->phi.conjugate(p(0));
            return c.is_finite() && p(1) <= -c.value() + tol;
        }
    }
    for (const auto& u : detail::probe_directions(D.dim())) {
        const ExtReal s = support(D, u);
        if (s.is_finite() && p.dot(u) > s.value() + tol * (1.0 + p.norm())) return false;
    }
    return true;
}

/// Both evaluations of the polar gauge: through the support function and,
/// for vertex forms, through the gauge LP on the explicit polar.
struct GaugeRoutes {
    ExtReal via_support;
    std::optional<ExtReal> via_polar_lp;
};

inline GaugeRoutes polar_gauge_routes(const ConvexSpec& D, const Vec& x) {
    detail::check_dim(D, x);
    for (const auto& u : detail::probe_directions(D.dim(), 64)) {
        if (support(D, u) < ExtReal(-1e-9))
            throw std::domain_error("polar_gauge: the origin is not in D (negative support on a probe direction)");
    }
    GaugeRoutes out{support(D, x), std::nullopt};
    if (auto V = materialize_vertices(D)) {
        // min mu >= 0  s.t.  <v, x> <= mu for vertices, <r, x> <= 0 for rays.
        const auto nv = static_cast<Eigen::Index>(V->vertices.size());
        const auto nr = static_cast<Eigen::Index>(V->rays.size());
        Mat A = Mat::Zero(nv + nr + 1, 1);
        Vec b = Vec::Zero(nv + nr + 1);
        for (Eigen::Index j = 0; j < nv; ++j) {
            A(j, 0) = -1.0;
            b(j) = -V->vertices[j].dot(x);
        }
        for (Eigen::Index j = 0; j < nr; ++j) {
            const Vec& r = V->rays[j];
            b(nv + j) = detail::ray_ascends(x, r) ? -x.dot(r) : 0.0;
        }
        A(nv + nr, 0) = -1.0;
        const auto res = lp::maximize(Vec::Constant(1, -1.0), A, b);
        if (res.status == lp::Status::infeasible) out.via_polar_lp = ExtReal::pos_inf();
        else out.via_polar_lp = -res.value;
    }
    return out;
}

/// gamma_{D polar}(x), which equals sigma_D(x) for closed convex D containing 0.
inline ExtReal polar_gauge(const ConvexSpec& D, const Vec& x) {
    const GaugeRoutes g = polar_gauge_routes(D, x);
    if (g.via_polar_lp) {
        const ExtReal a = g.via_support;
        const ExtReal b = *g.via_polar_lp;
        const bool agree = (a.is_pos_inf() && b.is_pos_inf()) ||
                           (a.is_finite() && b.is_finite() &&
                            std::abs(a.value() - b.value()) <= 1e-7 * std::max(1.0, std::abs(a.value())));
        if (!agree) {
            std::ostringstream os;
            os << "polar_gauge: routes disagree (support " << a << ", gauge LP " << b << ")";
            throw std::runtime_error(os.str());
        }
    }
    return g.via_support;
}

struct SetReport {
    ExtReal support_at_ones;
    bool zero_on_boundary = false;
    bool recession_ok = false;  // sampled, not a proof
    bool bounded_information = false;
    std::string notes;
};

inline SetReport check_membership(const ConvexSpec& D) {
    const int n = D.dim();
    SetReport rep;
    std::ostringstream notes;
    rep.support_at_ones = support(D, Vec::Ones(n));

    try {
        const Vec g = support_subgradient(D, Vec::Ones(n));
        const ConvexSpec shifted = translate(D, -g);
        const ExtReal s = support(shifted, Vec::Ones(n));
        rep.zero_on_boundary = s.is_finite() && std::abs(s.value()) <= 1e-9 * (1.0 + g.norm());
    } catch (const std::domain_error&) {
        rep.zero_on_boundary = false;
        notes << "no finite subgradient at 1_n; ";
    }

    std::mt19937_64 rng(0xdec0de5ULL);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    bool finite_on_nonneg = true;
    bool infinite_off_nonneg = true;
    for (int k = 0; k < 200; ++k) {
        Vec x(n);
        for (int i = 0; i < n; ++i) x(i) = u01(rng);
        if (!support(D, x).is_finite()) finite_on_nonneg = false;
        Vec y = x;
        y(static_cast<Eigen::Index>(k % n)) = -1e6 * (0.5 + u01(rng));
        if (!support(D, y).is_pos_inf()) infinite_off_nonneg = false;
    }
    rep.recession_ok = finite_on_nonneg && infinite_off_nonneg;
    notes << "recession check sampled on 200 directions";
    if (!finite_on_nonneg) notes << "; support infinite on some nonnegative direction";
    if (!infinite_off_nonneg) notes << "; support finite on some direction with a negative component";

    rep.bounded_information = true;
    for (int i = 0; i < n; ++i)
        if (!support(D, Vec::Unit(n, i)).is_finite()) rep.bounded_information = false;
    rep.notes = notes.str();
    return rep;
}

enum class RegionSet { D, Dpolar };

inline const char* to_string(RegionSet s) { return s == RegionSet::D ? "D" : "Dpolar"; }

struct RegionPoint {
    double x;
    double y;
    RegionSet set;
};

struct Window {
    double xmin = -10.0;
    double xmax = 10.0;
    double ymin = -10.0;
    double ymax = 10.0;

    [[nodiscard]] bool contains(double x, double y) const {
        return x >= xmin && x <= xmax && y >= ymin && y <= ymax;
    }
};

/// Planar membership tests used for plotting: p in D through a dense probe
/// of the support function, p in D polar through sigma_D(p) <= 1.
class PlanarRegions {
public:
    explicit PlanarRegions(const ConvexSpec& D, int directions = 1440) : D_(D) {
        if (D.dim() != 2) throw std::invalid_argument("region classification requires a planar set (n = 2)");
        for (int k = 0; k < directions; ++k) {
            const double a = 2.0 * M_PI * k / directions;
            dirs_.push_back(Vec{{std::cos(a), std::sin(a)}});
            sigma_.push_back(support(D, dirs_.back()));
        }
    }

    [[nodiscard]] bool in_set(double x, double y, double tol = 1e-9) const {
        for (std::size_t k = 0; k < dirs_.size(); ++k) {
            if (!sigma_[k].is_finite()) continue;
            if (x * dirs_[k](0) + y * dirs_[k](1) > sigma_[k].value() + tol) return false;
        }
        return true;
    }

    [[nodiscard]] bool in_polar(double x, double y, double tol = 1e-12) const {
        return support(D_, Vec{{x, y}}) <= ExtReal(1.0 + tol);
    }

    /// Exposed points of D (subgradients on the probe directions) and
    /// points of the unit level set of sigma_D along the same directions.
    [[nodiscard]] std::vector<RegionPoint> exact_boundary(const Window& w) const {
        std::vector<RegionPoint> out;
        for (std::size_t k = 0; k < dirs_.size(); ++k) {
            if (!sigma_[k].is_finite()) continue;
            try {
                const Vec d = support_subgradient(D_, dirs_[k]);
                if (w.contains(d(0), d(1))) out.push_back({d(0), d(1), RegionSet::D});
            } catch (const std::domain_error&) {
            }
        }
        for (std::size_t k = 0; k < dirs_.size(); ++k) {
            if (!sigma_[k].is_finite() || sigma_[k].value() <= 0.0) continue;
            const Vec p = dirs_[k] / sigma_[k].value();
            if (w.contains(p(0), p(1))) out.push_back({p(0), p(1), RegionSet::Dpolar});
        }
        return out;
    }

private:
    ConvexSpec D_;
    std::vector<Vec> dirs_;
    std::vector<ExtReal> sigma_;
};

/**
 * Sampled boundaries of D and of its polar inside a window, for plotting.
 * Lattice points that are members with a non-member 4-neighbour are
 * reported, together with the exact exposed points from the probe sweep.
 * D rows come first, then Dpolar rows.
 */
inline std::vector<RegionPoint> region_boundary(const ConvexSpec& D, int grid, const Window& window) {
    if (D.dim() != 2) throw std::invalid_argument("region_boundary requires n = 2");
    if (grid < 1) throw std::invalid_argument("region_boundary: grid must be positive");
    const PlanarRegions regions(D);
    const int N = grid + 1;
    const double hx = (window.xmax - window.xmin) / grid;
    const double hy = (window.ymax - window.ymin) / grid;
    std::vector<char> inD(static_cast<std::size_t>(N) * N);
    std::vector<char> inP(static_cast<std::size_t>(N) * N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            const double x = window.xmin + i * hx;
            const double y = window.ymin + j * hy;
            inD[static_cast<std::size_t>(i) * N + j] = regions.in_set(x, y);
            inP[static_cast<std::size_t>(i) * N + j] = regions.in_polar(x, y);
        }
    auto edge = [N](const std::vector<char>& mask, int i, int j) {
        if (!mask[static_cast<std::size_t>(i) * N + j]) return false;
        const int di[] = {1, -1, 0, 0};
        const int dj[] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
            const int a = i + di[k];
            const int b = j + dj[k];
            if (a < 0 || b < 0 || a >= N || b >= N) continue;
            if (!mask[static_cast<std::size_t>(a) * N + b]) return true;
        }
        return false;
    };
    const auto exact = regions.exact_boundary(window);
    std::vector<RegionPoint> out;
    for (RegionSet which : {RegionSet::D, RegionSet::Dpolar}) {
        const auto& mask = which == RegionSet::D ? inD : inP;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                if (edge(mask, i, j)) out.push_back({window.xmin + i * hx, window.ymin + j * hy, which});
        for (const auto& p : exact)
            if (p.set == which) out.push_back(p);
    }
    return out;
}

}  // namespace cvxinfo

#endif  // CVXINFO_CONVEX_SET_HPP
