#ifndef CVXINFO_DECISION_HPP
#define CVXINFO_DECISION_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cvxinfo/convex_set.hpp"
#include "cvxinfo/experiment.hpp"
#include "cvxinfo/information.hpp"
#include "cvxinfo/phi.hpp"

namespace cvxinfo {

enum class LossForm { ZeroOne, Log, Brier, Table };

inline const char* to_string(LossForm f) {
    switch (f) {
        case LossForm::ZeroOne: return "zero_one";
        case LossForm::Log: return "log";
        case LossForm::Brier: return "brier";
        case LossForm::Table: return "table";
    }
    return "?";
}

/// Points of the simplex lattice {k / K : k in N^n, sum k = K}; with
/// interior set, only strictly positive points (denominator K).
inline std::vector<Vec> simplex_lattice(int n, int K, bool interior = false) {
    if (n < 1 || K < 1) throw std::invalid_argument("simplex_lattice: n and K must be positive");
    std::vector<Vec> out;
    const int lo = interior ? 1 : 0;
    std::vector<int> k(static_cast<std::size_t>(n), lo);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n - 1) {
            if (left < lo) return;
            k[static_cast<std::size_t>(pos)] = left;
            Vec p(n);
            for (int i = 0; i < n; ++i) p(i) = static_cast<double>(k[static_cast<std::size_t>(i)]) / K;
            out.push_back(p);
            return;
        }
        for (int c = lo; c <= left - lo * (n - 1 - pos); ++c) {
            k[static_cast<std::size_t>(pos)] = c;
            rec(pos + 1, left - c);
        }
    };
    rec(0, K);
    return out;
}

/// Default prediction grids: 201 points on the binary simplex, a lattice of
/// about 10^4 points otherwise. Log loss keeps to the interior.
inline std::vector<Vec> default_grid(int n, LossForm form) {
    const bool interior = form == LossForm::Log;
    if (n == 2) {
        std::vector<Vec> g;
        for (int k = 0; k <= 200; ++k) {
            const double eta = interior ? (k + 1) / 202.0 : k / 200.0;
            g.push_back(Vec{{eta, 1.0 - eta}});
        }
        return g;
    }
    // Largest lattice with at most ~10^4 points.
    int K = 1;
    auto count = [n, interior](int k) {
        const int free = interior ? k - n : k;
        if (free < 0) return 0.0;
        double c = 1.0;
        for (int i = 1; i < n; ++i) c = c * (free + i) / i;
        return c;
    };
    while (count(K + 1) <= 10011.0) ++K;
    return simplex_lattice(n, K, interior);
}

inline void check_simplex_point(const Vec& p, Eigen::Index n) {
    if (p.size() != n)
        throw std::invalid_argument("prediction has length " + std::to_string(p.size()) + ", expected " +
                                    std::to_string(n));
    if ((p.array() < -1e-12).any() || std::abs(p.sum() - 1.0) > 1e-9)
        throw std::invalid_argument("prediction is not a point of the simplex");
}

/**
 * A loss on the simplex together with the prediction grid it is optimised
 * over. Both sides of every bridge identity use this grid, so the grid is
 * part of the loss's identity.
 */
class LossSpec {
public:
    static LossSpec zero_one(int n, std::vector<Vec> grid = {}) { return LossSpec(n, LossForm::ZeroOne, std::move(grid)); }
    static LossSpec log(int n, std::vector<Vec> grid = {}) { return LossSpec(n, LossForm::Log, std::move(grid)); }
    static LossSpec brier(int n, std::vector<Vec> grid = {}) { return LossSpec(n, LossForm::Brier, std::move(grid)); }

    /// Tabulated loss: loss_vectors[k] is the loss of predictions[k]. Entries
    /// must be nonnegative unless offset_applied is set.
    static LossSpec table(std::vector<Vec> predictions, std::vector<Vec> loss_vectors, bool offset_applied = false) {
        if (predictions.empty() || predictions.size() != loss_vectors.size())
            throw std::invalid_argument("table loss: predictions and loss vectors must be nonempty and equally long");
        const auto n = predictions.front().size();
        for (std::size_t k = 0; k < predictions.size(); ++k) {
            check_simplex_point(predictions[k], n);
            if (loss_vectors[k].size() != n) throw std::invalid_argument("table loss: loss vector length mismatch");
            if (!loss_vectors[k].allFinite()) throw std::invalid_argument("table loss: loss vectors must be finite");
            if (!offset_applied && (loss_vectors[k].array() < 0.0).any())
                throw std::invalid_argument("table loss: negative loss without a normalization offset");
        }
        LossSpec l(static_cast<int>(n), LossForm::Table, predictions);
        l.table_losses_ = std::move(loss_vectors);
        l.offset_applied_ = offset_applied;
        l.rebuild();
        return l;
    }

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] LossForm form() const { return form_; }
    [[nodiscard]] const std::vector<Vec>& grid() const { return grid_; }
    [[nodiscard]] bool offset_applied() const { return offset_applied_; }
    [[nodiscard]] const std::vector<Vec>& table_losses() const { return table_losses_; }

    /// Row k holds the loss vector of grid point k (+inf entries allowed).
    [[nodiscard]] const Mat& grid_losses() const { return losses_; }

    /// (l(p, 1), ..., l(p, n)).
    [[nodiscard]] Vec loss_vector(const Vec& p) const {
        check_simplex_point(p, n_);
        Vec out(n_);
        switch (form_) {
            case LossForm::ZeroOne:
                // Expected 0-1 loss of the randomised prediction p.
                out = Vec::Ones(n_) - p;
                break;
            case LossForm::Log:
                for (int i = 0; i < n_; ++i) out(i) = p(i) > 0.0 ? -std::log(p(i)) : kInf;
                break;
            case LossForm::Brier:
                for (int i = 0; i < n_; ++i) out(i) = (p - Vec::Unit(n_, i)).squaredNorm();
                break;
            case LossForm::Table: {
                for (std::size_t k = 0; k < grid_.size(); ++k)
                    if ((grid_[k] - p).cwiseAbs().maxCoeff() <= 1e-12) return table_losses_[k];
                throw std::invalid_argument("table loss: prediction is not in the table");
            }
        }
        return out;
    }

private:
    LossSpec(int n, LossForm form, std::vector<Vec> grid) : n_(n), form_(form), grid_(std::move(grid)) {
        if (n < 2) throw std::invalid_argument("loss: need at least two outcomes");
        if (grid_.empty()) grid_ = default_grid(n, form);
        for (const auto& p : grid_) check_simplex_point(p, n);
        if (form != LossForm::Table) rebuild();
    }

    void rebuild() {
        losses_.resize(static_cast<Eigen::Index>(grid_.size()), n_);
        for (std::size_t k = 0; k < grid_.size(); ++k)
            losses_.row(static_cast<Eigen::Index>(k)) = loss_vector(grid_[k]).transpose();
    }

    int n_;
    LossForm form_;
    std::vector<Vec> grid_;
    std::vector<Vec> table_losses_;
    bool offset_applied_ = false;
    Mat losses_;
};

inline Vec loss_vector(const LossSpec& loss, const Vec& p) { return loss.loss_vector(p); }

/// <l, nu> with 0 * inf = 0.
inline double expected_loss(const Vec& l, const Vec& nu) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < l.size(); ++i)
        if (nu(i) != 0.0) s += nu(i) * l(i);
    return s;
}

struct SuperpredictionSpec {
    ConvexSpec base;  // loss vectors of the grid + cone{e_i}
    LossSpec loss;
    bool normalized = false;
};

/**
 * spr(l) = {l(p) : p in grid} + R_+^n as a vertex form with rays e_i. Loss
 * vectors with an infinite entry contribute nothing and are dropped. With
 * normalize set the set is translated by -l(1_n/n).
 */
inline SuperpredictionSpec superprediction(const LossSpec& loss, bool normalize = false) {
    std::vector<Vec> verts;
    const Mat& L = loss.grid_losses();
    for (Eigen::Index k = 0; k < L.rows(); ++k)
        if (L.row(k).allFinite()) verts.push_back(L.row(k).transpose());
    if (verts.empty()) throw std::invalid_argument("superprediction: no finite loss vector on the grid");
    std::vector<Vec> rays;
    for (int i = 0; i < loss.n(); ++i) rays.push_back(Vec::Unit(loss.n(), i));
    ConvexSpec base = ConvexSpec::vpolyhedron(std::move(verts), std::move(rays));
    if (normalize) base = translate(base, -loss.loss_vector(Vec::Constant(loss.n(), 1.0 / loss.n())));
    return {std::move(base), loss, normalize};
}

/// min over the grid of <l(p), nu>.
inline double conditional_bayes_risk(const LossSpec& loss, const Vec& nu) {
    check_simplex_point(nu, loss.n());
    const Mat& L = loss.grid_losses();
    double best = kInf;
    if (L.allFinite()) {
        const Vec r = L * nu;
        best = r.minCoeff();
    } else {
        for (Eigen::Index k = 0; k < L.rows(); ++k) best = std::min(best, expected_loss(L.row(k).transpose(), nu));
    }
    return best;
}

/// The same risk as -sigma_{-spr(l)}(nu).
inline double conditional_bayes_risk_via_support(const LossSpec& loss, const Vec& nu) {
    const SuperpredictionSpec spr = superprediction(loss);
    return -support(hadamard_scale(spr.base, -Vec::Ones(loss.n())), nu).value();
}

/// E[cbrisk(posterior)] under the joint pi x E; zero-mass outcomes skipped.
inline double bayes_risk(const LossSpec& loss, const Vec& pi, const Experiment& E) {
    if (loss.n() != E.n()) throw std::invalid_argument("bayes_risk: loss and experiment disagree on n");
    const Mat joint = product_with_prior(pi, E);
    double total = 0.0;
    for (Eigen::Index x = 0; x < E.m(); ++x) {
        const double mass = joint.col(x).sum();
        if (mass <= 0.0) continue;
        Vec post = joint.col(x) / mass;
        post /= post.sum();
        total += mass * conditional_bayes_risk(loss, post);
    }
    return total;
}

/**
 * -pi (.) spr(l), the set whose information is the negated Bayes risk. A
 * prior with zero entries is applied as a pullback by diag(-pi), which has
 * the same support function.
 */
inline ConvexSpec bridge_set(const LossSpec& loss, const Vec& pi) {
    if (pi.size() != loss.n()) throw std::invalid_argument("bridge_set: prior length mismatch");
    const SuperpredictionSpec spr = superprediction(loss);
    if ((pi.array() != 0.0).all()) return hadamard_scale(spr.base, -pi);
    return pullback(spr.base, Mat((-pi).asDiagonal()));
}

/// A decision rule: one prediction per outcome.
struct Hypothesis {
    std::vector<Vec> predictions;

    static Hypothesis from_grid(const LossSpec& loss, const std::vector<std::size_t>& idx) {
        Hypothesis h;
        for (auto k : idx) {
            if (k >= loss.grid().size()) throw std::out_of_range("hypothesis: grid index out of range");
            h.predictions.push_back(loss.grid()[k]);
        }
        return h;
    }
};

namespace detail {

inline Mat hypothesis_losses(const LossSpec& loss, const Hypothesis& h, Eigen::Index m) {
    if (static_cast<Eigen::Index>(h.predictions.size()) != m)
        throw std::invalid_argument("hypothesis covers " + std::to_string(h.predictions.size()) +
                                    " outcomes, experiment has " + std::to_string(m));
    Mat L(loss.n(), m);
    for (Eigen::Index x = 0; x < m; ++x) L.col(x) = loss.loss_vector(h.predictions[static_cast<std::size_t>(x)]);
    return L;
}

}  // namespace detail

/// min_{h in H} sum_x sum_i pi_i E_i(x) l(h(x), i).
inline double constrained_bayes_risk(const LossSpec& loss, const std::vector<Hypothesis>& H, const Vec& pi,
                                     const Experiment& E) {
    if (H.empty()) throw std::invalid_argument("constrained_bayes_risk: empty hypothesis class");
    const Mat joint = product_with_prior(pi, E);
    double best = kInf;
    for (const auto& h : H) {
        const Mat L = detail::hypothesis_losses(loss, h, E.m());
        double r = 0.0;
        for (Eigen::Index x = 0; x < E.m(); ++x)
            for (Eigen::Index i = 0; i < E.n(); ++i)
                if (joint(i, x) != 0.0) r += joint(i, x) * L(i, x);
        best = std::min(best, r);
    }
    return best;
}

/// Member per hypothesis with column x = -pi (.) l(h(x)).
inline FunctionClass constrained_bridge_class(const LossSpec& loss, const std::vector<Hypothesis>& H, const Vec& pi,
                                              Eigen::Index m) {
    if (pi.size() != loss.n()) throw std::invalid_argument("constrained_bridge_class: prior length mismatch");
    FunctionClass F(loss.n(), m);
    for (const auto& h : H) {
        Mat L = detail::hypothesis_losses(loss, h, m);
        for (Eigen::Index x = 0; x < m; ++x) L.col(x) = -pi.cwiseProduct(L.col(x));
        F.add(std::move(L));
    }
    return F;
}

/// Every map from outcomes to grid points (|grid|^m hypotheses).
inline std::vector<Hypothesis> all_grid_hypotheses(const LossSpec& loss, Eigen::Index m) {
    const std::size_t g = loss.grid().size();
    if (std::pow(static_cast<double>(g), static_cast<double>(m)) > 1e6)
        throw std::invalid_argument("all_grid_hypotheses: too many hypotheses");
    std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
    std::vector<Hypothesis> out;
    while (true) {
        out.push_back(Hypothesis::from_grid(loss, idx));
        std::size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == g) idx[pos++] = 0;
        if (pos == idx.size()) break;
    }
    return out;
}

/**
 * Binary loss induced by phi and prior pi, tabulated on the grid
 * (eta, 1 - eta):
 *   l_1 = -phi'(t) / pi_1,   l_2 = -phi(t) / pi_2 + (eta / (1 - eta)) phi'(t) / pi_1,
 * with t = (eta / (1 - eta)) (pi_2 / pi_1). Kinks use the midpoint derivative.
 */
inline LossSpec phi_induced_loss(const PhiGenerator& phi, const Vec& pi, std::vector<Vec> grid = {}) {
    if (pi.size() != 2 || !(pi(0) > 0.0) || !(pi(1) > 0.0) || std::abs(pi.sum() - 1.0) > 1e-12)
        throw std::invalid_argument("phi_induced_loss: needs a binary prior with positive entries");
    if (grid.empty()) grid = default_grid(2, LossForm::Log);
    std::vector<Vec> preds;
    std::vector<Vec> losses;
    for (const auto& p : grid) {
        if (p.size() != 2 || p(0) <= 0.0 || p(1) <= 0.0) continue;
        const double ratio = p(0) / p(1);
        const double t = ratio * pi(1) / pi(0);
        const double d = phi.derivative(t).selection();
        const ExtReal v = phi.value(t);
        if (!std::isfinite(d) || !v.is_finite()) continue;
        preds.push_back(p);
        losses.push_back(Vec{{-d / pi(0), -v.value() / pi(1) + ratio * d / pi(0)}});
    }
    return LossSpec::table(std::move(preds), std::move(losses), true);
}

/// Closed-form conditional risk of the phi-induced loss at (eta, 1 - eta)
/// for prior (pi1, 1 - pi1): -((1-eta)/(1-pi1)) phi(((1-pi1)/pi1)(eta/(1-eta))).
inline double phi_conditional_risk(const PhiGenerator& phi, double pi1, double eta) {
    return -perspective(phi, eta / pi1, (1.0 - eta) / (1.0 - pi1)).value();
}

}  // namespace cvxinfo

#endif  // CVXINFO_DECISION_HPP
