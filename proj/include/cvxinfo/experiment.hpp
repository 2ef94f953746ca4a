#ifndef CVXINFO_EXPERIMENT_HPP
#define CVXINFO_EXPERIMENT_HPP

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cvxinfo/ext_real.hpp"

namespace cvxinfo {

namespace detail {

inline void validate_stochastic(const Mat& M, const char* what) {
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        for (Eigen::Index j = 0; j < M.cols(); ++j) {
            if (!(M(i, j) >= 0.0) || !std::isfinite(M(i, j))) {
                std::ostringstream os;
                os << what << ": entry (" << i << ", " << j << ") = " << M(i, j) << " is not a probability";
                throw std::invalid_argument(os.str());
            }
        }
        const double s = M.row(i).sum();
        if (std::abs(s - 1.0) > 1e-12) {
            std::ostringstream os;
            os.precision(17);
            os << what << ": row " << i << " sums to " << s << ", expected 1";
            throw std::invalid_argument(os.str());
        }
    }
}

inline std::string shape(const Mat& M) {
    return std::to_string(M.rows()) + "x" + std::to_string(M.cols());
}

}  // namespace detail

/// Row-stochastic matrix viewed as a Markov kernel [k] ~> [l].
class Kernel {
public:
    explicit Kernel(Mat matrix) : matrix_(std::move(matrix)) {
        if (matrix_.rows() == 0 || matrix_.cols() == 0) throw std::invalid_argument("Kernel: empty matrix");
        detail::validate_stochastic(matrix_, "Kernel");
    }

    static Kernel identity(Eigen::Index k) { return Kernel(Mat::Identity(k, k)); }

    [[nodiscard]] Eigen::Index rows_in() const { return matrix_.rows(); }
    [[nodiscard]] Eigen::Index cols_out() const { return matrix_.cols(); }
    [[nodiscard]] const Mat& matrix() const { return matrix_; }

private:
    Mat matrix_;
};

/// A finite experiment [n] ~> [m]: row i is the distribution E_i.
class Experiment {
public:
    explicit Experiment(Mat rows) : rows_(std::move(rows)) {
        if (rows_.rows() == 0 || rows_.cols() == 0) throw std::invalid_argument("Experiment: empty matrix");
        detail::validate_stochastic(rows_, "Experiment");
    }

    [[nodiscard]] Eigen::Index n() const { return rows_.rows(); }
    [[nodiscard]] Eigen::Index m() const { return rows_.cols(); }
    [[nodiscard]] const Mat& rows() const { return rows_; }
    [[nodiscard]] Vec row(Eigen::Index i) const { return rows_.row(i).transpose(); }

private:
    Mat rows_;
};

/// Reference measure on the outcomes; must dominate every E_i.
class RefMeasure {
public:
    explicit RefMeasure(Vec weights) : w_(std::move(weights)) {
        if (w_.size() == 0) throw std::invalid_argument("RefMeasure: empty");
        for (Eigen::Index i = 0; i < w_.size(); ++i)
            if (!(w_(i) >= 0.0) || !std::isfinite(w_(i)))
                throw std::invalid_argument("RefMeasure: weights must be finite and nonnegative");
    }

    /// rho = (1/n) sum_i E_i.
    static RefMeasure average(const Experiment& E) {
        return RefMeasure(E.rows().colwise().sum().transpose() / static_cast<double>(E.n()));
    }
    static RefMeasure uniform(Eigen::Index m) {
        return RefMeasure(Vec::Constant(m, 1.0 / static_cast<double>(m)));
    }

    [[nodiscard]] const Vec& weights() const { return w_; }
    [[nodiscard]] Eigen::Index size() const { return w_.size(); }

    /// Throws unless rho(x) = 0 implies E_i(x) = 0 for all i.
    void check_dominates(const Experiment& E) const {
        if (w_.size() != E.m())
            throw std::invalid_argument("RefMeasure: length " + std::to_string(w_.size()) +
                                        " does not match experiment with " + std::to_string(E.m()) + " outcomes");
        for (Eigen::Index x = 0; x < E.m(); ++x)
            if (w_(x) == 0.0 && E.rows().col(x).maxCoeff() > 0.0)
                throw std::invalid_argument("RefMeasure: does not dominate the experiment at outcome " +
                                            std::to_string(x));
    }

private:
    Vec w_;
};

struct RnVector {
    Vec value;
    bool null = false;  // rho(x) = 0; the outcome carries no mass
};

/// (E_1(x)/rho(x), ..., E_n(x)/rho(x)).
inline RnVector rn_vector(const Experiment& E, const RefMeasure& rho, Eigen::Index outcome) {
    rho.check_dominates(E);
    if (outcome < 0 || outcome >= E.m()) throw std::out_of_range("rn_vector: outcome index out of range");
    const double r = rho.weights()(outcome);
    if (r == 0.0) return {Vec::Zero(E.n()), true};
    return {E.rows().col(outcome) / r, false};
}

/// Label noise: rows of R E are mixtures sum_j R_ij E_j.
inline Experiment compose_label(const Kernel& R, const Experiment& E) {
    if (R.rows_in() != E.n() || R.cols_out() != E.n())
        throw std::invalid_argument("compose_label: kernel " + detail::shape(R.matrix()) +
                                    " does not act on experiment " + detail::shape(E.rows()));
    return Experiment(R.matrix() * E.rows());
}

/// Observation noise: each row E_i is pushed through S.
inline Experiment compose_observation(const Experiment& E, const Kernel& S) {
    if (S.rows_in() != E.m())
        throw std::invalid_argument("compose_observation: experiment " + detail::shape(E.rows()) +
                                    " cannot feed kernel " + detail::shape(S.matrix()));
    return Experiment(E.rows() * S.matrix());
}

/// Kernel composition K1 then K2.
inline Kernel compose(const Kernel& K1, const Kernel& K2) {
    if (K1.cols_out() != K2.rows_in())
        throw std::invalid_argument("compose: kernels " + detail::shape(K1.matrix()) + " and " +
                                    detail::shape(K2.matrix()) + " do not chain");
    return Kernel(K1.matrix() * K2.matrix());
}

/// Totally noninformative experiment: every row equals c / sum(c).
inline Experiment make_tni(Eigen::Index n, Eigen::Index m, const Vec& c) {
    if (n < 1 || m < 1 || c.size() != m) throw std::invalid_argument("make_tni: bad dimensions");
    if ((c.array() < 0.0).any() || c.sum() <= 0.0) throw std::invalid_argument("make_tni: weights must be positive");
    const Vec p = c / c.sum();
    return Experiment(Vec::Ones(n) * p.transpose());
}

inline Experiment make_tni(Eigen::Index n, Eigen::Index m) { return make_tni(n, m, Vec::Ones(m)); }

/// Totally informative experiment: outcome x belongs to label x mod n, each
/// row uniform over its own outcomes.
inline Experiment make_ti(Eigen::Index n, Eigen::Index m) {
    if (n < 1 || m < n) throw std::invalid_argument("make_ti: need m >= n >= 1");
    Mat rows = Mat::Zero(n, m);
    for (Eigen::Index x = 0; x < m; ++x) rows(x % n, x) = 1.0;
    for (Eigen::Index i = 0; i < n; ++i) rows.row(i) /= rows.row(i).sum();
    return Experiment(rows);
}

/// Joint distribution (pi x E)(i, x) = pi_i E_i(x).
inline Mat product_with_prior(const Vec& pi, const Experiment& E) {
    if (pi.size() != E.n())
        throw std::invalid_argument("product_with_prior: prior of length " + std::to_string(pi.size()) +
                                    " for experiment " + detail::shape(E.rows()));
    if ((pi.array() < 0.0).any() || std::abs(pi.sum() - 1.0) > 1e-12)
        throw std::invalid_argument("product_with_prior: prior is not a probability vector");
    return pi.asDiagonal() * E.rows();
}

}  // namespace cvxinfo

#endif  // CVXINFO_EXPERIMENT_HPP
