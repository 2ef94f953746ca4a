#ifndef CVXINFO_SIMPLEX_LP_HPP
#define CVXINFO_SIMPLEX_LP_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "cvxinfo/ext_real.hpp"

/**
 * Dense two-phase simplex for small linear programs
 *
 *     maximize  c^T x   subject to  A x <= b,   x free.
 *
 * Free variables are split as x = u - w with u, w >= 0 and each row gets a
 * slack. Rows with a negative right-hand side are negated and receive an
 * artificial variable, which phase 1 drives to zero. Pivoting uses Bland's
 * rule throughout so degenerate problems terminate.
 *
 * Every call owns its tableau; nothing is shared between calls.
 */
namespace cvxinfo::lp {

enum class Status { optimal, unbounded, infeasible };

struct Options {
    double pivot_tol = 1e-10;
    double feas_tol = 1e-9;
    long max_iter = 200000;
};

struct Result {
    Status status = Status::infeasible;
    /// Optimal vertex, or the last basic feasible point when unbounded.
    Vec x;
    /// +inf when unbounded, NaN when infeasible.
    double value = std::numeric_limits<double>::quiet_NaN();
    /// Direction with A ray <= 0 and c^T ray > 0 (unbounded only).
    Vec ray;
};

namespace detail {

class Tableau {
public:
    Tableau(const Mat& A, const Vec& b)
        : m_(A.rows()), k_(A.cols()) {
        std::vector<Eigen::Index> neg_rows;
        for (Eigen::Index i = 0; i < m_; ++i)
            if (b(i) < 0.0) neg_rows.push_back(i);
        n_art_ = static_cast<Eigen::Index>(neg_rows.size());
        ncols_ = 2 * k_ + m_ + n_art_;
        T_ = Mat::Zero(m_, ncols_ + 1);
        basis_.resize(m_);
        Eigen::Index art = 0;
        for (Eigen::Index i = 0; i < m_; ++i) {
            const double sign = b(i) < 0.0 ? -1.0 : 1.0;
            T_.row(i).segment(0, k_) = sign * A.row(i);
            T_.row(i).segment(k_, k_) = -sign * A.row(i);
            T_(i, 2 * k_ + i) = sign;
            T_(i, ncols_) = sign * b(i);
            if (sign < 0.0) {
                const Eigen::Index col = 2 * k_ + m_ + art++;
                T_(i, col) = 1.0;
                basis_[i] = col;
            } else {
                basis_[i] = 2 * k_ + i;
            }
        }
    }

    [[nodiscard]] bool is_artificial(Eigen::Index col) const { return col >= 2 * k_ + m_; }
    [[nodiscard]] Eigen::Index num_artificial() const { return n_art_; }

    /// Runs the simplex on the given column costs. Returns the entering
    /// column of an unbounded ray, or -1 at optimality.
    Eigen::Index optimize(const Vec& cost, bool bar_artificial, const Options& opt) {
        set_objective(cost);
        const double scale = std::max(1.0, cost.cwiseAbs().maxCoeff());
        const double rc_tol = opt.pivot_tol * scale;
        for (long iter = 0; iter < opt.max_iter; ++iter) {
            Eigen::Index enter = -1;
            for (Eigen::Index j = 0; j < ncols_; ++j) {
                if (bar_artificial && is_artificial(j)) continue;
                if (z_(j) < -rc_tol) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return -1;

            Eigen::Index leave = -1;
            double best = 0.0;
            for (Eigen::Index i = 0; i < m_; ++i) {
                const double a = T_(i, enter);
                if (a <= opt.pivot_tol) continue;
                const double ratio = T_(i, ncols_) / a;
                if (leave < 0) {
                    leave = i;
                    best = ratio;
                    continue;
                }
                const double eps = 1e-12 * (1.0 + std::abs(best));
                if (ratio < best - eps || (ratio <= best + eps && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return enter;
            pivot(leave, enter);
        }
        throw std::runtime_error("simplex: iteration limit reached");
    }

    /// Pivots basic artificials out where some real column allows it.
    void expel_artificials(const Options& opt) {
        for (Eigen::Index i = 0; i < m_; ++i) {
            if (!is_artificial(basis_[i])) continue;
            for (Eigen::Index j = 0; j < 2 * k_ + m_; ++j) {
                if (std::abs(T_(i, j)) > opt.pivot_tol) {
                    pivot(i, j);
                    break;
                }
            }
        }
    }

    [[nodiscard]] double objective_value() const { return z_(ncols_); }

    [[nodiscard]] Vec column_values() const {
        Vec v = Vec::Zero(ncols_);
        for (Eigen::Index i = 0; i < m_; ++i) v(basis_[i]) = T_(i, ncols_);
        return v;
    }

    [[nodiscard]] Vec primal() const {
        const Vec v = column_values();
        return v.segment(0, k_) - v.segment(k_, k_);
    }

    [[nodiscard]] Vec ray(Eigen::Index enter) const {
        Vec d = Vec::Zero(ncols_);
        d(enter) = 1.0;
        for (Eigen::Index i = 0; i < m_; ++i) d(basis_[i]) -= T_(i, enter);
        return d.segment(0, k_) - d.segment(k_, k_);
    }

    [[nodiscard]] Eigen::Index ncols() const { return ncols_; }
    [[nodiscard]] Eigen::Index nvars() const { return k_; }
    [[nodiscard]] Eigen::Index nrows() const { return m_; }

private:
    void set_objective(const Vec& cost) {
        z_ = Vec::Zero(ncols_ + 1);
        for (Eigen::Index j = 0; j <= ncols_; ++j) {
            double acc = j < ncols_ ? -cost(j) : 0.0;
            for (Eigen::Index i = 0; i < m_; ++i) acc += cost(basis_[i]) * T_(i, j);
            z_(j) = acc;
        }
    }

    void pivot(Eigen::Index r, Eigen::Index c) {
        T_.row(r) /= T_(r, c);
        for (Eigen::Index i = 0; i < m_; ++i) {
            if (i == r) continue;
            const double f = T_(i, c);
            if (f != 0.0) T_.row(i) -= f * T_.row(r);
        }
        const double f = z_(c);
        if (f != 0.0) z_ -= f * T_.row(r).transpose();
        basis_[r] = c;
    }

    Eigen::Index m_;
    Eigen::Index k_;
    Eigen::Index n_art_ = 0;
    Eigen::Index ncols_ = 0;
    Mat T_;
    Vec z_;
    std::vector<Eigen::Index> basis_;
};

inline Result infeasible_result(Eigen::Index k) {
    Result r;
    r.status = Status::infeasible;
    r.x = Vec::Zero(k);
    return r;
}

}  // namespace detail

inline Result maximize(const Vec& c, const Mat& A, const Vec& b, const Options& opt = {}) {
    if (A.cols() != c.size() || A.rows() != b.size())
        throw std::invalid_argument("lp::maximize: inconsistent dimensions");
    const Eigen::Index k = A.cols();
    detail::Tableau tab(A, b);

    if (tab.num_artificial() > 0) {
        Vec phase1 = Vec::Zero(tab.ncols());
        for (Eigen::Index j = 0; j < tab.ncols(); ++j)
            if (tab.is_artificial(j)) phase1(j) = -1.0;
        tab.optimize(phase1, false, opt);
        const double scale = 1.0 + (b.size() ? b.cwiseAbs().maxCoeff() : 0.0);
        if (tab.objective_value() < -opt.feas_tol * scale) return detail::infeasible_result(k);
        tab.expel_artificials(opt);
    }

    Vec phase2 = Vec::Zero(tab.ncols());
    phase2.segment(0, k) = c;
    phase2.segment(k, k) = -c;
    const Eigen::Index enter = tab.optimize(phase2, true, opt);

    Result r;
    r.x = tab.primal();
    if (enter >= 0) {
        r.status = Status::unbounded;
        r.value = kInf;
        r.ray = tab.ray(enter);
    } else {
        r.status = Status::optimal;
        r.value = c.dot(r.x);
    }
    return r;
}

/// Phase-1 feasibility probe for {x : A x <= b}.
inline bool feasible(const Mat& A, const Vec& b, const Options& opt = {}) {
    return maximize(Vec::Zero(A.cols()), A, b, opt).status != Status::infeasible;
}

}  // namespace cvxinfo::lp

#endif  // CVXINFO_SIMPLEX_LP_HPP
