#ifndef CVXINFO_INFORMATION_HPP
#define CVXINFO_INFORMATION_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cvxinfo/convex_set.hpp"
#include "cvxinfo/experiment.hpp"
#include "cvxinfo/phi.hpp"
#include "cvxinfo/phi_sets.hpp"

namespace cvxinfo {

/**
 * A finite family of maps Omega -> R^n, each stored as an n x m table whose
 * column x is f(x).
 */
class FunctionClass {
public:
    FunctionClass(Eigen::Index n, Eigen::Index m, std::vector<Mat> members = {})
        : n_(n), m_(m), members_(std::move(members)) {
        for (const auto& f : members_) check(f);
    }

    void add(Mat f) {
        check(f);
        members_.push_back(std::move(f));
    }

    [[nodiscard]] Eigen::Index n() const { return n_; }
    [[nodiscard]] Eigen::Index m() const { return m_; }
    [[nodiscard]] const std::vector<Mat>& members() const { return members_; }
    [[nodiscard]] std::size_t size() const { return members_.size(); }
    [[nodiscard]] bool empty() const { return members_.empty(); }

    /// Range certificate: every column of every member lies in D.
    [[nodiscard]] bool certify_range(const ConvexSpec& D, double tol = 1e-9) const {
        if (D.dim() != n_) throw D.dimension_error("function class values", n_);
        for (const auto& f : members_)
            for (Eigen::Index x = 0; x < m_; ++x)
                if (!contains(D, f.col(x), tol)) return false;
        return true;
    }

private:
    void check(const Mat& f) const {
        if (f.rows() != n_ || f.cols() != m_)
            throw std::invalid_argument("FunctionClass: member of shape " + detail::shape(f) + ", expected " +
                                        std::to_string(n_) + "x" + std::to_string(m_));
    }

    Eigen::Index n_;
    Eigen::Index m_;
    std::vector<Mat> members_;
};

struct InfoResult {
    ExtReal value;
    /// Column x is the maximiser at outcome x; columns with
    /// witness_defined[x] == false carry no witness.
    std::optional<Mat> witness;
    std::vector<bool> witness_defined;
    /// Integrand per outcome, so value = sum_x rho(x) per_outcome(x).
    Vec per_outcome;
    Vec rho;
    /// Index of the maximising member (function-class information only).
    std::optional<std::size_t> best_member;
};

/**
 * I_D(E) = sum_x rho(x) sigma_D(dE/drho(x)); rho defaults to the average
 * of the rows. Outcomes with rho(x) = 0 are dropped. A +inf integrand
 * makes the total +inf and leaves that witness column undefined.
 */
inline InfoResult d_information(const ConvexSpec& D, const Experiment& E,
                                const std::optional<RefMeasure>& ref = std::nullopt) {
    if (D.dim() != E.n())
        throw std::invalid_argument("d_information: set of dimension " + std::to_string(D.dim()) +
                                    " for experiment " + detail::shape(E.rows()));
    const RefMeasure rho = ref ? *ref : RefMeasure::average(E);
    rho.check_dominates(E);
    InfoResult out;
    out.rho = rho.weights();
    out.per_outcome = Vec::Zero(E.m());
    out.witness = Mat::Zero(E.n(), E.m());
    out.witness_defined.assign(static_cast<std::size_t>(E.m()), false);
    ExtReal total = 0.0;
    for (Eigen::Index x = 0; x < E.m(); ++x) {
        const double r = rho.weights()(x);
        if (r == 0.0) continue;
        const Vec v = E.rows().col(x) / r;
        const ExtReal s = support(D, v);
        out.per_outcome(x) = s.value();
        total += scaled(r, s);
        if (!s.is_finite()) continue;
        try {
            out.witness->col(x) = support_subgradient(D, v);
            out.witness_defined[static_cast<std::size_t>(x)] = true;
        } catch (const std::domain_error&) {
        }
    }
    out.value = total;
    return out;
}

/**
 * Classical I_phi(p, q) = sum_x q(x) phi(p(x)/q(x)), with q(x) phi(0+) where
 * p(x) = 0 and p(x) phi'_inf where q(x) = 0 < p(x).
 */
inline ExtReal phi_divergence(const PhiGenerator& phi, const Vec& p, const Vec& q) {
    if (p.size() != q.size())
        throw std::invalid_argument("phi_divergence: lengths " + std::to_string(p.size()) + " and " +
                                    std::to_string(q.size()) + " differ");
    ExtReal total = 0.0;
    for (Eigen::Index x = 0; x < p.size(); ++x) {
        if (q(x) > 0.0) {
            total += p(x) > 0.0 ? scaled(q(x), phi.value(p(x) / q(x))) : scaled(q(x), phi.at_zero());
        } else if (p(x) > 0.0) {
            total += scaled(p(x), phi.slope_inf());
        }
    }
    return total;
}

/// I_F(E) = max_{f in F} sum_i sum_x f_i(x) E_i(x); lowest index wins ties.
inline InfoResult f_information(const FunctionClass& F, const Experiment& E) {
    if (F.empty()) throw std::invalid_argument("f_information: empty function class");
    if (F.n() != E.n() || F.m() != E.m())
        throw std::invalid_argument("f_information: class " + std::to_string(F.n()) + "x" + std::to_string(F.m()) +
                                    " for experiment " + detail::shape(E.rows()));
    std::size_t best = 0;
    double best_val = -kInf;
    for (std::size_t k = 0; k < F.size(); ++k) {
        const Mat& f = F.members()[k];
        double v = 0.0;
        for (Eigen::Index i = 0; i < E.n(); ++i)
            for (Eigen::Index x = 0; x < E.m(); ++x) v += f(i, x) * E.rows()(i, x);
        if (v > best_val) {
            best_val = v;
            best = k;
        }
    }
    const RefMeasure rho = RefMeasure::average(E);
    InfoResult out;
    out.value = best_val;
    out.best_member = best;
    out.witness = F.members()[best];
    out.witness_defined.assign(static_cast<std::size_t>(E.m()), true);
    out.rho = rho.weights();
    out.per_outcome = Vec::Zero(E.m());
    for (Eigen::Index x = 0; x < E.m(); ++x) {
        const double r = rho.weights()(x);
        if (r > 0.0) out.per_outcome(x) = F.members()[best].col(x).dot(E.rows().col(x)) / r;
    }
    return out;
}

/// Singleton class holding the witness of I_D(E); requires every witness
/// column to be defined.
inline FunctionClass witness_class(const InfoResult& r, Eigen::Index n, Eigen::Index m) {
    if (!r.witness) throw std::invalid_argument("witness_class: result carries no witness");
    for (bool ok : r.witness_defined)
        if (!ok) throw std::domain_error("witness_class: witness undefined at some outcome");
    return FunctionClass(n, m, {*r.witness});
}

/**
 * Closed form for the variational set: the partition assigns each outcome
 * to the first label minimising E_j(x), and I = n [1 - sum_k E_k(X_k)].
 */
inline InfoResult variational_information(const Experiment& E) {
    const Eigen::Index n = E.n();
    InfoResult out;
    const RefMeasure rho = RefMeasure::average(E);
    out.rho = rho.weights();
    out.per_outcome = Vec::Zero(E.m());
    out.witness = Mat::Zero(n, E.m());
    out.witness_defined.assign(static_cast<std::size_t>(E.m()), true);
    double captured = 0.0;
    for (Eigen::Index x = 0; x < E.m(); ++x) {
        Eigen::Index k = 0;
        const double mn = E.rows().col(x).minCoeff(&k);
        captured += mn;
        out.witness->col(x) = detail::dvar_vertex(static_cast<int>(n), static_cast<int>(k));
        const double r = rho.weights()(x);
        if (r > 0.0) out.per_outcome(x) = (E.rows().col(x).sum() - n * mn) / r;
    }
    out.value = static_cast<double>(n) * (1.0 - captured);
    return out;
}

/// Exhaustive maximum over all n^m assignments of outcomes to labels.
inline double variational_bruteforce(const Experiment& E) {
    const Eigen::Index n = E.n();
    const Eigen::Index m = E.m();
    double count = std::pow(static_cast<double>(n), static_cast<double>(m));
    if (count > 1e7) throw std::invalid_argument("variational_bruteforce: n^m exceeds 10^7");
    std::vector<Eigen::Index> a(static_cast<std::size_t>(m), 0);
    double best = -kInf;
    while (true) {
        double captured = 0.0;
        for (Eigen::Index x = 0; x < m; ++x) captured += E.rows()(a[static_cast<std::size_t>(x)], x);
        best = std::max(best, static_cast<double>(n) * (1.0 - captured));
        Eigen::Index pos = 0;
        while (pos < m && ++a[static_cast<std::size_t>(pos)] == n) a[static_cast<std::size_t>(pos++)] = 0;
        if (pos == m) break;
    }
    return best;
}

/**
 * max_{g in G} sum_x g(x) E_1(x) - sum_x phi*(g(x)) E_2(x): a lower bound on
 * I_phi(E_1, E_2) that is tight when G contains phi'(E_1/E_2).
 */
inline ExtReal binary_variational_rep(const PhiGenerator& phi, const Experiment& E, const std::vector<Vec>& G) {
    if (E.n() != 2) throw std::invalid_argument("binary_variational_rep: experiment must be binary");
    if (phi.numeric() || !phi.has_conjugate())
        throw std::invalid_argument("binary_variational_rep: needs a closed-form conjugate");
    if (G.empty()) throw std::invalid_argument("binary_variational_rep: empty discriminator family");
    ExtReal best = ExtReal::neg_inf();
    for (const auto& g : G) {
        if (g.size() != E.m()) throw std::invalid_argument("binary_variational_rep: table length mismatch");
        ExtReal v = 0.0;
        for (Eigen::Index x = 0; x < E.m(); ++x) {
            v += scaled(E.rows()(0, x), g(x));
            v += -scaled(E.rows()(1, x), phi.conjugate(g(x)));
        }
        best = std::max(best, v, [](ExtReal a, ExtReal b) { return a < b; });
    }
    return best;
}

/// g*(x) = phi'(E_1(x)/E_2(x)), the optimal discriminator where E_2(x) > 0.
inline Vec derivative_discriminator(const PhiGenerator& phi, const Experiment& E) {
    if (E.n() != 2) throw std::invalid_argument("derivative_discriminator: experiment must be binary");
    Vec g(E.m());
    for (Eigen::Index x = 0; x < E.m(); ++x) {
        const double q = E.rows()(1, x);
        g(x) = q > 0.0 ? phi.derivative(E.rows()(0, x) / q).selection() : phi.slope_inf().value();
    }
    return g;
}

/// The two-row experiment (mu; upsilon).
inline Experiment pair_experiment(const Vec& mu, const Vec& upsilon) {
    if (mu.size() != upsilon.size())
        throw std::invalid_argument("pair experiment: lengths " + std::to_string(mu.size()) + " and " +
                                    std::to_string(upsilon.size()) + " differ");
    Mat rows(2, mu.size());
    rows.row(0) = mu.transpose();
    rows.row(1) = upsilon.transpose();
    return Experiment(rows);
}

/// D-entropy of mu relative to upsilon: I_D of the experiment (mu; upsilon).
inline ExtReal d_entropy(const ConvexSpec& D, const Vec& mu, const Vec& upsilon) {
    if (D.dim() != 2) throw D.dimension_error("entropy experiment", 2);
    return d_information(D, pair_experiment(mu, upsilon)).value;
}

/// Two-row experiment (joint; product of marginals) over k*l outcomes,
/// flattened row-major.
inline Experiment mutual_information_experiment(const Mat& joint) {
    if (joint.rows() == 0 || joint.cols() == 0) throw std::invalid_argument("mutual information: empty joint");
    if ((joint.array() < 0.0).any() || std::abs(joint.sum() - 1.0) > 1e-12)
        throw std::invalid_argument("mutual information: joint is not a probability table");
    const Vec pz = joint.rowwise().sum();
    const Vec py = joint.colwise().sum().transpose();
    const Eigen::Index k = joint.rows();
    const Eigen::Index l = joint.cols();
    Mat rows(2, k * l);
    for (Eigen::Index a = 0; a < k; ++a)
        for (Eigen::Index b = 0; b < l; ++b) {
            rows(0, a * l + b) = joint(a, b);
            rows(1, a * l + b) = pz(a) * py(b);
        }
    // Renormalise the product row against rounding in the marginals.
    rows.row(1) /= rows.row(1).sum();
    return Experiment(rows);
}

inline double f_mutual_information(const FunctionClass& F, const Mat& joint) {
    return f_information(F, mutual_information_experiment(joint)).value.value();
}

/// sup_E I_D(E) < inf  iff  sigma_D(e_i) < inf for every i.
inline bool boundedness(const ConvexSpec& D) {
    for (int i = 0; i < D.dim(); ++i)
        if (!support(D, Vec::Unit(D.dim(), i)).is_finite()) return false;
    return true;
}

struct BssViolation {
    std::size_t set_index;
    ExtReal before;
    ExtReal after;
};

struct BssReport {
    bool passed = true;
    std::vector<ExtReal> before;
    std::vector<ExtReal> after;
    std::vector<BssViolation> violations;
};

/// Garbling E into E T cannot increase I_D for any D; violations are bugs.
inline BssReport bss_necessary_check(const Experiment& E, const Kernel& T, const std::vector<ConvexSpec>& family) {
    const Experiment ET = compose_observation(E, T);
    BssReport rep;
    for (std::size_t k = 0; k < family.size(); ++k) {
        const ExtReal a = d_information(family[k], E).value;
        const ExtReal b = d_information(family[k], ET).value;
        rep.before.push_back(a);
        rep.after.push_back(b);
        const bool ok = a.is_pos_inf() || (b.is_finite() && a.value() >= b.value() - 1e-9);
        if (!ok) {
            rep.passed = false;
            rep.violations.push_back({k, a, b});
        }
    }
    return rep;
}

}  // namespace cvxinfo

#endif  // CVXINFO_INFORMATION_HPP
