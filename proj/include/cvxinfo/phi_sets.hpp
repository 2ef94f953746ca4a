#ifndef CVXINFO_PHI_SETS_HPP
#define CVXINFO_PHI_SETS_HPP

#include <cmath>
#include <limits>
#include <stdexcept>

#include "cvxinfo/convex_set.hpp"
#include "cvxinfo/phi.hpp"

// Conversions between phi generators and planar parameter sets.
namespace cvxinfo::phi {

/// D_phi = hyp(-phi*), whose support function is the closed perspective.
inline ConvexSpec d_phi_set(const PhiGenerator& phi) { return ConvexSpec::phi_hypograph(phi); }

/// phi_D(t) = sigma_D((t, 1)); requires sigma_D(1_2) = 0. The result is
/// numeric: derivatives come from subgradients and there is no conjugate.
inline PhiGenerator phi_from_set(const ConvexSpec& D) {
    if (D.dim() != 2) throw std::invalid_argument("phi_from_set: set must be planar (n = 2)");
    const ExtReal at_ones = support(D, Vec::Ones(2));
    if (!at_ones.is_finite() || std::abs(at_ones.value()) > 1e-9)
        throw std::invalid_argument("phi_from_set: set is not normalized (support at 1_2 is not 0)");

    auto sub = [D](double x, double y) -> std::optional<Vec> {
        try {
            return support_subgradient(D, Vec{{x, y}});
        } catch (const std::domain_error&) {
            return std::nullopt;
        }
    };
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    PhiGenerator::Limits lim;
    lim.at_zero = support(D, Vec{{0.0, 1.0}});
    lim.slope_inf = support(D, Vec{{1.0, 0.0}});
    const auto g0 = sub(0.0, 1.0);
    lim.deriv_at_zero = g0 ? (*g0)(0) : nan;
    const auto ginf = sub(1.0, 0.0);
    lim.intercept_inf = ginf ? (*ginf)(1) : nan;

    return PhiGenerator(
        "from_set", [D](double t) { return support(D, Vec{{t, 1.0}}).value(); },
        [sub](double t) -> OneSided {
            const auto g = sub(t, 1.0);
            const double d = g ? (*g)(0) : nan;
            return {d, d};
        },
        std::nullopt, lim, true);
}

}  // namespace cvxinfo::phi

#endif  // CVXINFO_PHI_SETS_HPP
