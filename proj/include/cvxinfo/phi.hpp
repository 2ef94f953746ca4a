#ifndef CVXINFO_PHI_HPP
#define CVXINFO_PHI_HPP

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cvxinfo/ext_real.hpp"

namespace cvxinfo {

/// One-sided derivatives of a convex function; equal away from kinks.
struct OneSided {
    double left = 0.0;
    double right = 0.0;

    /// Canonical selection from the subdifferential: the midpoint.
    [[nodiscard]] double selection() const {
        if (left == right) return left;
        return 0.5 * (left + right);
    }
};

/**
 * A convex generator phi: [0, inf) -> R with phi(1) = 0.
 *
 * Besides the value and derivative on (0, inf) a generator carries the four
 * boundary limits needed to close its perspective:
 *   - at_zero:        phi(0+)
 *   - slope_inf:      lim phi(t)/t as t -> inf
 *   - deriv_at_zero:  phi'(0+)
 *   - intercept_inf:  lim phi(t) - t phi'(t) as t -> inf
 * NaN in the last two marks a limit the generator cannot supply.
 *
 * Builtins store their Fenchel conjugate in closed form. Generators derived
 * numerically (from a set, a channel, or the Csiszar swap) have numeric()
 * set and no conjugate.
 */
class PhiGenerator {
public:
    using ValueFn = std::function<double(double)>;
    using DerivFn = std::function<OneSided(double)>;
    using ConjFn = std::function<ExtReal(double)>;

    struct Limits {
        ExtReal at_zero;
        ExtReal slope_inf;
        ExtReal deriv_at_zero;
        ExtReal intercept_inf;
    };

    PhiGenerator(std::string name, ValueFn value, DerivFn derivative, std::optional<ConjFn> conjugate,
                 Limits limits, bool numeric)
        : name_(std::move(name)),
          value_(std::move(value)),
          derivative_(std::move(derivative)),
          conjugate_(std::move(conjugate)),
          limits_(limits),
          numeric_(numeric) {}

    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] bool numeric() const { return numeric_; }
    [[nodiscard]] bool has_conjugate() const { return conjugate_.has_value(); }

    /// phi(t) for t >= 0; t = 0 returns phi(0+).
    [[nodiscard]] ExtReal value(double t) const {
        if (t < 0.0) return ExtReal::pos_inf();
        if (t == 0.0) return limits_.at_zero;
        if (std::isinf(t)) return ExtReal::pos_inf();
        return value_(t);
    }
    [[nodiscard]] ExtReal operator()(double t) const { return value(t); }

    /// One-sided derivatives on t > 0; at t = 0 both sides equal phi'(0+).
    [[nodiscard]] OneSided derivative(double t) const {
        if (t < 0.0) throw std::domain_error("phi derivative: negative argument");
        if (t == 0.0) return {limits_.deriv_at_zero.value(), limits_.deriv_at_zero.value()};
        return derivative_(t);
    }

    [[nodiscard]] ExtReal conjugate(double s) const {
        if (!conjugate_)
            throw std::logic_error("phi generator '" + name_ + "' has no closed-form conjugate");
        return (*conjugate_)(s);
    }

    [[nodiscard]] ExtReal at_zero() const { return limits_.at_zero; }
    [[nodiscard]] ExtReal slope_inf() const { return limits_.slope_inf; }
    [[nodiscard]] ExtReal deriv_at_zero() const { return limits_.deriv_at_zero; }
    [[nodiscard]] ExtReal intercept_inf() const { return limits_.intercept_inf; }
    [[nodiscard]] const Limits& limits() const { return limits_; }

private:
    std::string name_;
    ValueFn value_;
    DerivFn derivative_;
    std::optional<ConjFn> conjugate_;
    Limits limits_;
    bool numeric_;
};

/// Closure of the perspective y * phi(x / y) on the nonnegative quadrant;
/// +inf if either argument is negative.
inline ExtReal perspective(const PhiGenerator& phi, double x, double y) {
    if (x < 0.0 || y < 0.0) return ExtReal::pos_inf();
    if (y > 0.0) {
        if (x == 0.0) return scaled(y, phi.at_zero());
        return scaled(y, phi.value(x / y));
    }
    if (x > 0.0) return scaled(x, phi.slope_inf());
    return ExtReal(0.0);
}

/**
 * Gradient selection of the closed perspective at (x, y) >= 0, i.e. the
 * point (phi'(t), phi(t) - t phi'(t)) with t = x/y, extended to the
 * boundary by the stored limits. Returns nullopt where no finite
 * subgradient exists.
 */
inline std::optional<std::pair<double, double>> perspective_gradient(const PhiGenerator& phi, double x,
                                                                     double y) {
    if (x < 0.0 || y < 0.0) return std::nullopt;
    if (x == 0.0 && y == 0.0) {
        const double d = phi.derivative(1.0).selection();
        return std::make_pair(d, -d);
    }
    auto finite = [](double a, double b) -> std::optional<std::pair<double, double>> {
        if (std::isfinite(a) && std::isfinite(b)) return std::make_pair(a, b);
        return std::nullopt;
    };
    if (y == 0.0) return finite(phi.slope_inf().value(), phi.intercept_inf().value());
    if (x == 0.0) return finite(phi.deriv_at_zero().value(), phi.at_zero().value());
    const double t = x / y;
    const double d = phi.derivative(t).selection();
    const ExtReal v = phi.value(t);
    if (!v.is_finite()) return std::nullopt;
    return finite(d, v.value() - t * d);
}

namespace phi {

inline const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names{"variational", "kl",          "hellinger2",
                                                "chi2",        "jensen_shannon", "triangular"};
    return names;
}

inline PhiGenerator variational() {
    return PhiGenerator(
        "variational", [](double t) { return std::abs(t - 1.0); },
        [](double t) -> OneSided {
            if (t < 1.0) return {-1.0, -1.0};
            if (t > 1.0) return {1.0, 1.0};
            return {-1.0, 1.0};
        },
        [](double s) -> ExtReal {
            if (s < -1.0) return -1.0;
            if (s <= 1.0) return s;
            return ExtReal::pos_inf();
        },
        {1.0, 1.0, -1.0, -1.0}, false);
}

inline PhiGenerator kl() {
    return PhiGenerator(
        "kl", [](double t) { return t * std::log(t) - t + 1.0; },
        [](double t) -> OneSided {
            const double d = std::log(t);
            return {d, d};
        },
        [](double s) -> ExtReal { return std::expm1(s); },
        {1.0, ExtReal::pos_inf(), ExtReal::neg_inf(), ExtReal::neg_inf()}, false);
}

inline PhiGenerator hellinger2() {
    return PhiGenerator(
        "hellinger2",
        [](double t) {
            const double r = std::sqrt(t) - 1.0;
            return r * r;
        },
        [](double t) -> OneSided {
            const double d = 1.0 - 1.0 / std::sqrt(t);
            return {d, d};
        },
        [](double s) -> ExtReal {
            if (s < 1.0) return s / (1.0 - s);
            return ExtReal::pos_inf();
        },
        {1.0, 1.0, ExtReal::neg_inf(), ExtReal::neg_inf()}, false);
}

inline PhiGenerator chi2() {
    return PhiGenerator(
        "chi2", [](double t) { return (t - 1.0) * (t - 1.0); },
        [](double t) -> OneSided {
            const double d = 2.0 * (t - 1.0);
            return {d, d};
        },
        [](double s) -> ExtReal { return 0.25 * s * s + s; },
        {1.0, ExtReal::pos_inf(), -2.0, ExtReal::neg_inf()}, false);
}

inline PhiGenerator jensen_shannon() {
    static const double ln2 = std::log(2.0);
    return PhiGenerator(
        "jensen_shannon", [](double t) { return t * std::log(t) - (t + 1.0) * std::log((t + 1.0) / 2.0); },
        [](double t) -> OneSided {
            const double d = std::log(2.0 * t / (t + 1.0));
            return {d, d};
        },
        [](double s) -> ExtReal {
            if (s < ln2) return -std::log(2.0 - std::exp(s));
            return ExtReal::pos_inf();
        },
        {ln2, ln2, ExtReal::neg_inf(), ExtReal::neg_inf()}, false);
}

inline PhiGenerator triangular() {
    return PhiGenerator(
        "triangular", [](double t) { return (t - 1.0) * (t - 1.0) / (t + 1.0); },
        [](double t) -> OneSided {
            const double d = (t - 1.0) * (t + 3.0) / ((t + 1.0) * (t + 1.0));
            return {d, d};
        },
        [](double s) -> ExtReal {
            if (s <= -3.0) return -1.0;
            if (s <= 1.0) {
                const double r = std::sqrt(1.0 - s);
                return (r - 1.0) * (r - 3.0);
            }
            return ExtReal::pos_inf();
        },
        {1.0, 1.0, -3.0, -3.0}, false);
}

inline PhiGenerator builtin(const std::string& name) {
    if (name == "variational") return variational();
    if (name == "kl") return kl();
    if (name == "hellinger2") return hellinger2();
    if (name == "chi2") return chi2();
    if (name == "jensen_shannon") return jensen_shannon();
    if (name == "triangular") return triangular();
    throw std::invalid_argument("unknown phi generator: '" + name + "'");
}

/// phi_c(t) = phi(t) + c (t - 1); same divergence, conjugate shifted.
inline PhiGenerator affine_offset(const PhiGenerator& base, double c) {
    std::optional<PhiGenerator::ConjFn> conj;
    if (base.has_conjugate())
        conj = [base, c](double s) { return base.conjugate(s - c) + ExtReal(c); };
    const auto& L = base.limits();
    return PhiGenerator(
        base.name() + "+offset", [base, c](double t) { return base.value(t).value() + c * (t - 1.0); },
        [base, c](double t) -> OneSided {
            const OneSided d = base.derivative(t);
            return {d.left + c, d.right + c};
        },
        std::move(conj), {L.at_zero - ExtReal(c), L.slope_inf + ExtReal(c), L.deriv_at_zero + ExtReal(c),
                          L.intercept_inf - ExtReal(c)},
        base.numeric());
}

/// Csiszar conjugate t * phi(1/t); swaps the roles of the two arguments.
inline PhiGenerator csiszar_conjugate(const PhiGenerator& base) {
    const auto& L = base.limits();
    return PhiGenerator(
        base.name() + "^csiszar", [base](double t) { return t * base.value(1.0 / t).value(); },
        [base](double t) -> OneSided {
            const double u = 1.0 / t;
            const OneSided d = base.derivative(u);
            const double v = base.value(u).value();
            // t -> u = 1/t reverses orientation, so the sides swap.
            return {v - u * d.right, v - u * d.left};
        },
        std::nullopt, {L.slope_inf, L.at_zero, L.intercept_inf, L.deriv_at_zero}, true);
}

/**
 * Generator of the binary channel R = [[r1, 1-r1], [1-r2, r2]] acting on the
 * labels: phi_R(z) = ((1-r2) z + r2) phi((r1 z + 1 - r1) / ((1-r2) z + r2)),
 * evaluated through the closed perspective so boundary cases are exact.
 */
inline PhiGenerator channel_transform(const PhiGenerator& base, double r1, double r2) {
    if (!(r1 >= 0.0 && r1 <= 1.0 && r2 >= 0.0 && r2 <= 1.0))
        throw std::domain_error("channel_transform: r1, r2 must lie in [0, 1]");
    auto grad_along = [base, r1, r2](double z) -> double {
        const auto g = perspective_gradient(base, r1 * z + 1.0 - r1, (1.0 - r2) * z + r2);
        if (!g) return std::numeric_limits<double>::quiet_NaN();
        return r1 * g->first + (1.0 - r2) * g->second;
    };
    PhiGenerator::Limits lim;
    lim.at_zero = perspective(base, 1.0 - r1, r2);
    lim.slope_inf = perspective(base, r1, 1.0 - r2);
    lim.deriv_at_zero = grad_along(0.0);
    if (const auto g = perspective_gradient(base, r1, 1.0 - r2))
        lim.intercept_inf = (1.0 - r1) * g->first + r2 * g->second;
    else
        lim.intercept_inf = std::numeric_limits<double>::quiet_NaN();
    return PhiGenerator(
        base.name() + "^channel",
        [base, r1, r2](double z) { return perspective(base, r1 * z + 1.0 - r1, (1.0 - r2) * z + r2).value(); },
        [base, r1, r2](double z) -> OneSided {
            const double x = r1 * z + 1.0 - r1;
            const double y = (1.0 - r2) * z + r2;
            if (y <= 0.0) return {kInf, kInf};
            const OneSided d = base.derivative(x / y);
            const double v = base.value(x / y).value();
            // d/dz of y phi(x/y) = r1 phi'(t) + (1-r2) (phi(t) - t phi'(t)).
            // The sign of dt/dz decides which side of phi' each side uses.
            const double dt = (r1 * y - (1.0 - r2) * x) / (y * y);
            const OneSided s = dt >= 0.0 ? d : OneSided{d.right, d.left};
            const double t = x / y;
            return {r1 * s.left + (1.0 - r2) * (v - t * s.left), r1 * s.right + (1.0 - r2) * (v - t * s.right)};
        },
        std::nullopt, lim, true);
}

}  // namespace phi
}  // namespace cvxinfo

#endif  // CVXINFO_PHI_HPP
