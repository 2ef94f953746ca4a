#ifndef CVXINFO_EXT_REAL_HPP
#define CVXINFO_EXT_REAL_HPP

#include <cmath>
#include <compare>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <Eigen/Dense>

namespace cvxinfo {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/**
 * A value of the extended real line [-inf, +inf].
 *
 * Arithmetic follows the convex-analysis conventions used throughout the
 * library: 0 * (+inf) = 0 and anything finite plus +inf is +inf. Adding
 * +inf to -inf has no meaning here and throws.
 */
class ExtReal {
public:
    constexpr ExtReal() = default;
    constexpr ExtReal(double v) : v_(v) {}  // NOLINT(google-explicit-constructor)

    static constexpr ExtReal pos_inf() { return ExtReal(std::numeric_limits<double>::infinity()); }
    static constexpr ExtReal neg_inf() { return ExtReal(-std::numeric_limits<double>::infinity()); }

    [[nodiscard]] double value() const { return v_; }
    [[nodiscard]] bool is_finite() const { return std::isfinite(v_); }
    [[nodiscard]] bool is_pos_inf() const { return std::isinf(v_) && v_ > 0; }
    [[nodiscard]] bool is_neg_inf() const { return std::isinf(v_) && v_ < 0; }
    [[nodiscard]] bool is_nan() const { return std::isnan(v_); }

    explicit operator double() const { return v_; }

    friend ExtReal operator+(ExtReal a, ExtReal b) {
        if (std::isinf(a.v_) && std::isinf(b.v_) && (a.v_ > 0) != (b.v_ > 0))
            throw std::domain_error("ExtReal: +inf + -inf is undefined");
        return ExtReal(a.v_ + b.v_);
    }
    friend ExtReal operator-(ExtReal a) { return ExtReal(-a.v_); }
    friend ExtReal operator-(ExtReal a, ExtReal b) { return a + (-b); }
    ExtReal& operator+=(ExtReal b) { return *this = *this + b; }

    friend bool operator==(ExtReal a, ExtReal b) { return a.v_ == b.v_; }
    friend std::partial_ordering operator<=>(ExtReal a, ExtReal b) { return a.v_ <=> b.v_; }

    friend std::ostream& operator<<(std::ostream& os, ExtReal x) {
        if (x.is_pos_inf()) return os << "inf";
        if (x.is_neg_inf()) return os << "-inf";
        return os << x.v_;
    }

private:
    double v_ = 0.0;
};

/// c * x with 0 * (+-inf) = 0.
inline ExtReal scaled(double c, ExtReal x) {
    if (c == 0.0) return ExtReal(0.0);
    return ExtReal(c * x.value());
}

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace cvxinfo

#endif  // CVXINFO_EXT_REAL_HPP
