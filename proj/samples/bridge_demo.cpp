// Bayes risk of a noisy binary experiment, computed directly and as the
// negated information of the bridge set, for three losses; then the same
// experiment after label noise.

#include <cvxinfo.hpp>

#include <cstdio>

int main() {
    using namespace cvxinfo;

    const Experiment E(Mat{{0.7, 0.2, 0.1}, {0.1, 0.3, 0.6}});
    const Vec pi{{0.4, 0.6}};

    std::printf("%-9s %12s %12s %10s\n", "loss", "bayes_risk", "-I_D", "gap");
    for (const LossSpec& loss : {LossSpec::zero_one(2), LossSpec::brier(2), LossSpec::log(2)}) {
        const double risk = bayes_risk(loss, pi, E);
        const ExtReal info = d_information(bridge_set(loss, pi), E).value;
        std::printf("%-9s %12.8f %12.8f %10.2e\n", to_string(loss.form()), risk, -info.value(),
                    std::abs(risk + info.value()));
    }

    // Flipping labels with probability 0.2 moves the set, not the formula.
    const Kernel R(Mat{{0.8, 0.2}, {0.2, 0.8}});
    const ConvexSpec D = phi::d_phi_set(phi::hellinger2());
    std::printf("\nHellinger information  I_D(E) = %.10f\n", d_information(D, E).value.value());
    std::printf("after label noise      I_D(RE) = %.10f\n", d_information(D, compose_label(R, E)).value.value());
    std::printf("pulled-back set        I_{R^T D}(E) = %.10f\n", d_information(pullback(D, R.matrix()), E).value.value());
    return 0;
}
