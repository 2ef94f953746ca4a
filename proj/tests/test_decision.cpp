#include <catch2/catch_amalgamated.hpp>

#include <cvxinfo/decision.hpp>
#include <cvxinfo/phi_sets.hpp>

#include <random>

using namespace cvxinfo;
using Catch::Approx;

namespace {

Vec dirichlet(std::mt19937_64& rng, int k) {
    std::gamma_distribution<double> g(1.0, 1.0);
    Vec v(k);
    for (int i = 0; i < k; ++i) v(i) = g(rng) + 1e-12;
    return v / v.sum();
}

Experiment random_experiment(std::mt19937_64& rng, int n, int m) {
    Mat rows(n, m);
    for (int i = 0; i < n; ++i) rows.row(i) = dirichlet(rng, m).transpose();
    return Experiment(rows);
}

}  // namespace

TEST_CASE("loss vectors") {
    CHECK(loss_vector(LossSpec::zero_one(2), Vec{{1.0, 0.0}}).isApprox(Vec{{0.0, 1.0}}));
    const Vec l = loss_vector(LossSpec::log(2), Vec{{0.5, 0.5}});
    CHECK(l(0) == Approx(std::log(2.0)));
    CHECK(l(1) == Approx(std::log(2.0)));
    CHECK(loss_vector(LossSpec::brier(2), Vec{{0.8, 0.2}})(0) == Approx(0.08));
    CHECK(std::isinf(loss_vector(LossSpec::log(2), Vec{{1.0, 0.0}})(1)));
    CHECK_THROWS_AS(loss_vector(LossSpec::brier(2), Vec{{0.8, 0.3}}), std::invalid_argument);
}

TEST_CASE("simplex lattices") {
    CHECK(simplex_lattice(2, 4).size() == 5);
    CHECK(simplex_lattice(3, 140).size() == 10011);
    for (const auto& p : simplex_lattice(3, 10, true)) CHECK(p.minCoeff() > 0.0);
    for (const auto& p : default_grid(2, LossForm::Log)) CHECK(p.minCoeff() > 0.0);
}

TEST_CASE("superprediction set") {
    const auto spr = superprediction(LossSpec::zero_one(2, {Vec{{1.0, 0.0}}, Vec{{0.0, 1.0}}}));
    const auto V = materialize_vertices(spr.base);
    REQUIRE(V);
    REQUIRE(V->vertices.size() == 2);
    CHECK(V->vertices[0].isApprox(Vec{{0.0, 1.0}}));
    CHECK(V->vertices[1].isApprox(Vec{{1.0, 0.0}}));
    // -spr has finite support exactly on the nonnegative orthant.
    const auto neg = hadamard_scale(spr.base, -Vec::Ones(2));
    CHECK(support(neg, Vec{{0.3, 0.7}}).is_finite());
    CHECK(support(neg, Vec{{-0.1, 0.7}}).is_pos_inf());

    const auto log = LossSpec::log(2, simplex_lattice(2, 100, true));
    for (double eta : {0.1, 0.37, 0.5, 0.81}) {
        const double h = -(eta * std::log(eta) + (1 - eta) * std::log(1 - eta));
        CHECK(conditional_bayes_risk_via_support(log, Vec{{eta, 1 - eta}}) == Approx(h).margin(2e-3));
    }
}

TEST_CASE("conditional Bayes risk") {
    const auto z = LossSpec::zero_one(2);
    CHECK(conditional_bayes_risk(z, Vec{{1.0, 0.0}}) == Approx(0.0).margin(1e-15));
    CHECK(conditional_bayes_risk(z, Vec{{0.5, 0.5}}) == Approx(0.5));
    const double h = -(0.25 * std::log(0.25) + 0.75 * std::log(0.75));
    CHECK(h == Approx(0.562335).margin(5e-7));
    CHECK(conditional_bayes_risk(LossSpec::log(2), Vec{{0.25, 0.75}}) == Approx(h).margin(1e-4));
    std::mt19937_64 rng(1);
    for (const auto& loss : {LossSpec::zero_one(3), LossSpec::brier(3), LossSpec::log(3)}) {
        for (int k = 0; k < 10; ++k) {
            const Vec nu = dirichlet(rng, 3);
            CHECK(conditional_bayes_risk(loss, nu) == Approx(conditional_bayes_risk_via_support(loss, nu)).margin(1e-12));
        }
    }
}

TEST_CASE("Bayes risk reference values") {
    const auto z = LossSpec::zero_one(2);
    const Vec u = Vec::Constant(2, 0.5);
    CHECK(bayes_risk(z, u, make_ti(2, 2)) == Approx(0.0).margin(1e-15));
    CHECK(bayes_risk(LossSpec::zero_one(3), Vec::Constant(3, 1.0 / 3), make_tni(3, 4)) == Approx(2.0 / 3.0));
    CHECK(bayes_risk(z, u, Experiment(Mat{{0.5, 0.5}, {0.25, 0.75}})) == Approx(0.375));
}

TEST_CASE("zero-one risk against the variational closed form") {
    std::mt19937_64 rng(2);
    for (int n = 2; n <= 3; ++n) {
        const Vec u = Vec::Constant(n, 1.0 / n);
        for (int k = 0; k < 20; ++k) {
            const auto E = random_experiment(rng, n, 5);
            double mins = 0.0;
            for (int x = 0; x < 5; ++x) mins += E.rows().col(x).minCoeff();
            // Uniform prior: risk = 1 - (1/n) sum_x max_i E_i(x).
            double maxs = 0.0;
            for (int x = 0; x < 5; ++x) maxs += E.rows().col(x).maxCoeff();
            CHECK(bayes_risk(LossSpec::zero_one(n), u, E) == Approx(1.0 - maxs / n).margin(1e-12));
            CHECK(variational_information(E).value.value() == Approx(n * (1.0 - mins)).margin(1e-12));
        }
    }
}

TEST_CASE("degenerate prior") {
    const auto E = Experiment(Mat{{0.2, 0.8}, {0.6, 0.4}});
    const auto b = LossSpec::brier(2);
    double best = kInf;
    for (const Vec& p : b.grid()) best = std::min(best, loss_vector(b, p)(0));
    CHECK(bayes_risk(b, Vec{{1.0, 0.0}}, E) == Approx(best).margin(1e-15));
}

TEST_CASE("unconstrained bridge") {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 60; ++k) {
        const int n = 2 + k % 2;
        const LossSpec loss = k % 3 == 0 ? LossSpec::zero_one(n) : k % 3 == 1 ? LossSpec::brier(n) : LossSpec::log(n);
        const Vec pi = dirichlet(rng, n);
        const auto E = random_experiment(rng, n, 2 + k % 6);
        const double risk = bayes_risk(loss, pi, E);
        CHECK(risk == Approx(-d_information(bridge_set(loss, pi), E).value.value()).margin(1e-9));
    }
    // Zero prior entries go through the pullback route.
    const Vec pi{{0.0, 1.0}};
    const auto E = Experiment(Mat{{0.2, 0.8}, {0.6, 0.4}});
    CHECK(bayes_risk(LossSpec::brier(2), pi, E) ==
          Approx(-d_information(bridge_set(LossSpec::brier(2), pi), E).value.value()).margin(1e-12));
}

TEST_CASE("constrained Bayes risk") {
    const auto z = LossSpec::zero_one(2, {Vec{{1.0, 0.0}}, Vec{{0.0, 1.0}}});
    const Vec u = Vec::Constant(2, 0.5);
    const Experiment E(Mat{{0.5, 0.5}, {0.25, 0.75}});
    const auto all = all_grid_hypotheses(z, 2);
    CHECK(all.size() == 4);
    CHECK(constrained_bayes_risk(z, all, u, E) == Approx(bayes_risk(z, u, E)).margin(1e-15));

    const auto consts = std::vector<Hypothesis>{Hypothesis::from_grid(z, {0, 0}), Hypothesis::from_grid(z, {1, 1})};
    CHECK(constrained_bayes_risk(z, consts, u, make_tni(2, 2)) == Approx(0.5));

    const auto single = std::vector<Hypothesis>{Hypothesis::from_grid(z, {0, 1})};
    const Mat joint = product_with_prior(u, E);
    double direct = 0.0;
    for (int x = 0; x < 2; ++x)
        for (int i = 0; i < 2; ++i) direct += joint(i, x) * loss_vector(z, z.grid()[x == 0 ? 0 : 1])(i);
    CHECK(constrained_bayes_risk(z, single, u, E) == Approx(direct));
    CHECK_THROWS_AS(constrained_bayes_risk(z, {}, u, E), std::invalid_argument);
}

TEST_CASE("constrained bridge") {
    std::mt19937_64 rng(4);
    for (int k = 0; k < 60; ++k) {
        const int n = 2 + k % 2;
        const int m = 2 + k % 5;
        const LossSpec loss = k % 2 == 0 ? LossSpec::zero_one(n) : LossSpec::brier(n);
        const Vec pi = dirichlet(rng, n);
        const auto E = random_experiment(rng, n, m);
        std::vector<Hypothesis> H;
        std::uniform_int_distribution<std::size_t> pick(0, loss.grid().size() - 1);
        for (int h = 0; h < 1 + k % 20; ++h) {
            std::vector<std::size_t> idx;
            for (int x = 0; x < m; ++x) idx.push_back(pick(rng));
            H.push_back(Hypothesis::from_grid(loss, idx));
        }
        const auto F = constrained_bridge_class(loss, H, pi, m);
        const double risk = constrained_bayes_risk(loss, H, pi, E);
        CHECK(std::abs(risk + f_information(F, E).value.value()) <= 1e-12);

        // Adding a convex combination of two members leaves the value alone.
        if (F.size() >= 2) {
            FunctionClass G = F;
            G.add(0.3 * F.members()[0] + 0.7 * F.members()[1]);
            CHECK(f_information(G, E).value.value() == Approx(f_information(F, E).value.value()).margin(1e-12));
        }
    }
}

TEST_CASE("constrained class lies in the bridge set") {
    const auto loss = LossSpec::brier(2, simplex_lattice(2, 10));
    const Vec u = Vec::Constant(2, 0.5);
    const auto H = all_grid_hypotheses(loss, 2);
    const auto F = constrained_bridge_class(loss, H, u, 2);
    CHECK(F.certify_range(bridge_set(loss, u)));
}

TEST_CASE("phi-induced loss") {
    const Vec u = Vec::Constant(2, 0.5);
    for (double eta : {0.1, 0.3, 0.5, 0.75, 0.9}) {
        const double curve = phi_conditional_risk(phi::variational(), 0.5, eta);
        CHECK(curve == Approx(4.0 * std::min(eta, 1.0 - eta) - 2.0).margin(1e-12));
    }
    const Vec pi{{0.3, 0.7}};
    const auto fine = simplex_lattice(2, 20000, true);
    for (const auto& name : {"kl", "hellinger2", "chi2"}) {
        const auto phi = phi::builtin(name);
        const auto loss = phi_induced_loss(phi, pi, fine);
        for (double eta : {0.2, 0.45, 0.8}) {
            CHECK(conditional_bayes_risk(loss, Vec{{eta, 1 - eta}}) ==
                  Approx(phi_conditional_risk(phi, pi(0), eta)).margin(1e-6));
        }
        std::mt19937_64 rng(5);
        for (int k = 0; k < 5; ++k) {
            const auto E = random_experiment(rng, 2, 4);
            // Bayes risk on the joint equals -I_phi of the reweighted pair.
            const double risk = bayes_risk(loss, pi, E);
            const Mat J = product_with_prior(pi, E);
            double oracle = 0.0;
            for (int x = 0; x < 4; ++x) {
                const double mass = J.col(x).sum();
                oracle += mass * phi_conditional_risk(phi, pi(0), J(0, x) / mass);
            }
            CHECK(risk == Approx(oracle).margin(1e-6));
            CHECK(risk == Approx(-d_information(phi::d_phi_set(phi), E).value.value()).margin(1e-6));
        }
    }
    CHECK_THROWS_AS(phi_induced_loss(phi::kl(), Vec{{0.0, 1.0}}), std::invalid_argument);
}
