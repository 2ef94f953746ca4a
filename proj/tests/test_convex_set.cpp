#include <catch2/catch_amalgamated.hpp>

#include <cvxinfo/convex_set.hpp>
#include <cvxinfo/phi_sets.hpp>

#include <random>

using namespace cvxinfo;
using Catch::Approx;

namespace {

/// max over vertices, +inf if some ray ascends.
ExtReal vertex_oracle(const std::vector<Vec>& verts, const std::vector<Vec>& rays, const Vec& x) {
    for (const auto& r : rays)
        if (r.dot(x) > 1e-12) return ExtReal::pos_inf();
    double best = -kInf;
    for (const auto& v : verts) best = std::max(best, v.dot(x));
    return best;
}

ConvexSpec random_vpoly(std::mt19937_64& rng, int n, bool with_rays, std::vector<Vec>* verts_out = nullptr,
                        std::vector<Vec>* rays_out = nullptr) {
    std::normal_distribution<double> g;
    std::vector<Vec> verts{Vec::Zero(n)};
    for (int k = 0; k < 5; ++k) {
        Vec v(n);
        for (int i = 0; i < n; ++i) v(i) = g(rng);
        verts.push_back(v);
    }
    std::vector<Vec> rays;
    if (with_rays)
        for (int i = 0; i < n; ++i) rays.push_back(-Vec::Unit(n, i));
    if (verts_out) *verts_out = verts;
    if (rays_out) *rays_out = rays;
    return ConvexSpec::vpolyhedron(verts, rays);
}

Vec random_vec(std::mt19937_64& rng, int n, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    Vec x(n);
    for (int i = 0; i < n; ++i) x(i) = u(rng);
    return x;
}

}  // namespace

TEST_CASE("support values of the reference sets") {
    CHECK(support(ConvexSpec::dvar(2), Vec{{1.0, 1.0}}).value() == 0.0);
    CHECK(support(ConvexSpec::dvar(2), Vec{{2.0, 1.0}}).value() == 1.0);
    CHECK(support(phi::d_phi_set(phi::kl()), Vec{{1.0, 0.0}}).is_pos_inf());
    const auto V = ConvexSpec::vpolyhedron({Vec{{-1.0, 1.0}}, Vec{{1.0, -1.0}}}, {Vec{{-1.0, 0.0}}, Vec{{0.0, -1.0}}});
    CHECK(support(V, Vec{{2.0, 1.0}}).value() == Approx(1.0));
    CHECK(support(V, Vec{{-1.0, 1.0}}).is_pos_inf());
}

TEST_CASE("DVarN support is sum minus n times the minimum") {
    std::mt19937_64 rng(1);
    for (int n = 2; n <= 5; ++n) {
        const auto D = ConvexSpec::dvar(n);
        std::vector<Vec> verts;
        for (int j = 0; j < n; ++j) verts.push_back(Vec::Ones(n) - n * Vec::Unit(n, j));
        for (int k = 0; k < 50; ++k) {
            const Vec x = random_vec(rng, n, 0.0, 3.0);
            const double closed = x.sum() - n * x.minCoeff();
            CHECK(support(D, x).value() == Approx(closed).margin(1e-12));
            CHECK(vertex_oracle(verts, {}, x).value() == Approx(closed).margin(1e-12));
        }
        CHECK(support(D, -Vec::Unit(n, 0)).is_pos_inf());
    }
}

TEST_CASE("halfspace form agrees with vertex form") {
    // DVarN(3) written as halfspaces.
    std::vector<Halfspace> hs{{Vec::Ones(3), 0.0}};
    for (int i = 0; i < 3; ++i) hs.push_back({Vec::Unit(3, i), 1.0});
    const auto H = ConvexSpec::hpolyhedron(hs);
    const auto D = ConvexSpec::dvar(3);
    std::mt19937_64 rng(2);
    for (int k = 0; k < 60; ++k) {
        const Vec x = random_vec(rng, 3, 0.0, 2.0);
        CHECK(support(H, x).value() == Approx(support(D, x).value()).margin(1e-9));
        const Vec g = support_subgradient(H, x);
        CHECK(g.dot(x) == Approx(support(H, x).value()).margin(1e-9));
    }
    CHECK(support(H, Vec{{-1.0, 0.5, 0.5}}).is_pos_inf());
    CHECK_THROWS_AS(ConvexSpec::hpolyhedron({{Vec{{1.0}}, 0.0}, {Vec{{-1.0}}, -1.0}}), std::invalid_argument);
}

TEST_CASE("subgradient examples") {
    const Vec g = support_subgradient(ConvexSpec::dvar(2), Vec{{2.0, 1.0}});
    CHECK(g(0) == Approx(1.0));
    CHECK(g(1) == Approx(-1.0));

    const auto K = phi::d_phi_set(phi::kl());
    for (auto [a, b] : {std::pair{1.0, 2.0}, std::pair{3.0, 0.5}, std::pair{0.7, 0.7}}) {
        const Vec w = support_subgradient(K, Vec{{a, b}});
        CHECK(w(0) == Approx(std::log(a / b)));
        CHECK(w(1) == Approx(1.0 - a / b));
    }
    CHECK_THROWS_AS(support_subgradient(K, Vec{{1.0, 0.0}}), std::domain_error);
}

TEST_CASE("Euler identity on random directions") {
    std::mt19937_64 rng(4);
    std::vector<ConvexSpec> sets{ConvexSpec::dvar(3), random_vpoly(rng, 3, true)};
    for (const auto& name : phi::builtin_names()) sets.push_back(phi::d_phi_set(phi::builtin(name)));
    for (const auto& D : sets) {
        for (int k = 0; k < 100; ++k) {
            const Vec x = random_vec(rng, D.dim(), 0.01, 2.0);
            const ExtReal s = support(D, x);
            REQUIRE(s.is_finite());
            CHECK(support_subgradient(D, x).dot(x) == Approx(s.value()).margin(1e-9));
        }
    }
}

TEST_CASE("vertex ties resolve to the lexicographically smallest vertex") {
    const auto V = ConvexSpec::vpolyhedron({Vec{{1.0, 0.0}}, Vec{{0.0, 1.0}}, Vec{{0.5, 0.5}}});
    const Vec g = support_subgradient(V, Vec{{1.0, 1.0}});
    CHECK(g(0) == 0.0);
    CHECK(g(1) == 1.0);
    const Vec d = support_subgradient(ConvexSpec::dvar(3), Vec{{1.0, 1.0, 1.0}});
    CHECK(d(0) == Approx(-2.0));
}

TEST_CASE("pullback") {
    std::mt19937_64 rng(6);
    const auto D = random_vpoly(rng, 3, false);
    for (int k = 0; k < 20; ++k) {
        const Vec x = random_vec(rng, 3, -1.0, 1.0);
        CHECK(support(pullback(D, Mat::Identity(3, 3)), x).value() == Approx(support(D, x).value()));
    }
    // S_alpha scales DVarN on the nonnegative orthant.
    for (double alpha : {0.0, 0.3, 1.0}) {
        const int n = 3;
        const Mat S = alpha * Mat::Identity(n, n) + Mat::Constant(n, n, (1.0 - alpha) / n);
        const auto P = pullback(ConvexSpec::dvar(n), S);
        for (int k = 0; k < 20; ++k) {
            const Vec x = random_vec(rng, n, 0.0, 2.0);
            CHECK(support(P, x).value() == Approx(alpha * support(ConvexSpec::dvar(n), x).value()).margin(1e-12));
        }
    }
    // Random planar kernel against the mapped-vertex oracle.
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Vec> verts;
        std::vector<Vec> rays;
        const auto V = random_vpoly(rng, 2, false, &verts, &rays);
        const double a = u(rng);
        const double b = u(rng);
        const Mat R{{a, 1 - a}, {b, 1 - b}};
        std::vector<Vec> mapped;
        for (const auto& v : verts) mapped.push_back(R.transpose() * v);
        const Vec x = random_vec(rng, 2, -2.0, 2.0);
        CHECK(support(pullback(V, R), x).value() == Approx(vertex_oracle(mapped, {}, x).value()).margin(1e-12));
    }
    CHECK_THROWS_AS(pullback(ConvexSpec::dvar(2), Mat::Identity(3, 3)), std::invalid_argument);
    const auto up = pullback(ConvexSpec::dvar(2), Mat::Ones(2, 3) / 3.0);
    CHECK(up.dim() == 3);
}

TEST_CASE("translation") {
    const auto D = ConvexSpec::dvar(2);
    CHECK(support(translate(D, Vec::Zero(2)), Vec{{2.0, 1.0}}).value() == 1.0);
    const double c = 0.7;
    const auto T = translate(D, Vec{{c, -c}});
    std::mt19937_64 rng(8);
    for (int k = 0; k < 20; ++k) {
        const Vec x = random_vec(rng, 2, 0.0, 3.0);
        CHECK(support(T, x).value() == Approx(support(D, x).value() + c * (x(0) - x(1))));
        CHECK(support_subgradient(T, x).dot(x) == Approx(support(T, x).value()));
    }
    CHECK(support(T, Vec::Ones(2)).value() == Approx(0.0).margin(1e-15));
}

TEST_CASE("Hadamard scaling") {
    std::mt19937_64 rng(9);
    std::vector<Vec> verts;
    std::vector<Vec> rays;
    const auto V = random_vpoly(rng, 3, true, &verts, &rays);
    const Vec v{{0.5, -2.0, 1.5}};
    std::vector<Vec> sv;
    std::vector<Vec> sr;
    for (const auto& p : verts) sv.push_back(v.cwiseProduct(p));
    for (const auto& r : rays) sr.push_back(v.cwiseProduct(r));
    const auto eager = ConvexSpec::vpolyhedron(sv, sr);
    const auto lazy = hadamard_scale(V, v);
    for (int k = 0; k < 50; ++k) {
        const Vec x = random_vec(rng, 3, -2.0, 2.0);
        const ExtReal a = support(lazy, x);
        const ExtReal b = support(eager, x);
        if (b.is_pos_inf()) CHECK(a.is_pos_inf());
        else CHECK(a.value() == Approx(b.value()).margin(1e-12));
    }
    CHECK(support(hadamard_scale(V, Vec::Ones(3)), Vec{{0.3, 0.2, 0.1}}).value() ==
          Approx(support(V, Vec{{0.3, 0.2, 0.1}}).value()));
    CHECK_THROWS_AS(hadamard_scale(V, Vec{{1.0, 0.0, 1.0}}), std::invalid_argument);
    const auto M = materialize_vertices(lazy);
    REQUIRE(M);
    CHECK(M->vertices.size() == sv.size());
}

TEST_CASE("polar gauge") {
    const auto D = ConvexSpec::dvar(2);
    CHECK(polar_gauge(D, Vec::Zero(2)).value() == 0.0);
    const auto routes = polar_gauge_routes(D, Vec{{2.0, 1.0}});
    CHECK(routes.via_support.value() == Approx(1.0));
    REQUIRE(routes.via_polar_lp);
    CHECK(routes.via_polar_lp->value() == Approx(1.0));
    CHECK(polar_gauge(D, Vec::Ones(2)).value() == Approx(0.0).margin(1e-12));
    CHECK(polar_gauge(D, Vec{{-1.0, 1.0}}).is_pos_inf());

    std::mt19937_64 rng(10);
    for (int k = 0; k < 50; ++k) {
        const auto V = random_vpoly(rng, 3, k % 2 == 0);
        const Vec x = random_vec(rng, 3, -1.0, 1.0);
        CHECK_NOTHROW(polar_gauge(V, x));
    }
    const auto away = ConvexSpec::vpolyhedron({Vec{{1.0, 1.0}}, Vec{{2.0, 1.0}}});
    CHECK_THROWS_AS(polar_gauge(away, Vec{{1.0, 0.0}}), std::domain_error);
}

TEST_CASE("membership reports") {
    const auto dv = check_membership(ConvexSpec::dvar(3));
    CHECK(dv.support_at_ones.value() == 0.0);
    CHECK(dv.bounded_information);
    CHECK(dv.recession_ok);
    CHECK(dv.zero_on_boundary);

    CHECK_FALSE(check_membership(phi::d_phi_set(phi::kl())).bounded_information);
    const auto var = check_membership(phi::d_phi_set(phi::variational()));
    CHECK(var.support_at_ones.value() == Approx(0.0).margin(1e-15));
    CHECK(var.bounded_information);
    for (const auto& name : phi::builtin_names())
        CHECK(check_membership(phi::d_phi_set(phi::builtin(name))).support_at_ones.value() ==
              Approx(0.0).margin(1e-12));
}

TEST_CASE("phi sets: variational equals the explicit polyhedron") {
    const auto Dphi = phi::d_phi_set(phi::variational());
    const auto V = ConvexSpec::vpolyhedron({Vec{{-1.0, 1.0}}, Vec{{1.0, -1.0}}}, {Vec{{-1.0, 0.0}}, Vec{{0.0, -1.0}}});
    std::mt19937_64 rng(12);
    for (int k = 0; k < 100; ++k) {
        const Vec x = random_vec(rng, 2, 0.0, 5.0);
        CHECK(support(Dphi, x).value() == Approx(support(V, x).value()).margin(1e-9));
    }
    const auto K = phi::d_phi_set(phi::kl());
    CHECK(contains(K, Vec::Zero(2)));
    CHECK(contains(K, Vec{{0.0, -0.5}}));
    CHECK_FALSE(contains(K, Vec{{0.0, 0.1}}));
}

TEST_CASE("containment") {
    const auto D = ConvexSpec::dvar(2);
    CHECK(contains(D, Vec{{1.0, -1.0}}));
    CHECK(contains(D, Vec{{-5.0, -3.0}}));
    CHECK_FALSE(contains(D, Vec{{0.5, 0.5}}));
    CHECK_FALSE(contains(D, Vec{{1.1, -2.0}}));
    CHECK(contains(translate(D, Vec{{1.0, -1.0}}), Vec{{2.0, -2.0}}));
}

TEST_CASE("region boundaries") {
    const auto D = ConvexSpec::dvar(2);
    const auto pts = region_boundary(D, 40, Window{});
    bool has_a = false;
    bool has_b = false;
    for (const auto& p : pts) {
        if (p.set != RegionSet::D) continue;
        has_a |= std::abs(p.x - 1.0) < 1e-9 && std::abs(p.y + 1.0) < 1e-9;
        has_b |= std::abs(p.x + 1.0) < 1e-9 && std::abs(p.y - 1.0) < 1e-9;
    }
    CHECK(has_a);
    CHECK(has_b);

    const PlanarRegions hell(phi::d_phi_set(phi::hellinger2()));
    CHECK(hell.in_polar(0.0, 0.0));
    CHECK(support(phi::d_phi_set(phi::hellinger2()), Vec::Zero(2)).value() == 0.0);
    const PlanarRegions kl(phi::d_phi_set(phi::kl()));
    for (double t : {0.1, 1.0, 50.0}) CHECK(kl.in_polar(t, t));

    const auto none = region_boundary(phi::d_phi_set(phi::kl()), 50, Window{20.0, 30.0, 20.0, 30.0});
    for (const auto& p : none) CHECK(p.set == RegionSet::Dpolar);
    CHECK_THROWS_AS(region_boundary(ConvexSpec::dvar(3), 10, Window{}), std::invalid_argument);
}
