#include <catch2/catch_amalgamated.hpp>

#include <cvxinfo/json_io.hpp>
#include <cvxinfo/phi_sets.hpp>

using namespace cvxinfo;
using io::json;
using Catch::Approx;

TEST_CASE("numbers round-trip, infinities as strings") {
    for (double v : {0.1, 1.0 / 3.0, 1e-300, -2.5e17, 0.14384103622589042}) {
        const json j = io::number(v);
        CHECK(json::parse(j.dump()).get<double>() == v);
    }
    CHECK(io::number(kInf) == "inf");
    CHECK(io::number(-kInf) == "-inf");
    CHECK(std::isinf(io::to_double(json("inf"), "x")));
    CHECK_THROWS_AS(io::to_double(json("big"), "x"), io::SchemaError);
}

TEST_CASE("set documents round-trip") {
    const std::vector<ConvexSpec> sets{
        ConvexSpec::dvar(3),
        phi::d_phi_set(phi::hellinger2()),
        translate(ConvexSpec::vpolyhedron({Vec{{0.0, 0.0}}, Vec{{1.0, -2.0}}}, {Vec{{-1.0, 0.0}}}), Vec{{0.5, -0.5}}),
        hadamard_scale(pullback(ConvexSpec::dvar(2), Mat{{0.7, 0.3}, {0.2, 0.8}}), Vec{{-0.4, -0.6}}),
        ConvexSpec::hpolyhedron({{Vec{{1.0, 1.0}}, 0.0}, {Vec{{1.0, 0.0}}, 1.0}, {Vec{{0.0, 1.0}}, 1.0}}),
    };
    const std::vector<Vec> probes{Vec{{0.3, 0.9}}, Vec{{2.0, 1.0}}, Vec{{1.0, 1.0}}};
    for (const auto& D : sets) {
        const json j = io::convex_spec_to_json(D);
        const auto back = io::convex_spec_from_json(json::parse(j.dump()));
        CHECK(back.dim() == D.dim());
        CHECK(io::convex_spec_to_json(back) == j);
        for (const auto& p : probes) {
            if (p.size() != D.dim()) continue;
            const ExtReal a = support(D, p);
            const ExtReal b = support(back, p);
            if (a.is_finite()) CHECK(b.value() == a.value());
            else CHECK(b.is_pos_inf());
        }
    }
}

TEST_CASE("phi documents") {
    const auto D = io::set_or_phi_from_json(json::parse(R"({"kind": "builtin", "name": "kl"})"));
    CHECK(D.dim() == 2);
    const auto ch = io::phi_from_json(
        json::parse(R"({"kind": "channel", "base": {"kind": "builtin", "name": "hellinger2"}, "r1": 0.8, "r2": 0.8})"));
    CHECK(ch.value(1.0).value() == Approx(0.0).margin(1e-15));
    const auto off =
        io::phi_from_json(json::parse(R"({"kind": "offset", "base": {"kind": "builtin", "name": "kl"}, "c": 2})"));
    CHECK(off.value(2.0).value() == Approx(phi::kl().value(2.0).value() + 2.0));
    CHECK_THROWS_AS(io::phi_from_json(json::parse(R"({"kind": "builtin", "name": "renyi"})")), io::SchemaError);
    CHECK_THROWS_AS(io::phi_from_json(json::parse(R"({"kind": "mystery"})")), io::SchemaError);
}

TEST_CASE("schema errors are specific") {
    CHECK_THROWS_WITH(io::convex_spec_from_json(json::parse(R"({"dim": 3, "rep": {"kind": "dvar", "n": 2}})")),
                      Catch::Matchers::ContainsSubstring("declared dim 3"));
    CHECK_THROWS_WITH(io::experiment_from_json(json::parse(R"({"n": 3, "rows": [[1, 0], [0, 1]]})")),
                      Catch::Matchers::ContainsSubstring("n = 3"));
    CHECK_THROWS_AS(io::experiment_from_json(json::parse(R"({"rows": [[0.5, 0.6]]})")), std::invalid_argument);
    CHECK_THROWS_WITH(io::parse_text("{\"rows\": [1, 2,", "doc"), Catch::Matchers::ContainsSubstring("byte offset"));
}

TEST_CASE("experiments, kernels and classes") {
    const Experiment E(Mat{{0.5, 0.5}, {0.25, 0.75}});
    const auto back = io::experiment_from_json(io::experiment_to_json(E));
    CHECK(back.rows() == E.rows());
    const Kernel K(Mat{{0.9, 0.1}, {0.2, 0.8}});
    CHECK(io::kernel_from_json(io::kernel_to_json(K)).matrix() == K.matrix());

    FunctionClass F(2, 2);
    F.add(Mat{{-1.0, -0.5}, {0.0, -2.0}});
    const auto G = io::function_class_from_json(io::function_class_to_json(F));
    CHECK(G.members().front() == F.members().front());
}

TEST_CASE("losses and hypotheses") {
    const auto L = io::loss_from_json(json::parse(R"({"form": "brier", "n": 2, "grid": {"lattice": 4}})"));
    CHECK(L.grid().size() == 5);
    const auto L2 = io::loss_from_json(io::loss_to_json(L));
    CHECK(L2.grid_losses() == L.grid_losses());
    const auto T = io::loss_from_json(json::parse(
        R"({"form": "table", "predictions": [[1, 0], [0, 1]], "loss_vectors": [[0, 1], [1, 0]]})"));
    CHECK(T.loss_vector(Vec{{0.0, 1.0}})(0) == 1.0);
    const auto H = io::hypotheses_from_json(L, json::parse(R"({"hypotheses": [[0, 4], [[0.5, 0.5], [0.25, 0.75]]]})"));
    REQUIRE(H.size() == 2);
    CHECK(H[0].predictions[1].isApprox(Vec{{1.0, 0.0}}));
    CHECK(H[1].predictions[1](0) == 0.25);
    CHECK_THROWS_AS(io::hypotheses_from_json(L, json::parse("[[0, 9]]")), std::out_of_range);
}

TEST_CASE("information results") {
    const auto r = d_information(phi::d_phi_set(phi::kl()), Experiment(Mat{{0.5, 0.5}, {0.25, 0.75}}));
    const json plain = io::info_result_to_json(r, false);
    CHECK(plain["witness"].is_null());
    CHECK(plain["value"].get<double>() == Approx(0.5 * std::log(4.0 / 3.0)));
    const json with = io::info_result_to_json(r, true);
    CHECK(with["witness"].size() == 2);

    const auto inf = d_information(phi::d_phi_set(phi::kl()), Experiment(Mat::Identity(2, 2)));
    const json j = io::info_result_to_json(inf, true);
    CHECK(j["value"] == "inf");
    CHECK(j["witness"][0][0].is_null());
}
