#ifndef CVXINFO_VERIFY_HPP
#define CVXINFO_VERIFY_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cvxinfo/convex_set.hpp"
#include "cvxinfo/decision.hpp"
#include "cvxinfo/experiment.hpp"
#include "cvxinfo/information.hpp"
#include "cvxinfo/json_io.hpp"
#include "cvxinfo/phi.hpp"
#include "cvxinfo/phi_sets.hpp"

/**
 * Seeded randomized harness for the processing equalities, bridge
 * identities and invariances. Every trial draws its inputs from a generator
 * seeded by (seed, suite, trial index), so a failing trial can be replayed
 * on its own, and its inputs are also serialized into the report.
 */
namespace cvxinfo::verify {

using json = nlohmann::json;

struct IntRange {
    int lo = 2;
    int hi = 3;
};

struct TrialConfig {
    std::uint64_t seed = 20240917;
    int trials = 100;
    IntRange n_range{2, 3};
    IntRange m_range{2, 8};
    /// Overrides every per-check tolerance when set.
    std::optional<double> tol;
    /// Empty means every suite.
    std::vector<std::string> suites;
};

struct CheckReport {
    std::string name;
    double tol = 0.0;
    int passed = 0;
    int failed = 0;
    double worst_gap = 0.0;
};

struct SuiteReport {
    std::string suite;
    int trials = 0;
    int passed = 0;
    int failed = 0;
    double worst_gap = 0.0;
    std::vector<CheckReport> checks;
    std::vector<json> failure_cases;

    [[nodiscard]] const CheckReport& check(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return c;
        throw std::out_of_range("no check named '" + name + "' in suite " + suite);
    }
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"label_equality", "observation_equality", "commutation",
                                                "bridges",        "invariances",          "variational"};
    return names;
}

/// |a - b| on the extended line; two equal infinities count as agreement.
inline double gap(ExtReal a, ExtReal b) {
    if (a.is_pos_inf() && b.is_pos_inf()) return 0.0;
    if (a.is_neg_inf() && b.is_neg_inf()) return 0.0;
    if (!a.is_finite() || !b.is_finite()) return kInf;
    return std::abs(a.value() - b.value());
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t trial_seed(std::uint64_t seed, const std::string& suite, int trial) {
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (unsigned char c : suite) h = (h ^ c) * 1099511628211ULL;
    return splitmix64(splitmix64(seed ^ h) + static_cast<std::uint64_t>(trial));
}

/// Random inputs for one trial.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo = 0.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    int integer(const IntRange& r) { return integer(r.lo, r.hi); }
    bool coin(double p) { return uniform() < p; }
    std::mt19937_64& engine() { return rng_; }

    /// Flat Dirichlet draw.
    Vec dirichlet(Eigen::Index k) {
        std::gamma_distribution<double> g(1.0, 1.0);
        Vec v(k);
        for (Eigen::Index i = 0; i < k; ++i) v(i) = g(rng_) + 1e-300;
        return v / v.sum();
    }

    /// Rows from a flat Dirichlet; with sparse set, entries are zeroed at
    /// random (keeping at least one per row) to exercise support mismatch.
    Experiment experiment(Eigen::Index n, Eigen::Index m, bool sparse) {
        Mat rows(n, m);
        for (Eigen::Index i = 0; i < n; ++i) {
            Vec r = dirichlet(m);
            if (sparse && m > 1) {
                const Eigen::Index keep = integer(0, static_cast<int>(m) - 1);
                for (Eigen::Index x = 0; x < m; ++x)
                    if (x != keep && coin(0.35)) r(x) = 0.0;
                r /= r.sum();
            }
            rows.row(i) = r.transpose();
        }
        return Experiment(rows);
    }

    /// 10% of trials draw sparse experiments.
    Experiment experiment(Eigen::Index n, Eigen::Index m) { return experiment(n, m, coin(0.1)); }

    Kernel kernel(Eigen::Index k, Eigen::Index l) {
        Mat M(k, l);
        for (Eigen::Index i = 0; i < k; ++i) M.row(i) = dirichlet(l).transpose();
        return Kernel(M);
    }

    /// A member of the normalized family: vertices in {<x, 1_n> <= 0} with
    /// one at the origin, rays -e_i.
    ConvexSpec normalized_vpoly(int n) {
        std::normal_distribution<double> g;
        std::vector<Vec> verts{Vec::Zero(n)};
        const int k = integer(1, 5);
        for (int j = 0; j < k; ++j) {
            Vec v(n);
            for (int i = 0; i < n; ++i) v(i) = 2.0 * g(rng_);
            v.array() -= v.mean() + uniform(0.0, 1.0);
            verts.push_back(v);
        }
        std::vector<Vec> rays;
        for (int i = 0; i < n; ++i) rays.push_back(-Vec::Unit(n, i));
        ConvexSpec D = ConvexSpec::vpolyhedron(std::move(verts), std::move(rays));
        const ExtReal s = support(D, Vec::Ones(n));
        if (!s.is_finite() || std::abs(s.value()) > 1e-12)
            throw std::logic_error("normalized_vpoly: generated set is not normalized");
        return D;
    }

    PhiGenerator builtin_phi() {
        const auto& names = phi::builtin_names();
        return phi::builtin(names[static_cast<std::size_t>(integer(0, static_cast<int>(names.size()) - 1))]);
    }

    /// Normalized parameter set: a phi-set (n = 2, half the time), DVarN
    /// occasionally, otherwise a random vertex form.
    ConvexSpec normalized_set(int n) {
        if (n == 2 && coin(0.5)) return phi::d_phi_set(builtin_phi());
        if (coin(0.15)) return ConvexSpec::dvar(n);
        return normalized_vpoly(n);
    }

    /// Random vertex form containing the origin (rays optional).
    ConvexSpec vpoly_with_origin(int n) {
        std::normal_distribution<double> g;
        std::vector<Vec> verts{Vec::Zero(n)};
        const int k = integer(1, 6);
        for (int j = 0; j < k; ++j) {
            Vec v(n);
            for (int i = 0; i < n; ++i) v(i) = 3.0 * g(rng_);
            verts.push_back(v);
        }
        std::vector<Vec> rays;
        const int r = integer(0, 2);
        for (int j = 0; j < r; ++j) {
            Vec v(n);
            for (int i = 0; i < n; ++i) v(i) = g(rng_);
            rays.push_back(v);
        }
        return ConvexSpec::vpolyhedron(std::move(verts), std::move(rays));
    }

    Mat nonpositive_table(Eigen::Index n, Eigen::Index m) {
        Mat f(n, m);
        const double scale = uniform(0.1, 5.0);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index x = 0; x < m; ++x) f(i, x) = -scale * uniform();
        return f;
    }

    Mat permutation(int n) {
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng_);
        Mat P = Mat::Zero(n, n);
        for (int i = 0; i < n; ++i) P(i, p[static_cast<std::size_t>(i)]) = 1.0;
        return P;
    }

private:
    std::mt19937_64 rng_;
};

namespace detail {

/// Accumulates per-check gaps trial by trial.
class SuiteRun {
public:
    SuiteRun(std::string suite, const TrialConfig& cfg, std::vector<std::pair<std::string, double>> checks)
        : cfg_(cfg) {
        report_.suite = std::move(suite);
        for (auto& [name, tol] : checks) {
            CheckReport c;
            c.name = name;
            c.tol = cfg.tol ? *cfg.tol : tol;
            report_.checks.push_back(c);
        }
    }

    [[nodiscard]] std::uint64_t seed_for(int trial) const { return trial_seed(cfg_.seed, report_.suite, trial); }

    /// gaps[k] belongs to check k; inputs are stored only on failure.
    void record(int trial, const std::vector<double>& gaps, const std::function<json()>& inputs) {
        bool ok = true;
        json failed_checks = json::array();
        for (std::size_t k = 0; k < gaps.size(); ++k) {
            auto& c = report_.checks[k];
            const double g = gaps[k];
            const bool pass = g <= c.tol;
            if (pass) ++c.passed;
            else {
                ++c.failed;
                ok = false;
                failed_checks.push_back({{"check", c.name}, {"gap", io::number(g)}});
            }
            if (!(g <= c.worst_gap)) c.worst_gap = g;
            if (!(g <= report_.worst_gap)) report_.worst_gap = g;
        }
        ++report_.trials;
        if (ok) {
            ++report_.passed;
        } else {
            ++report_.failed;
            report_.failure_cases.push_back({{"suite", report_.suite},
                                             {"trial", trial},
                                             {"seed", cfg_.seed},
                                             {"trial_seed", seed_for(trial)},
                                             {"failed_checks", failed_checks},
                                             {"inputs", inputs()}});
        }
    }

    SuiteReport finish() { return std::move(report_); }

private:
    const TrialConfig& cfg_;
    SuiteReport report_;
};

inline Mat apply_rows(const Mat& f, const Mat& S) { return f * S.transpose(); }

}  // namespace detail

/// I_D(R E) = I_{R^T D}(E) for random sets, experiments and label kernels.
inline SuiteReport suite_label_equality(const TrialConfig& cfg) {
    detail::SuiteRun run("label_equality", cfg, {{"label_equality", 1e-9}});
    for (int t = 0; t < cfg.trials; ++t) {
        Sampler s(run.seed_for(t));
        const int n = s.integer(cfg.n_range);
        const int m = s.integer(cfg.m_range);
        const Experiment E = s.experiment(n, m);
        const Kernel R = s.kernel(n, n);
        const ConvexSpec D = s.normalized_set(n);
        const ExtReal lhs = d_information(D, compose_label(R, E)).value;
        const ExtReal rhs = d_information(pullback(D, R.matrix()), E).value;
        run.record(t, {gap(lhs, rhs)}, [&] {
            return json{{"set", io::convex_spec_to_json(D)},
                        {"experiment", io::experiment_to_json(E)},
                        {"R", io::kernel_to_json(R)},
                        {"lhs", io::number(lhs)},
                        {"rhs", io::number(rhs)}};
        });
    }
    return run.finish();
}

/// I_F(E S) = I_{S F}(E) for random nonpositive classes and output kernels.
inline SuiteReport suite_observation_equality(const TrialConfig& cfg) {
    detail::SuiteRun run("observation_equality", cfg, {{"observation_equality", 1e-10}});
    for (int t = 0; t < cfg.trials; ++t) {
        Sampler s(run.seed_for(t));
        const int n = s.integer(cfg.n_range);
        const int m = s.integer(cfg.m_range);
        const Experiment E = s.experiment(n, m);
        const Kernel S = s.kernel(m, m);
        FunctionClass F(n, m);
        FunctionClass SF(n, m);
        const int k = s.integer(1, 8);
        for (int j = 0; j < k; ++j) {
            Mat f = s.nonpositive_table(n, m);
            SF.add(detail::apply_rows(f, S.matrix()));
            F.add(std::move(f));
        }
        const ExtReal lhs = f_information(F, compose_observation(E, S)).value;
        const ExtReal rhs = f_information(SF, E).value;
        run.record(t, {gap(lhs, rhs)}, [&] {
            return json{{"class", io::function_class_to_json(F)},
                        {"experiment", io::experiment_to_json(E)},
                        {"S", io::kernel_to_json(S)},
                        {"lhs", io::number(lhs)},
                        {"rhs", io::number(rhs)}};
        });
    }
    return run.finish();
}

/// I_F(R E S) = I_{R^T S F}(E) = I_{S R^T F}(E).
inline SuiteReport suite_commutation(const TrialConfig& cfg) {
    detail::SuiteRun run("commutation", cfg, {{"commutation.RtS", 1e-9}, {"commutation.SRt", 1e-9}});
    for (int t = 0; t < cfg.trials; ++t) {
        Sampler s(run.seed_for(t));
        const int n = s.integer(cfg.n_range);
        const int m = s.integer(cfg.m_range);
        const Experiment E = s.experiment(n, m);
        const Kernel R = s.kernel(n, n);
        const Kernel S = s.kernel(m, m);
        FunctionClass F(n, m);
        FunctionClass RtS(n, m);
        FunctionClass SRt(n, m);
        const int k = s.integer(1, 8);
        for (int j = 0; j < k; ++j) {
            Mat f = s.nonpositive_table(n, m);
            RtS.add(R.matrix().transpose() * detail::apply_rows(f, S.matrix()));
            SRt.add(detail::apply_rows(R.matrix().transpose() * f, S.matrix()));
            F.add(std::move(f));
        }
        const ExtReal a = f_information(F, compose_observation(compose_label(R, E), S)).value;
        const ExtReal b = f_information(RtS, E).value;
        const ExtReal c = f_information(SRt, E).value;
        run.record(t, {gap(a, b), gap(a, c)}, [&] {
            return json{{"class", io::function_class_to_json(F)},
                        {"experiment", io::experiment_to_json(E)},
                        {"R", io::kernel_to_json(R)},
                        {"S", io::kernel_to_json(S)},
                        {"values", {io::number(a), io::number(b), io::number(c)}}};
        });
    }
    return run.finish();
}

/// Unconstrained and constrained bridges between Bayes risk and information.
inline SuiteReport suite_bridges(const TrialConfig& cfg) {
    detail::SuiteRun run("bridges", cfg, {{"bridges.unconstrained", 1e-9}, {"bridges.constrained", 1e-12}});
    for (int t = 0; t < cfg.trials; ++t) {
        Sampler s(run.seed_for(t));
        const int n = s.integer(cfg.n_range);
        const int m = s.integer(cfg.m_range);
        const int form = s.integer(0, 2);
        const LossSpec loss = form == 0 ? LossSpec::zero_one(n) : form == 1 ? LossSpec::brier(n) : LossSpec::log(n);
        const Vec pi = s.dirichlet(n);
        const Experiment E = s.experiment(n, m);

        const double risk = bayes_risk(loss, pi, E);
        const ExtReal info = d_information(bridge_set(loss, pi), E).value;

        std::vector<Hypothesis> H;
        const int hs = s.integer(1, 20);
        const int g = static_cast<int>(loss.grid().size());
        for (int j = 0; j < hs; ++j) {
            std::vector<std::size_t> idx;
            for (int x = 0; x < m; ++x) idx.push_back(static_cast<std::size_t>(s.integer(0, g - 1)));
            H.push_back(Hypothesis::from_grid(loss, idx));
        }
        const double crisk = constrained_bayes_risk(loss, H, pi, E);
        const ExtReal cinfo = f_information(constrained_bridge_class(loss, H, pi, m), E).value;

        run.record(t, {gap(ExtReal(risk), -info), gap(ExtReal(crisk), -cinfo)}, [&] {
            return json{{"loss", to_string(loss.form())},
                        {"n", n},
                        {"prior", io::from_vec(pi)},
                        {"experiment", io::experiment_to_json(E)},
                        {"hypotheses", io::hypotheses_to_json(H)},
                        {"bayes_risk", io::number(risk)},
                        {"information", io::number(info)},
                        {"constrained_bayes_risk", io::number(crisk)},
                        {"f_information", io::number(cinfo)}};
        });
    }
    return run.finish();
}

/// Affine offsets, sliding, totally noninformative experiments, choice of
/// reference measure and permutation invariance of DVarN.
inline SuiteReport suite_invariances(const TrialConfig& cfg) {
    detail::SuiteRun run("invariances", cfg,
                         {{"affine_offset", 1e-10},
                          {"sliding", 1e-10},
                          {"tni_zero", 1e-10},
                          {"rho_invariance", 1e-10},
                          {"permutation", 1e-10}});
    for (int t = 0; t < cfg.trials; ++t) {
        Sampler s(run.seed_for(t));
        const int n = s.integer(cfg.n_range);
        const int m = s.integer(cfg.m_range);
        std::vector<double> gaps;
        json inputs;

        // phi_c(t) = phi(t) + c (t - 1) leaves I_phi unchanged.
        {
            const PhiGenerator phi = s.builtin_phi();
            const double c = s.uniform(-3.0, 3.0);
            const Experiment E2 = s.experiment(2, m);
            const ExtReal a = d_information(phi::d_phi_set(phi), E2).value;
            const ExtReal b = d_information(phi::d_phi_set(phi::affine_offset(phi, c)), E2).value;
            gaps.push_back(gap(a, b));
            inputs["affine_offset"] = {{"phi", phi.name()}, {"c", c}, {"experiment", io::experiment_to_json(E2)}};
        }
        const ConvexSpec D = s.normalized_set(n);
        const Experiment E = s.experiment(n, m);
        inputs["set"] = io::convex_spec_to_json(D);
        inputs["experiment"] = io::experiment_to_json(E);
        const ExtReal base = d_information(D, E).value;
        // Sliding by p orthogonal to 1_n.
        {
            Vec p(n);
            for (int i = 0; i < n; ++i) p(i) = s.uniform(-2.0, 2.0);
            p.array() -= p.mean();
            gaps.push_back(gap(base, d_information(translate(D, p), E).value));
            inputs["p"] = io::from_vec(p);
        }
        {
            const Experiment tni = make_tni(n, m, s.dirichlet(m));
            gaps.push_back(gap(d_information(D, tni).value, ExtReal(0.0)));
        }
        {
            Vec w(m);
            for (int x = 0; x < m; ++x) w(x) = s.uniform(0.05, 1.0);
            const double g1 = gap(base, d_information(D, E, RefMeasure::uniform(m)).value);
            const double g2 = gap(base, d_information(D, E, RefMeasure(w / w.sum())).value);
            gaps.push_back(std::max(g1, g2));
        }
        {
            const ConvexSpec V = ConvexSpec::dvar(n);
            const Mat P = s.permutation(n);
            gaps.push_back(gap(d_information(V, E).value, d_information(V, compose_label(Kernel(P), E)).value));
            inputs["permutation"] = io::from_mat(P);
        }
        run.record(t, gaps, [&] { return inputs; });
    }
    return run.finish();
}

/// Closed form, brute force and the support-function route for DVarN,
/// plus homogeneity under the symmetric channel S_alpha.
inline SuiteReport suite_variational(const TrialConfig& cfg) {
    detail::SuiteRun run("variational", cfg,
                         {{"closed_vs_bruteforce", 1e-10}, {"closed_vs_support", 1e-10}, {"s_alpha", 1e-10}});
    for (int t = 0; t < cfg.trials; ++t) {
        Sampler s(run.seed_for(t));
        const int n = s.integer(cfg.n_range);
        int m = s.integer(cfg.m_range);
        while (m > 1 && std::pow(static_cast<double>(n), static_cast<double>(m)) > 1e5) --m;
        const Experiment E = s.experiment(n, m);
        const ExtReal closed = variational_information(E).value;
        const double brute = variational_bruteforce(E);
        const ExtReal via_support = d_information(ConvexSpec::dvar(n), E).value;
        double worst_alpha = 0.0;
        for (double alpha : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            const Mat S = alpha * Mat::Identity(n, n) + Mat::Constant(n, n, (1.0 - alpha) / n);
            const ExtReal lhs = variational_information(compose_label(Kernel(S), E)).value;
            worst_alpha = std::max(worst_alpha, gap(lhs, ExtReal(alpha * closed.value())));
        }
        run.record(t, {gap(closed, ExtReal(brute)), gap(closed, via_support), worst_alpha}, [&] {
            return json{{"experiment", io::experiment_to_json(E)},
                        {"closed_form", io::number(closed)},
                        {"bruteforce", io::number(brute)},
                        {"support_route", io::number(via_support)}};
        });
    }
    return run.finish();
}

inline SuiteReport run_suite(const std::string& name, const TrialConfig& cfg) {
    if (name == "label_equality") return suite_label_equality(cfg);
    if (name == "observation_equality") return suite_observation_equality(cfg);
    if (name == "commutation") return suite_commutation(cfg);
    if (name == "bridges") return suite_bridges(cfg);
    if (name == "invariances") return suite_invariances(cfg);
    if (name == "variational") return suite_variational(cfg);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

inline void validate(const TrialConfig& cfg) {
    if (cfg.trials < 0) throw std::invalid_argument("trials must be nonnegative");
    if (cfg.n_range.lo < 2 || cfg.n_range.hi < cfg.n_range.lo) throw std::invalid_argument("n_range must be [lo, hi] with 2 <= lo <= hi");
    if (cfg.m_range.lo < 1 || cfg.m_range.hi < cfg.m_range.lo) throw std::invalid_argument("m_range must be [lo, hi] with 1 <= lo <= hi");
    if (cfg.n_range.hi > 16) throw std::invalid_argument("n_range above 16 is not supported");
    if (cfg.tol && !(*cfg.tol >= 0.0)) throw std::invalid_argument("tol must be nonnegative");
    for (const auto& s : cfg.suites)
        if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
            throw std::invalid_argument("unknown suite '" + s + "'");
}

/// Runs the requested suites (all by default) in canonical order.
inline std::vector<SuiteReport> run_all(const TrialConfig& cfg) {
    validate(cfg);
    std::vector<SuiteReport> out;
    for (const auto& name : suite_names()) {
        if (!cfg.suites.empty() && std::find(cfg.suites.begin(), cfg.suites.end(), name) == cfg.suites.end())
            continue;
        out.push_back(run_suite(name, cfg));
    }
    return out;
}

inline bool all_passed(const std::vector<SuiteReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.failed == 0; });
}

inline json config_to_json(const TrialConfig& cfg) {
    json j{{"seed", cfg.seed},
           {"trials", cfg.trials},
           {"n_range", {cfg.n_range.lo, cfg.n_range.hi}},
           {"m_range", {cfg.m_range.lo, cfg.m_range.hi}},
           {"suites", cfg.suites}};
    j["tol"] = cfg.tol ? json(*cfg.tol) : json(nullptr);
    return j;
}

inline TrialConfig config_from_json(const json& j) {
    TrialConfig cfg;
    if (!j.is_object()) throw io::SchemaError("verify config: expected an object");
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("trials")) cfg.trials = j["trials"].get<int>();
    if (j.contains("n_range")) cfg.n_range = {j["n_range"].at(0).get<int>(), j["n_range"].at(1).get<int>()};
    if (j.contains("m_range")) cfg.m_range = {j["m_range"].at(0).get<int>(), j["m_range"].at(1).get<int>()};
    if (j.contains("tol") && !j["tol"].is_null()) cfg.tol = io::to_double(j["tol"], "tol");
    if (j.contains("suites")) cfg.suites = j["suites"].get<std::vector<std::string>>();
    return cfg;
}

inline json report_to_json(const TrialConfig& cfg, const std::vector<SuiteReport>& reports) {
    json suites = json::array();
    for (const auto& r : reports) {
        json checks = json::array();
        for (const auto& c : r.checks)
            checks.push_back({{"name", c.name},
                              {"tol", c.tol},
                              {"passed", c.passed},
                              {"failed", c.failed},
                              {"worst_gap", io::number(c.worst_gap)}});
        suites.push_back({{"suite", r.suite},
                          {"trials", r.trials},
                          {"passed", r.passed},
                          {"failed", r.failed},
                          {"worst_gap", io::number(r.worst_gap)},
                          {"checks", checks},
                          {"failure_cases", r.failure_cases}});
    }
    return {{"config", config_to_json(cfg)}, {"suites", suites}, {"all_passed", all_passed(reports)}};
}

}  // namespace cvxinfo::verify

#endif  // CVXINFO_VERIFY_HPP
