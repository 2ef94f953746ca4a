// cvxinfo: command-line front end for the information/risk library.
//
// Exit codes: 0 success, 1 computation failure (including failed
// verification and --require-finite violations), 2 usage or parse errors.

#include <cvxinfo.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using cvxinfo::io::json;

struct ComputationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Output {
    std::string path;
    std::string format = "json";
};

std::string csv_cell(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    return v.dump();
}

/// Flattens scalar leaves into key,value rows (arrays indexed with [i]).
void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
    } else {
        rows.emplace_back(prefix, csv_cell(j));
    }
}

void emit_text(const std::string& text, const Output& out) {
    if (out.path.empty() || out.path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out.path, std::ios::binary);
    if (!f) throw ComputationFailure("cannot write '" + out.path + "'");
    f << text;
}

void emit(const json& doc, const Output& out, const std::string& csv_override = {}) {
    if (out.format == "json") {
        emit_text(doc.dump(2) + "\n", out);
        return;
    }
    if (!csv_override.empty()) {
        emit_text(csv_override, out);
        return;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(doc, "", rows);
    std::ostringstream os;
    os << "key,value\n";
    for (const auto& [k, v] : rows) os << k << ',' << v << '\n';
    emit_text(os.str(), out);
}

cvxinfo::Vec distribution_arg(const std::string& arg, const std::string& what) {
    const json j = cvxinfo::io::load_arg(arg);
    const json& v = j.is_object() ? cvxinfo::io::field(j, "p", what) : j;
    return cvxinfo::io::to_vec(v, what);
}

void require_finite(bool flag, const cvxinfo::ExtReal& v, const std::string& what) {
    if (flag && !v.is_finite()) throw ComputationFailure(what + " is not finite");
}

std::optional<cvxinfo::RefMeasure> reference(const std::string& ref, const cvxinfo::Experiment& E) {
    if (ref.empty() || ref == "average") return std::nullopt;
    if (ref == "uniform") return cvxinfo::RefMeasure::uniform(E.m());
    return cvxinfo::RefMeasure(distribution_arg(ref, "reference measure"));
}

cvxinfo::Window parse_window(const std::string& s) {
    std::vector<double> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw std::invalid_argument("--window: '" + tok + "' is not a number");
        }
    }
    cvxinfo::Window w;
    if (v.size() == 2) w = {v[0], v[1], v[0], v[1]};
    else if (v.size() == 4) w = {v[0], v[1], v[2], v[3]};
    else throw std::invalid_argument("--window expects lo,hi or xlo,xhi,ylo,yhi");
    if (!(w.xmin < w.xmax) || !(w.ymin < w.ymax)) throw std::invalid_argument("--window: empty window");
    return w;
}

json catalog() {
    json rows = json::array();
    for (const auto& name : cvxinfo::phi::builtin_names()) {
        const auto phi = cvxinfo::phi::builtin(name);
        const auto& L = phi.limits();
        auto num = [](auto v) { return cvxinfo::io::number(v); };
        json conj = json::array();
        for (double s : {-2.0, -1.0, -0.5, 0.0, 0.5}) conj.push_back({num(s), cvxinfo::io::number(phi.conjugate(s))});
        rows.push_back({{"name", name},
                        {"phi_at_zero", num(L.at_zero)},
                        {"slope_at_infinity", num(L.slope_inf)},
                        {"derivative_at_zero", num(L.deriv_at_zero)},
                        {"intercept_at_infinity", num(L.intercept_inf)},
                        {"phi_star_samples", conj}});
    }
    return {{"generators", rows}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Convex-set information measures, Bayes risks and identity verification"};
    app.require_subcommand(1);
    app.fallthrough();
    Output out;
    app.add_option("--out", out.path, "Output file (default: stdout)");
    app.add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    std::string exp_arg, set_arg, ref_arg;
    bool witness = false;
    bool finite_only = false;
    auto* compute = app.add_subcommand("compute", "I_D(E) for a set or phi document, or I_F(E) for a function class");
    compute->add_option("experiment", exp_arg, "Experiment JSON (file or inline)")->required();
    compute->add_option("set", set_arg, "Set, phi or function-class JSON (file or inline)")->required();
    compute->add_option("--ref", ref_arg, "Reference measure: average (default), uniform, or a JSON vector");
    compute->add_flag("--witness", witness, "Include the witness table");
    compute->add_flag("--require-finite", finite_only, "Exit 1 if the value is infinite");

    std::string loss_arg, prior_arg, hyp_arg;
    double tol = -1.0;
    auto* bridge = app.add_subcommand("bridge", "Bayes risk next to the negated information of the bridge set");
    bridge->add_option("loss", loss_arg, "Loss JSON")->required();
    bridge->add_option("prior", prior_arg, "Prior vector JSON")->required();
    bridge->add_option("experiment", exp_arg, "Experiment JSON")->required();
    bridge->add_option("--hypotheses", hyp_arg, "Restricted hypothesis class JSON");
    bridge->add_option("--tol", tol, "Report agreement within this gap")->check(CLI::NonNegativeNumber);

    std::string mu_arg, ups_arg;
    auto* entropy = app.add_subcommand("entropy", "D-entropy of mu relative to upsilon");
    entropy->add_option("set", set_arg, "Planar set or phi JSON")->required();
    entropy->add_option("mu", mu_arg, "Distribution mu")->required();
    entropy->add_option("upsilon", ups_arg, "Distribution upsilon")->required();
    entropy->add_flag("--require-finite", finite_only, "Exit 1 if the value is infinite");

    std::string joint_arg;
    auto* mi = app.add_subcommand("mi", "Mutual information of a joint table under a set or function class");
    mi->add_option("set", set_arg, "Planar set, phi or function-class JSON")->required();
    mi->add_option("joint", joint_arg, "Joint probability table JSON")->required();
    mi->add_flag("--require-finite", finite_only, "Exit 1 if the value is infinite");

    std::string config_arg;
    std::uint64_t seed = 0;
    int trials = -1;
    std::vector<std::string> suites;
    auto* verify = app.add_subcommand("verify", "Run the randomized identity suites");
    verify->add_option("config", config_arg, "Config JSON (optional)");
    auto* seed_opt = verify->add_option("--seed", seed, "Master seed");
    verify->add_option("--trials", trials, "Trials per suite")->check(CLI::NonNegativeNumber);
    verify->add_option("--suite", suites, "Suites to run (repeatable)");
    verify->add_option("--tol", tol, "Override every tolerance")->check(CLI::NonNegativeNumber);

    std::string phi_name, window_arg = "-10,10";
    int grid = 400;
    auto* regions = app.add_subcommand("regions", "CSV of D_phi and polar boundaries (columns x,y,set)");
    regions->add_option("phi", phi_name, "Builtin generator name")->required();
    regions->add_option("--window", window_arg, "lo,hi or xlo,xhi,ylo,yhi");
    regions->add_option("--grid", grid, "Lattice cells per axis")->check(CLI::PositiveNumber);

    auto* cat = app.add_subcommand("catalog", "List builtin generators with limits and phi* samples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        namespace io = cvxinfo::io;
        if (compute->parsed()) {
            const auto E = io::experiment_from_json(io::load_arg(exp_arg));
            const json sdoc = io::load_arg(set_arg);
            cvxinfo::InfoResult r;
            if (sdoc.is_object() && sdoc.contains("members")) {
                const auto F = io::function_class_from_json(sdoc);
                r = cvxinfo::f_information(F, E);
            } else {
                const auto D = io::set_or_phi_from_json(sdoc);
                if (D.dim() != E.n())
                    throw std::invalid_argument("dimension mismatch: set has dimension " + std::to_string(D.dim()) +
                                                ", experiment is " + std::to_string(E.n()) + "x" +
                                                std::to_string(E.m()));
                r = cvxinfo::d_information(D, E, reference(ref_arg, E));
            }
            require_finite(finite_only, r.value, "information");
            json doc = io::info_result_to_json(r, witness);
            std::ostringstream csv;
            csv << "outcome,rho,contribution\n";
            for (Eigen::Index x = 0; x < r.per_outcome.size(); ++x)
            {
                const double rho = r.rho(x);
                const double term = rho == 0.0 ? 0.0 : rho * r.per_outcome(x);
                csv << x << ',' << csv_cell(io::number(rho)) << ',' << csv_cell(io::number(term)) << '\n';
            }
            emit(doc, out, csv.str());
        } else if (bridge->parsed()) {
            const auto loss = io::loss_from_json(io::load_arg(loss_arg));
            const auto pi = distribution_arg(prior_arg, "prior");
            const auto E = io::experiment_from_json(io::load_arg(exp_arg));
            json doc;
            double g = 0.0;
            if (hyp_arg.empty()) {
                const double risk = cvxinfo::bayes_risk(loss, pi, E);
                const auto info = cvxinfo::d_information(cvxinfo::bridge_set(loss, pi), E).value;
                g = cvxinfo::verify::gap(risk, -info);
                doc = {{"bayes_risk", io::number(risk)}, {"information", io::number(info)}};
            } else {
                const auto H = io::hypotheses_from_json(loss, io::load_arg(hyp_arg));
                const double risk = cvxinfo::constrained_bayes_risk(loss, H, pi, E);
                const auto info = cvxinfo::f_information(cvxinfo::constrained_bridge_class(loss, H, pi, E.m()), E).value;
                g = cvxinfo::verify::gap(risk, -info);
                doc = {{"constrained_bayes_risk", io::number(risk)}, {"f_information", io::number(info)}};
            }
            doc["gap"] = io::number(g);
            if (tol >= 0.0) {
                doc["tol"] = tol;
                doc["agrees"] = g <= tol;
            }
            emit(doc, out);
            if (tol >= 0.0 && !(g <= tol)) return 1;
        } else if (entropy->parsed()) {
            const auto D = io::set_or_phi_from_json(io::load_arg(set_arg));
            const auto v = cvxinfo::d_entropy(D, distribution_arg(mu_arg, "mu"), distribution_arg(ups_arg, "upsilon"));
            require_finite(finite_only, v, "entropy");
            emit({{"value", io::number(v)}}, out);
        } else if (mi->parsed()) {
            const json sdoc = io::load_arg(set_arg);
            const json jdoc = io::load_arg(joint_arg);
            const auto joint = io::to_mat(jdoc.is_object() ? io::field(jdoc, "joint", "mi") : jdoc, "joint");
            cvxinfo::ExtReal v;
            if (sdoc.is_object() && sdoc.contains("members")) {
                v = cvxinfo::f_mutual_information(io::function_class_from_json(sdoc), joint);
            } else {
                const auto D = io::set_or_phi_from_json(sdoc);
                v = cvxinfo::d_information(D, cvxinfo::mutual_information_experiment(joint)).value;
            }
            require_finite(finite_only, v, "mutual information");
            emit({{"value", io::number(v)}}, out);
        } else if (verify->parsed()) {
            auto cfg = config_arg.empty() ? cvxinfo::verify::TrialConfig{}
                                          : cvxinfo::verify::config_from_json(io::load_arg(config_arg));
            if (*seed_opt) cfg.seed = seed;
            if (trials >= 0) cfg.trials = trials;
            if (!suites.empty()) cfg.suites = suites;
            if (tol >= 0.0) cfg.tol = tol;
            const auto reports = cvxinfo::verify::run_all(cfg);
            const json doc = cvxinfo::verify::report_to_json(cfg, reports);
            if (out.format == "csv") {
                std::ostringstream csv;
                csv << "suite,check,tol,passed,failed,worst_gap\n";
                for (const auto& r : reports)
                    for (const auto& c : r.checks)
                        csv << r.suite << ',' << c.name << ',' << csv_cell(io::number(c.tol)) << ',' << c.passed << ','
                            << c.failed << ',' << csv_cell(io::number(c.worst_gap)) << '\n';
                emit(doc, out, csv.str());
            } else {
                emit(doc, out);
            }
            for (const auto& r : reports)
                std::cerr << r.suite << ": " << r.passed << "/" << r.trials << " trials passed, worst gap "
                          << r.worst_gap << "\n";
            return cvxinfo::verify::all_passed(reports) ? 0 : 1;
        } else if (regions->parsed()) {
            const auto D = cvxinfo::phi::d_phi_set(cvxinfo::phi::builtin(phi_name));
            const auto pts = cvxinfo::region_boundary(D, grid, parse_window(window_arg));
            std::ostringstream csv;
            csv << "x,y,set\n";
            for (const auto& p : pts)
                csv << csv_cell(io::number(p.x)) << ',' << csv_cell(io::number(p.y)) << ',' << cvxinfo::to_string(p.set)
                    << '\n';
            emit_text(csv.str(), out);
        } else if (cat->parsed()) {
            emit(catalog(), out);
        }
    } catch (const ComputationFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cvxinfo::io::json::exception& e) {
        std::cerr << "error: malformed input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
