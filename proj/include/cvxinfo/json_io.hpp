#ifndef CVXINFO_JSON_IO_HPP
#define CVXINFO_JSON_IO_HPP

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cvxinfo/convex_set.hpp"
#include "cvxinfo/decision.hpp"
#include "cvxinfo/experiment.hpp"
#include "cvxinfo/information.hpp"
#include "cvxinfo/phi.hpp"
#include "cvxinfo/phi_sets.hpp"

// JSON schemas for sets, generators, experiments, losses and results.
// Infinities travel as the strings "inf" / "-inf".
namespace cvxinfo::io {

using json = nlohmann::json;

/// Raised for malformed documents; the CLI maps it to exit status 2.
class SchemaError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline json number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}
inline json number(ExtReal v) { return number(v.value()); }

inline double to_double(const json& j, const std::string& where) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf" || s == "+inf") return kInf;
        if (s == "-inf") return -kInf;
        if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    }
    throw SchemaError(where + ": expected a number, got " + j.dump());
}

inline const json& field(const json& j, const std::string& key, const std::string& where) {
    if (!j.is_object()) throw SchemaError(where + ": expected an object");
    const auto it = j.find(key);
    if (it == j.end()) throw SchemaError(where + ": missing field '" + key + "'");
    return *it;
}

inline Vec to_vec(const json& j, const std::string& where) {
    if (!j.is_array()) throw SchemaError(where + ": expected an array of numbers");
    Vec v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = to_double(j[i], where + "[" + std::to_string(i) + "]");
    return v;
}

inline Mat to_mat(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw SchemaError(where + ": expected a nonempty array of rows");
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    Mat M(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < j.size(); ++r) {
        const Vec row = to_vec(j[r], where + "[" + std::to_string(r) + "]");
        if (static_cast<std::size_t>(row.size()) != cols)
            throw SchemaError(where + ": row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                              " entries, expected " + std::to_string(cols));
        M.row(static_cast<Eigen::Index>(r)) = row.transpose();
    }
    return M;
}

inline std::vector<Vec> to_points(const json& j, const std::string& where) {
    if (!j.is_array()) throw SchemaError(where + ": expected an array of points");
    std::vector<Vec> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(to_vec(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

inline json from_vec(const Vec& v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(number(v(i)));
    return a;
}

inline json from_mat(const Mat& M) {
    json a = json::array();
    for (Eigen::Index r = 0; r < M.rows(); ++r) a.push_back(from_vec(M.row(r).transpose()));
    return a;
}

inline json from_points(const std::vector<Vec>& pts) {
    json a = json::array();
    for (const auto& p : pts) a.push_back(from_vec(p));
    return a;
}

// ---- phi generators --------------------------------------------------------

inline PhiGenerator phi_from_json(const json& j) {
    const std::string kind = field(j, "kind", "phi").get<std::string>();
    if (kind == "builtin") {
        try {
            return phi::builtin(field(j, "name", "phi").get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw SchemaError(e.what());
        }
    }
    if (kind == "channel")
        return phi::channel_transform(phi_from_json(field(j, "base", "phi.channel")),
                                      to_double(field(j, "r1", "phi.channel"), "r1"),
                                      to_double(field(j, "r2", "phi.channel"), "r2"));
    if (kind == "offset")
        return phi::affine_offset(phi_from_json(field(j, "base", "phi.offset")),
                                  to_double(field(j, "c", "phi.offset"), "c"));
    if (kind == "csiszar") return phi::csiszar_conjugate(phi_from_json(field(j, "base", "phi.csiszar")));
    throw SchemaError("phi: unknown kind '" + kind + "'");
}

inline json phi_to_json(const PhiGenerator& phi) {
    const auto& names = phi::builtin_names();
    if (!phi.numeric() && std::find(names.begin(), names.end(), phi.name()) != names.end())
        return {{"kind", "builtin"}, {"name", phi.name()}};
    return {{"kind", "opaque"}, {"name", phi.name()}};
}

// ---- convex sets -----------------------------------------------------------

inline ConvexSpec convex_spec_from_json(const json& j) {
    const json& rep = field(j, "rep", "set");
    const std::string kind = field(rep, "kind", "set.rep").get<std::string>();
    ConvexSpec D = [&]() {
        if (kind == "phi") return phi::d_phi_set(phi_from_json(field(rep, "phi", "set.rep")));
        if (kind == "vpoly") {
            std::vector<Vec> rays;
            if (rep.contains("rays")) rays = to_points(rep["rays"], "set.rep.rays");
            return ConvexSpec::vpolyhedron(to_points(field(rep, "vertices", "set.rep"), "set.rep.vertices"), rays);
        }
        if (kind == "hpoly") {
            const auto normals = to_points(field(rep, "normals", "set.rep"), "set.rep.normals");
            const Vec offsets = to_vec(field(rep, "offsets", "set.rep"), "set.rep.offsets");
            if (static_cast<Eigen::Index>(normals.size()) != offsets.size())
                throw SchemaError("set.rep: normals and offsets differ in length");
            std::vector<Halfspace> hs;
            for (std::size_t i = 0; i < normals.size(); ++i)
                hs.push_back({normals[i], offsets(static_cast<Eigen::Index>(i))});
            return ConvexSpec::hpolyhedron(std::move(hs));
        }
        if (kind == "dvar") {
            const int n = rep.contains("n") ? rep["n"].get<int>() : field(j, "dim", "set").get<int>();
            return ConvexSpec::dvar(n);
        }
        throw SchemaError("set.rep: unknown kind '" + kind + "'");
    }();
    if (j.contains("transforms")) {
        for (const auto& t : j["transforms"]) {
            const std::string tk = field(t, "kind", "set.transforms").get<std::string>();
            if (tk == "pullback") D = pullback(D, to_mat(field(t, "matrix", "pullback"), "pullback.matrix"));
            else if (tk == "translate") D = translate(D, to_vec(field(t, "p", "translate"), "translate.p"));
            else if (tk == "hadamard") D = hadamard_scale(D, to_vec(field(t, "v", "hadamard"), "hadamard.v"));
            else throw SchemaError("set.transforms: unknown kind '" + tk + "'");
        }
    }
    if (j.contains("dim") && j["dim"].get<int>() != D.dim())
        throw SchemaError("set: declared dim " + std::to_string(j["dim"].get<int>()) + " but the set has dimension " +
                          std::to_string(D.dim()));
    return D;
}

inline json convex_spec_to_json(const ConvexSpec& D) {
    json rep = std::visit(
        [](const auto& r) -> json {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, PhiHypograph>) return {{"kind", "phi"}, {"phi", phi_to_json(r.phi)}};
            else if constexpr (std::is_same_v<T, VPolyhedron>)
                return {{"kind", "vpoly"}, {"vertices", from_points(r.vertices)}, {"rays", from_points(r.rays)}};
            else if constexpr (std::is_same_v<T, HPolyhedron>) return {{"kind", "hpoly"}, {"normals", from_mat(r.A)}, {"offsets", from_vec(r.b)}};
            else return {{"kind", "dvar"}, {"n", r.n}};
        },
        D.rep());
    json transforms = json::array();
    for (const auto& t : D.transforms()) {
        transforms.push_back(std::visit(
            [](const auto& tr) -> json {
                using T = std::decay_t<decltype(tr)>;
                if constexpr (std::is_same_v<T, LinearPullback>) return {{"kind", "pullback"}, {"matrix", from_mat(tr.matrix)}};
                else if constexpr (std::is_same_v<T, Translate>) return {{"kind", "translate"}, {"p", from_vec(tr.p)}};
                else return {{"kind", "hadamard"}, {"v", from_vec(tr.v)}};
            },
            t));
    }
    return {{"dim", D.dim()}, {"rep", rep}, {"transforms", transforms}};
}

/// Accepts a set document or a bare phi document (which becomes D_phi).
inline ConvexSpec set_or_phi_from_json(const json& j) {
    if (j.is_object() && j.contains("rep")) return convex_spec_from_json(j);
    if (j.is_object() && j.contains("kind")) return phi::d_phi_set(phi_from_json(j));
    throw SchemaError("expected a set document ({\"rep\": ...}) or a phi document ({\"kind\": ...})");
}

// ---- experiments and kernels -----------------------------------------------

inline Mat stochastic_from_json(const json& j, const std::string& what) {
    const Mat rows = to_mat(field(j, "rows", what), what + ".rows");
    if (j.contains("n") && j["n"].get<Eigen::Index>() != rows.rows())
        throw SchemaError(what + ": n = " + std::to_string(j["n"].get<long>()) + " but rows has " +
                          std::to_string(rows.rows()) + " rows");
    if (j.contains("m") && j["m"].get<Eigen::Index>() != rows.cols())
        throw SchemaError(what + ": m = " + std::to_string(j["m"].get<long>()) + " but rows have " +
                          std::to_string(rows.cols()) + " entries");
    return rows;
}

inline Experiment experiment_from_json(const json& j) { return Experiment(stochastic_from_json(j, "experiment")); }
inline Kernel kernel_from_json(const json& j) { return Kernel(stochastic_from_json(j, "kernel")); }

inline json experiment_to_json(const Experiment& E) {
    return {{"n", E.n()}, {"m", E.m()}, {"rows", from_mat(E.rows())}};
}
inline json kernel_to_json(const Kernel& K) {
    return {{"n", K.rows_in()}, {"m", K.cols_out()}, {"rows", from_mat(K.matrix())}};
}

// ---- losses and hypotheses -------------------------------------------------

inline LossSpec loss_from_json(const json& j) {
    const std::string form = field(j, "form", "loss").get<std::string>();
    if (form == "table") {
        return LossSpec::table(to_points(field(j, "predictions", "loss"), "loss.predictions"),
                               to_points(field(j, "loss_vectors", "loss"), "loss.loss_vectors"),
                               j.value("offset_applied", false));
    }
    const int n = field(j, "n", "loss").get<int>();
    std::vector<Vec> grid;
    if (j.contains("grid")) {
        const json& g = j["grid"];
        if (g.is_object()) grid = simplex_lattice(n, field(g, "lattice", "loss.grid").get<int>(), g.value("interior", false));
        else grid = to_points(g, "loss.grid");
    }
    if (form == "zero_one") return LossSpec::zero_one(n, grid);
    if (form == "log") return LossSpec::log(n, grid);
    if (form == "brier") return LossSpec::brier(n, grid);
    throw SchemaError("loss: unknown form '" + form + "'");
}

inline json loss_to_json(const LossSpec& l) {
    if (l.form() == LossForm::Table)
        return {{"form", "table"},
                {"predictions", from_points(l.grid())},
                {"loss_vectors", from_points(l.table_losses())},
                {"offset_applied", l.offset_applied()}};
    return {{"form", to_string(l.form())}, {"n", l.n()}, {"grid", from_points(l.grid())}};
}

/// Each hypothesis is an array over outcomes of grid indices or of explicit
/// simplex points.
inline std::vector<Hypothesis> hypotheses_from_json(const LossSpec& loss, const json& j) {
    const json& arr = j.is_object() ? field(j, "hypotheses", "hypotheses") : j;
    if (!arr.is_array()) throw SchemaError("hypotheses: expected an array");
    std::vector<Hypothesis> H;
    for (std::size_t k = 0; k < arr.size(); ++k) {
        const json& h = arr[k];
        if (!h.is_array()) throw SchemaError("hypotheses[" + std::to_string(k) + "]: expected an array");
        if (!h.empty() && h[0].is_number_integer()) {
            H.push_back(Hypothesis::from_grid(loss, h.get<std::vector<std::size_t>>()));
        } else {
            Hypothesis hyp;
            hyp.predictions = to_points(h, "hypotheses[" + std::to_string(k) + "]");
            for (const auto& p : hyp.predictions) check_simplex_point(p, loss.n());
            H.push_back(std::move(hyp));
        }
    }
    return H;
}

inline json hypotheses_to_json(const std::vector<Hypothesis>& H) {
    json a = json::array();
    for (const auto& h : H) a.push_back(from_points(h.predictions));
    return a;
}

inline json function_class_to_json(const FunctionClass& F) {
    json members = json::array();
    for (const auto& f : F.members()) members.push_back(from_mat(f));
    return {{"n", F.n()}, {"m", F.m()}, {"members", members}};
}

inline FunctionClass function_class_from_json(const json& j) {
    const auto n = field(j, "n", "class").get<Eigen::Index>();
    const auto m = field(j, "m", "class").get<Eigen::Index>();
    const json& members = field(j, "members", "class");
    std::vector<Mat> out;
    for (std::size_t k = 0; k < members.size(); ++k)
        out.push_back(to_mat(members[k], "class.members[" + std::to_string(k) + "]"));
    return FunctionClass(n, m, std::move(out));
}

// ---- results ---------------------------------------------------------------

inline json info_result_to_json(const InfoResult& r, bool with_witness) {
    json out;
    out["value"] = number(r.value);
    if (with_witness && r.witness) {
        json w = json::array();
        for (Eigen::Index i = 0; i < r.witness->rows(); ++i) {
            json row = json::array();
            for (Eigen::Index x = 0; x < r.witness->cols(); ++x)
                row.push_back(r.witness_defined[static_cast<std::size_t>(x)] ? number((*r.witness)(i, x)) : json(nullptr));
            w.push_back(row);
        }
        out["witness"] = w;
    } else {
        out["witness"] = nullptr;
    }
    out["per_outcome"] = from_vec(r.per_outcome);
    return out;
}

inline json set_report_to_json(const SetReport& r) {
    return {{"support_at_ones", number(r.support_at_ones)},
            {"zero_on_boundary", r.zero_on_boundary},
            {"recession_ok", r.recession_ok},
            {"recession_check", "sampled"},
            {"bounded_information", r.bounded_information},
            {"notes", r.notes}};
}

/// Parses a document, reporting the byte offset, line and column of any
/// syntax error.
inline json parse_text(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(origin + ": " + e.what() + " (byte offset " + std::to_string(e.byte) + ")");
    }
}

inline json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str(), path);
}

/// A literal document if the argument starts with '[' or '{', otherwise a
/// file path.
inline json load_arg(const std::string& arg) {
    const auto pos = arg.find_first_not_of(" \t\n");
    if (pos != std::string::npos && (arg[pos] == '[' || arg[pos] == '{')) return parse_text(arg, "inline JSON");
    return load_file(arg);
}

}  // namespace cvxinfo::io

#endif  // CVXINFO_JSON_IO_HPP
