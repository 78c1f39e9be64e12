#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cone.hpp"
#include "errors.hpp"
#include "extension.hpp"
#include "obstruction.hpp"
#include "poset.hpp"
#include "rtree.hpp"

namespace ordlip::io {

using json = nlohmann::json;

/// Schema violation in an input document. `where` is a JSON pointer into the
/// document, or "line L, column C" for syntax errors.
class SchemaError : public StructuralError {
public:
    SchemaError(std::string where, const std::string& what)
        : StructuralError(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError(path.string(), "cannot open file");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// 64-bit FNV-1a of the bytes, as 16 hex digits.
inline std::string digest(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline json parse_text(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1;
        std::size_t col = 1;
        for (std::size_t i = 0; i < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw SchemaError(source + ": line " + std::to_string(line) + ", column " + std::to_string(col),
                          "syntax error");
    }
}

inline json load_json(const std::filesystem::path& path) { return parse_text(read_file(path), path.string()); }

// ---------------------------------------------------------------------------
// Field readers.

namespace detail {

inline const json& field(const json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path.empty() ? "/" : path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(path + "/" + key, "missing field");
    return *it;
}

inline double number(const json& j, const std::string& path) {
    if (!j.is_number()) throw SchemaError(path, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw SchemaError(path, "expected a finite number");
    return v;
}

inline std::size_t index(const json& j, const std::string& path) {
    if (!j.is_number_integer() || j.get<long long>() < 0) throw SchemaError(path, "expected a nonnegative integer");
    return j.get<std::size_t>();
}

inline Vector vector(const json& j, const std::string& path) {
    if (j.is_number()) return Vector::Constant(1, number(j, path));
    if (!j.is_array()) throw SchemaError(path, "expected an array of numbers");
    Vector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = number(j[i], path + "/" + std::to_string(i));
    return v;
}

inline std::vector<Vector> vectors(const json& j, const std::string& path) {
    if (!j.is_array()) throw SchemaError(path, "expected an array of vectors");
    std::vector<Vector> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(vector(j[i], path + "/" + std::to_string(i)));
    return out;
}

inline std::string id_string(const json& j, const std::string& path) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw SchemaError(path, "expected a string or integer id");
}

inline json vec_json(const Vector& v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
    return a;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Posets.

/// Structural parse; axiom checks are left to `validate`.
inline FiniteMetricPoset poset_structure_from_json(const json& j) {
    const json& labels_j = detail::field(j, "labels", "");
    const json& dist_j = detail::field(j, "dist", "");
    if (!labels_j.is_array()) throw SchemaError("/labels", "expected an array of strings");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < labels_j.size(); ++i) labels.push_back(detail::id_string(labels_j[i], "/labels/" + std::to_string(i)));
    const std::size_t n = labels.size();
    if (!dist_j.is_array() || dist_j.size() != n) throw SchemaError("/dist", "expected " + std::to_string(n) + " rows");
    Matrix dist(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const std::string row = "/dist/" + std::to_string(i);
        if (!dist_j[i].is_array() || dist_j[i].size() != n) throw SchemaError(row, "row must have " + std::to_string(n) + " entries");
        for (std::size_t k = 0; k < n; ++k) {
            dist(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = detail::number(dist_j[i][k], row + "/" + std::to_string(k));
        }
    }
    std::vector<IndexPair> order;
    if (auto it = j.find("order"); it != j.end()) {
        if (!it->is_array()) throw SchemaError("/order", "expected an array of [i, j] pairs");
        for (std::size_t k = 0; k < it->size(); ++k) {
            const std::string path = "/order/" + std::to_string(k);
            const json& pr = (*it)[k];
            if (!pr.is_array() || pr.size() != 2) throw SchemaError(path, "expected an [i, j] pair");
            const std::size_t a = detail::index(pr[0], path + "/0");
            const std::size_t b = detail::index(pr[1], path + "/1");
            if (a >= n || b >= n) throw SchemaError(path, "index out of range");
            order.emplace_back(a, b);
        }
    }
    return {std::move(labels), std::move(dist), std::move(order)};
}

inline std::string violation_path(const Violation& v) {
    if (v.axiom == "symmetry" || v.axiom == "identity of indiscernibles" || v.axiom == "nonnegativity") {
        return "/dist/" + std::to_string(v.indices[0]) + "/" + std::to_string(v.indices[1]);
    }
    if (v.axiom == "zero diagonal") return "/dist/" + std::to_string(v.indices[0]) + "/" + std::to_string(v.indices[0]);
    if (v.axiom == "triangle inequality") return "/dist/" + std::to_string(v.indices[0]) + "/" + std::to_string(v.indices[1]);
    return "/order";
}

/// Parse and validate; the first violated axiom becomes a SchemaError naming the entry.
inline FiniteMetricPoset poset_from_json(const json& j, double tol = kDefaultTol) {
    FiniteMetricPoset p = poset_structure_from_json(j);
    const auto report = validate(p, tol);
    if (!report.ok()) {
        const auto& v = report.violations.front();
        std::ostringstream msg;
        msg << v.axiom << " violated at (";
        for (std::size_t k = 0; k < v.indices.size(); ++k) msg << (k ? ", " : "") << v.indices[k];
        msg << "): " << v.detail;
        throw SchemaError(violation_path(v), msg.str());
    }
    return p;
}

inline json poset_to_json(const FiniteMetricPoset& p) {
    json j;
    j["labels"] = p.labels();
    json dist = json::array();
    for (std::size_t i = 0; i < p.size(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < p.size(); ++k) row.push_back(p.d(i, k));
        dist.push_back(row);
    }
    j["dist"] = dist;
    json order = json::array();
    for (const auto& [a, b] : p.order_pairs()) order.push_back({a, b});
    j["order"] = order;
    return j;
}

// ---------------------------------------------------------------------------
// Cones.

inline ConeOrder cone_from_json(const json& j) {
    const std::size_t dim_u = detail::index(detail::field(j, "dim", ""), "/dim");
    if (dim_u == 0) throw SchemaError("/dim", "dimension must be positive");
    const int dim = static_cast<int>(dim_u);
    NormTag tag = NormTag::L2;
    if (auto it = j.find("norm"); it != j.end()) {
        if (!it->is_string()) throw SchemaError("/norm", "expected \"l1\", \"l2\" or \"linf\"");
        try {
            tag = norm_from_string(it->get<std::string>());
        } catch (const StructuralError& e) {
            throw SchemaError("/norm", e.what());
        }
    }
    const auto gen_it = j.find("generators");
    const auto half_it = j.find("halfspaces");
    if (gen_it == j.end() && half_it == j.end()) throw SchemaError("/", "need \"generators\" or \"halfspaces\"");
    try {
        if (gen_it != j.end() && half_it != j.end()) {
            return ConeOrder::from_both(dim, detail::vectors(*gen_it, "/generators"), detail::vectors(*half_it, "/halfspaces"), tag);
        }
        if (gen_it != j.end()) return ConeOrder::from_generators(dim, detail::vectors(*gen_it, "/generators"), tag);
        return ConeOrder::from_halfspaces(dim, detail::vectors(*half_it, "/halfspaces"), tag);
    } catch (const SchemaError&) {
        throw;
    } catch (const Error& e) {
        throw SchemaError(gen_it != j.end() ? "/generators" : "/halfspaces", e.what());
    }
}

inline json cone_to_json(const ConeOrder& c) {
    json j;
    j["dim"] = c.dim();
    if (c.generators()) {
        json g = json::array();
        for (const auto& v : *c.generators()) g.push_back(detail::vec_json(v));
        j["generators"] = g;
    }
    if (c.halfspaces()) {
        json h = json::array();
        for (const auto& v : *c.halfspaces()) h.push_back(detail::vec_json(v));
        j["halfspaces"] = h;
    }
    j["norm"] = to_string(c.norm_tag());
    return j;
}

// ---------------------------------------------------------------------------
// Trees.

inline RTree tree_from_json(const json& j) {
    const json& vj = detail::field(j, "vertices", "");
    if (!vj.is_array()) throw SchemaError("/vertices", "expected an array of ids");
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < vj.size(); ++i) ids.push_back(detail::id_string(vj[i], "/vertices/" + std::to_string(i)));
    auto lookup = [&](const json& id, const std::string& path) {
        const std::string s = detail::id_string(id, path);
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (ids[i] == s) return i;
        }
        throw SchemaError(path, "unknown vertex '" + s + "'");
    };
    const json& ej = detail::field(j, "edges", "");
    if (!ej.is_array()) throw SchemaError("/edges", "expected an array of [u, v, length] triples");
    std::vector<RTree::Edge> edges;
    for (std::size_t k = 0; k < ej.size(); ++k) {
        const std::string path = "/edges/" + std::to_string(k);
        if (!ej[k].is_array() || ej[k].size() != 3) throw SchemaError(path, "expected [u, v, length]");
        edges.push_back({lookup(ej[k][0], path + "/0"), lookup(ej[k][1], path + "/1"), detail::number(ej[k][2], path + "/2")});
    }
    const std::size_t root = lookup(detail::field(j, "root", ""), "/root");
    const std::size_t end = lookup(detail::field(j, "end", ""), "/end");
    try {
        return RTree(std::move(ids), std::move(edges), root, end);
    } catch (const Error& e) {
        std::string msg = e.what();
        if (msg.rfind("RTree: ", 0) == 0) msg = msg.substr(7);
        throw SchemaError("/edges", msg);
    }
}

inline json tree_to_json(const RTree& t) {
    json j;
    j["vertices"] = t.vertex_ids();
    json edges = json::array();
    for (const auto& e : t.edges()) edges.push_back({t.vertex_ids()[e.u], t.vertex_ids()[e.v], e.length});
    j["edges"] = edges;
    j["root"] = t.vertex_ids()[t.root()];
    j["end"] = t.vertex_ids()[t.end()];
    return j;
}

/// {"vertex": id} or {"edge": k, "offset": o} in the tree file's addressing.
inline json tree_point_to_json(const RTree& t, const TreePoint& p) {
    json j;
    const std::size_t v = p.below;
    if (v == t.root() || (v != t.end() && p.s == t.depth(t.vertex(v)) - t.depth(t.vertex(t.parent(v))))) {
        j["vertex"] = t.vertex_ids()[v];
        return j;
    }
    const std::size_t par = t.parent(v);
    for (std::size_t k = 0; k < t.edges().size(); ++k) {
        const auto& e = t.edges()[k];
        if ((e.u == v && e.v == par) || (e.u == par && e.v == v)) {
            j["edge"] = k;
            j["offset"] = (v == t.end() || e.u == par) ? p.s : e.length - p.s;
            return j;
        }
    }
    throw Error("tree point does not lie on an edge");
}

inline TreePoint tree_point_from_json(const RTree& t, const json& j, const std::string& path = "") {
    if (auto it = j.find("vertex"); it != j.end()) {
        const std::string id = detail::id_string(*it, path + "/vertex");
        for (std::size_t i = 0; i < t.vertex_ids().size(); ++i) {
            if (t.vertex_ids()[i] == id) return t.vertex(i);
        }
        throw SchemaError(path + "/vertex", "unknown vertex '" + id + "'");
    }
    const std::size_t e = detail::index(detail::field(j, "edge", path), path + "/edge");
    const double off = detail::number(detail::field(j, "offset", path), path + "/offset");
    try {
        return t.on_edge(e, off);
    } catch (const Error& err) {
        throw SchemaError(path, err.what());
    }
}

// ---------------------------------------------------------------------------
// Extension problems.

namespace detail {

inline json resolve(const json& j, const std::filesystem::path& base, const std::string& path) {
    if (j.is_string()) {
        const std::filesystem::path p = base / j.get<std::string>();
        return load_json(p);
    }
    if (j.is_object()) return j;
    throw SchemaError(path, "expected a file name or an inline object");
}

inline ConeOrder target_from_json(const json& j, const std::filesystem::path& base, const std::string& path) {
    const std::string kind = detail::field(j, "kind", path).get<std::string>();
    if (kind == "scalar") return scalar_target();
    if (kind != "cone") throw SchemaError(path + "/kind", "expected \"scalar\" or \"cone\"");
    ConeOrder cone = cone_from_json(resolve(detail::field(j, "cone", path), base, path + "/cone"));
    if (auto it = j.find("norm"); it != j.end()) {
        const NormTag tag = norm_from_string(it->get<std::string>());
        json cj = cone_to_json(cone);
        cj["norm"] = to_string(tag);
        cone = cone_from_json(cj);
    }
    return cone;
}

} // namespace detail

inline ExtensionProblem problem_from_json(const json& j, const std::filesystem::path& base = ".") {
    const FiniteMetricPoset X = poset_from_json(detail::resolve(detail::field(j, "poset", ""), base, "/poset"));
    const json& sj = detail::field(j, "subset", "");
    if (!sj.is_array()) throw SchemaError("/subset", "expected an array of indices");
    std::vector<std::size_t> subset;
    for (std::size_t k = 0; k < sj.size(); ++k) subset.push_back(detail::index(sj[k], "/subset/" + std::to_string(k)));
    const ConeOrder target = detail::target_from_json(detail::field(j, "target", ""), base, "/target");
    std::vector<Vector> values = detail::vectors(detail::field(j, "values", ""), "/values");
    try {
        return ExtensionProblem(X, std::move(subset), target, std::move(values));
    } catch (const Error& e) {
        throw SchemaError("/values", e.what());
    }
}

struct LineProblem {
    std::vector<double> support;
    std::vector<Vector> values;
    ConeOrder target = scalar_target();
};

inline LineProblem line_problem_from_json(const json& j, const std::filesystem::path& base = ".") {
    LineProblem lp;
    const json& sj = detail::field(j, "support", "");
    if (!sj.is_array()) throw SchemaError("/support", "expected an array of numbers");
    for (std::size_t k = 0; k < sj.size(); ++k) lp.support.push_back(detail::number(sj[k], "/support/" + std::to_string(k)));
    lp.values = detail::vectors(detail::field(j, "values", ""), "/values");
    lp.target = detail::target_from_json(detail::field(j, "target", ""), base, "/target");
    return lp;
}

// ---------------------------------------------------------------------------
// Reports.

/// Rounds every float in the document to `digits` significant digits.
inline void round_floats(json& j, int digits = 9) {
    if (j.is_number_float()) {
        const double v = j.get<double>();
        if (std::isfinite(v)) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.*g", digits, v);
            j = std::stod(buf) + 0.0;
        }
        return;
    }
    if (j.is_structured()) {
        for (auto& child : j) round_floats(child, digits);
    }
}

inline json number_or_string(double v) {
    if (std::isfinite(v)) return v;
    return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
}

inline json witness_to_json(const RadialityWitness& w, const FiniteMetricPoset& p) {
    return json{{"kind", to_string(w.kind)},
                {"x", w.x},
                {"y", w.y},
                {"z", w.z},
                {"labels", {p.labels()[w.x], p.labels()[w.y], p.labels()[w.z]}},
                {"lhs", w.lhs},
                {"rhs", w.rhs}};
}

inline json validation_to_json(const ValidationReport& r) {
    json v = json::array();
    for (const auto& x : r.violations) v.push_back({{"axiom", x.axiom}, {"indices", x.indices}, {"detail", x.detail}});
    return json{{"valid", r.ok()}, {"violations", v}};
}

inline json residuals_to_json(const Residuals& r) {
    return json{{"lipschitz", r.lipschitz}, {"order", r.order}, {"anchor", r.anchor}};
}

inline json result_to_json(const ExtensionResult& r, const FiniteMetricPoset& X) {
    json values = json::object();
    for (std::size_t i = 0; i < r.values.size(); ++i) values[X.labels()[i]] = detail::vec_json(r.values[i]);
    json j{{"status", to_string(r.status)},
           {"K", r.K},
           {"residuals", residuals_to_json(r.residuals)},
           {"iterations", r.iterations},
           {"values", values}};
    if (r.certificate) {
        json cyc = json::array();
        for (std::size_t v : r.certificate->cycle) cyc.push_back(v < X.size() ? json(X.labels()[v]) : json("zero"));
        j["certificate"] = {{"functional", detail::vec_json(r.certificate->functional)},
                            {"cycle", cyc},
                            {"cycle_weight", r.certificate->cycle_weight}};
    }
    return j;
}

inline json estimate_to_json(const ModulusEstimate& e) {
    json trace = json::array();
    for (const auto& p : e.trace) trace.push_back({{"K", p.K}, {"status", to_string(p.status)}});
    return json{{"value", number_or_string(e.value)},
                {"lo", e.lo},
                {"hi", number_or_string(e.hi)},
                {"inconclusive", e.inconclusive},
                {"trace", trace}};
}

template <RaySpace S, class PointToJson>
json certificate_to_json(const ObstructionCertificate<S>& c, const FiniteMetricPoset& p, PointToJson&& point) {
    json chain = json::array();
    for (const auto& l : c.chain) {
        chain.push_back({{"statement", l.statement}, {"left", l.left}, {"relation", l.relation}, {"right", l.right}, {"holds", l.holds}});
    }
    const auto& tm = c.test_map;
    return json{{"witness", witness_to_json(c.witness, p)},
                {"target", c.target},
                {"test_map",
                 {{p.labels()[tm.top], {{"ray_parameter", tm.top_parameter}, {"point", point(tm.top_value)}}},
                  {p.labels()[tm.base], {{"ray_parameter", 0.0}, {"point", point(tm.base_value)}}}}},
                {"bound", c.bound},
                {"lp_crosscheck", c.lp_crosscheck},
                {"chain", chain}};
}

inline json vector_to_json(const Vector& v) { return detail::vec_json(v); }

} // namespace ordlip::io
