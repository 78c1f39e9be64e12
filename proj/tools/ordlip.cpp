// ordlip: command-line front end for the order-preserving Lipschitz toolkit.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ordlip/extension.hpp"
#include "ordlip/hilbert.hpp"
#include "ordlip/hyperbolic.hpp"
#include "ordlip/io.hpp"
#include "ordlip/obstruction.hpp"
#include "ordlip/rtree.hpp"

using namespace ordlip;
using io::json;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInput = 2, kNoConvergence = 3 };

struct Options {
    double tol = 1e-9;
    std::uint64_t seed = 0;
    std::string format = "human";
    long max_iter = 100000;
    int samples = 20;
    bool timing = false;
};

struct Report {
    std::string command;
    std::map<std::string, std::string> inputs;
    json outcome;
    std::string human;
    int code = kOk;
};

json load_input(Report& r, const std::string& path) {
    const std::string text = io::read_file(path);
    r.inputs[path] = io::digest(text);
    return io::parse_text(text, path);
}

std::string fmt(double v) {
    if (!std::isfinite(v)) return v > 0 ? "inf" : "-inf";
    std::ostringstream s;
    s.precision(9);
    s << (v == 0.0 ? 0.0 : v);
    return s.str();
}

std::string fmt(const Vector& v) {
    std::string s = "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? ", " : "") + fmt(v(i));
    return s + ")";
}

std::string witness_line(const RadialityWitness& w, const FiniteMetricPoset& p) {
    return std::string(to_string(w.kind)) + " witness x=" + p.labels()[w.x] + " y=" + p.labels()[w.y] + " z=" +
           p.labels()[w.z] + " lhs=" + fmt(w.lhs) + " rhs=" + fmt(w.rhs);
}

FeasibilityOptions feasibility_options(const Options& o) {
    FeasibilityOptions f;
    f.max_iter = o.max_iter;
    f.seed = o.seed;
    return f;
}

// ---------------------------------------------------------------------------

void run_validate(Report& r, const Options& o, const std::string& path) {
    const auto p = io::poset_structure_from_json(load_input(r, path));
    const auto v = validate(p, o.tol);
    r.outcome = io::validation_to_json(v);
    r.outcome["points"] = p.size();
    if (v.ok()) {
        r.human = "valid finite metric poset with " + std::to_string(p.size()) + " points\n";
        return;
    }
    r.code = kNegative;
    for (const auto& x : v.violations) {
        r.human += x.axiom + " violated at (";
        for (std::size_t k = 0; k < x.indices.size(); ++k) r.human += (k ? ", " : "") + std::to_string(x.indices[k]);
        r.human += "): " + x.detail + "\n";
    }
}

void run_radial(Report& r, const Options& o, const std::string& path) {
    const auto p = io::poset_from_json(load_input(r, path), o.tol);
    const auto rep = check_radiality(p, o.tol);
    r.outcome = {{"radial", rep.radial()}, {"radially_convex", rep.radially_convex}};
    if (rep.radial()) {
        r.human = std::string("radial") + (rep.radially_convex ? " (radially convex)" : "") + "\n";
        r.outcome["witness"] = nullptr;
        return;
    }
    r.code = kNegative;
    r.outcome["witness"] = io::witness_to_json(*rep.witness, p);
    r.human = "not radial: " + witness_line(*rep.witness, p) + "\n";
}

void describe_result(Report& r, const ExtensionResult& res, const FiniteMetricPoset& X) {
    r.outcome = io::result_to_json(res, X);
    std::ostringstream h;
    h << "status: " << to_string(res.status) << "\n";
    if (!res.values.empty()) {
        h << "K: " << fmt(res.K) << "\n";
        for (std::size_t i = 0; i < res.values.size(); ++i) h << "  " << X.labels()[i] << " -> " << fmt(res.values[i]) << "\n";
        h << "max residual: " << fmt(res.residuals.max()) << "\n";
    }
    if (res.certificate) {
        h << "certificate: functional " << fmt(res.certificate->functional) << ", cycle weight "
          << fmt(res.certificate->cycle_weight) << "\n";
    }
    r.human = h.str();
    r.code = res.status == Status::Feasible ? kOk : (res.status == Status::Infeasible ? kNegative : kNoConvergence);
}

void run_extend(Report& r, const Options& o, const std::string& path, const std::string& mode, double K,
                const std::vector<double>& queries) {
    const json doc = load_input(r, path);
    const auto base = std::filesystem::path(path).parent_path();
    if (mode == "line" || mode == "thm2") {
        const auto lp = io::line_problem_from_json(doc, base);
        const LineExtension F(lp.support, lp.values, lp.target, o.tol);
        std::vector<double> q = queries;
        if (q.empty()) q = F.support();
        json table = json::array();
        std::ostringstream h;
        for (double t : q) {
            table.push_back({{"t", t}, {"value", io::vector_to_json(F(t))}});
            h << "  F(" << fmt(t) << ") = " << fmt(F(t)) << "\n";
        }
        r.outcome = {{"mode", "line"}, {"values", table}};
        r.human = h.str();
        return;
    }
    const auto P = io::problem_from_json(doc, base);
    if (mode == "scalar") {
        describe_result(r, scalar_extend(P), P.domain());
    } else if (mode == "feasible") {
        describe_result(r, feasibility_at_K(P, K, feasibility_options(o)), P.domain());
    } else if (mode == "componentwise") {
        try {
            describe_result(r, componentwise_extend(P), P.domain());
        } catch (const RadialityRequired& e) {
            r.code = kNegative;
            r.outcome = {{"status", "not radial"}, {"witness", io::witness_to_json(e.witness(), P.domain())}};
            r.human = "domain is not radial: " + witness_line(e.witness(), P.domain()) + "\n";
            return;
        }
    } else {
        throw CLI::ValidationError("--mode", "unknown mode '" + mode + "'");
    }
    r.outcome["mode"] = mode;
    if (mode == "feasible") r.outcome["K_requested"] = K;
}

Vector to_vector(const std::vector<double>& v) { return Eigen::Map<const Vector>(v.data(), static_cast<Eigen::Index>(v.size())); }

template <RaySpace S, class ToJson>
void busemann_report(Report& r, const S& space, const typename S::point_type& a, const std::vector<double>& limit,
                     ToJson&& to_json) {
    const auto closed = busemann_closed(space, a);
    r.outcome = {{"space", space.name()}, {"point", to_json(a)}, {"value", closed.value}, {"horizon", "inf"}};
    r.human = "B(a) = " + fmt(closed.value) + "\n";
    if (!limit.empty()) {
        const auto lim = busemann_limit(space, a, limit);
        json partials = json::array();
        for (std::size_t i = 0; i < lim.horizons.size(); ++i) partials.push_back({{"T", lim.horizons[i]}, {"value", lim.partials[i]}});
        r.outcome["limit"] = {{"value", lim.value}, {"horizon", lim.horizon}, {"partials", partials}};
        r.human += "limit at T=" + fmt(lim.horizon) + ": " + fmt(lim.value) + "\n";
    }
}

struct SpaceArgs {
    std::string space = "hilbert";
    std::vector<double> e;
    std::vector<double> point;
    std::string cone;
    std::string tree;
    std::string vertex;
    long edge = -1;
    double offset = 0.0;
    int dim = 2;
};

HilbertRay make_hilbert(Report& r, const SpaceArgs& a, const Options& o, int fallback_dim) {
    if (!a.cone.empty()) {
        const auto cone = io::cone_from_json(load_input(r, a.cone));
        if (a.e.empty()) return HilbertRay::from_cone(cone, o.seed);
        return HilbertRay(cone, to_vector(a.e));
    }
    if (a.e.empty()) return HilbertRay::from_cone(ConeOrder::orthant(fallback_dim), o.seed);
    const Vector e = to_vector(a.e);
    return HilbertRay(ConeOrder::ray(e), e);
}

RTree make_tree(Report& r, const SpaceArgs& a) {
    if (a.tree.empty()) return RTree({"root", "end"}, {{0, 1, 1.0}}, 0, 1);
    return io::tree_from_json(load_input(r, a.tree));
}

void run_busemann(Report& r, const Options& o, const SpaceArgs& a, const std::vector<double>& limit) {
    if (a.space == "hilbert") {
        if (a.point.empty()) throw CLI::ValidationError("--point", "required for the hilbert space");
        const auto ray = make_hilbert(r, a, o, static_cast<int>(a.point.size()));
        busemann_report(r, ray, to_vector(a.point), limit, io::vector_to_json);
    } else if (a.space == "hyperbolic") {
        if (a.point.size() < 2) throw CLI::ValidationError("--point", "needs at least two coordinates, height last");
        busemann_report(r, HalfSpaceHn(static_cast<int>(a.point.size()), o.tol), to_vector(a.point), limit, io::vector_to_json);
    } else if (a.space == "rtree") {
        if (a.tree.empty()) throw CLI::ValidationError("--tree", "required for the rtree space");
        const RTree T = make_tree(r, a);
        json addr;
        if (!a.vertex.empty()) addr["vertex"] = a.vertex;
        else if (a.edge >= 0) addr = {{"edge", a.edge}, {"offset", a.offset}};
        else throw CLI::ValidationError("--vertex", "give --vertex or --edge/--offset");
        const TreePoint p = io::tree_point_from_json(T, addr);
        busemann_report(r, T, p, limit, [&](const TreePoint& q) { return io::tree_point_to_json(T, q); });
        const Hitting h = T.hitting(p);
        r.outcome["hitting_time"] = h.t;
        r.outcome["merge_point"] = io::tree_point_to_json(T, h.merge);
    } else {
        throw CLI::ValidationError("--space", "expected hilbert, hyperbolic or rtree");
    }
}

template <RaySpace S, class ToJson>
void certify_with(Report& r, const FiniteMetricPoset& p, const RadialityWitness& w, const S& target, double tol, ToJson&& to_json) {
    const auto cert = certify_obstruction(p, w, target, tol);
    r.outcome = io::certificate_to_json(cert, p, to_json);
    std::ostringstream h;
    h << "obstruction certificate on " << cert.target << " target\n";
    h << "  " << witness_line(w, p) << "\n";
    for (const auto& l : cert.chain) h << "  " << l.statement << "   [" << fmt(l.left) << " " << l.relation << " " << fmt(l.right) << "]\n";
    h << "bound: K >= " << fmt(cert.bound) << " (scalar cross-check " << fmt(cert.lp_crosscheck) << ")\n";
    r.human = h.str();
    r.code = kNegative;
}

void run_certify(Report& r, const Options& o, const std::string& path, const SpaceArgs& a) {
    const auto p = io::poset_from_json(load_input(r, path), o.tol);
    const auto ws = all_witnesses(p, o.tol);
    if (ws.empty()) {
        r.outcome = {{"radial", true}, {"certificate", nullptr}};
        r.human = "radial: no obstruction to certify\n";
        return;
    }
    // The witness with the largest ratio; the first one among ties.
    RadialityWitness best = ws.front();
    for (const auto& w : ws)
        if (w.rhs / w.lhs > best.rhs / best.lhs) best = w;
    if (a.space == "hilbert") {
        certify_with(r, p, best, make_hilbert(r, a, o, a.dim), o.tol, io::vector_to_json);
    } else if (a.space == "hyperbolic") {
        certify_with(r, p, best, HalfSpaceHn(a.dim, o.tol), o.tol, io::vector_to_json);
    } else if (a.space == "rtree") {
        const RTree T = make_tree(r, a);
        certify_with(r, p, best, T, o.tol, [&](const TreePoint& q) { return io::tree_point_to_json(T, q); });
    } else {
        throw CLI::ValidationError("--target", "expected hilbert, hyperbolic or rtree");
    }
}

// Random monotone 1-Lipschitz maps on the same subset: averages of
// single-anchor scalar extensions, pushed along a unit vector of the cone.
std::vector<Vector> sample_values(const ExtensionProblem& P, std::mt19937_64& rng) {
    const auto& X = P.domain();
    std::uniform_int_distribution<std::size_t> pick(0, X.size() - 1);
    std::uniform_real_distribution<double> val(-2.0, 2.0);
    std::vector<double> phi(X.size(), 0.0);
    for (int k = 0; k < 2; ++k) {
        const ExtensionProblem seed(X, {pick(rng)}, scalar_target(), {Vector::Constant(1, val(rng))});
        const auto ext = feasibility_at_K(seed, 1.0);
        for (std::size_t i = 0; i < X.size(); ++i) phi[i] += 0.5 * ext.values[i](0);
    }
    Vector u = Vector::Ones(1);
    if (!P.scalar()) {
        const auto& rays = P.target().rays();
        if (P.target().is_trivial() || !rays || rays->empty()) {
            std::normal_distribution<double> g;
            u = Vector(P.target().dim());
            for (Eigen::Index i = 0; i < u.size(); ++i) u(i) = g(rng);
        } else {
            std::uniform_int_distribution<std::size_t> which(0, rays->size() - 1);
            u = (*rays)[which(rng)];
        }
        u /= norm(u, P.target().norm_tag());
    }
    std::vector<Vector> out;
    for (std::size_t i : P.subset()) out.push_back(phi[i] * u);
    return out;
}

void run_estimate(Report& r, const Options& o, const std::string& path, double est_tol) {
    const json doc = load_input(r, path);
    const auto P = io::problem_from_json(doc, std::filesystem::path(path).parent_path());
    EstimateOptions opt;
    opt.tol = est_tol;
    opt.feasibility = feasibility_options(o);
    const auto est = estimate_e(P, opt);
    r.outcome = {{"given_f", io::estimate_to_json(est)}};
    std::ostringstream h;
    h << "extension modulus for the given f: " << fmt(est.value) << " in [" << fmt(est.lo) << ", " << fmt(est.hi) << "]"
      << (est.inconclusive ? " (inconclusive)" : "") << "\n";

    std::mt19937_64 rng(o.seed);
    double sup = est.value;
    bool inconclusive = est.inconclusive;
    json samples = json::array();
    for (int s = 0; s < o.samples; ++s) {
        const ExtensionProblem Q(P.domain(), P.subset(), P.target(), sample_values(P, rng), o.tol);
        const auto e = estimate_e(Q, opt);
        samples.push_back(e.value);
        sup = std::max(sup, e.value);
        inconclusive = inconclusive || e.inconclusive;
    }
    r.outcome["sampled"] = {{"samples", o.samples}, {"values", samples}, {"lower_bound", io::number_or_string(sup)}};
    r.outcome["inconclusive"] = inconclusive;
    h << "lower bound over " << o.samples << " sampled maps (and the given one): " << fmt(sup) << "\n";
    r.human = h.str();
    if (inconclusive) r.code = kNoConvergence;
}

void run_gen_grid(Report& r, const Options&, int dim, int side, double spacing, const std::string& cone_path, const std::string& norm) {
    ConeOrder cone = cone_path.empty() ? ConeOrder::orthant(dim, norm_from_string(norm)) : io::cone_from_json(load_input(r, cone_path));
    const auto p = grid_instance(dim, side, spacing, cone);
    r.outcome = io::poset_to_json(p);
    r.human = r.outcome.dump(2) + "\n";
}

void run_gen_tree(Report& r, const Options& o, int vertices, double max_len) {
    if (vertices < 1) throw CLI::ValidationError("--vertices", "must be positive");
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> len(0.25, max_len);
    std::vector<std::string> ids;
    std::vector<RTree::Edge> edges;
    for (int i = 0; i < vertices; ++i) ids.push_back("v" + std::to_string(i));
    for (int i = 1; i < vertices; ++i) {
        std::uniform_int_distribution<int> par(0, i - 1);
        edges.push_back({std::size_t(par(rng)), std::size_t(i), len(rng)});
    }
    std::uniform_int_distribution<int> at(0, vertices - 1);
    ids.push_back("end");
    edges.push_back({std::size_t(at(rng)), std::size_t(vertices), 1.0});
    const RTree T(ids, edges, 0, std::size_t(vertices));
    r.outcome = io::tree_to_json(T);
    r.human = r.outcome.dump(2) + "\n";
}

int emit(const Report& r, const Options& o, double ms) {
    if (o.format == "machine") {
        json doc;
        doc["command"] = r.command;
        doc["inputs"] = r.inputs;
        doc["seed"] = o.seed;
        doc["exit_code"] = r.code;
        doc["outcome"] = r.outcome;
        if (o.timing) doc["timing_ms"] = ms;
        io::round_floats(doc);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << r.human;
        if (o.timing) std::cout << "time: " << fmt(ms) << " ms\n";
    }
    return r.code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Order-preserving Lipschitz extensions: radiality checks, extensions, Busemann functions and obstruction certificates"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    app.add_option("--tol", o.tol, "Numerical tolerance")->capture_default_str();
    app.add_option("--seed", o.seed, "Random seed")->capture_default_str();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"human", "machine"}))->capture_default_str();
    app.add_option("--max-iter", o.max_iter, "Iteration cap for iterative solvers")->capture_default_str();
    app.add_option("--samples", o.samples, "Number of sampled maps for estimate-e")->capture_default_str();
    app.add_flag("--timing", o.timing, "Report wall-clock time");

    std::string file;
    auto* validate_cmd = app.add_subcommand("validate", "Check the axioms of a poset file");
    validate_cmd->add_option("poset", file, "Poset file")->required();

    auto* radial_cmd = app.add_subcommand("radial", "Check radiality and print a witness");
    radial_cmd->add_option("poset", file, "Poset file")->required();

    std::string mode = "scalar";
    double K = 1.0;
    std::vector<double> queries;
    auto* extend_cmd = app.add_subcommand("extend", "Extend a map from a subset");
    extend_cmd->add_option("problem", file, "Problem file")->required();
    extend_cmd->add_option("--mode", mode, "line (alias thm2), scalar, feasible or componentwise")
        ->check(CLI::IsMember({"line", "thm2", "scalar", "feasible", "componentwise"}))
        ->capture_default_str();
    extend_cmd->add_option("--K", K, "Lipschitz constant for --mode feasible")->capture_default_str();
    extend_cmd->add_option("--query", queries, "Query points for --mode line")->delimiter(',');

    SpaceArgs sa;
    std::vector<double> limit;
    bool limit_default = false;
    auto* busemann_cmd = app.add_subcommand("busemann", "Evaluate a monotone Busemann function");
    busemann_cmd->add_option("--space", sa.space, "hilbert, hyperbolic or rtree")->capture_default_str();
    busemann_cmd->add_option("--e", sa.e, "Ray direction (hilbert)")->delimiter(',');
    busemann_cmd->add_option("--cone", sa.cone, "Cone file ordering the hilbert space");
    busemann_cmd->add_option("--point", sa.point, "Point coordinates")->delimiter(',');
    busemann_cmd->add_option("--tree", sa.tree, "Tree file (rtree)");
    busemann_cmd->add_option("--vertex", sa.vertex, "Tree vertex id");
    busemann_cmd->add_option("--edge", sa.edge, "Tree edge index");
    busemann_cmd->add_option("--offset", sa.offset, "Offset along the edge");
    busemann_cmd->add_option("--limit", limit, "Also evaluate the limit definition at these horizons")->delimiter(',');
    busemann_cmd->add_flag("--limit-default", limit_default, "Also evaluate the limit at T = 10, ..., 1e6");

    auto* certify_cmd = app.add_subcommand("certify", "Certify a lower bound on extension moduli from a witness");
    certify_cmd->add_option("poset", file, "Poset file")->required();
    certify_cmd->add_option("--target", sa.space, "hilbert, hyperbolic or rtree")->capture_default_str();
    certify_cmd->add_option("--e", sa.e, "Ray direction (hilbert)")->delimiter(',');
    certify_cmd->add_option("--cone", sa.cone, "Cone file (hilbert)");
    certify_cmd->add_option("--dim", sa.dim, "Dimension of the target space")->capture_default_str();
    certify_cmd->add_option("--tree", sa.tree, "Tree file (rtree)");

    double est_tol = 1e-4;
    auto* estimate_cmd = app.add_subcommand("estimate-e", "Bracket the extension modulus");
    estimate_cmd->add_option("problem", file, "Problem file")->required();
    estimate_cmd->add_option("--precision", est_tol, "Width of the final bracket")->capture_default_str();

    auto* gen_cmd = app.add_subcommand("gen", "Generate instances");
    gen_cmd->require_subcommand(1);
    int dim = 2, side = 3, vertices = 8;
    double spacing = 1.0, max_len = 3.0;
    std::string cone_path, norm = "l2";
    auto* grid_cmd = gen_cmd->add_subcommand("grid", "Lattice poset ordered by a cone");
    grid_cmd->add_option("--dim", dim)->capture_default_str();
    grid_cmd->add_option("--side", side)->capture_default_str();
    grid_cmd->add_option("--spacing", spacing)->capture_default_str();
    grid_cmd->add_option("--cone", cone_path, "Cone file (default: nonnegative orthant)");
    grid_cmd->add_option("--norm", norm)->check(CLI::IsMember({"l1", "l2", "linf"}))->capture_default_str();
    auto* tree_cmd = gen_cmd->add_subcommand("tree", "Random tree with a ray end");
    tree_cmd->add_option("--vertices", vertices)->capture_default_str();
    tree_cmd->add_option("--max-length", max_len)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kInput;
    }

    Report r;
    const auto start = std::chrono::steady_clock::now();
    try {
        if (validate_cmd->parsed()) {
            r.command = "validate";
            run_validate(r, o, file);
        } else if (radial_cmd->parsed()) {
            r.command = "radial";
            run_radial(r, o, file);
        } else if (extend_cmd->parsed()) {
            r.command = "extend";
            run_extend(r, o, file, mode, K, queries);
        } else if (busemann_cmd->parsed()) {
            r.command = "busemann";
            if (limit_default && limit.empty()) limit = default_schedule();
            run_busemann(r, o, sa, limit);
        } else if (certify_cmd->parsed()) {
            r.command = "certify";
            run_certify(r, o, file, sa);
        } else if (estimate_cmd->parsed()) {
            r.command = "estimate-e";
            run_estimate(r, o, file, est_tol);
        } else if (grid_cmd->parsed()) {
            r.command = "gen grid";
            run_gen_grid(r, o, dim, side, spacing, cone_path, norm);
        } else if (tree_cmd->parsed()) {
            r.command = "gen tree";
            run_gen_tree(r, o, vertices, max_len);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNoConvergence;
    } catch (const NumericInstabilityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNoConvergence;
    } catch (const SearchBudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNoConvergence;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return emit(r, o, ms);
}
