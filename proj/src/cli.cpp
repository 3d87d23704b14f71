#include "nlt/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nlt/error.hpp"
#include "nlt/falsify.hpp"
#include "nlt/io.hpp"
#include "nlt/majorization.hpp"
#include "nlt/norms.hpp"
#include "nlt/suites.hpp"
#include "nlt/traces.hpp"

namespace nlt {

using nlohmann::json;

namespace {

struct Common {
    std::uint64_t seed = 1;
    std::optional<std::size_t> trials;
    std::optional<std::size_t> dim;
    std::optional<double> tolerance;
    bool quiet = false;
};

struct Outcome {
    json inputs = json::object();
    json results = json::object();
    json checks = json::array();
    bool seeded = false;
    std::string headline;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--seed", c.seed, "random seed");
    sub->add_option("--trials", c.trials, "number of trials")->check(CLI::NonNegativeNumber);
    sub->add_option("--dim", c.dim, "matrix dimension")->check(CLI::PositiveNumber);
    sub->add_option("--tolerance", c.tolerance, "override the default tolerance")->check(CLI::NonNegativeNumber);
    sub->add_flag("--quiet", c.quiet, "print only the headline value");
}

std::string fmt(double v) {
    std::ostringstream ss;
    ss.precision(17);
    ss << v;
    return ss.str();
}

json weight_json(const WeightFunction& w) { return json::parse(format_weight(w)); }
json matrix_json(const ComplexMatrix& m) { return json::parse(format_matrix(m)); }

json check_json(const CheckReport& r) {
    json j{{"name", r.name}, {"verdict", verdict_name(r.verdict)}, {"tolerance", r.tolerance}, {"witness", r.witness}};
    if (r.trials) {
        j["trials"] = r.trials;
        j["failures"] = r.failures;
    }
    return j;
}

json check_json(const std::string& name, Verdict v, double tol, const std::string& witness) {
    return {{"name", name}, {"verdict", verdict_name(v)}, {"tolerance", tol}, {"witness", witness}};
}

bool any_failed(const json& checks) {
    return std::any_of(checks.begin(), checks.end(), [](const json& c) { return c["verdict"] == "fail"; });
}

// --- trace -----------------------------------------------------------------

struct TraceArgs {
    std::string matrix, weight, kind = "choquet";
    bool extended = false;
};

Outcome cmd_trace(const TraceArgs& t) {
    Outcome o;
    const ComplexMatrix m = load_matrix(t.matrix);
    const WeightFunction w = load_weight(t.weight);
    o.inputs = {{"matrix", t.matrix}, {"weight", weight_json(w)}, {"kind", t.kind}, {"extended", t.extended},
                {"n", m.rows()}};
    if (t.extended) {
        const cplx v = t.kind == "choquet" ? choquet_trace_extended(m, w) : sugeno_trace_extended(m, w);
        o.results["trace"] = {{"re", v.real()}, {"im", v.imag()}};
        o.headline = v.imag() == 0.0 ? fmt(v.real()) : fmt(v.real()) + (v.imag() < 0 ? "" : "+") + fmt(v.imag()) + "i";
        return o;
    }
    const HermitianMatrix a(m);
    const EigenSequence e = eigh(a);
    const double v = t.kind == "choquet" ? choquet_trace(e, w) : sugeno_trace(e, w);
    o.results["trace"] = v;
    o.results["eigenvalues"] = eigenvalue_sequence(e);
    o.headline = fmt(v);
    return o;
}

// --- norm ------------------------------------------------------------------

struct NormArgs {
    std::string matrix, weight, family = "choquet";
    double p = 1.0;
    std::optional<std::size_t> k;
    std::optional<double> demo;
};

Outcome cmd_norm(const NormArgs& n) {
    Outcome o;
    const ComplexMatrix m = load_matrix(n.matrix);
    o.inputs = {{"matrix", n.matrix}, {"family", n.family}, {"p", n.p}, {"n", m.rows()}};
    if (n.k) o.inputs["k"] = *n.k;
    double value = 0.0;
    if (n.family == "kyfan" || n.family == "kyfan_pk") {
        if (!n.k) throw Error(Errc::ParseError, "--k is required for the Ky Fan families");
        value = n.family == "kyfan" ? kyfan_norm(m, *n.k) : kyfan_pk_norm(m, n.p, *n.k);
    } else {
        if (n.weight.empty()) throw Error(Errc::ParseError, "--weight is required for this family");
        const WeightFunction w = load_weight(n.weight);
        o.inputs["weight"] = weight_json(w);
        if (!is_concave(w))
            o.checks.push_back(check_json("concave-weight", Verdict::Skipped, 0.0,
                                          "NotConcave: the weight is not concave, so the value need not satisfy "
                                          "the triangle inequality"));
        if (n.family == "choquet") {
            const NormSpec spec{w, n.p};
            value = schatten_choquet_norm(m, spec);
            if (n.p > 1.0) {
                const KyFanDecomposition d = kyfan_decomposition(m, spec);
                o.results["kyfan_decomposition"] = {{"coefficients", d.coefficients},
                                                    {"kyfan_pk_pow", d.kyfan_pk_pow},
                                                    {"value", d.value}};
            }
        } else if (n.family == "sugeno") {
            value = sugeno_norm(m, w);
            if (n.demo) {
                const HomogeneityProbe h = sugeno_homogeneity_probe(m, w, *n.demo);
                o.results["homogeneity_demo"] = {{"k", *n.demo},
                                                 {"norm_of_scaled", h.scaled_norm},
                                                 {"abs_k_times_norm", h.scaled_value},
                                                 {"difference", h.scaled_norm - h.scaled_value}};
            }
        } else {
            throw Error(Errc::ParseError, "unknown norm family '" + n.family + "'");
        }
    }
    o.results["norm"] = value;
    o.headline = fmt(value);
    return o;
}

// --- major -----------------------------------------------------------------

struct MajorArgs {
    std::string x, y, a, b;
    bool strict = false;
};

json verdict_json(const MajorizationVerdict& v) {
    json j{{"relation_holds", v.relation_holds}, {"partial_sums_x", v.partial_sums_x},
           {"partial_sums_y", v.partial_sums_y}};
    j["failing_index"] = v.failing_index ? json(*v.failing_index) : json(nullptr);
    return j;
}

Outcome cmd_major(const MajorArgs& mj, const Common& c) {
    Outcome o;
    const bool vectors = !mj.x.empty() || !mj.y.empty();
    const bool matrices = !mj.a.empty() || !mj.b.empty();
    if (vectors == matrices) throw Error(Errc::ParseError, "give either --x/--y vectors or --a/--b matrix files");
    if (vectors) {
        if (mj.x.empty() || mj.y.empty()) throw Error(Errc::ParseError, "both --x and --y are required");
        const NonNegVector x = parse_vector(mj.x), y = parse_vector(mj.y);
        o.inputs = {{"x", std::vector<double>(x.entries().begin(), x.entries().end())},
                    {"y", std::vector<double>(y.entries().begin(), y.entries().end())},
                    {"strict", mj.strict}};
        const MajorizationVerdict v = mj.strict ? majorizes(y, x) : weak_majorizes(y, x);
        o.results = verdict_json(v);
        o.headline = v.relation_holds ? "true" : "false";
        return o;
    }
    if (mj.a.empty() || mj.b.empty()) throw Error(Errc::ParseError, "both --a and --b are required");
    const HermitianMatrix a(load_matrix(mj.a)), b(load_matrix(mj.b));
    o.inputs = {{"a", mj.a}, {"b", mj.b}, {"n", a.dim()}};
    const bool dominated = eigen_dominates(b, a);
    o.results["eigen_dominates"] = dominated;
    o.results["eigenvalues_a"] = eigenvalue_sequence(a);
    o.results["eigenvalues_b"] = eigenvalue_sequence(b);
    o.headline = dominated ? "true" : "false";
    if (dominated) {
        const ComplexMatrix k = construct_contraction(a, b);
        const double err = frobenius_distance(a.matrix(), k * b.matrix() * k.adjoint());
        const double kn = operator_norm(k);
        const double tol = c.tolerance.value_or(1e-7);
        const double bound = tol * (1.0 + a.matrix().frobenius_norm());
        o.results["contraction"] = matrix_json(k);
        o.results["contraction_norm"] = kn;
        o.results["factorization_error"] = err;
        o.checks.push_back(check_json("factorization", err <= bound ? Verdict::Pass : Verdict::Fail, tol,
                                      err <= bound ? "" : "||a - cbc*||_F = " + fmt(err)));
        o.checks.push_back(check_json("contraction-norm", kn <= 1.0 + 1e-9 ? Verdict::Pass : Verdict::Fail, 1e-9,
                                      kn <= 1.0 + 1e-9 ? "" : "||c|| = " + fmt(kn)));
    }
    return o;
}

// --- check -----------------------------------------------------------------

Outcome cmd_check(const std::string& suite, const Common& c) {
    Outcome o;
    o.seeded = true;
    SuiteOptions opts;
    opts.seed = c.seed;
    opts.trials = c.trials.value_or(opts.trials);
    opts.dim = c.dim.value_or(opts.dim);
    opts.tolerance = c.tolerance;
    o.inputs = {{"suite", suite}, {"trials", opts.trials}, {"dim", opts.dim}};
    if (c.tolerance) o.inputs["tolerance"] = *c.tolerance;
    for (const CheckReport& r : run_suite(suite, opts)) o.checks.push_back(check_json(r));
    o.results["all_passed"] = !any_failed(o.checks);
    o.headline = any_failed(o.checks) ? "fail" : "pass";
    return o;
}

// --- falsify ---------------------------------------------------------------

struct FalsifyArgs {
    std::string weight, mode = "proof";
    double p = 1.0;
};

json counterexample_json(const Counterexample& ce) {
    return {{"a", matrix_json(ce.a)}, {"b", matrix_json(ce.b)}, {"p", ce.p},
            {"lhs", ce.lhs},          {"rhs", ce.rhs},          {"margin", ce.margin}};
}

Outcome cmd_falsify(const FalsifyArgs& f, const Common& c) {
    Outcome o;
    const WeightFunction w = load_weight(f.weight);
    validate(NormSpec{w, f.p});
    const auto first = first_nonconcave_index(w);
    o.inputs = {{"weight", weight_json(w)}, {"p", f.p}, {"mode", f.mode}};
    const double tol = c.tolerance.value_or(kViolationMargin);

    if (f.mode == "proof") {
        if (!first) {
            o.checks.push_back(check_json("counterexample", Verdict::Skipped, tol,
                                          "ConcaveWeight: the weight is concave, so no counterexample exists"));
            o.results["counterexample"] = nullptr;
            o.headline = "skipped";
            return o;
        }
        const std::size_t dim = c.dim.value_or(*first + 2);
        o.inputs["dim"] = dim;
        try {
            const Counterexample ce = proof_family_counterexample(w, f.p, dim);
            const bool ok = verify_counterexample(ce) && ce.margin > tol;
            o.results["counterexample"] = counterexample_json(ce);
            o.checks.push_back(check_json("counterexample", ok ? Verdict::Pass : Verdict::Fail, tol,
                                          "margin " + fmt(ce.margin)));
            o.headline = fmt(ce.margin);
        } catch (const Error& e) {
            if (e.code() != Errc::SearchExhausted) throw;
            o.results["counterexample"] = nullptr;
            o.results["search_budget"] = kGridS * kGridT + 1;
            o.checks.push_back(check_json("counterexample", Verdict::Fail, tol, e.what()));
            o.headline = "none";
        }
        return o;
    }
    if (f.mode != "random") throw Error(Errc::ParseError, "mode must be proof or random");

    o.seeded = true;
    const std::size_t dim = c.dim.value_or(first ? std::max<std::size_t>(*first + 2, 2) : 2);
    const std::size_t trials = c.trials.value_or(1000);
    o.inputs["dim"] = dim;
    o.inputs["trials"] = trials;
    const auto ce = random_search_counterexample(w, f.p, dim, trials, RandomSource(c.seed));
    o.results["search_budget"] = trials;
    if (ce) {
        o.results["counterexample"] = counterexample_json(*ce);
        // a violation for a concave weight would contradict the triangle inequality
        const bool expected = first.has_value();
        const bool ok = expected && verify_counterexample(*ce) && ce->margin > tol;
        o.checks.push_back(check_json("counterexample", ok ? Verdict::Pass : Verdict::Fail, tol,
                                      "margin " + fmt(ce->margin)));
        o.headline = fmt(ce->margin);
    } else {
        o.results["counterexample"] = nullptr;
        o.checks.push_back(check_json(
            "counterexample", Verdict::Skipped, tol,
            first ? "none found within " + std::to_string(trials) + " trials"
                  : "ConcaveWeight: the weight is concave; none found within " + std::to_string(trials) + " trials"));
        o.headline = "none";
    }
    return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"nlt: non-linear traces of Choquet and Sugeno type"};
    app.name("nlt");
    app.require_subcommand(1);
    Common common;

    TraceArgs ta;
    auto* trace = app.add_subcommand("trace", "phi_alpha or psi_alpha of a matrix");
    trace->add_option("--matrix", ta.matrix, "matrix file")->required();
    trace->add_option("--weight", ta.weight, "weight file")->required();
    trace->add_option("--kind", ta.kind, "choquet or sugeno")->check(CLI::IsMember({"choquet", "sugeno"}));
    trace->add_flag("--extended", ta.extended, "allow non-positive input via the four-part decomposition");
    add_common(trace, common);

    NormArgs na;
    auto* norm = app.add_subcommand("norm", "norms induced by the traces");
    norm->add_option("--matrix", na.matrix, "matrix file")->required();
    norm->add_option("--weight", na.weight, "weight file");
    norm->add_option("--p", na.p, "exponent p >= 1");
    norm->add_option("--family", na.family, "choquet, sugeno, kyfan or kyfan_pk")
        ->check(CLI::IsMember({"choquet", "sugeno", "kyfan", "kyfan_pk"}));
    norm->add_option("--k", na.k, "Ky Fan index");
    norm->add_option("--demo-homogeneity", na.demo, "compare ||k a|| with |k| ||a|| (sugeno family)");
    add_common(norm, common);

    MajorArgs ma;
    auto* major = app.add_subcommand("major", "majorization and eigenvalue domination");
    major->add_option("--x", ma.x, "comma-separated vector x");
    major->add_option("--y", ma.y, "comma-separated vector y");
    major->add_option("--a", ma.a, "matrix file a");
    major->add_option("--b", ma.b, "matrix file b");
    major->add_flag("--strict", ma.strict, "majorization instead of weak majorization");
    add_common(major, common);

    std::string suite;
    auto* check = app.add_subcommand("check", "run a named property suite");
    check->add_option("--suite", suite, "suite name")->required();
    add_common(check, common);

    FalsifyArgs fa;
    auto* falsify = app.add_subcommand("falsify", "search for a triangle-inequality violation");
    falsify->add_option("--weight", fa.weight, "weight file")->required();
    falsify->add_option("--p", fa.p, "exponent p >= 1");
    falsify->add_option("--mode", fa.mode, "proof or random")->check(CLI::IsMember({"proof", "random"}));
    add_common(falsify, common);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    if (common.dim && *common.dim > kMaxFileDim) {
        err << "usage error: --dim above " << kMaxFileDim << "\n";
        return kExitUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    std::string command;
    try {
        if (trace->parsed()) {
            command = "trace";
            o = cmd_trace(ta);
        } else if (norm->parsed()) {
            command = "norm";
            o = cmd_norm(na);
        } else if (major->parsed()) {
            command = "major";
            o = cmd_major(ma, common);
        } else if (check->parsed()) {
            command = "check";
            o = cmd_check(suite, common);
        } else {
            command = "falsify";
            o = cmd_falsify(fa, common);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return is_math_domain(e.code()) ? kExitMathDomain : kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitMathDomain;
    }
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

    if (common.quiet) {
        out << o.headline << "\n";
    } else {
        json report{{"command", command}, {"inputs", o.inputs}, {"results", o.results},
                    {"checks", o.checks}, {"elapsed_ms", elapsed}};
        report["seed"] = o.seeded ? json(common.seed) : json(nullptr);
        out << report.dump(2) << "\n";
    }
    return any_failed(o.checks) ? kExitCheckFailed : kExitOk;
}

}  // namespace nlt
