#include "nlt/suites.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <sstream>
#include <string>

#include "nlt/error.hpp"
#include "nlt/falsify.hpp"
#include "nlt/integrals.hpp"
#include "nlt/majorization.hpp"
#include "nlt/norms.hpp"
#include "nlt/random.hpp"
#include "nlt/spectral.hpp"
#include "nlt/traces.hpp"

namespace nlt {

namespace {

constexpr std::array<std::string_view, 7> kSuites{
    "comonotonic-additivity", "sugeno-max",          "triangle-choquet",    "triangle-sugeno",
    "majorization-equivalence", "weight-monotonicity", "ideal-inequalities",
};

constexpr std::array<double, 4> kExponents{1.0, 1.5, 2.0, 3.0};
constexpr std::size_t kProjectionsPerInstance = 200;

std::string num(double v) {
    std::ostringstream ss;
    ss.precision(17);
    ss << v;
    return ss.str();
}

class Check {
public:
    Check(std::string name, double tol, const SuiteOptions& opts) {
        report_.name = std::move(name);
        report_.tolerance = opts.tolerance.value_or(tol);
        report_.seed = opts.seed;
    }

    double tol() const { return report_.tolerance; }

    void record(std::size_t trial, bool ok, const std::function<std::string()>& witness) {
        ++report_.trials;
        if (ok) return;
        if (report_.failures++ == 0) report_.witness = "trial " + std::to_string(trial) + ": " + witness();
    }

    void skip(std::string why) { skipped_ = std::move(why); }

    CheckReport done() {
        if (report_.trials == 0) {
            report_.verdict = Verdict::Skipped;
            if (report_.witness.empty()) report_.witness = skipped_.empty() ? "no trials" : skipped_;
        } else {
            report_.verdict = report_.failures == 0 ? Verdict::Pass : Verdict::Fail;
        }
        return report_;
    }

private:
    CheckReport report_;
    std::string skipped_;
};

double min_eigenvalue(const ComplexMatrix& m) {
    const EigenSequence e = eigh(HermitianMatrix::hermitian_part(m));
    return e.values.empty() ? 0.0 : e.values.back();
}

WeightFunction any_weight(RandomSource& r, std::size_t dim) {
    return random_weight(r, 1 + r.index(std::max<std::size_t>(dim, 1)), r.uniform() < 0.5);
}

ComplexMatrix scaled_complex(RandomSource& r, std::size_t dim) {
    return r.uniform(0.1, 2.0) * random_complex_matrix(r, dim);
}

std::vector<CheckReport> comonotonic_additivity(const SuiteOptions& o) {
    Check phi("phi-comonotonic-additivity", 1e-8, o);
    Check psi("psi-F-additivity", 0.0, o);
    Check psi_matrix("psi-F-additivity-matrix", 1e-9, o);
    Check cho("choquet-integral-additivity", 1e-10, o);
    Check sug("sugeno-integral-F-additivity", 0.0, o);
    const RandomSource base(o.seed);
    for (std::size_t t = 0; t < o.trials; ++t) {
        RandomSource r = base.fork(t);
        auto spectrum = random_distinct_spectrum(r, o.dim);
        if (o.dim > 1 && r.uniform() < 0.3) spectrum[r.index(o.dim)] = 0.0;
        const HermitianMatrix a = random_psd(r, o.dim, spectrum);
        const WeightFunction w = any_weight(r, o.dim);
        auto [f, g] = random_comonotone_pair(r, spectrum);
        std::vector<double> join(f.points().size());
        for (std::size_t k = 0; k < join.size(); ++k) join[k] = std::max(f.values()[k], g.values()[k]);
        const SpectrumFunction fg(std::vector<double>(f.points().begin(), f.points().end()), join);

        const HermitianMatrix fa = apply_spectrum_function(a, f);
        const HermitianMatrix ga = apply_spectrum_function(a, g);
        const double lhs = choquet_trace(HermitianMatrix::hermitian_part(fa.matrix() + ga.matrix()), w);
        const double rhs = choquet_trace(fa, w) + choquet_trace(ga, w);
        phi.record(t, std::abs(lhs - rhs) <= phi.tol(),
                   [&] { return "phi(f(a)+g(a))=" + num(lhs) + " vs " + num(rhs); });

        const EigenSequence e = eigh(a);
        const double sj = sugeno_trace(apply_spectrum_function(e, fg), w);
        const double sm = std::max(sugeno_trace(apply_spectrum_function(e, f), w),
                                   sugeno_trace(apply_spectrum_function(e, g), w));
        psi.record(t, std::abs(sj - sm) <= psi.tol(),
                   [&] { return "psi((f v g)(a))=" + num(sj) + " vs " + num(sm); });
        const double mj = sugeno_trace(apply_spectrum_function(a, fg), w);
        const double mm = std::max(sugeno_trace(fa, w), sugeno_trace(ga, w));
        psi_matrix.record(t, std::abs(mj - mm) <= psi_matrix.tol(),
                          [&] { return "psi((f v g)(a))=" + num(mj) + " vs " + num(mm); });

        std::vector<double> fx(o.dim), gx(o.dim), sum(o.dim), mx(o.dim);
        for (std::size_t k = 0; k < o.dim; ++k) {
            fx[k] = f(spectrum[k]);
            gx[k] = g(spectrum[k]);
            sum[k] = fx[k] + gx[k];
            mx[k] = std::max(fx[k], gx[k]);
        }
        const MonotoneMeasure mu = MonotoneMeasure::cardinality_based(o.dim, w);
        const NonNegVector F(fx), G(gx);
        const double ci = choquet_integral(NonNegVector(sum), mu);
        const double cs = choquet_integral(F, mu) + choquet_integral(G, mu);
        cho.record(t, std::abs(ci - cs) <= cho.tol() * std::max(1.0, std::abs(cs)),
                   [&] { return "C(f+g)=" + num(ci) + " vs " + num(cs); });
        const double si = sugeno_integral(NonNegVector(mx), mu);
        const double ss = std::max(sugeno_integral(F, mu), sugeno_integral(G, mu));
        sug.record(t, std::abs(si - ss) <= sug.tol(), [&] { return "S(f v g)=" + num(si) + " vs " + num(ss); });
    }
    return {phi.done(), psi.done(), psi_matrix.done(), cho.done(), sug.done()};
}

std::vector<CheckReport> sugeno_max(const SuiteOptions& o) {
    Check oracle("psi-equals-max-oracle", 0.0, o);
    Check feasible("random-projection-feasibility", 1e-9, o);
    Check obs("observation-lemma", 1e-9, o);
    const RandomSource base(o.seed);
    for (std::size_t t = 0; t < o.trials; ++t) {
        RandomSource r = base.fork(t);
        const HermitianMatrix a = random_psd(r, o.dim);
        const WeightFunction w = any_weight(r, o.dim);
        const double psi = sugeno_trace(a, w);
        const double orc = sugeno_max_oracle(a, w);
        oracle.record(t, std::abs(psi - orc) <= oracle.tol(),
                      [&] { return "psi=" + num(psi) + " oracle=" + num(orc); });

        double worst = 0.0;
        for (std::size_t j = 0; j < kProjectionsPerInstance; ++j) {
            const std::size_t k = 1 + r.index(o.dim);
            // p = v v*: the non-zero block of pap is v* a v, so lambda_k(pap) is its bottom eigenvalue
            const ComplexMatrix v = random_isometry(r, o.dim, k);
            const EigenSequence e = eigh(HermitianMatrix::hermitian_part(v.adjoint() * a.matrix() * v));
            worst = std::max(worst, std::min(e.values[k - 1], w.value(k)));
        }
        feasible.record(t, worst <= psi + feasible.tol(),
                        [&] { return "feasible lambda " + num(worst) + " > psi " + num(psi); });

        const ObservationProjections op = observation_projections(a, w);
        const std::size_t n = o.dim;
        const ComplexMatrix id = ComplexMatrix::identity(n);
        const ComplexMatrix rest = id - op.q0;
        const double m1 = min_eigenvalue(op.p * a.matrix() * op.p - op.value * op.p);
        const double m2 = min_eigenvalue(op.value * rest - rest * a.matrix() * rest);
        const bool ok = m1 >= -obs.tol() && op.value <= w.value(op.rank_p) + obs.tol() && m2 >= -obs.tol() &&
                        w.value(op.rank_q0) <= op.value + obs.tol();
        obs.record(t, ok, [&] {
            return std::string("case ") + static_cast<char>(op.which) + ": min eig(pap-psi p)=" + num(m1) +
                   ", psi-alpha(rank p)=" + num(op.value - w.value(op.rank_p)) +
                   ", min eig(psi(I-q0)-(I-q0)a(I-q0))=" + num(m2) +
                   ", alpha(rank q0)-psi=" + num(w.value(op.rank_q0) - op.value);
        });
    }
    return {oracle.done(), feasible.done(), obs.done()};
}

std::vector<CheckReport> triangle_choquet(const SuiteOptions& o) {
    Check tri("concave-triangle", 1e-8, o);
    Check fals("nonconcave-counterexample", kViolationMargin, o);
    const RandomSource base(o.seed);
    for (std::size_t t = 0; t < o.trials; ++t) {
        RandomSource r = base.fork(t);
        const double p = kExponents[t % kExponents.size()];
        const NormSpec spec{random_weight(r, 1 + r.index(o.dim), true), p};
        ComplexMatrix a, b;
        if (t % 2 == 0) {
            a = random_psd(r, o.dim).matrix();
            b = random_psd(r, o.dim).matrix();
        } else {
            a = scaled_complex(r, o.dim);
            b = scaled_complex(r, o.dim);
        }
        const double lhs = schatten_choquet_norm(a + b, spec);
        const double rhs = schatten_choquet_norm(a, spec) + schatten_choquet_norm(b, spec);
        tri.record(t, lhs <= rhs + tri.tol(), [&] { return "p=" + num(p) + ": " + num(lhs) + " > " + num(rhs); });

        if (o.dim < 2) continue;
        const WeightFunction bad = random_weight(r, 1 + r.index(o.dim - 1), false);
        try {
            const Counterexample c = proof_family_counterexample(bad, p, o.dim);
            fals.record(t, verify_counterexample(c) && c.margin > fals.tol(),
                        [&] { return "margin " + num(c.margin) + " does not re-verify"; });
        } catch (const Error& e) {
            fals.record(t, false, [&] { return std::string(e.what()); });
        }
    }
    if (o.dim < 2) fals.skip("dim < 2 leaves no room for a non-concavity");
    return {tri.done(), fals.done()};
}

std::vector<CheckReport> triangle_sugeno(const SuiteOptions& o) {
    Check tri("sugeno-triangle", 1e-9, o);
    Check zero("metric-identity", 0.0, o);
    Check sym("metric-symmetry", 1e-9, o);
    Check mtri("metric-triangle", 1e-9, o);
    const RandomSource base(o.seed);
    for (std::size_t t = 0; t < o.trials; ++t) {
        RandomSource r = base.fork(t);
        const WeightFunction w = random_weight(r, 1 + r.index(o.dim), true);
        const ComplexMatrix b = scaled_complex(r, o.dim);
        const ComplexMatrix c = scaled_complex(r, o.dim);
        const double lhs = sugeno_norm(b + c, w);
        const double rhs = sugeno_norm(b, w) + sugeno_norm(c, w);
        tri.record(t, lhs <= rhs + tri.tol(), [&] { return num(lhs) + " > " + num(rhs); });

        const ComplexMatrix x = scaled_complex(r, o.dim);
        const double dbb = sugeno_distance(b, b, w);
        const double dbc = sugeno_distance(b, c, w);
        zero.record(t, dbb <= zero.tol() && dbc > 0.0, [&] { return "d(b,b)=" + num(dbb) + " d(b,c)=" + num(dbc); });
        const double dcb = sugeno_distance(c, b, w);
        sym.record(t, std::abs(dbc - dcb) <= sym.tol(), [&] { return num(dbc) + " vs " + num(dcb); });
        const double dbx = sugeno_distance(b, x, w);
        const double dxc = sugeno_distance(x, c, w);
        mtri.record(t, dbc <= dbx + dxc + mtri.tol(),
                    [&] { return "d(b,c)=" + num(dbc) + " > " + num(dbx) + " + " + num(dxc); });
    }
    return {tri.done(), zero.done(), sym.done(), mtri.done()};
}

std::vector<CheckReport> majorization_equivalence(const SuiteOptions& o) {
    Check dom("contraction-implies-domination", kDominationTolerance, o);
    Check fac("domination-implies-factorization", 1e-7, o);
    Check probe("selector-probe-equivalence", 1e-8, o);
    Check weak("eigenvalue-weak-majorization", kMajorizationTolerance, o);
    const RandomSource base(o.seed);
    for (std::size_t t = 0; t < o.trials; ++t) {
        RandomSource r = base.fork(t);
        const HermitianMatrix b = random_psd(r, o.dim);
        const ComplexMatrix x = random_contraction(r, o.dim);
        const HermitianMatrix a = HermitianMatrix::hermitian_part(x * b.matrix() * x.adjoint());
        const bool d = eigen_dominates(b, a);
        dom.record(t, d, [] { return std::string("x b x* not dominated by b"); });

        try {
            const ComplexMatrix c = construct_contraction(a, b);
            const double err = frobenius_distance(a.matrix(), c * b.matrix() * c.adjoint());
            const double cn = operator_norm(c);
            fac.record(t, err <= fac.tol() * (1.0 + a.matrix().frobenius_norm()) && cn <= 1.0 + 1e-9,
                       [&] { return "||a - cbc*||_F=" + num(err) + " ||c||=" + num(cn); });
        } catch (const Error& e) {
            fac.record(t, false, [&] { return std::string(e.what()); });
        }

        // an unrelated pair makes both outcomes of the equivalence likely
        const HermitianMatrix a2 = t % 2 == 0 ? a : random_psd(r, o.dim);
        const bool d2 = eigen_dominates(b, a2);
        bool all = true;
        for (std::size_t i = 1; i <= o.dim; ++i)
            all = all && choquet_trace(a2, WeightFunction::selector(i)) <= choquet_trace(b, WeightFunction::selector(i)) + probe.tol();
        for (int k = 0; k < 4; ++k) {
            const WeightFunction w = any_weight(r, o.dim);
            all = all && choquet_trace(a2, w) <= choquet_trace(b, w) + probe.tol();
        }
        // random weights only add necessary conditions, so they can only agree with the selectors here
        probe.record(t, d2 == all, [&] {
            return std::string("eigen_dominates=") + (d2 ? "true" : "false") + " probes=" + (all ? "true" : "false");
        });

        const MajorizationVerdict v =
            weak_majorizes(NonNegVector(eigenvalue_sequence(b)), NonNegVector(eigenvalue_sequence(a)));
        weak.record(t, v.relation_holds, [&] { return "prefix " + std::to_string(*v.failing_index) + " fails"; });
    }
    return {dom.done(), fac.done(), probe.done(), weak.done()};
}

std::vector<CheckReport> weight_monotonicity(const SuiteOptions& o) {
    Check wm("norm-monotone-in-weight", 1e-9, o);
    Check pm("p-monotone-on-contractions", 1e-9, o);
    Check sub("concave-subadditivity", 1e-12, o);
    const RandomSource base(o.seed);
    for (std::size_t t = 0; t < o.trials; ++t) {
        RandomSource r = base.fork(t);
        const WeightFunction small = any_weight(r, o.dim);
        std::vector<double> bigger(small.increments().begin(), small.increments().end());
        for (auto& c : bigger) c += r.uniform() < 0.3 ? 0.0 : r.uniform();
        const WeightFunction large(bigger, small.tail() + r.uniform());
        const double p = kExponents[t % kExponents.size()];
        const ComplexMatrix a = scaled_complex(r, o.dim);
        const double ns = schatten_choquet_norm(a, {small, p});
        const double nl = schatten_choquet_norm(a, {large, p});
        wm.record(t, ns <= nl + wm.tol(), [&] { return num(ns) + " > " + num(nl); });

        const ComplexMatrix x = random_contraction(r, o.dim);
        const double q = p + r.uniform(0.0, 2.0);
        const auto s = singular_values(x);
        std::vector<double> sp(s.size()), sq(s.size());
        bool entrywise = true;
        for (std::size_t k = 0; k < s.size(); ++k) {
            sp[k] = std::pow(s[k], p);
            sq[k] = std::pow(s[k], q);
            entrywise = entrywise && sq[k] <= sp[k] + pm.tol();
        }
        const double fp = choquet_sum_form(sp, small);
        const double fq = choquet_sum_form(sq, small);
        pm.record(t, entrywise && fq <= fp + pm.tol(),
                  [&] { return "phi(|x|^" + num(q) + ")=" + num(fq) + " > phi(|x|^" + num(p) + ")=" + num(fp); });

        const WeightFunction cw = random_weight(r, 1 + r.index(o.dim), true);
        bool ok = true;
        std::string bad;
        for (std::size_t m = 0; m <= 2 * o.dim && ok; ++m)
            for (std::size_t n = 0; n <= 2 * o.dim && ok; ++n)
                if (cw.value(m + n) > cw.value(m) + cw.value(n) + sub.tol()) {
                    ok = false;
                    bad = "alpha(" + std::to_string(m + n) + ") > alpha(" + std::to_string(m) + ") + alpha(" +
                          std::to_string(n) + ")";
                }
        sub.record(t, ok, [&] { return bad; });
    }
    return {wm.done(), pm.done(), sub.done()};
}

std::vector<CheckReport> ideal_inequalities(const SuiteOptions& o) {
    Check right("ideal-right", 1e-8, o);
    Check left("ideal-left", 1e-8, o);
    Check adj("adjoint-invariance", 1e-8, o);
    Check kf("kyfan-decomposition", 1e-8, o);
    Check non("norm-of-kyfan-norms", 1e-8, o);
    Check hom("homogeneity", 1e-8, o);
    const RandomSource base(o.seed);
    for (std::size_t t = 0; t < o.trials; ++t) {
        RandomSource r = base.fork(t);
        const double p = kExponents[t % kExponents.size()];
        const NormSpec spec{any_weight(r, o.dim), p};
        const ComplexMatrix a = scaled_complex(r, o.dim);
        const ComplexMatrix b = scaled_complex(r, o.dim);
        const double na = schatten_choquet_norm(a, spec);
        const double bn = operator_norm(b);
        const double nab = schatten_choquet_norm(a * b, spec);
        right.record(t, nab <= na * bn + right.tol(), [&] { return num(nab) + " > " + num(na * bn); });
        const double nba = schatten_choquet_norm(b * a, spec);
        left.record(t, nba <= bn * na + left.tol(), [&] { return num(nba) + " > " + num(na * bn); });
        const double nas = schatten_choquet_norm(a.adjoint(), spec);
        adj.record(t, std::abs(nas - na) <= adj.tol(), [&] { return num(nas) + " vs " + num(na); });

        const KyFanDecomposition d = kyfan_decomposition(a, spec);
        kf.record(t, std::abs(d.value - na) <= kf.tol(), [&] { return num(d.value) + " vs " + num(na); });

        const NormSpec cspec{random_weight(r, 1 + r.index(o.dim), true), p};
        const double direct = schatten_choquet_norm(a, cspec);
        const double composed = norm_of_kyfan_norms(a, cspec);
        non.record(t, std::abs(direct - composed) <= non.tol(),
                   [&] { return num(composed) + " vs " + num(direct); });

        const double k = r.uniform(-3.0, 3.0);
        const double nk = schatten_choquet_norm(k * a, cspec);
        hom.record(t, std::abs(nk - std::abs(k) * direct) <= hom.tol() * (1.0 + std::abs(k)),
                   [&] { return num(nk) + " vs " + num(std::abs(k) * direct); });
    }
    return {right.done(), left.done(), adj.done(), kf.done(), non.done(), hom.done()};
}

}  // namespace

std::span<const std::string_view> suite_names() { return kSuites; }

std::vector<CheckReport> run_suite(std::string_view name, const SuiteOptions& opts) {
    if (opts.dim == 0) throw Error(Errc::DimensionTooSmall, "suites need dim >= 1");
    if (name == "comonotonic-additivity") return comonotonic_additivity(opts);
    if (name == "sugeno-max") return sugeno_max(opts);
    if (name == "triangle-choquet") return triangle_choquet(opts);
    if (name == "triangle-sugeno") return triangle_sugeno(opts);
    if (name == "majorization-equivalence") return majorization_equivalence(opts);
    if (name == "weight-monotonicity") return weight_monotonicity(opts);
    if (name == "ideal-inequalities") return ideal_inequalities(opts);
    std::string known;
    for (auto s : kSuites) known += (known.empty() ? "" : ", ") + std::string(s);
    throw Error(Errc::UnknownSuite, "unknown suite '" + std::string(name) + "' (known: " + known + ")");
}

}  // namespace nlt
