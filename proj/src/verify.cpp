#include "lipop/verify.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

#include "lipop/scenario.hpp"

namespace lipop {

namespace {

double tol(double dflt) {
    static const std::optional<double> override_ = []() -> std::optional<double> {
        if (const char* env = std::getenv("LIPOP_VERIFY_TOL")) return std::atof(env);
        return std::nullopt;
    }();
    return override_ ? *override_ : dflt;
}

double uniform01(std::mt19937& rng) {
    const std::uint64_t hi = rng() >> 5;
    const std::uint64_t lo = rng() >> 6;
    return (static_cast<double>(hi) * 67108864.0 + static_cast<double>(lo)) *
           (1.0 / 9007199254740992.0);
}

cplx rand_coeff(std::mt19937& rng) {
    return cplx(2.0 * uniform01(rng) - 1.0, 2.0 * uniform01(rng) - 1.0);
}

AnalyticFn rand_poly(std::mt19937& rng, int max_deg) {
    std::vector<cplx> c(1 + rng() % (max_deg + 1));
    for (auto& e : c) e = rand_coeff(rng);
    return AnalyticFn::poly(std::move(c));
}

SelfMap rand_self_map(std::mt19937& rng, int max_deg) {
    const AnalyticFn raw = rand_poly(rng, max_deg);
    double bsup = 1e-9;
    for (int k = 0; k < 512; ++k)
        bsup = std::max(bsup, std::abs(raw.value(std::polar(1.0, 2.0 * M_PI * k / 512.0))));
    const double target = 0.45 + 0.5 * uniform01(rng);
    return make_self_map(AnalyticFn::scale(cplx(target / bsup, 0.0), raw));
}

cplx rand_point(std::mt19937& rng, double rmax) {
    return std::polar(rmax * std::sqrt(uniform01(rng)), 2.0 * M_PI * uniform01(rng));
}

struct CheckResult {
    bool pass = true;
    std::string info; // failure reason or informational note
};

CheckResult ok() { return {true, ""}; }
CheckResult ok_note(std::string s) { return {true, std::move(s)}; }
CheckResult fail(std::string s) { return {false, std::move(s)}; }

struct Check {
    std::string name;
    std::function<CheckResult()> run;
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

struct RandomOp {
    WcOp W;
    VectorFn f;
};

RandomOp rand_op(std::mt19937& rng, int dim, int max_deg) {
    const NormedSpace sp{dim, NormKind::l2};
    std::vector<AnalyticFn> entries;
    for (int i = 0; i < dim * dim; ++i) entries.push_back(rand_poly(rng, max_deg));
    std::vector<AnalyticFn> comps;
    for (int i = 0; i < dim; ++i) comps.push_back(rand_poly(rng, max_deg));
    WcOp W = make_wcop(make_symbol(sp, sp, std::move(entries)), rand_self_map(rng, 3),
                       SpaceSpec{0.5, sp, SpaceFlavor::big}, SpaceSpec{0.5, sp, SpaceFlavor::big});
    return RandomOp{std::move(W), VectorFn{sp, std::move(comps)}};
}

std::vector<Check> identities_suite() {
    std::vector<Check> checks;

    checks.push_back({"derivative identity vs finite difference", []() -> CheckResult {
        std::mt19937 rng(11u);
        const double t = tol(1e-6);
        for (int s = 0; s < 25; ++s) {
            RandomOp op = rand_op(rng, 2, 6);
            for (int p = 0; p < 5; ++p) {
                const cplx z = rand_point(rng, 0.9);
                const double h = 1e-6;
                const Vec fd = vec_scale(cplx(1.0 / (2.0 * h), 0.0),
                                         vec_sub(apply(op.W, op.f, z + h), apply(op.W, op.f, z - h)));
                const Vec ex = apply_deriv(op.W, op.f, z);
                const double err = vec_norm(vec_sub(fd, ex));
                if (err > t * (1.0 + vec_norm(ex)))
                    return fail("relative error " + fmt(err / (1.0 + vec_norm(ex))) + " at z = " +
                           fmt(z.real()) + "+" + fmt(z.imag()) + "i");
            }
        }
        return ok();
    }});

    checks.push_back({"operator decomposition DW = W(phi' psi, phi) D + W(psi', phi)",
                      []() -> CheckResult {
        std::mt19937 rng(13u);
        const double t = tol(1e-10);
        for (int s = 0; s < 25; ++s) {
            RandomOp op = rand_op(rng, 2, 6);
            const AnalyticFn dphi = op.W.phi.fn.derivative_fn();
            const WcOp W1 = make_wcop(op.W.psi.scaled_by(dphi), op.W.phi, op.W.source, op.W.target);
            const WcOp W2 =
                make_wcop(op.W.psi.derivative_symbol(), op.W.phi, op.W.source, op.W.target);
            const VectorFn df{op.f.codomain,
                              {op.f.comps[0].derivative_fn(), op.f.comps[1].derivative_fn()}};
            for (int p = 0; p < 5; ++p) {
                const cplx z = rand_point(rng, 0.95);
                const Vec lhs = apply_deriv(op.W, op.f, z);
                const Vec rhs = vec_add(apply(W1, df, z), apply(W2, op.f, z));
                const double err = vec_norm(vec_sub(lhs, rhs));
                if (err > t * (1.0 + vec_norm(lhs))) return fail("discrepancy " + fmt(err));
            }
        }
        return ok();
    }});

    checks.push_back({"Taylor truncation idempotent and exact on polynomials",
                      []() -> CheckResult {
        std::mt19937 rng(17u);
        const double t = tol(1e-12);
        for (int s = 0; s < 20; ++s) {
            const AnalyticFn p = rand_poly(rng, 6);
            const VectorFn f = scalar_fn(p);
            const VectorFn t8 = truncate(f, 8);
            const VectorFn t88 = truncate(t8, 8);
            for (int k = 0; k < 5; ++k) {
                const cplx z = rand_point(rng, 1.0);
                if (std::abs(t8.comps[0].value(z) - p.value(z)) > t) return fail("truncation not exact");
                if (std::abs(t88.comps[0].value(z) - t8.comps[0].value(z)) > t)
                    return fail("truncation not idempotent");
            }
        }
        return ok();
    }});

    checks.push_back({"dilation semigroup K_r K_s = K_rs", []() -> CheckResult {
        std::mt19937 rng(19u);
        const double t = tol(1e-12);
        for (int s = 0; s < 20; ++s) {
            const AnalyticFn p = rand_poly(rng, 6);
            const double r1 = 0.3 + 0.6 * uniform01(rng);
            const double r2 = 0.3 + 0.6 * uniform01(rng);
            const AnalyticFn a = p.dilated(r1).dilated(r2);
            const AnalyticFn b = p.dilated(r1 * r2);
            for (int k = 0; k < 5; ++k) {
                const cplx z = rand_point(rng, 1.0);
                if (std::abs(a.value(z) - b.value(z)) > t * (1.0 + std::abs(b.value(z))))
                    return fail("semigroup violated at r1 = " + fmt(r1) + ", r2 = " + fmt(r2));
            }
        }
        return ok();
    }});

    checks.push_back({"coefficient functional commutes with truncation",
                      []() -> CheckResult {
        std::mt19937 rng(23u);
        const double t = tol(1e-12);
        for (int s = 0; s < 20; ++s) {
            const VectorFn f = scalar_fn(rand_poly(rng, 8));
            const VectorFn l5 = truncate(f, 5);
            for (int k = 0; k <= 5; ++k) {
                const Vec a = taylor_functional(f, k);
                const Vec b = taylor_functional(l5, k);
                if (vec_norm(vec_sub(a, b)) > t) return fail("q_k disagrees below the truncation degree");
            }
        }
        return ok();
    }});

    checks.push_back({"test functions vanish at a with derivative (1-|a|^2)^(alpha-1) x",
                      []() -> CheckResult {
        std::mt19937 rng(29u);
        const NormedSpace sp{2, NormKind::l2};
        for (int s = 0; s < 25; ++s) {
            const cplx a = std::polar(0.05 + 0.9 * uniform01(rng), 2.0 * M_PI * uniform01(rng));
            const double alpha = 0.1 + 0.85 * uniform01(rng);
            std::vector<cplx> xe = {rand_coeff(rng), rand_coeff(rng)};
            const Vec x = make_vec(sp, xe);
            const TestFnProperties props = test_fn_properties(a, x, alpha);
            if (vec_norm(props.value_at_a) > tol(1e-12)) return fail("f_{a,x}(a) != 0");
            const double w = std::pow(1.0 - std::norm(a), 1.0 - alpha);
            const Vec scaled = vec_scale(cplx(w, 0.0), props.deriv_at_a);
            if (vec_norm(vec_sub(scaled, x)) > tol(1e-9) * (1.0 + vec_norm(x)))
                return fail("weighted derivative at a misses x");
        }
        return ok();
    }});

    checks.push_back({"test-function family norm stays below 3||x||",
                      []() -> CheckResult {
        std::mt19937 rng(31u);
        const DiskSampler sampler{14, 128, 16};
        for (int s = 0; s < 40; ++s) {
            const cplx a = std::polar(0.05 + 0.93 * uniform01(rng), 2.0 * M_PI * uniform01(rng));
            const double alpha = 0.15 + 0.8 * uniform01(rng);
            const double n = lambda_norm(scalar_fn(AnalyticFn::test_fn(a, alpha)), alpha, sampler).value;
            if (n > 3.0 + tol(1e-6))
                return fail("norm " + fmt(n) + " exceeds 3 at a = " + fmt(std::abs(a)) +
                       ", alpha = " + fmt(alpha));
        }
        return ok();
    }});

    checks.push_back({"restriction/extension agree on the boundary",
                      []() -> CheckResult {
        const NormedSpace s1{1, NormKind::l2};
        const WcOp Wid = make_wcop(identity_symbol(s1), make_self_map(AnalyticFn::identity()),
                                   SpaceSpec{0.5, s1, SpaceFlavor::big},
                                   SpaceSpec{0.5, s1, SpaceFlavor::big});
        std::vector<cplx> pts;
        for (int k = 0; k < 16; ++k) pts.push_back(std::polar(1.0, 2.0 * M_PI * k / 16.0));
        const double d1 = restrict_extend_check(Wid, scalar_fn(AnalyticFn::identity()), pts);
        if (d1 > tol(1e-10)) return fail("identity operator discrepancy " + fmt(d1));

        std::mt19937 rng(37u);
        RandomOp op = rand_op(rng, 2, 5);
        const double d2 = restrict_extend_check(op.W, op.f, pts);
        if (d2 > tol(1e-8)) return fail("polynomial scenario discrepancy " + fmt(d2));
        return ok();
    }});

    return checks;
}

std::vector<Check> norms_suite() {
    std::vector<Check> checks;
    const DiskSampler sampler{16, 128, 20};

    checks.push_back({"closed-form norm values", [sampler]() -> CheckResult {
        const VectorFn fz = scalar_fn(AnalyticFn::identity());
        const VectorFn fz2 = scalar_fn(AnalyticFn::monomial(2));
        const double l1 = lambda_norm(fz, 0.5, sampler).value;
        if (std::abs(l1 - 1.0) > tol(1e-9)) return fail("lambda_{0.5}(z) = " + fmt(l1));
        const double l2 = lambda_norm(fz2, 0.5, sampler).value;
        if (std::abs(l2 - 1.0) > tol(1e-6)) return fail("lambda_{0.5}(z^2) = " + fmt(l2));
        const double l3 = lambda1_norm(fz2, sampler).value;
        if (std::abs(l3 - 3.0) > tol(1e-4)) return fail("lambda_1(z^2) = " + fmt(l3));
        const double h = hinf_nu_norm(fz, WeightSpec{1.0}, sampler).value;
        if (std::abs(h - 2.0 / (3.0 * std::sqrt(3.0))) > tol(1e-6))
            return fail("weighted sup norm of z = " + fmt(h));
        return ok();
    }});

    checks.push_back({"tensor homogeneity ||f x|| = ||f|| ||x||",
                      [sampler]() -> CheckResult {
        std::mt19937 rng(41u);
        for (NormKind nk : {NormKind::l1, NormKind::l2, NormKind::linf}) {
            const NormedSpace sp{3, nk};
            for (int s = 0; s < 8; ++s) {
                const AnalyticFn p = rand_poly(rng, 5);
                const Vec x = make_vec(sp, {rand_coeff(rng), rand_coeff(rng), rand_coeff(rng)});
                const double lhs = lambda_norm(tensor_fn(p, x), 0.5, sampler).value;
                const double rhs = lambda_norm(scalar_fn(p), 0.5, sampler).value * vec_norm(x);
                if (std::abs(lhs - rhs) > tol(1e-9) * (1.0 + rhs))
                    return fail(to_string(nk) + std::string(": ") + fmt(lhs) + " vs " + fmt(rhs));
            }
        }
        return ok();
    }});

    checks.push_back({"triangle inequality", [sampler]() -> CheckResult {
        std::mt19937 rng(43u);
        for (int s = 0; s < 12; ++s) {
            const VectorFn f = scalar_fn(rand_poly(rng, 5));
            const VectorFn g = scalar_fn(rand_poly(rng, 5));
            const double both = lambda_norm(vf_add(f, g), 0.5, sampler).value;
            const double split =
                lambda_norm(f, 0.5, sampler).value + lambda_norm(g, 0.5, sampler).value;
            if (both > split + tol(1e-9)) return fail(fmt(both) + " > " + fmt(split));
        }
        return ok();
    }});

    checks.push_back({"seminorm monotone in alpha", [sampler]() -> CheckResult {
        std::mt19937 rng(47u);
        for (int s = 0; s < 10; ++s) {
            const VectorFn f = scalar_fn(rand_poly(rng, 5));
            double prev = -1.0;
            for (double alpha : {0.25, 0.5, 0.75}) {
                const NormResult n = lambda_norm(f, alpha, sampler);
                const double semi = n.value - vec_norm(f.value(cplx(0.0, 0.0)));
                if (semi + tol(1e-9) < prev) return fail("seminorm decreased in alpha");
                prev = semi;
            }
        }
        return ok();
    }});

    checks.push_back({"two-point and Bloch-form seminorms mutually bounded (factor 10)",
                      [sampler]() -> CheckResult {
        std::mt19937 rng(53u);
        const double F = tol(10.0);
        double lo = 1e300, hi = 0.0;
        for (int s = 0; s < 20; ++s) {
            const VectorFn f = scalar_fn(rand_poly(rng, 8));
            for (double alpha : {0.25, 0.5, 0.75}) {
                const NormResult n = lambda_norm(f, alpha, sampler);
                const double bloch = n.value - vec_norm(f.value(cplx(0.0, 0.0)));
                if (bloch < 1e-12) continue;
                const double est = lipschitz_seminorm_estimate(f, alpha, 2000, 7u);
                const double ratio = est / bloch;
                lo = std::min(lo, ratio);
                hi = std::max(hi, ratio);
                if (ratio > F || ratio < 1.0 / F)
                    return fail("ratio " + fmt(ratio) + " outside [1/" + fmt(F) + ", " + fmt(F) + "]");
            }
        }
        return ok_note("envelope [" + fmt(lo) + ", " + fmt(hi) + "]");
    }});

    checks.push_back({"two-point estimate reaches the antipodal quotient",
                      []() -> CheckResult {
        const double est =
            lipschitz_seminorm_estimate(scalar_fn(AnalyticFn::identity()), 0.5, 500, 3u);
        if (est < 1.41) return fail("estimate " + fmt(est) + " below sqrt(2)");
        return ok();
    }});

    checks.push_back({"little-space membership for representable functions",
                      [sampler]() -> CheckResult {
        std::mt19937 rng(59u);
        for (int s = 0; s < 8; ++s) {
            const LittleProfile p = little_space_profile(scalar_fn(rand_poly(rng, 6)), 0.5, sampler);
            if (p.verdict != Membership::member) return fail("polynomial flagged non-member");
        }
        const LittleProfile p = little_space_profile(
            scalar_fn(AnalyticFn::power(cplx(1.0, 0.0), cplx(0.9, 0.0), 0.5)), 0.5, sampler);
        if (p.verdict != Membership::member) return fail("power variant flagged non-member");
        return ok();
    }});

    return checks;
}

std::vector<Check> criteria_suite() {
    std::vector<Check> checks;
    const DiskSampler sampler{16, 128, 20};
    const ClassifierParams params;
    const NormedSpace s1{1, NormKind::l2};

    auto embed = [s1](double a, double b, AnalyticFn phi) {
        return make_wcop(identity_symbol(s1), make_self_map(std::move(phi)),
                         SpaceSpec{a, s1, SpaceFlavor::big}, SpaceSpec{b, s1, SpaceFlavor::big});
    };

    checks.push_back({"closed-form q values", [=]() -> CheckResult {
        const double q1 = q_criterion(embed(0.5, 0.5, AnalyticFn::identity()), sampler).value;
        if (std::abs(q1 - 1.0) > tol(1e-9)) return fail("q(identity) = " + fmt(q1));
        for (double r : {0.3, 0.6, 0.9}) {
            const double q =
                q_criterion(embed(0.5, 0.5, AnalyticFn::affine(cplx(r, 0.0), cplx(0.0, 0.0))),
                            sampler).value;
            if (std::abs(q - r) > tol(1e-6)) return fail("q(rz) = " + fmt(q) + " for r = " + fmt(r));
        }
        const double qc =
            q_criterion(embed(0.5, 0.5, AnalyticFn::affine(cplx(0.5, 0.0), cplx(0.5, 0.0))),
                        sampler).value;
        if (std::abs(qc - std::sqrt(0.5)) > tol(1e-4)) return fail("q((1+z)/2) = " + fmt(qc));
        return ok();
    }});

    checks.push_back({"exponent-algebra verdicts on the 3x3 grid",
                      [=]() -> CheckResult {
        for (double a : {0.25, 0.5, 0.75})
            for (double b : {0.25, 0.5, 0.75}) {
                const BoundednessReport r =
                    boundedness_verdict(embed(a, b, AnalyticFn::identity()), sampler, params);
                const BoundedVerdict want =
                    a >= b ? BoundedVerdict::bounded : BoundedVerdict::unbounded;
                if (r.verdict != want)
                    return fail("alpha = " + fmt(a) + ", beta = " + fmt(b) + ": got " +
                           to_string(r.verdict));
            }
        return ok();
    }});

    checks.push_back({"compactness dichotomy", [=]() -> CheckResult {
        const WcOp Whalf = embed(0.5, 0.5, AnalyticFn::affine(cplx(0.5, 0.0), cplx(0.0, 0.0)));
        const BoundednessReport bh = boundedness_verdict(Whalf, sampler, params);
        const CompactnessReport ch = compactness_verdict(Whalf, sampler, params, bh);
        if (ch.verdict != CompactVerdict::compact) return fail("z/2 not compact");
        const WcOp Wid = embed(0.5, 0.5, AnalyticFn::identity());
        const BoundednessReport bi = boundedness_verdict(Wid, sampler, params);
        const CompactnessReport ci = compactness_verdict(Wid, sampler, params, bi);
        if (ci.verdict != CompactVerdict::not_compact) return fail("identity not flagged");
        for (const auto& a : ci.annulus)
            if (a.empty || std::abs(a.value - 1.0) > tol(1e-9))
                return fail("identity annulus profile departs from 1");
        return ok();
    }});

    checks.push_back({"Schwarz-Pick quotient below 1 on sampled points",
                      [=]() -> CheckResult {
        std::mt19937 rng(61u);
        std::vector<AnalyticFn> phis = {AnalyticFn::identity(),
                                        AnalyticFn::affine(cplx(0.5, 0.0), cplx(0.0, 0.0)),
                                        AnalyticFn::affine(cplx(0.5, 0.0), cplx(0.5, 0.0)),
                                        AnalyticFn::blaschke(cplx(0.3, 0.0)),
                                        AnalyticFn::blaschke(cplx(0.0, 0.5))};
        for (int s = 0; s < 3; ++s) phis.push_back(rand_self_map(rng, 3).fn);
        for (const auto& phi : phis) {
            const SelfMap m = make_self_map(phi);
            for (double r : sampler.radii())
                for (int k = 0; k < 64; ++k) {
                    const cplx z = std::polar(r, 2.0 * M_PI * k / 64.0);
                    const double num = (1.0 - std::norm(z)) * std::abs(m.deriv(z));
                    const double den = 1.0 - std::norm(m.value(z));
                    if (den > 0.0 && num / den > 1.0 + tol(1e-9))
                        return fail("quotient " + fmt(num / den) + " above 1");
                }
        }
        return ok();
    }});

    checks.push_back({"scaling covariance of q and verdict invariance",
                      [=]() -> CheckResult {
        const NormedSpace s2{2, NormKind::l2};
        std::vector<AnalyticFn> entries = {AnalyticFn::identity(), AnalyticFn::constant(cplx(0.3, 0.0)),
                                           AnalyticFn::zero(), AnalyticFn::monomial(2)};
        const OperatorSymbol psi = make_symbol(s2, s2, entries);
        const SelfMap phi = make_self_map(AnalyticFn::affine(cplx(0.5, 0.0), cplx(0.25, 0.0)));
        const WcOp W = make_wcop(psi, phi, SpaceSpec{0.5, s2, SpaceFlavor::big},
                                 SpaceSpec{0.5, s2, SpaceFlavor::big});
        const BoundednessReport base = boundedness_verdict(W, sampler, params);
        for (double c : {0.5, 2.0, 10.0}) {
            std::vector<AnalyticFn> scaled;
            for (const auto& e : entries) scaled.push_back(AnalyticFn::scale(cplx(c, 0.0), e));
            const WcOp Wc = make_wcop(make_symbol(s2, s2, std::move(scaled)), phi, W.source, W.target);
            const BoundednessReport r = boundedness_verdict(Wc, sampler, params);
            if (std::abs(r.q.value - c * base.q.value) > tol(1e-9) * (1.0 + c * base.q.value))
                return fail("q not homogeneous at c = " + fmt(c));
            if (r.verdict != base.verdict) return fail("verdict changed under scaling");
        }
        return ok();
    }});

    checks.push_back({"sampler monotonicity of q", [=]() -> CheckResult {
        const DiskSampler fine{sampler.depth + 4, 512, sampler.refine};
        std::vector<WcOp> ops;
        ops.push_back(embed(0.5, 0.5, AnalyticFn::affine(cplx(0.5, 0.0), cplx(0.5, 0.0))));
        ops.push_back(embed(0.5, 0.5, AnalyticFn::blaschke(cplx(0.3, 0.0))));
        ops.push_back(embed(0.75, 0.25, AnalyticFn::identity()));
        for (const auto& W : ops) {
            const double coarse_q = q_criterion(W, sampler).value;
            const double fine_q = q_criterion(W, fine).value;
            if (fine_q + tol(1e-12) < coarse_q) return fail("finer sampler lowered q");
            if (fine_q > coarse_q * 1.01 + tol(1e-12)) return fail("q moved by more than 1%");
        }
        return ok();
    }});

    checks.push_back({"little-space verdict examples", [=]() -> CheckResult {
        const WcOp Whalf = embed(0.5, 0.5, AnalyticFn::affine(cplx(0.5, 0.0), cplx(0.0, 0.0)));
        const BoundednessReport bh = boundedness_verdict(Whalf, sampler, params);
        const LittleBoundednessReport lb = little_boundedness_verdict(Whalf, sampler, params, bh);
        if (lb.verdict != LittleBoundedVerdict::sufficient_met)
            return fail("z/2 little-boundedness conditions not met");
        const LittleCompactnessReport lc = little_compactness_verdict(Whalf, sampler, params, bh);
        if (lc.verdict != LittleCompactVerdict::conditions_met)
            return fail("z/2 little-compactness conditions not met");
        const WcOp Wid = embed(0.5, 0.5, AnalyticFn::identity());
        const BoundednessReport bi = boundedness_verdict(Wid, sampler, params);
        const LittleCompactnessReport li = little_compactness_verdict(Wid, sampler, params, bi);
        if (li.verdict != LittleCompactVerdict::not_compact)
            return fail("identity little-compactness not refuted");
        const WcOp Wun = embed(0.25, 0.75, AnalyticFn::identity());
        const BoundednessReport bu = boundedness_verdict(Wun, sampler, params);
        if (!little_compactness_verdict(Wun, sampler, params, bu).refused)
            return fail("unbounded case not refused");
        return ok();
    }});

    checks.push_back({"weighted sup-norm criterion examples", [=]() -> CheckResult {
        const SelfMap id = make_self_map(AnalyticFn::identity());
        const SelfMap rz = make_self_map(AnalyticFn::affine(cplx(0.7, 0.0), cplx(0.0, 0.0)));
        const OperatorSymbol one = identity_symbol(s1);
        const double h1 = hinf_criterion(one, id, 0.5, 0.5, sampler).value;
        if (std::abs(h1 - 1.0) > tol(1e-9)) return fail("identity value " + fmt(h1));
        const double h2 = hinf_criterion(one, rz, 0.5, 0.5, sampler).value;
        if (std::abs(h2 - 1.0) > tol(1e-6)) return fail("contraction value " + fmt(h2));
        const OperatorSymbol zero = make_symbol(s1, s1, {AnalyticFn::zero()});
        if (hinf_criterion(zero, id, 0.5, 0.5, sampler).value > tol(1e-12))
            return fail("zero symbol gives nonzero value");
        return ok();
    }});

    checks.push_back({"set-compactness checker", []() -> CheckResult {
        const DiskSampler s10{10, 128, 16};
        const ClassifierParams params;
        std::vector<VectorFn> dilation;
        for (int k = 1; k <= 10; ++k)
            dilation.push_back(scalar_fn(AnalyticFn::scale(cplx(0.1 * k, 0.0), AnalyticFn::identity())));
        const SetCompactnessReport a = set_compactness_check(dilation, 0.5, s10, params);
        if (a.verdict != SetCompactVerdict::relatively_compact)
            return fail("dilation family not relatively compact");
        std::vector<VectorFn> concentrating;
        for (int k = 1; k <= 10; ++k)
            concentrating.push_back(
                scalar_fn(AnalyticFn::test_fn(cplx(1.0 - std::ldexp(1.0, -k), 0.0), 0.5)));
        const SetCompactnessReport b = set_compactness_check(concentrating, 0.5, s10, params);
        if (b.verdict != SetCompactVerdict::not_compact)
            return fail("boundary-concentrating family not flagged");
        return ok();
    }});

    return checks;
}

std::vector<Check> equivalence_suite() {
    std::vector<Check> checks;

    checks.push_back({"golden-corpus two-sided ratios", []() -> CheckResult {
        const double F = tol(20.0);
        const auto rows = run_sweep(golden_corpus());
        double lo = 1e300, hi = 0.0;
        for (const auto& r : rows) {
            if (!r.has_estimate) continue;
            if (r.criterion <= 0.0) continue;
            lo = std::min(lo, r.ratio);
            hi = std::max(hi, r.ratio);
            if (r.ratio > F || r.ratio < 1.0 / F)
                return fail(r.id + ": ratio " + fmt(r.ratio) + " outside [1/" + fmt(F) + ", " + fmt(F) + "]");
            if (r.id == "identity" && std::abs(r.ratio - 1.0) > tol(0.01))
                return fail("identity ratio " + fmt(r.ratio));
        }
        return ok_note("ratio envelope [" + fmt(lo) + ", " + fmt(hi) + "]");
    }});

    checks.push_back({"sweep determinism", []() -> CheckResult {
        const auto corpus = golden_corpus();
        const std::string a = sweep_csv(run_sweep(corpus));
        const std::string b = sweep_csv(run_sweep(corpus));
        if (a != b) return fail("two in-process sweeps differ");
        return ok();
    }});

    checks.push_back({"corpus round-trip", []() -> CheckResult {
        for (const auto& s : golden_corpus()) {
            const auto j = scenario_to_json(s);
            const auto j2 = scenario_to_json(scenario_from_json(j));
            if (j.dump() != j2.dump()) return fail(s.id + " does not round-trip");
        }
        return ok();
    }});

    return checks;
}

} // namespace

bool run_verify_suite(const std::string& suite, std::ostream& os) {
    std::vector<Check> checks;
    if (suite == "identities")
        checks = identities_suite();
    else if (suite == "norms")
        checks = norms_suite();
    else if (suite == "criteria")
        checks = criteria_suite();
    else if (suite == "equivalence")
        checks = equivalence_suite();
    else
        throw InputError("unknown suite \"" + suite +
                         "\" (expected identities, norms, criteria or equivalence)");

    int failed = 0;
    for (const auto& c : checks) {
        CheckResult r;
        try {
            r = c.run();
        } catch (const Error& e) {
            r = fail(std::string("exception: ") + e.what());
        }
        os << (r.pass ? "[PASS] " : "[FAIL] ") << c.name;
        if (!r.info.empty()) os << ": " << r.info;
        os << "\n";
        if (!r.pass) ++failed;
    }
    os << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed")
       << " (" << checks.size() << " total)\n";
    return failed == 0;
}

} // namespace lipop
