// Acceptance suite: end-to-end checks of the toolkit's contract, one
// criterion per line.  Every tolerance is pinned here; the binary exits
// nonzero if any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "lipop/scenario.hpp"

using namespace lipop;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw Failure(msg);
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

double u01(std::mt19937& rng) {
    const std::uint64_t hi = rng() >> 5, lo = rng() >> 6;
    return (static_cast<double>(hi) * 67108864.0 + static_cast<double>(lo)) *
           (1.0 / 9007199254740992.0);
}

cplx rand_cplx(std::mt19937& rng) { return cplx(2.0 * u01(rng) - 1.0, 2.0 * u01(rng) - 1.0); }

cplx rand_disk(std::mt19937& rng, double rmax) {
    return std::polar(rmax * std::sqrt(u01(rng)), 2.0 * M_PI * u01(rng));
}

AnalyticFn rand_poly(std::mt19937& rng, int max_deg) {
    std::vector<cplx> c(1 + rng() % (max_deg + 1));
    for (auto& e : c) e = rand_cplx(rng);
    return AnalyticFn::poly(std::move(c));
}

SelfMap rand_self_map(std::mt19937& rng, int max_deg) {
    const AnalyticFn raw = rand_poly(rng, max_deg);
    double bsup = 1e-9;
    for (int k = 0; k < 512; ++k)
        bsup = std::max(bsup, std::abs(raw.value(std::polar(1.0, 2.0 * M_PI * k / 512.0))));
    return make_self_map(AnalyticFn::scale(cplx((0.4 + 0.55 * u01(rng)) / bsup, 0.0), raw));
}

const NormedSpace kS1{1, NormKind::l2};
const NormedSpace kS2{2, NormKind::l2};
const DiskSampler kDefault;       // J = 20, 256 angles, 24 refine
const ClassifierParams kParams;   // documented defaults

WcOp embed(double alpha, double beta, AnalyticFn phi,
           AnalyticFn psi_entry = AnalyticFn::constant(cplx(1, 0))) {
    return make_wcop(make_symbol(kS1, kS1, {std::move(psi_entry)}),
                     make_self_map(std::move(phi)), SpaceSpec{alpha, kS1, SpaceFlavor::big},
                     SpaceSpec{beta, kS1, SpaceFlavor::big});
}

struct RandomOp {
    WcOp W;
    VectorFn f;
};

RandomOp random_polynomial_op(std::mt19937& rng) {
    std::vector<AnalyticFn> entries;
    for (int i = 0; i < 4; ++i) entries.push_back(rand_poly(rng, 8));
    WcOp W = make_wcop(make_symbol(kS2, kS2, std::move(entries)), rand_self_map(rng, 4),
                       SpaceSpec{0.5, kS2, SpaceFlavor::big},
                       SpaceSpec{0.5, kS2, SpaceFlavor::big});
    VectorFn f = make_vector_fn(kS2, {rand_poly(rng, 8), rand_poly(rng, 8)});
    return RandomOp{std::move(W), std::move(f)};
}

// 1. apply_deriv vs central finite difference of apply, 100 scenarios x 20 points.
void criterion_derivative_identity() {
    std::mt19937 rng(1001u);
    for (int s = 0; s < 100; ++s) {
        const RandomOp op = random_polynomial_op(rng);
        for (int t = 0; t < 20; ++t) {
            const cplx z = rand_disk(rng, 0.9);
            const double h = 1e-6;
            const Vec fd = vec_scale(cplx(1.0 / (2.0 * h), 0.0),
                                     vec_sub(apply(op.W, op.f, z + h), apply(op.W, op.f, z - h)));
            const Vec ex = apply_deriv(op.W, op.f, z);
            const double rel = vec_norm(vec_sub(fd, ex)) / (1.0 + vec_norm(ex));
            require(rel <= 1e-6, "relative error " + fmt(rel) + " in scenario " + fmt(s));
        }
    }
}

// 2. DW = W(phi' psi, phi) o D + W(psi', phi) pointwise to 1e-10.
void criterion_decomposition() {
    std::mt19937 rng(1001u); // same corpus as criterion 1
    for (int s = 0; s < 100; ++s) {
        const RandomOp op = random_polynomial_op(rng);
        const WcOp W1 =
            make_wcop(op.W.psi.scaled_by(op.W.phi.fn.derivative_fn()), op.W.phi, op.W.source,
                      op.W.target);
        const WcOp W2 = make_wcop(op.W.psi.derivative_symbol(), op.W.phi, op.W.source, op.W.target);
        const VectorFn df =
            make_vector_fn(kS2, {op.f.comps[0].derivative_fn(), op.f.comps[1].derivative_fn()});
        for (int t = 0; t < 20; ++t) {
            const cplx z = rand_disk(rng, 0.95);
            const Vec lhs = apply_deriv(op.W, op.f, z);
            const Vec rhs = vec_add(apply(W1, df, z), apply(W2, op.f, z));
            const double err = vec_norm(vec_sub(lhs, rhs));
            require(err <= 1e-10, "pointwise gap " + fmt(err));
        }
    }
}

// 3. f_{a,x}(a) = 0, weighted derivative recovers x, family norm <= 3 ||x||.
void criterion_test_functions() {
    std::mt19937 rng(1003u);
    for (int s = 0; s < 50; ++s) {
        const cplx a = std::polar(0.05 + 0.9 * u01(rng), 2.0 * M_PI * u01(rng));
        const double alpha = 0.1 + 0.85 * u01(rng);
        std::vector<cplx> xe = {rand_cplx(rng), rand_cplx(rng)};
        const Vec x = make_vec(kS2, xe);
        const TestFnProperties p = test_fn_properties(a, x, alpha);
        require(vec_norm(p.value_at_a) <= 1e-12,
                "value at a is " + fmt(vec_norm(p.value_at_a)));
        const Vec scaled = vec_scale(cplx(std::pow(1.0 - std::norm(a), 1.0 - alpha), 0.0),
                                     p.deriv_at_a);
        require(vec_norm(vec_sub(scaled, x)) <= 1e-9,
                "weighted derivative misses x by " + fmt(vec_norm(vec_sub(scaled, x))));
        const double n =
            lambda_norm(tensor_fn(AnalyticFn::test_fn(a, alpha), x), alpha, kDefault).value;
        require(n <= 3.0 * vec_norm(x) + 1e-6,
                "family norm " + fmt(n) + " exceeds 3||x|| at |a| = " + fmt(std::abs(a)) +
                    ", alpha = " + fmt(alpha));
    }
}

// 4. q closed forms: identity gives 1, r-dilations give r.
void criterion_q_closed_forms() {
    const double q1 = q_criterion(embed(0.5, 0.5, AnalyticFn::identity()), kDefault).value;
    require(std::abs(q1 - 1.0) <= 1e-9, "q(identity) = " + fmt(q1));
    for (double r : {0.3, 0.6, 0.9}) {
        const double q =
            q_criterion(embed(0.5, 0.5, AnalyticFn::affine(cplx(r, 0), cplx(0, 0))), kDefault)
                .value;
        require(std::abs(q - r) <= 1e-6, "q(" + fmt(r) + " z) = " + fmt(q));
    }
}

// 5. Exponent-algebra verdicts over the 3x3 grid.  The quantity for phi = id
// is (1-|z|^2)^(alpha-beta), finite exactly when alpha >= beta (the worked
// boundedness examples and the governing formula agree on this direction);
// the alpha < beta cases must be flagged UNBOUNDED by geometric growth.
void criterion_exponent_grid() {
    for (double a : {0.25, 0.5, 0.75})
        for (double b : {0.25, 0.5, 0.75}) {
            const BoundednessReport r =
                boundedness_verdict(embed(a, b, AnalyticFn::identity()), kDefault, kParams);
            const bool want_bounded = a >= b;
            if (want_bounded) {
                require(r.verdict == BoundedVerdict::bounded,
                        "alpha=" + fmt(a) + " beta=" + fmt(b) + " not bounded");
            } else {
                require(r.verdict == BoundedVerdict::unbounded,
                        "alpha=" + fmt(a) + " beta=" + fmt(b) + " not unbounded");
                require(r.q_finiteness == Finiteness::infinite,
                        "growth detection missed alpha=" + fmt(a) + " beta=" + fmt(b));
            }
        }
}

// 6. Compactness dichotomy: z/2 compact, identity not compact with annulus
// profile pinned at 1.
void criterion_compactness_dichotomy() {
    const WcOp Whalf = embed(0.5, 0.5, AnalyticFn::affine(cplx(0.5, 0), cplx(0, 0)));
    const BoundednessReport bh = boundedness_verdict(Whalf, kDefault, kParams);
    const CompactnessReport ch = compactness_verdict(Whalf, kDefault, kParams, bh);
    require(ch.verdict == CompactVerdict::compact, "z/2 scenario not compact");

    const WcOp Wid = embed(0.5, 0.5, AnalyticFn::identity());
    const BoundednessReport bi = boundedness_verdict(Wid, kDefault, kParams);
    const CompactnessReport ci = compactness_verdict(Wid, kDefault, kParams, bi);
    require(ci.verdict == CompactVerdict::not_compact, "identity scenario not flagged");
    for (const auto& ap : ci.annulus)
        require(!ap.empty && std::abs(ap.value - 1.0) <= 1e-9,
                "annulus value at delta = " + fmt(ap.delta) + " is " + fmt(ap.value));
}

// 7. Two-point seminorm estimate and Bloch-form seminorm within factor 10.
void criterion_hardy_littlewood() {
    std::mt19937 rng(1007u);
    for (int s = 0; s < 20; ++s) {
        const VectorFn f = scalar_fn(rand_poly(rng, 8));
        for (double alpha : {0.25, 0.5, 0.75}) {
            const double bloch =
                lambda_norm(f, alpha, kDefault).value - vec_norm(f.value(cplx(0, 0)));
            if (bloch < 1e-12) continue;
            const double est = lipschitz_seminorm_estimate(f, alpha, 2000, 77u);
            const double ratio = est / bloch;
            require(ratio <= 10.0 && ratio >= 0.1,
                    "ratio " + fmt(ratio) + " at alpha = " + fmt(alpha));
        }
    }
}

// 8. Equivalence sweep on the golden corpus: ratios within [1/20, 20] and
// the identity scenario pinned near 1.
void criterion_equivalence_sweep() {
    const auto rows = run_sweep(golden_corpus());
    require(rows.size() == 30, "corpus size " + fmt(static_cast<double>(rows.size())));
    bool saw_identity = false;
    for (const auto& r : rows) {
        if (!r.has_estimate) continue;
        require(r.ratio <= 20.0 && r.ratio >= 0.05,
                r.id + ": ratio " + fmt(r.ratio) + " outside [1/20, 20]");
        if (r.id == "identity") {
            saw_identity = true;
            require(r.ratio >= 0.99 && r.ratio <= 1.01, "identity ratio " + fmt(r.ratio));
        }
    }
    require(saw_identity, "identity scenario missing from the sweep");
}

// 9. Non-compactness witness growth for the identity scenario.
void criterion_witness_growth() {
    const WcOp Wid = embed(0.5, 0.5, AnalyticFn::identity());
    std::vector<cplx> zs;
    for (int n = 2; n <= 10; ++n) zs.push_back(cplx(1.0 - std::ldexp(1.0, -n), 0));
    const auto rows = noncompact_witness(Wid, zs, kDefault, 2);
    for (const auto& r : rows)
        require(r.image_norm >= r.n / (r.n + 1.0) - 1e-3,
                "||W f_n|| = " + fmt(r.image_norm) + " below n/(n+1) at n = " + fmt(r.n));
}

// 10. Approximation operators: L_n exact on degree <= n, K_r converging.
void criterion_approximation_operators() {
    std::mt19937 rng(1010u);
    for (int s = 0; s < 20; ++s) {
        const AnalyticFn p = rand_poly(rng, 8);
        const VectorFn f = scalar_fn(p);
        const VectorFn t = truncate(f, 8);
        for (int k = 0; k < 10; ++k) {
            const cplx z = rand_disk(rng, 1.0);
            require(std::abs(t.comps[0].value(z) - p.value(z)) <= 1e-12,
                    "truncation not exact on a degree-8 polynomial");
        }
    }
    const VectorFn fz = scalar_fn(AnalyticFn::identity());
    double prev = 1e9;
    for (double r : {0.9, 0.99, 0.999}) {
        const double d = lambda_norm(vf_sub(dilate(fz, r), fz), 0.5, kDefault).value;
        require(d < prev, "dilation distance not decreasing at r = " + fmt(r));
        prev = d;
    }
    require(prev < 1e-2, "dilation distance at r = 0.999 is " + fmt(prev));
}

// 11. Set-compactness checker on the dilation family and the
// boundary-concentrating test-function family (sampler depth matched to the
// family so condition (iii) is probed on every concentration radius).
void criterion_set_compactness() {
    const DiskSampler s10{10, 256, 24};
    std::vector<VectorFn> dilation;
    for (int k = 1; k <= 10; ++k)
        dilation.push_back(
            scalar_fn(AnalyticFn::scale(cplx(0.1 * k, 0), AnalyticFn::identity())));
    const SetCompactnessReport a = set_compactness_check(dilation, 0.5, s10, kParams);
    require(a.verdict == SetCompactVerdict::relatively_compact,
            "dilation family verdict is not relatively_compact");

    std::vector<VectorFn> concentrating;
    for (int k = 1; k <= 10; ++k)
        concentrating.push_back(
            scalar_fn(AnalyticFn::test_fn(cplx(1.0 - std::ldexp(1.0, -k), 0), 0.5)));
    const SetCompactnessReport b = set_compactness_check(concentrating, 0.5, s10, kParams);
    require(b.verdict == SetCompactVerdict::not_compact,
            "concentrating family not flagged via condition (iii)");
    require(b.family_decay == Trend::plateaus, "family profile did not plateau");
}

// 12. Byte-identical sweeps through the CLI across thread counts.
void criterion_sweep_determinism() {
    auto run = [](const std::string& env, const std::string& out) {
        const std::string cmd = env + " " + LIPOP_BIN + " sweep builtin " + out + " 2>/dev/null";
        const int status = std::system(cmd.c_str());
        require(WIFEXITED(status) && WEXITSTATUS(status) == 0, "sweep failed under " + env);
    };
    auto slurp = [](const std::string& path) {
        std::ifstream f(path, std::ios::binary);
        require(f.good(), "missing sweep output " + path);
        std::ostringstream ss;
        ss << f.rdbuf();
        return ss.str();
    };
    run("LIPOP_THREADS=1", "acc_sweep_t1.csv");
    run("LIPOP_THREADS=8", "acc_sweep_t8.csv");
    run("LIPOP_THREADS=8", "acc_sweep_t8b.csv");
    const std::string a = slurp("acc_sweep_t1.csv");
    const std::string b = slurp("acc_sweep_t8.csv");
    const std::string c = slurp("acc_sweep_t8b.csv");
    require(!a.empty() && a == b && b == c, "sweep outputs differ across runs/threads");
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void()> run;
    };
    const std::vector<Criterion> criteria = {
        {"derivative identity suite (100 x 20, rel 1e-6)", criterion_derivative_identity},
        {"operator decomposition DW (pointwise 1e-10)", criterion_decomposition},
        {"test-function identities and 3||x|| family bound", criterion_test_functions},
        {"criterion closed forms q(id)=1, q(rz)=r", criterion_q_closed_forms},
        {"exponent-algebra verdicts on the 3x3 grid", criterion_exponent_grid},
        {"compactness dichotomy (z/2 vs identity)", criterion_compactness_dichotomy},
        {"Hardy-Littlewood mutual boundedness (factor 10)", criterion_hardy_littlewood},
        {"equivalence sweep envelope and identity ratio", criterion_equivalence_sweep},
        {"non-compactness witness growth n/(n+1)", criterion_witness_growth},
        {"approximation operators L_n and K_r", criterion_approximation_operators},
        {"set-compactness checker (dilation vs concentrating family)", criterion_set_compactness},
        {"sweep determinism across LIPOP_THREADS", criterion_sweep_determinism},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string msg;
        try {
            criteria[i].run();
        } catch (const std::exception& e) {
            msg = e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        char line[256];
        std::snprintf(line, sizeof line, "[%s] %2zu. %s (%.2fs)", msg.empty() ? "PASS" : "FAIL",
                      i + 1, criteria[i].name, secs);
        std::cout << line;
        if (!msg.empty()) std::cout << "\n       " << msg;
        std::cout << "\n";
        if (!msg.empty()) ++failed;
    }
    if (failed == 0)
        std::cout << "acceptance: all 12 criteria passed\n";
    else
        std::cout << "acceptance: " << failed << " criterion(s) failed\n";
    return failed == 0 ? 0 : 1;
}
