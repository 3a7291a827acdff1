#include "lipop/sampler.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <thread>

namespace lipop {

std::vector<double> DiskSampler::radii() const {
    std::vector<double> r(depth);
    for (int j = 1; j <= depth; ++j) r[j - 1] = 1.0 - std::ldexp(1.0, -j);
    return r;
}

double DiskSampler::r_max() const { return 1.0 - std::ldexp(1.0, -depth); }

int worker_count() {
    static const int n = [] {
        int hw = static_cast<int>(std::thread::hardware_concurrency());
        if (hw < 1) hw = 1;
        if (const char* env = std::getenv("LIPOP_THREADS")) {
            const int cap = std::atoi(env);
            if (cap >= 1) hw = cap;
        }
        return hw;
    }();
    return n;
}

namespace {

[[noreturn]] void throw_nan(cplx z) {
    std::ostringstream os;
    os << "evaluator returned NaN at z = " << z.real() << (z.imag() < 0 ? "" : "+") << z.imag()
       << "i";
    throw EvalError(os.str());
}

} // namespace

SupResult sup_over_disk(const DiskEvaluator& g, const DiskSampler& sampler,
                        const std::vector<cplx>& extra) {
    const std::vector<double> radii = sampler.radii();
    const int J = sampler.depth;
    const int A = sampler.angles;

    // All grid points in deterministic order: origin, then circle-major.
    std::vector<cplx> pts;
    pts.reserve(1 + static_cast<std::size_t>(J) * A);
    pts.push_back(cplx(0.0, 0.0));
    for (int j = 0; j < J; ++j)
        for (int k = 0; k < A; ++k)
            pts.push_back(std::polar(radii[j], 2.0 * M_PI * k / A));

    std::vector<double> vals(pts.size());
    const int workers = worker_count();
    if (workers <= 1 || pts.size() < 512) {
        for (std::size_t i = 0; i < pts.size(); ++i) vals[i] = g(pts[i]);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (pts.size() + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const std::size_t lo = w * chunk;
            const std::size_t hi = std::min(pts.size(), lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi] {
                for (std::size_t i = lo; i < hi; ++i) vals[i] = g(pts[i]);
            });
        }
        for (auto& t : pool) t.join();
    }

    SupResult out;
    out.per_circle.assign(J, 0.0);
    out.cumulative.assign(J, 0.0);

    // Sequential reduction in traversal order; strict > keeps the first
    // maximizer, i.e. the smallest radius then smallest angle index.
    auto consider = [&](double v, cplx z) {
        if (std::isnan(v)) throw_nan(z);
        if (std::isinf(v) && !out.divergent) {
            out.divergent = true;
            out.divergence_point = z;
        }
        if (v > out.value) {
            out.value = v;
            out.witness = z;
        }
    };

    consider(vals[0], pts[0]);
    double running = vals[0];
    std::size_t idx = 1;
    for (int j = 0; j < J; ++j) {
        double circle = 0.0;
        for (int k = 0; k < A; ++k, ++idx) {
            consider(vals[idx], pts[idx]);
            circle = std::max(circle, vals[idx]);
        }
        out.per_circle[j] = circle;
        running = std::max(running, circle);
        out.cumulative[j] = running;
    }

    // Refinement around the best grid cell: two rounds of golden-section in
    // radius then ternary search in angle, bracketed by the neighbouring
    // schedule radii / angles and capped at r_max.
    double r_cur = std::abs(out.witness);
    double th_cur = (r_cur == 0.0) ? 0.0 : std::arg(out.witness);
    int j_best = -1; // -1 means the origin
    for (int j = 0; j < J; ++j)
        if (std::abs(radii[j] - r_cur) < 1e-15) j_best = j;

    const double r_lo0 = (j_best <= 0) ? 0.0 : radii[j_best - 1];
    const double r_hi0 = (j_best < 0) ? radii[0] : radii[std::min(j_best + 1, J - 1)];
    const double dth = 2.0 * M_PI / A;

    auto probe = [&](double r, double th) -> double {
        const cplx z = std::polar(r, th);
        const double v = g(z);
        if (std::isnan(v)) throw_nan(z);
        if (std::isinf(v) && !out.divergent) {
            out.divergent = true;
            out.divergence_point = z;
        }
        if (v > out.value) {
            out.value = v;
            out.witness = z;
            r_cur = r;
            th_cur = th;
        }
        return v;
    };

    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int round = 0; round < 2; ++round) {
        double lo = r_lo0, hi = r_hi0;
        const double th = th_cur;
        double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
        double g1 = probe(x1, th), g2 = probe(x2, th);
        for (int it = 0; it < sampler.refine; ++it) {
            if (g1 < g2) {
                lo = x1;
                x1 = x2;
                g1 = g2;
                x2 = lo + gr * (hi - lo);
                g2 = probe(x2, th);
            } else {
                hi = x2;
                x2 = x1;
                g2 = g1;
                x1 = hi - gr * (hi - lo);
                g1 = probe(x1, th);
            }
        }
        if (r_cur == 0.0) continue; // angle is meaningless at the origin
        double tlo = th_cur - dth, thi = th_cur + dth;
        const double r = r_cur;
        for (int it = 0; it < sampler.refine; ++it) {
            const double t1 = tlo + (thi - tlo) / 3.0;
            const double t2 = thi - (thi - tlo) / 3.0;
            if (probe(r, t1) < probe(r, t2))
                tlo = t1;
            else
                thi = t2;
        }
    }

    for (cplx z : extra) probe(std::abs(z), std::arg(z));

    return out;
}

} // namespace lipop
