#include "lipop/vectorfn.hpp"

#include <cmath>
#include <random>

#include "lipop/classify.hpp"

namespace lipop {

Vec VectorFn::value(cplx z) const {
    std::vector<cplx> v(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) v[i] = comps[i].value(z);
    return Vec{codomain, std::move(v)};
}

Vec VectorFn::deriv(cplx z) const {
    std::vector<cplx> v(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) v[i] = comps[i].deriv(z);
    return Vec{codomain, std::move(v)};
}

VectorFn make_vector_fn(NormedSpace codomain, std::vector<AnalyticFn> comps) {
    if (static_cast<int>(comps.size()) != codomain.dim)
        throw InputError("component count does not match codomain dimension");
    return VectorFn{codomain, std::move(comps)};
}

VectorFn scalar_fn(AnalyticFn f) {
    return VectorFn{NormedSpace{1, NormKind::l2}, {std::move(f)}};
}

VectorFn tensor_fn(const AnalyticFn& f, const Vec& x) {
    std::vector<AnalyticFn> comps;
    comps.reserve(x.entries.size());
    for (cplx e : x.entries) comps.push_back(AnalyticFn::scale(e, f));
    return VectorFn{x.space, std::move(comps)};
}

VectorFn vf_add(const VectorFn& f, const VectorFn& g) {
    if (!(f.codomain == g.codomain)) throw InputError("codomain mismatch in sum");
    std::vector<AnalyticFn> comps;
    comps.reserve(f.comps.size());
    for (std::size_t i = 0; i < f.comps.size(); ++i)
        comps.push_back(AnalyticFn::sum({f.comps[i], g.comps[i]}));
    return VectorFn{f.codomain, std::move(comps)};
}

VectorFn vf_sub(const VectorFn& f, const VectorFn& g) {
    return vf_add(f, vf_scale(cplx(-1.0, 0.0), g));
}

VectorFn vf_scale(cplx c, const VectorFn& f) {
    std::vector<AnalyticFn> comps;
    comps.reserve(f.comps.size());
    for (const auto& fc : f.comps) comps.push_back(AnalyticFn::scale(c, fc));
    return VectorFn{f.codomain, std::move(comps)};
}

NormResult lambda_norm(const VectorFn& f, double alpha, const DiskSampler& sampler,
                       const std::vector<cplx>& extra) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw InputError("lambda_norm expects alpha in (0,1); use lambda1_norm for alpha = 1");
    const double e = 1.0 - alpha;
    auto g = [&](cplx z) { return std::pow(1.0 - std::norm(z), e) * vec_norm(f.deriv(z)); };
    SupResult s = sup_over_disk(g, sampler, extra);
    return NormResult{vec_norm(f.value(cplx(0.0, 0.0))) + s.value, s.witness,
                      std::move(s.cumulative), std::move(s.per_circle)};
}

NormResult lambda1_norm(const VectorFn& f, const DiskSampler& sampler,
                        const std::vector<cplx>& extra) {
    auto gv = [&](cplx z) { return vec_norm(f.value(z)); };
    auto gd = [&](cplx z) { return vec_norm(f.deriv(z)); };
    SupResult sv = sup_over_disk(gv, sampler, extra);
    SupResult sd = sup_over_disk(gd, sampler, extra);
    NormResult out;
    out.value = sv.value + sd.value;
    out.witness = sv.witness;
    out.cumulative.resize(sv.cumulative.size());
    out.per_circle.resize(sv.per_circle.size());
    for (std::size_t j = 0; j < out.cumulative.size(); ++j) {
        out.cumulative[j] = sv.cumulative[j] + sd.cumulative[j];
        out.per_circle[j] = sv.per_circle[j] + sd.per_circle[j];
    }
    return out;
}

NormResult hinf_nu_norm(const VectorFn& f, WeightSpec w, const DiskSampler& sampler) {
    if (w.gamma < 0.0) throw InputError("weight exponent must be >= 0");
    auto g = [&](cplx z) { return std::pow(1.0 - std::norm(z), w.gamma) * vec_norm(f.value(z)); };
    SupResult s = sup_over_disk(g, sampler);
    return NormResult{s.value, s.witness, std::move(s.cumulative), std::move(s.per_circle)};
}

NormResult space_norm(const VectorFn& f, double alpha, const DiskSampler& sampler,
                      const std::vector<cplx>& extra) {
    if (alpha == 1.0) return lambda1_norm(f, sampler, extra);
    return lambda_norm(f, alpha, sampler, extra);
}

namespace {

// 53-bit uniform in [0,1) from two mt19937 words; avoids the
// implementation-defined std distributions.
double uniform01(std::mt19937& rng) {
    const std::uint64_t hi = rng() >> 5;  // 27 bits
    const std::uint64_t lo = rng() >> 6;  // 26 bits
    return (static_cast<double>(hi) * 67108864.0 + static_cast<double>(lo)) *
           (1.0 / 9007199254740992.0);
}

} // namespace

double lipschitz_seminorm_estimate(const VectorFn& f, double alpha, int pair_budget,
                                   unsigned seed) {
    if (pair_budget < 1) throw InputError("pair budget must be >= 1");
    double best = 0.0;
    auto quotient = [&](cplx z1, cplx z2) {
        const double d = std::abs(z1 - z2);
        if (d < 1e-14) return;
        const double q = vec_norm(vec_sub(f.value(z1), f.value(z2))) / std::pow(d, alpha);
        best = std::max(best, q);
    };

    // Structured boundary pairs (antipodal pairs carry the diameter-2
    // quotients the random sample essentially never hits).
    const int B = 16;
    for (int j = 0; j < B; ++j)
        for (int k = 0; k < j; ++k)
            quotient(std::polar(1.0, 2.0 * M_PI * j / B), std::polar(1.0, 2.0 * M_PI * k / B));

    // Seeded pseudo-random pairs in the closed disk.
    std::mt19937 rng(seed);
    for (int i = 0; i < pair_budget; ++i) {
        const double r1 = std::sqrt(uniform01(rng)), t1 = 2.0 * M_PI * uniform01(rng);
        const double r2 = std::sqrt(uniform01(rng)), t2 = 2.0 * M_PI * uniform01(rng);
        quotient(std::polar(r1, t1), std::polar(r2, t2));
    }

    // Near-diagonal pairs around the weighted-derivative witness; the pair
    // separation is tied to the distance to the boundary, which is what makes
    // the two-point quotient comparable to the Bloch quantity there.
    DiskSampler light{12, 64, 16};
    const cplx w = (alpha < 1.0) ? lambda_norm(f, alpha, light).witness
                                 : lambda1_norm(f, light).witness;
    const double margin = 1.0 - std::abs(w);
    for (int s = 0; s <= 12; ++s) {
        const double h = margin * std::ldexp(1.0, -s);
        for (int d = 0; d < 8; ++d) {
            const cplx dir = std::polar(1.0, 2.0 * M_PI * d / 8.0);
            const cplx z1 = w + 0.5 * h * dir;
            const cplx z2 = w - 0.5 * h * dir;
            if (std::abs(z1) <= 1.0 && std::abs(z2) <= 1.0) quotient(z1, z2);
        }
    }
    return best;
}

LittleProfile little_space_profile(const VectorFn& f, double alpha, const DiskSampler& sampler) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw InputError("little-space profile expects alpha in (0,1)");
    NormResult n = lambda_norm(f, alpha, sampler);
    LittleProfile out;
    out.radii = sampler.radii();
    out.values = n.per_circle;
    const Trend t = classify_decay(out.values, n.value, ClassifierParams{});
    out.verdict = (t == Trend::decays)     ? Membership::member
                  : (t == Trend::plateaus) ? Membership::not_member
                                           : Membership::inconclusive;
    return out;
}

const char* to_string(Membership m) {
    switch (m) {
        case Membership::member: return "member";
        case Membership::not_member: return "not_member";
        default: return "inconclusive";
    }
}

} // namespace lipop
