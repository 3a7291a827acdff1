#include "lipop/wcop.hpp"

#include <cmath>

namespace lipop {

Mat OperatorSymbol::eval_at(cplx z) const {
    std::vector<cplx> e(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) e[i] = entries[i].value(z);
    return Mat{domain, codomain, std::move(e)};
}

Mat OperatorSymbol::deriv_at(cplx z) const {
    std::vector<cplx> e(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) e[i] = entries[i].deriv(z);
    return Mat{domain, codomain, std::move(e)};
}

OperatorSymbol OperatorSymbol::derivative_symbol() const {
    std::vector<AnalyticFn> d;
    d.reserve(entries.size());
    for (const auto& e : entries) d.push_back(e.derivative_fn());
    return OperatorSymbol{domain, codomain, std::move(d)};
}

OperatorSymbol OperatorSymbol::scaled_by(const AnalyticFn& s) const {
    std::vector<AnalyticFn> d;
    d.reserve(entries.size());
    for (const auto& e : entries) d.push_back(AnalyticFn::product(s, e));
    return OperatorSymbol{domain, codomain, std::move(d)};
}

OperatorSymbol make_symbol(NormedSpace domain, NormedSpace codomain,
                           std::vector<AnalyticFn> entries) {
    if (entries.size() != static_cast<std::size_t>(domain.dim) * codomain.dim)
        throw InputError("symbol entry grid does not match the space dimensions");
    return OperatorSymbol{domain, codomain, std::move(entries)};
}

OperatorSymbol identity_symbol(NormedSpace space) {
    std::vector<AnalyticFn> e;
    e.reserve(static_cast<std::size_t>(space.dim) * space.dim);
    for (int i = 0; i < space.dim; ++i)
        for (int j = 0; j < space.dim; ++j)
            e.push_back(AnalyticFn::constant(i == j ? cplx(1.0, 0.0) : cplx(0.0, 0.0)));
    return OperatorSymbol{space, space, std::move(e)};
}

OperatorSymbol constant_symbol(const Mat& A) {
    std::vector<AnalyticFn> e;
    e.reserve(A.entries.size());
    for (cplx v : A.entries) e.push_back(AnalyticFn::constant(v));
    return OperatorSymbol{A.domain, A.codomain, std::move(e)};
}

WcOp make_wcop(OperatorSymbol psi, SelfMap phi, SpaceSpec source, SpaceSpec target) {
    if (!(psi.domain == source.space) || !(psi.codomain == target.space))
        throw InputError("symbol spaces do not match the source/target spaces");
    if (!(source.alpha > 0.0 && source.alpha <= 1.0) ||
        !(target.alpha > 0.0 && target.alpha <= 1.0))
        throw InputError("space exponents must lie in (0, 1]");
    return WcOp{std::move(psi), std::move(phi), source, target};
}

Vec apply(const WcOp& W, const VectorFn& f, cplx z) {
    if (!(f.codomain == W.source.space))
        throw InputError("function codomain does not match the operator source space");
    require_in_closed_disk(z);
    return mat_vec(W.psi.eval_at(z), f.value(W.phi.value(z)));
}

Vec apply_deriv(const WcOp& W, const VectorFn& f, cplx z) {
    if (!(f.codomain == W.source.space))
        throw InputError("function codomain does not match the operator source space");
    require_in_closed_disk(z);
    const cplx w = W.phi.value(z);
    const Vec term1 = vec_scale(W.phi.deriv(z), mat_vec(W.psi.eval_at(z), f.deriv(w)));
    const Vec term2 = mat_vec(W.psi.deriv_at(z), f.value(w));
    return vec_add(term1, term2);
}

NormResult image_space_norm(const WcOp& W, const VectorFn& f, const DiskSampler& sampler,
                            const std::vector<cplx>& extra) {
    const double beta = W.target.alpha;
    if (beta == 1.0) {
        auto gv = [&](cplx z) { return vec_norm(apply(W, f, z)); };
        auto gd = [&](cplx z) { return vec_norm(apply_deriv(W, f, z)); };
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
    const double e = 1.0 - beta;
    auto g = [&](cplx z) {
        return std::pow(1.0 - std::norm(z), e) * vec_norm(apply_deriv(W, f, z));
    };
    SupResult s = sup_over_disk(g, sampler, extra);
    return NormResult{vec_norm(apply(W, f, cplx(0.0, 0.0))) + s.value, s.witness,
                      std::move(s.cumulative), std::move(s.per_circle)};
}

VectorFn dilate(const VectorFn& f, double r) {
    std::vector<AnalyticFn> comps;
    comps.reserve(f.comps.size());
    for (const auto& c : f.comps) comps.push_back(c.dilated(r));
    return VectorFn{f.codomain, std::move(comps)};
}

VectorFn truncate(const VectorFn& f, int n) {
    if (n < 0) throw InputError("truncation degree must be >= 0");
    std::vector<AnalyticFn> comps;
    comps.reserve(f.comps.size());
    for (const auto& c : f.comps) {
        std::vector<cplx> coeffs(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) coeffs[k] = c.taylor_coeff(static_cast<std::size_t>(k));
        comps.push_back(AnalyticFn::poly(std::move(coeffs)));
    }
    return VectorFn{f.codomain, std::move(comps)};
}

VectorFn t_psi(const OperatorSymbol& psi, const Vec& x) {
    if (x.space.dim != psi.domain.dim)
        throw InputError("vector dimension does not match the symbol domain");
    std::vector<AnalyticFn> comps;
    comps.reserve(psi.codomain.dim);
    for (int i = 0; i < psi.codomain.dim; ++i) {
        std::vector<AnalyticFn> row;
        row.reserve(psi.domain.dim);
        for (int j = 0; j < psi.domain.dim; ++j)
            row.push_back(AnalyticFn::scale(x.entries[j], psi.at(i, j)));
        comps.push_back(AnalyticFn::sum(std::move(row)));
    }
    return VectorFn{psi.codomain, std::move(comps)};
}

VectorFn multiply_phik(const SelfMap& phi, int k, const VectorFn& f) {
    if (k < 1) throw InputError("multiplier power must be >= 1");
    const AnalyticFn phik = phi.fn.pow_int(k);
    std::vector<AnalyticFn> comps;
    comps.reserve(f.comps.size());
    for (const auto& c : f.comps) comps.push_back(AnalyticFn::product(phik, c));
    return VectorFn{f.codomain, std::move(comps)};
}

Vec taylor_functional(const VectorFn& f, int k) {
    if (k < 0) throw InputError("coefficient index must be >= 0");
    std::vector<cplx> v(f.comps.size());
    for (std::size_t i = 0; i < f.comps.size(); ++i)
        v[i] = f.comps[i].taylor_coeff(static_cast<std::size_t>(k));
    return Vec{f.codomain, std::move(v)};
}

double restrict_extend_check(const WcOp& W, const VectorFn& f,
                             const std::vector<cplx>& boundary_points) {
    double worst = 0.0;
    for (cplx w : boundary_points) {
        if (std::abs(std::abs(w) - 1.0) > 1e-9)
            throw InputError("restrict/extend check expects unit-modulus points");
        const Vec direct = apply(W, f, w);
        // Radial values at j = 19, 20; the limit along z_j = (1 - 2^-j) w is
        // linear in 2^-j to first order, so 2 p_20 - p_19 removes that term.
        const Vec p19 = apply(W, f, (1.0 - std::ldexp(1.0, -19)) * w);
        const Vec p20 = apply(W, f, (1.0 - std::ldexp(1.0, -20)) * w);
        const Vec proxy = vec_sub(vec_scale(cplx(2.0, 0.0), p20), p19);
        worst = std::max(worst, vec_norm(vec_sub(direct, proxy)));
    }
    return worst;
}

} // namespace lipop
