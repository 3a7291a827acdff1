#include "lipop/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lipop {

const char* to_string(BoundedVerdict v) {
    switch (v) {
        case BoundedVerdict::bounded: return "bounded";
        case BoundedVerdict::unbounded: return "unbounded";
        default: return "inconclusive";
    }
}

const char* to_string(CompactVerdict v) {
    switch (v) {
        case CompactVerdict::compact: return "compact";
        case CompactVerdict::not_compact: return "not_compact";
        default: return "inconclusive";
    }
}

const char* to_string(LittleBoundedVerdict v) {
    switch (v) {
        case LittleBoundedVerdict::sufficient_met: return "sufficient_conditions_met";
        case LittleBoundedVerdict::not_met: return "not_met";
        default: return "inconclusive";
    }
}

const char* to_string(LittleCompactVerdict v) {
    switch (v) {
        case LittleCompactVerdict::conditions_met: return "compact_conditions_met";
        case LittleCompactVerdict::not_compact: return "not_compact";
        default: return "inconclusive";
    }
}

const char* to_string(SetCompactVerdict v) {
    switch (v) {
        case SetCompactVerdict::relatively_compact: return "relatively_compact";
        case SetCompactVerdict::not_compact: return "not_compact";
        default: return "inconclusive";
    }
}

namespace {

constexpr double kBoundaryEps = 1e-14;

double weighted_symbol_norm(const WcOp& W, cplx z) {
    const double e = 1.0 - W.target.alpha;
    return std::pow(1.0 - std::norm(z), e) * std::abs(W.phi.deriv(z)) *
           op_norm(W.psi.eval_at(z));
}

} // namespace

double q_quantity(const WcOp& W, cplx z) {
    const double num = weighted_symbol_norm(W, z);
    const double one_minus_alpha = 1.0 - W.source.alpha;
    if (one_minus_alpha < 1e-15) return num; // alpha = 1: no denominator
    const double m2 = std::max(0.0, 1.0 - std::norm(W.phi.value(z)));
    if (m2 < kBoundaryEps)
        return num < kBoundaryEps ? 0.0 : std::numeric_limits<double>::infinity();
    return num * std::pow(m2, -one_minus_alpha);
}

QReport q_criterion(const WcOp& W, const DiskSampler& sampler) {
    SupResult s = sup_over_disk([&](cplx z) { return q_quantity(W, z); }, sampler);
    return QReport{s.value,      s.witness,   std::move(s.cumulative),
                   std::move(s.per_circle), s.divergent, s.divergence_point};
}

PsiNormReport psi_lambda_norm(const OperatorSymbol& psi, double beta, const DiskSampler& sampler) {
    PsiNormReport out;
    if (beta == 1.0) {
        SupResult sv = sup_over_disk([&](cplx z) { return op_norm(psi.eval_at(z)); }, sampler);
        SupResult sd = sup_over_disk([&](cplx z) { return op_norm(psi.deriv_at(z)); }, sampler);
        out.value = sv.value + sd.value;
        out.cumulative.resize(sv.cumulative.size());
        for (std::size_t j = 0; j < out.cumulative.size(); ++j)
            out.cumulative[j] = sv.cumulative[j] + sd.cumulative[j];
        out.per_circle = sd.per_circle;
        return out;
    }
    if (!(beta > 0.0 && beta < 1.0)) throw InputError("symbol norm expects beta in (0, 1]");
    const double e = 1.0 - beta;
    SupResult s = sup_over_disk(
        [&](cplx z) { return std::pow(1.0 - std::norm(z), e) * op_norm(psi.deriv_at(z)); },
        sampler);
    out.value = op_norm(psi.eval_at(cplx(0.0, 0.0))) + s.value;
    out.cumulative = std::move(s.cumulative);
    out.per_circle = std::move(s.per_circle);
    return out;
}

BoundednessReport boundedness_verdict(const WcOp& W, const DiskSampler& sampler,
                                      const ClassifierParams& params) {
    BoundednessReport out;
    out.q = q_criterion(W, sampler);
    out.psi = psi_lambda_norm(W.psi, W.target.alpha, sampler);
    out.q_finiteness =
        out.q.divergent ? Finiteness::infinite : classify_finiteness(out.q.cumulative, params);
    out.psi_finiteness = classify_finiteness(out.psi.cumulative, params);
    if (out.q_finiteness == Finiteness::infinite || out.psi_finiteness == Finiteness::infinite)
        out.verdict = BoundedVerdict::unbounded;
    else if (out.q_finiteness == Finiteness::finite && out.psi_finiteness == Finiteness::finite)
        out.verdict = BoundedVerdict::bounded;
    else
        out.verdict = BoundedVerdict::inconclusive;
    return out;
}

CompactnessReport compactness_verdict(const WcOp& W, const DiskSampler& sampler,
                                      const ClassifierParams& params,
                                      const BoundednessReport& bounded) {
    CompactnessReport out;
    if (bounded.verdict != BoundedVerdict::bounded) {
        out.refused = true;
        out.note = std::string("compactness check refused: boundedness verdict is ") +
                   to_string(bounded.verdict);
        return out;
    }

    std::vector<double> deltas = params.deltas;
    std::sort(deltas.begin(), deltas.end());
    out.annulus.reserve(deltas.size());
    for (double d : deltas) out.annulus.push_back(AnnulusPoint{d, 0.0, true});

    // One base-grid pass; T(delta) = max of the q-quantity over |phi(z)| > delta.
    const std::vector<double> radii = sampler.radii();
    auto visit = [&](cplx z) {
        const double m = std::abs(W.phi.value(z));
        double q = -1.0;
        for (auto& ap : out.annulus) {
            if (m > ap.delta) {
                if (q < 0.0) q = q_quantity(W, z);
                ap.empty = false;
                ap.value = std::max(ap.value, q);
            }
        }
    };
    visit(cplx(0.0, 0.0));
    for (double r : radii)
        for (int k = 0; k < sampler.angles; ++k)
            visit(std::polar(r, 2.0 * M_PI * k / sampler.angles));

    // |phi| never exceeds delta_max anywhere on the closed disk (boundary
    // certificate + maximum modulus), so the boundary-approach filter is
    // empty and the limit condition holds vacuously.
    if (W.phi.sup_modulus_certificate <= deltas.back() + 1e-15) {
        out.verdict = CompactVerdict::compact;
        return out;
    }

    int top = -1;
    for (std::size_t i = 0; i < out.annulus.size(); ++i)
        if (!out.annulus[i].empty) top = static_cast<int>(i);
    if (top < 0) {
        out.verdict = CompactVerdict::inconclusive;
        out.note = "no sampled point reaches the annulus schedule";
        return out;
    }
    const AnnulusPoint* first = nullptr;
    for (const auto& a : out.annulus)
        if (!a.empty) {
            first = &a;
            break;
        }
    const bool reaches_dmax = top + 1 == static_cast<int>(out.annulus.size());
    // Compact when the deepest annulus value has hit the absolute floor, or
    // when the profile has decayed geometrically across the delta schedule
    // (the same extrapolation rule the radial classifiers use).
    const double decay_floor =
        first ? params.decay_drop * params.decay_drop * first->value : 0.0;
    if (reaches_dmax &&
        out.annulus[top].value <=
            std::max(params.abs_tol * (1.0 + bounded.q.value), decay_floor)) {
        out.verdict = CompactVerdict::compact;
        return out;
    }
    const bool no_decay =
        top >= 1 && first && first->value > 0.0 &&
        std::all_of(out.annulus.begin(), out.annulus.end(), [&](const AnnulusPoint& a) {
            return a.empty || a.value >= 0.5 * first->value;
        });
    if (no_decay) {
        out.verdict = CompactVerdict::not_compact;
        return out;
    }
    out.verdict = CompactVerdict::inconclusive;
    if (!reaches_dmax)
        out.note = "sampler does not reach the deepest annulus; deepen the radius schedule";
    return out;
}

LittleBoundednessReport little_boundedness_verdict(const WcOp& W, const DiskSampler& sampler,
                                                   const ClassifierParams& params,
                                                   const BoundednessReport& bounded) {
    LittleBoundednessReport out;
    out.big_space = bounded.verdict;
    out.psi_deriv_decay = classify_decay(bounded.psi.per_circle, bounded.psi.value, params);

    SupResult s = sup_over_disk([&](cplx z) { return weighted_symbol_norm(W, z); }, sampler);
    out.phi_psi_profile = std::move(s.per_circle);
    out.phi_psi_decay = classify_decay(out.phi_psi_profile, s.value, params);

    if (out.big_space == BoundedVerdict::bounded && out.psi_deriv_decay == Trend::decays &&
        out.phi_psi_decay == Trend::decays)
        out.verdict = LittleBoundedVerdict::sufficient_met;
    else if (out.big_space == BoundedVerdict::unbounded ||
             out.psi_deriv_decay == Trend::plateaus || out.phi_psi_decay == Trend::plateaus)
        out.verdict = LittleBoundedVerdict::not_met;
    else
        out.verdict = LittleBoundedVerdict::inconclusive;
    return out;
}

LittleCompactnessReport little_compactness_verdict(const WcOp& W, const DiskSampler& sampler,
                                                   const ClassifierParams& params,
                                                   const BoundednessReport& bounded) {
    (void)W;
    (void)sampler;
    LittleCompactnessReport out;
    if (bounded.verdict == BoundedVerdict::unbounded) {
        out.refused = true;
        out.note = "little-space compactness check refused: operator unbounded on the big spaces";
        return out;
    }
    const double q_scale = bounded.q.divergent ? 0.0 : bounded.q.value;
    out.radial_q_profile = bounded.q.per_circle;
    out.radial_q_decay = classify_decay(out.radial_q_profile, q_scale, params);
    out.psi_deriv_decay = classify_decay(bounded.psi.per_circle, bounded.psi.value, params);
    out.psi_lambda_finite = classify_finiteness(bounded.psi.cumulative, params);

    if (out.radial_q_decay == Trend::plateaus)
        out.verdict = LittleCompactVerdict::not_compact; // necessity violated
    else if (out.radial_q_decay == Trend::decays && out.psi_deriv_decay == Trend::decays)
        out.verdict = LittleCompactVerdict::conditions_met;
    else
        out.verdict = LittleCompactVerdict::inconclusive;
    return out;
}

SetCompactnessReport set_compactness_check(const std::vector<VectorFn>& K, double alpha,
                                           const DiskSampler& sampler,
                                           const ClassifierParams& params) {
    if (K.empty()) throw InputError("set-compactness check expects a nonempty family");
    SetCompactnessReport out;
    out.pointwise_note = "pointwise relative compactness automatic (finite dim)";
    std::vector<double> family_cum;
    for (const auto& f : K) {
        const NormResult n = lambda_norm(f, alpha, sampler);
        out.max_norm = std::max(out.max_norm, n.value);
        if (family_cum.empty()) {
            family_cum = n.cumulative;
            out.family_profile = n.per_circle;
        } else {
            for (std::size_t j = 0; j < family_cum.size(); ++j) {
                family_cum[j] = std::max(family_cum[j], n.cumulative[j]);
                out.family_profile[j] = std::max(out.family_profile[j], n.per_circle[j]);
            }
        }
    }
    out.bounded = classify_finiteness(family_cum, params);
    out.family_decay = classify_decay(out.family_profile, out.max_norm, params);

    if (out.family_decay == Trend::plateaus)
        out.verdict = SetCompactVerdict::not_compact;
    else if (out.bounded == Finiteness::finite && out.family_decay == Trend::decays)
        out.verdict = SetCompactVerdict::relatively_compact;
    else
        out.verdict = SetCompactVerdict::inconclusive;
    return out;
}

SupResult hinf_criterion(const OperatorSymbol& psi, const SelfMap& phi, double alpha_w,
                         double beta_w, const DiskSampler& sampler) {
    if (!(alpha_w > 0.0 && alpha_w < 1.0)) throw InputError("weight exponent alpha_w must lie in (0,1)");
    if (!(beta_w > 0.0 && beta_w <= 1.0)) throw InputError("weight exponent beta_w must lie in (0,1]");
    auto g = [&](cplx z) {
        const double num = std::pow(1.0 - std::norm(z), beta_w) * op_norm(psi.eval_at(z));
        const double m2 = std::max(0.0, 1.0 - std::norm(phi.value(z)));
        if (m2 < kBoundaryEps)
            return num < kBoundaryEps ? 0.0 : std::numeric_limits<double>::infinity();
        return num * std::pow(m2, -alpha_w);
    };
    return sup_over_disk(g, sampler);
}

CriterionReport run_criteria(const WcOp& W, const DiskSampler& sampler,
                             const ClassifierParams& params) {
    CriterionReport rep;
    rep.bounded = boundedness_verdict(W, sampler, params);
    rep.compact = compactness_verdict(W, sampler, params, rep.bounded);
    rep.little_bounded = little_boundedness_verdict(W, sampler, params, rep.bounded);
    rep.little_compact = little_compactness_verdict(W, sampler, params, rep.bounded);
    if (W.phi.constant)
        rep.notes.push_back("phi is constant; the criteria assume a nonconstant self-map");
    if (rep.bounded.q.divergent)
        rep.notes.push_back("q-quantity diverges at a sampled point with |phi(z)| = 1");
    if (!rep.compact.note.empty()) rep.notes.push_back(rep.compact.note);
    if (!rep.little_compact.note.empty()) rep.notes.push_back(rep.little_compact.note);
    return rep;
}

} // namespace lipop
