#pragma once

// Vector-valued analytic functions f : D -> C^n and the function-space norms
// built on them.
//
//   lambda_norm   ||f(0)|| + sup_z (1-|z|^2)^(1-alpha) ||f'(z)||, 0 < alpha < 1
//                 (the Bloch-form norm used throughout for the Lipschitz
//                 scale; equivalent to the two-point seminorm by
//                 Hardy-Littlewood)
//   lambda1_norm  sup_z ||f(z)|| + sup_z ||f'(z)||  (the alpha = 1 scale)
//   hinf_nu_norm  sup_z (1-|z|^2)^gamma ||f(z)||    (weighted sup norm)
//
// lipschitz_seminorm_estimate samples the two-point quotient directly and is
// a lower bound for the true seminorm, used only to cross-check the
// Bloch-form route.

#include <vector>

#include "lipop/sampler.hpp"
#include "lipop/space.hpp"

namespace lipop {

struct VectorFn {
    NormedSpace codomain;
    std::vector<AnalyticFn> comps;

    Vec value(cplx z) const;
    Vec deriv(cplx z) const;
};

VectorFn make_vector_fn(NormedSpace codomain, std::vector<AnalyticFn> comps);
VectorFn scalar_fn(AnalyticFn f);                       // dim-1 l2 wrapper
VectorFn tensor_fn(const AnalyticFn& f, const Vec& x);  // z -> f(z) x
VectorFn vf_add(const VectorFn& f, const VectorFn& g);
VectorFn vf_sub(const VectorFn& f, const VectorFn& g);
VectorFn vf_scale(cplx c, const VectorFn& f);

enum class SpaceFlavor { big, little };

struct SpaceSpec {
    double alpha = 0.5;
    NormedSpace space;
    SpaceFlavor flavor = SpaceFlavor::big;
};

struct WeightSpec {
    double gamma = 0.0; // standard weight (1-|z|^2)^gamma
};

struct NormResult {
    double value = 0.0;
    cplx witness = cplx(0.0, 0.0);
    std::vector<double> cumulative; // running sup-part profile over the schedule
    std::vector<double> per_circle; // per-circle sup-part profile
};

NormResult lambda_norm(const VectorFn& f, double alpha, const DiskSampler& sampler,
                       const std::vector<cplx>& extra = {});
NormResult lambda1_norm(const VectorFn& f, const DiskSampler& sampler,
                        const std::vector<cplx>& extra = {});
NormResult hinf_nu_norm(const VectorFn& f, WeightSpec w, const DiskSampler& sampler);

// Source-space norm dispatch: lambda_norm for alpha in (0,1), lambda1_norm
// for alpha = 1.
NormResult space_norm(const VectorFn& f, double alpha, const DiskSampler& sampler,
                      const std::vector<cplx>& extra = {});

double lipschitz_seminorm_estimate(const VectorFn& f, double alpha, int pair_budget,
                                   unsigned seed);

enum class Membership { member, not_member, inconclusive };

struct LittleProfile {
    std::vector<double> radii;
    std::vector<double> values; // sup over |z| = r_j of (1-|z|^2)^(1-alpha) ||f'||
    Membership verdict = Membership::inconclusive;
};

LittleProfile little_space_profile(const VectorFn& f, double alpha, const DiskSampler& sampler);

const char* to_string(Membership m);

} // namespace lipop
