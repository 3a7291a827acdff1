#pragma once

// Boundedness and compactness criteria for W = W_{psi,phi} between the
// Lipschitz scales, with three-valued verdicts read off sampled radial
// profiles.
//
// The governing quantity for source exponent alpha and target exponent beta:
//
//   q(z) = (1-|z|^2)^(1-beta) / (1-|phi(z)|^2)^(1-alpha) * |phi'(z)| * ||psi_z||
//
// For alpha in (0,1): W bounded  iff  psi in Lambda_beta(L(X,Y)) and
// sup q < infinity; for alpha = 1 the denominator exponent vanishes and the
// same formula degrades to the weighted sup-norm condition on phi' psi.
// A bounded W is compact iff the q-quantity tends to zero along
// |phi(z)| -> 1 (annulus profile); on the little scale the corresponding
// limits are radius-indexed, which is why the two profiles are kept as
// distinct report columns.

#include <string>
#include <vector>

#include "lipop/classify.hpp"
#include "lipop/wcop.hpp"

namespace lipop {

enum class BoundedVerdict { bounded, unbounded, inconclusive };
enum class CompactVerdict { compact, not_compact, inconclusive };
enum class LittleBoundedVerdict { sufficient_met, not_met, inconclusive };
enum class LittleCompactVerdict { conditions_met, not_compact, inconclusive };
enum class SetCompactVerdict { relatively_compact, not_compact, inconclusive };

const char* to_string(BoundedVerdict v);
const char* to_string(CompactVerdict v);
const char* to_string(LittleBoundedVerdict v);
const char* to_string(LittleCompactVerdict v);
const char* to_string(SetCompactVerdict v);

// Pointwise q-quantity; +inf when |phi(z)| = 1 and the numerator does not
// vanish to the same order (the full product is formed before the ratio).
double q_quantity(const WcOp& W, cplx z);

struct QReport {
    double value = 0.0;
    cplx witness = cplx(0.0, 0.0);
    std::vector<double> cumulative;
    std::vector<double> per_circle;
    bool divergent = false;
    cplx divergence_point = cplx(0.0, 0.0);
};

QReport q_criterion(const WcOp& W, const DiskSampler& sampler);

struct PsiNormReport {
    double value = 0.0; // ||psi_0|| + sup part (beta < 1), sup + sup (beta = 1)
    std::vector<double> cumulative;  // sup-part running profile
    std::vector<double> per_circle;  // (1-|z|^2)^(1-beta) ||psi'_z|| per circle
};

PsiNormReport psi_lambda_norm(const OperatorSymbol& psi, double beta, const DiskSampler& sampler);

struct BoundednessReport {
    BoundedVerdict verdict = BoundedVerdict::inconclusive;
    Finiteness q_finiteness = Finiteness::inconclusive;
    Finiteness psi_finiteness = Finiteness::inconclusive;
    QReport q;
    PsiNormReport psi;
};

BoundednessReport boundedness_verdict(const WcOp& W, const DiskSampler& sampler,
                                      const ClassifierParams& params);

struct AnnulusPoint {
    double delta = 0.0;
    double value = 0.0;
    bool empty = true; // no sampled z with |phi(z)| > delta
};

struct CompactnessReport {
    bool refused = false; // boundedness precondition not met
    std::string note;
    CompactVerdict verdict = CompactVerdict::inconclusive;
    std::vector<AnnulusPoint> annulus;
};

CompactnessReport compactness_verdict(const WcOp& W, const DiskSampler& sampler,
                                      const ClassifierParams& params,
                                      const BoundednessReport& bounded);

struct LittleBoundednessReport {
    LittleBoundedVerdict verdict = LittleBoundedVerdict::inconclusive;
    BoundedVerdict big_space = BoundedVerdict::inconclusive;
    Trend psi_deriv_decay = Trend::inconclusive;      // psi in Lambda_beta^0
    Trend phi_psi_decay = Trend::inconclusive;        // (1-|z|^2)^(1-beta) |phi'| ||psi|| -> 0
    std::vector<double> phi_psi_profile;
};

LittleBoundednessReport little_boundedness_verdict(const WcOp& W, const DiskSampler& sampler,
                                                   const ClassifierParams& params,
                                                   const BoundednessReport& bounded);

// Necessity (part i) needs only the radial decay of q; sufficiency (part ii)
// additionally needs psi in the little symbol space.  The two memberships are
// reported side by side and never merged.
struct LittleCompactnessReport {
    bool refused = false;
    std::string note;
    LittleCompactVerdict verdict = LittleCompactVerdict::inconclusive;
    Trend radial_q_decay = Trend::inconclusive;
    Trend psi_deriv_decay = Trend::inconclusive;
    Finiteness psi_lambda_finite = Finiteness::inconclusive;
    std::vector<double> radial_q_profile;
};

LittleCompactnessReport little_compactness_verdict(const WcOp& W, const DiskSampler& sampler,
                                                   const ClassifierParams& params,
                                                   const BoundednessReport& bounded);

struct SetCompactnessReport {
    SetCompactVerdict verdict = SetCompactVerdict::inconclusive;
    Finiteness bounded = Finiteness::inconclusive; // condition (i)
    Trend family_decay = Trend::inconclusive;      // condition (iii)
    double max_norm = 0.0;
    std::vector<double> family_profile;            // sup over the family, per circle
    std::string pointwise_note;                    // condition (ii): automatic here
};

SetCompactnessReport set_compactness_check(const std::vector<VectorFn>& K, double alpha,
                                           const DiskSampler& sampler,
                                           const ClassifierParams& params);

// sup (1-|z|^2)^beta_w (1-|phi(z)|^2)^(-alpha_w) ||psi_z||, the weighted
// sup-norm boundedness quantity.
SupResult hinf_criterion(const OperatorSymbol& psi, const SelfMap& phi, double alpha_w,
                         double beta_w, const DiskSampler& sampler);

// Everything the analyzer reports for one operator.
struct CriterionReport {
    BoundednessReport bounded;
    CompactnessReport compact;
    LittleBoundednessReport little_bounded;
    LittleCompactnessReport little_compact;
    std::string t_psi_compact = "automatic (finite dim)";
    std::vector<std::string> notes;
};

CriterionReport run_criteria(const WcOp& W, const DiskSampler& sampler,
                             const ClassifierParams& params);

} // namespace lipop
