#pragma once

// Operator-norm lower bounds over the extremal families the proofs use, and
// the non-compactness witness construction.
//
// Every family member is an elementary tensor s(z) x with a scalar profile s
// and a unit vector x, so ||s x|| = ||s|| ||x|| in every p-norm and the
// source norm is computed once per profile.  Members are normalized to unit
// source norm; the reported value
//
//   L = max_m ||W m||_target / ||m||_source
//
// is always a genuine lower bound for ||W||.  No upper bound is attempted:
// the unit ball is infinite-dimensional, so the two-sided norm equivalence
// is verified as an L-vs-C ratio record, C = max{q, ||psi||}.

#include <string>
#include <vector>

#include "lipop/criteria.hpp"

namespace lipop {

struct ExtremalFamily {
    enum class Kind { constants, monomials, test_fns, linear, witness_seq };
    Kind kind = Kind::constants;
    int max_degree = 4; // monomials: z^k, 1 <= k <= max_degree
    int rays = 8;       // test_fns/linear: parameter grid rays
    std::vector<cplx> seq; // witness_seq: the z_n list

    static ExtremalFamily constants() { return {Kind::constants, 0, 0, {}}; }
    static ExtremalFamily monomials(int max_degree = 4) {
        return {Kind::monomials, max_degree, 0, {}};
    }
    static ExtremalFamily test_fns(int rays = 8) { return {Kind::test_fns, 0, rays, {}}; }
    static ExtremalFamily linear(int rays = 4) { return {Kind::linear, 0, rays, {}}; }
    static ExtremalFamily witness_seq(std::vector<cplx> z_seq) {
        return {Kind::witness_seq, 0, 0, std::move(z_seq)};
    }
};

std::vector<ExtremalFamily> default_families();

struct ScalarProfile {
    std::string label;
    AnalyticFn fn;
};

// Scalar profiles a family contributes for this operator; test_fns include
// the adapted parameter a = phi(z*) at the q-criterion witness z*.
std::vector<ScalarProfile> family_profiles(const ExtremalFamily& fam, const WcOp& W,
                                           const DiskSampler& sampler, cplx q_witness);

struct LowerBoundResult {
    double value = 0.0;
    std::string best_member;
    double constants_value = 0.0; // contribution of the constants family alone
};

LowerBoundResult lower_bound_opnorm(const WcOp& W, const std::vector<ExtremalFamily>& families,
                                    const DiskSampler& sampler);

struct TestFnProperties {
    Vec value_at_a;
    Vec deriv_at_a;
};

TestFnProperties test_fn_properties(cplx a, const Vec& x, double alpha);

struct WitnessRow {
    cplx z_n;
    int n = 0;
    double image_norm = 0.0; // ||W f_n|| in the target norm
    double q_at_zn = 0.0;
    double lower_bound = 0.0; // q_at_zn * n / (n + 1)
};

// Requires |phi(z_n)| > 1/2 for every point of the sequence.
std::vector<WitnessRow> noncompact_witness(const WcOp& W, const std::vector<cplx>& z_seq,
                                           const DiskSampler& sampler, int n_start = 2);

struct SweepRow {
    std::string id;
    double alpha = 0.0, beta = 0.0;
    double q = 0.0, psi_norm = 0.0, criterion = 0.0;
    bool has_estimate = false;
    double lower_bound = 0.0, ratio = 0.0;
    BoundedVerdict bounded = BoundedVerdict::inconclusive;
    bool compact_refused = false;
    CompactVerdict compact = CompactVerdict::inconclusive;
};

SweepRow compute_sweep_row(const std::string& id, const WcOp& W, const DiskSampler& sampler,
                           const ClassifierParams& params);

// Deterministic unit directions: basis vectors plus `extra_random` seeded
// random unit vectors.
std::vector<Vec> unit_directions(const NormedSpace& space, int extra_random, unsigned seed);

} // namespace lipop
