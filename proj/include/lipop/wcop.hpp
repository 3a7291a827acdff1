#pragma once

// The weighted composition operator W f(z) = psi_z ( f(phi(z)) ) and the
// auxiliary operators built around it:
//
//   derivative      (W f)'(z) = phi'(z) psi_z( f'(phi(z)) ) + psi'_z( f(phi(z)) )
//   dilation        K_r f(z) = f(r z)                (exact on the fn union)
//   truncation      L_n f    = degree-n Taylor polynomial
//   symbol action   T_psi x  = z -> psi_z(x)
//   multiplication  M_{phi^k} f = phi^k f            (Leibniz-exact product)
//
// Compositions are never materialized as coefficient arrays; every criterion
// needs only pointwise values and derivatives, so application stays lazy and
// exact for all variants.

#include <vector>

#include "lipop/vectorfn.hpp"

namespace lipop {

// Operator-valued analytic symbol: an m x n grid of scalar functions,
// row-major, acting domain -> codomain pointwise.
struct OperatorSymbol {
    NormedSpace domain;   // X
    NormedSpace codomain; // Y
    std::vector<AnalyticFn> entries;

    const AnalyticFn& at(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * domain.dim + j];
    }
    Mat eval_at(cplx z) const;
    Mat deriv_at(cplx z) const;
    OperatorSymbol derivative_symbol() const;         // entrywise d/dz
    OperatorSymbol scaled_by(const AnalyticFn& s) const; // entrywise product
};

OperatorSymbol make_symbol(NormedSpace domain, NormedSpace codomain,
                           std::vector<AnalyticFn> entries);
OperatorSymbol identity_symbol(NormedSpace space);
OperatorSymbol constant_symbol(const Mat& A);

struct WcOp {
    OperatorSymbol psi;
    SelfMap phi;
    SpaceSpec source; // (alpha, X)
    SpaceSpec target; // (beta, Y)
};

WcOp make_wcop(OperatorSymbol psi, SelfMap phi, SpaceSpec source, SpaceSpec target);

Vec apply(const WcOp& W, const VectorFn& f, cplx z);
Vec apply_deriv(const WcOp& W, const VectorFn& f, cplx z);

// ||W f|| in the target space norm, sampled; `extra` points are folded into
// the sup so proof-driven evaluation points are never missed.
NormResult image_space_norm(const WcOp& W, const VectorFn& f, const DiskSampler& sampler,
                            const std::vector<cplx>& extra = {});

VectorFn dilate(const VectorFn& f, double r);
VectorFn truncate(const VectorFn& f, int n);
VectorFn t_psi(const OperatorSymbol& psi, const Vec& x);
VectorFn multiply_phik(const SelfMap& phi, int k, const VectorFn& f);

// Taylor coefficient functional q_k applied componentwise.
Vec taylor_functional(const VectorFn& f, int k);

// Max over boundary points of || psi_w f(phi(w)) - radial-limit proxy ||,
// the proxy being first-order Richardson extrapolation of psi_z f(phi(z))
// along z_j = (1 - 2^-j) w, j = 10..20.
double restrict_extend_check(const WcOp& W, const VectorFn& f,
                             const std::vector<cplx>& boundary_points);

} // namespace lipop
