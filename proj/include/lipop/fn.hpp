#pragma once

// Scalar analytic functions on the closed unit disk, kept as a closed union
// of closed-form variants so that values, derivatives and Taylor
// coefficients are all exact (no numerical differentiation anywhere).
//
// Variants:
//   poly      c_0 + c_1 z + ... + c_N z^N
//   power     c * (1 - conj(a) z)^gamma, |a| < 1, principal branch
//             (Re(1 - conj(a) z) >= 1 - |a| > 0 on the closed disk)
//   test_fn   (1/conj(a)) * ( (1-|a|^2) (1 - conj(a) z)^(alpha-1)
//                             - (1 - conj(a) z)^alpha ),  0 < alpha <= 1
//             vanishes at a; derivative at a is (1-|a|^2)^(alpha-1)
//   affine    s z + c
//   blaschke  (a - z) / (1 - conj(a) z), |a| < 1
//   sum / scale / product   composites of the above
//
// The union is closed under differentiation, dilation z -> r z (0 < r < 1)
// and products, so every operator built downstream stays exact.

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

#include "lipop/errors.hpp"

namespace lipop {

using cplx = std::complex<double>;

class AnalyticFn {
  public:
    static AnalyticFn poly(std::vector<cplx> coeffs);
    static AnalyticFn power(cplx c, cplx a, double gamma);
    static AnalyticFn test_fn(cplx a, double alpha);
    static AnalyticFn affine(cplx s, cplx c);
    static AnalyticFn blaschke(cplx a);
    static AnalyticFn sum(std::vector<AnalyticFn> terms);
    static AnalyticFn scale(cplx c, AnalyticFn inner);
    static AnalyticFn product(AnalyticFn lhs, AnalyticFn rhs);

    static AnalyticFn zero() { return poly({cplx(0.0, 0.0)}); }
    static AnalyticFn constant(cplx c) { return poly({c}); }
    static AnalyticFn identity() { return poly({cplx(0.0, 0.0), cplx(1.0, 0.0)}); }
    static AnalyticFn monomial(std::size_t k, cplx c = cplx(1.0, 0.0));

    cplx value(cplx z) const;
    cplx deriv(cplx z) const;
    cplx taylor_coeff(std::size_t k) const;

    // Exact derivative as another AnalyticFn (the union is closed under d/dz).
    AnalyticFn derivative_fn() const;

    // Exact reparameterization z -> r z, 0 < r < 1.
    AnalyticFn dilated(double r) const;

    // Integer power by repeated products, k >= 1.
    AnalyticFn pow_int(int k) const;

    // True when the derivative vanishes on a coarse probe grid; used only as
    // an informational flag on self-maps.
    bool probably_constant() const;

    struct Node;
    const Node& node() const { return *node_; }

  protected:
    explicit AnalyticFn(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  private:
    std::shared_ptr<const Node> node_;
};

// Analytic self-map of the closed disk, validated on the boundary
// (maximum modulus reduces phi(D) within D-bar to |phi| <= 1 on |z| = 1).
struct SelfMap {
    AnalyticFn fn;
    double sup_modulus_certificate = 0.0; // measured boundary-grid sup of |phi|
    bool constant = false;                // flagged, not rejected

    cplx value(cplx z) const { return fn.value(z); }
    cplx deriv(cplx z) const { return fn.deriv(z); }
};

// Throws NotSelfMapError when the boundary sup exceeds 1 + 1e-12.
SelfMap make_self_map(const AnalyticFn& f);

// Guarded evaluation helpers shared by the variants (|z| <= 1 + 1e-12).
void require_in_closed_disk(cplx z);

} // namespace lipop
