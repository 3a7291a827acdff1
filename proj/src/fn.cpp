#include "lipop/fn.hpp"

#include <cmath>
#include <sstream>

#include "lipop/fn_nodes.hpp"

namespace lipop {

namespace {

constexpr double kDiskSlack = 1e-12;
constexpr double kTestFnMinA = 1e-6;

std::string fmt_cplx(cplx z) {
    std::ostringstream os;
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

} // namespace

void require_in_closed_disk(cplx z) {
    if (std::abs(z) > 1.0 + kDiskSlack)
        throw EvalError("evaluation point outside the closed unit disk: z = " + fmt_cplx(z));
}

namespace {

AnalyticFn wrap(AnalyticFn::Node n);

// (1 - conj(a) z)^gamma with the principal branch; the real part of the base
// stays positive for |a| < 1, |z| <= 1, asserted at every evaluation.
cplx principal_power(cplx a, cplx z, double gamma) {
    const cplx base = cplx(1.0, 0.0) - std::conj(a) * z;
    if (base.real() <= 0.0)
        throw EvalError("principal branch violated: Re(1 - conj(a) z) <= 0 at z = " + fmt_cplx(z));
    if (gamma == 0.0) return cplx(1.0, 0.0);
    return std::exp(gamma * std::log(base));
}

// Generalized binomial coefficient times (-conj(a))^k: the k-th Taylor
// coefficient of (1 - conj(a) z)^gamma.
cplx power_taylor_coeff(cplx a, double gamma, std::size_t k) {
    cplx b(1.0, 0.0);
    for (std::size_t j = 0; j < k; ++j)
        b *= (gamma - static_cast<double>(j)) / static_cast<double>(j + 1) * (-std::conj(a));
    return b;
}

struct ValueVisitor {
    cplx z;
    cplx operator()(const PolyNode& n) const {
        cplx acc(0.0, 0.0);
        for (std::size_t i = n.coeffs.size(); i-- > 0;)
            acc = acc * z + n.coeffs[i];
        return acc;
    }
    cplx operator()(const PowerNode& n) const { return n.c * principal_power(n.a, z, n.gamma); }
    cplx operator()(const TestFnNode& n) const {
        const double aa = std::norm(n.a);
        const cplx p1 = principal_power(n.a, z, n.alpha - 1.0);
        const cplx p2 = principal_power(n.a, z, n.alpha);
        return ((1.0 - aa) * p1 - p2) / std::conj(n.a);
    }
    cplx operator()(const AffineNode& n) const { return n.s * z + n.c; }
    cplx operator()(const BlaschkeNode& n) const {
        return (n.a - z) / (cplx(1.0, 0.0) - std::conj(n.a) * z);
    }
    cplx operator()(const SumNode& n) const {
        cplx acc(0.0, 0.0);
        for (const auto& t : n.terms) acc += t.value(z);
        return acc;
    }
    cplx operator()(const ScaleNode& n) const { return n.c * n.inner.value(z); }
    cplx operator()(const ProductNode& n) const { return n.lhs.value(z) * n.rhs.value(z); }
};

struct DerivVisitor {
    cplx z;
    cplx operator()(const PolyNode& n) const {
        cplx acc(0.0, 0.0);
        for (std::size_t i = n.coeffs.size(); i-- > 1;)
            acc = acc * z + static_cast<double>(i) * n.coeffs[i];
        return acc;
    }
    cplx operator()(const PowerNode& n) const {
        return -n.gamma * std::conj(n.a) * n.c * principal_power(n.a, z, n.gamma - 1.0);
    }
    cplx operator()(const TestFnNode& n) const {
        // d/dz of (1/conj(a)) [ (1-|a|^2)(1-conj(a)z)^(alpha-1) - (1-conj(a)z)^alpha ]
        const double aa = std::norm(n.a);
        const cplx p1 = principal_power(n.a, z, n.alpha - 2.0);
        const cplx p2 = principal_power(n.a, z, n.alpha - 1.0);
        return (1.0 - n.alpha) * (1.0 - aa) * p1 + n.alpha * p2;
    }
    cplx operator()(const AffineNode& n) const { return n.s; }
    cplx operator()(const BlaschkeNode& n) const {
        const cplx d = cplx(1.0, 0.0) - std::conj(n.a) * z;
        return (std::norm(n.a) - 1.0) / (d * d);
    }
    cplx operator()(const SumNode& n) const {
        cplx acc(0.0, 0.0);
        for (const auto& t : n.terms) acc += t.deriv(z);
        return acc;
    }
    cplx operator()(const ScaleNode& n) const { return n.c * n.inner.deriv(z); }
    cplx operator()(const ProductNode& n) const {
        return n.lhs.deriv(z) * n.rhs.value(z) + n.lhs.value(z) * n.rhs.deriv(z);
    }
};

struct TaylorVisitor {
    std::size_t k;
    cplx operator()(const PolyNode& n) const {
        return k < n.coeffs.size() ? n.coeffs[k] : cplx(0.0, 0.0);
    }
    cplx operator()(const PowerNode& n) const { return n.c * power_taylor_coeff(n.a, n.gamma, k); }
    cplx operator()(const TestFnNode& n) const {
        const double aa = std::norm(n.a);
        const cplx c1 = power_taylor_coeff(n.a, n.alpha - 1.0, k);
        const cplx c2 = power_taylor_coeff(n.a, n.alpha, k);
        return ((1.0 - aa) * c1 - c2) / std::conj(n.a);
    }
    cplx operator()(const AffineNode& n) const {
        if (k == 0) return n.c;
        if (k == 1) return n.s;
        return cplx(0.0, 0.0);
    }
    cplx operator()(const BlaschkeNode& n) const {
        // (a - z) sum_j (conj(a) z)^j : coeff_0 = a, coeff_k = conj(a)^(k-1) (|a|^2 - 1)
        if (k == 0) return n.a;
        cplx p(1.0, 0.0);
        for (std::size_t j = 1; j < k; ++j) p *= std::conj(n.a);
        return p * (std::norm(n.a) - 1.0);
    }
    cplx operator()(const SumNode& n) const {
        cplx acc(0.0, 0.0);
        for (const auto& t : n.terms) acc += t.taylor_coeff(k);
        return acc;
    }
    cplx operator()(const ScaleNode& n) const { return n.c * n.inner.taylor_coeff(k); }
    cplx operator()(const ProductNode& n) const {
        cplx acc(0.0, 0.0); // Cauchy product
        for (std::size_t j = 0; j <= k; ++j)
            acc += n.lhs.taylor_coeff(j) * n.rhs.taylor_coeff(k - j);
        return acc;
    }
};

struct DerivativeFnVisitor {
    AnalyticFn operator()(const PolyNode& n) const {
        if (n.coeffs.size() <= 1) return AnalyticFn::zero();
        std::vector<cplx> d(n.coeffs.size() - 1);
        for (std::size_t i = 1; i < n.coeffs.size(); ++i)
            d[i - 1] = static_cast<double>(i) * n.coeffs[i];
        return AnalyticFn::poly(std::move(d));
    }
    AnalyticFn operator()(const PowerNode& n) const {
        return AnalyticFn::power(-n.gamma * std::conj(n.a) * n.c, n.a, n.gamma - 1.0);
    }
    AnalyticFn operator()(const TestFnNode& n) const {
        const double aa = std::norm(n.a);
        return AnalyticFn::sum({AnalyticFn::power((1.0 - n.alpha) * (1.0 - aa), n.a, n.alpha - 2.0),
                                AnalyticFn::power(cplx(n.alpha, 0.0), n.a, n.alpha - 1.0)});
    }
    AnalyticFn operator()(const AffineNode& n) const { return AnalyticFn::constant(n.s); }
    AnalyticFn operator()(const BlaschkeNode& n) const {
        return AnalyticFn::power(cplx(std::norm(n.a) - 1.0, 0.0), n.a, -2.0);
    }
    AnalyticFn operator()(const SumNode& n) const {
        std::vector<AnalyticFn> d;
        d.reserve(n.terms.size());
        for (const auto& t : n.terms) d.push_back(t.derivative_fn());
        return AnalyticFn::sum(std::move(d));
    }
    AnalyticFn operator()(const ScaleNode& n) const {
        return AnalyticFn::scale(n.c, n.inner.derivative_fn());
    }
    AnalyticFn operator()(const ProductNode& n) const {
        return AnalyticFn::sum({AnalyticFn::product(n.lhs.derivative_fn(), n.rhs),
                                AnalyticFn::product(n.lhs, n.rhs.derivative_fn())});
    }
};

struct DilateVisitor {
    double r;
    AnalyticFn operator()(const PolyNode& n) const {
        std::vector<cplx> c(n.coeffs.size());
        double rk = 1.0;
        for (std::size_t i = 0; i < n.coeffs.size(); ++i) {
            c[i] = n.coeffs[i] * rk;
            rk *= r;
        }
        return AnalyticFn::poly(std::move(c));
    }
    AnalyticFn operator()(const PowerNode& n) const {
        // (1 - conj(a) (r z))^g = (1 - conj(r a) z)^g for real r
        return AnalyticFn::power(n.c, n.a * r, n.gamma);
    }
    AnalyticFn operator()(const TestFnNode& n) const {
        // f_a(r z) leaves the test-fn form; split into its two power terms.
        const double aa = std::norm(n.a);
        const cplx inv_conj_a = cplx(1.0, 0.0) / std::conj(n.a);
        return AnalyticFn::sum({AnalyticFn::power((1.0 - aa) * inv_conj_a, n.a * r, n.alpha - 1.0),
                                AnalyticFn::power(-inv_conj_a, n.a * r, n.alpha)});
    }
    AnalyticFn operator()(const AffineNode& n) const { return AnalyticFn::affine(n.s * r, n.c); }
    AnalyticFn operator()(const BlaschkeNode& n) const {
        // (a - r z) / (1 - conj(a) r z)
        return AnalyticFn::product(AnalyticFn::affine(cplx(-r, 0.0), n.a),
                                   AnalyticFn::power(cplx(1.0, 0.0), n.a * r, -1.0));
    }
    AnalyticFn operator()(const SumNode& n) const {
        std::vector<AnalyticFn> d;
        d.reserve(n.terms.size());
        for (const auto& t : n.terms) d.push_back(t.dilated(r));
        return AnalyticFn::sum(std::move(d));
    }
    AnalyticFn operator()(const ScaleNode& n) const {
        return AnalyticFn::scale(n.c, n.inner.dilated(r));
    }
    AnalyticFn operator()(const ProductNode& n) const {
        return AnalyticFn::product(n.lhs.dilated(r), n.rhs.dilated(r));
    }
};

AnalyticFn wrap(AnalyticFn::Node n) {
    struct Access : AnalyticFn {
        explicit Access(std::shared_ptr<const Node> p) : AnalyticFn(std::move(p)) {}
    };
    return Access(std::make_shared<AnalyticFn::Node>(std::move(n)));
}

} // namespace

AnalyticFn AnalyticFn::poly(std::vector<cplx> coeffs) {
    if (coeffs.empty()) coeffs.push_back(cplx(0.0, 0.0));
    return wrap(Node{PolyNode{std::move(coeffs)}});
}

AnalyticFn AnalyticFn::power(cplx c, cplx a, double gamma) {
    if (std::abs(a) >= 1.0)
        throw InputError("power variant requires |a| < 1, got |a| = " + std::to_string(std::abs(a)));
    return wrap(Node{PowerNode{c, a, gamma}});
}

AnalyticFn AnalyticFn::test_fn(cplx a, double alpha) {
    if (std::abs(a) < kTestFnMinA)
        throw InputError("degenerate test-fn parameter: |a| < 1e-6");
    if (std::abs(a) >= 1.0)
        throw InputError("test-fn parameter must satisfy |a| < 1");
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw InputError("test-fn exponent must lie in (0, 1]");
    return wrap(Node{TestFnNode{a, alpha}});
}

AnalyticFn AnalyticFn::affine(cplx s, cplx c) { return wrap(Node{AffineNode{s, c}}); }

AnalyticFn AnalyticFn::blaschke(cplx a) {
    if (std::abs(a) >= 1.0)
        throw InputError("blaschke parameter must satisfy |a| < 1");
    return wrap(Node{BlaschkeNode{a}});
}

AnalyticFn AnalyticFn::sum(std::vector<AnalyticFn> terms) {
    if (terms.empty()) return zero();
    if (terms.size() == 1) return terms.front();
    return wrap(Node{SumNode{std::move(terms)}});
}

AnalyticFn AnalyticFn::scale(cplx c, AnalyticFn inner) {
    return wrap(Node{ScaleNode{c, std::move(inner)}});
}

AnalyticFn AnalyticFn::product(AnalyticFn lhs, AnalyticFn rhs) {
    return wrap(Node{ProductNode{std::move(lhs), std::move(rhs)}});
}

AnalyticFn AnalyticFn::monomial(std::size_t k, cplx c) {
    std::vector<cplx> coeffs(k + 1, cplx(0.0, 0.0));
    coeffs[k] = c;
    return poly(std::move(coeffs));
}

cplx AnalyticFn::value(cplx z) const {
    require_in_closed_disk(z);
    return std::visit(ValueVisitor{z}, node_->v);
}

cplx AnalyticFn::deriv(cplx z) const {
    require_in_closed_disk(z);
    return std::visit(DerivVisitor{z}, node_->v);
}

cplx AnalyticFn::taylor_coeff(std::size_t k) const {
    return std::visit(TaylorVisitor{k}, node_->v);
}

AnalyticFn AnalyticFn::derivative_fn() const {
    return std::visit(DerivativeFnVisitor{}, node_->v);
}

AnalyticFn AnalyticFn::dilated(double r) const {
    if (!(r > 0.0 && r < 1.0))
        throw InputError("dilation factor must lie in (0, 1)");
    return std::visit(DilateVisitor{r}, node_->v);
}

AnalyticFn AnalyticFn::pow_int(int k) const {
    if (k < 1) throw InputError("integer power expects k >= 1");
    AnalyticFn acc = *this;
    for (int i = 1; i < k; ++i) acc = product(acc, *this);
    return acc;
}

bool AnalyticFn::probably_constant() const {
    const double radii[] = {0.0, 0.31, 0.57, 0.83};
    double scale = std::abs(value(cplx(0.0, 0.0)));
    for (double r : radii) {
        for (int k = 0; k < 16; ++k) {
            const double th = 2.0 * M_PI * k / 16.0;
            if (std::abs(deriv(std::polar(r, th))) > 1e-13 * (1.0 + scale)) return false;
        }
    }
    return true;
}

SelfMap make_self_map(const AnalyticFn& f) {
    // 4096 equispaced boundary angles, then a golden-section pass around the
    // largest sample.
    const int n = 4096;
    double best = 0.0;
    int best_k = 0;
    for (int k = 0; k < n; ++k) {
        const double th = 2.0 * M_PI * k / n;
        const double m = std::abs(f.value(std::polar(1.0, th)));
        if (m > best) {
            best = m;
            best_k = k;
        }
    }
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = 2.0 * M_PI * (best_k - 1) / n;
    double hi = 2.0 * M_PI * (best_k + 1) / n;
    auto g = [&](double th) { return std::abs(f.value(std::polar(1.0, th))); };
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double g1 = g(x1), g2 = g(x2);
    for (int it = 0; it < 48; ++it) {
        if (g1 < g2) {
            lo = x1;
            x1 = x2;
            g1 = g2;
            x2 = lo + gr * (hi - lo);
            g2 = g(x2);
        } else {
            hi = x2;
            x2 = x1;
            g2 = g1;
            x1 = hi - gr * (hi - lo);
            g1 = g(x1);
        }
        best = std::max(best, std::max(g1, g2));
    }
    if (best > 1.0 + kDiskSlack) {
        std::ostringstream os;
        os << "not a self-map of the disk: boundary sup |phi| = " << best;
        throw NotSelfMapError(os.str());
    }
    return SelfMap{f, best, f.probably_constant()};
}

} // namespace lipop
