#include "lipop/space.hpp"

#include <algorithm>
#include <cmath>

namespace lipop {

std::string to_string(NormKind k) {
    switch (k) {
        case NormKind::l1: return "l1";
        case NormKind::l2: return "l2";
        case NormKind::linf: return "linf";
    }
    return "?";
}

NormKind norm_kind_from_string(const std::string& s) {
    if (s == "l1") return NormKind::l1;
    if (s == "l2") return NormKind::l2;
    if (s == "linf") return NormKind::linf;
    throw InputError("unknown norm kind: \"" + s + "\" (expected l1, l2 or linf)");
}

Vec make_vec(NormedSpace space, std::vector<cplx> entries) {
    if (space.dim < 1) throw InputError("space dimension must be >= 1");
    if (static_cast<int>(entries.size()) != space.dim)
        throw InputError("vector length does not match space dimension");
    return Vec{space, std::move(entries)};
}

Mat make_mat(NormedSpace domain, NormedSpace codomain, std::vector<cplx> entries) {
    if (domain.dim < 1 || codomain.dim < 1) throw InputError("space dimension must be >= 1");
    if (entries.size() != static_cast<std::size_t>(domain.dim) * codomain.dim)
        throw InputError("matrix entry count does not match shape");
    return Mat{domain, codomain, std::move(entries)};
}

double vec_norm(const Vec& v) {
    switch (v.space.norm) {
        case NormKind::l1: {
            double s = 0.0;
            for (cplx e : v.entries) s += std::abs(e);
            return s;
        }
        case NormKind::l2: {
            double s = 0.0;
            for (cplx e : v.entries) s += std::norm(e);
            return std::sqrt(s);
        }
        case NormKind::linf: {
            double s = 0.0;
            for (cplx e : v.entries) s = std::max(s, std::abs(e));
            return s;
        }
    }
    return 0.0;
}

Vec mat_vec(const Mat& A, const Vec& x) {
    if (x.space.dim != A.domain.dim)
        throw InputError("matrix-vector dimension mismatch");
    std::vector<cplx> y(A.codomain.dim, cplx(0.0, 0.0));
    for (int i = 0; i < A.codomain.dim; ++i)
        for (int j = 0; j < A.domain.dim; ++j)
            y[i] += A.at(i, j) * x.entries[j];
    return Vec{A.codomain, std::move(y)};
}

Vec vec_add(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] += b.entries[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] -= b.entries[i];
    return r;
}

Vec vec_scale(cplx c, const Vec& a) {
    Vec r = a;
    for (auto& e : r.entries) e *= c;
    return r;
}

namespace {

Vec column(const Mat& A, int j) {
    std::vector<cplx> c(A.codomain.dim);
    for (int i = 0; i < A.codomain.dim; ++i) c[i] = A.at(i, j);
    return Vec{A.codomain, std::move(c)};
}

double l2_norm_raw(const std::vector<cplx>& v) {
    double s = 0.0;
    for (cplx e : v) s += std::norm(e);
    return std::sqrt(s);
}

// Power iteration on A^H A with a deterministic all-ones start; stops at
// relative change < 1e-12 or 500 iterations.  If an iterate collapses
// (start orthogonal to the top singular space), restarts from basis vectors.
struct PowerResult {
    double sigma = 0.0;
    std::vector<cplx> x; // approximate maximizing unit vector
};

PowerResult l2_power_iteration(const Mat& A) {
    const int n = A.domain.dim;
    const int m = A.codomain.dim;
    double frob2 = 0.0;
    for (cplx e : A.entries) frob2 += std::norm(e);
    PowerResult out;
    out.x.assign(n, cplx(0.0, 0.0));
    if (frob2 == 0.0) return out;

    auto apply_AhA = [&](const std::vector<cplx>& x, std::vector<cplx>& y) {
        std::vector<cplx> ax(m, cplx(0.0, 0.0));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) ax[i] += A.at(i, j) * x[j];
        y.assign(n, cplx(0.0, 0.0));
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < m; ++i) y[j] += std::conj(A.at(i, j)) * ax[i];
    };

    std::vector<cplx> x(n, cplx(1.0, 0.0));
    double nx = l2_norm_raw(x);
    for (auto& e : x) e /= nx;

    int restart = 0;
    double lambda_prev = 0.0;
    double lambda = 0.0;
    std::vector<cplx> y;
    for (int it = 0; it < 500; ++it) {
        apply_AhA(x, y);
        cplx ray(0.0, 0.0);
        for (int j = 0; j < n; ++j) ray += std::conj(x[j]) * y[j];
        lambda = std::max(0.0, ray.real());
        const double ny = l2_norm_raw(y);
        if (ny < 1e-30 * frob2) {
            if (restart >= n) break; // x spans only the kernel; fall back below
            x.assign(n, cplx(0.0, 0.0));
            x[restart++] = cplx(1.0, 0.0);
            lambda_prev = 0.0;
            continue;
        }
        for (int j = 0; j < n; ++j) x[j] = y[j] / ny;
        if (it > 0 && std::abs(lambda - lambda_prev) < 1e-12 * std::max(lambda, 1e-300)) break;
        lambda_prev = lambda;
    }

    out.sigma = std::sqrt(lambda);
    out.x = x;

    // ||A e_j|| is always a valid lower bound; guards degenerate runs.
    for (int j = 0; j < n; ++j) {
        double cj = 0.0;
        for (int i = 0; i < m; ++i) cj += std::norm(A.at(i, j));
        cj = std::sqrt(cj);
        if (cj > out.sigma) {
            out.sigma = cj;
            out.x.assign(n, cplx(0.0, 0.0));
            out.x[j] = cplx(1.0, 0.0);
        }
    }
    return out;
}

[[noreturn]] void reject_pair(const Mat& A) {
    throw UnsupportedNormPairError("unsupported induced norm pair " +
                                   to_string(A.domain.norm) + " -> " +
                                   to_string(A.codomain.norm));
}

} // namespace

double op_norm(const Mat& A) {
    if (A.domain.norm == NormKind::l1) {
        double best = 0.0;
        for (int j = 0; j < A.domain.dim; ++j) best = std::max(best, vec_norm(column(A, j)));
        return best;
    }
    if (A.domain.norm == NormKind::l2 && A.codomain.norm == NormKind::l2)
        return l2_power_iteration(A).sigma;
    if (A.domain.norm == NormKind::linf && A.codomain.norm == NormKind::linf) {
        double best = 0.0;
        for (int i = 0; i < A.codomain.dim; ++i) {
            double row = 0.0;
            for (int j = 0; j < A.domain.dim; ++j) row += std::abs(A.at(i, j));
            best = std::max(best, row);
        }
        return best;
    }
    reject_pair(A);
}

Vec opnorm_maximizer(const Mat& A) {
    const int n = A.domain.dim;
    std::vector<cplx> x(n, cplx(0.0, 0.0));
    if (A.domain.norm == NormKind::l1) {
        int best_j = 0;
        double best = -1.0;
        for (int j = 0; j < n; ++j) {
            const double c = vec_norm(column(A, j));
            if (c > best) {
                best = c;
                best_j = j;
            }
        }
        x[best_j] = cplx(1.0, 0.0);
        return Vec{A.domain, std::move(x)};
    }
    if (A.domain.norm == NormKind::l2 && A.codomain.norm == NormKind::l2) {
        auto pr = l2_power_iteration(A);
        if (l2_norm_raw(pr.x) == 0.0) pr.x[0] = cplx(1.0, 0.0);
        const double nx = l2_norm_raw(pr.x);
        for (auto& e : pr.x) e /= nx;
        return Vec{A.domain, std::move(pr.x)};
    }
    if (A.domain.norm == NormKind::linf && A.codomain.norm == NormKind::linf) {
        int best_i = 0;
        double best = -1.0;
        for (int i = 0; i < A.codomain.dim; ++i) {
            double row = 0.0;
            for (int j = 0; j < n; ++j) row += std::abs(A.at(i, j));
            if (row > best) {
                best = row;
                best_i = i;
            }
        }
        for (int j = 0; j < n; ++j) {
            const cplx a = A.at(best_i, j);
            x[j] = std::abs(a) > 0.0 ? std::conj(a) / std::abs(a) : cplx(1.0, 0.0);
        }
        return Vec{A.domain, std::move(x)};
    }
    reject_pair(A);
}

} // namespace lipop
