#include "lipop/estimation.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace lipop {

namespace {

double uniform01(std::mt19937& rng) {
    const std::uint64_t hi = rng() >> 5;
    const std::uint64_t lo = rng() >> 6;
    return (static_cast<double>(hi) * 67108864.0 + static_cast<double>(lo)) *
           (1.0 / 9007199254740992.0);
}

// Box-Muller from the pinned uniform; mt19937 sequencing keeps runs identical.
cplx gaussian_cplx(std::mt19937& rng) {
    const double u1 = std::max(uniform01(rng), 1e-300);
    const double u2 = uniform01(rng);
    const double r = std::sqrt(-2.0 * std::log(u1));
    return cplx(r * std::cos(2.0 * M_PI * u2), r * std::sin(2.0 * M_PI * u2));
}

std::string fmt_label(const char* fam, const std::string& detail) {
    return detail.empty() ? std::string(fam) : std::string(fam) + ":" + detail;
}

std::string fmt_cplx_short(cplx z) {
    std::ostringstream os;
    os.precision(4);
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

// The proof's test profile for exponent alpha in (0,1]; alpha = 1 reduces to
// z - a, the linear family of the Lambda_1 argument.
AnalyticFn test_profile(cplx a, double alpha) { return AnalyticFn::test_fn(a, alpha); }

// The witness profile: (1/conj(a)) [ (1-|a|^2)^2 (1-conj(a)z)^(alpha-2)
//                                    - (1-|a|^2) (1-conj(a)z)^(alpha-1) ].
AnalyticFn witness_profile(cplx a, double alpha) {
    const double aa = std::norm(a);
    const cplx inv_conj_a = cplx(1.0, 0.0) / std::conj(a);
    return AnalyticFn::sum(
        {AnalyticFn::power((1.0 - aa) * (1.0 - aa) * inv_conj_a, a, alpha - 2.0),
         AnalyticFn::power(-(1.0 - aa) * inv_conj_a, a, alpha - 1.0)});
}

cplx clamp_param(cplx a) {
    const double m = std::abs(a);
    if (m > 1.0 - 1e-9) return a * ((1.0 - 1e-9) / m);
    return a;
}

} // namespace

std::vector<ExtremalFamily> default_families() {
    return {ExtremalFamily::constants(), ExtremalFamily::monomials(4),
            ExtremalFamily::test_fns(8)};
}

std::vector<ScalarProfile> family_profiles(const ExtremalFamily& fam, const WcOp& W,
                                           const DiskSampler& sampler, cplx q_witness) {
    const double alpha = W.source.alpha;
    std::vector<ScalarProfile> out;
    switch (fam.kind) {
        case ExtremalFamily::Kind::constants:
            out.push_back({"constants", AnalyticFn::constant(cplx(1.0, 0.0))});
            break;
        case ExtremalFamily::Kind::monomials:
            for (int k = 1; k <= fam.max_degree; ++k)
                out.push_back({fmt_label("monomial", "z^" + std::to_string(k)),
                               AnalyticFn::monomial(static_cast<std::size_t>(k))});
            break;
        case ExtremalFamily::Kind::test_fns: {
            const cplx adapted = clamp_param(W.phi.value(q_witness));
            if (std::abs(adapted) >= 1e-6)
                out.push_back(
                    {fmt_label("testfn", "a=phi(z*)=" + fmt_cplx_short(adapted)),
                     test_profile(adapted, alpha)});
            const auto radii = sampler.radii();
            for (std::size_t j = 0; j < radii.size(); j += 2)
                for (int r = 0; r < fam.rays; ++r) {
                    const cplx a = std::polar(radii[j], 2.0 * M_PI * r / fam.rays);
                    out.push_back({fmt_label("testfn", "a=" + fmt_cplx_short(a)),
                                   test_profile(a, alpha)});
                }
            break;
        }
        case ExtremalFamily::Kind::linear: {
            for (double m : {0.0, 0.25, 0.5, 0.75})
                for (int r = 0; r < fam.rays; ++r) {
                    const cplx a = m == 0.0 ? cplx(0.0, 0.0)
                                            : std::polar(m, 2.0 * M_PI * r / fam.rays);
                    out.push_back({fmt_label("linear", "a=" + fmt_cplx_short(a)),
                                   AnalyticFn::poly({-a, cplx(1.0, 0.0)})});
                    if (m == 0.0) break;
                }
            break;
        }
        case ExtremalFamily::Kind::witness_seq: {
            for (cplx zn : fam.seq) {
                const cplx a = clamp_param(W.phi.value(zn));
                if (std::abs(a) < 1e-6) continue;
                out.push_back({fmt_label("witness", "phi(z_n)=" + fmt_cplx_short(a)),
                               witness_profile(a, alpha)});
            }
            break;
        }
    }
    return out;
}

std::vector<Vec> unit_directions(const NormedSpace& space, int extra_random, unsigned seed) {
    std::vector<Vec> dirs;
    for (int j = 0; j < space.dim; ++j) {
        std::vector<cplx> e(space.dim, cplx(0.0, 0.0));
        e[j] = cplx(1.0, 0.0);
        dirs.push_back(Vec{space, std::move(e)});
    }
    std::mt19937 rng(seed);
    for (int i = 0; i < extra_random; ++i) {
        std::vector<cplx> e(space.dim);
        for (auto& c : e) c = gaussian_cplx(rng);
        Vec v{space, std::move(e)};
        const double n = vec_norm(v);
        if (n < 1e-12) {
            --i;
            continue;
        }
        dirs.push_back(vec_scale(cplx(1.0 / n, 0.0), v));
    }
    return dirs;
}

LowerBoundResult lower_bound_opnorm(const WcOp& W, const std::vector<ExtremalFamily>& families,
                                    const DiskSampler& sampler) {
    const double alpha = W.source.alpha;
    const double beta = W.target.alpha;
    const QReport q = q_criterion(W, sampler);

    // Direction set: basis + the symbol-norm maximizer at the witness + 64
    // seeded random unit vectors.
    std::vector<Vec> dirs = unit_directions(W.source.space, 64, 0x5eedu);
    {
        const Mat at_witness = W.psi.eval_at(q.witness);
        Vec adapted = opnorm_maximizer(at_witness);
        const double n = vec_norm(adapted);
        if (n > 1e-12) dirs.insert(dirs.begin() + W.source.space.dim,
                                   vec_scale(cplx(1.0 / n, 0.0), adapted));
    }

    std::vector<ScalarProfile> profiles;
    std::vector<std::size_t> family_of; // profile -> family index (constants tracking)
    for (std::size_t fi = 0; fi < families.size(); ++fi) {
        auto fp = family_profiles(families[fi], W, sampler, q.witness);
        for (auto& p : fp) {
            profiles.push_back(std::move(p));
            family_of.push_back(fi);
        }
    }

    // Shared grid; the per-member target norm follows the Bloch form from
    // cached symbol matrices, so the loop nest is grid x profiles x dirs with
    // O(dim) work inside.
    std::vector<cplx> pts;
    const auto radii = sampler.radii();
    pts.push_back(cplx(0.0, 0.0));
    for (double r : radii)
        for (int k = 0; k < sampler.angles; ++k)
            pts.push_back(std::polar(r, 2.0 * M_PI * k / sampler.angles));

    const std::size_t P = pts.size();
    std::vector<Mat> psi_at, dpsi_at;
    psi_at.reserve(P);
    dpsi_at.reserve(P);
    std::vector<cplx> phi_at(P), dphi_at(P);
    std::vector<double> w_at(P);
    const double e_target = 1.0 - beta;
    for (std::size_t i = 0; i < P; ++i) {
        psi_at.push_back(W.psi.eval_at(pts[i]));
        dpsi_at.push_back(W.psi.deriv_at(pts[i]));
        phi_at[i] = W.phi.value(pts[i]);
        dphi_at[i] = W.phi.deriv(pts[i]);
        w_at[i] = std::pow(1.0 - std::norm(pts[i]), e_target);
    }

    // Profile values at phi(z) plus the scalar source norm, once per profile.
    const std::size_t NP = profiles.size();
    std::vector<std::vector<cplx>> sv(NP), sd(NP);
    std::vector<double> source_norm(NP);
    for (std::size_t p = 0; p < NP; ++p) {
        sv[p].resize(P);
        sd[p].resize(P);
        for (std::size_t i = 0; i < P; ++i) {
            sv[p][i] = profiles[p].fn.value(phi_at[i]);
            sd[p][i] = profiles[p].fn.deriv(phi_at[i]);
        }
        source_norm[p] = space_norm(scalar_fn(profiles[p].fn), alpha, sampler).value;
    }

    LowerBoundResult out;
    const int m = W.target.space.dim;
    Vec work{W.target.space, std::vector<cplx>(static_cast<std::size_t>(m))};
    for (std::size_t d = 0; d < dirs.size(); ++d) {
        // Cache psi_z x and psi'_z x along the grid for this direction.
        std::vector<cplx> U1(P * m), U2(P * m);
        for (std::size_t i = 0; i < P; ++i) {
            const Mat& A = psi_at[i];
            const Mat& B = dpsi_at[i];
            for (int r = 0; r < m; ++r) {
                cplx a1(0.0, 0.0), a2(0.0, 0.0);
                for (int c = 0; c < A.domain.dim; ++c) {
                    a1 += A.at(r, c) * dirs[d].entries[c];
                    a2 += B.at(r, c) * dirs[d].entries[c];
                }
                U1[i * m + r] = a1;
                U2[i * m + r] = a2;
            }
        }
        for (std::size_t p = 0; p < NP; ++p) {
            if (source_norm[p] < 1e-12) continue;
            double sup_part = 0.0;
            double sup_val = 0.0; // only used when beta = 1
            for (std::size_t i = 0; i < P; ++i) {
                const cplx c1 = dphi_at[i] * sd[p][i];
                const cplx c0 = sv[p][i];
                for (int r = 0; r < m; ++r)
                    work.entries[r] = c1 * U1[i * m + r] + c0 * U2[i * m + r];
                const double dv = vec_norm(work);
                if (beta == 1.0) {
                    for (int r = 0; r < m; ++r) work.entries[r] = c0 * U1[i * m + r];
                    sup_val = std::max(sup_val, vec_norm(work));
                    sup_part = std::max(sup_part, dv);
                } else {
                    sup_part = std::max(sup_part, w_at[i] * dv);
                }
            }
            double target;
            if (beta == 1.0) {
                target = sup_val + sup_part;
            } else {
                for (int r = 0; r < m; ++r) work.entries[r] = sv[p][0] * U1[0 * m + r];
                target = vec_norm(work) + sup_part;
            }
            const double cand = target / source_norm[p];
            if (families[family_of[p]].kind == ExtremalFamily::Kind::constants)
                out.constants_value = std::max(out.constants_value, cand);
            if (cand > out.value) {
                out.value = cand;
                out.best_member = profiles[p].label + " (x=" + std::to_string(d) + ")";
            }
        }
    }
    return out;
}

TestFnProperties test_fn_properties(cplx a, const Vec& x, double alpha) {
    const AnalyticFn f = AnalyticFn::test_fn(a, alpha);
    const VectorFn fx = tensor_fn(f, x);
    return TestFnProperties{fx.value(a), fx.deriv(a)};
}

std::vector<WitnessRow> noncompact_witness(const WcOp& W, const std::vector<cplx>& z_seq,
                                           const DiskSampler& sampler, int n_start) {
    std::vector<WitnessRow> rows;
    rows.reserve(z_seq.size());
    int n = n_start;
    for (cplx zn : z_seq) {
        const cplx a = W.phi.value(zn);
        if (std::abs(a) <= 0.5)
            throw InputError("non-compactness witness requires |phi(z_n)| > 1/2");
        const Mat psi_zn = W.psi.eval_at(zn);
        Vec xn = opnorm_maximizer(psi_zn);
        const double nx = vec_norm(xn);
        if (nx > 0.0) xn = vec_scale(cplx(1.0 / nx, 0.0), xn);

        const VectorFn fn = tensor_fn(witness_profile(clamp_param(a), W.source.alpha), xn);
        WitnessRow row;
        row.z_n = zn;
        row.n = n;
        row.image_norm = image_space_norm(W, fn, sampler, {zn}).value;
        row.q_at_zn = q_quantity(W, zn);
        row.lower_bound = row.q_at_zn * static_cast<double>(n) / (n + 1.0);
        rows.push_back(row);
        ++n;
    }
    return rows;
}

SweepRow compute_sweep_row(const std::string& id, const WcOp& W, const DiskSampler& sampler,
                           const ClassifierParams& params) {
    SweepRow row;
    row.id = id;
    row.alpha = W.source.alpha;
    row.beta = W.target.alpha;
    const BoundednessReport b = boundedness_verdict(W, sampler, params);
    row.q = b.q.divergent ? std::numeric_limits<double>::infinity() : b.q.value;
    row.psi_norm = b.psi.value;
    row.criterion = std::max(row.q, row.psi_norm);
    row.bounded = b.verdict;
    const CompactnessReport c = compactness_verdict(W, sampler, params, b);
    row.compact_refused = c.refused;
    row.compact = c.verdict;
    if (b.verdict == BoundedVerdict::bounded) {
        const LowerBoundResult lb = lower_bound_opnorm(W, default_families(), sampler);
        row.has_estimate = true;
        row.lower_bound = lb.value;
        row.ratio = row.criterion > 0.0 ? lb.value / row.criterion : 0.0;
    }
    return row;
}

} // namespace lipop
