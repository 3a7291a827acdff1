#include <doctest.h>

#include <cmath>

#include "lipop/scenario.hpp"

using namespace lipop;

namespace {

const NormedSpace kS1{1, NormKind::l2};
const DiskSampler kSampler; // defaults
const ClassifierParams kParams;

WcOp embed(double alpha, double beta, AnalyticFn phi,
           AnalyticFn psi_entry = AnalyticFn::constant(cplx(1, 0))) {
    return make_wcop(make_symbol(kS1, kS1, {std::move(psi_entry)}),
                     make_self_map(std::move(phi)), SpaceSpec{alpha, kS1, SpaceFlavor::big},
                     SpaceSpec{beta, kS1, SpaceFlavor::big});
}

} // namespace

TEST_SUITE("criteria") {

TEST_CASE("disk supremum engine") {
    const SupResult s1 = sup_over_disk([](cplx z) { return 1.0 - std::norm(z); }, kSampler);
    CHECK(s1.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(s1.witness) < 1e-12);

    const SupResult s2 = sup_over_disk([](cplx z) { return std::abs(z); }, kSampler);
    CHECK(s2.value == doctest::Approx(kSampler.r_max()).epsilon(1e-12));
    for (std::size_t j = 1; j < s2.cumulative.size(); ++j)
        CHECK(s2.cumulative[j] > s2.cumulative[j - 1]);

    // 2|z| (1-|z|^2)^{1/2} peaks at |z| = 1/sqrt(2) with value 1; dense grid oracle
    double oracle = 0.0;
    for (int i = 0; i <= 1000000; ++i) {
        const double t = static_cast<double>(i) / 1000000.0;
        oracle = std::max(oracle, 2.0 * t * std::sqrt(1.0 - t * t));
    }
    const SupResult s3 = sup_over_disk(
        [](cplx z) { return 2.0 * std::abs(z) * std::sqrt(1.0 - std::norm(z)); }, kSampler);
    CHECK(s3.value == doctest::Approx(oracle).epsilon(1e-9));
    CHECK(std::abs(std::abs(s3.witness) - 1.0 / std::sqrt(2.0)) < 1e-5);

    CHECK_THROWS_AS(
        sup_over_disk([](cplx) { return std::numeric_limits<double>::quiet_NaN(); }, kSampler),
        EvalError);
}

TEST_CASE("q-criterion closed forms") {
    CHECK(q_criterion(embed(0.5, 0.5, AnalyticFn::identity()), kSampler).value ==
          doctest::Approx(1.0).epsilon(1e-9));
    for (double r : {0.3, 0.6, 0.9}) {
        const QReport q =
            q_criterion(embed(0.5, 0.5, AnalyticFn::affine(cplx(r, 0), cplx(0, 0))), kSampler);
        CHECK(q.value == doctest::Approx(r).epsilon(1e-6));
        CHECK(std::abs(q.witness) < 1e-9); // ratio maximal at the origin
    }
    // (1+z)/2 pushes the quantity to sqrt(2)/2 along the radius to 1
    const QReport qc =
        q_criterion(embed(0.5, 0.5, AnalyticFn::affine(cplx(0.5, 0), cplx(0.5, 0))), kSampler);
    CHECK(qc.value == doctest::Approx(std::sqrt(0.5)).epsilon(1e-4));
}

TEST_CASE("symbol norm closed forms") {
    const NormedSpace s2{2, NormKind::l2};
    const Mat A = make_mat(s2, s2, {cplx(2, 0), cplx(0, 0), cplx(0, 0), cplx(1, 0)});
    CHECK(psi_lambda_norm(constant_symbol(A), 0.5, kSampler).value ==
          doctest::Approx(2.0).epsilon(1e-12));

    // psi_z = z I: ||psi_0|| = 0 plus sup (1-|z|^2)^{1/2} = 1
    const OperatorSymbol zI = make_symbol(
        s2, s2,
        {AnalyticFn::identity(), AnalyticFn::zero(), AnalyticFn::zero(), AnalyticFn::identity()});
    CHECK(psi_lambda_norm(zI, 0.5, kSampler).value == doctest::Approx(1.0).epsilon(1e-9));

    // [[1, z^2], [0, 1]] in l1 norms: 1 + max of 2t sqrt(1-t^2) = 2
    const NormedSpace l1_2{2, NormKind::l1};
    const OperatorSymbol tri = make_symbol(
        l1_2, l1_2,
        {AnalyticFn::constant(cplx(1, 0)), AnalyticFn::monomial(2), AnalyticFn::zero(),
         AnalyticFn::constant(cplx(1, 0))});
    CHECK(psi_lambda_norm(tri, 0.5, kSampler).value == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("boundedness verdicts from exponent algebra") {
    for (double a : {0.25, 0.5, 0.75})
        for (double b : {0.25, 0.5, 0.75}) {
            const BoundednessReport r =
                boundedness_verdict(embed(a, b, AnalyticFn::identity()), kSampler, kParams);
            if (a >= b) {
                CHECK(r.verdict == BoundedVerdict::bounded);
            } else {
                CHECK(r.verdict == BoundedVerdict::unbounded);
                CHECK(r.q_finiteness == Finiteness::infinite);
            }
        }
    // contraction stays bounded
    CHECK(boundedness_verdict(embed(0.5, 0.5, AnalyticFn::affine(cplx(0.5, 0), cplx(0, 0))),
                              kSampler, kParams)
              .verdict == BoundedVerdict::bounded);
}

TEST_CASE("compactness dichotomy and annulus profiles") {
    const WcOp Whalf = embed(0.5, 0.5, AnalyticFn::affine(cplx(0.5, 0), cplx(0, 0)));
    const BoundednessReport bh = boundedness_verdict(Whalf, kSampler, kParams);
    const CompactnessReport ch = compactness_verdict(Whalf, kSampler, kParams, bh);
    CHECK_FALSE(ch.refused);
    CHECK(ch.verdict == CompactVerdict::compact);
    for (const auto& a : ch.annulus) CHECK(a.empty);

    const WcOp Wid = embed(0.5, 0.5, AnalyticFn::identity());
    const BoundednessReport bi = boundedness_verdict(Wid, kSampler, kParams);
    const CompactnessReport ci = compactness_verdict(Wid, kSampler, kParams, bi);
    CHECK(ci.verdict == CompactVerdict::not_compact);
    for (const auto& a : ci.annulus) {
        CHECK_FALSE(a.empty);
        CHECK(a.value == doctest::Approx(1.0).epsilon(1e-9));
    }

    // boundary-touching map with a symbol vanishing at the touch point
    const WcOp Wvan = embed(0.5, 0.5, AnalyticFn::affine(cplx(0.5, 0), cplx(0.5, 0)),
                            AnalyticFn::affine(cplx(-1, 0), cplx(1, 0)));
    const BoundednessReport bv = boundedness_verdict(Wvan, kSampler, kParams);
    REQUIRE(bv.verdict == BoundedVerdict::bounded);
    const CompactnessReport cv = compactness_verdict(Wvan, kSampler, kParams, bv);
    CHECK(cv.verdict == CompactVerdict::compact);

    // unbounded case is refused with a note
    const WcOp Wun = embed(0.25, 0.75, AnalyticFn::identity());
    const BoundednessReport bu = boundedness_verdict(Wun, kSampler, kParams);
    const CompactnessReport cu = compactness_verdict(Wun, kSampler, kParams, bu);
    CHECK(cu.refused);
    CHECK_FALSE(cu.note.empty());
}

TEST_CASE("divergence at unimodular points is flagged, not thrown") {
    // constant phi = 1 maps everything to the boundary point 1
    const WcOp W = embed(0.5, 0.5, AnalyticFn::constant(cplx(1, 0)), AnalyticFn::identity());
    CHECK(W.phi.constant);
    const QReport q = q_criterion(W, kSampler);
    // phi' = 0 kills the numerator, so no divergence despite |phi| = 1
    CHECK_FALSE(q.divergent);
    CHECK(q.value == 0.0);
}

TEST_CASE("little-space boundedness conditions") {
    const WcOp Whalf = embed(0.5, 0.5, AnalyticFn::affine(cplx(0.5, 0), cplx(0, 0)));
    const BoundednessReport bh = boundedness_verdict(Whalf, kSampler, kParams);
    CHECK(little_boundedness_verdict(Whalf, kSampler, kParams, bh).verdict ==
          LittleBoundedVerdict::sufficient_met);

    const WcOp Wid = embed(0.5, 0.5, AnalyticFn::identity());
    const BoundednessReport bi = boundedness_verdict(Wid, kSampler, kParams);
    CHECK(little_boundedness_verdict(Wid, kSampler, kParams, bi).verdict ==
          LittleBoundedVerdict::sufficient_met);

    // symbol whose weighted derivative plateaus through every sampled radius:
    // (1 - a z)^{1/2} with 1 - a below the deepest sampled 1 - r
    const WcOp Wplat = embed(0.5, 0.5, AnalyticFn::affine(cplx(0.5, 0), cplx(0, 0)),
                             AnalyticFn::power(cplx(1, 0), cplx(1.0 - std::ldexp(1.0, -22), 0), 0.5));
    const BoundednessReport bp = boundedness_verdict(Wplat, kSampler, kParams);
    const LittleBoundednessReport lp = little_boundedness_verdict(Wplat, kSampler, kParams, bp);
    CHECK(lp.psi_deriv_decay == Trend::plateaus);
    CHECK(lp.verdict == LittleBoundedVerdict::not_met);
}

TEST_CASE("little-space compactness conditions") {
    const WcOp Whalf = embed(0.5, 0.5, AnalyticFn::affine(cplx(0.5, 0), cplx(0, 0)));
    const BoundednessReport bh = boundedness_verdict(Whalf, kSampler, kParams);
    const LittleCompactnessReport lh = little_compactness_verdict(Whalf, kSampler, kParams, bh);
    CHECK(lh.verdict == LittleCompactVerdict::conditions_met);
    CHECK(lh.psi_lambda_finite == Finiteness::finite);

    const WcOp Wid = embed(0.5, 0.5, AnalyticFn::identity());
    const BoundednessReport bi = boundedness_verdict(Wid, kSampler, kParams);
    const LittleCompactnessReport li = little_compactness_verdict(Wid, kSampler, kParams, bi);
    CHECK(li.verdict == LittleCompactVerdict::not_compact);
    CHECK(li.radial_q_decay == Trend::plateaus);

    const WcOp Wun = embed(0.25, 0.75, AnalyticFn::identity());
    const BoundednessReport bu = boundedness_verdict(Wun, kSampler, kParams);
    CHECK(little_compactness_verdict(Wun, kSampler, kParams, bu).refused);
}

TEST_CASE("family relative-compactness checker") {
    const DiskSampler s10{10, 128, 16};
    std::vector<VectorFn> dilation;
    for (int k = 1; k <= 10; ++k)
        dilation.push_back(
            scalar_fn(AnalyticFn::scale(cplx(0.1 * k, 0), AnalyticFn::identity())));
    const SetCompactnessReport a = set_compactness_check(dilation, 0.5, s10, kParams);
    CHECK(a.verdict == SetCompactVerdict::relatively_compact);
    CHECK(a.bounded == Finiteness::finite);
    CHECK(a.family_decay == Trend::decays);

    std::vector<VectorFn> concentrating;
    for (int k = 1; k <= 10; ++k)
        concentrating.push_back(
            scalar_fn(AnalyticFn::test_fn(cplx(1.0 - std::ldexp(1.0, -k), 0), 0.5)));
    const SetCompactnessReport b = set_compactness_check(concentrating, 0.5, s10, kParams);
    CHECK(b.verdict == SetCompactVerdict::not_compact);
    CHECK(b.family_decay == Trend::plateaus);

    const SetCompactnessReport c =
        set_compactness_check({scalar_fn(AnalyticFn::zero())}, 0.5, s10, kParams);
    CHECK(c.verdict == SetCompactVerdict::relatively_compact);

    CHECK_THROWS_AS(set_compactness_check({}, 0.5, s10, kParams), InputError);
}

TEST_CASE("weighted sup-norm criterion") {
    const SelfMap id = make_self_map(AnalyticFn::identity());
    const OperatorSymbol one = identity_symbol(kS1);
    CHECK(hinf_criterion(one, id, 0.5, 0.5, kSampler).value ==
          doctest::Approx(1.0).epsilon(1e-9));

    const SelfMap rz = make_self_map(AnalyticFn::affine(cplx(0.6, 0), cplx(0, 0)));
    const SupResult h = hinf_criterion(one, rz, 0.5, 0.5, kSampler);
    CHECK(h.value == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(std::abs(h.witness) < 1e-9);

    const OperatorSymbol zero = make_symbol(kS1, kS1, {AnalyticFn::zero()});
    CHECK(hinf_criterion(zero, id, 0.5, 0.5, kSampler).value == 0.0);
    CHECK_THROWS_AS(hinf_criterion(one, id, 1.0, 0.5, kSampler), InputError);
}

TEST_CASE("Schwarz-Pick bound holds at every sampled point") {
    std::vector<SelfMap> maps = {make_self_map(AnalyticFn::identity()),
                                 make_self_map(AnalyticFn::affine(cplx(0.5, 0), cplx(0.5, 0))),
                                 make_self_map(AnalyticFn::blaschke(cplx(0.3, 0))),
                                 make_self_map(AnalyticFn::blaschke(cplx(0, 0.5))),
                                 make_self_map(AnalyticFn::scale(cplx(0.9, 0),
                                                                 AnalyticFn::monomial(2)))};
    for (const auto& m : maps)
        for (double r : kSampler.radii())
            for (int k = 0; k < 64; ++k) {
                const cplx z = std::polar(r, 2.0 * M_PI * k / 64.0);
                const double num = (1.0 - std::norm(z)) * std::abs(m.deriv(z));
                const double den = 1.0 - std::norm(m.value(z));
                if (den > 1e-300) CHECK(num / den <= 1.0 + 1e-9);
            }
}

TEST_CASE("sampler enlargement never lowers q on the golden corpus") {
    for (const auto& s : golden_corpus()) {
        const WcOp W = build_wcop(s);
        // The radius schedules nest and 512 angles contain the corpus angle
        // grid, so the raw grid maximum is monotone by construction; local
        // refinement is path-dependent, so it only carries the stability
        // clause below.
        const DiskSampler coarse_grid{s.sampler.depth, s.sampler.angles, 0};
        const DiskSampler fine_grid{s.sampler.depth + 4, 512, 0};
        const double q_coarse = q_criterion(W, coarse_grid).value;
        const double q_fine = q_criterion(W, fine_grid).value;
        CHECK(q_fine >= q_coarse - 1e-12);

        const QReport refined_coarse = q_criterion(W, s.sampler);
        const DiskSampler fine{s.sampler.depth + 4, 512, s.sampler.refine};
        const QReport refined_fine = q_criterion(W, fine);
        if (classify_finiteness(refined_coarse.cumulative, s.classifier) == Finiteness::finite) {
            CHECK(refined_fine.value <= refined_coarse.value * 1.01 + 1e-12);
            CHECK(refined_fine.value >= refined_coarse.value * 0.99 - 1e-12);
        }
    }
}

TEST_CASE("q scaling covariance and verdict invariance") {
    const WcOp base = embed(0.5, 0.5, AnalyticFn::affine(cplx(0.5, 0), cplx(0.25, 0)),
                            AnalyticFn::poly({cplx(1, 0), cplx(0.5, 0.5)}));
    const BoundednessReport b0 = boundedness_verdict(base, kSampler, kParams);
    for (double c : {0.5, 2.0, 10.0}) {
        const WcOp Wc = embed(0.5, 0.5, AnalyticFn::affine(cplx(0.5, 0), cplx(0.25, 0)),
                              AnalyticFn::scale(cplx(c, 0),
                                                AnalyticFn::poly({cplx(1, 0), cplx(0.5, 0.5)})));
        const BoundednessReport bc = boundedness_verdict(Wc, kSampler, kParams);
        CHECK(bc.q.value == doctest::Approx(c * b0.q.value).epsilon(1e-9));
        CHECK(bc.verdict == b0.verdict);
    }
}

TEST_CASE("Lipschitz-1 source space degrades the criterion correctly") {
    // For alpha = 1 the denominator exponent vanishes and the governing
    // quantity is the weighted sup of |phi'| ||psi_z||.
    const WcOp W = embed(1.0, 0.5, AnalyticFn::identity());
    const QReport q = q_criterion(W, kSampler);
    CHECK(q.value == doctest::Approx(1.0).epsilon(1e-9)); // sup (1-|z|^2)^{1/2}
    const BoundednessReport b = boundedness_verdict(W, kSampler, kParams);
    CHECK(b.verdict == BoundedVerdict::bounded);

    // beta = 1 target: the symbol norm takes the sup + sup form
    const WcOp W11 = embed(1.0, 1.0, AnalyticFn::affine(cplx(0.5, 0), cplx(0, 0)));
    const BoundednessReport b11 = boundedness_verdict(W11, kSampler, kParams);
    CHECK(b11.psi.value == doctest::Approx(1.0).epsilon(1e-9)); // sup 1 + sup 0
    CHECK(b11.verdict == BoundedVerdict::bounded);
}

TEST_CASE("q-criterion agrees with the weighted sup-norm route") {
    // q_{alpha,beta}(psi, phi) equals the H^infty-type quantity of the
    // derived symbol phi' psi with weights (1-alpha, 1-beta).
    std::vector<WcOp> ops;
    ops.push_back(embed(0.5, 0.5, AnalyticFn::affine(cplx(0.5, 0), cplx(0.25, 0)),
                        AnalyticFn::poly({cplx(1, 0), cplx(0.5, -0.3)})));
    ops.push_back(embed(0.3, 0.7, AnalyticFn::blaschke(cplx(0.4, 0)),
                        AnalyticFn::monomial(2)));
    ops.push_back(embed(0.75, 0.25, AnalyticFn::identity()));
    for (const auto& W : ops) {
        const double q = q_criterion(W, kSampler).value;
        const double h = hinf_criterion(W.psi.scaled_by(W.phi.fn.derivative_fn()), W.phi,
                                        1.0 - W.source.alpha, 1.0 - W.target.alpha, kSampler)
                             .value;
        CHECK(q == doctest::Approx(h).epsilon(1e-9));
    }
}

TEST_CASE("classifier edge behavior") {
    // zero profile is finite and decayed
    CHECK(classify_finiteness(std::vector<double>(20, 0.0), kParams) == Finiteness::finite);
    CHECK(classify_decay(std::vector<double>(20, 0.0), 1.0, kParams) == Trend::decays);
    // geometric growth is flagged infinite
    std::vector<double> growing;
    for (int j = 0; j < 20; ++j) growing.push_back(std::pow(2.0, 0.5 * j));
    CHECK(classify_finiteness(growing, kParams) == Finiteness::infinite);
    // constant profile plateaus
    CHECK(classify_decay(std::vector<double>(20, 0.7), 1.0, kParams) == Trend::plateaus);
}

} // TEST_SUITE
