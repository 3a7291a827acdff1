#include "lipop/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>

#include "lipop/fn_nodes.hpp"

namespace lipop {

using nlohmann::json;

namespace {

cplx cplx_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw InputError("complex values are [re, im] pairs");
    return cplx(j[0].get<double>(), j[1].get<double>());
}

json cplx_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

double require_number(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number())
        throw InputError(std::string("missing or non-numeric field \"") + field + "\"");
    return j[field].get<double>();
}

} // namespace

AnalyticFn fn_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw InputError("function spec must be an object with a \"kind\" field");
    const std::string kind = j["kind"].get<std::string>();
    try {
        if (kind == "poly") {
            if (!j.contains("coeffs") || !j["coeffs"].is_array())
                throw InputError("poly spec needs a \"coeffs\" array");
            std::vector<cplx> coeffs;
            for (const auto& c : j["coeffs"]) coeffs.push_back(cplx_from_json(c));
            return AnalyticFn::poly(std::move(coeffs));
        }
        if (kind == "power")
            return AnalyticFn::power(cplx_from_json(j.at("c")), cplx_from_json(j.at("a")),
                                     require_number(j, "gamma"));
        if (kind == "testfn")
            return AnalyticFn::test_fn(cplx_from_json(j.at("a")), require_number(j, "alpha"));
        if (kind == "affine")
            return AnalyticFn::affine(cplx_from_json(j.at("s")), cplx_from_json(j.at("c")));
        if (kind == "blaschke") return AnalyticFn::blaschke(cplx_from_json(j.at("a")));
        if (kind == "sum") {
            if (!j.contains("terms") || !j["terms"].is_array())
                throw InputError("sum spec needs a \"terms\" array");
            std::vector<AnalyticFn> terms;
            for (const auto& t : j["terms"]) terms.push_back(fn_from_json(t));
            return AnalyticFn::sum(std::move(terms));
        }
        if (kind == "scale")
            return AnalyticFn::scale(cplx_from_json(j.at("c")), fn_from_json(j.at("inner")));
        if (kind == "product")
            return AnalyticFn::product(fn_from_json(j.at("f")), fn_from_json(j.at("g")));
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed \"") + kind + "\" function spec: " + e.what());
    }
    throw InputError("unknown function kind: \"" + kind + "\"");
}

namespace {

struct FnToJson {
    json operator()(const PolyNode& n) const {
        json coeffs = json::array();
        for (cplx c : n.coeffs) coeffs.push_back(cplx_to_json(c));
        return json{{"kind", "poly"}, {"coeffs", coeffs}};
    }
    json operator()(const PowerNode& n) const {
        return json{{"kind", "power"},
                    {"c", cplx_to_json(n.c)},
                    {"a", cplx_to_json(n.a)},
                    {"gamma", n.gamma}};
    }
    json operator()(const TestFnNode& n) const {
        return json{{"kind", "testfn"}, {"a", cplx_to_json(n.a)}, {"alpha", n.alpha}};
    }
    json operator()(const AffineNode& n) const {
        return json{{"kind", "affine"}, {"s", cplx_to_json(n.s)}, {"c", cplx_to_json(n.c)}};
    }
    json operator()(const BlaschkeNode& n) const {
        return json{{"kind", "blaschke"}, {"a", cplx_to_json(n.a)}};
    }
    json operator()(const SumNode& n) const {
        json terms = json::array();
        for (const auto& t : n.terms) terms.push_back(fn_to_json(t));
        return json{{"kind", "sum"}, {"terms", terms}};
    }
    json operator()(const ScaleNode& n) const {
        return json{{"kind", "scale"}, {"c", cplx_to_json(n.c)}, {"inner", fn_to_json(n.inner)}};
    }
    json operator()(const ProductNode& n) const {
        return json{{"kind", "product"}, {"f", fn_to_json(n.lhs)}, {"g", fn_to_json(n.rhs)}};
    }
};

} // namespace

json fn_to_json(const AnalyticFn& f) { return std::visit(FnToJson{}, f.node().v); }

NormedSpace space_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("norm"))
        throw InputError("space spec needs \"dim\" and \"norm\" fields");
    const int dim = j["dim"].get<int>();
    if (dim < 1) throw InputError("space dimension must be >= 1");
    return NormedSpace{dim, norm_kind_from_string(j["norm"].get<std::string>())};
}

json space_to_json(const NormedSpace& s) {
    return json{{"dim", s.dim}, {"norm", to_string(s.norm)}};
}

DiskSampler sampler_from_json(const json& j) {
    DiskSampler s;
    if (j.contains("J")) s.depth = j["J"].get<int>();
    if (j.contains("angles")) s.angles = j["angles"].get<int>();
    if (j.contains("refine")) s.refine = j["refine"].get<int>();
    if (s.depth < 1 || s.angles < 4 || s.refine < 0)
        throw InputError("sampler spec out of range (J >= 1, angles >= 4, refine >= 0)");
    return s;
}

json sampler_to_json(const DiskSampler& s) {
    return json{{"J", s.depth}, {"angles", s.angles}, {"refine", s.refine}};
}

ClassifierParams classifier_from_json(const json& j) {
    ClassifierParams p;
    if (j.contains("rel_tol")) p.rel_tol = j["rel_tol"].get<double>();
    if (j.contains("growth_factor")) p.growth_factor = j["growth_factor"].get<double>();
    if (j.contains("abs_tol")) p.abs_tol = j["abs_tol"].get<double>();
    if (j.contains("decay_drop")) p.decay_drop = j["decay_drop"].get<double>();
    if (j.contains("abs_decay")) p.abs_decay = j["abs_decay"].get<double>();
    if (j.contains("deltas")) {
        p.deltas.clear();
        for (const auto& d : j["deltas"]) p.deltas.push_back(d.get<double>());
        if (p.deltas.empty()) throw InputError("classifier delta schedule must be nonempty");
    }
    return p;
}

json classifier_to_json(const ClassifierParams& p) {
    return json{{"rel_tol", p.rel_tol},     {"growth_factor", p.growth_factor},
                {"abs_tol", p.abs_tol},     {"decay_drop", p.decay_drop},
                {"abs_decay", p.abs_decay}, {"deltas", p.deltas}};
}

Scenario scenario_from_json(const json& j) {
    if (!j.is_object()) throw InputError("scenario must be a JSON object");
    Scenario s;
    if (j.contains("id")) s.id = j["id"].get<std::string>();
    s.alpha = require_number(j, "alpha");
    s.beta = require_number(j, "beta");
    if (!(s.alpha > 0.0 && s.alpha <= 1.0) || !(s.beta > 0.0 && s.beta <= 1.0))
        throw InputError("alpha and beta must lie in (0, 1]");
    if (!j.contains("X") || !j.contains("Y")) throw InputError("scenario needs X and Y specs");
    s.X = space_from_json(j["X"]);
    s.Y = space_from_json(j["Y"]);
    if (!j.contains("phi")) throw InputError("scenario needs a phi function spec");
    s.phi = fn_from_json(j["phi"]);
    if (!j.contains("psi") || !j["psi"].is_object() || !j["psi"].contains("entries"))
        throw InputError("scenario needs psi = {\"entries\": [[...], ...]}");
    const auto& rows = j["psi"]["entries"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != s.Y.dim)
        throw InputError("psi entry grid must have Y.dim rows");
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != s.X.dim)
            throw InputError("psi entry grid must have X.dim columns");
        std::vector<AnalyticFn> r;
        for (const auto& e : row) r.push_back(fn_from_json(e));
        s.psi_rows.push_back(std::move(r));
    }
    if (j.contains("sampler")) s.sampler = sampler_from_json(j["sampler"]);
    if (j.contains("classifier")) s.classifier = classifier_from_json(j["classifier"]);
    return s;
}

json scenario_to_json(const Scenario& s) {
    json rows = json::array();
    for (const auto& row : s.psi_rows) {
        json r = json::array();
        for (const auto& e : row) r.push_back(fn_to_json(e));
        rows.push_back(r);
    }
    return json{{"id", s.id},
                {"alpha", s.alpha},
                {"beta", s.beta},
                {"X", space_to_json(s.X)},
                {"Y", space_to_json(s.Y)},
                {"phi", fn_to_json(s.phi)},
                {"psi", json{{"entries", rows}}},
                {"sampler", sampler_to_json(s.sampler)},
                {"classifier", classifier_to_json(s.classifier)}};
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open scenario file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InputError(std::string("JSON parse error in ") + path + ": " + e.what());
    }
    return scenario_from_json(j);
}

WcOp build_wcop(const Scenario& s) {
    std::vector<AnalyticFn> entries;
    entries.reserve(static_cast<std::size_t>(s.X.dim) * s.Y.dim);
    for (const auto& row : s.psi_rows)
        for (const auto& e : row) entries.push_back(e);
    OperatorSymbol psi = make_symbol(s.X, s.Y, std::move(entries));
    SelfMap phi = make_self_map(s.phi);
    return make_wcop(std::move(psi), std::move(phi), SpaceSpec{s.alpha, s.X, SpaceFlavor::big},
                     SpaceSpec{s.beta, s.Y, SpaceFlavor::big});
}

namespace {

json fin_or_null(double v) {
    if (std::isinf(v) || std::isnan(v)) return nullptr;
    return v;
}

json profile_to_json(const std::vector<double>& p) {
    json out = json::array();
    for (double v : p) out.push_back(fin_or_null(v));
    return out;
}

} // namespace

json analyze_scenario(const Scenario& s) {
    const WcOp W = build_wcop(s);
    const CriterionReport rep = run_criteria(W, s.sampler, s.classifier);

    json out;
    out["id"] = s.id;
    out["alpha"] = s.alpha;
    out["beta"] = s.beta;
    out["X"] = space_to_json(s.X);
    out["Y"] = space_to_json(s.Y);
    out["phi_sup_modulus"] = W.phi.sup_modulus_certificate;
    out["phi_constant"] = W.phi.constant;

    out["q_value"] = rep.bounded.q.divergent ? json(nullptr) : fin_or_null(rep.bounded.q.value);
    out["q_witness"] = cplx_to_json(rep.bounded.q.witness);
    out["q_divergent"] = rep.bounded.q.divergent;
    out["q_profile"] = profile_to_json(rep.bounded.q.cumulative);
    out["psi_lambda_value"] = fin_or_null(rep.bounded.psi.value);
    out["psi_lambda_profile"] = profile_to_json(rep.bounded.psi.cumulative);
    out["psi_little_profile"] = profile_to_json(rep.bounded.psi.per_circle);

    out["bounded_verdict"] = to_string(rep.bounded.verdict);
    out["compact_verdict"] =
        rep.compact.refused ? "refused" : to_string(rep.compact.verdict);
    json annulus = json::array();
    for (const auto& a : rep.compact.annulus)
        annulus.push_back(json{{"delta", a.delta},
                               {"value", a.empty ? json(nullptr) : fin_or_null(a.value)},
                               {"empty", a.empty}});
    out["annulus_profile"] = annulus;
    out["t_psi_compact"] = rep.t_psi_compact;

    out["little_bounded"] = json{
        {"verdict", to_string(rep.little_bounded.verdict)},
        {"big_space", to_string(rep.little_bounded.big_space)},
        {"psi_deriv_decay", to_string(rep.little_bounded.psi_deriv_decay)},
        {"phi_psi_decay", to_string(rep.little_bounded.phi_psi_decay)},
        {"phi_psi_profile", profile_to_json(rep.little_bounded.phi_psi_profile)}};
    out["little_compact"] = json{
        {"verdict", rep.little_compact.refused ? "refused" : to_string(rep.little_compact.verdict)},
        {"radial_q_decay", to_string(rep.little_compact.radial_q_decay)},
        {"psi_deriv_decay", to_string(rep.little_compact.psi_deriv_decay)},
        {"psi_lambda_finite", to_string(rep.little_compact.psi_lambda_finite)},
        {"radial_q_profile", profile_to_json(rep.little_compact.radial_q_profile)}};

    if (rep.bounded.verdict == BoundedVerdict::bounded) {
        const LowerBoundResult lb = lower_bound_opnorm(W, default_families(), s.sampler);
        const double C = std::max(rep.bounded.q.value, rep.bounded.psi.value);
        out["lower_bound"] = json{{"value", lb.value}, {"best_member", lb.best_member}};
        out["criterion_max"] = fin_or_null(C);
        out["ratio"] = C > 0.0 ? json(lb.value / C) : json(nullptr);

        // || W f - W K_r f || over a small probe set; decays toward r = 1
        // exactly when the compactness mechanism bites.
        std::vector<VectorFn> probes;
        {
            std::vector<cplx> e1(s.X.dim, cplx(0, 0));
            e1[0] = cplx(1, 0);
            const Vec x{s.X, e1};
            probes.push_back(tensor_fn(AnalyticFn::constant(cplx(1, 0)), x));
            probes.push_back(tensor_fn(AnalyticFn::identity(), x));
            probes.push_back(tensor_fn(AnalyticFn::test_fn(cplx(0.7, 0), s.alpha), x));
        }
        json diag = json::array();
        for (double r : {0.9, 0.99, 0.999}) {
            double worst = 0.0;
            for (const auto& f : probes) {
                const VectorFn diff = vf_sub(f, dilate(f, r));
                worst = std::max(worst, image_space_norm(W, diff, s.sampler).value);
            }
            diag.push_back(json{{"r", r}, {"value", fin_or_null(worst)}});
        }
        out["dilation_diagnostics"] = diag;
    } else {
        out["lower_bound"] = nullptr;
        out["criterion_max"] =
            rep.bounded.q.divergent
                ? json(nullptr)
                : fin_or_null(std::max(rep.bounded.q.value, rep.bounded.psi.value));
        out["ratio"] = nullptr;
        out["dilation_diagnostics"] = json::array();
    }
    out["notes"] = rep.notes;
    return out;
}

namespace {

double uniform01(std::mt19937& rng) {
    const std::uint64_t hi = rng() >> 5;
    const std::uint64_t lo = rng() >> 6;
    return (static_cast<double>(hi) * 67108864.0 + static_cast<double>(lo)) *
           (1.0 / 9007199254740992.0);
}

cplx random_coeff(std::mt19937& rng) {
    return cplx(2.0 * uniform01(rng) - 1.0, 2.0 * uniform01(rng) - 1.0);
}

Scenario basic_scenario(const std::string& id, double alpha, double beta, AnalyticFn phi,
                        std::vector<std::vector<AnalyticFn>> psi_rows, NormedSpace X,
                        NormedSpace Y) {
    Scenario s;
    s.id = id;
    s.alpha = alpha;
    s.beta = beta;
    s.X = X;
    s.Y = Y;
    s.phi = std::move(phi);
    s.psi_rows = std::move(psi_rows);
    s.sampler = DiskSampler{14, 64, 12}; // deep enough for the default annulus schedule
    return s;
}

} // namespace

std::vector<Scenario> golden_corpus() {
    std::vector<Scenario> corpus;
    const NormedSpace s1{1, NormKind::l2};
    const AnalyticFn one = AnalyticFn::constant(cplx(1.0, 0.0));
    const AnalyticFn idfn = AnalyticFn::identity();

    corpus.push_back(basic_scenario("identity", 0.5, 0.5, idfn, {{one}}, s1, s1));

    for (double r : {0.3, 0.6, 0.9}) {
        char id[32];
        std::snprintf(id, sizeof id, "dilate-r%02d", static_cast<int>(r * 100 + 0.5));
        corpus.push_back(basic_scenario(id, 0.5, 0.5,
                                        AnalyticFn::affine(cplx(r, 0.0), cplx(0.0, 0.0)),
                                        {{one}}, s1, s1));
    }

    for (double a : {0.25, 0.5, 0.75})
        for (double b : {0.25, 0.5, 0.75}) {
            char id[32];
            std::snprintf(id, sizeof id, "embed-a%02d-b%02d", static_cast<int>(a * 100),
                          static_cast<int>(b * 100));
            corpus.push_back(basic_scenario(id, a, b, idfn, {{one}}, s1, s1));
        }

    // Contractive map with a nontrivial 2x2 symbol.
    {
        const NormedSpace s2{2, NormKind::l2};
        std::vector<std::vector<AnalyticFn>> psi = {
            {one, AnalyticFn::zero()},
            {AnalyticFn::zero(), idfn}};
        corpus.push_back(basic_scenario("halfmap-diag", 0.4, 0.6,
                                        AnalyticFn::affine(cplx(0.5, 0.0), cplx(0.0, 0.0)),
                                        std::move(psi), s2, s2));
    }
    // Boundary-touching map with a symbol vanishing at the touch point.
    corpus.push_back(basic_scenario(
        "cusp-vanishing", 0.5, 0.5, AnalyticFn::affine(cplx(0.5, 0.0), cplx(0.5, 0.0)),
        {{AnalyticFn::affine(cplx(-1.0, 0.0), cplx(1.0, 0.0))}}, s1, s1));
    // Same map with a flat symbol: limsup along |phi| -> 1 stays positive.
    corpus.push_back(basic_scenario("cusp-flat", 0.5, 0.5,
                                    AnalyticFn::affine(cplx(0.5, 0.0), cplx(0.5, 0.0)), {{one}},
                                    s1, s1));
    corpus.push_back(
        basic_scenario("blaschke-03", 0.5, 0.5, AnalyticFn::blaschke(cplx(0.3, 0.0)), {{one}},
                       s1, s1));
    corpus.push_back(basic_scenario("blaschke-05i", 0.5, 0.5,
                                    AnalyticFn::blaschke(cplx(0.0, 0.5)), {{one}}, s1, s1));
    {
        const NormedSpace s2{2, NormKind::l1};
        std::vector<std::vector<AnalyticFn>> psi = {
            {one, idfn},
            {AnalyticFn::zero(), one}};
        corpus.push_back(basic_scenario("affine-shift", 0.3, 0.7,
                                        AnalyticFn::affine(cplx(0.5, 0.0), cplx(0.3, 0.0)),
                                        std::move(psi), s2, s2));
    }
    corpus.push_back(basic_scenario("testfn-symbol", 0.5, 0.5,
                                    AnalyticFn::affine(cplx(0.5, 0.0), cplx(0.0, 0.0)),
                                    {{AnalyticFn::test_fn(cplx(0.5, 0.0), 0.5)}}, s1, s1));
    corpus.push_back(basic_scenario("power-symbol", 0.6, 0.4,
                                    AnalyticFn::affine(cplx(0.8, 0.0), cplx(0.0, 0.0)),
                                    {{AnalyticFn::power(cplx(1.0, 0.0), cplx(0.7, 0.0), 0.5)}},
                                    s1, s1));

    // Seeded random scenarios: polynomial self-maps (boundary-normalized) and
    // polynomial symbols over mixed norms.
    std::mt19937 rng(0x601dc0deu);
    const NormKind kinds[] = {NormKind::l1, NormKind::l2, NormKind::linf};
    const double levels[] = {0.35, 0.5, 0.65, 0.8};
    for (int i = 0; i < 9; ++i) {
        char id[32];
        std::snprintf(id, sizeof id, "rand-%02d", i);
        // Self-map: random degree-<=3 polynomial scaled well inside the disk.
        std::vector<cplx> pc(4);
        for (auto& c : pc) c = random_coeff(rng);
        double bsup = 0.0;
        AnalyticFn praw = AnalyticFn::poly(pc);
        for (int k = 0; k < 256; ++k)
            bsup = std::max(bsup, std::abs(praw.value(std::polar(1.0, 2.0 * M_PI * k / 256.0))));
        const double scale_to = 0.55 + 0.4 * uniform01(rng);
        AnalyticFn phi = AnalyticFn::scale(cplx(scale_to / std::max(bsup, 1e-9), 0.0), praw);

        const NormKind nk = kinds[rng() % 3];
        const int dim = 1 + static_cast<int>(rng() % 2);
        const NormedSpace sp{dim, nk};
        std::vector<std::vector<AnalyticFn>> rows;
        for (int r = 0; r < dim; ++r) {
            std::vector<AnalyticFn> row;
            for (int c = 0; c < dim; ++c) {
                std::vector<cplx> qc(1 + rng() % 3);
                for (auto& cc : qc) cc = random_coeff(rng);
                row.push_back(AnalyticFn::poly(std::move(qc)));
            }
            rows.push_back(std::move(row));
        }
        const double a = levels[rng() % 4];
        double b = levels[rng() % 4];
        if (b > a) b = a; // bias toward bounded scenarios
        corpus.push_back(basic_scenario(id, a, b, std::move(phi), std::move(rows), sp, sp));
    }
    return corpus;
}

std::vector<SweepRow> run_sweep(const std::vector<Scenario>& corpus) {
    std::vector<SweepRow> rows;
    rows.reserve(corpus.size());
    for (const auto& s : corpus)
        rows.push_back(compute_sweep_row(s.id, build_wcop(s), s.sampler, s.classifier));
    return rows;
}

namespace {

std::string csv_num(double v) {
    if (std::isinf(v) || std::isnan(v)) return "";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out =
        "scenario_id,alpha,beta,q,psi_norm,C,L,ratio,bounded_verdict,compact_verdict\n";
    for (const auto& r : rows) {
        out += r.id;
        out += ',';
        out += csv_num(r.alpha);
        out += ',';
        out += csv_num(r.beta);
        out += ',';
        out += csv_num(r.q);
        out += ',';
        out += csv_num(r.psi_norm);
        out += ',';
        out += csv_num(r.criterion);
        out += ',';
        out += r.has_estimate ? csv_num(r.lower_bound) : "";
        out += ',';
        out += r.has_estimate ? csv_num(r.ratio) : "";
        out += ',';
        out += to_string(r.bounded);
        out += ',';
        out += r.compact_refused ? "refused" : to_string(r.compact);
        out += '\n';
    }
    return out;
}

} // namespace lipop
