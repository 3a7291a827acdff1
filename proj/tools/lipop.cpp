// lipop: analyze weighted composition operators between analytic Lipschitz
// spaces on the unit disk, compute function-space norms, run the built-in
// verification suites, and sweep scenario corpora into CSV tables.
//
// Exit codes: 0 computed, 1 verification failure, 2 input error,
// 3 evaluation error.  Verdicts are data, never exit codes.

#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lipop/scenario.hpp"
#include "lipop/verify.hpp"

namespace {

using nlohmann::json;

lipop::VectorFn load_function_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw lipop::InputError("cannot open function file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw lipop::InputError(std::string("JSON parse error in ") + path + ": " + e.what());
    }
    if (j.is_object() && j.contains("components")) {
        const lipop::NormedSpace space =
            j.contains("space") ? lipop::space_from_json(j["space"])
                                : lipop::NormedSpace{static_cast<int>(j["components"].size()),
                                                     lipop::NormKind::l2};
        std::vector<lipop::AnalyticFn> comps;
        for (const auto& c : j["components"]) comps.push_back(lipop::fn_from_json(c));
        return lipop::make_vector_fn(space, std::move(comps));
    }
    return lipop::scalar_fn(lipop::fn_from_json(j));
}

void print_norm(const lipop::NormResult& n) {
    std::printf("norm %.12g\n", n.value);
    std::printf("witness %.12g %.12g\n", n.witness.real(), n.witness.imag());
}

int run_analyze(const std::string& file, bool compact_json) {
    const lipop::Scenario s = lipop::load_scenario_file(file);
    const json report = lipop::analyze_scenario(s);
    if (compact_json)
        std::cout << report.dump() << "\n";
    else
        std::cout << report.dump(2) << "\n";
    return 0;
}

int run_norm(const std::string& file, double* alpha, double* nu, bool lip1) {
    const lipop::VectorFn f = load_function_file(file);
    const lipop::DiskSampler sampler;
    if (lip1) {
        print_norm(lipop::lambda1_norm(f, sampler));
        return 0;
    }
    if (nu) {
        print_norm(lipop::hinf_nu_norm(f, lipop::WeightSpec{*nu}, sampler));
        return 0;
    }
    if (alpha) {
        if (*alpha == 1.0)
            throw lipop::InputError("alpha = 1 uses the Lipschitz-1 norm; pass --lip1");
        print_norm(lipop::lambda_norm(f, *alpha, sampler));
        return 0;
    }
    throw lipop::InputError("pick one of --alpha, --nu, --lip1");
}

int run_sweep(const std::string& corpus_path, const std::string& out_path) {
    std::vector<lipop::Scenario> corpus;
    if (corpus_path == "builtin") {
        corpus = lipop::golden_corpus();
    } else {
        std::ifstream in(corpus_path);
        if (!in) throw lipop::InputError("cannot open corpus file: " + corpus_path);
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw lipop::InputError(std::string("JSON parse error in ") + corpus_path + ": " +
                                    e.what());
        }
        const json& arr = j.is_object() && j.contains("scenarios") ? j["scenarios"] : j;
        if (!arr.is_array()) throw lipop::InputError("corpus must be an array of scenarios");
        for (const auto& sj : arr) corpus.push_back(lipop::scenario_from_json(sj));
    }
    const std::string csv = lipop::sweep_csv(lipop::run_sweep(corpus));
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw lipop::InputError("cannot open output file: " + out_path);
    out << csv;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted composition operators on analytic vector-valued Lipschitz spaces"};
    app.require_subcommand(1);

    std::string analyze_file;
    bool analyze_compact = false;
    CLI::App* analyze = app.add_subcommand("analyze", "analyze a scenario file");
    analyze->add_option("file", analyze_file, "scenario JSON file")->required();
    analyze->add_flag("--json", analyze_compact, "compact single-line JSON output");

    std::string norm_file;
    double norm_alpha = 0.0, norm_nu = 0.0;
    bool norm_has_alpha = false, norm_has_nu = false, norm_lip1 = false;
    CLI::App* norm = app.add_subcommand("norm", "compute a function-space norm");
    norm->add_option("file", norm_file, "function JSON file")->required();
    auto* oa = norm->add_option("--alpha", norm_alpha, "Lipschitz exponent in (0,1)");
    auto* on = norm->add_option("--nu", norm_nu, "weighted sup norm exponent gamma >= 0");
    auto* ol = norm->add_flag("--lip1", norm_lip1, "Lipschitz-1 norm (sup |f| + sup |f'|)");
    oa->excludes(on)->excludes(ol);
    on->excludes(ol);

    std::string suite;
    CLI::App* verify = app.add_subcommand("verify", "run a built-in property suite");
    verify->add_option("--suite", suite, "identities | norms | criteria | equivalence")
        ->required();

    std::string corpus_path, out_path;
    CLI::App* sweep = app.add_subcommand("sweep", "sweep a corpus into a CSV table");
    sweep->add_option("corpus", corpus_path, "corpus JSON file, or \"builtin\"")->required();
    sweep->add_option("out", out_path, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (analyze->parsed()) return run_analyze(analyze_file, analyze_compact);
        if (norm->parsed()) {
            norm_has_alpha = oa->count() > 0;
            norm_has_nu = on->count() > 0;
            return run_norm(norm_file, norm_has_alpha ? &norm_alpha : nullptr,
                            norm_has_nu ? &norm_nu : nullptr, norm_lip1);
        }
        if (verify->parsed()) return lipop::run_verify_suite(suite, std::cout) ? 0 : 1;
        if (sweep->parsed()) return run_sweep(corpus_path, out_path);
    } catch (const lipop::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const lipop::EvalError& e) {
        std::cerr << "evaluation error: " << e.what() << "\n";
        return 3;
    } catch (const lipop::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
