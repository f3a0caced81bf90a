// thermoflow: file-driven front end for the thermoflow library.
//
// Commands operate on a model file (see README for the format) and write a
// deterministic report to stdout: identical inputs and seed give
// byte-identical output. Exit codes: 0 success, 1 domain error, 2 parse
// error. THERMOFLOW_LOG={quiet,info,debug} controls stderr chatter.

#include "thermoflow/bowen.hpp"
#include "thermoflow/errors.hpp"
#include "thermoflow/model.hpp"
#include "thermoflow/perturbation.hpp"
#include "thermoflow/potential.hpp"
#include "thermoflow/pressure.hpp"
#include "thermoflow/report.hpp"
#include "thermoflow/sampling.hpp"
#include "thermoflow/suspension.hpp"
#include "thermoflow/verify.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace thermoflow;

enum class LogLevel { quiet = 0, info = 1, debug = 2 };

LogLevel log_level() {
    const char* env = std::getenv("THERMOFLOW_LOG");
    if (env == nullptr) return LogLevel::quiet;
    const std::string v(env);
    if (v == "info") return LogLevel::info;
    if (v == "debug") return LogLevel::debug;
    return LogLevel::quiet;
}

void log_info(const std::string& msg) {
    if (log_level() >= LogLevel::info) std::cerr << "[thermoflow] " << msg << "\n";
}

void log_debug(const std::string& msg) {
    if (log_level() >= LogLevel::debug) std::cerr << "[thermoflow:debug] " << msg << "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open model file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Options {
    std::string model_path;
    std::string potential_name;
    std::string roof_name;
    std::string fiber_name;
    std::string phi_name;
    std::string csv_path;
    double epsilon = 0.01;
    int count = 1;
    std::uint64_t seed = 0;
    bool normalize = false;
};

ModelFile load_model(const Options& opt, Report& rep) {
    const std::string text = read_file(opt.model_path);
    rep.model_digest = fnv1a64(text);
    log_info("parsing " + opt.model_path);
    ModelFile model = parse_model(text);
    log_debug("model: n=" + std::to_string(model.sft->alphabet_size()) + ", " +
              std::to_string(model.potentials.size()) + " potentials, " +
              std::to_string(model.roofs.size()) + " roofs, " +
              std::to_string(model.fibers.size()) + " fibers");
    return model;
}

// Falls back to the unique block of the right kind when no name was given.
template <typename T>
const T& pick(const std::vector<std::pair<std::string, T>>& blocks, const std::string& name,
              const char* kind) {
    if (!name.empty()) {
        for (const auto& [n, v] : blocks)
            if (n == name) return v;
        throw Error(std::string("no ") + kind + " named '" + name + "' in the model");
    }
    if (blocks.size() == 1) return blocks.front().second;
    throw Error(blocks.empty() ? std::string("model has no ") + kind + " block"
                               : std::string("model has several ") + kind +
                                     " blocks; pick one with --" + kind);
}

void emit(const Report& rep, const Options& opt) {
    std::cout << rep.to_text();
    if (!opt.csv_path.empty()) {
        std::ofstream out(opt.csv_path, std::ios::binary);
        if (!out) throw Error("cannot open csv file '" + opt.csv_path + "'");
        out << rep.to_csv();
    }
}

void add_measure(Report& rep, const std::string& prefix, const MarkovMeasure& mu) {
    const int n = mu.base().alphabet_size();
    const int s = mu.chain().alphabet_size();
    for (int i = 0; i < s; ++i)
        rep.add(prefix + ".pi[" + word_to_string(mu.blocks()[i], n) + "]", mu.pi()[i]);
    for (int i = 0; i < s; ++i)
        for (int j : mu.chain().out_neighbors(i))
            rep.add(prefix + ".trans[" + word_to_string(mu.blocks()[i], n) + "][" +
                        word_to_string(mu.blocks()[j], n) + "]",
                    mu.trans()[i][j]);
}

void add_bowen(Report& rep, const std::string& prefix, const BowenSolution& sol) {
    log_debug("root solve: " + std::to_string(sol.iterations) + " pressure evaluations, residual " +
              format17(sol.residual));
    rep.add(prefix, sol.t_star);
    rep.add(prefix + ".residual", sol.residual);
    rep.add(prefix + ".bracket_lo", sol.bracket_lo);
    rep.add(prefix + ".bracket_hi", sol.bracket_hi);
    rep.add(prefix + ".iterations", sol.iterations);
}

void add_perturbation(Report& rep, const PerturbationReport& pr, const ModelFile& model) {
    rep.add(pr.preserved_name + ".before", pr.preserved_before);
    rep.add(pr.preserved_name + ".after", pr.preserved_after);
    rep.add("distance", pr.distance);
    const int n = model.sft->alphabet_size();
    if (pr.roof_out) {
        const LcPotential& p = pr.roof_out->potential();
        for (std::size_t w = 0; w < p.words().size(); ++w)
            rep.add("tau_prime[" + word_to_string(p.words()[w], n) + "]", p.values()[w]);
    }
    if (pr.fiber_out) {
        rep.add("shift_constant", pr.shift_constant);
        for (std::size_t w = 0; w < pr.fiber_out->words().size(); ++w) {
            const auto& c = pr.fiber_out->coeffs()[w];
            for (std::size_t i = 0; i < c.size(); ++i)
                rep.add("g_prime[" + word_to_string(pr.fiber_out->words()[w], n) + "][" +
                            std::to_string(i) + "]",
                        c[i]);
        }
    }
    for (const auto& [name, r] : pr.residuals) rep.add_residual(name, r.achieved, r.tolerance);
}

LcPotential phi_argument(const ModelFile& model, const Options& opt) {
    const LcPotential& raw = pick(model.potentials, opt.phi_name, "phi");
    if (opt.normalize) {
        log_info("applying zero-pressure normalization to phi");
        return zero_pressure_normalize(raw);
    }
    return raw;
}

int run_command(const std::string& cmd, const Options& opt, const std::string& echo) {
    Report rep;
    rep.command_echo = echo;

    if (cmd == "verify") {
        if (!opt.model_path.empty()) {
            // Model parsing participates so a broken file still fails verify.
            Report probe;
            (void)load_model(opt, probe);
        }
        const VerifyResult vr = run_verify(opt.seed);
        std::cout << verify_report_text(vr, opt.seed);
        if (!opt.csv_path.empty()) {
            Report csv_rep;
            csv_rep.command_echo = echo;
            for (const auto& it : vr.items) csv_rep.add(it.name, it.passed ? 1.0 : 0.0);
            std::ofstream out(opt.csv_path, std::ios::binary);
            if (!out) throw Error("cannot open csv file '" + opt.csv_path + "'");
            out << csv_rep.to_csv();
        }
        return vr.all_passed ? 0 : 1;
    }

    ModelFile model = load_model(opt, rep);
    const Sft& sft = *model.sft;

    if (cmd == "entropy") {
        rep.add("h_sigma", topological_entropy(sft));
        rep.add("primitivity_exponent", sft.primitivity_exponent());
    } else if (cmd == "pressure") {
        const LcPotential& p = pick(model.potentials, opt.potential_name, "potential");
        const PressureResult pr = pressure(p);
        rep.add("P", pr.value);
        rep.add("lambda", pr.lambda);
        rep.add("recoded_depth", pr.recoded_depth);
        rep.add("iterations", pr.iterations);
    } else if (cmd == "equilibrium") {
        const LcPotential& p = pick(model.potentials, opt.potential_name, "potential");
        const PressureResult pr = pressure(p);
        const MarkovMeasure mu = equilibrium_from(pr);
        const double h = entropy(mu);
        const double integral = integrate(p, mu);
        rep.add("P", pr.value);
        rep.add("entropy", h);
        rep.add("integral", integral);
        add_measure(rep, "mu", mu);
        const auto marginal = mu.symbol_marginal();
        for (int i = 0; i < sft.alphabet_size(); ++i)
            rep.add("marginal[" + word_to_string(Word{i}, sft.alphabet_size()) + "]",
                    marginal[i]);
        rep.add_residual("equilibrium_identity", std::fabs(h + integral - pr.value), 1e-10);
    } else if (cmd == "flow-entropy") {
        const Roof& roof = pick(model.roofs, opt.roof_name, "roof");
        add_bowen(rep, "h_flow", flow_entropy(roof));
    } else if (cmd == "flow-pressure") {
        const Roof& roof = pick(model.roofs, opt.roof_name, "roof");
        const FiberPotential& g = pick(model.fibers, opt.fiber_name, "fiber");
        add_bowen(rep, "P_flow", flow_pressure(g, roof));
    } else if (cmd == "mme") {
        const Roof& roof = pick(model.roofs, opt.roof_name, "roof");
        const BowenSolution h = flow_entropy(roof);
        const FlowMeasure nu = flow_mme(roof);
        rep.add("h_flow", h.t_star);
        rep.add("normalizer", nu.normalizer);
        add_measure(rep, "base", nu.base);
        rep.add_residual("abramov_consistency", std::fabs(abramov_entropy(nu) - h.t_star),
                         1e-8);
    } else if (cmd == "perturb-roof") {
        const Roof& roof = pick(model.roofs, opt.roof_name, "roof");
        const PerturbationReport pr = perturb_roof(roof, phi_argument(model, opt));
        add_perturbation(rep, pr, model);
    } else if (cmd == "perturb-fiber") {
        const Roof& roof = pick(model.roofs, opt.roof_name, "roof");
        const FiberPotential& g = pick(model.fibers, opt.fiber_name, "fiber");
        const PerturbationReport pr =
            perturb_fiber(g, roof, phi_argument(model, opt), opt.epsilon);
        add_perturbation(rep, pr, model);
    } else if (cmd == "almost-eq") {
        const LcPotential& p = pick(model.potentials, opt.potential_name, "potential");
        rep.seed = opt.seed;
        const AlmostEquilibriaResult r = almost_equilibria(p, opt.epsilon, opt.count, opt.seed);
        rep.add("count", static_cast<double>(r.measures.size()));
        for (std::size_t i = 0; i < r.measures.size(); ++i) {
            rep.add("margin[" + std::to_string(i) + "]", r.margins[i]);
            add_measure(rep, "mu" + std::to_string(i), r.measures[i]);
        }
        double min_sep = 1e300;
        for (std::size_t i = 0; i < r.measures.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                min_sep = std::min(min_sep, r.measures[i].trans_sup_dist(r.measures[j]));
        if (r.measures.size() > 1) rep.add("min_pairwise_distance", min_sep);
    } else {
        throw Error("unknown command '" + cmd + "'");
    }

    emit(rep, opt);
    return rep.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"thermodynamic formalism for subshifts and suspension flows"};
    app.require_subcommand(1);

    Options opt;
    std::string command;
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"entropy", "topological entropy of the shift"},
        {"pressure", "topological pressure of a potential"},
        {"equilibrium", "equilibrium measure of a potential"},
        {"flow-entropy", "entropy of the suspension flow over a roof"},
        {"flow-pressure", "flow pressure of a fiber observable"},
        {"mme", "measure of maximal entropy of the suspension flow"},
        {"perturb-roof", "entropy-preserving roof perturbation"},
        {"perturb-fiber", "pressure-preserving observable perturbation"},
        {"almost-eq", "distinct ergodic measures almost attaining the pressure"},
        {"verify", "run the full invariant suite"}};
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        if (name == "verify")
            sub->add_option("model", opt.model_path, "optional model file to parse-check");
        else
            sub->add_option("model", opt.model_path, "model file")->required();
        sub->add_option("--potential", opt.potential_name, "potential block name");
        sub->add_option("--roof", opt.roof_name, "roof block name");
        sub->add_option("--fiber", opt.fiber_name, "fiber block name");
        sub->add_option("--phi", opt.phi_name, "potential block used as phi");
        sub->add_option("--epsilon", opt.epsilon, "tolerance/size parameter");
        sub->add_option("--count", opt.count, "number of measures requested");
        sub->add_option("--seed", opt.seed, "random seed (default 0)");
        sub->add_option("--csv", opt.csv_path, "also write results as CSV");
        sub->add_flag("--normalize", opt.normalize,
                      "apply the zero-pressure normalization to --phi first");
        sub->callback([&command, name = name]() { command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    std::string echo = command;
    for (int i = 2; i < argc; ++i) echo += std::string(" ") + argv[i];

    try {
        return run_command(command, opt, echo);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
