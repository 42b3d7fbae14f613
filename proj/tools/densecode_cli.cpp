// Command-line interface: capacity evaluation, figure sweeps, threshold
// location, the verification suite, and the brute-force encoding search.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "densecode/densecode.hpp"

using namespace densecode;
using nlohmann::ordered_json;

namespace {

struct RunConfig {
    std::string command;
    int d = 2;
    double p = 0.0;
    double alpha = 0.5;
    double eta = 1.0;
    std::string state = "bell";
    std::string channel = "one-sided-dep";
    std::string spec_path;
    std::string state_path;
    std::string output = "-";
    std::string format;
    std::uint64_t seed = 23;
    int samples = 64;
    std::string figure = "figure4";
    std::vector<double> alphas = {0.0, 0.08, 0.2, 0.5};
    int points = 201;
    int ensemble_size = 4;
    int restarts = 100;
};

// All emitted numbers carry 12 significant digits.
double round12(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

ordered_json round12(const ordered_json& j) {
    if (j.is_number_float()) return round12(j.get<double>());
    if (j.is_object()) {
        ordered_json out = ordered_json::object();
        for (const auto& [key, value] : j.items()) out[key] = round12(value);
        return out;
    }
    if (j.is_array()) {
        ordered_json out = ordered_json::array();
        for (const auto& value : j) out.push_back(round12(value));
        return out;
    }
    return j;
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.output == "-" || cfg.output.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + cfg.output);
    out << text;
}

void emit_json(const RunConfig& cfg, const ordered_json& j) {
    emit(cfg, round12(j).dump(2) + "\n");
}

[[noreturn]] void fail(const std::string& type, const std::string& message,
                       std::optional<double> residual = std::nullopt) {
    ordered_json err;
    err["error"]["type"] = type;
    err["error"]["message"] = message;
    if (residual) err["error"]["condition_residual"] = *residual;
    std::fprintf(stderr, "%s\n", err.dump(2).c_str());
    std::exit(1);
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return nlohmann::json::parse(in);
}

DensityMatrix state_from_file(const std::string& path) {
    const nlohmann::json j = load_json(path);
    require(j.contains("dims") && j.contains("re") && j.contains("im"),
            "state file needs fields dims, re, im");
    const std::vector<int> dims = j.at("dims").get<std::vector<int>>();
    int dim = 1;
    for (int d : dims) dim *= d;
    ComplexMatrix m(dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            m(r, c) = Complex(j.at("re").at(r).at(c).get<double>(),
                              j.at("im").at(r).at(c).get<double>());
    return DensityMatrix(std::move(m), dims);
}

DensityMatrix build_state(const RunConfig& cfg) {
    if (cfg.state == "bell") return bell_density(cfg.d);
    if (cfg.state == "werner") return werner_state(cfg.d, cfg.eta);
    if (cfg.state == "schmidt") {
        require(cfg.d == 2, "schmidt states are two-qubit; use --d 2");
        return schmidt_density(cfg.alpha);
    }
    if (cfg.state == "file") {
        require(!cfg.state_path.empty(), "--state file needs --state-path");
        return state_from_file(cfg.state_path);
    }
    throw std::invalid_argument("unknown state: " + cfg.state);
}

PauliSpec spec_from_path(const RunConfig& cfg) {
    require(!cfg.spec_path.empty(), "custom Pauli channels need --spec-path");
    return PauliSpec::from_json(load_json(cfg.spec_path));
}

BipartiteChannel build_channel(const RunConfig& cfg) {
    if (cfg.channel == "one-sided-dep") return one_sided_depolarizing(cfg.d, cfg.p);
    if (cfg.channel == "two-sided-dep") return two_sided_depolarizing(cfg.d, cfg.p);
    if (cfg.channel == "one-sided-pauli") {
        const PauliSpec spec = spec_from_path(cfg);
        require(!spec.is_joint(), "one-sided-pauli needs a one-sided table");
        return one_sided_pauli(spec, Side::A);
    }
    if (cfg.channel == "two-sided-pauli") {
        const PauliSpec spec = spec_from_path(cfg);
        // A one-sided table is applied independently on both sides.
        return spec.is_joint() ? two_sided_pauli(spec)
                               : two_sided_pauli(PauliSpec::product(spec, spec));
    }
    throw std::invalid_argument("unknown channel: " + cfg.channel);
}

int run_capacity(const RunConfig& cfg) {
    const DensityMatrix rho = build_state(cfg);
    const BipartiteChannel ch = build_channel(cfg);
    CapacityResult result{};
    try {
        result = capacity_unital(rho, ch, cfg.samples, cfg.seed);
    } catch (const EntropyConditionError& e) {
        fail("entropy-condition-violated", e.what(), e.residual());
    }
    if (cfg.format == "csv") {
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "value_bits,avg_state_entropy_bits,channel_output_entropy_bits,"
                      "condition_residual\n%.12g,%.12g,%.12g,%.12g\n",
                      result.value, result.average_state_entropy, result.channel_output_entropy,
                      result.condition_residual);
        emit(cfg, buf);
    } else {
        emit_json(cfg, result.to_json());
    }
    return 0;
}

int run_sweep(const RunConfig& cfg) {
    const auto grid = default_p_grid(cfg.points);
    SweepResult sweep{"p", {}, {}};
    if (cfg.figure == "figure3") {
        sweep = sweep_figure3(cfg.alphas, grid);
    } else if (cfg.figure == "figure4") {
        sweep = sweep_figure4(grid);
    } else if (cfg.figure == "figure5") {
        sweep = sweep_figure5(grid);
    } else {
        throw std::invalid_argument("unknown figure: " + cfg.figure);
    }
    if (cfg.format == "json")
        emit_json(cfg, sweep.to_json());
    else
        emit(cfg, sweep.to_csv());
    return 0;
}

int run_threshold(const RunConfig& cfg) {
    const RootReport threshold = find_threshold_alpha();
    const RootReport crossing = find_classical_limit_crossing();
    if (cfg.format == "csv") {
        char buf[256];
        std::snprintf(buf, sizeof buf, "report,root,iterations,residual\n");
        std::string text = buf;
        std::snprintf(buf, sizeof buf, "threshold_alpha,%.12g,%d,%.12g\n", threshold.root,
                      threshold.iterations, threshold.residual);
        text += buf;
        std::snprintf(buf, sizeof buf, "classical_limit_crossing,%.12g,%d,%.12g\n", crossing.root,
                      crossing.iterations, crossing.residual);
        text += buf;
        emit(cfg, text);
    } else {
        ordered_json j;
        j["threshold_alpha"] = threshold.to_json();
        j["classical_limit_crossing"] = crossing.to_json();
        emit_json(cfg, j);
    }
    return 0;
}

int run_verify(const RunConfig& cfg) {
    const auto reports = run_property_suite(cfg.seed);
    bool all_pass = true;
    if (cfg.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& r : reports) {
            ordered_json item;
            item["module"] = r.module;
            item["property"] = r.name;
            item["residual"] = r.residual;
            item["tolerance"] = r.tolerance;
            item["pass"] = r.pass;
            arr.push_back(std::move(item));
            all_pass = all_pass && r.pass;
        }
        emit_json(cfg, arr);
    } else {
        std::string text;
        char buf[256];
        for (const auto& r : reports) {
            std::snprintf(buf, sizeof buf, "%s %s/%s residual=%.12g tol=%.12g\n",
                          r.pass ? "PASS" : "FAIL", r.module.c_str(), r.name.c_str(),
                          round12(r.residual), r.tolerance);
            text += buf;
            all_pass = all_pass && r.pass;
        }
        std::snprintf(buf, sizeof buf, "%s: %zu properties\n", all_pass ? "PASS" : "FAIL",
                      reports.size());
        text += buf;
        emit(cfg, text);
    }
    return all_pass ? 0 : 1;
}

int run_optimize(const RunConfig& cfg) {
    const DensityMatrix rho = build_state(cfg);
    const BipartiteChannel ch = build_channel(cfg);
    const OptimizeResult r =
        brute_force_best_encoding(rho, ch, cfg.ensemble_size, cfg.restarts, cfg.seed);
    ordered_json j;
    j["best_chi_bits"] = r.best_chi;
    try {
        const double formula = capacity_unital(rho, ch, cfg.samples, cfg.seed).value;
        j["formula_value_bits"] = formula;
        j["gap_bits"] = formula - r.best_chi;
    } catch (const EntropyConditionError& e) {
        j["formula_value_bits"] = nullptr;
        j["condition_residual"] = e.residual();
    }
    j["ensemble_size"] = cfg.ensemble_size;
    j["restarts"] = cfg.restarts;
    j["seed"] = cfg.seed;
    j["probabilities"] = r.best_scheme.probabilities;
    emit_json(cfg, j);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Super dense coding capacities over noisy unital channels"};
    app.require_subcommand(1);
    RunConfig cfg;

    if (const char* env_seed = std::getenv("DENSECODE_SEED")) {
        cfg.seed = std::strtoull(env_seed, nullptr, 10);
    }

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--output", cfg.output, "output path, '-' for stdout");
        cmd->add_option("--seed", cfg.seed, "random seed (DENSECODE_SEED as fallback)");
    };
    auto add_problem = [&](CLI::App* cmd) {
        cmd->add_option("--d", cfg.d, "local dimension")->check(CLI::Range(2, 8));
        cmd->add_option("--p", cfg.p, "noise parameter")->check(CLI::Range(0.0, 1.0));
        cmd->add_option("--alpha", cfg.alpha, "Schmidt weight")->check(CLI::Range(0.0, 1.0));
        cmd->add_option("--eta", cfg.eta, "Werner weight")->check(CLI::Range(0.0, 1.0));
        cmd->add_option("--state", cfg.state, "bell|werner|schmidt|file");
        cmd->add_option("--channel", cfg.channel,
                        "one-sided-pauli|two-sided-pauli|one-sided-dep|two-sided-dep");
        cmd->add_option("--spec-path", cfg.spec_path, "PauliSpec JSON for custom channels");
        cmd->add_option("--state-path", cfg.state_path, "density-matrix JSON for --state file");
        cmd->add_option("--samples", cfg.samples, "entropy-condition sample count")
            ->check(CLI::Range(1, 100000));
    };

    CLI::App* capacity = app.add_subcommand("capacity", "capacity of a state/channel pair");
    add_problem(capacity);
    add_common(capacity);
    capacity->add_option("--format", cfg.format, "json|csv");

    CLI::App* sweep = app.add_subcommand("sweep", "figure data over a noise grid");
    sweep->add_option("--figure", cfg.figure, "figure3|figure4|figure5");
    sweep->add_option("--points", cfg.points, "grid points on [0,1]")->check(CLI::Range(2, 100001));
    sweep->add_option("--alphas", cfg.alphas, "alpha list for figure3");
    sweep->add_option("--format", cfg.format, "csv|json (default csv)");
    add_common(sweep);

    CLI::App* threshold = app.add_subcommand("threshold", "threshold and crossing roots");
    threshold->add_option("--format", cfg.format, "json|csv");
    add_common(threshold);

    CLI::App* verify = app.add_subcommand("verify", "run the lemma/appendix property suite");
    verify->add_option("--format", cfg.format, "text|json");
    add_common(verify);

    CLI::App* optimize = app.add_subcommand("optimize", "brute-force encoding search vs formula");
    add_problem(optimize);
    optimize->add_option("--ensemble-size", cfg.ensemble_size, "encoding ensemble size")
        ->check(CLI::Range(1, 64));
    optimize->add_option("--restarts", cfg.restarts, "random restarts")
        ->check(CLI::Range(1, 100000));
    optimize->add_option("--format", cfg.format, "json");
    add_common(optimize);

    CLI11_PARSE(app, argc, argv);

    try {
        if (capacity->parsed()) return run_capacity(cfg);
        if (sweep->parsed()) return run_sweep(cfg);
        if (threshold->parsed()) return run_threshold(cfg);
        if (verify->parsed()) return run_verify(cfg);
        if (optimize->parsed()) return run_optimize(cfg);
    } catch (const std::invalid_argument& e) {
        fail("invalid-config", e.what());
    } catch (const std::exception& e) {
        fail("runtime-error", e.what());
    }
    return 1;
}
