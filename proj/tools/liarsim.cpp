// liarsim: command-line front end for the m-sentence Liar model.
//
// Exit codes: 0 success, 1 domain or usage error, 2 verification failure.

#include "liar/config.hpp"
#include "liar/dimension_audit.hpp"
#include "liar/error.hpp"
#include "liar/evolution.hpp"
#include "liar/inference.hpp"
#include "liar/kernels.hpp"
#include "liar/serialization.hpp"
#include "liar/state_space.hpp"
#include "liar/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitVerification = 2;

using liar::Error;
using liar::ErrorKind;

liar::Configuration load_config(const std::string& arg) {
    if (arg == "liar1") {
        return liar::one_liar();
    }
    if (arg == "liar8") {
        return liar::eight_liar();
    }
    if (arg.rfind("chain:", 0) == 0) {
        const std::string digits = arg.substr(6);
        int m = 0;
        const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
        if (ec != std::errc() || end != digits.data() + digits.size()) {
            throw Error(ErrorKind::ParseError, "bad chain size: " + digits);
        }
        return liar::chain_liar(m);
    }
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg);
        std::stringstream buf;
        buf << in.rdbuf();
        return liar::config_from_json(buf.str());
    }
    return liar::config_from_json(arg);
}

liar::Hypothesis parse_start(const std::string& text, int m) {
    const auto colon = text.find(':');
    if (colon == std::string::npos || colon + 2 != text.size() || (text.back() != 'T' && text.back() != 'F')) {
        throw Error(ErrorKind::ParseError, "start must look like <sentence>:T or <sentence>:F, got '" + text + "'");
    }
    const int sentence = std::stoi(text.substr(0, colon));
    if (sentence < 1 || sentence > m) {
        throw Error(ErrorKind::OutOfRange, "start sentence " + std::to_string(sentence) + " outside 1.." +
                                               std::to_string(m));
    }
    return {sentence, text.back() == 'T' ? liar::Truth::True : liar::Truth::False};
}

// Accepts a plain number, "pi", "pi/<d>" or "<k>*pi/<d>".
double parse_time_scale(const std::string& text) {
    const auto pi_pos = text.find("pi");
    if (pi_pos == std::string::npos) {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) {
            throw Error(ErrorKind::ParseError, "bad time scale '" + text + "'");
        }
        return v;
    }
    double factor = 1.0;
    if (pi_pos > 0) {
        std::string head = text.substr(0, pi_pos);
        if (head.back() != '*') {
            throw Error(ErrorKind::ParseError, "bad time scale '" + text + "'");
        }
        head.pop_back();
        factor = std::stod(head);
    }
    std::string tail = text.substr(pi_pos + 2);
    double divisor = 1.0;
    if (!tail.empty()) {
        if (tail.front() != '/') {
            throw Error(ErrorKind::ParseError, "bad time scale '" + text + "'");
        }
        divisor = std::stod(tail.substr(1));
    }
    return factor * std::numbers::pi / divisor;
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorKind::OutOfRange, "cannot open '" + path + "' for writing");
    }
    out << content;
}

std::string join(const std::vector<int>& values) {
    std::string out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        out += (k ? "," : "") + std::to_string(values[k]);
    }
    return out;
}

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum-style model of the m-sentence Liar paradox"};
    app.require_subcommand(1);

    // count
    int count_m = 1;
    auto* count = app.add_subcommand("count", "Number of paradoxical m-sentence configurations");
    count->add_option("--m", count_m, "sentence count")->required()->check(CLI::PositiveNumber);

    // enumerate
    int enum_m = 1;
    int enum_bound = liar::kEnumerationBound;
    auto* enumerate = app.add_subcommand("enumerate", "List paradoxical configurations, one JSON object per line");
    enumerate->add_option("--m", enum_m, "sentence count")->required()->check(CLI::PositiveNumber);
    enumerate->add_option("--bound", enum_bound, "largest m accepted")->capture_default_str();

    // cycle
    std::string cycle_config;
    std::string cycle_start = "1:T";
    auto* cycle = app.add_subcommand("cycle", "Reasoning cycle of a configuration as JSON");
    cycle->add_option("--config", cycle_config, "file, inline JSON, liar1, liar8 or chain:<m>")->required();
    cycle->add_option("--start", cycle_start, "start hypothesis <i>:T|F")->capture_default_str();

    // state
    std::string state_config;
    std::string state_out;
    auto* state = app.add_subcommand("state", "Write the equiponderate initial state as JSON");
    state->add_option("--config", state_config, "file, inline JSON, liar1, liar8 or chain:<m>")->required();
    state->add_option("--out", state_out, "output file (default stdout)");

    // trace
    std::string trace_config;
    std::string trace_start = "1:T";
    std::vector<int> trace_sentences;
    double t_max = 0.0;
    double dt = 0.05;
    std::string time_scale_text = "1";
    bool raw_collapse = false;
    bool flip_branch = false;
    std::string trace_format = "csv";
    std::string trace_out;
    std::string gnuplot_out;
    auto* trace = app.add_subcommand("trace", "Truth/falsehood probability trace after an initial measurement");
    trace->add_option("--config", trace_config, "file, inline JSON, liar1, liar8 or chain:<m>")->required();
    trace->add_option("--start", trace_start, "initial measurement <i>:T|F")->capture_default_str();
    trace->add_option("--sentences", trace_sentences, "sentences to report (default all)")->delimiter(',');
    trace->add_option("--t-max", t_max, "last sample, in reasoning steps (default 2m)");
    trace->add_option("--dt", dt, "sample spacing, in reasoning steps")->capture_default_str();
    trace->add_option("--time-scale", time_scale_text, "output time units per step: number, pi/2, ...")
        ->capture_default_str();
    trace->add_flag("--raw-collapse", raw_collapse, "keep the unnormalized projected state");
    trace->add_flag("--flip-branch", flip_branch, "map the -1 eigenphase to -pi instead of +pi");
    trace->add_option("--format", trace_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    trace->add_option("--out", trace_out, "output file (default stdout)");
    trace->add_option("--gnuplot", gnuplot_out, "also write a gnuplot script plotting --out");

    // check-dim
    int dim_m = 2;
    int dim_bound = liar::audit::kAuditBound;
    auto* check_dim = app.add_subcommand("check-dim", "Audit that each sentence needs 2m dimensions");
    check_dim->add_option("--m", dim_m, "sentence count")->required();
    check_dim->add_option("--bound", dim_bound, "largest m accepted")->capture_default_str();

    // verify
    liar::VerifyOptions verify_opts;
    bool inject_branch = false;
    auto* verify = app.add_subcommand("verify", "Run the invariant suite and print a PASS/FAIL table");
    verify->add_option("--m-max", verify_opts.m_max, "largest m exercised (1..8)")->capture_default_str();
    verify->add_flag("--inject-branch-flip", inject_branch, "negative control: flipped log branch");
    verify->add_flag("--inject-kappa-corruption", verify_opts.corrupt_kappa_reference,
                     "negative control: perturb one reference embedded index");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitDomain;
    }

    try {
        if (*count) {
            std::cout << liar::count_paradoxical(count_m).str() << '\n';
        } else if (*enumerate) {
            liar::for_each_paradoxical(
                enum_m, [](const liar::Configuration& c) { std::cout << liar::config_to_json(c) << '\n'; },
                enum_bound);
        } else if (*cycle) {
            const auto config = load_config(cycle_config);
            std::cout << liar::cycle_to_json(liar::reasoning_cycle(config, parse_start(cycle_start, config.m)))
                      << '\n';
        } else if (*state) {
            const auto config = load_config(state_config);
            emit(state_out, liar::state_to_json(liar::build_initial_state(config)) + "\n");
        } else if (*trace) {
            const auto config = load_config(trace_config);
            const auto start = parse_start(trace_start, config.m);
            if (trace_sentences.empty()) {
                for (int i = 1; i <= config.m; ++i) {
                    trace_sentences.push_back(i);
                }
            }
            if (!trace->count("--t-max")) {
                t_max = 2.0 * config.m;
            }
            liar::TraceOptions options;
            options.time_scale = parse_time_scale(time_scale_text);
            options.collapse = raw_collapse ? liar::CollapseMode::Raw : liar::CollapseMode::Renormalize;
            options.branch = flip_branch ? liar::PhaseBranch::Flipped : liar::PhaseBranch::Principal;
            const auto times = liar::time_grid(t_max, dt, options.time_scale);
            const auto rows = liar::probability_trace(config, start, trace_sentences, times, options);

            std::ostringstream out;
            if (trace_format == "csv") {
                const std::vector<std::pair<std::string, std::string>> manifest = {
                    {"command", "trace"},
                    {"config", liar::config_to_json(config)},
                    {"start", trace_start},
                    {"sentences", join(trace_sentences)},
                    {"t_max_steps", fmt12(t_max)},
                    {"dt_steps", fmt12(dt)},
                    {"time_scale", fmt12(options.time_scale)},
                    {"collapse", raw_collapse ? "raw" : "renormalize"},
                    {"branch", flip_branch ? "flipped" : "principal"},
                    {"precision", std::to_string(liar::trace_precision())},
                    {"kernels", std::string(liar::kernels::to_string(liar::kernels::active().isa))},
                };
                liar::write_trace_csv(out, rows, manifest);
            } else {
                liar::write_trace_json(out, rows);
            }
            emit(trace_out, out.str());
            if (!gnuplot_out.empty()) {
                const std::string data = trace_out.empty() || trace_out == "-" ? "trace.csv" : trace_out;
                emit(gnuplot_out, liar::gnuplot_script(data, trace_sentences, options.time_scale));
            }
        } else if (*check_dim) {
            const auto report = liar::audit::verify_minimality(dim_m, dim_bound);
            for (const auto& line : report.transcript) {
                std::cout << line << '\n';
            }
            nlohmann::ordered_json summary;
            summary["m"] = dim_m;
            summary["n_full"] = 2 * dim_m;
            summary["full"] = std::holds_alternative<liar::audit::Satisfiable>(report.full) ? "satisfiable"
                                                                                              : "contradiction";
            summary["n_reduced"] = 2 * dim_m - 1;
            summary["reduced"] = std::holds_alternative<liar::audit::Contradiction>(report.reduced)
                                     ? "contradiction"
                                     : "satisfiable";
            if (const auto* c = std::get_if<liar::audit::Contradiction>(&report.reduced)) {
                summary["witness"] = {c->witness.amplitude_fact.to_string(), c->witness.coefficient_fact.to_string(),
                                      c->witness.zero_equation.to_string()};
            }
            summary["result"] = report.pass ? "PASS" : "FAIL";
            std::cout << summary.dump() << '\n';
            return report.pass ? 0 : kExitVerification;
        } else if (*verify) {
            if (inject_branch) {
                verify_opts.branch = liar::PhaseBranch::Flipped;
            }
            const auto report = liar::run_verification(verify_opts);
            std::size_t width = 0;
            for (const auto& c : report.checks) {
                width = std::max(width, c.name.size());
            }
            for (const auto& c : report.checks) {
                std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.name << std::string(width - c.name.size() + 2, ' ')
                          << c.detail << '\n';
            }
            std::cout << (report.all_pass() ? "ALL PASS" : "FAILURES PRESENT") << '\n';
            return report.all_pass() ? 0 : kExitVerification;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: invalid number: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: number out of range: " << e.what() << '\n';
        return kExitDomain;
    }
    return 0;
}
