// Copyright 2026 The dosearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dosearch/cli.h"

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "dosearch/decompose.h"
#include "dosearch/error.h"
#include "dosearch/io.h"
#include "dosearch/robustness.h"
#include "dosearch/search.h"

namespace dosearch {

namespace {

constexpr double kCertaintyTol = 1e-10;

struct GenOptions {
    int levels = 0;
    std::uint64_t seed = 0;
    std::string out;
};

struct DosOptions {
    std::string instance;
    std::string out;
};

struct RunOptions {
    std::string instance;
    std::string trace;
    std::string result;
};

struct GroverOptions {
    std::size_t n = 0;
    std::size_t t = 0;
    std::optional<int> iterations;
};

struct RobustOptions {
    RobustnessConfig config;
    std::string mode = "plain";
    std::string out;
};

struct DecomposeOptions {
    std::string instance;
    int step = 1;
    std::string out;
};

// "-" or empty writes to `out`.
void emit(const std::string &path, const std::string &text, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << text;
    } else {
        save_text(path, text);
    }
}

int cmd_gen(const GenOptions &o, std::ostream &out, std::ostream &err) {
    const auto instance = generate_rayleigh_instance(o.levels, o.seed);
    std::ostringstream doc;
    write_instance(doc, instance);
    emit(o.out, doc.str(), out);
    err << "gen: wrote " << instance.n_states() << " costs (M = " << o.levels
        << ", seed = " << o.seed << ")\n";
    return 0;
}

int cmd_dos(const DosOptions &o, std::ostream &out, std::ostream &err) {
    const auto instance = load_instance(o.instance);
    const auto schedule = build_partition(instance);
    std::ostringstream doc;
    write_cdos(doc, instance, schedule);
    emit(o.out, doc.str(), out);
    err << "dos: " << instance.n_states() << " data rows, " << schedule.m_levels()
        << " threshold rows\n";
    return 0;
}

int cmd_run(const RunOptions &o, std::ostream &out, std::ostream &err) {
    const auto instance = load_instance(o.instance);
    const auto schedule = build_partition(instance);
    const bool want_trace = !o.trace.empty();
    const auto result = run_structured_search(instance, schedule, want_trace);
    if (want_trace) {
        std::ostringstream trace;
        write_trace(trace, result.trajectory);
        save_text(o.trace, trace.str());
    }
    std::ostringstream doc;
    write_result(doc, result);
    emit(o.result, doc.str(), out);

    const std::size_t argmin = brute_force_argmin(instance);
    if (result.winner_index != argmin) {
        err << "run: winner " << result.winner_index << " differs from argmin " << argmin
            << "\n";
        return kExitCheckFailed;
    }
    if (!(result.success_probability >= 1.0 - kCertaintyTol)) {
        err << "run: success probability " << format_real(result.success_probability)
            << " below 1 - " << kCertaintyTol << "\n";
        return kExitCheckFailed;
    }
    err << "run: optimum index " << argmin << " found with probability "
        << format_real(result.success_probability) << "\n";
    return 0;
}

int cmd_grover(const GroverOptions &o, std::ostream &out, std::ostream &err) {
    if (o.t > o.n) {
        throw ValidationError("t must not exceed n");
    }
    levels_for_states(o.n);
    std::vector<std::size_t> marked(o.t);
    for (std::size_t j = 0; j < o.t; ++j) marked[j] = j;
    const auto mask = OracleMask::from_indices(o.n, marked);
    const int m = o.iterations.value_or(grover_auto_iterations(o.n, o.t));
    const double p = run_multitarget_grover(o.n, mask, m);
    out << "n,t,iterations,success_probability\n"
        << o.n << "," << o.t << "," << m << "," << format_real(p) << "\n";
    const double expected = grover_success_closed_form(o.n, o.t, m);
    if (std::abs(p - expected) > kCertaintyTol) {
        err << "grover: simulation disagrees with sin^2((2m+1)theta) = "
            << format_real(expected) << "\n";
        return kExitCheckFailed;
    }
    return 0;
}

int cmd_robust(RobustOptions o, std::ostream &out, std::ostream &err) {
    o.config.mode = parse_robustness_mode(o.mode);
    const auto summary = run_robustness(o.config);
    std::ostringstream doc;
    write_summary(doc, summary);
    emit(o.out, doc.str(), out);
    err << "robust: mode " << o.mode << ", " << o.config.trials << " trials, mean "
        << format_real(summary.mean) << ", min " << format_real(summary.min) << "\n";
    return 0;
}

int cmd_decompose(const DecomposeOptions &o, std::ostream &out, std::ostream &err) {
    const auto instance = load_instance(o.instance);
    const auto schedule = build_partition(instance);
    if (o.step < 1 || o.step > instance.m_levels()) {
        throw ValidationError("step must be in [1, " + std::to_string(instance.m_levels()) +
                              "]");
    }
    const auto masks = schedule_masks(instance, schedule);
    const auto v = dense_step_unitary(masks[o.step - 1], masks[o.step], instance.n_states());
    const auto factorization = reck_factorize(v);
    const double error = reconstruct(factorization, v.dim()).max_abs_diff(v);
    std::ostringstream doc;
    write_factorization(doc, factorization);
    emit(o.out, doc.str(), out);
    err << "decompose: step " << o.step << ", " << factorization.factors.size()
        << " two-level factors, reconstruction error " << format_real(error) << "\n";
    if (!(error <= 10.0 * kDefaultDecomposeTol)) {
        return kExitCheckFailed;
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Structured quantum search driven by the cumulative density of states",
                 "dosearch"};
    app.require_subcommand(1);

    GenOptions gen;
    auto *gen_cmd = app.add_subcommand("gen", "Generate a Rayleigh-cost problem instance");
    gen_cmd->add_option("-m,--levels", gen.levels, "M, with N = 4^M states")
        ->required()
        ->check(CLI::Range(1, 15));
    gen_cmd->add_option("-s,--seed", gen.seed, "PRNG seed");
    gen_cmd->add_option("-o,--out", gen.out, "Instance file (default stdout)");

    DosOptions dos;
    auto *dos_cmd = app.add_subcommand("dos", "Export empirical and ideal nu(c)");
    dos_cmd->add_option("-i,--instance", dos.instance, "Instance file")->required();
    dos_cmd->add_option("-o,--out", dos.out, "CSV output (default stdout)");

    RunOptions run;
    auto *run_cmd = app.add_subcommand("run", "Run structured search on an instance");
    run_cmd->add_option("-i,--instance", run.instance, "Instance file")->required();
    run_cmd->add_option("--trace", run.trace, "Amplitude trace CSV");
    run_cmd->add_option("--result", run.result, "Result document (default stdout)");

    GroverOptions grover;
    auto *grover_cmd = app.add_subcommand("grover", "Multitarget Grover baseline");
    grover_cmd->add_option("-n,--n", grover.n, "Number of states (power of 4)")->required();
    grover_cmd->add_option("-t,--t", grover.t, "Number of marked states")
        ->required()
        ->check(CLI::PositiveNumber);
    grover_cmd->add_option("--iterations", grover.iterations,
                           "Iterations (default floor(pi / (4 arcsin(sqrt(T/N)))))")
        ->check(CLI::NonNegativeNumber);

    RobustOptions robust;
    auto *robust_cmd = app.add_subcommand("robust", "Robustness under density-of-states error");
    robust_cmd->add_option("-m,--levels", robust.config.m_levels, "M")
        ->check(CLI::Range(1, 10));
    robust_cmd->add_option("--max-offset", robust.config.max_offset,
                           "Largest integer offset on each sublevel-set size")
        ->check(CLI::NonNegativeNumber);
    robust_cmd->add_option("--trials", robust.config.trials, "Number of trials")
        ->check(CLI::PositiveNumber);
    robust_cmd->add_option("--mode", robust.mode, "plain or deterministic")
        ->check(CLI::IsMember({"plain", "deterministic"}));
    robust_cmd->add_option("-s,--seed", robust.config.base_seed, "Base seed");
    robust_cmd->add_option("-o,--out", robust.out, "Summary CSV (default stdout)");

    DecomposeOptions decompose;
    auto *decompose_cmd =
        app.add_subcommand("decompose", "Factor a step unitary into two-level unitaries");
    decompose_cmd->add_option("-i,--instance", decompose.instance, "Instance file")
        ->required();
    decompose_cmd->add_option("--step", decompose.step, "Step i of V_i (1-based)");
    decompose_cmd->add_option("-o,--out", decompose.out, "Factor document (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err);
    }

    try {
        if (*gen_cmd) return cmd_gen(gen, out, err);
        if (*dos_cmd) return cmd_dos(dos, out, err);
        if (*run_cmd) return cmd_run(run, out, err);
        if (*grover_cmd) return cmd_grover(grover, out, err);
        if (*robust_cmd) return cmd_robust(robust, out, err);
        if (*decompose_cmd) return cmd_decompose(decompose, out, err);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitFailure;
}

}  // namespace dosearch
