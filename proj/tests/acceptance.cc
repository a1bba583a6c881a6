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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Tolerances are fixed here and never relaxed at runtime.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "dosearch/decompose.h"
#include "dosearch/engine.h"
#include "dosearch/io.h"
#include "dosearch/problem.h"
#include "dosearch/robustness.h"
#include "dosearch/search.h"
#include "test_util.h"

using namespace dosearch;

namespace {

constexpr double kCertaintyTol = 1e-10;
constexpr double kUnitarityTol = 1e-12;
constexpr double kAmplifyTol = 1e-9;
constexpr double kRoundTripTol = 1e-10;
constexpr double kIdealRelTol = 1e-9;
constexpr double kCertaintyBudgetSeconds = 10.0;
constexpr double kLargeSearchBudgetSeconds = 5.0;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string &what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char *f, double x) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), f, x);
    return buf;
}

OracleMask first_k(std::size_t n, std::size_t k) {
    std::vector<std::uint8_t> bits(n, 0);
    for (std::size_t j = 0; j < k; ++j) bits[j] = 1;
    return OracleMask(bits);
}

// 1. Certainty over 100 instances at each M in 1..5.
Outcome certainty() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 1.0;
    for (int m = 1; m <= 5; ++m) {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const auto inst = generate_rayleigh_instance(m, derive_seed(0xAC1, m, seed));
            const auto res = run_structured_search(inst, build_partition(inst));
            worst = std::min(worst, res.success_probability);
            o.require(res.success_probability >= 1.0 - kCertaintyTol,
                      "M=" + std::to_string(m) + " seed " + std::to_string(seed) +
                          " success " + format_real(res.success_probability));
            o.require(res.winner_index == brute_force_argmin(inst),
                      "winner differs from brute-force argmin");
        }
    }
    const double elapsed = seconds_since(t0);
    o.require(elapsed < kCertaintyBudgetSeconds, fmt("took %.3f s", elapsed));
    if (o.pass) {
        o.detail = "500 instances, min success " + fmt("%.17g", worst) + ", " +
                   fmt("%.3f s", elapsed);
    }
    return o;
}

// 2. Support law at M = 3.
Outcome support_law() {
    Outcome o;
    const std::size_t sizes[] = {16, 4, 1};
    const double moduli[] = {0.25, 0.5, 1.0};
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto inst = generate_rayleigh_instance(3, derive_seed(0xAC2, seed));
        const auto res = run_structured_search(inst, build_partition(inst), true);
        for (int i = 0; i < 3; ++i) {
            o.require(res.reports[i].support_size == sizes[i],
                      "step " + std::to_string(i + 1) + " support " +
                          std::to_string(res.reports[i].support_size));
            for (const auto &a : res.trajectory[i + 1].amplitudes()) {
                const double mod = std::abs(a);
                if (mod > kSupportEpsilon) {
                    o.require(std::abs(mod - moduli[i]) <= 1e-10,
                              "step " + std::to_string(i + 1) + " modulus " + format_real(mod));
                }
            }
        }
    }
    if (o.pass) o.detail = "20 instances, supports [16, 4, 1], moduli [0.25, 0.5, 1]";
    return o;
}

// 3. Density-of-states export.
Outcome cdos_export() {
    Outcome o;
    const auto inst = generate_rayleigh_instance(3, 2026);
    std::ostringstream doc;
    write_cdos(doc, inst, build_partition(inst));
    std::istringstream in(doc.str());
    std::string line;
    std::getline(in, line);
    o.require(line == "cost,empirical_nu,ideal_nu,label", "bad header");
    std::vector<std::size_t> threshold_nu;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        std::istringstream ls(line);
        std::string c, nu, ideal, label;
        std::getline(ls, c, ',');
        std::getline(ls, nu, ',');
        std::getline(ls, ideal, ',');
        std::getline(ls, label, ',');
        const double cost = std::stod(c);
        const double expected = 64.0 * (1.0 - std::exp(-cost * cost / 2.0));
        o.require(std::abs(std::stod(ideal) - expected) <= kIdealRelTol * expected,
                  "ideal mismatch at cost " + c);
        if (label != "data") threshold_nu.push_back(std::stoul(nu));
    }
    o.require(rows == 64 + 3, "row count " + std::to_string(rows));
    o.require(threshold_nu == std::vector<std::size_t>{1, 4, 16},
              "threshold counts are not {1, 4, 16}");
    if (o.pass) o.detail = "64 data rows, thresholds at nu = 16, 4, 1";
    return o;
}

// 4. Grover baseline.
Outcome grover_baseline() {
    Outcome o;
    double worst = 0.0;
    for (std::size_t n : {16u, 64u, 256u}) {
        for (std::size_t t = 1; t <= n / 2; ++t) {
            const auto mask = first_k(n, t);
            for (int m = 0; m <= 3; ++m) {
                const double theta = std::asin(std::sqrt(double(t) / double(n)));
                const double s = std::sin((2 * m + 1) * theta);
                const double err = std::abs(run_multitarget_grover(n, mask, m) - s * s);
                worst = std::max(worst, err);
            }
        }
    }
    o.require(worst <= kCertaintyTol, "grid error " + format_real(worst));
    for (auto [n, t] : {std::pair<std::size_t, std::size_t>{4, 1}, {64, 16}, {256, 64}}) {
        const double p = run_multitarget_grover(n, first_k(n, t), 1);
        o.require(std::abs(p - 1.0) <= kCertaintyTol,
                  "N=" + std::to_string(n) + " T=" + std::to_string(t) + " gives " + format_real(p));
    }
    if (o.pass) o.detail = "grid max error " + fmt("%.2e", worst) + "; T = N/4 certain in 1 step";
    return o;
}

// 5. Unitarity and matrix-free equivalence.
Outcome unitarity() {
    Outcome o;
    Rng rng(0xAC5);
    double worst_u = 0.0, worst_eq = 0.0;
    const std::size_t dims[] = {4, 16, 64, 256};
    for (int k = 0; k < 200; ++k) {
        const std::size_t n = dims[k % 4];
        const auto [prev, good] = test_util::random_nested_masks(n, rng);
        const auto v = dense_step_unitary(prev, good, n);
        worst_u = std::max(worst_u, v.unitarity_error());
        const auto in = test_util::random_state(n, rng);
        const auto fast = apply_step_unitary(in, prev, good);
        const auto slow = v.apply(in);
        for (std::size_t j = 0; j < n; ++j) worst_eq = std::max(worst_eq, std::abs(fast[j] - slow[j]));
    }
    o.require(worst_u <= kUnitarityTol, "max |V^dag V - I| = " + format_real(worst_u));
    o.require(worst_eq <= kUnitarityTol, "matrix-free mismatch " + format_real(worst_eq));
    if (o.pass) {
        o.detail = "200 pairs, max |V^dag V - I| " + fmt("%.2e", worst_u) + ", max mismatch " +
                   fmt("%.2e", worst_eq);
    }
    return o;
}

// 6. Robustness under density-of-states error.
Outcome robustness() {
    Outcome o;
    for (auto mode : {RobustnessMode::kPlain, RobustnessMode::kDeterministic}) {
        const auto s = run_robustness({3, 0, 50, mode, 0xAC6});
        for (double p : s.probabilities()) {
            o.require(std::abs(p - 1.0) <= kCertaintyTol,
                      to_string(mode) + " offset 0 success " + format_real(p));
        }
    }
    for (std::int64_t off : {1, 2}) {
        const auto s = run_robustness({3, off, 50, RobustnessMode::kDeterministic, 0xAC6});
        for (double p : s.probabilities()) {
            o.require(std::abs(p - 1.0) <= kAmplifyTol,
                      "deterministic offset " + std::to_string(off) + " success " + format_real(p));
        }
    }
    std::string plain_means;
    for (std::int64_t off : {1, 2}) {
        const auto s = run_robustness({3, off, 50, RobustnessMode::kPlain, 2026});
        o.require(s.mean < 1.0, "plain mean " + format_real(s.mean) + " is not below 1");
        for (double p : s.probabilities()) {
            o.require(p >= 0.0 && p <= 1.0 + 1e-12, "plain success " + format_real(p));
        }
        // Measured values are pinned in the repository golden files.
        const auto path = std::filesystem::path(DOSEARCH_GOLDEN_DIR) /
                          ("robust_plain_m3_offset" + std::to_string(off) + ".csv");
        std::ifstream in(path);
        std::string line, last_mean;
        while (std::getline(in, line)) {
            if (line.rfind("mean,,", 0) == 0) last_mean = line.substr(6);
        }
        o.require(!last_mean.empty() && std::abs(std::stod(last_mean) - s.mean) <= 1e-12,
                  "golden file " + path.string() + " disagrees with measured mean");
        plain_means += (plain_means.empty() ? "" : ", ") + fmt("%.4f", s.mean);
    }
    if (o.pass) o.detail = "deterministic certain; plain means (offset 1, 2) = " + plain_means;
    return o;
}

// 7. Phase-matched iterate.
Outcome deterministic_iterate() {
    Outcome o;
    const auto plan = plan_deterministic_iterate(0.25);
    o.require(plan.j_rounds == 2, "j_rounds at t = 1/4 is " + std::to_string(plan.j_rounds));
    double worst = 0.0;
    const std::size_t n = 256, t_prev = 240;
    for (std::size_t k = 1; k <= 9; ++k) {
        const std::size_t goods = 12 * k;  // t = 0.05 k
        std::vector<Complex> a(n, 0.0);
        for (std::size_t j = 0; j < t_prev; ++j) a[j] = 1.0 / std::sqrt(double(t_prev));
        const auto out =
            apply_deterministic_amplify(StateVector(a), first_k(n, t_prev), first_k(n, goods));
        double mass = 0.0;
        for (std::size_t j = 0; j < goods; ++j) mass += std::norm(out[j]);
        worst = std::max(worst, std::abs(mass - 1.0));
    }
    o.require(worst <= kAmplifyTol, "worst mass deficit " + format_real(worst));
    if (o.pass) o.detail = "j_rounds(1/4) = 2, grid max |mass - 1| " + fmt("%.2e", worst);
    return o;
}

// 8. Two-level decomposition.
Outcome decomposition() {
    Outcome o;
    double worst = 0.0;
    auto check = [&](const DenseOperator &u, const std::string &name) {
        const auto f = reck_factorize(u);
        const std::size_t n = u.dim();
        o.require(f.factors.size() <= n * (n - 1) / 2, name + " exceeds factor budget");
        const double err = reconstruct(f, n).max_abs_diff(u);
        worst = std::max(worst, err);
        o.require(err <= kRoundTripTol, name + " round-trip error " + format_real(err));
    };
    Rng rng(0xAC8);
    for (int k = 0; k < 50; ++k) {
        const std::size_t n = 2 + static_cast<std::size_t>(k % 15);
        check(test_util::random_two_level_product(n, rng), "random dim " + std::to_string(n));
    }
    for (int m : {1, 2}) {
        const auto inst = generate_rayleigh_instance(m, 0xAC8);
        const auto masks = schedule_masks(inst, build_partition(inst));
        const std::size_t n = inst.n_states();
        for (std::size_t i = 1; i < masks.size(); ++i) {
            check(dense_step_unitary(masks[i - 1], masks[i], n), "V_" + std::to_string(i));
            check(dense_grover_iterate(masks[i], n), "U");
        }
    }
    if (o.pass) o.detail = "max round-trip error " + fmt("%.2e", worst);
    return o;
}

// 9. Matrix-free performance at M = 10.
Outcome performance() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const auto inst = generate_rayleigh_instance(10, 0xAC9);
    const auto schedule = build_partition(inst);
    const auto res = run_structured_search(inst, schedule);
    const double elapsed = seconds_since(t0);
    o.require(res.success_probability >= 1.0 - kCertaintyTol,
              "success " + format_real(res.success_probability));
    o.require(res.winner_index == brute_force_argmin(inst), "wrong winner");
    o.require(elapsed < kLargeSearchBudgetSeconds, fmt("took %.3f s", elapsed));
    if (o.pass) {
        o.detail = "N = " + std::to_string(inst.n_states()) + ", " + fmt("%.3f s", elapsed) +
                   " including instance generation";
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"AC1 certainty over M = 1..5", certainty},
        {"AC2 support shrinks 4x per step", support_law},
        {"AC3 density-of-states export", cdos_export},
        {"AC4 Grover closed form", grover_baseline},
        {"AC5 step unitaries are unitary", unitarity},
        {"AC6 robustness under nu error", robustness},
        {"AC7 phase-matched iterate", deterministic_iterate},
        {"AC8 two-level decomposition", decomposition},
        {"AC9 M = 10 matrix-free search", performance},
    };
    int failures = 0;
    for (const auto &[name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
        failures += o.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
