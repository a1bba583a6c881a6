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

/**
 * @file
 * Monte Carlo study of structured search when the density of states is only
 * approximately known.
 *
 * Protocol, per trial k:
 *   1. draw a Rayleigh instance with seed derive_seed(base_seed, k, attempt);
 *   2. build the exact schedule and perturb every sublevel-set size by a
 *      uniform integer offset in [-max_offset, max_offset];
 *   3. if the perturbation is infeasible, redraw (attempt + 1), up to
 *      kMaxRedraws times per trial;
 *   4. run the mask chain all -> perturbed sets -> {argmin} (the last stage
 *      only when the final perturbed set holds more than one state), using
 *      plain step unitaries or the phase-matched iterate;
 *   5. record |amplitude at argmin|^2.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dosearch/engine.h"
#include "dosearch/problem.h"

namespace dosearch {

enum class RobustnessMode { kPlain, kDeterministic };

std::string to_string(RobustnessMode mode);
RobustnessMode parse_robustness_mode(const std::string &text);

inline constexpr int kMaxRedraws = 1000;

struct RobustnessConfig {
    int m_levels = 3;
    std::int64_t max_offset = 0;
    int trials = 1;
    RobustnessMode mode = RobustnessMode::kPlain;
    std::uint64_t base_seed = 0;
};

struct TrialOutcome {
    int trial = 0;
    /// sizes - targets, one entry per level.
    std::vector<std::int64_t> offsets;
    double success_probability = 0.0;
    int redraws = 0;
};

struct RobustnessSummary {
    std::vector<TrialOutcome> trials;
    double mean = 0.0;
    double min = 0.0;
    /// Fraction of trials with success >= 0.99.
    double fraction_high = 0.0;
    int total_redraws = 0;

    std::vector<double> probabilities() const;
};

/// Perturbed trial setup shared by both modes.
struct TrialSetup {
    ProblemInstance instance;
    PartitionSchedule schedule;
    int redraws = 0;
};

TrialSetup draw_trial(const RobustnessConfig &config, int trial);

/// Nested masks for a (possibly perturbed) schedule, ending in the singleton
/// argmin set.
std::vector<OracleMask> robustness_chain(const ProblemInstance &instance,
                                         const PartitionSchedule &schedule);

double run_trial(const TrialSetup &setup, RobustnessMode mode);

RobustnessSummary run_robustness(const RobustnessConfig &config);

}  // namespace dosearch
