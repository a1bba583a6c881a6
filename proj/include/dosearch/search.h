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
 * Search drivers: structured M-step search over a partition schedule, the
 * multitarget Grover baseline, and the phase-matched iterate that amplifies
 * with certainty at any good/total ratio t in (0, 1).
 */

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dosearch/engine.h"
#include "dosearch/problem.h"

namespace dosearch {

/// Amplitudes with modulus above this count as support.
inline constexpr double kSupportEpsilon = 1e-9;

struct StepReport {
    int step_index = 0;
    std::size_t support_size = 0;
    double mass_on_good = 0.0;
    std::size_t max_amp_index = 0;
};

struct SearchResult {
    StateVector final_state;
    std::vector<StepReport> reports;
    std::size_t winner_index = 0;
    double success_probability = 0.0;
    /// psi_0 .. psi_M; empty unless requested.
    std::vector<StateVector> trajectory;
};

/// Phase-matched iterate parameters for a ratio t = T_good / T_prev.
struct DeterministicIterateParams {
    double t = 0.0;
    double beta = 0.0;
    int j_rounds = 0;
    double phi = 0.0;
};

/// Index of the strictly smallest cost.
std::size_t brute_force_argmin(const ProblemInstance &instance);

/// The masks f_0 = all, f_1, ..., f_M for a schedule.
std::vector<OracleMask> schedule_masks(const ProblemInstance &instance,
                                       const PartitionSchedule &schedule);

StepReport make_step_report(int step_index, const StateVector &state,
                            const OracleMask &good);

/// Runs psi_i = V_i psi_{i-1} from the uniform state. Throws
/// PreconditionError unless the schedule is exact.
SearchResult run_structured_search(const ProblemInstance &instance,
                                   const PartitionSchedule &schedule,
                                   bool record_trajectory = false);

/// Applies the plain step unitaries along an arbitrary nested mask chain
/// (chain[0] is the starting support). Used for perturbed schedules.
SearchResult run_mask_chain(const ProblemInstance &instance,
                            const std::vector<OracleMask> &chain,
                            bool record_trajectory = false);

/// As run_mask_chain, but each step uses apply_deterministic_amplify.
SearchResult run_mask_chain_deterministic(const ProblemInstance &instance,
                                          const std::vector<OracleMask> &chain,
                                          bool record_trajectory = false);

/// floor(pi / (4 theta)), theta = arcsin(sqrt(T / N)): the iteration count
/// maximizing success, ~ (pi / 4) sqrt(N / T) when T << N.
int grover_auto_iterations(std::size_t n_states, std::size_t n_targets);

/// sin^2((2m + 1) arcsin(sqrt(T / N))).
double grover_success_closed_form(std::size_t n_states, std::size_t n_targets,
                                  int iterations);

/// Mass on the mask after `iterations` Grover iterates from the uniform state
/// (nullopt selects grover_auto_iterations).
double run_multitarget_grover(std::size_t n_states, const OracleMask &mask,
                              std::optional<int> iterations = std::nullopt);

DeterministicIterateParams plan_deterministic_iterate(double t_ratio);

/// One phase-matched round within prev: e^{i phi} on good, then
/// -(I + (e^{i phi} - 1)|u><u|) with u uniform on prev.
StateVector apply_phase_matched_round(const StateVector &state,
                                      const OracleMask &prev_mask,
                                      const OracleMask &good_mask, double phi);

/// j_rounds phase-matched rounds; moves all mass on prev onto good when the
/// input is uniform on prev. Amplitudes outside prev are copied unchanged.
StateVector apply_deterministic_amplify(const StateVector &state,
                                        const OracleMask &prev_mask,
                                        const OracleMask &good_mask);

}  // namespace dosearch
