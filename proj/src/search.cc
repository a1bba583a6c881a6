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

#include "dosearch/search.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "dosearch/error.h"

namespace dosearch {

std::size_t brute_force_argmin(const ProblemInstance &instance) {
    const auto costs = instance.costs();
    return static_cast<std::size_t>(std::min_element(costs.begin(), costs.end()) -
                                    costs.begin());
}

std::vector<OracleMask> schedule_masks(const ProblemInstance &instance,
                                       const PartitionSchedule &schedule) {
    std::vector<OracleMask> masks;
    masks.reserve(schedule.thresholds.size() + 1);
    masks.push_back(OracleMask::all(instance.n_states()));
    for (double c : schedule.thresholds) {
        masks.push_back(oracle_mask(instance, c));
    }
    return masks;
}

StepReport make_step_report(int step_index, const StateVector &state,
                            const OracleMask &good) {
    StepReport r;
    r.step_index = step_index;
    double best = -1.0;
    for (std::size_t j = 0; j < state.size(); ++j) {
        const double mod = std::abs(state[j]);
        if (mod > kSupportEpsilon) ++r.support_size;
        if (good.contains(j)) r.mass_on_good += mod * mod;
        if (mod > best) {
            best = mod;
            r.max_amp_index = j;
        }
    }
    return r;
}

namespace {

template <typename Step>
SearchResult drive_chain(const ProblemInstance &instance,
                         const std::vector<OracleMask> &chain,
                         bool record_trajectory, Step step) {
    if (chain.empty()) {
        throw DomainError("mask chain is empty");
    }
    StateVector state = uniform_state(instance.n_states());
    std::vector<StateVector> trajectory;
    if (record_trajectory) trajectory.push_back(state);
    std::vector<StepReport> reports;
    for (std::size_t i = 1; i < chain.size(); ++i) {
        state = step(state, chain[i - 1], chain[i]);
        reports.push_back(make_step_report(static_cast<int>(i), state, chain[i]));
        if (record_trajectory) trajectory.push_back(state);
    }
    const std::size_t argmin = brute_force_argmin(instance);
    const double success = std::norm(state[argmin]);
    const std::size_t winner =
        reports.empty() ? make_step_report(0, state, chain.front()).max_amp_index
                        : reports.back().max_amp_index;
    return SearchResult{std::move(state), std::move(reports), winner, success,
                        std::move(trajectory)};
}

}  // namespace

SearchResult run_mask_chain(const ProblemInstance &instance,
                            const std::vector<OracleMask> &chain,
                            bool record_trajectory) {
    return drive_chain(instance, chain, record_trajectory,
                       [](const StateVector &s, const OracleMask &prev,
                          const OracleMask &good) {
                           return apply_step_unitary(s, prev, good);
                       });
}

SearchResult run_mask_chain_deterministic(const ProblemInstance &instance,
                                          const std::vector<OracleMask> &chain,
                                          bool record_trajectory) {
    return drive_chain(instance, chain, record_trajectory,
                       [](const StateVector &s, const OracleMask &prev,
                          const OracleMask &good) {
                           return apply_deterministic_amplify(s, prev, good);
                       });
}

SearchResult run_structured_search(const ProblemInstance &instance,
                                   const PartitionSchedule &schedule,
                                   bool record_trajectory) {
    if (schedule.m_levels() != instance.m_levels() || !schedule.is_exact()) {
        throw PreconditionError(
            "structured search needs an exact schedule (nu(c_i) = 4^(M-i)); "
            "use the robustness driver or the deterministic iterate instead");
    }
    const auto masks = schedule_masks(instance, schedule);
    for (std::size_t i = 1; i < masks.size(); ++i) {
        if (masks[i].cardinality() != schedule.sizes[i - 1]) {
            throw PreconditionError("schedule does not match the instance");
        }
    }
    return run_mask_chain(instance, masks, record_trajectory);
}

int grover_auto_iterations(std::size_t n_states, std::size_t n_targets) {
    if (n_targets == 0) {
        throw NoTargetError("Grover search needs at least one target");
    }
    if (n_targets > n_states) {
        throw DomainError("more targets than states");
    }
    // floor(pi / (4 theta)) maximizes sin^2((2m + 1) theta); it tends to
    // (pi / 4) sqrt(N / T) for T << N and gives m = 1 at T = N / 4.
    const double theta = std::asin(std::sqrt(static_cast<double>(n_targets) /
                                             static_cast<double>(n_states)));
    return static_cast<int>(std::floor(kPi / (4.0 * theta) + 1e-9));
}

double grover_success_closed_form(std::size_t n_states, std::size_t n_targets,
                                  int iterations) {
    const double theta = std::asin(std::sqrt(static_cast<double>(n_targets) /
                                             static_cast<double>(n_states)));
    const double s = std::sin((2.0 * iterations + 1.0) * theta);
    return s * s;
}

double run_multitarget_grover(std::size_t n_states, const OracleMask &mask,
                              std::optional<int> iterations) {
    if (mask.size() != n_states) {
        throw ValidationError("mask length does not match n_states");
    }
    if (mask.cardinality() == 0) {
        throw NoTargetError("Grover search needs at least one target");
    }
    const int m = iterations.value_or(grover_auto_iterations(n_states, mask.cardinality()));
    if (m < 0) {
        throw DomainError("iteration count must be non-negative");
    }
    StateVector state = uniform_state(n_states);
    for (int k = 0; k < m; ++k) {
        state = apply_grover_iterate(state, mask);
    }
    double mass = 0.0;
    for (std::size_t j = 0; j < n_states; ++j) {
        if (mask.contains(j)) mass += std::norm(state[j]);
    }
    return mass;
}

DeterministicIterateParams plan_deterministic_iterate(double t_ratio) {
    if (!(t_ratio > 0.0 && t_ratio < 1.0)) {
        throw DomainError("ratio t must lie in (0, 1), got " + std::to_string(t_ratio));
    }
    DeterministicIterateParams p;
    p.t = t_ratio;
    p.beta = std::asin(std::sqrt(t_ratio));
    // Slack absorbs rounding when (pi/2 - beta)/(2 beta) is an exact integer.
    int j = static_cast<int>(std::ceil((kPi / 2.0 - p.beta) / (2.0 * p.beta) - 1e-9));
    j = std::max(j, 0);
    double arg = std::sin(kPi / (4.0 * j + 6.0)) / std::sin(p.beta);
    while (arg > 1.0) {
        ++j;
        arg = std::sin(kPi / (4.0 * j + 6.0)) / std::sin(p.beta);
    }
    p.phi = 2.0 * std::asin(arg);
    p.j_rounds = j + 1;
    return p;
}

StateVector apply_phase_matched_round(const StateVector &state,
                                      const OracleMask &prev_mask,
                                      const OracleMask &good_mask, double phi) {
    const StateVector marked = apply_phase_oracle(state, good_mask, phi);
    const auto a = marked.amplitudes();
    const Complex phase = phi == kPi ? Complex{-1.0, 0.0} : std::polar(1.0, phi);
    // (e^{i phi} - 1) <u|a> u_j with u_j = 1/sqrt(T) reduces to (e^{i phi} - 1) S / T.
    const Complex shift = (phase - 1.0) * masked_pairwise_sum(a, prev_mask, nullptr, 1.0) /
                          static_cast<double>(prev_mask.cardinality());
    std::vector<Complex> out(a.begin(), a.end());
    for (std::size_t j = 0; j < out.size(); ++j) {
        if (prev_mask.contains(j)) out[j] = -(a[j] + shift);
    }
    return make_state_unchecked(std::move(out));
}

StateVector apply_deterministic_amplify(const StateVector &state,
                                        const OracleMask &prev_mask,
                                        const OracleMask &good_mask) {
    if (state.size() != prev_mask.size() || state.size() != good_mask.size()) {
        throw ValidationError("deterministic amplify: length mismatch");
    }
    if (good_mask.cardinality() == 0) {
        throw NoTargetError("deterministic amplify needs at least one good state");
    }
    if (!good_mask.is_subset_of(prev_mask)) {
        throw NestingError("good mask is not contained in previous mask");
    }
    if (good_mask.cardinality() == prev_mask.cardinality()) {
        throw DegenerateRatioError("good mask equals previous mask (t = 1)");
    }
    const auto params = plan_deterministic_iterate(
        static_cast<double>(good_mask.cardinality()) /
        static_cast<double>(prev_mask.cardinality()));
    StateVector out = state;
    for (int k = 0; k < params.j_rounds; ++k) {
        out = apply_phase_matched_round(out, prev_mask, good_mask, params.phi);
    }
    return out;
}

}  // namespace dosearch
