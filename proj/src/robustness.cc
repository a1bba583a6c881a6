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

#include "dosearch/robustness.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dosearch/error.h"
#include "dosearch/random.h"
#include "dosearch/search.h"

namespace dosearch {

std::string to_string(RobustnessMode mode) {
    return mode == RobustnessMode::kPlain ? "plain" : "deterministic";
}

RobustnessMode parse_robustness_mode(const std::string &text) {
    if (text == "plain") return RobustnessMode::kPlain;
    if (text == "deterministic") return RobustnessMode::kDeterministic;
    throw ConfigurationError("unknown robustness mode '" + text + "'");
}

std::vector<double> RobustnessSummary::probabilities() const {
    std::vector<double> out;
    out.reserve(trials.size());
    for (const auto &t : trials) out.push_back(t.success_probability);
    return out;
}

TrialSetup draw_trial(const RobustnessConfig &config, int trial) {
    for (int attempt = 0; attempt <= kMaxRedraws; ++attempt) {
        const std::uint64_t seed = derive_seed(config.base_seed,
                                               static_cast<std::uint64_t>(trial),
                                               static_cast<std::uint64_t>(attempt));
        ProblemInstance instance = generate_rayleigh_instance(config.m_levels, seed);
        const PartitionSchedule exact = build_partition(instance);
        try {
            PartitionSchedule perturbed = perturb_partition(
                exact, instance, config.max_offset, splitmix64(seed));
            return TrialSetup{std::move(instance), std::move(perturbed), attempt};
        } catch (const PerturbationError &) {
            continue;
        }
    }
    throw ConfigurationError("no feasible perturbation after " +
                             std::to_string(kMaxRedraws) +
                             " redraws; reduce max_offset or raise m_levels");
}

std::vector<OracleMask> robustness_chain(const ProblemInstance &instance,
                                         const PartitionSchedule &schedule) {
    auto chain = schedule_masks(instance, schedule);
    if (chain.back().cardinality() > 1) {
        const std::size_t argmin = brute_force_argmin(instance);
        chain.push_back(OracleMask::from_indices(instance.n_states(),
                                                 std::span<const std::size_t>(&argmin, 1)));
    }
    return chain;
}

double run_trial(const TrialSetup &setup, RobustnessMode mode) {
    const auto chain = robustness_chain(setup.instance, setup.schedule);
    const SearchResult result = mode == RobustnessMode::kPlain
                                    ? run_mask_chain(setup.instance, chain)
                                    : run_mask_chain_deterministic(setup.instance, chain);
    return result.success_probability;
}

RobustnessSummary run_robustness(const RobustnessConfig &config) {
    if (config.trials < 1) {
        throw ConfigurationError("trials must be >= 1");
    }
    if (config.max_offset < 0) {
        throw ConfigurationError("max_offset must be >= 0");
    }
    states_for_levels(config.m_levels);

    RobustnessSummary summary;
    summary.trials.reserve(config.trials);
    for (int k = 0; k < config.trials; ++k) {
        const TrialSetup setup = draw_trial(config, k);
        TrialOutcome outcome;
        outcome.trial = k;
        outcome.redraws = setup.redraws;
        const auto targets = setup.schedule.target_sizes();
        for (std::size_t i = 0; i < targets.size(); ++i) {
            outcome.offsets.push_back(static_cast<std::int64_t>(setup.schedule.sizes[i]) -
                                      static_cast<std::int64_t>(targets[i]));
        }
        outcome.success_probability = run_trial(setup, config.mode);
        summary.total_redraws += setup.redraws;
        summary.trials.push_back(std::move(outcome));
    }

    // Summed in trial order so the aggregate is independent of scheduling.
    double total = 0.0;
    double lowest = std::numeric_limits<double>::infinity();
    int high = 0;
    for (const auto &t : summary.trials) {
        total += t.success_probability;
        lowest = std::min(lowest, t.success_probability);
        if (t.success_probability >= 0.99) ++high;
    }
    summary.mean = total / config.trials;
    summary.min = lowest;
    summary.fraction_high = static_cast<double>(high) / config.trials;
    return summary;
}

}  // namespace dosearch
