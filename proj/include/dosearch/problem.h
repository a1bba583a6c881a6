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
 * Problem instances, the cumulative density of states, and the nested
 * partition schedule that drives structured search.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dosearch {

/// Returns 4^m_levels, throwing SizeError when m_levels is 0 or the result
/// does not fit in size_t.
std::size_t states_for_levels(int m_levels);

/// Returns M such that n_states == 4^M, or throws SizeError.
int levels_for_states(std::size_t n_states);

enum class TiePolicy {
    /// Nudge a colliding cost upward by one ulp at a time until it is unique.
    kNudge,
    /// Throw TieError on any collision.
    kReject,
};

/**
 * N = 4^M states with finite, pairwise-distinct real costs.
 *
 * Immutable after construction. Distinctness is what lets every sublevel set
 * {j : cost[j] <= c} hit an exact cardinality.
 */
class ProblemInstance {
   public:
    ProblemInstance(std::vector<double> costs,
                    TiePolicy ties = TiePolicy::kNudge);

    int m_levels() const { return m_levels_; }
    std::size_t n_states() const { return costs_.size(); }
    std::span<const double> costs() const { return costs_; }
    double cost(std::size_t j) const { return costs_[j]; }

    bool operator==(const ProblemInstance &) const = default;

   private:
    int m_levels_;
    std::vector<double> costs_;
};

/// Empirical nu(c) = |{j : C(S_j) <= c}| backed by the sorted cost list.
class CumulativeDensity {
   public:
    explicit CumulativeDensity(const ProblemInstance &instance);

    /// Inclusive count, O(log N).
    std::size_t operator()(double c) const;

    /// k-th smallest cost, 1-based.
    double order_statistic(std::size_t k) const;

    std::span<const double> sorted_costs() const { return sorted_; }
    std::size_t n_states() const { return sorted_.size(); }

   private:
    std::vector<double> sorted_;
};

CumulativeDensity empirical_cdos(const ProblemInstance &instance);

/// N (1 - exp(-c^2 / 2)): expected nu(c) for unit-scale Rayleigh costs.
double ideal_cdos(double c, std::size_t n_states);

/**
 * Thresholds c_1 > c_2 > ... > c_M with their realized sublevel-set sizes.
 *
 * An exact schedule has sizes[i-1] == 4^(M-i). Perturbed schedules keep the
 * nesting but not the exact sizes.
 */
struct PartitionSchedule {
    std::vector<double> thresholds;
    std::vector<std::size_t> sizes;

    int m_levels() const { return static_cast<int>(thresholds.size()); }

    /// 4^(M-i) for i = 1..M.
    std::vector<std::size_t> target_sizes() const;
    bool is_exact() const { return sizes == target_sizes(); }

    bool operator==(const PartitionSchedule &) const = default;
};

/// Rayleigh(sigma = 1) costs by inverse transform c = sqrt(-2 ln(1 - u)).
ProblemInstance generate_rayleigh_instance(int m_levels, std::uint64_t seed);

/// Inverse Rayleigh CDF, exposed for testing the sampler.
double rayleigh_inverse_cdf(double u);

/// Sets c_i to the 4^(M-i)-th smallest cost.
PartitionSchedule build_partition(const ProblemInstance &instance);

/// Offsets each sublevel-set size by a uniform integer in
/// [-max_offset, max_offset] (the last one clamped to stay >= 1) and moves
/// the thresholds to the matching order statistics. Throws PerturbationError
/// if the drawn sizes are not strictly decreasing or do not fit below N.
PartitionSchedule perturb_partition(const PartitionSchedule &schedule,
                                    const ProblemInstance &instance,
                                    std::int64_t max_offset,
                                    std::uint64_t seed);

}  // namespace dosearch
