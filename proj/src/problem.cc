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

#include "dosearch/problem.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "dosearch/error.h"
#include "dosearch/random.h"

namespace dosearch {

std::size_t states_for_levels(int m_levels) {
    constexpr int kMaxLevels = (std::numeric_limits<std::size_t>::digits - 1) / 2;
    if (m_levels < 1 || m_levels > kMaxLevels) {
        throw SizeError("m_levels must be in [1, " + std::to_string(kMaxLevels) +
                        "], got " + std::to_string(m_levels));
    }
    return std::size_t{1} << (2 * m_levels);
}

int levels_for_states(std::size_t n_states) {
    if (n_states < 4 || (n_states & (n_states - 1)) != 0) {
        throw SizeError("state count " + std::to_string(n_states) +
                        " is not a power of 4 (>= 4)");
    }
    int bits = std::countr_zero(n_states);
    if (bits % 2 != 0) {
        throw SizeError("state count " + std::to_string(n_states) +
                        " is not a power of 4 (>= 4)");
    }
    return bits / 2;
}

ProblemInstance::ProblemInstance(std::vector<double> costs, TiePolicy ties)
    : m_levels_(levels_for_states(costs.size())), costs_(std::move(costs)) {
    for (std::size_t j = 0; j < costs_.size(); ++j) {
        if (!std::isfinite(costs_[j])) {
            throw ValidationError("cost " + std::to_string(j) + " is not finite");
        }
    }
    std::vector<double> sorted = costs_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) {
        return;
    }
    // Ordered by value, so +0.0 and -0.0 collide (they are equal under <=).
    std::set<double> seen;
    for (std::size_t j = 0; j < costs_.size(); ++j) {
        double &c = costs_[j];
        while (seen.count(c) != 0) {
            if (ties == TiePolicy::kReject) {
                throw TieError("cost " + std::to_string(j) +
                               " duplicates an earlier cost");
            }
            c = std::nextafter(c, std::numeric_limits<double>::infinity());
            if (!std::isfinite(c)) {
                throw ValidationError("tie nudge overflowed at cost " +
                                      std::to_string(j));
            }
        }
        seen.insert(c);
    }
}

CumulativeDensity::CumulativeDensity(const ProblemInstance &instance)
    : sorted_(instance.costs().begin(), instance.costs().end()) {
    std::sort(sorted_.begin(), sorted_.end());
}

std::size_t CumulativeDensity::operator()(double c) const {
    return static_cast<std::size_t>(
        std::upper_bound(sorted_.begin(), sorted_.end(), c) - sorted_.begin());
}

double CumulativeDensity::order_statistic(std::size_t k) const {
    if (k < 1 || k > sorted_.size()) {
        throw DomainError("order statistic " + std::to_string(k) +
                          " out of range [1, " + std::to_string(sorted_.size()) +
                          "]");
    }
    return sorted_[k - 1];
}

CumulativeDensity empirical_cdos(const ProblemInstance &instance) {
    return CumulativeDensity(instance);
}

double ideal_cdos(double c, std::size_t n_states) {
    return static_cast<double>(n_states) * -std::expm1(-0.5 * c * c);
}

std::vector<std::size_t> PartitionSchedule::target_sizes() const {
    const int m = m_levels();
    std::vector<std::size_t> out;
    out.reserve(m);
    for (int i = 1; i <= m; ++i) {
        out.push_back(std::size_t{1} << (2 * (m - i)));
    }
    return out;
}

double rayleigh_inverse_cdf(double u) { return std::sqrt(-2.0 * std::log1p(-u)); }

ProblemInstance generate_rayleigh_instance(int m_levels, std::uint64_t seed) {
    const std::size_t n = states_for_levels(m_levels);
    Rng rng(seed);
    std::vector<double> costs(n);
    for (auto &c : costs) {
        c = rayleigh_inverse_cdf(rng.uniform01());
    }
    return ProblemInstance(std::move(costs), TiePolicy::kNudge);
}

namespace {

PartitionSchedule schedule_from_sizes(const CumulativeDensity &nu,
                                      std::vector<std::size_t> sizes) {
    PartitionSchedule out;
    out.thresholds.reserve(sizes.size());
    for (std::size_t k : sizes) {
        const double c = nu.order_statistic(k);
        // Distinct costs make nu(k-th smallest) == k; a shared value would not.
        if (nu(c) != k) {
            throw TieError("duplicate cost at partition boundary " +
                           std::to_string(k));
        }
        out.thresholds.push_back(c);
    }
    out.sizes = std::move(sizes);
    return out;
}

}  // namespace

PartitionSchedule build_partition(const ProblemInstance &instance) {
    const CumulativeDensity nu(instance);
    PartitionSchedule shape;
    shape.thresholds.resize(instance.m_levels());
    return schedule_from_sizes(nu, shape.target_sizes());
}

PartitionSchedule perturb_partition(const PartitionSchedule &schedule,
                                    const ProblemInstance &instance,
                                    std::int64_t max_offset,
                                    std::uint64_t seed) {
    if (max_offset < 0) {
        throw PerturbationError("max_offset must be non-negative");
    }
    if (schedule.m_levels() != instance.m_levels()) {
        throw PerturbationError("schedule and instance disagree on M");
    }
    const auto targets = schedule.target_sizes();
    const auto n = static_cast<std::int64_t>(instance.n_states());
    Rng rng(seed);
    std::vector<std::size_t> sizes;
    sizes.reserve(targets.size());
    std::int64_t previous = n;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        std::int64_t size = static_cast<std::int64_t>(targets[i]) +
                            rng.uniform_int(-max_offset, max_offset);
        if (i + 1 == targets.size()) {
            size = std::max<std::int64_t>(size, 1);
        }
        if (size < 1 || size >= previous) {
            throw PerturbationError(
                "perturbed size " + std::to_string(size) + " at step " +
                std::to_string(i + 1) + " is not in [1, " +
                std::to_string(previous - 1) + "]");
        }
        sizes.push_back(static_cast<std::size_t>(size));
        previous = size;
    }
    return schedule_from_sizes(CumulativeDensity(instance), std::move(sizes));
}

}  // namespace dosearch
