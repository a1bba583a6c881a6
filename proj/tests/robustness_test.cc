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

#include <cmath>

#include "gtest/gtest.h"

#include "dosearch/error.h"
#include "dosearch/search.h"

using namespace dosearch;

TEST(robustness, zero_offset_is_certain) {
    for (auto mode : {RobustnessMode::kPlain, RobustnessMode::kDeterministic}) {
        const auto s = run_robustness({3, 0, 20, mode, 5});
        for (double p : s.probabilities()) EXPECT_NEAR(p, 1.0, 1e-10);
        EXPECT_EQ(s.total_redraws, 0);
        for (const auto &t : s.trials) {
            EXPECT_EQ(t.offsets, (std::vector<std::int64_t>{0, 0, 0}));
        }
    }
}

TEST(robustness, deterministic_mode_is_certain) {
    for (std::int64_t offset : {1, 2}) {
        const auto s = run_robustness({3, offset, 50, RobustnessMode::kDeterministic, 11});
        for (double p : s.probabilities()) EXPECT_NEAR(p, 1.0, 1e-9);
        EXPECT_NEAR(s.min, 1.0, 1e-9);
        EXPECT_EQ(s.fraction_high, 1.0);
    }
}

TEST(robustness, plain_mode_loses_certainty) {
    for (std::int64_t offset : {1, 2}) {
        const auto s = run_robustness({3, offset, 50, RobustnessMode::kPlain, 11});
        EXPECT_LT(s.mean, 1.0);
        EXPECT_GT(s.mean, 0.5);
        for (double p : s.probabilities()) {
            EXPECT_GE(p, 0.0);
            EXPECT_LE(p, 1.0 + 1e-12);
        }
    }
    // With offsets of one the final ratio is 1/4 or 1/2, never worse.
    EXPECT_GT(run_robustness({3, 1, 50, RobustnessMode::kPlain, 11}).min, 1.0 / 64.0);
}

TEST(robustness, plain_three_quarter_ratio_empties_good_set) {
    // Keeping 3 of 4 states sends every good amplitude to x (3T - 4g) / T = 0.
    std::vector<Complex> a(16, 0.0);
    for (std::size_t j = 0; j < 4; ++j) a[j] = 0.5;
    const auto out = apply_step_unitary(StateVector(a), OracleMask({1, 1, 1, 1, 0, 0, 0, 0,
                                                                    0, 0, 0, 0, 0, 0, 0, 0}),
                                         OracleMask({1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
                                                     0, 0, 0}));
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(out[j], Complex(0.0, 0.0));
    EXPECT_EQ(std::abs(out[3]), 1.0);
}

TEST(robustness, deterministic_given_seed) {
    const RobustnessConfig cfg{3, 2, 30, RobustnessMode::kPlain, 77};
    const auto a = run_robustness(cfg);
    const auto b = run_robustness(cfg);
    ASSERT_EQ(a.trials.size(), b.trials.size());
    for (std::size_t k = 0; k < a.trials.size(); ++k) {
        EXPECT_EQ(a.trials[k].success_probability, b.trials[k].success_probability);
        EXPECT_EQ(a.trials[k].offsets, b.trials[k].offsets);
    }
    EXPECT_EQ(a.mean, b.mean);
    EXPECT_EQ(a.total_redraws, b.total_redraws);
}

TEST(robustness, mode_dominance_on_same_schedule) {
    const RobustnessConfig cfg{3, 2, 40, RobustnessMode::kPlain, 3};
    for (int k = 0; k < cfg.trials; ++k) {
        const auto setup = draw_trial(cfg, k);
        const double plain = run_trial(setup, RobustnessMode::kPlain);
        const double det = run_trial(setup, RobustnessMode::kDeterministic);
        EXPECT_GE(det, plain - 1e-9);
    }
}

TEST(robustness, chain_ends_at_argmin) {
    const RobustnessConfig cfg{3, 2, 1, RobustnessMode::kPlain, 9};
    for (int k = 0; k < 20; ++k) {
        const auto setup = draw_trial(cfg, k);
        const auto chain = robustness_chain(setup.instance, setup.schedule);
        EXPECT_EQ(chain.back().cardinality(), 1u);
        EXPECT_TRUE(chain.back().contains(brute_force_argmin(setup.instance)));
        for (std::size_t i = 1; i < chain.size(); ++i) {
            EXPECT_TRUE(chain[i].is_subset_of(chain[i - 1]));
            EXPECT_LT(chain[i].cardinality(), chain[i - 1].cardinality());
        }
    }
}

TEST(robustness, configuration_errors) {
    EXPECT_THROW(run_robustness({3, 1, 0, RobustnessMode::kPlain, 0}), ConfigurationError);
    EXPECT_THROW(run_robustness({3, -1, 1, RobustnessMode::kPlain, 0}), ConfigurationError);
    // M = 2 with huge offsets essentially never stays below N = 16.
    EXPECT_THROW(run_robustness({2, 1000000000, 1, RobustnessMode::kPlain, 0}), ConfigurationError);
    EXPECT_EQ(parse_robustness_mode("plain"), RobustnessMode::kPlain);
    EXPECT_EQ(parse_robustness_mode("deterministic"), RobustnessMode::kDeterministic);
    EXPECT_THROW(parse_robustness_mode("fancy"), ConfigurationError);
}
