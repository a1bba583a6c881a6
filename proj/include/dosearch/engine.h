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
 * State vectors over the N-dimensional configuration space, oracle masks,
 * and the step operators of structured search.
 *
 * Two paths are provided for every operator: a matrix-free O(N) path used in
 * production and a dense N x N path (N <= kDenseCap) used to verify it.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dosearch/problem.h"

namespace dosearch {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Largest N for which dense operators may be materialized.
inline constexpr std::size_t kDenseCap = 1024;

/// Unit-norm vector of N = 4^M complex amplitudes.
class StateVector {
   public:
    /// Validates the length (power of 4) and the norm (within 1e-12).
    explicit StateVector(std::vector<Complex> amplitudes);

    std::size_t size() const { return amps_.size(); }
    std::span<const Complex> amplitudes() const { return amps_; }
    const Complex &operator[](std::size_t j) const { return amps_[j]; }

    double norm_squared() const;

    bool operator==(const StateVector &) const = default;

   private:
    struct Unchecked {};
    StateVector(std::vector<Complex> amplitudes, Unchecked)
        : amps_(std::move(amplitudes)) {}

    std::vector<Complex> amps_;

    friend StateVector make_state_unchecked(std::vector<Complex>);
};

/// Engine-internal constructor for vectors already known to be valid.
StateVector make_state_unchecked(std::vector<Complex> amplitudes);

/// 0/1 indicator over the N states; the range of f_i.
class OracleMask {
   public:
    explicit OracleMask(std::vector<std::uint8_t> bits);

    static OracleMask all(std::size_t n_states);
    static OracleMask none(std::size_t n_states);
    static OracleMask from_indices(std::size_t n_states,
                                   std::span<const std::size_t> indices);

    std::size_t size() const { return bits_.size(); }
    std::size_t cardinality() const { return cardinality_; }
    bool contains(std::size_t j) const { return bits_[j] != 0; }
    std::span<const std::uint8_t> bits() const { return bits_; }

    bool is_subset_of(const OracleMask &other) const;
    std::vector<std::size_t> indices() const;

    bool operator==(const OracleMask &) const = default;

   private:
    std::vector<std::uint8_t> bits_;
    std::size_t cardinality_ = 0;
};

/// Row-major N x N complex matrix, for verification at N <= kDenseCap.
class DenseOperator {
   public:
    explicit DenseOperator(std::size_t dim);
    DenseOperator(std::size_t dim, std::vector<Complex> entries);

    static DenseOperator identity(std::size_t dim);
    static DenseOperator ones(std::size_t dim);
    static DenseOperator diagonal(std::span<const Complex> diag);

    std::size_t dim() const { return dim_; }
    Complex &operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return data_[r * dim_ + c];
    }
    std::span<const Complex> entries() const { return data_; }

    DenseOperator adjoint() const;
    DenseOperator operator*(const DenseOperator &rhs) const;
    DenseOperator operator+(const DenseOperator &rhs) const;
    DenseOperator operator-(const DenseOperator &rhs) const;
    DenseOperator operator*(Complex s) const;

    /// diag(d) * this, in O(N^2).
    DenseOperator scale_rows(std::span<const Complex> d) const;
    /// this * diag(d), in O(N^2).
    DenseOperator scale_cols(std::span<const Complex> d) const;

    std::vector<Complex> apply(std::span<const Complex> x) const;
    StateVector apply(const StateVector &x) const;

    /// max |(U^dagger U - I)_{rc}|.
    double unitarity_error() const;

    double max_abs_diff(const DenseOperator &other) const;

   private:
    std::size_t dim_;
    std::vector<Complex> data_;
};

/// |psi_0> with every amplitude 1/2^M.
StateVector uniform_state(std::size_t n_states);

/// bits[j] = 1 iff costs[j] <= threshold.
OracleMask oracle_mask(const ProblemInstance &instance, double threshold);

/// Multiplies amplitudes on the mask by e^{i phase}. phase == pi is exact -1.
StateVector apply_phase_oracle(const StateVector &state, const OracleMask &mask,
                               double phase);

/**
 * Matrix-free V = f_prev D R f_prev + (1 - f_prev).
 *
 * With sigma_k = -1 on good and +1 elsewhere, S = sum_{k in prev} sigma_k a_k,
 * the result on prev is b_j = (2 / T_prev) S - sigma_j a_j; amplitudes outside
 * prev are copied unchanged.
 */
StateVector apply_step_unitary(const StateVector &state,
                               const OracleMask &prev_mask,
                               const OracleMask &good_mask);

/// Matrix-free Grover iterate (2P/N - 1) exp(i pi f): phase flip on the mask,
/// then inversion about the mean.
StateVector apply_grover_iterate(const StateVector &state, const OracleMask &mask);

/// V built literally from P, f_prev, f_good as dense products.
DenseOperator dense_step_unitary(const OracleMask &prev_mask,
                                 const OracleMask &good_mask,
                                 std::size_t n_states);

/// U = (2P/N - 1) exp(i pi f) as a dense matrix.
DenseOperator dense_grover_iterate(const OracleMask &mask, std::size_t n_states);

/// Fixed-tree pairwise sum of the amplitudes selected by `mask`, each
/// multiplied by `good_sign` when it is also in `good` (pass nullptr for no
/// sign flips). The reduction tree depends only on N.
Complex masked_pairwise_sum(std::span<const Complex> amps, const OracleMask &mask,
                            const OracleMask *good, double good_sign);

}  // namespace dosearch
