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

#include "dosearch/engine.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "dosearch/error.h"

namespace dosearch {

namespace {

constexpr std::size_t kPairwiseLeaf = 64;

void check_dense_size(std::size_t n) {
    if (n == 0 || n > kDenseCap) {
        throw SizeError("dense operators are limited to N <= " +
                        std::to_string(kDenseCap) + ", got " + std::to_string(n));
    }
}

void check_lengths(std::size_t a, std::size_t b, const char *what) {
    if (a != b) {
        throw ValidationError(std::string(what) + ": length mismatch (" +
                              std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

Complex pairwise(std::span<const Complex> amps, std::span<const std::uint8_t> in,
                 const std::uint8_t *good, double good_sign, std::size_t lo,
                 std::size_t hi) {
    if (hi - lo <= kPairwiseLeaf) {
        Complex acc{0.0, 0.0};
        for (std::size_t k = lo; k < hi; ++k) {
            if (in[k] == 0) continue;
            acc += (good != nullptr && good[k] != 0) ? good_sign * amps[k] : amps[k];
        }
        return acc;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    return pairwise(amps, in, good, good_sign, lo, mid) +
           pairwise(amps, in, good, good_sign, mid, hi);
}

}  // namespace

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(std::vector<Complex> amplitudes)
    : amps_(std::move(amplitudes)) {
    levels_for_states(amps_.size());
    const double n2 = norm_squared();
    if (!(std::abs(n2 - 1.0) <= 1e-12)) {
        throw ValidationError("state norm^2 is " + std::to_string(n2) +
                              ", expected 1");
    }
}

double StateVector::norm_squared() const {
    double acc = 0.0;
    for (const auto &a : amps_) acc += std::norm(a);
    return acc;
}

StateVector make_state_unchecked(std::vector<Complex> amplitudes) {
    return StateVector(std::move(amplitudes), StateVector::Unchecked{});
}

// ---------------------------------------------------------------------------
// OracleMask

OracleMask::OracleMask(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto &b : bits_) {
        if (b > 1) {
            throw ValidationError("mask entries must be 0 or 1");
        }
        cardinality_ += b;
    }
}

OracleMask OracleMask::all(std::size_t n_states) {
    return OracleMask(std::vector<std::uint8_t>(n_states, 1));
}

OracleMask OracleMask::none(std::size_t n_states) {
    return OracleMask(std::vector<std::uint8_t>(n_states, 0));
}

OracleMask OracleMask::from_indices(std::size_t n_states,
                                    std::span<const std::size_t> indices) {
    std::vector<std::uint8_t> bits(n_states, 0);
    for (std::size_t j : indices) {
        if (j >= n_states) {
            throw ValidationError("mask index " + std::to_string(j) +
                                  " out of range");
        }
        bits[j] = 1;
    }
    return OracleMask(std::move(bits));
}

bool OracleMask::is_subset_of(const OracleMask &other) const {
    if (other.size() != size()) return false;
    for (std::size_t j = 0; j < bits_.size(); ++j) {
        if (bits_[j] > other.bits_[j]) return false;
    }
    return true;
}

std::vector<std::size_t> OracleMask::indices() const {
    std::vector<std::size_t> out;
    out.reserve(cardinality_);
    for (std::size_t j = 0; j < bits_.size(); ++j) {
        if (bits_[j] != 0) out.push_back(j);
    }
    return out;
}

// ---------------------------------------------------------------------------
// DenseOperator

DenseOperator::DenseOperator(std::size_t dim)
    : dim_(dim), data_(dim * dim, Complex{0.0, 0.0}) {}

DenseOperator::DenseOperator(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
    if (data_.size() != dim * dim) {
        throw ValidationError("dense operator needs dim^2 entries");
    }
}

DenseOperator DenseOperator::identity(std::size_t dim) {
    DenseOperator out(dim);
    for (std::size_t j = 0; j < dim; ++j) out(j, j) = 1.0;
    return out;
}

DenseOperator DenseOperator::ones(std::size_t dim) {
    return DenseOperator(dim, std::vector<Complex>(dim * dim, Complex{1.0, 0.0}));
}

DenseOperator DenseOperator::diagonal(std::span<const Complex> diag) {
    DenseOperator out(diag.size());
    for (std::size_t j = 0; j < diag.size(); ++j) out(j, j) = diag[j];
    return out;
}

DenseOperator DenseOperator::adjoint() const {
    DenseOperator out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
    }
    return out;
}

DenseOperator DenseOperator::operator*(const DenseOperator &rhs) const {
    check_lengths(dim_, rhs.dim_, "matrix product");
    DenseOperator out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        Complex *orow = &out.data_[r * dim_];
        for (std::size_t k = 0; k < dim_; ++k) {
            const Complex a = (*this)(r, k);
            if (a == Complex{0.0, 0.0}) continue;
            const Complex *brow = &rhs.data_[k * dim_];
            for (std::size_t c = 0; c < dim_; ++c) orow[c] += a * brow[c];
        }
    }
    return out;
}

DenseOperator DenseOperator::operator+(const DenseOperator &rhs) const {
    check_lengths(dim_, rhs.dim_, "matrix sum");
    DenseOperator out = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += rhs.data_[k];
    return out;
}

DenseOperator DenseOperator::operator-(const DenseOperator &rhs) const {
    check_lengths(dim_, rhs.dim_, "matrix difference");
    DenseOperator out = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] -= rhs.data_[k];
    return out;
}

DenseOperator DenseOperator::operator*(Complex s) const {
    DenseOperator out = *this;
    for (auto &x : out.data_) x *= s;
    return out;
}

DenseOperator DenseOperator::scale_rows(std::span<const Complex> d) const {
    check_lengths(dim_, d.size(), "row scaling");
    DenseOperator out = *this;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) out(r, c) *= d[r];
    }
    return out;
}

DenseOperator DenseOperator::scale_cols(std::span<const Complex> d) const {
    check_lengths(dim_, d.size(), "column scaling");
    DenseOperator out = *this;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) out(r, c) *= d[c];
    }
    return out;
}

std::vector<Complex> DenseOperator::apply(std::span<const Complex> x) const {
    check_lengths(dim_, x.size(), "matrix-vector product");
    std::vector<Complex> out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        Complex acc{0.0, 0.0};
        for (std::size_t c = 0; c < dim_; ++c) acc += (*this)(r, c) * x[c];
        out[r] = acc;
    }
    return out;
}

StateVector DenseOperator::apply(const StateVector &x) const {
    return make_state_unchecked(apply(x.amplitudes()));
}

double DenseOperator::unitarity_error() const {
    double worst = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            // (U^dagger U)_{rc} = sum_k conj(U_kr) U_kc
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < dim_; ++k) {
                acc += std::conj((*this)(k, r)) * (*this)(k, c);
            }
            if (r == c) acc -= 1.0;
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

double DenseOperator::max_abs_diff(const DenseOperator &other) const {
    check_lengths(dim_, other.dim_, "matrix comparison");
    double worst = 0.0;
    for (std::size_t k = 0; k < data_.size(); ++k) {
        worst = std::max(worst, std::abs(data_[k] - other.data_[k]));
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Operations

StateVector uniform_state(std::size_t n_states) {
    const int m = levels_for_states(n_states);
    const double a = std::ldexp(1.0, -m);
    return make_state_unchecked(std::vector<Complex>(n_states, Complex{a, 0.0}));
}

OracleMask oracle_mask(const ProblemInstance &instance, double threshold) {
    std::vector<std::uint8_t> bits(instance.n_states());
    const auto costs = instance.costs();
    for (std::size_t j = 0; j < bits.size(); ++j) {
        bits[j] = costs[j] <= threshold ? 1 : 0;
    }
    return OracleMask(std::move(bits));
}

Complex masked_pairwise_sum(std::span<const Complex> amps, const OracleMask &mask,
                            const OracleMask *good, double good_sign) {
    check_lengths(amps.size(), mask.size(), "masked sum");
    if (good != nullptr) check_lengths(amps.size(), good->size(), "masked sum");
    return pairwise(amps, mask.bits(), good != nullptr ? good->bits().data() : nullptr,
                    good_sign, 0, amps.size());
}

StateVector apply_phase_oracle(const StateVector &state, const OracleMask &mask,
                               double phase) {
    check_lengths(state.size(), mask.size(), "phase oracle");
    const Complex factor = phase == kPi ? Complex{-1.0, 0.0}
                                        : std::polar(1.0, phase);
    std::vector<Complex> out(state.amplitudes().begin(), state.amplitudes().end());
    if (phase == 0.0) return make_state_unchecked(std::move(out));
    for (std::size_t j = 0; j < out.size(); ++j) {
        if (mask.contains(j)) out[j] *= factor;
    }
    return make_state_unchecked(std::move(out));
}

StateVector apply_step_unitary(const StateVector &state,
                               const OracleMask &prev_mask,
                               const OracleMask &good_mask) {
    check_lengths(state.size(), prev_mask.size(), "step unitary");
    check_lengths(state.size(), good_mask.size(), "step unitary");
    if (prev_mask.cardinality() == 0) {
        throw DomainError("step unitary needs a non-empty previous mask");
    }
    if (!good_mask.is_subset_of(prev_mask)) {
        throw NestingError("good mask is not contained in previous mask");
    }
    const auto a = state.amplitudes();
    const Complex sum = masked_pairwise_sum(a, prev_mask, &good_mask, -1.0);
    const Complex mean2 = sum * (2.0 / static_cast<double>(prev_mask.cardinality()));

    std::vector<Complex> out(a.begin(), a.end());
    for (std::size_t j = 0; j < out.size(); ++j) {
        if (!prev_mask.contains(j)) continue;
        out[j] = good_mask.contains(j) ? mean2 + a[j] : mean2 - a[j];
    }
    return make_state_unchecked(std::move(out));
}

StateVector apply_grover_iterate(const StateVector &state, const OracleMask &mask) {
    return apply_step_unitary(state, OracleMask::all(state.size()), mask);
}

DenseOperator dense_step_unitary(const OracleMask &prev_mask,
                                 const OracleMask &good_mask,
                                 std::size_t n_states) {
    check_dense_size(n_states);
    check_lengths(n_states, prev_mask.size(), "dense step unitary");
    check_lengths(n_states, good_mask.size(), "dense step unitary");
    if (prev_mask.cardinality() == 0) {
        throw DomainError("step unitary needs a non-empty previous mask");
    }
    if (!good_mask.is_subset_of(prev_mask)) {
        throw NestingError("good mask is not contained in previous mask");
    }
    std::vector<Complex> f_prev(n_states), phase(n_states), complement(n_states);
    for (std::size_t j = 0; j < n_states; ++j) {
        f_prev[j] = prev_mask.contains(j) ? 1.0 : 0.0;
        complement[j] = 1.0 - f_prev[j];
        phase[j] = good_mask.contains(j) ? -1.0 : 1.0;
    }
    const auto identity = DenseOperator::identity(n_states);
    // P_prev = f_prev P f_prev
    const auto p_prev = DenseOperator::ones(n_states).scale_rows(f_prev).scale_cols(f_prev);
    // D = (2 / T_prev) P_prev - 1
    const auto d = p_prev * Complex{2.0 / static_cast<double>(prev_mask.cardinality()), 0.0} -
                   identity;
    // f_prev D R f_prev + (1 - f_prev)
    return d.scale_cols(phase).scale_rows(f_prev).scale_cols(f_prev) +
           DenseOperator::diagonal(complement);
}

DenseOperator dense_grover_iterate(const OracleMask &mask, std::size_t n_states) {
    check_dense_size(n_states);
    check_lengths(n_states, mask.size(), "dense Grover iterate");
    std::vector<Complex> phase(n_states);
    for (std::size_t j = 0; j < n_states; ++j) {
        phase[j] = mask.contains(j) ? -1.0 : 1.0;
    }
    const auto diffusion =
        DenseOperator::ones(n_states) * Complex{2.0 / static_cast<double>(n_states), 0.0} -
        DenseOperator::identity(n_states);
    return diffusion.scale_cols(phase);
}

}  // namespace dosearch
