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
 * Triangular (Reck-style) factorization of a unitary into two-level
 * unitaries followed by a diagonal of phases:
 *
 *     U = F_1 F_2 ... F_k diag(d_1, ..., d_n)
 *
 * Elimination runs column by column from the last column, nulling entries
 * upward with rotations on rows (r, col), so the factor list is deterministic.
 */

#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "dosearch/engine.h"

namespace dosearch {

inline constexpr double kDefaultDecomposeTol = 1e-10;

/// Identity except for the 2x2 block on rows/columns (p, q), p < q.
/// block = {U_pp, U_pq, U_qp, U_qq}.
struct TwoLevelFactor {
    std::size_t p = 0;
    std::size_t q = 0;
    std::array<Complex, 4> block{};

    /// max |B^dagger B - I| over the 2x2 block.
    double unitarity_error() const;
    TwoLevelFactor adjoint() const;
    DenseOperator embed(std::size_t dim) const;
};

struct Factorization {
    std::vector<TwoLevelFactor> factors;
    std::vector<Complex> diagonal;

    std::size_t dim() const { return diagonal.size(); }
};

Factorization reck_factorize(const DenseOperator &op,
                             double tol = kDefaultDecomposeTol);

/// F_1 ... F_k diag(d), multiplying factors into rows in O(k n).
DenseOperator reconstruct(const Factorization &factorization, std::size_t dim);

}  // namespace dosearch
