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

#include "dosearch/decompose.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "dosearch/error.h"

namespace dosearch {

double TwoLevelFactor::unitarity_error() const {
    const auto &[a, b, c, d] = block;
    const Complex g00 = std::conj(a) * a + std::conj(c) * c - 1.0;
    const Complex g01 = std::conj(a) * b + std::conj(c) * d;
    const Complex g11 = std::conj(b) * b + std::conj(d) * d - 1.0;
    return std::max({std::abs(g00), std::abs(g01), std::abs(g11)});
}

TwoLevelFactor TwoLevelFactor::adjoint() const {
    const auto &[a, b, c, d] = block;
    return TwoLevelFactor{p, q, {std::conj(a), std::conj(c), std::conj(b), std::conj(d)}};
}

DenseOperator TwoLevelFactor::embed(std::size_t dim) const {
    auto out = DenseOperator::identity(dim);
    out(p, p) = block[0];
    out(p, q) = block[1];
    out(q, p) = block[2];
    out(q, q) = block[3];
    return out;
}

namespace {

// Left-multiplies rows p and q of m by the 2x2 block.
void rotate_rows(DenseOperator &m, const TwoLevelFactor &f) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
        const Complex x = m(f.p, c);
        const Complex y = m(f.q, c);
        m(f.p, c) = f.block[0] * x + f.block[1] * y;
        m(f.q, c) = f.block[2] * x + f.block[3] * y;
    }
}

}  // namespace

Factorization reck_factorize(const DenseOperator &op, double tol) {
    const std::size_t n = op.dim();
    if (n == 0) {
        throw ValidationError("cannot factorize an empty operator");
    }
    const double err = op.unitarity_error();
    if (!(err <= tol)) {
        throw ValidationError("operator is not unitary: max |U^dagger U - I| = " +
                              std::to_string(err));
    }

    DenseOperator work = op;
    std::vector<TwoLevelFactor> eliminators;
    for (std::size_t col = n; col-- > 1;) {
        for (std::size_t row = col; row-- > 0;) {
            const Complex a = work(row, col);
            if (a == Complex{0.0, 0.0}) continue;
            const Complex b = work(col, col);
            const double rho = std::hypot(std::abs(a), std::abs(b));
            // [b, -a; conj(a), conj(b)] / rho sends (a, b) to (0, rho).
            TwoLevelFactor g{row, col, {b / rho, -a / rho, std::conj(a) / rho,
                                        std::conj(b) / rho}};
            rotate_rows(work, g);
            work(row, col) = 0.0;
            eliminators.push_back(g);
        }
    }

    // work = G_k ... G_1 U is diagonal, so U = G_1^dagger ... G_k^dagger work.
    Factorization out;
    out.factors.reserve(eliminators.size());
    for (const auto &g : eliminators) out.factors.push_back(g.adjoint());
    out.diagonal.resize(n);
    for (std::size_t j = 0; j < n; ++j) out.diagonal[j] = work(j, j);
    return out;
}

DenseOperator reconstruct(const Factorization &factorization, std::size_t dim) {
    if (factorization.diagonal.size() != dim) {
        throw ValidationError("diagonal length " +
                              std::to_string(factorization.diagonal.size()) +
                              " does not match dim " + std::to_string(dim));
    }
    for (const auto &f : factorization.factors) {
        if (f.p >= dim || f.q >= dim || f.p == f.q) {
            throw ValidationError("factor indices (" + std::to_string(f.p) + ", " +
                                  std::to_string(f.q) + ") out of range for dim " +
                                  std::to_string(dim));
        }
    }
    // Apply from the right end inward: start with diag, left-multiply F_k .. F_1.
    DenseOperator out = DenseOperator::diagonal(factorization.diagonal);
    for (auto it = factorization.factors.rbegin(); it != factorization.factors.rend();
         ++it) {
        rotate_rows(out, *it);
    }
    return out;
}

}  // namespace dosearch
