/*
 * Copyright 2026 The tracecode authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef TRACECODE_MATRIX_HPP
#define TRACECODE_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tracecode/field.hpp"

namespace tracecode {

// Dense matrix over a single FieldCtx, entries stored as raw element codes
// in row-major order.  Value type: copies are deep and independent.
class Matrix {
public:
    Matrix() = default;
    // Zero matrix of the given shape (rows * cols may be zero).
    Matrix(FieldCtxPtr ctx, std::size_t rows, std::size_t cols);

    const FieldCtxPtr& ctx() const { return ctx_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, std::uint32_t code);
    // Raw row access for hot loops; the span is cols() entries long.
    const std::uint32_t* row(std::size_t r) const;
    std::uint32_t* row(std::size_t r);

    // Appends a row (must have exactly cols() entries; a row appended to a
    // 0x0 matrix fixes the column count).
    void append_row(const std::vector<std::uint32_t>& entries);

    // Matrix product (throws std::invalid_argument on ctx/shape mismatch).
    Matrix multiplied_by(const Matrix& rhs) const;

    // In-place reduction to reduced row echelon form; returns the rank.
    // Deterministic: pivots are chosen as the first nonzero entry in
    // column-major sweep order.
    std::size_t rref_in_place();
    // Rank of a copy (this object is untouched).
    std::size_t rank() const;

    // Basis of the right kernel {v : A v = 0}, one kernel vector per row of
    // the result, derived from the RREF free columns in ascending column
    // order.  Deterministic for a given matrix.
    Matrix kernel_basis() const;

private:
    FieldCtxPtr ctx_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::uint32_t> data_;
};

// Result bundle of solve_linear.
struct LinearSolution {
    std::size_t rank = 0;
    Matrix rref;            // RREF of the coefficient matrix
    Matrix kernel;          // right-kernel basis (rows)
    // Present iff a right-hand side was supplied and the system A x = rhs
    // is consistent; one particular solution (free variables set to zero).
    std::optional<std::vector<std::uint32_t>> solution;
};

// Solves A x = rhs (or just analyses A when rhs is absent).  rhs, when
// present, must have A.rows() entries.  Throws std::invalid_argument on
// shape mismatch.
LinearSolution solve_linear(const Matrix& a,
                            const std::optional<std::vector<std::uint32_t>>& rhs);

}  // namespace tracecode

#endif  // TRACECODE_MATRIX_HPP
