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

#include "tracecode/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace tracecode {

Matrix::Matrix(FieldCtxPtr ctx, std::size_t rows, std::size_t cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (!ctx_) throw std::invalid_argument("Matrix: null field context");
}

std::uint32_t Matrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::invalid_argument("Matrix: index out of range");
    return data_[r * cols_ + c];
}

void Matrix::set(std::size_t r, std::size_t c, std::uint32_t code) {
    if (r >= rows_ || c >= cols_) throw std::invalid_argument("Matrix: index out of range");
    if (code >= ctx_->order()) throw std::invalid_argument("Matrix: code out of range");
    data_[r * cols_ + c] = code;
}

const std::uint32_t* Matrix::row(std::size_t r) const {
    if (r >= rows_) throw std::invalid_argument("Matrix: row out of range");
    return data_.data() + r * cols_;
}

std::uint32_t* Matrix::row(std::size_t r) {
    if (r >= rows_) throw std::invalid_argument("Matrix: row out of range");
    return data_.data() + r * cols_;
}

void Matrix::append_row(const std::vector<std::uint32_t>& entries) {
    if (!ctx_) throw std::invalid_argument("Matrix: null field context");
    if (rows_ == 0 && cols_ == 0) {
        cols_ = entries.size();
    }
    if (entries.size() != cols_) {
        throw std::invalid_argument("Matrix: row width mismatch");
    }
    for (std::uint32_t v : entries) {
        if (v >= ctx_->order()) throw std::invalid_argument("Matrix: code out of range");
    }
    data_.insert(data_.end(), entries.begin(), entries.end());
    ++rows_;
}

Matrix Matrix::multiplied_by(const Matrix& rhs) const {
    if (!ctx_ || !rhs.ctx_ || ctx_->ctx_id() != rhs.ctx_->ctx_id()) {
        throw std::invalid_argument("Matrix: mixed field contexts");
    }
    if (cols_ != rhs.rows_) throw std::invalid_argument("Matrix: shape mismatch");
    const FieldCtx& f = *ctx_;
    Matrix out(ctx_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        const std::uint32_t* a = row(i);
        std::uint32_t* o = out.row(i);
        for (std::size_t k = 0; k < cols_; ++k) {
            const std::uint32_t aik = a[k];
            if (aik == 0) continue;
            const std::uint32_t* b = rhs.row(k);
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                if (b[j] != 0) o[j] = f.add(o[j], f.mul(aik, b[j]));
            }
        }
    }
    return out;
}

std::size_t Matrix::rref_in_place() {
    if (!ctx_) return 0;
    const FieldCtx& f = *ctx_;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
        // First nonzero entry at or below pivot_row in this column.
        std::size_t sel = pivot_row;
        while (sel < rows_ && data_[sel * cols_ + col] == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != pivot_row) {
            std::swap_ranges(data_.begin() + sel * cols_,
                             data_.begin() + (sel + 1) * cols_,
                             data_.begin() + pivot_row * cols_);
        }
        // Normalize the pivot to 1.
        std::uint32_t* pr = row(pivot_row);
        const std::uint32_t inv = f.inv(pr[col]);
        for (std::size_t j = col; j < cols_; ++j) {
            if (pr[j] != 0) pr[j] = f.mul(pr[j], inv);
        }
        // Eliminate the column everywhere else.
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == pivot_row) continue;
            std::uint32_t* ri = row(i);
            const std::uint32_t factor = ri[col];
            if (factor == 0) continue;
            for (std::size_t j = col; j < cols_; ++j) {
                if (pr[j] != 0) ri[j] = f.sub(ri[j], f.mul(factor, pr[j]));
            }
        }
        ++pivot_row;
    }
    return pivot_row;
}

std::size_t Matrix::rank() const {
    Matrix copy = *this;
    return copy.rref_in_place();
}

Matrix Matrix::kernel_basis() const {
    if (!ctx_) throw std::invalid_argument("Matrix: null field context");
    Matrix r = *this;
    const std::size_t rank = r.rref_in_place();
    const FieldCtx& f = *ctx_;

    // Pivot column of each of the first `rank` rows.
    std::vector<std::size_t> pivot_col(rank);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t i = 0; i < rank; ++i) {
        std::size_t c = 0;
        while (c < cols_ && r.data_[i * cols_ + c] == 0) ++c;
        pivot_col[i] = c;
        is_pivot[c] = true;
    }

    Matrix out(ctx_, 0, 0);
    out.cols_ = cols_;
    for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<std::uint32_t> v(cols_, 0);
        v[free_col] = 1;
        for (std::size_t i = 0; i < rank; ++i) {
            // Pivot variable = -(entry in the free column).
            v[pivot_col[i]] = f.neg(r.data_[i * cols_ + free_col]);
        }
        out.append_row(v);
    }
    return out;
}

LinearSolution solve_linear(const Matrix& a,
                            const std::optional<std::vector<std::uint32_t>>& rhs) {
    if (!a.ctx()) throw std::invalid_argument("solve_linear: null field context");
    LinearSolution out;
    out.kernel = a.kernel_basis();

    if (!rhs.has_value()) {
        out.rref = a;
        out.rank = out.rref.rref_in_place();
        return out;
    }
    if (rhs->size() != a.rows()) {
        throw std::invalid_argument("solve_linear: rhs length mismatch");
    }
    // Augment, reduce, and read off consistency + a particular solution.
    const FieldCtx& f = *a.ctx();
    Matrix aug(a.ctx(), a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.set(i, j, a.at(i, j));
        aug.set(i, a.cols(), (*rhs)[i]);
    }
    aug.rref_in_place();

    out.rref = a;
    out.rank = out.rref.rref_in_place();

    bool consistent = true;
    std::vector<std::uint32_t> x(a.cols(), 0);
    for (std::size_t i = 0; i < aug.rows(); ++i) {
        std::size_t c = 0;
        while (c < aug.cols() && aug.at(i, c) == 0) ++c;
        if (c == aug.cols()) continue;       // zero row
        if (c == a.cols()) {                 // 0 = nonzero
            consistent = false;
            break;
        }
        x[c] = aug.at(i, a.cols());          // free vars stay 0
    }
    (void)f;
    if (consistent) out.solution = std::move(x);
    return out;
}

}  // namespace tracecode
