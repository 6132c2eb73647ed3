#pragma once

#include <cstdint>
#include <vector>

#include "agqc/gf.hpp"

namespace agqc {

/// Dense row-major matrix of packed field elements.
class Matrix {
public:
    Matrix() = default;
    Matrix(const FieldCtx* ctx, int rows, int cols)
        : ctx_(ctx), rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0) {}

    const FieldCtx* ctx() const { return ctx_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::uint32_t& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    std::uint32_t at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
    std::vector<std::uint32_t> row(int r) const {
        return {data_.begin() + static_cast<size_t>(r) * cols_,
                data_.begin() + static_cast<size_t>(r + 1) * cols_};
    }

private:
    const FieldCtx* ctx_ = nullptr;
    int rows_ = 0, cols_ = 0;
    std::vector<std::uint32_t> data_;
};

int rank(Matrix a);

/// Reduced row echelon form plus pivot columns.
struct Rref {
    Matrix mat;
    std::vector<int> pivots;
};
Rref rref(Matrix a);

/// Basis of the right null space of a, as rows; rank(result) = cols - rank(a).
Matrix nullspace(const Matrix& a);

Matrix mat_mul_transposed(const Matrix& a, const Matrix& b);  // a * b^T

/// True iff v lies in the row space described by an RREF.
bool in_row_space(const Rref& r, std::vector<std::uint32_t> v);

}  // namespace agqc
