#include "agqc/linalg.hpp"

#include <stdexcept>

namespace agqc {

Rref rref(Matrix a) {
    const FieldCtx& F = *a.ctx();
    Rref out;
    std::vector<int> pivots;
    int pr = 0;
    for (int c = 0; c < a.cols() && pr < a.rows(); ++c) {
        int sel = -1;
        for (int r = pr; r < a.rows(); ++r)
            if (a.at(r, c) != 0) { sel = r; break; }
        if (sel < 0) continue;
        if (sel != pr)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(pr, j));
        std::uint32_t inv = F.inv(a.at(pr, c));
        for (int j = c; j < a.cols(); ++j) a.at(pr, j) = F.mul(a.at(pr, j), inv);
        for (int r = 0; r < a.rows(); ++r) {
            if (r == pr || a.at(r, c) == 0) continue;
            std::uint32_t f = a.at(r, c);
            for (int j = c; j < a.cols(); ++j)
                a.at(r, j) = F.sub(a.at(r, j), F.mul(f, a.at(pr, j)));
        }
        pivots.push_back(c);
        ++pr;
    }
    out.mat = std::move(a);
    out.pivots = std::move(pivots);
    return out;
}

int rank(Matrix a) { return static_cast<int>(rref(std::move(a)).pivots.size()); }

Matrix nullspace(const Matrix& a) {
    const FieldCtx& F = *a.ctx();
    Rref r = rref(a);
    int n = a.cols();
    int k = static_cast<int>(r.pivots.size());
    std::vector<bool> is_pivot(n, false);
    for (int c : r.pivots) is_pivot[c] = true;
    Matrix out(a.ctx(), n - k, n);
    int row = 0;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        out.at(row, c) = 1;
        for (int i = 0; i < k; ++i)
            out.at(row, r.pivots[i]) = F.neg(r.mat.at(i, c));
        ++row;
    }
    return out;
}

Matrix mat_mul_transposed(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("dimension mismatch");
    const FieldCtx& F = *a.ctx();
    Matrix out(a.ctx(), a.rows(), b.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.rows(); ++j) {
            std::uint32_t s = 0;
            for (int c = 0; c < a.cols(); ++c) s = F.add(s, F.mul(a.at(i, c), b.at(j, c)));
            out.at(i, j) = s;
        }
    return out;
}

bool in_row_space(const Rref& r, std::vector<std::uint32_t> v) {
    const FieldCtx& F = *r.mat.ctx();
    for (size_t i = 0; i < r.pivots.size(); ++i) {
        std::uint32_t f = v[r.pivots[i]];
        if (f == 0) continue;
        for (int j = 0; j < r.mat.cols(); ++j) v[j] = F.sub(v[j], F.mul(f, r.mat.at(i, j)));
    }
    for (std::uint32_t x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace agqc
