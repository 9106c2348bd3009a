#include "hmf/linalg.hpp"

#include <cstddef>
#include <stdexcept>

namespace hmf {

namespace {

size_t bits(const Int& v) { return msb(abs(v) + 1); }

size_t rat_bits(const Rat& r) { return bits(numerator(r)) + bits(denominator(r)); }

size_t elem_bits(const QuadElem& e) { return rat_bits(e.x) + rat_bits(e.y); }

}  // namespace

SolveResult solve_linear(QMat A, QVec b) {
    const size_t rows = A.size();
    const size_t cols = rows ? A[0].size() : 0;
    for (const auto& row : A)
        if (row.size() != cols) throw std::invalid_argument("solve_linear: ragged matrix");
    if (b.size() != rows) throw std::invalid_argument("solve_linear: size mismatch");

    QMat A0 = A;
    QVec b0 = b;

    std::vector<int> pivot_col_of_row;  // elimination record
    std::vector<bool> col_used(cols, false);
    size_t r = 0;

    while (r < rows) {
        // full pivoting, preferring the nonzero entry of smallest bit-size
        size_t best_i = rows, best_j = cols;
        size_t best_sz = 0;
        for (size_t i = r; i < rows; ++i) {
            for (size_t j = 0; j < cols; ++j) {
                if (col_used[j] || A[i][j].is_zero()) continue;
                size_t sz = elem_bits(A[i][j]);
                if (best_i == rows || sz < best_sz) {
                    best_i = i; best_j = j; best_sz = sz;
                }
            }
        }
        if (best_i == rows) break;  // remaining rows are all zero (in unused cols)

        std::swap(A[r], A[best_i]);
        std::swap(b[r], b[best_i]);
        col_used[best_j] = true;
        pivot_col_of_row.push_back(static_cast<int>(best_j));

        QuadElem inv = A[r][best_j].inverse();
        for (size_t j = 0; j < cols; ++j) A[r][j] *= inv;
        b[r] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][best_j].is_zero()) continue;
            QuadElem f = A[i][best_j];
            for (size_t j = 0; j < cols; ++j) A[i][j] -= f * A[r][j];
            b[i] -= f * b[r];
        }
        ++r;
    }

    SolveResult res;
    // rows r..end have zero coefficients; nonzero rhs there means inconsistent
    for (size_t i = r; i < rows; ++i) {
        bool all_zero = true;
        for (size_t j = 0; j < cols; ++j)
            if (!A[i][j].is_zero()) { all_zero = false; break; }
        if (all_zero && !b[i].is_zero()) {
            res.status = SolveStatus::Inconsistent;
            return res;
        }
    }

    res.solution.assign(cols, QuadElem());
    for (size_t i = 0; i < r; ++i) {
        int pc = pivot_col_of_row[i];
        // back-substitute free variables as zero
        QuadElem val = b[i];
        for (size_t j = 0; j < cols; ++j)
            if (static_cast<int>(j) != pc && !A[i][j].is_zero())
                val -= A[i][j] * res.solution[j];
        res.solution[pc] = val;
    }
    for (size_t j = 0; j < cols; ++j)
        if (!col_used[j]) res.free_cols.push_back(static_cast<int>(j));

    res.status = res.free_cols.empty() ? SolveStatus::Unique : SolveStatus::Underdetermined;

    // exact re-verification against the untouched system
    for (size_t i = 0; i < rows; ++i) {
        QuadElem acc;
        for (size_t j = 0; j < cols; ++j) acc += A0[i][j] * res.solution[j];
        if (acc != b0[i]) {
            res.status = SolveStatus::Inconsistent;
            return res;
        }
    }
    return res;
}

}  // namespace hmf
