#pragma once

// Exact Gaussian elimination over K = Q(sqrt5), for the linear systems that
// back series division, square roots and isobaric decompositions.

#include "hmf/quadfield.hpp"

#include <vector>

namespace hmf {

using QVec = std::vector<QuadElem>;
using QMat = std::vector<QVec>;  // row major, rectangular

enum class SolveStatus { Unique, Underdetermined, Inconsistent };

struct SolveResult {
    SolveStatus status = SolveStatus::Inconsistent;
    QVec solution;               // a particular solution when status != Inconsistent
    std::vector<int> free_cols;  // indices of free variables (set to 0 in solution)
};

// Solves A x = b exactly.  Pivot choice prefers entries of small bit-size to
// limit coefficient growth.  The returned solution is re-verified against
// A x = b before returning.
SolveResult solve_linear(QMat A, QVec b);

}  // namespace hmf
