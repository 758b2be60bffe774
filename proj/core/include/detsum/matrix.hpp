#pragma once

#include <string>
#include <vector>

#include "detsum/scalar.hpp"

namespace detsum {

/// Dense row-major matrix of exact scalars (uniform carrier).
class Matrix {
public:
    Matrix(int rows, int cols, const ExactScalar& fill);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    ExactScalar& at(int r, int c);
    const ExactScalar& at(int r, int c) const;

    /// One row per line, entries tab-separated; failure diagnostics only.
    std::string str() const;

private:
    int rows_;
    int cols_;
    std::vector<ExactScalar> entries_;
};

/// Exponent sequence for power determinants; repeats allowed (they force
/// a zero determinant), order significant (column order).
using ExponentSeq = std::vector<int>;

/// Exact determinant by division-based elimination with first-nonzero
/// pivoting. Both carriers are fields, so divisions are exact.
/// The 0x0 determinant is 1.
ExactScalar determinant(const Matrix& m);

} // namespace detsum
