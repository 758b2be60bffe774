#include "detsum/matrix.hpp"

#include <utility>

#include "detsum/errors.hpp"

namespace detsum {

Matrix::Matrix(int rows, int cols, const ExactScalar& fill)
    : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
    entries_.assign(static_cast<std::size_t>(rows) * cols, fill);
}

ExactScalar& Matrix::at(int r, int c) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw IndexOutOfRange("matrix index (" + std::to_string(r) + "," +
                              std::to_string(c) + ")");
    return entries_[static_cast<std::size_t>(r) * cols_ + c];
}

const ExactScalar& Matrix::at(int r, int c) const {
    return const_cast<Matrix*>(this)->at(r, c);
}

std::string Matrix::str() const {
    std::string s;
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            if (c) s += '\t';
            s += at(r, c).str();
        }
        s += '\n';
    }
    return s;
}

ExactScalar determinant(const Matrix& m) {
    if (m.rows() != m.cols())
        throw NotSquare("determinant of " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()) + " matrix");
    const int n = m.rows();
    if (n == 0) return ExactScalar::integer(1);

    Matrix a = m;
    ExactScalar det = a.at(0, 0).one();
    bool negate = false;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!a.at(r, col).is_zero()) { pivot = r; break; }
        if (pivot < 0) return a.at(0, 0).zero();
        if (pivot != col) {
            for (int c = col; c < n; ++c) std::swap(a.at(pivot, c), a.at(col, c));
            negate = !negate;
        }
        const ExactScalar& p = a.at(col, col);
        det *= p;
        for (int r = col + 1; r < n; ++r) {
            if (a.at(r, col).is_zero()) continue;
            ExactScalar factor = a.at(r, col) / p;
            for (int c = col + 1; c < n; ++c)
                a.at(r, c) -= factor * a.at(col, c);
            a.at(r, col) = p.zero();
        }
    }
    return negate ? -det : det;
}

} // namespace detsum
