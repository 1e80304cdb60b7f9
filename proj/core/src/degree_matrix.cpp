#include "lingua/degree_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "lingua/errors.hpp"

namespace lingua {

namespace {

void check_degree(double v, size_t i, size_t j) {
    if (!(v >= 0.0 && v <= 1.0)) {
        std::ostringstream msg;
        msg << "entry (" << i << ", " << j << ") = " << v << " outside [0, 1]";
        throw ValidationError(msg.str());
    }
}

} // namespace

DegreeMatrix::DegreeMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {
    if (rows == 0 || cols == 0)
        throw ValidationError("matrix dimensions must be positive");
}

DegreeMatrix::DegreeMatrix(size_t rows, size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0)
        throw ValidationError("matrix dimensions must be positive");
    if (entries_.size() != rows * cols) {
        std::ostringstream msg;
        msg << "expected " << rows * cols << " entries, got " << entries_.size();
        throw ValidationError(msg.str());
    }
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            check_degree(entries_[i * cols_ + j], i, j);
}

DegreeMatrix DegreeMatrix::identity(size_t n) {
    DegreeMatrix m(n, n);
    for (size_t i = 0; i < n; ++i)
        m.entries_[i * n + i] = 1.0;
    return m;
}

double DegreeMatrix::at(size_t i, size_t j) const {
    if (i >= rows_ || j >= cols_)
        throw LookupError("matrix index out of range");
    return entries_[i * cols_ + j];
}

void DegreeMatrix::set(size_t i, size_t j, double value) {
    if (i >= rows_ || j >= cols_)
        throw LookupError("matrix index out of range");
    check_degree(value, i, j);
    entries_[i * cols_ + j] = value;
}

bool operator==(const DegreeMatrix& a, const DegreeMatrix& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && a.entries() == b.entries();
}

DegreeMatrix maxmin_compose(const DegreeMatrix& a, const DegreeMatrix& b) {
    if (a.cols() != b.rows()) {
        std::ostringstream msg;
        msg << "cannot compose " << a.rows() << "x" << a.cols() << " with " << b.rows() << "x"
            << b.cols();
        throw DomainError(msg.str());
    }
    DegreeMatrix out(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < b.cols(); ++j) {
            double best = 0.0;
            for (size_t k = 0; k < a.cols(); ++k)
                best = std::max(best, std::min(a.at(i, k), b.at(k, j)));
            out.set(i, j, best);
        }
    return out;
}

} // namespace lingua
