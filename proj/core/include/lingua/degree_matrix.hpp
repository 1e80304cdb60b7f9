#pragma once

#include <cstddef>
#include <vector>

namespace lingua {

// Rectangular matrix of degrees in [0,1].
class DegreeMatrix {
public:
    DegreeMatrix(size_t rows, size_t cols);
    DegreeMatrix(size_t rows, size_t cols, std::vector<double> entries);

    static DegreeMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    double at(size_t i, size_t j) const;
    void set(size_t i, size_t j, double value);

    const std::vector<double>& entries() const { return entries_; }

private:
    size_t rows_;
    size_t cols_;
    std::vector<double> entries_;
};

bool operator==(const DegreeMatrix& a, const DegreeMatrix& b);
inline bool operator!=(const DegreeMatrix& a, const DegreeMatrix& b) { return !(a == b); }

// Matrix product with min for multiplication and max for addition:
// entry (i,j) = max over k of min(A[i,k], B[k,j]).
DegreeMatrix maxmin_compose(const DegreeMatrix& a, const DegreeMatrix& b);

} // namespace lingua
