#pragma once

#include <cstddef>
#include <vector>

namespace sinkopt {

// Minimal dense row-major matrix. Everything this project solves is a dense
// (N-|A|)^2 system, so no sparse machinery.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0.0) {}

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    double& at(int r, int c) {
        return data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c)];
    }
    double at(int r, int c) const {
        return data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c)];
    }

    const double* row(int r) const {
        return data_.data() + static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_);
    }
    double* row(int r) {
        return data_.data() + static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_);
    }

    std::vector<double>& data() noexcept { return data_; }
    const std::vector<double>& data() const noexcept { return data_; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

struct SolveStats {
    // max |pivot| / min |pivot| across elimination; crude conditioning probe.
    double pivot_ratio = 1.0;
};

// Solves A x = b in place by Gaussian elimination with partial pivoting.
// A is destroyed; b holds the solution on return. Throws Error(solver_failure)
// on a zero pivot or non-finite result.
SolveStats solve_linear_system(Matrix& a, std::vector<double>& b);

// y = M x for row-major square M.
void multiply(const Matrix& m, const std::vector<double>& x, std::vector<double>& y);

} // namespace sinkopt
