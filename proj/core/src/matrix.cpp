#include "sinkopt/matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>

#include "sinkopt/errors.hpp"

namespace sinkopt {

SolveStats solve_linear_system(Matrix& a, std::vector<double>& b) {
    const int n = a.rows();
    if (n != a.cols() || static_cast<std::size_t>(n) != b.size())
        fail(errc::invalid_argument, "solve_linear_system: shape mismatch");

    double max_pivot = 0.0;
    double min_pivot = 0.0;
    bool first = true;

    for (int k = 0; k < n; ++k) {
        int best = k;
        double best_mag = std::abs(a.at(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double mag = std::abs(a.at(i, k));
            if (mag > best_mag) { best = i; best_mag = mag; }
        }
        if (best_mag == 0.0 || !std::isfinite(best_mag))
            fail(errc::solver_failure,
                 "singular or non-finite pivot at column " + std::to_string(k));
        if (best != k) {
            double* rk = a.row(k);
            double* rb = a.row(best);
            for (int j = k; j < n; ++j) std::swap(rk[j], rb[j]);
            std::swap(b[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(best)]);
        }

        if (first) { max_pivot = min_pivot = best_mag; first = false; }
        else {
            if (best_mag > max_pivot) max_pivot = best_mag;
            if (best_mag < min_pivot) min_pivot = best_mag;
        }

        const double pivot = a.at(k, k);
        const double* rk = a.row(k);
        for (int i = k + 1; i < n; ++i) {
            double* ri = a.row(i);
            const double factor = ri[k] / pivot;
            if (factor == 0.0) continue;
            ri[k] = 0.0;
            for (int j = k + 1; j < n; ++j) ri[j] -= factor * rk[j];
            b[static_cast<std::size_t>(i)] -= factor * b[static_cast<std::size_t>(k)];
        }
    }

    for (int k = n - 1; k >= 0; --k) {
        double acc = b[static_cast<std::size_t>(k)];
        const double* rk = a.row(k);
        for (int j = k + 1; j < n; ++j) acc -= rk[j] * b[static_cast<std::size_t>(j)];
        const double xk = acc / a.at(k, k);
        if (!std::isfinite(xk))
            fail(errc::solver_failure,
                 "non-finite solution component " + std::to_string(k) +
                 " (pivot ratio " + std::to_string(min_pivot > 0.0 ? max_pivot / min_pivot : 0.0) + ")");
        b[static_cast<std::size_t>(k)] = xk;
    }

    SolveStats stats;
    stats.pivot_ratio = (n == 0 || min_pivot == 0.0) ? 1.0 : max_pivot / min_pivot;
    return stats;
}

void multiply(const Matrix& m, const std::vector<double>& x, std::vector<double>& y) {
    const int n = m.rows();
    y.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        const double* row = m.row(i);
        double acc = 0.0;
        for (int j = 0; j < n; ++j) acc += row[j] * x[static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(i)] = acc;
    }
}

} // namespace sinkopt
