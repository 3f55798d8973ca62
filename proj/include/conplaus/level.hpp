#pragma once

#include <cmath>
#include <stdexcept>

namespace conplaus {

/// Integer numerator of the finite-sample level correction:
/// floor((n+1) * alpha), clamped to [0, n+1].
inline int k_n_count(int n, double alpha) {
    if (n < 1) throw std::domain_error("k_n: n must be >= 1");
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::domain_error("k_n: alpha must lie in [0,1]");
    double m = std::floor((n + 1) * alpha);
    if (m < 0.0) m = 0.0;
    if (m > n + 1) m = n + 1;
    return static_cast<int>(m);
}

/// Finite-sample level correction floor((n+1)*alpha) / (n+1).
/// Always a multiple of 1/(n+1) and never above alpha.
inline double k_n(int n, double alpha) {
    return static_cast<double>(k_n_count(n, alpha)) / (n + 1);
}

}  // namespace conplaus
