#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <random>

namespace akad::detail {

// All randomness in the library flows through these helpers. std::mt19937_64
// is pinned by the standard; the distributions are hand-rolled so that
// sequences are identical across standard library implementations.

inline double uniform01(std::mt19937_64& gen) {
    // (0, 1]: never zero, safe for logarithms.
    return static_cast<double>((gen() >> 11) + 1) * 0x1.0p-53;
}

inline double uniform_sym(std::mt19937_64& gen) {
    return 2.0 * uniform01(gen) - 1.0;
}

inline double gaussian(std::mt19937_64& gen) {
    // Box-Muller, one value per draw pair.
    const double u1 = uniform01(gen);
    const double u2 = uniform01(gen);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

inline Eigen::VectorXd gaussian_vector(std::mt19937_64& gen, int n) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v(i) = gaussian(gen);
    return v;
}

inline Eigen::MatrixXd gaussian_matrix(std::mt19937_64& gen, int rows, int cols) {
    Eigen::MatrixXd m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = gaussian(gen);
    return m;
}

}  // namespace akad::detail
