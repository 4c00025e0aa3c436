#pragma once

#include "qwmix/spectral.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <utility>
#include <vector>

namespace qwmix {

/// [F_p]_{jk} = omega^{(j-k)^2}, omega = exp(2 pi i / p).
Eigen::MatrixXcd fourier_type(int p);

/// Spectral decomposition of C_n from its circulant frequency vectors: E_0 = J/n and
/// E_r[j][k] = (2/n) cos(2 pi r (j - k) / n) for the merged pair +-r (r = n/2 has trace 1).
/// Ordered by frequency r = 0, 1, ..., floor(n/2), so thetas are decreasing.
SpectralDecomposition cycle_decomposition(int n);

struct DualFourier {
    int p = 0;
    Eigen::MatrixXcd matrix;  ///< sqrt(p) sum_r omega^{r^2} E_r
};

DualFourier dual_fourier(int p);

struct ExponentTarget {
    double achieved = 0.0;  ///< frac(alpha (theta_r - 2) / p)
    double target = 0.0;    ///< frac(r^2 / p)
};

/// Distance between two points of R/Z.
double circle_distance(double a, double b);

/// Pairs for r = 1 .. (p - 1) / 2.
std::vector<ExponentTarget> exponent_targets(int p, long long alpha);

/// Max circle distance between achieved and target exponents.
double exponent_distance(int p, long long alpha);

/// 24 | p^2 - 1 and, exactly in R/Z, -(1/p) sum_{r<d} r^2 = d^2 / p.
bool last_coordinate_identity(int p);

struct EpsTracePoint {
    long long bound = 0;
    long long best_alpha = 0;
    double best_distance = 0.0;
    double best_flatness = 0.0;
};

struct EpsSearchResult {
    int p = 0;
    long long alpha_max = 0;
    long long best_alpha = 0;
    double best_target_distance = 0.0;
    double best_flatness = 0.0;
    std::vector<EpsTracePoint> trace;  ///< at bounds 10, 100, ... <= alpha_max, then alpha_max
};

/// |exp(-2it) sqrt(p) U_{C_p}(t) - dual_fourier(p)|_max at t = 2 pi alpha / p.
double target_distance(int p, long long alpha);

/// Exhaustive search over alpha = 1 .. alpha_max; ties keep the smaller alpha.
EpsSearchResult eps_search(int p, long long alpha_max);

} // namespace qwmix
