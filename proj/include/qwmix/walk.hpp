#pragma once

#include "qwmix/graphs.hpp"
#include "qwmix/linalg.hpp"
#include "qwmix/spectral.hpp"
#include "qwmix/times.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qwmix {

struct TransitionMatrix {
    double t = 0.0;
    Eigen::MatrixXcd U;
};

/// U(t) = sum_k exp(i theta_k t) E_k.
TransitionMatrix transition(const SpectralDecomposition& dec, double t);

/// max_jk | |M_jk|^2 - 1/n |; zero iff M is flat with the modulus of a unitary.
template <typename Derived>
double flatness(const Eigen::MatrixBase<Derived>& m)
{
    const double target = 1.0 / static_cast<double>(m.rows());
    return (m.cwiseAbs2().array() - target).abs().maxCoeff();
}

inline double flatness(const TransitionMatrix& u) { return flatness(u.U); }

bool is_uniform_mixing_at(const Graph& g, double t, double tol);

/// |M M* - n I|_max <= tol * n and every |M_jk| within tol of 1.
template <typename Derived>
bool is_complex_hadamard(const Eigen::MatrixBase<Derived>& m, double tol)
{
    using Scalar = typename Derived::Scalar;
    const auto n = m.rows();
    if (n != m.cols() || n == 0) return false;
    const auto moduli = m.cwiseAbs().array();
    if ((moduli < 1.0 - tol).any() || (moduli > 1.0 + tol).any()) return false;
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> gram = m * m.adjoint();
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> scaled_identity =
        Scalar(static_cast<double>(n)) * Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Identity(n, n);
    return max_abs(gram - scaled_identity) <= tol * static_cast<double>(n);
}

/// Smallest m <= max_order such that every entry, rescaled to unit modulus, is
/// within tol of an m-th root of unity.
template <typename Derived>
std::optional<int> butson_order(const Eigen::MatrixBase<Derived>& m, double tol, int max_order)
{
    std::vector<double> phases;
    phases.reserve(static_cast<std::size_t>(m.size()));
    for (Eigen::Index j = 0; j < m.rows(); ++j) {
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            const Complex z(m(j, k));
            if (std::abs(z) < 1e-12) return std::nullopt;
            phases.push_back(std::arg(z));
        }
    }
    const double two_pi = 2.0 * std::numbers::pi;
    for (int order = 1; order <= max_order; ++order) {
        bool all = true;
        for (double phase : phases) {
            const double k = std::round(phase * order / two_pi);
            const double err = std::abs(std::polar(1.0, phase) - std::polar(1.0, two_pi * k / order));
            if (err > tol) {
                all = false;
                break;
            }
        }
        if (all) return order;
    }
    return std::nullopt;
}

/// |U_complement(t) - exp(-it) U_G(t)|_max at t = j * 2 pi / n; G must be regular.
double complement_time_check(const Graph& g, int j);

/// Flatness of U(t) without materialising U: stores the upper triangle of every
/// idempotent and evaluates |sum_k exp(i theta_k t) E_k|^2 entrywise.
class FlatnessEvaluator {
public:
    explicit FlatnessEvaluator(const SpectralDecomposition& dec);

    [[nodiscard]] double operator()(double t) const;
    [[nodiscard]] int n() const { return n_; }

private:
    int n_ = 0;
    Eigen::VectorXd thetas_;
    Eigen::MatrixXd packed_;  // (entries in upper triangle) x (idempotents)
    mutable Eigen::VectorXd cos_, sin_;
};

/// Every t = a pi / b with 1 <= b <= max_den and 0 <= a < 2 b n, deduplicated and sorted.
std::vector<Time> candidate_times(int n, int max_den = 72);

enum class Verdict { MixesAt, RuledOut, Unknown };
const char* to_string(Verdict v);

struct FlatnessSample {
    Time time;
    double flatness = 0.0;
};

struct ScanOptions {
    double tol = 1e-9;         ///< flatness at or below this counts as uniform mixing
    double grid_floor = 1e-2;  ///< grid minimum above this means "does not mix on the grid"
    int max_den = 72;
};

struct MixingReport {
    std::string label;
    Verdict verdict = Verdict::Unknown;
    std::vector<FlatnessSample> hits;     ///< witnesses, ascending in time
    std::vector<std::string> reasons;     ///< rule-out reasons supplied by the caller
    FlatnessSample best;                  ///< overall minimum over grid and candidates
    FlatnessSample grid_min;
    std::size_t grid_points = 0;
    std::size_t candidate_points = 0;

    [[nodiscard]] bool grid_clear(const ScanOptions& opts) const { return grid_min.flatness > opts.grid_floor; }
};

/// 0 : 2 pi : 1e-3.
TimeGrid default_grid();

/// Evaluates flatness on the grid and on candidate_times(n); ties keep the smaller t.
/// The verdict is MixesAt if any point is within tolerance, otherwise RuledOut when
/// the caller supplies reasons, otherwise Unknown.
MixingReport mixing_scan(const Graph& g, const TimeGrid& grid, const ScanOptions& opts = {},
                         std::span<const std::string> reasons = {});

/// Minimum flatness over the grid only.
FlatnessSample grid_min_flatness(const SpectralDecomposition& dec, const TimeGrid& grid);

} // namespace qwmix
