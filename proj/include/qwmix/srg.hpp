#pragma once

#include "qwmix/graphs.hpp"
#include "qwmix/linalg.hpp"
#include "qwmix/times.hpp"

#include <cstddef>
#include <optional>
#include <ranges>
#include <string>
#include <vector>

namespace qwmix {

struct SrgEigenvalues {
    double k = 0.0;
    double theta = 0.0;  ///< larger restricted eigenvalue
    double tau = 0.0;    ///< smaller restricted eigenvalue
};

/// theta, tau = ((lambda - mu) +- sqrt((lambda - mu)^2 + 4 (k - mu))) / 2.
SrgEigenvalues srg_eigenvalues(const SrgParams& p);

enum class Family { I = 1, II, III, IV, V };
const char* to_string(Family f);

/// A Chan parameter family. on_complement means the complement's parameters matched.
struct ChanFamily {
    Family family = Family::I;
    int theta = 0;
    bool on_complement = false;

    friend bool operator==(const ChanFamily&, const ChanFamily&) = default;
};

/// Parameters of family f at integer theta:
///   I   (4t^2, 2t^2 - t, t^2 - t, t^2 - t)
///   II  (4t^2, 2t^2 + t, t^2 + t, t^2 + t)
///   III (4t^2 - 1, 2t^2, t^2, t^2)
///   IV  (4t^2 + 4t + 1, 2t^2 + 2t, t^2 + t - 1, t^2 + t)   conference graphs
///   V   (4t^2 + 4t + 2, 2t^2 + t, t^2 - 1, t^2)
SrgParams family_params(Family f, int theta);

/// Tries p, then its complement, against families I..V for 1 <= theta <= ceil(sqrt(n)).
std::optional<ChanFamily> chan_family(const SrgParams& p);

/// True for conference-type parameters (4mu + 1, 2mu, mu - 1, mu).
bool conference_like(const SrgParams& p);

/// Coefficients of c sqrt(n) U(t) = I + x A + y Abar.
struct HadamardCoefficients {
    Complex x{1.0, 0.0};
    Complex y{1.0, 0.0};
    Complex c{1.0, 0.0};
    double t = 0.0;
};

/// Max modulus of the three residuals c e^{i lambda t} sqrt(n) - (1 + x lambda + y(-lambda - 1))
/// over the eigenvalues lambda in {k, theta, tau} (first row uses n - k - 1 for the y term).
/// With complement_equations the exponents use the complement spectrum (n-k-1, -theta-1, -tau-1)
/// while the right-hand sides stay in terms of A.
double characterizing_residual(const SrgParams& p, const HadamardCoefficients& co,
                               bool complement_equations = false);

/// characterizing_residual minimised over the phase of c at a fixed (x, y, t).
double best_phase_residual(const SrgParams& p, Complex x, Complex y, double t, bool complement_equations = false);

struct ResidualMinimum {
    double residual = 0.0;
    double t = 0.0;
};

/// Minimum of best_phase_residual over `points` uniform times on [0, 2 pi n].
ResidualMinimum grid_min_residual(const SrgParams& p, Complex x, Complex y, bool complement_equations = false,
                                  std::size_t points = 10000);

/// The (x, y) pairs, with every branch sign, that Chan's analysis allows for the family.
std::vector<std::pair<Complex, Complex>> chan_coefficients(Family f, int theta);

/// t_m = pi (m + 1/2) / theta for families I and II with theta even. Throws NoMixing otherwise.
void check_family_i_ii_mixes(const ChanFamily& fam);
Time family_i_ii_time(const ChanFamily& fam, long long m);

inline auto family_i_ii_times(const ChanFamily& fam)
{
    check_family_i_ii_mixes(fam);
    return std::views::iota(0LL) | std::views::transform([fam](long long m) { return family_i_ii_time(fam, m); });
}

enum class HadamardKind { JMinus2A, JMinus2AMinus2I };
const char* to_string(HadamardKind k);

struct RshcdReport {
    HadamardKind kind = HadamardKind::JMinus2A;
    int row_sum = 0;
};

/// Exact integer check of J - 2A, then J - 2A - 2I: +-1 entries, symmetric,
/// constant diagonal, H H^T = n I and constant row sums.
std::optional<RshcdReport> rshcd_check(const Graph& g);

enum class SrgVerdictKind { Mixes, NoMixing, NotCovered };
const char* to_string(SrgVerdictKind k);

struct SrgVerdict {
    SrgVerdictKind kind = SrgVerdictKind::NotCovered;
    std::optional<ChanFamily> family;
    std::vector<Time> times;  ///< first few mixing times when kind == Mixes
    std::string paper_case;   ///< which case of the classification decided it
    bool conference_like = false;
};

/// Parameter-level uniform-mixing classification of a primitive strongly regular graph.
SrgVerdict srg_mixing_verdict(const SrgParams& p, std::size_t time_count = 3);

} // namespace qwmix
