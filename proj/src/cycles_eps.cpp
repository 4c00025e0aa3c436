#include "qwmix/cycles_eps.hpp"

#include "qwmix/errors.hpp"
#include "qwmix/linalg.hpp"
#include "qwmix/walk.hpp"

#include <cmath>
#include <numbers>

namespace qwmix {

namespace {

using std::numbers::pi;

void require_odd_prime(int p)
{
    if (p < 3 || !is_prime(p)) throw InvalidArgument("expected an odd prime, got " + std::to_string(p));
}

double frac(double x) { return x - std::floor(x); }

/// Shared per-prime data for the search: first row of every E_r and the target phases.
struct CycleTables {
    int p;
    int d;
    Eigen::MatrixXd rows;        // (d + 1) x p, rows(r, j) = E_r[0][j]
    Eigen::VectorXd shifted;     // theta_r - 2
    Eigen::VectorXcd target;     // omega^{r^2}

    explicit CycleTables(int prime) : p(prime), d((prime - 1) / 2), rows(d + 1, prime), shifted(d + 1), target(d + 1)
    {
        for (int r = 0; r <= d; ++r) {
            for (int j = 0; j < p; ++j) {
                rows(r, j) = (r == 0 ? 1.0 : 2.0 * std::cos(2.0 * pi * r * j / p)) / p;
            }
            shifted(r) = 2.0 * std::cos(2.0 * pi * r / p) - 2.0;
            target(r) = std::polar(1.0, 2.0 * pi * static_cast<double>((static_cast<long long>(r) * r) % p) / p);
        }
    }

    // exp(i (theta_r - 2) t) at t = 2 pi alpha / p, phase reduced mod 1 before scaling.
    [[nodiscard]] Complex phase(int r, long long alpha) const
    {
        return std::polar(1.0, 2.0 * pi * frac(static_cast<double>(alpha % p) * shifted(r) / p +
                                               std::floor(static_cast<double>(alpha / p)) * shifted(r)));
    }

    [[nodiscard]] double distance(long long alpha) const
    {
        Eigen::VectorXcd diff(d + 1);
        for (int r = 0; r <= d; ++r) diff(r) = phase(r, alpha) - target(r);
        const Eigen::VectorXcd row = rows.transpose().cast<Complex>() * diff;
        return std::sqrt(static_cast<double>(p)) * row.cwiseAbs().maxCoeff();
    }
};

double flatness_at(const SpectralDecomposition& dec, int p, long long alpha)
{
    return flatness(transition(dec, 2.0 * pi * static_cast<double>(alpha) / p));
}

} // namespace

Eigen::MatrixXcd fourier_type(int p)
{
    require_odd_prime(p);
    Eigen::MatrixXcd f(p, p);
    for (int j = 0; j < p; ++j) {
        for (int k = 0; k < p; ++k) {
            const long long diff = j - k;
            f(j, k) = std::polar(1.0, 2.0 * pi * static_cast<double>((diff * diff) % p) / p);
        }
    }
    return f;
}

SpectralDecomposition cycle_decomposition(int n)
{
    if (n < 3) throw InvalidArgument("cycle_decomposition needs n >= 3");
    SpectralDecomposition dec;
    const int top = n / 2;
    dec.thetas.resize(top + 1);
    for (int r = 0; r <= top; ++r) {
        const bool simple = r == 0 || 2 * r == n;
        Eigen::MatrixXd e(n, n);
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                const double c = std::cos(2.0 * pi * r * (j - k) / n);
                e(j, k) = (simple ? c : 2.0 * c) / n;
            }
        }
        dec.thetas(r) = 2.0 * std::cos(2.0 * pi * r / n);
        dec.mults.push_back(simple ? 1 : 2);
        dec.idempotents.push_back(std::move(e));
    }
    return dec;
}

DualFourier dual_fourier(int p)
{
    require_odd_prime(p);
    const auto dec = cycle_decomposition(p);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(p, p);
    for (int r = 0; r < dec.size(); ++r) {
        const long long sq = (static_cast<long long>(r) * r) % p;
        m += std::polar(1.0, 2.0 * pi * static_cast<double>(sq) / p) * dec.idempotents[static_cast<std::size_t>(r)].cast<Complex>();
    }
    return {p, std::sqrt(static_cast<double>(p)) * m};
}

double circle_distance(double a, double b)
{
    const double d = frac(a - b);
    return std::min(d, 1.0 - d);
}

std::vector<ExponentTarget> exponent_targets(int p, long long alpha)
{
    require_odd_prime(p);
    const CycleTables tables(p);
    std::vector<ExponentTarget> out;
    for (int r = 1; r <= tables.d; ++r) {
        const double achieved = frac(static_cast<double>(alpha % p) * tables.shifted(r) / p +
                                     std::floor(static_cast<double>(alpha / p)) * tables.shifted(r));
        const double target = static_cast<double>((static_cast<long long>(r) * r) % p) / p;
        out.push_back({achieved, target});
    }
    return out;
}

double exponent_distance(int p, long long alpha)
{
    double worst = 0.0;
    for (const auto& e : exponent_targets(p, alpha)) worst = std::max(worst, circle_distance(e.achieved, e.target));
    return worst;
}

bool last_coordinate_identity(int p)
{
    if (p <= 3 || !is_prime(p)) throw InvalidArgument("last_coordinate_identity needs a prime p > 3");
    const long long pp = p;
    if ((pp * pp - 1) % 24 != 0) return false;
    const long long d = (pp - 1) / 2;
    long long partial = 0;
    for (long long r = 1; r < d; ++r) partial += r * r;
    // -partial/p == d^2/p in R/Z  <=>  p divides partial + d^2.
    return (partial + d * d) % pp == 0;
}

double target_distance(int p, long long alpha)
{
    require_odd_prime(p);
    return CycleTables(p).distance(alpha);
}

EpsSearchResult eps_search(int p, long long alpha_max)
{
    require_odd_prime(p);
    if (p < 5) throw InvalidArgument("eps_search targets primes p >= 5");
    if (alpha_max < 1) throw InvalidArgument("alpha_max must be at least 1");

    const CycleTables tables(p);
    const auto dec = cycle_decomposition(p);

    EpsSearchResult result;
    result.p = p;
    result.alpha_max = alpha_max;
    result.best_target_distance = INFINITY;

    long long next_bound = 10;
    auto record = [&](long long bound) {
        result.trace.push_back({bound, result.best_alpha, result.best_target_distance,
                                flatness_at(dec, p, result.best_alpha)});
    };
    for (long long alpha = 1; alpha <= alpha_max; ++alpha) {
        const double dist = tables.distance(alpha);
        if (dist < result.best_target_distance) {
            result.best_target_distance = dist;
            result.best_alpha = alpha;
        }
        if (alpha == next_bound) {
            record(alpha);
            next_bound *= 10;
        }
    }
    if (result.trace.empty() || result.trace.back().bound != alpha_max) record(alpha_max);
    result.best_flatness = result.trace.back().best_flatness;
    return result;
}

} // namespace qwmix
