#include "qwmix/srg.hpp"

#include "qwmix/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace qwmix {

namespace {

using std::numbers::pi;

struct EquationSet {
    std::array<double, 3> exponents;
    std::array<Complex, 3> rhs;
    double sqrt_n;
};

EquationSet equations(const SrgParams& p, Complex x, Complex y, bool complement_equations)
{
    const auto ev = srg_eigenvalues(p);
    const double n = p.n;
    EquationSet eq;
    eq.sqrt_n = std::sqrt(n);
    eq.rhs = {1.0 + x * ev.k + y * (n - ev.k - 1.0), 1.0 + x * ev.theta + y * (-ev.theta - 1.0),
              1.0 + x * ev.tau + y * (-ev.tau - 1.0)};
    if (complement_equations) eq.exponents = {n - ev.k - 1.0, -ev.theta - 1.0, -ev.tau - 1.0};
    else eq.exponents = {ev.k, ev.theta, ev.tau};
    return eq;
}

double residual_at_phase(const EquationSet& eq, double t, double phase)
{
    double worst = 0.0;
    for (std::size_t j = 0; j < 3; ++j) {
        worst = std::max(worst, std::abs(eq.sqrt_n * std::polar(1.0, phase + eq.exponents[j] * t) - eq.rhs[j]));
    }
    return worst;
}

double best_phase(const EquationSet& eq, double t)
{
    // Each squared residual is A_j - B_j cos(phase - beta_j). The minimum of their maximum
    // sits at some beta_j or where two of them cross; all crossings solve
    // P cos(phase) + Q sin(phase) = R.
    std::array<double, 3> a{}, b{}, beta{};
    for (std::size_t j = 0; j < 3; ++j) {
        const double r = std::abs(eq.rhs[j]);
        a[j] = eq.sqrt_n * eq.sqrt_n + r * r;
        b[j] = 2.0 * eq.sqrt_n * r;
        beta[j] = (r > 0.0 ? std::arg(eq.rhs[j]) : 0.0) - eq.exponents[j] * t;
    }
    std::vector<double> candidates(beta.begin(), beta.end());
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            const double pc = b[j] * std::cos(beta[j]) - b[i] * std::cos(beta[i]);
            const double qc = b[j] * std::sin(beta[j]) - b[i] * std::sin(beta[i]);
            const double rc = a[j] - a[i];
            const double rho = std::hypot(pc, qc);
            if (rho < 1e-14 || std::abs(rc) > rho) continue;
            const double base = std::atan2(qc, pc);
            const double spread = std::acos(std::clamp(rc / rho, -1.0, 1.0));
            candidates.push_back(base + spread);
            candidates.push_back(base - spread);
        }
    }
    double best = INFINITY;
    for (double phase : candidates) best = std::min(best, residual_at_phase(eq, t, phase));
    return best;
}

} // namespace

SrgEigenvalues srg_eigenvalues(const SrgParams& p)
{
    if (!p.feasible()) throw InfeasibleParams("parameters fail k(k - lambda - 1) = (n - k - 1) mu");
    const double diff = p.lambda - p.mu;
    const double disc = diff * diff + 4.0 * (p.k - p.mu);
    if (disc < 0.0) throw InfeasibleParams("negative discriminant for SRG eigenvalues");
    const double root = std::sqrt(disc);
    return {static_cast<double>(p.k), (diff + root) / 2.0, (diff - root) / 2.0};
}

const char* to_string(Family f)
{
    switch (f) {
    case Family::I: return "I";
    case Family::II: return "II";
    case Family::III: return "III";
    case Family::IV: return "IV";
    case Family::V: return "V";
    }
    return "?";
}

SrgParams family_params(Family f, int t)
{
    const int s = t * t;
    switch (f) {
    case Family::I: return {4 * s, 2 * s - t, s - t, s - t};
    case Family::II: return {4 * s, 2 * s + t, s + t, s + t};
    case Family::III: return {4 * s - 1, 2 * s, s, s};
    case Family::IV: return {4 * s + 4 * t + 1, 2 * s + 2 * t, s + t - 1, s + t};
    case Family::V: return {4 * s + 4 * t + 2, 2 * s + t, s - 1, s};
    }
    throw InvalidArgument("unknown family");
}

std::optional<ChanFamily> chan_family(const SrgParams& p)
{
    const int limit = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(std::max(p.n, 1)))));
    for (bool on_complement : {false, true}) {
        const SrgParams target = on_complement ? p.complement() : p;
        for (Family f : {Family::I, Family::II, Family::III, Family::IV, Family::V}) {
            for (int theta = 1; theta <= limit; ++theta) {
                if (family_params(f, theta) == target) return ChanFamily{f, theta, on_complement};
            }
        }
    }
    return std::nullopt;
}

bool conference_like(const SrgParams& p)
{
    return p.mu > 0 && p.n == 4 * p.mu + 1 && p.k == 2 * p.mu && p.lambda == p.mu - 1;
}

double characterizing_residual(const SrgParams& p, const HadamardCoefficients& co, bool complement_equations)
{
    const auto eq = equations(p, co.x, co.y, complement_equations);
    double worst = 0.0;
    for (std::size_t j = 0; j < 3; ++j) {
        worst = std::max(worst, std::abs(co.c * std::polar(eq.sqrt_n, eq.exponents[j] * co.t) - eq.rhs[j]));
    }
    return worst;
}

double best_phase_residual(const SrgParams& p, Complex x, Complex y, double t, bool complement_equations)
{
    return best_phase(equations(p, x, y, complement_equations), t);
}

ResidualMinimum grid_min_residual(const SrgParams& p, Complex x, Complex y, bool complement_equations,
                                  std::size_t points)
{
    if (points < 2) throw InvalidArgument("residual grid needs at least two points");
    const auto eq = equations(p, x, y, complement_equations);
    const double span = 2.0 * pi * p.n;
    ResidualMinimum best{INFINITY, 0.0};
    for (std::size_t i = 0; i < points; ++i) {
        const double t = span * static_cast<double>(i) / static_cast<double>(points - 1);
        const double r = best_phase(eq, t);
        if (r < best.residual) best = {r, t};
    }
    return best;
}

std::vector<std::pair<Complex, Complex>> chan_coefficients(Family f, int theta)
{
    const double t = theta;
    const Complex i(0.0, 1.0);
    std::vector<std::pair<Complex, Complex>> out;
    switch (f) {
    case Family::I:
    case Family::II:
        out.emplace_back(-1.0, 1.0);
        break;
    case Family::III:
        for (double sign : {1.0, -1.0}) {
            if (theta > 1) {
                out.emplace_back(-1.0, (2 * t * t - 3 + sign * i * std::sqrt(4 * t * t - 5)) / (2 * (t * t - 1)));
            }
            out.emplace_back((-2 * t * t + 1 + sign * i * std::sqrt(4 * t * t - 1)) / (2 * t * t), 1.0);
        }
        break;
    case Family::IV:
        for (double sign : {1.0, -1.0}) {
            const Complex a = (-1.0 + sign * i * std::sqrt((2 * t + 1) * (2 * t - 1))) / (2 * t);
            const Complex b = (1.0 + sign * i * std::sqrt((2 * t + 1) * (2 * t + 3))) / (2 * (t + 1));
            out.emplace_back(a, std::conj(a));
            out.emplace_back(b, std::conj(b));
        }
        break;
    case Family::V:
        for (double sign : {1.0, -1.0}) {
            const Complex a = sign * i;
            const Complex b = (-1.0 + sign * i * std::sqrt(4 * t * t * (t + 1) * (t + 1) - 1)) / (2 * t * (t + 1));
            out.emplace_back(a, std::conj(a));
            out.emplace_back(b, std::conj(b));
        }
        break;
    }
    return out;
}

void check_family_i_ii_mixes(const ChanFamily& fam)
{
    if (fam.family != Family::I && fam.family != Family::II) {
        throw NoMixing("mixing times are only generated for families I and II");
    }
    if (fam.theta < 1 || fam.theta % 2 != 0) {
        throw NoMixing(std::string("family ") + to_string(fam.family) + " with odd theta has no mixing time");
    }
}

Time family_i_ii_time(const ChanFamily& fam, long long m) { return pi_fraction(2 * m + 1, 2LL * fam.theta); }

const char* to_string(HadamardKind k)
{
    return k == HadamardKind::JMinus2A ? "J-2A" : "J-2A-2I";
}

std::optional<RshcdReport> rshcd_check(const Graph& g)
{
    const int n = g.n();
    const Eigen::MatrixXi j = Eigen::MatrixXi::Ones(n, n);
    const Eigen::MatrixXi id = Eigen::MatrixXi::Identity(n, n);
    for (HadamardKind kind : {HadamardKind::JMinus2A, HadamardKind::JMinus2AMinus2I}) {
        Eigen::MatrixXi h = j - 2 * g.adj;
        if (kind == HadamardKind::JMinus2AMinus2I) h -= 2 * id;
        if (!(h.array().abs() == 1).all()) continue;
        if (h != h.transpose()) continue;
        if (!(h.diagonal().array() == h(0, 0)).all()) continue;
        if (h * h.transpose() != n * id) continue;
        const Eigen::VectorXi sums = h.rowwise().sum();
        if (!(sums.array() == sums(0)).all()) continue;
        return RshcdReport{kind, sums(0)};
    }
    return std::nullopt;
}

const char* to_string(SrgVerdictKind k)
{
    switch (k) {
    case SrgVerdictKind::Mixes: return "MIXES";
    case SrgVerdictKind::NoMixing: return "NO_MIXING";
    case SrgVerdictKind::NotCovered: return "NOT_COVERED";
    }
    return "?";
}

SrgVerdict srg_mixing_verdict(const SrgParams& p, std::size_t time_count)
{
    if (!p.feasible()) throw InfeasibleParams("parameters fail k(k - lambda - 1) = (n - k - 1) mu");
    if (!p.primitive()) throw InvalidArgument("parameters are not primitive");

    SrgVerdict v;
    v.family = chan_family(p);
    v.conference_like = conference_like(p);

    if (p == SrgParams{9, 4, 1, 2}) {
        v.kind = SrgVerdictKind::Mixes;
        v.paper_case = "Paley graph of order 9 (conference graph, theta = 1)";
        for (long long r = 0; v.times.size() < time_count; ++r) {
            v.times.push_back(pi_fraction(2 + 18 * r, 9));
            if (v.times.size() < time_count) v.times.push_back(pi_fraction(4 + 18 * r, 9));
        }
        return v;
    }
    if (!v.family) {
        v.kind = SrgVerdictKind::NotCovered;
        v.paper_case = v.conference_like ? "conference parameters with non-integer theta"
                                         : "matches no family of the complex Hadamard classification";
        return v;
    }

    const ChanFamily& fam = *v.family;
    switch (fam.family) {
    case Family::I:
    case Family::II: {
        const bool mixes = fam.theta % 2 == 0;
        const std::string which = fam.family == Family::I ? "family (i), J-2A regular symmetric Hadamard"
                                                          : "family (ii), J-2A regular symmetric Hadamard";
        v.paper_case = which + (mixes ? ", theta even" : ", theta odd");
        if (mixes) {
            v.kind = SrgVerdictKind::Mixes;
            for (const Time& t : family_i_ii_times(fam) | std::views::take(static_cast<long>(time_count))) {
                v.times.push_back(t);
            }
        } else {
            v.kind = SrgVerdictKind::NoMixing;
        }
        break;
    }
    case Family::III:
        v.kind = SrgVerdictKind::NoMixing;
        v.paper_case = "family (iii), symplectic type";
        break;
    case Family::IV:
        v.kind = SrgVerdictKind::NoMixing;
        v.paper_case = "family (iv), conference graph with integer theta >= 2";
        break;
    case Family::V:
        v.kind = SrgVerdictKind::NoMixing;
        v.paper_case = "family (v), regular conference-matrix type";
        break;
    }
    return v;
}

} // namespace qwmix
