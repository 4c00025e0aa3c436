#include "qwmix/walk.hpp"

#include "qwmix/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

namespace qwmix {

TransitionMatrix transition(const SpectralDecomposition& dec, double t)
{
    const int n = dec.n();
    if (t == 0.0) return {t, Eigen::MatrixXcd::Identity(n, n)};
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 0; k < dec.size(); ++k) u += std::polar(1.0, dec.thetas(k) * t) * dec.idempotents[static_cast<std::size_t>(k)].cast<Complex>();
    return {t, std::move(u)};
}

bool is_uniform_mixing_at(const Graph& g, double t, double tol)
{
    if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
    return flatness(transition(eigendecompose(g), t)) <= tol;
}

double complement_time_check(const Graph& g, int j)
{
    if (!is_regular(g)) throw InvalidArgument("complement_time_check needs a regular graph");
    const double t = j * 2.0 * std::numbers::pi / g.n();
    // e^{i(J - I - A)t} = e^{-it} e^{-iAt} once e^{iJt} = I, so the complement
    // walk is a phase times U_G(-t), which is as flat as U_G(t).
    const auto u_back = transition(eigendecompose(g), -t).U;
    const auto uc = transition(eigendecompose(complement(g)), t).U;
    return max_abs(uc - std::polar(1.0, -t) * u_back);
}

FlatnessEvaluator::FlatnessEvaluator(const SpectralDecomposition& dec)
    : n_(dec.n()), thetas_(dec.thetas), cos_(dec.size()), sin_(dec.size())
{
    const Eigen::Index entries = static_cast<Eigen::Index>(n_) * (n_ + 1) / 2;
    packed_.resize(entries, dec.size());
    for (int k = 0; k < dec.size(); ++k) {
        const auto& e = dec.idempotents[static_cast<std::size_t>(k)];
        Eigen::Index row = 0;
        for (int i = 0; i < n_; ++i) {
            for (int j = i; j < n_; ++j) packed_(row++, k) = e(i, j);
        }
    }
}

double FlatnessEvaluator::operator()(double t) const
{
    for (Eigen::Index k = 0; k < thetas_.size(); ++k) {
        const double phase = thetas_(k) * t;
        cos_(k) = std::cos(phase);
        sin_(k) = std::sin(phase);
    }
    const Eigen::ArrayXd re = packed_ * cos_;
    const Eigen::ArrayXd im = packed_ * sin_;
    return (re.square() + im.square() - 1.0 / n_).abs().maxCoeff();
}

std::vector<Time> candidate_times(int n, int max_den)
{
    std::set<std::pair<long long, long long>> seen;
    std::vector<Time> out;
    for (long long b = 1; b <= max_den; ++b) {
        for (long long a = 0; a < 2 * b * n; ++a) {
            const long long g = std::gcd(a, b);
            if (seen.emplace(a / g, b / g).second) out.push_back(pi_fraction(a / g, b / g));
        }
    }
    std::sort(out.begin(), out.end(), [](const Time& x, const Time& y) {
        // Compare a/b exactly so equal values sort deterministically.
        return x.pi_num * y.pi_den < y.pi_num * x.pi_den;
    });
    return out;
}

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::MixesAt: return "MIXES_AT";
    case Verdict::RuledOut: return "RULED_OUT";
    case Verdict::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

TimeGrid default_grid() { return parse_grid("0:2*pi:0.001"); }

FlatnessSample grid_min_flatness(const SpectralDecomposition& dec, const TimeGrid& grid)
{
    const FlatnessEvaluator eval(dec);
    FlatnessSample best{grid.start, INFINITY};
    const std::size_t count = grid.size();
    double best_t = grid.start.value;
    for (std::size_t i = 0; i < count; ++i) {
        const double t = grid.at(i);
        const double f = eval(t);
        if (f < best.flatness) {
            best.flatness = f;
            best_t = t;
        }
    }
    best.time = decimal_time(best_t);
    return best;
}

MixingReport mixing_scan(const Graph& g, const TimeGrid& grid, const ScanOptions& opts,
                         std::span<const std::string> reasons)
{
    if (grid.size() == 0) throw InvalidArgument("mixing_scan needs a nonempty grid");
    const auto dec = eigendecompose(g);
    const FlatnessEvaluator eval(dec);

    MixingReport report;
    report.label = g.label;
    report.reasons.assign(reasons.begin(), reasons.end());
    report.grid_points = grid.size();

    std::vector<FlatnessSample> hits;
    for (std::size_t i = 0; i < report.grid_points; ++i) {
        const double t = grid.at(i);
        const double f = eval(t);
        if (i == 0 || f < report.grid_min.flatness) report.grid_min = {decimal_time(t), f};
        if (f <= opts.tol) hits.push_back({decimal_time(t), f});
    }
    report.best = report.grid_min;

    const auto candidates = candidate_times(g.n(), opts.max_den);
    report.candidate_points = candidates.size();
    for (const auto& t : candidates) {
        const double f = eval(t.value);
        if (f < report.best.flatness || (f == report.best.flatness && t.value < report.best.time.value)) {
            report.best = {t, f};
        }
        if (f <= opts.tol) hits.push_back({t, f});
    }

    std::stable_sort(hits.begin(), hits.end(),
                     [](const FlatnessSample& a, const FlatnessSample& b) { return a.time.value < b.time.value; });
    report.hits = std::move(hits);

    if (!report.hits.empty()) report.verdict = Verdict::MixesAt;
    else if (!report.reasons.empty()) report.verdict = Verdict::RuledOut;
    else report.verdict = Verdict::Unknown;
    return report;
}

} // namespace qwmix
