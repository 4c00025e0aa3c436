#include "qwmix/bipartite.hpp"

#include "qwmix/errors.hpp"
#include "qwmix/spectral.hpp"
#include "qwmix/srg.hpp"

#include <cmath>

namespace qwmix {

const char* to_string(ObstructionCode code)
{
    switch (code) {
    case ObstructionCode::NotDiv4: return "NOT_DIV_4";
    case ObstructionCode::NotSumTwoSquares: return "NOT_SUM_TWO_SQUARES";
    case ObstructionCode::NonintegralSpectrumBipartiteRegular: return "NONINTEGRAL_SPECTRUM_BIPARTITE_REGULAR";
    case ObstructionCode::PrimeCycleGe5: return "PRIME_CYCLE_GE_5";
    case ObstructionCode::EvenCycleGt4: return "EVEN_CYCLE_GT_4";
    case ObstructionCode::SrgTheoremCase: return "SRG_THEOREM_CASE";
    }
    return "?";
}

double block_structure_residual(const Graph& g, double t)
{
    const auto parts = bipartition(g);
    if (!parts) throw InvalidArgument("block_structure_residual needs a bipartite graph");
    std::vector<int> side(static_cast<std::size_t>(g.n()), 0);
    for (int v : parts->second) side[static_cast<std::size_t>(v)] = 1;

    const auto u = transition(eigendecompose(g), t).U;
    double worst = 0.0;
    for (int j = 0; j < g.n(); ++j) {
        for (int k = 0; k < g.n(); ++k) {
            const bool same = side[static_cast<std::size_t>(j)] == side[static_cast<std::size_t>(k)];
            worst = std::max(worst, same ? std::abs(u(j, k).imag()) : std::abs(u(j, k).real()));
        }
    }
    return worst;
}

bool divisible_by_four(long long n) { return n % 4 == 0; }

std::optional<std::pair<long long, long long>> sum_of_two_squares(long long n)
{
    if (n < 0) return std::nullopt;
    for (long long b = 0; 2 * b * b <= n; ++b) {
        const long long rest = n - b * b;
        auto a = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(rest))));
        while (a * a > rest) --a;
        while ((a + 1) * (a + 1) <= rest) ++a;
        if (a * a == rest) return std::pair{a, b};
    }
    return std::nullopt;
}

Eigen::MatrixXi dephase_to_real_hadamard(const TransitionMatrix& u, const Bipartition& parts)
{
    const auto n = u.U.rows();
    if (static_cast<Eigen::Index>(parts.first.size() + parts.second.size()) != n) {
        throw InvalidArgument("bipartition does not cover the matrix");
    }
    if (flatness(u) > 1e-9) throw StructureViolation("transition matrix is not flat");

    Eigen::VectorXcd d = Eigen::VectorXcd::Ones(n);
    for (int v : parts.second) d(v) = Complex(0.0, 1.0);
    const Eigen::MatrixXcd h = std::sqrt(static_cast<double>(n)) * d.asDiagonal() * u.U * d.asDiagonal();

    Eigen::MatrixXi out(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = 0; k < n; ++k) {
            const Complex z = h(j, k);
            const double sign = z.real() >= 0.0 ? 1.0 : -1.0;
            if (std::abs(z - sign) > 1e-6) {
                throw StructureViolation("dephased entry is not within 1e-6 of +-1");
            }
            out(j, k) = static_cast<int>(sign);
        }
    }
    if (out * out.transpose() != static_cast<int>(n) * Eigen::MatrixXi::Identity(n, n)) {
        throw StructureViolation("dephased matrix is not a real Hadamard matrix");
    }
    return out;
}

std::vector<Obstruction> rule_out_mixing(const Graph& g)
{
    std::vector<Obstruction> out;
    const int n = g.n();
    const auto parts = bipartition(g);
    const auto regular = is_regular(g);

    if (parts && n > 2 && !divisible_by_four(n)) {
        out.push_back({ObstructionCode::NotDiv4, "bipartite on " + std::to_string(n) + " vertices, n mod 4 = " +
                                                     std::to_string(n % 4),
                       "bipartite graphs: n divisible by four"});
    }
    if (parts && regular && !sum_of_two_squares(n)) {
        out.push_back({ObstructionCode::NotSumTwoSquares, std::to_string(n) + " is not a sum of two squares",
                       "regular bipartite graphs: n a sum of two squares"});
    }
    if (parts && regular && n > 2 && !integral_spectrum(g)) {
        out.push_back({ObstructionCode::NonintegralSpectrumBipartiteRegular,
                       "characteristic polynomial " + char_poly_exact(g).to_string() + " has a non-integer root",
                       "regular graph with algebraic U(t) needs an integral spectrum"});
    }
    if (const auto len = cycle_length(g)) {
        if (*len >= 5 && is_prime(*len)) {
            out.push_back({ObstructionCode::PrimeCycleGe5, "cycle of prime order " + std::to_string(*len),
                           "C_3 is the only odd prime cycle with uniform mixing"});
        }
        if (*len % 2 == 0 && *len / 2 >= 3) {
            out.push_back({ObstructionCode::EvenCycleGt4, "even cycle of order " + std::to_string(*len),
                           "C_4 is the only even cycle with uniform mixing"});
        }
    }
    if (const auto p = srg_params(g); p && p->primitive()) {
        const auto verdict = srg_mixing_verdict(*p);
        if (verdict.kind != SrgVerdictKind::Mixes) {
            out.push_back({ObstructionCode::SrgTheoremCase,
                           std::string(to_string(verdict.kind)) + " for (" + std::to_string(p->n) + "," +
                               std::to_string(p->k) + "," + std::to_string(p->lambda) + "," + std::to_string(p->mu) + ")",
                           verdict.paper_case});
        }
    }
    return out;
}

MixingReport classify_mixing(const Graph& g, const TimeGrid& grid, const ScanOptions& opts)
{
    std::vector<std::string> reasons;
    for (const auto& o : rule_out_mixing(g)) reasons.emplace_back(to_string(o.code));
    return mixing_scan(g, grid, opts, reasons);
}

} // namespace qwmix
