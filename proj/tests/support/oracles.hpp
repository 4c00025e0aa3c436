#pragma once

// Independent reference implementations used to cross-check the library.
// Nothing here calls into the code under test except the Graph container.

#include "qwmix/graphs.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

/// det(xI - M) by expanding over all permutations; coefficients ascending.
inline std::vector<long long> leibniz_char_poly(const Eigen::MatrixXi& m)
{
    const int n = static_cast<int>(m.rows());
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<long long> total(static_cast<std::size_t>(n) + 1, 0);
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        // product of (x*[i==perm i] - m(i, perm i))
        std::vector<long long> term{1};
        for (int i = 0; i < n; ++i) {
            const long long c0 = -m(i, perm[i]);
            const long long c1 = (i == perm[i]) ? 1 : 0;
            std::vector<long long> next(term.size() + 1, 0);
            for (std::size_t d = 0; d < term.size(); ++d) {
                next[d] += term[d] * c0;
                next[d + 1] += term[d] * c1;
            }
            term.swap(next);
        }
        const long long sign = (inversions % 2 == 0) ? 1 : -1;
        for (std::size_t d = 0; d < term.size() && d < total.size(); ++d) total[d] += sign * term[d];
    } while (std::next_permutation(perm.begin(), perm.end()));
    while (!total.empty() && total.back() == 0) total.pop_back();
    return total;
}

inline qwmix::Graph raw_graph(Eigen::MatrixXi adj, std::string label)
{
    return qwmix::Graph{std::move(adj), std::move(label)};
}

/// Erdos-Renyi G(n, 1/2).
inline qwmix::Graph random_graph(int n, std::mt19937_64& rng, double p = 0.5)
{
    std::bernoulli_distribution coin(p);
    Eigen::MatrixXi a = Eigen::MatrixXi::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) a(i, j) = a(j, i) = 1;
    return raw_graph(a, "G(" + std::to_string(n) + ")");
}

/// Random k-regular graph from the pairing model, retried until simple.
inline qwmix::Graph random_regular(int n, int k, std::mt19937_64& rng)
{
    for (;;) {
        std::vector<int> points;
        for (int v = 0; v < n; ++v)
            for (int c = 0; c < k; ++c) points.push_back(v);
        std::shuffle(points.begin(), points.end(), rng);
        Eigen::MatrixXi a = Eigen::MatrixXi::Zero(n, n);
        bool simple = true;
        for (std::size_t i = 0; i + 1 < points.size() && simple; i += 2) {
            const int u = points[i], v = points[i + 1];
            if (u == v || a(u, v) != 0) simple = false;
            else a(u, v) = a(v, u) = 1;
        }
        if (simple) return raw_graph(a, "R(" + std::to_string(n) + "," + std::to_string(k) + ")");
    }
}

/// Folded 5-cube: 4-bit words adjacent when they differ in one bit or in all four.
inline qwmix::Graph clebsch()
{
    Eigen::MatrixXi a = Eigen::MatrixXi::Zero(16, 16);
    for (int u = 0; u < 16; ++u) {
        for (int v = 0; v < 16; ++v) {
            const int d = std::popcount(static_cast<unsigned>(u ^ v));
            if (d == 1 || d == 4) a(u, v) = 1;
        }
    }
    return raw_graph(a, "Clebsch");
}

/// U(t) = exp(itA) through Eigen's matrix exponential, no eigendecomposition.
inline Eigen::MatrixXcd expm_transition(const Eigen::MatrixXi& adj, double t)
{
    const Eigen::MatrixXcd m = std::complex<double>(0.0, t) * adj.cast<std::complex<double>>();
    return m.exp();
}

inline bool brute_sum_two_squares(long long n)
{
    for (long long a = 0; a * a <= n; ++a)
        for (long long b = 0; b <= a && a * a + b * b <= n; ++b)
            if (a * a + b * b == n) return true;
    return false;
}

/// Looks for integers c_0..c_m, |c_i| <= bound and not all zero, with
/// |c_0 + sum c_i v_i| < eps. The constant term is solved for rather than
/// enumerated, so the cost is (2 bound + 1)^m.
inline std::optional<std::vector<long long>> integer_relation(const std::vector<double>& v, long long bound, double eps)
{
    const std::size_t m = v.size();
    std::vector<long long> c(m, -bound);
    for (;;) {
        double s = 0.0;
        bool nonzero = false;
        for (std::size_t i = 0; i < m; ++i) {
            s += static_cast<double>(c[i]) * v[i];
            nonzero = nonzero || c[i] != 0;
        }
        const double c0 = std::round(-s);
        if (nonzero && std::abs(c0) <= static_cast<double>(bound) && std::abs(c0 + s) < eps) {
            std::vector<long long> out{static_cast<long long>(c0)};
            out.insert(out.end(), c.begin(), c.end());
            return out;
        }
        std::size_t i = 0;
        while (i < m && c[i] == bound) c[i++] = -bound;
        if (i == m) return std::nullopt;
        ++c[i];
    }
}

} // namespace oracle
