#include "qwmix/spectral.hpp"

#include "qwmix/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

namespace qwmix {

namespace {

using u64 = std::uint64_t;

u64 mul_mod(u64 a, u64 b, u64 p) { return (a * b) % p; }

u64 pow_mod(u64 base, u64 exp, u64 p)
{
    u64 result = 1;
    base %= p;
    while (exp > 0) {
        if (exp & 1U) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1U;
    }
    return result;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

/// Characteristic polynomial of m modulo the prime p, ascending coefficients.
std::vector<u64> char_poly_mod(const Eigen::MatrixXi& m, u64 p)
{
    const auto n = static_cast<std::size_t>(m.rows());
    std::vector<std::vector<u64>> h(n, std::vector<u64>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const long long v = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            h[i][j] = static_cast<u64>(((v % static_cast<long long>(p)) + static_cast<long long>(p)) % static_cast<long long>(p));
        }
    }

    // Similarity reduction to upper Hessenberg form.
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t pivot = j + 1;
        while (pivot < n && h[pivot][j] == 0) ++pivot;
        if (pivot == n) continue;
        if (pivot != j + 1) {
            std::swap(h[pivot], h[j + 1]);
            for (std::size_t r = 0; r < n; ++r) std::swap(h[r][pivot], h[r][j + 1]);
        }
        const u64 inv = inv_mod(h[j + 1][j], p);
        for (std::size_t i = j + 2; i < n; ++i) {
            const u64 u = mul_mod(h[i][j], inv, p);
            if (u == 0) continue;
            for (std::size_t c = 0; c < n; ++c) h[i][c] = (h[i][c] + p - mul_mod(u, h[j + 1][c], p)) % p;
            for (std::size_t r = 0; r < n; ++r) h[r][j + 1] = (h[r][j + 1] + mul_mod(u, h[r][i], p)) % p;
        }
    }

    // p_{k+1} = (x - h_kk) p_k - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_i
    std::vector<std::vector<u64>> polys(n + 1);
    polys[0] = {1};
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<u64> next(k + 2, 0);
        for (std::size_t d = 0; d <= k; ++d) {
            next[d + 1] = (next[d + 1] + polys[k][d]) % p;
            next[d] = (next[d] + p - mul_mod(h[k][k], polys[k][d], p)) % p;
        }
        u64 sub = 1;
        for (std::size_t i = k; i-- > 0;) {
            sub = mul_mod(sub, h[i + 1][i], p);
            if (sub == 0) break;
            const u64 factor = mul_mod(h[i][k], sub, p);
            if (factor == 0) continue;
            for (std::size_t d = 0; d < polys[i].size(); ++d) {
                next[d] = (next[d] + p - mul_mod(factor, polys[i][d], p)) % p;
            }
        }
        polys[k + 1] = std::move(next);
    }
    return polys[n];
}

/// log2 of a bound on |coefficient| for det(xI - M): the x^{n-j} coefficient is a signed
/// sum of C(n, j) principal minors of order j, each bounded by the product of its row norms.
double coefficient_log2_bound(const Eigen::MatrixXi& m)
{
    const auto n = static_cast<int>(m.rows());
    std::vector<double> row_log;
    for (int i = 0; i < n; ++i) {
        const double norm = std::sqrt(m.row(i).cast<double>().squaredNorm());
        row_log.push_back(std::log2(std::max(norm, 1.0)));
    }
    std::sort(row_log.rbegin(), row_log.rend());
    double best = 0.0;
    double rows = 0.0;
    for (int j = 1; j <= n; ++j) {
        rows += row_log[static_cast<std::size_t>(j - 1)];
        const double binom = (std::lgamma(n + 1.0) - std::lgamma(j + 1.0) - std::lgamma(n - j + 1.0)) / std::log(2.0);
        best = std::max(best, binom + rows);
    }
    return best;
}

std::vector<u64> word_primes_from(u64 start, std::size_t count)
{
    std::vector<u64> out;
    for (u64 c = start; out.size() < count; c -= 2) {
        if (is_prime(static_cast<long long>(c))) out.push_back(c);
    }
    return out;
}

} // namespace

IntPolynomial char_poly_exact(const Eigen::MatrixXi& m)
{
    if (m.rows() != m.cols()) throw InvalidArgument("characteristic polynomial of a non-square matrix");
    const auto n = static_cast<std::size_t>(m.rows());
    if (n == 0) return IntPolynomial{1};

    const double needed_bits = coefficient_log2_bound(m) + 2.0;
    const auto prime_count = static_cast<std::size_t>(std::ceil(needed_bits / 30.0)) + 1;
    const auto primes = word_primes_from((u64{1} << 31) - 1, prime_count);

    std::vector<BigInt> value(n + 1, 0);
    BigInt modulus = 1;
    for (u64 p : primes) {
        const auto residues = char_poly_mod(m, p);
        const u64 mod_p = static_cast<u64>(modulus % p);
        const u64 inv = inv_mod(mod_p, p);
        for (std::size_t i = 0; i <= n; ++i) {
            const u64 current = static_cast<u64>(value[i] % p);
            const u64 delta = mul_mod((residues[i] + p - current) % p, inv, p);
            value[i] += modulus * delta;
        }
        modulus *= p;
    }
    const BigInt half = modulus / 2;
    for (auto& v : value) {
        if (v > half) v -= modulus;
    }
    return IntPolynomial(std::move(value));
}

IntPolynomial char_poly_exact(const Graph& g) { return char_poly_exact(g.adj); }

bool integral_spectrum(const Graph& g)
{
    const long long max_degree = g.adj.rowwise().sum().maxCoeff();
    const auto split = integer_roots(char_poly_exact(g), max_degree);
    return split.cofactor.degree() == 0;
}

double default_group_tol(const Graph& g)
{
    const double norm = g.adj.cwiseAbs().maxCoeff();
    return 1e-9 * std::max(1.0, norm * g.n());
}

SpectralDecomposition eigendecompose(const Eigen::MatrixXd& symmetric, double group_tol)
{
    if (!(group_tol > 0.0)) throw InvalidArgument("group_tol must be positive");
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(symmetric);
    if (solver.info() != Eigen::Success) throw NumericFailure("symmetric eigensolver did not converge");

    // Eigen sorts ascending; walk from the top so thetas come out decreasing.
    const Eigen::VectorXd& values = solver.eigenvalues();
    const Eigen::MatrixXd& vectors = solver.eigenvectors();
    const auto n = values.size();

    SpectralDecomposition out;
    std::vector<double> thetas;
    Eigen::Index hi = n - 1;
    while (hi >= 0) {
        Eigen::Index lo = hi;
        while (lo > 0 && values(hi) - values(lo - 1) <= group_tol) --lo;
        const Eigen::Index count = hi - lo + 1;
        const auto block = vectors.middleCols(lo, count);
        thetas.push_back(values.segment(lo, count).mean());
        out.mults.push_back(static_cast<int>(count));
        out.idempotents.emplace_back(block * block.transpose());
        hi = lo - 1;
    }
    out.thetas = Eigen::Map<Eigen::VectorXd>(thetas.data(), static_cast<Eigen::Index>(thetas.size()));
    return out;
}

SpectralDecomposition eigendecompose(const Graph& g, double group_tol)
{
    return eigendecompose(Eigen::MatrixXd(g.adj.cast<double>()), group_tol);
}

SpectralDecomposition eigendecompose(const Graph& g) { return eigendecompose(g, default_group_tol(g)); }

bool rational_cosine(int n)
{
    if (n < 1) throw InvalidArgument("rational_cosine needs n >= 1");
    return n == 1 || n == 2 || n == 3 || n == 4 || n == 6;
}

IntPolynomial cosine_minimal_poly(int p)
{
    if (p < 3 || !is_prime(p)) throw InvalidArgument("cosine_minimal_poly needs an odd prime");
    const int d = (p - 1) / 2;
    // z^j + z^{-j} = T_j(x) with T_0 = 2, T_1 = x, T_{j+1} = x T_j - T_{j-1}.
    const IntPolynomial x{0, 1};
    IntPolynomial prev{2};
    IntPolynomial cur = x;
    IntPolynomial sum{1};
    for (int j = 1; j <= d; ++j) {
        sum = sum + cur;
        IntPolynomial next = x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return sum;
}

} // namespace qwmix
