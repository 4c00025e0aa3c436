#pragma once

#include "qwmix/graphs.hpp"
#include "qwmix/polynomial.hpp"

#include <Eigen/Dense>

#include <vector>

namespace qwmix {

/// A = sum_k thetas[k] * idempotents[k], with thetas strictly decreasing.
struct SpectralDecomposition {
    Eigen::VectorXd thetas;
    std::vector<int> mults;
    std::vector<Eigen::MatrixXd> idempotents;

    [[nodiscard]] int n() const { return idempotents.empty() ? 0 : static_cast<int>(idempotents.front().rows()); }
    [[nodiscard]] int size() const { return static_cast<int>(thetas.size()); }
};

/// det(xI - M) for an integer matrix, computed exactly.
///
/// The polynomial is reduced to upper Hessenberg form modulo a sequence of
/// 31-bit primes, and the coefficients are rebuilt by Chinese remaindering until
/// the modulus exceeds twice a Hadamard-type bound on every coefficient.
IntPolynomial char_poly_exact(const Eigen::MatrixXi& m);
IntPolynomial char_poly_exact(const Graph& g);

/// True iff the characteristic polynomial splits into integer linear factors.
bool integral_spectrum(const Graph& g);

/// 1e-9 * max(1, |A|_max * n).
double default_group_tol(const Graph& g);

/// Symmetric eigendecomposition with eigenvalues closer than group_tol merged.
SpectralDecomposition eigendecompose(const Graph& g, double group_tol);
SpectralDecomposition eigendecompose(const Graph& g);

/// Groups the spectrum of an arbitrary real symmetric matrix.
SpectralDecomposition eigendecompose(const Eigen::MatrixXd& symmetric, double group_tol);

/// 2cos(2 pi / n) is rational exactly for n in {1, 2, 3, 4, 6}.
bool rational_cosine(int n);

/// Minimal polynomial of 2cos(2 pi / p) over the rationals, p an odd prime.
/// Obtained by rewriting z^{-d} Phi_p(z) = 1 + sum_{j=1}^{d} (z^j + z^{-j}) as a
/// polynomial in x = z + 1/z, d = (p - 1) / 2.
IntPolynomial cosine_minimal_poly(int p);

} // namespace qwmix
