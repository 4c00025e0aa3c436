#pragma once

#include <Eigen/Dense>

#include <complex>

namespace qwmix {

using Complex = std::complex<double>;

/// Kronecker product with row-major block order: (j, k) of the left factor is major.
template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b)
{
    using Scalar = typename Eigen::ScalarBinaryOpTraits<typename DerivedA::Scalar,
                                                        typename DerivedB::Scalar>::ReturnType;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = Scalar(a(i, j)) * b.template cast<Scalar>();
        }
    }
    return out;
}

/// Largest entrywise modulus, the norm used for every residual in this library.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m)
{
    if (m.size() == 0) return 0.0;
    return static_cast<double>(m.cwiseAbs().maxCoeff());
}

} // namespace qwmix
