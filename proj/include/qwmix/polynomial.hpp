#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace qwmix {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial with arbitrary-precision integer coefficients, ascending degree.
/// The zero polynomial has no coefficients and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    IntPolynomial(std::initializer_list<long long> coeffs);

    static IntPolynomial monomial(int degree, BigInt coeff = 1);

    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] const std::vector<BigInt>& coeffs() const { return coeffs_; }
    /// Coefficient of x^i, zero beyond the degree.
    [[nodiscard]] BigInt coeff(int i) const;
    [[nodiscard]] const BigInt& leading() const { return coeffs_.back(); }
    [[nodiscard]] bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    [[nodiscard]] BigInt evaluate(const BigInt& x) const;
    [[nodiscard]] double evaluate(double x) const;
    /// Sum of |c_i| |x|^i, the natural scale for judging evaluate(x) near zero.
    [[nodiscard]] double evaluation_scale(double x) const;

    /// Synthetic division by (x - r); returns quotient and remainder.
    [[nodiscard]] std::pair<IntPolynomial, BigInt> divide_linear(const BigInt& r) const;
    /// Exact division by a monic divisor; returns quotient and remainder.
    [[nodiscard]] std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& monic_divisor) const;

    [[nodiscard]] std::string to_string() const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

struct IntegerRootSplit {
    std::vector<BigInt> roots;   ///< with multiplicity, ascending
    IntPolynomial cofactor;      ///< what is left after deflating every integer root
};

/// Finds all integer roots by testing divisors of the constant term (after removing
/// x factors), deflating each exactly. Candidates are limited to |r| <= root_bound;
/// a negative bound means "use the Fujiwara bound of the polynomial".
IntegerRootSplit integer_roots(const IntPolynomial& p, long long root_bound = -1);

} // namespace qwmix
