#include "qwmix/polynomial.hpp"

#include "qwmix/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qwmix {

namespace {

double log2_abs(const BigInt& v)
{
    if (v == 0) return -INFINITY;
    const BigInt a = abs(v);
    const auto bits = static_cast<long>(boost::multiprecision::msb(a));
    if (bits < 1000) return std::log2(a.convert_to<double>());
    const BigInt top = a >> (bits - 60);
    return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 60);
}

} // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::monomial(int degree, BigInt coeff)
{
    std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1);
    c.back() = std::move(coeff);
    return IntPolynomial(std::move(c));
}

void IntPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(int i) const
{
    if (i < 0 || i > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

BigInt IntPolynomial::evaluate(const BigInt& x) const
{
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double IntPolynomial::evaluate(double x) const
{
    long double acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->convert_to<long double>();
    return static_cast<double>(acc);
}

double IntPolynomial::evaluation_scale(double x) const
{
    long double acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * std::abs(x) + abs(*it).convert_to<long double>();
    }
    return static_cast<double>(acc);
}

std::pair<IntPolynomial, BigInt> IntPolynomial::divide_linear(const BigInt& r) const
{
    if (coeffs_.empty()) return {IntPolynomial{}, BigInt(0)};
    std::vector<BigInt> q(coeffs_.size() - 1);
    BigInt carry = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        carry = carry * r + coeffs_[i];
        if (i > 0) q[i - 1] = carry;
    }
    return {IntPolynomial(std::move(q)), carry};
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::divmod(const IntPolynomial& d) const
{
    if (!d.is_monic()) throw InvalidArgument("divmod requires a monic divisor");
    std::vector<BigInt> rem = coeffs_;
    const int dd = d.degree();
    if (degree() < dd) return {IntPolynomial{}, *this};
    std::vector<BigInt> q(static_cast<std::size_t>(degree() - dd) + 1);
    for (int i = degree(); i >= dd; --i) {
        const BigInt c = rem[static_cast<std::size_t>(i)];
        q[static_cast<std::size_t>(i - dd)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= c * d.coeffs_[static_cast<std::size_t>(j)];
    }
    return {IntPolynomial(std::move(q)), IntPolynomial(std::move(rem))};
}

std::string IntPolynomial::to_string() const
{
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const BigInt mag = abs(c);
        if (first) out << (c < 0 ? "-" : "");
        else out << (c < 0 ? " - " : " + ");
        if (mag != 1 || i == 0) out << mag;
        if (i >= 1) out << "x";
        if (i >= 2) out << "^" << i;
        first = false;
    }
    return out.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b)
{
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b)
{
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(c));
}

IntegerRootSplit integer_roots(const IntPolynomial& p, long long root_bound)
{
    IntegerRootSplit out;
    if (p.is_zero()) throw InvalidArgument("the zero polynomial has no finite root set");

    // Strip x^m.
    int zeros = 0;
    while (p.coeff(zeros) == 0) ++zeros;
    std::vector<BigInt> rest(p.coeffs().begin() + zeros, p.coeffs().end());
    IntPolynomial q(std::move(rest));
    out.roots.assign(static_cast<std::size_t>(zeros), BigInt(0));

    if (root_bound < 0) {
        // Fujiwara: |z| <= 2 max(|a_{n-1}/a_n|, |a_{n-2}/a_n|^{1/2}, ..., |a_0/(2 a_n)|^{1/n}).
        const int n = q.degree();
        const double lead = log2_abs(q.leading());
        double worst = -INFINITY;
        for (int i = 1; i <= n; ++i) {
            const BigInt& c = q.coeffs()[static_cast<std::size_t>(n - i)];
            if (c == 0) continue;
            double l = log2_abs(c) - lead;
            if (i == n) l -= 1.0;
            worst = std::max(worst, l / i);
        }
        const double bound = std::isfinite(worst) ? 2.0 * std::exp2(worst) : 0.0;
        if (bound > 1e8) throw InvalidArgument("integer root bound too large for a divisor search");
        root_bound = static_cast<long long>(std::ceil(bound)) + 1;
    }

    for (long long mag = 1; mag <= root_bound && q.degree() > 0; ++mag) {
        for (long long r : {-mag, mag}) {
            while (q.degree() > 0) {
                if (q.coeff(0) % r != 0) break;
                auto [quot, rem] = q.divide_linear(BigInt(r));
                if (rem != 0) break;
                q = std::move(quot);
                out.roots.emplace_back(r);
            }
        }
    }
    std::sort(out.roots.begin(), out.roots.end());
    out.cofactor = std::move(q);
    return out;
}

} // namespace qwmix
