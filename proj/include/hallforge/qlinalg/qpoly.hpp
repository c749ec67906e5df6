#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hallforge/errors.hpp"

namespace hallforge {

using BigInt = boost::multiprecision::cpp_int;

/// Integer polynomial in the formal variable q.
class QPolynomial {
public:
    QPolynomial() = default;
    QPolynomial(long long c) : coeffs_{BigInt(c)} { trim(); }  // NOLINT: constants convert implicitly
    explicit QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static QPolynomial monomial(std::size_t degree, const BigInt& c = 1) {
        std::vector<BigInt> v(degree + 1, 0);
        v[degree] = c;
        return QPolynomial(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    BigInt evaluate(const BigInt& q) const {
        BigInt r = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * q + *it;
        return r;
    }

    friend QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
        std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
        return QPolynomial(std::move(v));
    }
    friend QPolynomial operator-(const QPolynomial& a, const QPolynomial& b) {
        std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
        return QPolynomial(std::move(v));
    }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return QPolynomial(std::move(v));
    }
    QPolynomial& operator+=(const QPolynomial& o) { return *this = *this + o; }
    QPolynomial& operator*=(const QPolynomial& o) { return *this = *this * o; }

    friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const QPolynomial& a, const QPolynomial& b) { return !(a == b); }

    /// Exact division; throws if `d` does not divide this polynomial over Z.
    QPolynomial divide_exact(const QPolynomial& d) const {
        if (d.is_zero()) throw std::domain_error("QPolynomial division by zero");
        std::vector<BigInt> rem = coeffs_;
        if (rem.size() < d.coeffs_.size()) {
            if (is_zero()) return {};
            throw std::domain_error("QPolynomial division is not exact");
        }
        std::vector<BigInt> quot(rem.size() - d.coeffs_.size() + 1, 0);
        const BigInt& lead = d.coeffs_.back();
        for (std::size_t i = quot.size(); i-- > 0;) {
            const BigInt& top = rem[i + d.coeffs_.size() - 1];
            if (top == 0) continue;
            if (top % lead != 0) throw std::domain_error("QPolynomial division is not exact");
            BigInt c = top / lead;
            quot[i] = c;
            for (std::size_t j = 0; j < d.coeffs_.size(); ++j) rem[i + j] -= c * d.coeffs_[j];
        }
        for (const auto& r : rem)
            if (r != 0) throw std::domain_error("QPolynomial division is not exact");
        return QPolynomial(std::move(quot));
    }

    /// Renders as e.g. "q^4+q^3+2q^2+q+1".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            BigInt c = coeffs_[i];
            if (c == 0) continue;
            if (c < 0) {
                os << '-';
                c = -c;
            } else if (!first) {
                os << '+';
            }
            first = false;
            if (c != 1 || i == 0) os << c;
            if (i >= 1) os << 'q';
            if (i >= 2) os << '^' << i;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const QPolynomial& p) { return os << p.to_string(); }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<BigInt> coeffs_;
};

/// The q-binomial [n choose k] via the q-Pascal rule [n,k] = [n-1,k-1] + q^k [n-1,k].
inline QPolynomial gaussian_binomial(int n, int k) {
    if (n < 0 || k < 0) throw usage_error("gaussian_binomial: negative argument");
    if (k > n) throw usage_error("gaussian_binomial: k > n");
    std::vector<QPolynomial> row{QPolynomial(1)};
    for (int m = 1; m <= n; ++m) {
        std::vector<QPolynomial> next(static_cast<std::size_t>(m + 1));
        next[0] = 1;
        next[static_cast<std::size_t>(m)] = 1;
        for (int j = 1; j < m; ++j)
            next[static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(j - 1)] + QPolynomial::monomial(static_cast<std::size_t>(j)) * row[static_cast<std::size_t>(j)];
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

/// q-multinomial [d_1+...+d_r; d_1,...,d_r] as a product of binomials.
inline QPolynomial gaussian_multinomial(const std::vector<int>& parts) {
    QPolynomial r = 1;
    int total = 0;
    for (int d : parts) {
        total += d;
        r *= gaussian_binomial(total, d);
    }
    return r;
}

/// |GL_n(F_q)| as a polynomial in q.
inline QPolynomial general_linear_polynomial(int n) {
    QPolynomial r = 1;
    for (int i = 0; i < n; ++i)
        r *= QPolynomial::monomial(static_cast<std::size_t>(n)) - QPolynomial::monomial(static_cast<std::size_t>(i));
    return r;
}

}  // namespace hallforge
