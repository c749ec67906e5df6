#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hallforge/qlinalg/field.hpp"

namespace hallforge {

/// Dense matrix over a finite field.
///
/// A matrix remembers its field by pointer; fields are interned so the
/// pointer is stable.  Empty matrices (any dimension zero) may carry a null
/// field; they appear as automorphism groups of zero objects and of points.
class Matrix {
public:
    Matrix() = default;
    Matrix(const FiniteField* field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    Matrix(const FiniteField& field, std::size_t rows, std::size_t cols) : Matrix(&field, rows, cols) {}

    static Matrix identity(const FiniteField* field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static Matrix identity(const FiniteField& field, std::size_t n) { return identity(&field, n); }

    static Matrix from_rows(const FiniteField& field, const std::vector<std::vector<int>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.front().size();
        Matrix m(field, r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw usage_error("ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) {
                int v = rows[i][j];
                if (v < 0 || v >= field.order()) throw usage_error("matrix entry outside field");
                m.at(i, j) = static_cast<Element>(v);
            }
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    const FiniteField* field() const { return field_; }
    const std::vector<Element>& data() const { return data_; }

    Element operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Element& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
    friend bool operator<(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
        if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
        return a.data_ < b.data_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw diagram_error("matrix product dimension mismatch");
        const FiniteField* f = a.field_ ? a.field_ : b.field_;
        Matrix r(f, a.rows_, b.cols_);
        if (a.cols_ == 0 || r.data_.empty()) return r;
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                Element x = a(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    Element y = b(k, j);
                    if (y != 0) r.at(i, j) = f->add(r(i, j), f->mul(x, y));
                }
            }
        return r;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw diagram_error("matrix sum dimension mismatch");
        const FiniteField* f = a.field_ ? a.field_ : b.field_;
        Matrix r(f, a.rows_, a.cols_);
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = f->add(a.data_[i], b.data_[i]);
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw diagram_error("matrix difference dimension mismatch");
        const FiniteField* f = a.field_ ? a.field_ : b.field_;
        Matrix r(f, a.rows_, a.cols_);
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = f->sub(a.data_[i], b.data_[i]);
        return r;
    }
    Matrix scaled(Element s) const {
        Matrix r = *this;
        for (auto& x : r.data_) x = field_->mul(x, s);
        return r;
    }

    bool is_zero() const {
        for (auto x : data_)
            if (x != 0) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = (*this)(i, j);
        return t;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        if (r0 + nr > rows_ || c0 + nc > cols_) throw diagram_error("matrix block out of range");
        Matrix b(field_, nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) b.at(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
        if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw diagram_error("matrix block out of range");
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) at(r0 + i, c0 + j) = b(i, j);
    }

    /// Selects the given rows and columns (in the given order).
    Matrix submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
        Matrix b(field_, rs.size(), cs.size());
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < cs.size(); ++j) b.at(i, j) = (*this)(rs[i], cs[j]);
        return b;
    }

    static Matrix block_diag(const Matrix& a, const Matrix& b) {
        const FiniteField* f = a.field_ ? a.field_ : b.field_;
        Matrix r(f, a.rows_ + b.rows_, a.cols_ + b.cols_);
        r.set_block(0, 0, a);
        r.set_block(a.rows_, a.cols_, b);
        return r;
    }
    static Matrix block_diag(const std::vector<Matrix>& blocks) {
        Matrix r;
        for (const auto& b : blocks) r = block_diag(r, b);
        return r;
    }

    /// Vertical concatenation [a; b].
    static Matrix stack(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.cols_ && a.rows_ != 0 && b.rows_ != 0) throw diagram_error("stack: column mismatch");
        const std::size_t c = a.rows_ != 0 ? a.cols_ : b.cols_;
        Matrix r(a.field_ ? a.field_ : b.field_, a.rows_ + b.rows_, c);
        if (a.rows_) r.set_block(0, 0, a);
        if (b.rows_) r.set_block(a.rows_, 0, b);
        return r;
    }
    /// Horizontal concatenation [a b].
    static Matrix concat(const Matrix& a, const Matrix& b) { return stack(a.transpose(), b.transpose()).transpose(); }

    /// Reduced row-echelon form; pivot columns are written to `pivots` if given.
    Matrix rref(std::vector<std::size_t>* pivots = nullptr) const {
        Matrix m = *this;
        std::vector<std::size_t> piv;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t sel = rows_;
            for (std::size_t r = row; r < rows_; ++r)
                if (m(r, col) != 0) {
                    sel = r;
                    break;
                }
            if (sel == rows_) continue;
            if (sel != row)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(row, j));
            Element s = field_->inv(m(row, col));
            for (std::size_t j = 0; j < cols_; ++j) m.at(row, j) = field_->mul(m(row, j), s);
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == row) continue;
                Element c = m(r, col);
                if (c == 0) continue;
                for (std::size_t j = 0; j < cols_; ++j) m.at(r, j) = field_->sub(m(r, j), field_->mul(c, m(row, j)));
            }
            piv.push_back(col);
            ++row;
        }
        if (pivots) *pivots = std::move(piv);
        return m;
    }

    std::size_t rank() const {
        if (empty()) return 0;
        std::vector<std::size_t> piv;
        rref(&piv);
        return piv.size();
    }

    std::optional<Matrix> inverse() const {
        if (rows_ != cols_) return std::nullopt;
        if (rows_ == 0) return *this;
        Matrix aug = concat(*this, identity(field_, rows_));
        std::vector<std::size_t> piv;
        Matrix r = aug.rref(&piv);
        if (piv.size() < rows_ || piv[rows_ - 1] >= rows_) return std::nullopt;
        return r.block(0, rows_, rows_, rows_);
    }

    Matrix inverse_or_throw() const {
        auto inv = inverse();
        if (!inv) throw diagram_error("matrix is not invertible");
        return *inv;
    }

    /// Basis of the right null space {x : A x = 0}, one basis vector per column.
    Matrix kernel() const {
        std::vector<std::size_t> piv;
        Matrix r = rref(&piv);
        std::vector<bool> is_pivot(cols_, false);
        for (auto p : piv) is_pivot[p] = true;
        std::vector<std::size_t> free;
        for (std::size_t j = 0; j < cols_; ++j)
            if (!is_pivot[j]) free.push_back(j);
        Matrix k(field_, cols_, free.size());
        for (std::size_t f = 0; f < free.size(); ++f) {
            k.at(free[f], f) = 1;
            for (std::size_t i = 0; i < piv.size(); ++i) k.at(piv[i], f) = field_->neg(r(i, free[f]));
        }
        return k;
    }

    /// Row-major entry string using one hex digit per entry (q <= 16).
    std::string digits() const {
        static const char* hex = "0123456789abcdef";
        std::string s;
        s.reserve(data_.size());
        for (auto x : data_) s.push_back(hex[x]);
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        os << '[';
        for (std::size_t i = 0; i < m.rows_; ++i) {
            if (i) os << "; ";
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? " " : "") << int(m(i, j));
        }
        return os << ']';
    }

private:
    const FiniteField* field_ = nullptr;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Element> data_;
};

struct MatrixHash {
    std::size_t operator()(const Matrix& m) const noexcept {
        std::size_t h = 1469598103934665603ull ^ (m.rows() * 131 + m.cols());
        for (auto x : m.data()) h = (h ^ x) * 1099511628211ull;
        return h;
    }
};

}  // namespace hallforge
