#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ring.hpp"

namespace dowra {

/// Dense matrix of ring elements. Used for Riordan matrix realizations,
/// production matrices and Hankel matrices; at desk scale sparsity buys nothing.
template <coeff_ring R>
class dense_matrix {
  public:
    dense_matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(checked_size(rows, cols)) {}

    static dense_matrix identity(int n) {
        dense_matrix m(n, n);
        for (int i = 0; i < n; ++i) {
            m(i, i) = R::from_int(1);
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    R& operator()(int i, int j) { return a_.at(index(i, j)); }
    const R& operator()(int i, int j) const { return a_.at(index(i, j)); }

    friend bool operator==(const dense_matrix& a, const dense_matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const dense_matrix& a, const dense_matrix& b) { return !(a == b); }

    friend dense_matrix operator*(const dense_matrix& a, const dense_matrix& b) {
        if (a.cols_ != b.rows_) {
            throw std::invalid_argument("dense_matrix: dimension mismatch in product");
        }
        dense_matrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    if (b(k, j).is_zero()) continue;
                    r(i, j) = r(i, j) + a(i, k) * b(k, j);
                }
            }
        }
        return r;
    }

    friend dense_matrix operator-(const dense_matrix& a, const dense_matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
            throw std::invalid_argument("dense_matrix: dimension mismatch");
        }
        dense_matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < r.a_.size(); ++i) {
            r.a_[i] = a.a_[i] - b.a_[i];
        }
        return r;
    }

    bool is_lower_triangular() const {
        for (int i = 0; i < rows_; ++i) {
            for (int j = i + 1; j < cols_; ++j) {
                if (!(*this)(i, j).is_zero()) return false;
            }
        }
        return true;
    }

    /// Inverse of a lower-triangular matrix with unit diagonal entries,
    /// by forward substitution; stays in the coefficient ring.
    dense_matrix inverse_lower_triangular() const {
        if (rows_ != cols_ || !is_lower_triangular()) {
            throw std::invalid_argument("dense_matrix: not lower triangular");
        }
        dense_matrix inv(rows_, rows_);
        for (int j = 0; j < rows_; ++j) {
            if (!(*this)(j, j).is_unit()) {
                throw std::domain_error("dense_matrix: non-unit diagonal entry at (" +
                                        std::to_string(j) + "," + std::to_string(j) + ")");
            }
        }
        for (int i = 0; i < rows_; ++i) {
            const R di = (*this)(i, i).unit_inv();
            inv(i, i) = di;
            for (int j = i - 1; j >= 0; --j) {
                R acc = R();
                for (int k = j; k < i; ++k) {
                    if ((*this)(i, k).is_zero() || inv(k, j).is_zero()) continue;
                    acc = acc + (*this)(i, k) * inv(k, j);
                }
                inv(i, j) = -(acc * di);
            }
        }
        return inv;
    }

    dense_matrix top_left_block(int n) const {
        dense_matrix r(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                r(i, j) = (*this)(i, j);
            }
        }
        return r;
    }

    /// One row per line, entries tab-separated in canonical form.
    std::string to_text() const {
        std::string out;
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) {
                if (j > 0) out += '\t';
                out += (*this)(i, j).to_string();
            }
            out += '\n';
        }
        return out;
    }

  private:
    static std::size_t checked_size(int rows, int cols) {
        if (rows < 0 || cols < 0) {
            throw std::invalid_argument("dense_matrix: negative dimension");
        }
        return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    }

    std::size_t index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_) {
            throw std::out_of_range("dense_matrix: index out of range");
        }
        return static_cast<std::size_t>(i) * cols_ + j;
    }

    int rows_, cols_;
    std::vector<R> a_;
};

} // namespace dowra
