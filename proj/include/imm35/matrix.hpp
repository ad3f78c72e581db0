#pragma once
// Dense integer matrices over exact unbounded integers. Desk-scale chain
// complexes only; no sparse formats, no performance tuning beyond skipping
// zero entries.

#include "imm35/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

namespace imm35 {

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw std::invalid_argument("IntMatrix: ragged initializer");
            for (const auto& x : r)
                data_.push_back(x);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const = default;

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != 0)
                return false;
        return true;
    }

    IntMatrix transposed() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    // Elementary row/column operations (the only mutations the reductions use).
    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (std::size_t k = 0; k < cols_; ++k)
            std::swap((*this)(i, k), (*this)(j, k));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (std::size_t k = 0; k < rows_; ++k)
            std::swap((*this)(k, i), (*this)(k, j));
    }
    // row i += f * row j
    void add_row_multiple(std::size_t i, std::size_t j, const Int& f) {
        if (f == 0)
            return;
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& src = (*this)(j, k);
            if (src != 0)
                (*this)(i, k) += f * src;
        }
    }
    // col i += f * col j
    void add_col_multiple(std::size_t i, std::size_t j, const Int& f) {
        if (f == 0)
            return;
        for (std::size_t k = 0; k < rows_; ++k) {
            const Int& src = (*this)(k, j);
            if (src != 0)
                (*this)(k, i) += f * src;
        }
    }
    void negate_row(std::size_t i) {
        for (std::size_t k = 0; k < cols_; ++k)
            (*this)(i, k) = -(*this)(i, k);
    }
    void negate_col(std::size_t j) {
        for (std::size_t k = 0; k < rows_; ++k)
            (*this)(k, j) = -(*this)(k, j);
    }

    std::vector<Int> row(std::size_t i) const {
        std::vector<Int> r(cols_);
        for (std::size_t k = 0; k < cols_; ++k)
            r[k] = (*this)(i, k);
        return r;
    }
    std::vector<Int> col(std::size_t j) const {
        std::vector<Int> c(rows_);
        for (std::size_t k = 0; k < rows_; ++k)
            c[k] = (*this)(k, j);
        return c;
    }

    // Submatrix by row/column index lists.
    IntMatrix select(const std::vector<std::size_t>& row_idx,
                     const std::vector<std::size_t>& col_idx) const {
        IntMatrix m(row_idx.size(), col_idx.size());
        for (std::size_t i = 0; i < row_idx.size(); ++i)
            for (std::size_t j = 0; j < col_idx.size(); ++j)
                m(i, j) = (*this)(row_idx[i], col_idx[j]);
        return m;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("IntMatrix: dimension mismatch in product");
        IntMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Int& aik = a(i, k);
                if (aik == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const Int& bkj = b(k, j);
                    if (bkj != 0)
                        c(i, j) += aik * bkj;
                }
            }
        return c;
    }

    friend std::ostream& operator<<(std::ostream& out, const IntMatrix& m) {
        for (std::size_t i = 0; i < m.rows_; ++i) {
            out << (i == 0 ? "[" : " ");
            for (std::size_t j = 0; j < m.cols_; ++j)
                out << (j == 0 ? "[" : ", ") << m(i, j);
            out << "]" << (i + 1 == m.rows_ ? "]" : "\n");
        }
        if (m.rows_ == 0)
            out << "[]";
        return out;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

inline std::vector<Int> operator*(const IntMatrix& a, const std::vector<Int>& x) {
    if (a.cols() != x.size())
        throw std::invalid_argument("IntMatrix: dimension mismatch in matrix-vector product");
    std::vector<Int> y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a(i, k);
            if (aik != 0 && x[k] != 0)
                y[i] += aik * x[k];
        }
    return y;
}

inline bool all_zero(const std::vector<Int>& v) {
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

}  // namespace imm35
