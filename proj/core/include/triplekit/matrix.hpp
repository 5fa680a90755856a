#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "triplekit/vec.hpp"

namespace triplekit {

/// Dense matrix over an exact field; also serves as a linear map in the
/// convention column j = image of the j-th basis vector.
template <ScalarField K>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, K::zero()) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = K::one();
        return m;
    }

    /// Map sending basis vector j to the given image vectors (as columns).
    static Matrix from_columns(const std::vector<Vec<K>>& cols) {
        if (cols.empty()) return Matrix(0, 0);
        Matrix m(cols.front().size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != m.rows_) throw DimError("ragged column list");
            for (std::size_t i = 0; i < m.rows_; ++i) m.at(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    K& at(std::size_t i, std::size_t j) { return data_.at(i * cols_ + j); }
    const K& at(std::size_t i, std::size_t j) const { return data_.at(i * cols_ + j); }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    Vec<K> apply(const Vec<K>& v) const {
        if (v.size() != cols_) throw DimError("matrix/vector dimension mismatch");
        Vec<K> r(rows_, K::zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
        return r;
    }

    Vec<K> column(std::size_t j) const {
        Vec<K> c(rows_, K::zero());
        for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
        return c;
    }

    /// Row-major flattening, used to treat operators as vectors when spanning.
    Vec<K> flatten() const { return data_; }

    K trace() const {
        if (rows_ != cols_) throw DimError("trace of non-square matrix");
        K t = K::zero();
        for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
        return t;
    }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        x.check_same_shape(y);
        Matrix r(x);
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += y.data_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        x.check_same_shape(y);
        Matrix r(x);
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= y.data_[i];
        return r;
    }
    Matrix operator-() const {
        Matrix r(*this);
        for (auto& x : r.data_) x = -x;
        return r;
    }
    friend Matrix operator*(const K& c, const Matrix& m) {
        Matrix r(m);
        for (auto& x : r.data_) x *= c;
        return r;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw DimError("matrix product dimension mismatch");
        Matrix r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const K& xik = x.at(i, k);
                if (xik.is_zero()) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) r.at(i, j) += xik * y.at(k, j);
            }
        return r;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i) s += ", ";
            s += "[";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) s += ", ";
                s += at(i, j).str();
            }
            s += "]";
        }
        return s + "]";
    }

  private:
    void check_same_shape(const Matrix& y) const {
        if (rows_ != y.rows_ || cols_ != y.cols_) throw DimError("matrix shape mismatch");
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<K> data_;
};

template <ScalarField K>
Matrix<K> commutator(const Matrix<K>& x, const Matrix<K>& y) {
    return x * y - y * x;
}

} // namespace triplekit
