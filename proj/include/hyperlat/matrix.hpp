#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>

#include "hyperlat/arith.hpp"

namespace hyperlat {

// Dense row-major matrix over an exact scalar (Int or Rat).
template <class T>
class MatrixT {
public:
    MatrixT() = default;

    MatrixT(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
        if (rows == 0 || cols == 0) throw ShapeError("matrix dimensions must be positive");
    }

    MatrixT(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        if (rows_ == 0) throw ShapeError("matrix dimensions must be positive");
        cols_ = init.begin()->size();
        if (cols_ == 0) throw ShapeError("matrix dimensions must be positive");
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw ShapeError("ragged initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static MatrixT identity(std::size_t n) {
        MatrixT m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<T>& entries() const { return data_; }

    bool operator==(const MatrixT& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }
    bool operator!=(const MatrixT& other) const { return !(*this == other); }

    // Lexicographic order on (rows, cols, entries); used for canonical
    // ordering of enumerated group elements.
    bool operator<(const MatrixT& other) const {
        if (rows_ != other.rows_) return rows_ < other.rows_;
        if (cols_ != other.cols_) return cols_ < other.cols_;
        for (std::size_t k = 0; k < data_.size(); ++k) {
            int c = cmp(data_[k], other.data_[k]);
            if (c != 0) return c < 0;
        }
        return false;
    }

    MatrixT operator*(const MatrixT& other) const {
        if (cols_ != other.rows_) throw ShapeError("matrix product shape mismatch");
        MatrixT out(rows_, other.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
            }
        return out;
    }

    MatrixT operator+(const MatrixT& other) const {
        require_same_shape(other);
        MatrixT out = *this;
        for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += other.data_[k];
        return out;
    }

    MatrixT operator-(const MatrixT& other) const {
        require_same_shape(other);
        MatrixT out = *this;
        for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] -= other.data_[k];
        return out;
    }

    MatrixT operator-() const {
        MatrixT out = *this;
        for (auto& x : out.data_) x = -x;
        return out;
    }

    MatrixT transpose() const {
        MatrixT out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != cols_) throw ShapeError("matrix-vector shape mismatch");
        std::vector<T> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            T acc(0);
            for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
            out[i] = std::move(acc);
        }
        return out;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != 0) return false;
        return true;
    }

    bool is_identity() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

private:
    void require_same_shape(const MatrixT& other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_) throw ShapeError("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = MatrixT<Int>;
using RatMatrix = MatrixT<Rat>;

inline RatMatrix to_rat_matrix(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
    return out;
}

}  // namespace hyperlat
