#pragma once

#include "murlab/algebraic.hpp"
#include "murlab/multipoly.hpp"
#include "murlab/rational.hpp"

#include <cstddef>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace murlab {

/// Largest matrix/graph dimension accepted by default.
inline constexpr std::size_t kMaxDimension = 64;

/// Dense row-major matrix over an exact scalar type.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) throw std::invalid_argument("matrix data size mismatch");
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    [[nodiscard]] std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    [[nodiscard]] const std::vector<T>& data() const { return data_; }

    [[nodiscard]] Matrix transpose() const {
        if (data_.empty()) return Matrix(cols_, rows_, std::vector<T>{});
        Matrix out(cols_, rows_, data_.front());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    [[nodiscard]] bool symmetric() const {
        if (!square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (!((*this)(i, j) == (*this)(j, i))) return false;
        return true;
    }

    /// Principal submatrix on the given (sorted, distinct) indices.
    [[nodiscard]] Matrix principal(std::span<const std::size_t> keep) const {
        std::vector<T> out;
        out.reserve(keep.size() * keep.size());
        for (std::size_t i : keep)
            for (std::size_t j : keep) out.push_back((*this)(i, j));
        return Matrix(keep.size(), keep.size(), std::move(out));
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using PMatrix = Matrix<MultiPoly3>;
using AMatrix = Matrix<AlgElement>;

inline QMatrix identity_matrix(std::size_t n) {
    QMatrix m(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

inline QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
    QMatrix out(a.rows(), b.cols(), Rational(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += x * b(k, j);
        }
    return out;
}

inline QMatrix operator+(QMatrix a, const QMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum dimension mismatch");
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) += b(i, j);
    return a;
}

inline QMatrix operator*(const Rational& s, QMatrix a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) *= s;
    return a;
}

/// Builds a rational matrix from integer rows; handy in tests and fixtures.
inline QMatrix qmatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    std::vector<Rational> data;
    data.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("ragged matrix literal");
        data.insert(data.end(), row.begin(), row.end());
    }
    return QMatrix(r, c, std::move(data));
}

inline QMatrix evaluate(const PMatrix& m, const Rational& beta, const Rational& gamma, const Rational& delta) {
    std::vector<Rational> data;
    data.reserve(m.rows() * m.cols());
    for (const auto& e : m.data()) data.push_back(e.eval(beta, gamma, delta));
    return QMatrix(m.rows(), m.cols(), std::move(data));
}

template <class T>
std::string to_string(const Matrix<T>& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ", ";
            if constexpr (requires { m(i, j).str(); })
                os << m(i, j).str();
            else
                os << m(i, j).rep().str("t");
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace murlab
