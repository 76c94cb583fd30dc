#ifndef EXOTIC_MATRIX_HPP
#define EXOTIC_MATRIX_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace exotic {

// Dense row-major matrix over an exact scalar type (cpp_int, cpp_rational).
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t k = 0; k < n; ++k)
            m(k, k) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const
    {
        for (const auto &v : data_)
            if (v != 0)
                return false;
        return true;
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t(c, r) = (*this)(r, c);
        return t;
    }

    Matrix &operator+=(const Matrix &o)
    {
        same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k)
            data_[k] += o.data_[k];
        return *this;
    }
    Matrix &operator-=(const Matrix &o)
    {
        same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k)
            data_[k] -= o.data_[k];
        return *this;
    }
    Matrix &operator*=(const T &s)
    {
        for (auto &v : data_)
            v *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
    friend Matrix operator-(Matrix a)
    {
        for (auto &v : a.data_)
            v = -v;
        return a;
    }
    friend Matrix operator*(Matrix a, const T &s) { return a *= s; }
    friend Matrix operator*(const T &s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix &a, const Matrix &b)
    {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T &lhs = a(r, k);
                if (lhs == 0)
                    continue;
                for (std::size_t c = 0; c < b.cols_; ++c)
                    if (b(k, c) != 0)
                        out(r, c) += lhs * b(k, c);
            }
        return out;
    }

    std::vector<T> apply(std::span<const T> v) const
    {
        if (v.size() != cols_)
            throw std::invalid_argument("Matrix: vector length mismatch");
        std::vector<T> out(rows_, T(0));
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if ((*this)(r, c) != 0 && v[c] != 0)
                    out[r] += (*this)(r, c) * v[c];
        return out;
    }

    friend bool operator==(const Matrix &a, const Matrix &b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    void same_shape(const Matrix &o) const
    {
        if (o.rows_ != rows_ || o.cols_ != cols_)
            throw std::invalid_argument("Matrix: shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <class T>
Matrix<T> power(const Matrix<T> &m, unsigned k)
{
    Matrix<T> out = Matrix<T>::identity(m.rows());
    Matrix<T> base = m;
    while (k) {
        if (k & 1u)
            out = out * base;
        k >>= 1u;
        if (k)
            base = base * base;
    }
    return out;
}

template <class T>
bool is_nilpotent(const Matrix<T> &m)
{
    return m.square() && power(m, static_cast<unsigned>(m.rows())).is_zero();
}

// Inverse of a unipotent matrix: sum_k (I - A)^k.
template <class T>
Matrix<T> unipotent_inverse(const Matrix<T> &a)
{
    const auto n = a.rows();
    const Matrix<T> id = Matrix<T>::identity(n);
    const Matrix<T> nil = id - a;
    if (!is_nilpotent(nil))
        throw std::invalid_argument("unipotent_inverse: matrix is not unipotent");
    Matrix<T> out = id;
    Matrix<T> term = id;
    for (std::size_t k = 1; k < n; ++k) {
        term = term * nil;
        out += term;
    }
    return out;
}

} // namespace exotic

#endif
