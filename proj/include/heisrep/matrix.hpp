#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "types.hpp"

namespace heisrep {

/// Dense matrix over any exact ring type with value semantics. T{} must be the
/// additive zero; a multiplicative unit is passed explicitly where needed so
/// that rings whose elements carry context (group rings) work too.
template <class T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static DenseMatrix identity(std::size_t n, const T& one = T(1)) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    DenseMatrix operator+(const DenseMatrix& o) const {
        check_same_shape(o);
        DenseMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
        return r;
    }
    DenseMatrix operator-(const DenseMatrix& o) const {
        check_same_shape(o);
        DenseMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
        return r;
    }
    DenseMatrix operator*(const DenseMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
        DenseMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T{}) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r(i, j) = r(i, j) + a * o(k, j);
            }
        return r;
    }
    DenseMatrix operator*(const T& c) const {
        DenseMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * c;
        return r;
    }

    bool operator==(const DenseMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const DenseMatrix& o) const { return !(*this == o); }

    bool is_identity(const T& one = T(1)) const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != (i == j ? one : T{})) return false;
        return true;
    }
    bool is_zero() const {
        for (const auto& x : data_) if (!(x == T{})) return false;
        return true;
    }

    DenseMatrix pow(Int e, const T& one = T(1)) const {
        if (!is_square()) throw std::invalid_argument("pow: square matrix required");
        if (e < 0) throw std::invalid_argument("pow: negative exponent");
        DenseMatrix acc = identity(rows_, one);
        DenseMatrix base = *this;
        while (e > 0) {
            if ((e & 1) != 0) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    DenseMatrix transpose() const {
        DenseMatrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    template <class F>
    auto map(F&& f) const {
        using U = decltype(f(std::declval<const T&>()));
        DenseMatrix<U> r(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
        return r;
    }

    std::string str() const {
        std::ostringstream os;
        // column-aligned text render
        std::vector<std::string> cells(rows_ * cols_);
        std::vector<std::size_t> width(cols_, 0);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                cells[i * cols_ + j] = cell_str((*this)(i, j));
                width[j] = std::max(width[j], cells[i * cols_ + j].size());
            }
        for (std::size_t i = 0; i < rows_; ++i) {
            os << "[ ";
            for (std::size_t j = 0; j < cols_; ++j) {
                const std::string& s = cells[i * cols_ + j];
                os << std::string(width[j] - s.size(), ' ') << s << (j + 1 < cols_ ? "  " : " ");
            }
            os << "]\n";
        }
        return os.str();
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;

    void check_same_shape(const DenseMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }
    template <class U>
    static std::string cell_str(const U& x) {
        if constexpr (requires { x.str(); }) return x.str();
        else {
            std::ostringstream os;
            os << x;
            return os.str();
        }
    }
};

using IntMatrix = DenseMatrix<Int>;
using RatMatrix = DenseMatrix<Rat>;

/// Gauss-Jordan inverse over the rationals. Throws on singular input.
inline RatMatrix rat_inverse(const RatMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse: square matrix required");
    std::size_t n = m.rows();
    RatMatrix a = m, inv = RatMatrix::identity(n, Rat(1));
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == 0) ++piv;
        if (piv == n) throw std::domain_error("inverse: singular matrix");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        Rat d = a(col, col);
        for (std::size_t j = 0; j < n; ++j) { a(col, j) /= d; inv(col, j) /= d; }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            Rat f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

} // namespace heisrep
