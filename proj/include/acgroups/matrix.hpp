#pragma once

// Square matrices over an exact ring element type (group ring elements,
// Laurent polynomials). Entries carry their own ring context, so the matrix
// itself only stores the grid.

#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace acgroups {

template <class Elem>
class Matrix {
public:
    Matrix() = default;

    Matrix(int n, const Elem& fill) : n_(n), cells_(static_cast<std::size_t>(n) * n, fill) {
        if (n < 1) throw std::invalid_argument("matrix size must be >= 1");
    }

    static Matrix identity(int n, const Elem& one, const Elem& zero) {
        Matrix m(n, zero);
        for (int i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    int size() const { return n_; }

    Elem& at(int i, int j) { return cells_[static_cast<std::size_t>(i) * n_ + j]; }
    const Elem& at(int i, int j) const { return cells_[static_cast<std::size_t>(i) * n_ + j]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
        Matrix r(a.n_, a.at(0, 0));
        for (int i = 0; i < a.n_; ++i)
            for (int j = 0; j < a.n_; ++j) {
                Elem sum = a.at(i, 0) * b.at(0, j);
                for (int k = 1; k < a.n_; ++k) sum += a.at(i, k) * b.at(k, j);
                r.at(i, j) = sum;
            }
        return r;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
        Matrix r = a;
        for (std::size_t idx = 0; idx < r.cells_.size(); ++idx) r.cells_[idx] += b.cells_[idx];
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.n_ == b.n_ && a.cells_ == b.cells_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    template <class Fn>
    auto map(Fn&& fn) const
        -> Matrix<std::decay_t<decltype(fn(std::declval<const Elem&>()))>> {
        using Out = std::decay_t<decltype(fn(std::declval<const Elem&>()))>;
        Matrix<Out> r(n_, fn(at(0, 0)));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r.at(i, j) = fn(at(i, j));
        return r;
    }

private:
    int n_ = 0;
    std::vector<Elem> cells_;
};

}  // namespace acgroups
