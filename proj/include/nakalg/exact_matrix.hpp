#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nakalg/rational.hpp"

namespace nakalg {

// Dense matrix of exact rationals.  Arithmetic never rounds.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}

    ExactMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * static_cast<size_t>(cols), Rat(0)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    static ExactMatrix identity(int n) {
        ExactMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static ExactMatrix from_int_rows(const std::vector<std::vector<long>>& rows) {
        const int r = static_cast<int>(rows.size());
        const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
        ExactMatrix m(r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
                throw std::invalid_argument("ragged rows");
            for (int j = 0; j < c; ++j) m(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rat& operator()(int i, int j) { return entries_[idx(i, j)]; }
    const Rat& operator()(int i, int j) const { return entries_[idx(i, j)]; }

    bool operator==(const ExactMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

    ExactMatrix transpose() const {
        ExactMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    ExactMatrix operator-() const {
        ExactMatrix m(rows_, cols_);
        for (size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = -entries_[k];
        return m;
    }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch in product");
        ExactMatrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const Rat& aik = a(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < b.cols_; ++j)
                    if (b(k, j) != 0) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    bool is_upper_triangular_nonzero_diag() const {
        if (!square()) return false;
        for (int i = 0; i < rows_; ++i) {
            if ((*this)(i, i) == 0) return false;
            for (int j = 0; j < i; ++j)
                if ((*this)(i, j) != 0) return false;
        }
        return true;
    }

    bool is_lower_triangular() const {
        if (!square()) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != 0) return false;
        return true;
    }

    bool is_integer_matrix() const {
        for (const Rat& q : entries_)
            if (!is_integer(q)) return false;
        return true;
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < rows_; ++i) {
            s += "[";
            for (int j = 0; j < cols_; ++j) {
                if (j) s += " ";
                s += (*this)(i, j).get_str();
            }
            s += "]\n";
        }
        return s;
    }

private:
    size_t idx(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("matrix index");
        return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
    }

    int rows_;
    int cols_;
    std::vector<Rat> entries_;
};

// Fraction-free (Bareiss) determinant.
inline Rat determinant(const ExactMatrix& m) {
    if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return Rat(1);
    ExactMatrix a = m;
    Rat prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != 0) { piv = i; break; }
            if (piv < 0) return Rat(0);
            for (int j = k; j < n; ++j) std::swap(a(k, j), a(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

// Exact inverse via Gauss-Jordan.  Throws on singular input.
inline ExactMatrix inverse_exact(const ExactMatrix& m) {
    if (!m.square()) throw std::invalid_argument("inverse of non-square matrix");
    const int n = m.rows();
    ExactMatrix a = m;
    ExactMatrix inv = ExactMatrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (a(i, col) != 0) { piv = i; break; }
        if (piv < 0) throw std::invalid_argument("singular matrix has no inverse");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a(col, j), a(piv, j));
                std::swap(inv(col, j), inv(piv, j));
            }
        const Rat d = a(col, col);
        for (int j = 0; j < n; ++j) {
            a(col, j) /= d;
            inv(col, j) /= d;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            const Rat f = a(i, col);
            for (int j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

// Exact rank by Gaussian elimination over the rationals.
inline int rank_exact(ExactMatrix a) {
    const int rows = a.rows(), cols = a.cols();
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (a(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = col; j < cols; ++j) std::swap(a(rank, j), a(piv, j));
        for (int i = rank + 1; i < rows; ++i) {
            if (a(i, col) == 0) continue;
            const Rat f = a(i, col) / a(rank, col);
            for (int j = col; j < cols; ++j) a(i, j) -= f * a(rank, j);
        }
        ++rank;
    }
    return rank;
}

}  // namespace nakalg
