#pragma once

#include <optional>
#include <vector>

#include "nakalg/exact_matrix.hpp"
#include "nakalg/permutation.hpp"

namespace nakalg {

// M = u1 * matrix(p) * u2 with u1, u2 upper triangular, p the row-permutation of P.
struct BruhatFactors {
    ExactMatrix u1;
    Permutation p;
    ExactMatrix u2;
};

// Permutation matrix with entry 1 at (i, p(i)), reading p as a row-permutation.
inline ExactMatrix permutation_matrix(const Permutation& p) {
    const int n = p.size();
    ExactMatrix m(n, n);
    for (int i = 1; i <= n; ++i) m(i - 1, p.of(i) - 1) = 1;
    return m;
}

// Reads the row-permutation off a 0/1 permutation matrix.
inline Permutation row_permutation_of(const ExactMatrix& m) {
    if (!m.square()) throw std::invalid_argument("not a permutation matrix");
    const int n = m.rows();
    std::vector<int> im(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rat& e = m(i, j);
            if (e == 0) continue;
            if (e != 1 || im[static_cast<size_t>(i)] != 0)
                throw std::invalid_argument("not a permutation matrix");
            im[static_cast<size_t>(i)] = j + 1;
        }
    return Permutation(std::move(im));
}

namespace detail {

// Rank of the submatrix of m with rows [r0, r1) and the given columns (0-based).
inline int rank_of_selection(const ExactMatrix& m, int r0, int r1, const std::vector<int>& cols) {
    ExactMatrix sub(r1 - r0, static_cast<int>(cols.size()));
    for (int i = r0; i < r1; ++i)
        for (size_t c = 0; c < cols.size(); ++c) sub(i - r0, static_cast<int>(c)) = m(i, cols[c]);
    return rank_exact(sub);
}

inline void require_invertible(const ExactMatrix& m) {
    if (!m.square()) throw std::invalid_argument("Bruhat decomposition needs a square matrix");
    if (determinant(m) == 0) throw std::invalid_argument("Bruhat decomposition needs an invertible matrix");
}

// Rank of rows [r0,r1) over columns `base` plus optionally one extra column.
inline int rank_of_selection_cols(const ExactMatrix& m, int r0, int r1, const std::vector<int>& base,
                                  int extra) {
    std::vector<int> cols = base;
    if (extra >= 0) cols.push_back(extra);
    return rank_of_selection(m, r0, r1, cols);
}

}  // namespace detail

// p_c(i) = max{ j : column i restricted to rows j..n is not in the span of
// columns 1..i-1 restricted to the same rows }.
inline Permutation bruhat_column_permutation(const ExactMatrix& m) {
    detail::require_invertible(m);
    const int n = m.rows();
    std::vector<int> im(static_cast<size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        std::vector<int> prev;
        for (int k = 0; k < i - 1; ++k) prev.push_back(k);
        for (int j = n; j >= 1; --j) {
            const int r0 = detail::rank_of_selection_cols(m, j - 1, n, prev, -1);
            const int r1 = detail::rank_of_selection_cols(m, j - 1, n, prev, i - 1);
            if (r1 > r0) { im[static_cast<size_t>(i - 1)] = j; break; }
        }
    }
    return Permutation(std::move(im));
}

// p_r(i) = min{ j : row i restricted to columns 1..j is not in the span of
// rows i+1..n restricted to the same columns }.
inline Permutation bruhat_row_permutation(const ExactMatrix& m) {
    detail::require_invertible(m);
    const int n = m.rows();
    std::vector<int> im(static_cast<size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            ExactMatrix below(n - i + 1, j);
            int r = 0;
            for (int k = i; k < n; ++k, ++r)
                for (int c = 0; c < j; ++c) below(r, c) = m(k, c);
            for (int c = 0; c < j; ++c) below(r, c) = m(i - 1, c);
            ExactMatrix strict(n - i, j);
            for (int k = 0; k < n - i; ++k)
                for (int c = 0; c < j; ++c) strict(k, c) = below(k, c);
            if (rank_exact(below) > rank_exact(strict)) {
                im[static_cast<size_t>(i - 1)] = j;
                break;
            }
        }
    }
    return Permutation(std::move(im));
}

namespace detail {

inline int leading_column(const ExactMatrix& m, int row) {
    for (int j = 0; j < m.cols(); ++j)
        if (m(row, j) != 0) return j;
    return -1;
}

}  // namespace detail

// M = U1 P U2.  Eliminates from the bottom row upward using only additions of
// lower rows to higher ones, so the accumulated left factor stays upper
// triangular; P is then read off the leading entries.
inline BruhatFactors bruhat_factorize(const ExactMatrix& m) {
    detail::require_invertible(m);
    const int n = m.rows();
    ExactMatrix work = m;
    ExactMatrix u1 = ExactMatrix::identity(n);
    std::vector<int> lead(static_cast<size_t>(n), -1);
    for (int i = n - 1; i >= 0; --i) {
        for (;;) {
            const int l = detail::leading_column(work, i);
            if (l < 0) throw TheoremViolation("row vanished while factorizing an invertible matrix");
            int clash = -1;
            for (int j = i + 1; j < n; ++j)
                if (lead[static_cast<size_t>(j)] == l) { clash = j; break; }
            if (clash < 0) {
                lead[static_cast<size_t>(i)] = l;
                break;
            }
            const Rat f = work(i, l) / work(clash, l);
            for (int c = l; c < n; ++c) work(i, c) -= f * work(clash, c);
            for (int r = 0; r <= i; ++r) u1(r, clash) += f * u1(r, i);
        }
    }
    std::vector<int> im(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) im[static_cast<size_t>(i)] = lead[static_cast<size_t>(i)] + 1;
    Permutation p(std::move(im));
    // U2 = P^{-1} * work; row j of U2 is row p^{-1}(j) of work.
    Permutation pinv = p.inverse();
    ExactMatrix u2(n, n);
    for (int j = 1; j <= n; ++j)
        for (int c = 0; c < n; ++c) u2(j - 1, c) = work(pinv.of(j) - 1, c);
    return BruhatFactors{std::move(u1), std::move(p), std::move(u2)};
}

// Returns the leading-entry permutation p (p(i) = column of the leftmost
// nonzero entry of row i) when it is a bijection and reordering the rows by p
// gives an upper triangular matrix with nonzero diagonal; absent otherwise.
inline std::optional<Permutation> is_permutation_times_upper(const ExactMatrix& m) {
    if (!m.square()) throw std::invalid_argument("square matrix required");
    const int n = m.rows();
    std::vector<int> im(static_cast<size_t>(n), 0);
    std::vector<char> used(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        const int l = detail::leading_column(m, i);
        if (l < 0 || used[static_cast<size_t>(l)]) return std::nullopt;
        used[static_cast<size_t>(l)] = 1;
        im[static_cast<size_t>(i)] = l + 1;
    }
    Permutation p(std::move(im));
    for (int i = 0; i < n; ++i) {
        const int r = p.of(i + 1) - 1;  // row i lands in row r of the reordered matrix
        for (int j = 0; j < r; ++j)
            if (m(i, j) != 0) return std::nullopt;
        if (m(i, r) == 0) return std::nullopt;
    }
    return p;
}

}  // namespace nakalg
