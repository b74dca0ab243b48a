#include "asklab/int_matrix.hpp"

#include <cstdlib>

namespace asklab {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::mul(const IntMatrix& rhs) const {
    IntMatrix r(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int t = 0; t < cols_; ++t) {
            const Int& v = at(i, t);
            if (v == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) r.at(i, j) += v * rhs.at(t, j);
        }
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool IntMatrix::is_zero() const {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) return false;
    return true;
}

namespace {

struct SmithState {
    IntMatrix b;
    IntMatrix finv;  // tracks the inverse of the accumulated column transform

    void swap_rows(int i, int j) {
        for (int c = 0; c < b.cols(); ++c) std::swap(b.at(i, c), b.at(j, c));
    }
    void swap_cols(int i, int j) {
        for (int r = 0; r < b.rows(); ++r) std::swap(b.at(r, i), b.at(r, j));
        for (int c = 0; c < finv.cols(); ++c) std::swap(finv.at(i, c), finv.at(j, c));
    }
    void row_sub(int dst, int src, const Int& m) {  // row_dst -= m * row_src
        if (m == 0) return;
        for (int c = 0; c < b.cols(); ++c) b.at(dst, c) -= m * b.at(src, c);
    }
    void col_sub(int dst, int src, const Int& m) {  // col_dst -= m * col_src
        if (m == 0) return;
        for (int r = 0; r < b.rows(); ++r) b.at(r, dst) -= m * b.at(r, src);
        // (I - m E_{src,dst})^{-1} = I + m E_{src,dst} applied on the left
        for (int c = 0; c < finv.cols(); ++c) finv.at(src, c) += m * finv.at(dst, c);
    }
    void negate_row(int i) {
        for (int c = 0; c < b.cols(); ++c) b.at(i, c) = -b.at(i, c);
    }
};

// Diagonalises b in place; returns the invariant factors.
std::vector<Int> run_smith(SmithState& s) {
    IntMatrix& b = s.b;
    const int m = b.rows(), n = b.cols();
    std::vector<Int> inv;
    for (int t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            // smallest nonzero |entry| in the trailing submatrix, ties by (i, j)
            int pi = -1, pj = -1;
            Int best;
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j) {
                    const Int& v = b.at(i, j);
                    if (v == 0) continue;
                    Int av = abs(v);
                    if (pi < 0 || av < best) {
                        best = av;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) return inv;  // trailing submatrix is zero
            if (pi != t) s.swap_rows(pi, t);
            if (pj != t) s.swap_cols(pj, t);
            if (b.at(t, t) < 0) s.negate_row(t);

            bool clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (b.at(i, t) == 0) continue;
                Int quo;
                mpz_fdiv_q(quo.get_mpz_t(), b.at(i, t).get_mpz_t(), b.at(t, t).get_mpz_t());
                s.row_sub(i, t, quo);
                if (b.at(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < n; ++j) {
                if (b.at(t, j) == 0) continue;
                Int quo;
                mpz_fdiv_q(quo.get_mpz_t(), b.at(t, j).get_mpz_t(), b.at(t, t).get_mpz_t());
                s.col_sub(j, t, quo);
                if (b.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;  // leftover remainders give a smaller pivot

            // force divisibility of the trailing submatrix by the pivot
            bool fixed = false;
            for (int i = t + 1; i < m && !fixed; ++i)
                for (int j = t + 1; j < n && !fixed; ++j)
                    if (b.at(i, j) % b.at(t, t) != 0) {
                        s.row_sub(t, i, Int(-1));  // row_t += row_i
                        fixed = true;
                    }
            if (!fixed) break;
        }
        inv.push_back(b.at(t, t));
    }
    return inv;
}

}  // namespace

std::vector<Int> smith_invariants(const IntMatrix& a) {
    SmithState s{a, IntMatrix::identity(a.cols())};
    return run_smith(s);
}

SaturationResult saturation_basis(const IntMatrix& a) {
    SmithState s{a, IntMatrix::identity(a.cols())};
    std::vector<Int> inv = run_smith(s);
    int r = static_cast<int>(inv.size());
    IntMatrix basis(r, a.cols());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < a.cols(); ++j) basis.at(i, j) = s.finv.at(i, j);
    Int index = 1;
    for (const Int& d : inv) index *= d;
    return {std::move(basis), index};
}

int rational_rank(const IntMatrix& a) {
    const int m = a.rows(), n = a.cols();
    std::vector<Rat> w(static_cast<std::size_t>(m) * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) w[static_cast<std::size_t>(i) * n + j] = Rat(a.at(i, j));
    int rank = 0;
    for (int col = 0; col < n && rank < m; ++col) {
        int pr = -1;
        for (int i = rank; i < m; ++i)
            if (w[static_cast<std::size_t>(i) * n + col] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != rank)
            for (int j = col; j < n; ++j)
                std::swap(w[static_cast<std::size_t>(rank) * n + j],
                          w[static_cast<std::size_t>(pr) * n + j]);
        Rat pivot = w[static_cast<std::size_t>(rank) * n + col];
        for (int i = rank + 1; i < m; ++i) {
            Rat factor = w[static_cast<std::size_t>(i) * n + col] / pivot;
            if (factor == 0) continue;
            for (int j = col; j < n; ++j)
                w[static_cast<std::size_t>(i) * n + j] -=
                    factor * w[static_cast<std::size_t>(rank) * n + j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace asklab
