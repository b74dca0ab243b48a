#include "asklab/fq_matrix.hpp"

namespace asklab {

FqMatrix FqMatrix::identity(const FiniteField& field, int n) {
    FqMatrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
}

FqMatrix FqMatrix::mul(const FqMatrix& rhs) const {
    const FiniteField& k = *field_;
    FqMatrix r(k, rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int t = 0; t < cols_; ++t) {
            Elem v = at(i, t);
            if (v == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j)
                r.at(i, j) = k.add(r.at(i, j), k.mul(v, rhs.at(t, j)));
        }
    return r;
}

FqMatrix FqMatrix::transpose() const {
    FqMatrix r(*field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

FqMatrix FqMatrix::inverse() const {
    if (rows_ != cols_) throw InvalidInputError("inverse of a non-square matrix");
    const FiniteField& k = *field_;
    int n = rows_;
    FqMatrix a(*this), r = identity(k, n);
    for (int col = 0; col < n; ++col) {
        int pr = -1;
        for (int i = col; i < n; ++i)
            if (a.at(i, col) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) throw InvalidInputError("singular matrix");
        if (pr != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(col, j), a.at(pr, j));
                std::swap(r.at(col, j), r.at(pr, j));
            }
        Elem inv = k.inv(a.at(col, col));
        for (int j = 0; j < n; ++j) {
            a.at(col, j) = k.mul(a.at(col, j), inv);
            r.at(col, j) = k.mul(r.at(col, j), inv);
        }
        for (int i = 0; i < n; ++i) {
            if (i == col) continue;
            Elem factor = a.at(i, col);
            if (factor == 0) continue;
            for (int j = 0; j < n; ++j) {
                a.at(i, j) = k.sub(a.at(i, j), k.mul(factor, a.at(col, j)));
                r.at(i, j) = k.sub(r.at(i, j), k.mul(factor, r.at(col, j)));
            }
        }
    }
    return r;
}

int fq_rank_in_place(FiniteField::Elem* a, int rows, int cols, const FiniteField& k) {
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pr = -1;
        for (int i = rank; i < rows; ++i)
            if (a[i * cols + col] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != rank)
            for (int j = col; j < cols; ++j) std::swap(a[rank * cols + j], a[pr * cols + j]);
        FiniteField::Elem inv = k.inv(a[rank * cols + col]);
        for (int i = rank + 1; i < rows; ++i) {
            FiniteField::Elem lead = a[i * cols + col];
            if (lead == 0) continue;
            FiniteField::Elem factor = k.mul(lead, inv);
            a[i * cols + col] = 0;
            for (int j = col + 1; j < cols; ++j)
                a[i * cols + j] = k.sub(a[i * cols + j], k.mul(factor, a[rank * cols + j]));
        }
        ++rank;
    }
    return rank;
}

int fq_rank(const FqMatrix& m) {
    std::vector<FiniteField::Elem> buf = m.data();
    return fq_rank_in_place(buf.data(), m.rows(), m.cols(), m.field());
}

std::vector<FiniteField::Elem> row_times_matrix(const std::vector<FiniteField::Elem>& v,
                                                const FqMatrix& m) {
    const FiniteField& k = m.field();
    std::vector<FiniteField::Elem> r(m.cols(), 0);
    for (int i = 0; i < m.rows(); ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < m.cols(); ++j)
            r[j] = k.add(r[j], k.mul(v[i], m.at(i, j)));
    }
    return r;
}

}  // namespace asklab
