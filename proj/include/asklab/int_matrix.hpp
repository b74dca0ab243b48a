#pragma once

#include <vector>

#include "asklab/rational.hpp"

namespace asklab {

// Dense integer matrix with arbitrary-precision entries. Normal-form pivoting
// can blow entries up well past machine words, so nothing here truncates.
class IntMatrix {
   public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Int& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    Int& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    IntMatrix mul(const IntMatrix& rhs) const;
    IntMatrix transpose() const;
    bool is_zero() const;

    bool operator==(const IntMatrix& rhs) const {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
    }

   private:
    int rows_, cols_;
    std::vector<Int> a_;
};

// Invariant factors d_1 | d_2 | ... | d_r of the Smith normal form, all
// positive, r = rank over the rationals.
std::vector<Int> smith_invariants(const IntMatrix& a);

struct SaturationResult {
    IntMatrix basis;  // rows form a basis of the saturation of the row lattice
    Int index;        // index of the row lattice inside its saturation
};

// Saturation of the lattice spanned by the rows of a: all v with kv in the
// lattice for some k >= 1. The index equals the product of the invariant
// factors; index 1 means the lattice was already saturated.
SaturationResult saturation_basis(const IntMatrix& a);

int rational_rank(const IntMatrix& a);

}  // namespace asklab
