#pragma once

#include <vector>

#include "asklab/fields.hpp"

namespace asklab {

class FqMatrix {
   public:
    using Elem = FiniteField::Elem;

    FqMatrix(const FiniteField& field, int rows, int cols)
        : field_(&field), rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * cols, 0) {}

    static FqMatrix identity(const FiniteField& field, int n);

    const FiniteField& field() const { return *field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Elem at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    Elem& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const std::vector<Elem>& data() const { return a_; }
    std::vector<Elem>& data() { return a_; }

    FqMatrix mul(const FqMatrix& rhs) const;
    FqMatrix transpose() const;
    // Gauss-Jordan inverse; throws InvalidInputError on a singular matrix.
    FqMatrix inverse() const;

    bool operator==(const FqMatrix& rhs) const {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
    }

   private:
    const FiniteField* field_;
    int rows_, cols_;
    std::vector<Elem> a_;
};

// Row-echelon rank. Pivot choice is the first nonzero entry scanning rows top
// down in the leftmost unfinished column.
int fq_rank(const FqMatrix& m);

// In-place rank of a row-major buffer; clobbers the buffer. Hot-loop variant.
int fq_rank_in_place(FiniteField::Elem* a, int rows, int cols, const FiniteField& field);

// v * M for a row vector v of length M.rows().
std::vector<FiniteField::Elem> row_times_matrix(const std::vector<FiniteField::Elem>& v,
                                                const FqMatrix& m);

}  // namespace asklab
