#pragma once

#include <string>
#include <vector>

#include "asklab/fields.hpp"
#include "asklab/int_matrix.hpp"

namespace asklab {

// A finite free module representation over the integers: a module of rank l
// mapping into the d x e integer matrices. The structure tensor is indexed
// c[k][i][j] with k the module index, i the domain index and j the codomain
// index, so the bilinear map is (x * a)_j = sum_{i,k} c[k][i][j] x_i a_k and
// a module point a goes to the matrix sum_k a_k c[k][.][.].
class ModuleRep {
   public:
    ModuleRep() : l_(0), d_(0), e_(0) {}
    ModuleRep(int l, int d, int e, std::vector<Int> tensor, std::string name = "");

    int l() const { return l_; }
    int d() const { return d_; }
    int e() const { return e_; }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    const Int& c(int k, int i, int j) const {
        return tensor_[(static_cast<std::size_t>(k) * d_ + i) * e_ + j];
    }
    Int& c(int k, int i, int j) {
        return tensor_[(static_cast<std::size_t>(k) * d_ + i) * e_ + j];
    }
    const std::vector<Int>& tensor() const { return tensor_; }

    // Equality of tensors; names are ignored.
    bool operator==(const ModuleRep& rhs) const {
        return l_ == rhs.l_ && d_ == rhs.d_ && e_ == rhs.e_ && tensor_ == rhs.tensor_;
    }

   private:
    int l_, d_, e_;
    std::vector<Int> tensor_;
    std::string name_;
};

// a -> (a theta)^{+m}: block-diagonal replication, ranks (l, m*d, m*e).
ModuleRep mth_power(const ModuleRep& rep, int m);

// Swaps the module and codomain axes; ranks become (e, d, l). An involution.
ModuleRep knuth_dual(const ModuleRep& rep);

// The alternating representation on (domain + module) sending (x, a) to
// (x', a') -> x'(a theta) - x(a' theta). Block order is domain part first.
ModuleRep alternating_hull(const ModuleRep& rep);

ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b);

// d = l, antisymmetric tensor and zero diagonal slices. The diagonal
// condition is checked separately: over characteristic 2 it does not follow
// from antisymmetry of the integer tensor reductions.
bool is_alternating(const ModuleRep& rep);

// Injective with free cokernel: the l x (d*e) flattening has rational rank l
// and all Smith invariant factors 1.
bool is_immersive(const ModuleRep& rep);

// Row k lists c[k][.][.] flattened row-major, an l x (d*e) matrix.
IntMatrix flatten(const ModuleRep& rep);

struct SaturateResult {
    ModuleRep rep;  // immersive, same (d, e), module rank = rank of the image
    Int index;      // order of saturation/image quotient; 1 iff already immersive
};

// Drops the kernel of the representation, then saturates the image lattice
// inside Hom(V, W). ask values of all m-th powers agree with the original at
// every q coprime to the returned index.
SaturateResult saturate(const ModuleRep& rep);

// Exact value num / q^den_exp; kept unreduced so that num is the literal
// point count of the kernel pair scheme.
struct AskValue {
    PrimePower q;
    Int num;
    int den_exp = 0;

    Rat to_rational() const;
    bool operator==(const AskValue& rhs) const;
    std::string str() const;
};

struct RankHistogram {
    PrimePower q;
    int l = 0, d = 0, e = 0;
    // counts[i] = number of module points over F_q mapped to a rank-i matrix
    std::vector<std::uint64_t> counts;

    std::uint64_t total() const;
};

// counts[i] = |{a in F_q^l : rank(a theta) = i}|. Partitions the enumeration
// over the given number of threads; the merge is integer addition, so the
// result does not depend on the partitioning.
RankHistogram rank_histogram(const ModuleRep& rep, PrimePower q, const Budget& budget = {},
                             unsigned threads = 1);

// Average kernel size over F_q as the exact pair (num, l). Computed from the
// rank histogram.
AskValue ask(const ModuleRep& rep, PrimePower q, const Budget& budget = {},
             unsigned threads = 1);

// Cross-validation path: accumulates q^{d - rank} point by point without the
// histogram intermediate.
AskValue ask_naive(const ModuleRep& rep, PrimePower q, const Budget& budget = {},
                   unsigned threads = 1);

// num = sum_i counts[i] * q^{m(d-i)}; equals ask(mth_power(rep, m), q) exactly.
AskValue ask_from_histogram(const RankHistogram& h, int m);

// Size of the full-rank stratum: the number of module points with
// rank(a theta) = d. Zero whenever the generic rank is below d.
Int vmax_count(const ModuleRep& rep, PrimePower q, const Budget& budget = {},
               unsigned threads = 1);

}  // namespace asklab
