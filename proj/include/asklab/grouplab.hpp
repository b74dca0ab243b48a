#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "asklab/fq_matrix.hpp"
#include "asklab/modrep.hpp"

namespace asklab {

// A fully enumerated finite group. Elements are the indices 0..order-1 with a
// fixed canonical encoding per concrete kind; the identity is index 0 for
// coordinate groups and the BFS root for matrix closures.
class GroupTable {
   public:
    enum class Kind { baer, heisenberg, mtheta, lie_exp, matrix_closure };

    virtual ~GroupTable() = default;

    Kind kind() const { return kind_; }
    std::uint64_t order() const { return order_; }
    std::uint64_t identity() const { return id_; }
    const std::vector<std::uint64_t>& generators() const { return gens_; }
    const std::string& label() const { return label_; }

    virtual std::uint64_t mul(std::uint64_t a, std::uint64_t b) const = 0;
    virtual std::uint64_t inv(std::uint64_t a) const = 0;
    virtual std::string describe(std::uint64_t a) const = 0;

    // Set when the construction predicts the order (q^{l+e}, q^{dim g}, ...).
    std::optional<std::uint64_t> expected_order;
    bool order_matches_expected() const {
        return !expected_order || *expected_order == order_;
    }

   protected:
    GroupTable(Kind kind, std::string label) : kind_(kind), label_(std::move(label)) {}

    Kind kind_;
    std::uint64_t order_ = 0;
    std::uint64_t id_ = 0;
    std::vector<std::uint64_t> gens_;
    std::string label_;
};

// Group on tuples of field elements split into blocks; the element with
// coordinates (c_0, ..., c_{m-1}) has index sum_t c_t q^t.
class CoordinateGroup final : public GroupTable {
   public:
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const override;
    std::uint64_t inv(std::uint64_t a) const override;
    std::string describe(std::uint64_t a) const override;

    const FiniteField& field() const { return *field_; }
    const std::vector<int>& blocks() const { return blocks_; }
    int coords() const { return ncoords_; }

    std::uint64_t encode(const std::vector<FiniteField::Elem>& c) const;
    std::vector<FiniteField::Elem> decode(std::uint64_t idx) const;

   private:
    friend std::unique_ptr<CoordinateGroup> baer_group(const ModuleRep&, PrimePower,
                                                       const Budget&);
    friend std::unique_ptr<CoordinateGroup> heisenberg_group(const ModuleRep&, PrimePower,
                                                             const Budget&);
    CoordinateGroup(Kind kind, std::string label) : GroupTable(kind, std::move(label)) {}
    static std::unique_ptr<CoordinateGroup> build(Kind kind, const ModuleRep& rep,
                                                  PrimePower q, const Budget& budget);

    void law(const std::vector<FiniteField::Elem>& a, const std::vector<FiniteField::Elem>& b,
             std::vector<FiniteField::Elem>& out) const;

    std::shared_ptr<const FiniteField> field_;
    std::vector<int> blocks_;
    int ncoords_ = 0;
    int l_ = 0, d_ = 0, e_ = 0;  // d only used by the Heisenberg law
    std::vector<FiniteField::Elem> tensor_;  // reduced structure tensor
};

// Multiplicative closure of a finite set of invertible matrices over F_q.
class MatrixGroup final : public GroupTable {
   public:
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const override;
    std::uint64_t inv(std::uint64_t a) const override;
    std::string describe(std::uint64_t a) const override;

    const FiniteField& field() const { return *field_; }
    int n() const { return n_; }
    FqMatrix element(std::uint64_t idx) const;

    // BFS product closure from the identity. Verifies that inverses landed in
    // the closure. Throws BudgetExceededError past the element cap.
    static std::unique_ptr<MatrixGroup> closure(Kind kind, std::string label,
                                                std::shared_ptr<const FiniteField> field,
                                                int n, bool unitriangular,
                                                const std::vector<FqMatrix>& gens,
                                                const Budget& budget);

   private:
    MatrixGroup(Kind kind, std::string label) : GroupTable(kind, std::move(label)) {}

    std::string encode(const FqMatrix& m) const;
    std::uint64_t index_of(const std::string& key) const;

    std::shared_ptr<const FiniteField> field_;
    int n_ = 0;
    bool unitriangular_ = false;
    std::vector<std::string> elems_;
    std::unordered_map<std::string, std::uint64_t> index_;
};

// Group on (module + codomain) coordinates with multiplication twisted by the
// strict-upper-triangular splitting of the alternating form:
//   (a, y)(a', y') = (a + a', y + y' + beta(a, a')),
//   beta(e_k, e_k') = e_k * e_k' for k < k', zero otherwise.
// Group commutators then satisfy [(a,y), (a',y')] = (0, a * a') over every
// coefficient ring, including characteristic 2.
std::unique_ptr<CoordinateGroup> baer_group(const ModuleRep& rep, PrimePower q,
                                            const Budget& budget = {});

// Block-unitriangular group on (module + domain + codomain) coordinates:
//   (a, v, w)(a', v', w') = (a + a', v + v', w + w' + v * a').
std::unique_ptr<CoordinateGroup> heisenberg_group(const ModuleRep& rep, PrimePower q,
                                                  const Budget& budget = {});

// Closure of {exp(c b_i)} inside the unitriangular matrices; requires p >= n
// so the truncated exponential divides exactly. An order different from
// q^{dim g} is recorded, not fatal.
std::unique_ptr<MatrixGroup> lie_exp_group(const struct LieData& lie, PrimePower q,
                                           const Budget& budget = {});

std::unique_ptr<MatrixGroup> unitriangular_group(int n, PrimePower q,
                                                 const Budget& budget = {});
std::unique_ptr<MatrixGroup> general_linear_group(int n, PrimePower q,
                                                  const Budget& budget = {});

// Number of conjugacy classes by union-find over conjugation by the
// generating set. Requires order <= budget.naive_class_cap.
Int class_count_naive(const GroupTable& g, const Budget& budget = {});

enum class GroupConstruction { baer, heisenberg };

// Class number by the rank formulas: q^e ask(theta) for the Baer group of an
// alternating theta; for the Heisenberg group both q^e ask(hull(theta)) and
// q^{l-d+e} ask(2nd power of the dual) are evaluated and cross-checked.
Int class_count_structural(const ModuleRep& rep, PrimePower q, GroupConstruction kind,
                           const Budget& budget = {}, unsigned threads = 1);

enum class OrbitMode { bfs, burnside, formula };

// Orbits of the module acting on (domain + codomain) affine space by
// (x, y) a = (x, x * a + y). All modes return the same number.
Int mtheta_orbit_count(const ModuleRep& rep, PrimePower q, OrbitMode mode,
                       const Budget& budget = {}, unsigned threads = 1);

// A fully enumerated right action for the orbit-counting lemma.
struct EnumeratedAction {
    std::uint64_t space_size = 0;
    std::uint64_t group_size = 0;
    std::uint64_t group_id = 0;
    std::function<std::uint64_t(std::uint64_t, std::uint64_t)> act;   // x, g -> xg
    std::function<std::uint64_t(std::uint64_t, std::uint64_t)> gmul;  // g, h -> gh
};

// |fixed pairs| / |G| with exact division. Spot-checks identity and
// compatibility on a deterministic sample first.
Int burnside_orbits(const EnumeratedAction& action, const Budget& budget = {});

// Orbits of the natural right action on row vectors of length n().
Int natural_orbit_count(const MatrixGroup& g, const Budget& budget = {});

// Nilpotent Lie data: strictly upper triangular integer basis matrices.
struct LieData {
    int n = 0;
    std::vector<IntMatrix> basis;
    std::string name;
};

struct LieStructure {
    int dim = 0;
    std::vector<Int> s;  // [b_i, b_k] = sum_j s[i][k][j] b_j

    const Int& at(int i, int k, int j) const {
        return s[(static_cast<std::size_t>(i) * dim + k) * dim + j];
    }
};

// Verifies shape, rational independence and integral bracket closure.
LieStructure lie_validate(const LieData& lie);

// The inclusion into the full matrix algebra: ranks (dim g, n, n) with
// c[k][i][j] = (b_k)_{ij}.
ModuleRep lie_inclusion_rep(const LieData& lie);

// The right adjoint representation a -> (x -> [x, a]): ranks all dim g,
// c[k][i][j] = s[i][k][j]; alternating by construction.
ModuleRep lie_adjoint_rep(const LieData& lie);

}  // namespace asklab
