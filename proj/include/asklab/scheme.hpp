#pragma once

#include <string>
#include <vector>

#include "asklab/modrep.hpp"

namespace asklab {

struct PolyTerm {
    Int coeff;
    std::vector<unsigned> exps;  // one exponent per variable
};

// Affine scheme cut out by integer polynomials; points over F_q are counted
// by exhaustive evaluation.
struct AffineScheme {
    int vars = 0;
    std::vector<std::vector<PolyTerm>> polys;
    std::string name;

    void validate() const;
};

Int affine_count(const AffineScheme& y, PrimePower q, const Budget& budget = {},
                 unsigned threads = 1);

// The pair scheme {(x, a) : x (a theta) = 0} in d + l variables, one bilinear
// equation per codomain coordinate. Its point count over F_q equals
// q^l ask(theta, q).
AffineScheme kernel_pair_scheme(const ModuleRep& rep);

}  // namespace asklab
