#pragma once

#include "asklab/graphloci.hpp"
#include "asklab/qseries.hpp"
#include "asklab/report.hpp"
#include "asklab/scheme.hpp"

namespace asklab {

// A user-certified decomposition of a point count into full-rank locus counts
// of graph representations with S-ring coefficients. The defining equation
// sum_i h_i(q) vmax(Gamma_i, q) = |Y(F_q)| is verified before use, never
// trusted.
struct BBDecomposition {
    std::vector<Graph> graphs;
    std::vector<SRingElem> coeffs;

    void validate() const;
};

// H_m(q) = sum_i h_i(q) q^{l_i} ask(m gamma_i, q), exact.
Rat hm_combination(const BBDecomposition& d, int m, PrimePower q, const Budget& budget = {},
                   unsigned threads = 1);

// Verifies, for each q: (a) the decomposition equation exactly (failure
// throws DecompositionInvalidError), (b) |Y(F_q)| = H_n(q) mod q^n, and
// (c) both group-theoretic reconstructions of the m-th power ask values.
VerificationReport theorem_a_check(const AffineScheme& y, const BBDecomposition& d, int n,
                                   const std::vector<PrimePower>& qs,
                                   const Budget& budget = {}, unsigned threads = 1);

// The two identities tying m-th power ask values to orbit counts of the
// abelian module action and to class numbers of the Baer group of the hull of
// the dual. Uses the naive class count when the group fits the budget and the
// structural formula otherwise (noted in the row parameters).
VerificationReport mth_power_identities(const ModuleRep& rep, int m, PrimePower q,
                                        const Budget& budget = {}, unsigned threads = 1);

}  // namespace asklab
