#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asklab/fields.hpp"

namespace asklab {

// Integer Laurent polynomial, coefficients stored from min_exp upward with
// zero ends trimmed; the empty list is the zero polynomial.
class LaurentPoly {
   public:
    LaurentPoly() = default;
    LaurentPoly(long min_exp, std::vector<Int> coeffs);

    static LaurentPoly constant(Int c);
    static LaurentPoly monomial(Int c, long e);

    bool is_zero() const { return coeffs_.empty(); }
    long min_exp() const { return min_exp_; }
    long max_exp() const { return min_exp_ + static_cast<long>(coeffs_.size()) - 1; }
    Int coeff(long e) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    LaurentPoly operator+(const LaurentPoly& rhs) const;
    LaurentPoly operator-(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const LaurentPoly& rhs) const;
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& rhs) const = default;

    Rat eval(PrimePower q) const;
    std::string str() const;

   private:
    long min_exp_ = 0;
    std::vector<Int> coeffs_;
};

// Element of Z[X^{+-1}; (1 - X^n)^{-1}]: a Laurent numerator together with a
// multiset of geometric factors, each n >= 1 standing for one (1 - q^n)^{-1}.
struct SRingElem {
    LaurentPoly numerator;
    std::vector<long> geom_factors;  // kept sorted

    static SRingElem constant(Int c) { return {LaurentPoly::constant(std::move(c)), {}}; }
};

Rat eval_laurent(const LaurentPoly& f, PrimePower q);
Rat eval_sring(const SRingElem& s, PrimePower q);

// Truncated q-adic expansion: coefficients for exponents min_exp..cutoff-1,
// representing an element of Z[[q]][q^{-1}] mod q^cutoff.
class QAdicTruncation {
   public:
    QAdicTruncation(long min_exp, long cutoff, std::vector<Int> coeffs);

    static QAdicTruncation zero(long cutoff);
    static QAdicTruncation from_laurent(const LaurentPoly& f, long cutoff);
    // (1 - q^n)^{-1} = 1 + q^n + q^{2n} + ... truncated below cutoff.
    static QAdicTruncation geometric(long n, long cutoff);

    long min_exp() const { return min_exp_; }
    long cutoff() const { return cutoff_; }
    Int coeff(long e) const;

    QAdicTruncation operator+(const QAdicTruncation& rhs) const;
    QAdicTruncation operator*(const QAdicTruncation& rhs) const;

    Rat eval(PrimePower q) const;
    std::string str() const;

   private:
    void normalize();

    long min_exp_ = 0;
    long cutoff_ = 0;
    std::vector<Int> coeffs_;
};

// Geometric-series expansion of s modulo q^cutoff. Evaluating the result at a
// prime power agrees with eval_sring up to valuation cutoff, shifted by the
// numerator's negative part when present.
QAdicTruncation expand_sring(const SRingElem& s, long cutoff);

// Whether the q-adic valuation of x - y is at least n. Both arguments must
// have denominators that are powers of q; anything else is a misuse and
// raises BadDenominatorError.
bool congruent_mod_qn(const Rat& x, const Rat& y, PrimePower q, long n);

// Exact interpolation of samples (q, value) by a Laurent polynomial supported
// on exponents lo..hi. Solves on all but the last sample and returns the
// polynomial only if it has integer coefficients and reproduces every sample,
// including the held-out one. Requires at least hi-lo+2 samples at distinct q.
std::optional<LaurentPoly> laurent_fit(const std::vector<std::pair<PrimePower, Rat>>& samples,
                                       long lo, long hi);

}  // namespace asklab
