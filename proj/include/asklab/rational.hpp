#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "asklab/errors.hpp"

namespace asklab {

using Int = mpz_class;
using Rat = mpq_class;

// base^e for e >= 0.
Int int_pow(const Int& base, unsigned long e);

// q^e as an exact rational, e of either sign.
Rat rat_pow(std::uint64_t q, long e);

// Largest t with q^t | x, for x != 0 and q >= 2.
long int_valuation(const Int& x, const Int& q);

// If |x| = q^k returns k, otherwise nothing. is_q_power(1) = 0.
std::optional<long> q_power_exponent(const Int& x, const Int& q);

// q-adic valuation of a nonzero rational whose denominator is a power of q.
// Throws BadDenominatorError if the denominator has a factor coprime to q.
long rat_valuation(const Rat& x, std::uint64_t q);

// Exact solver for small dense rational systems A*c = b (A is rows x cols,
// row-major). Returns nothing if the system is inconsistent; throws
// std::invalid_argument if it is consistent but underdetermined.
std::optional<std::vector<Rat>> solve_rational(std::vector<Rat> a, std::vector<Rat> b,
                                               int rows, int cols);

}  // namespace asklab
