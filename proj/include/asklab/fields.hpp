#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "asklab/errors.hpp"
#include "asklab/rational.hpp"

namespace asklab {

inline constexpr std::uint64_t kDefaultFieldCap = 1u << 20;

bool is_prime(std::uint64_t n);

struct PrimePower {
    std::uint64_t p = 0;
    unsigned f = 1;
    std::uint64_t q = 0;

    // Validates primality of p, f >= 1 and that p^f fits the cap.
    static PrimePower make(std::uint64_t p, unsigned f,
                           std::uint64_t cap = kDefaultFieldCap);
    // Factors q = p^f; throws NotPrimeError if q is not a prime power.
    static PrimePower from_q(std::uint64_t q, std::uint64_t cap = kDefaultFieldCap);

    bool operator==(const PrimePower&) const = default;
};

// F_{p^f} presented as F_p[x]/(modulus).
//
// Elements are the codes 0..q-1; the code with base-p digits (a_0,...,a_{f-1})
// is the residue class of a_0 + a_1 x + ... + a_{f-1} x^{f-1}. All enumeration
// in this library walks codes in increasing order, so partitioned runs are
// reproducible. The modulus is the lexicographically smallest monic
// irreducible polynomial of degree f, coefficients compared lowest degree
// first with values 0..p-1.
class FiniteField {
   public:
    using Elem = std::uint32_t;

    explicit FiniteField(PrimePower pp);

    const PrimePower& pp() const { return pp_; }
    std::uint64_t p() const { return pp_.p; }
    unsigned f() const { return pp_.f; }
    std::uint64_t q() const { return pp_.q; }

    // Coefficients of the modulus, degree 0..f (monic, so back() == 1).
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    Elem add(Elem a, Elem b) const {
        if (f_ == 1) {
            std::uint64_t s = static_cast<std::uint64_t>(a) + b;
            return static_cast<Elem>(s >= p_ ? s - p_ : s);
        }
        if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
        return add_generic(a, b);
    }
    Elem neg(Elem a) const { return neg_table_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const {
        if (f_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
        if (!mul_table_.empty()) return mul_table_[static_cast<std::size_t>(a) * q_ + b];
        return mul_generic(a, b);
    }
    // Multiplicative inverse of a nonzero element.
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::uint64_t e) const;

    // Reduction of an integer into the prime subfield.
    Elem from_int(const Int& v) const;
    Elem from_int(long v) const;

    std::vector<std::uint32_t> digits(Elem a) const;

   private:
    Elem add_generic(Elem a, Elem b) const;
    Elem mul_generic(Elem a, Elem b) const;

    PrimePower pp_;
    std::uint64_t p_, q_;
    unsigned f_;
    std::vector<std::uint32_t> modulus_;
    std::vector<Elem> neg_table_;
    std::vector<Elem> add_table_;  // built for f > 1 when q is small
    std::vector<Elem> mul_table_;  // built when q is small
};

// Field of order p^f with the deterministic modulus; throws NotPrimeError or
// BudgetExceededError.
FiniteField make_field(std::uint64_t p, unsigned f, std::uint64_t cap = kDefaultFieldCap);

// Process-wide cache keyed by q; fields are immutable and shareable.
std::shared_ptr<const FiniteField> get_field(PrimePower pp);

}  // namespace asklab
