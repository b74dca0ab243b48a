#include "asklab/fields.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace asklab {

namespace {

constexpr std::uint64_t kTableLimit = 512;  // mul/add tables up to this order

// Dense polynomials over F_p, lowest degree first, trailing zeros trimmed.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>(
                (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    trim(r);
    return r;
}

// Remainder of a modulo the monic polynomial m.
Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
    trim(a);
    while (a.size() >= m.size()) {
        std::uint64_t c = a.back();
        std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) {
            std::uint64_t sub = c * m[i] % p;
            std::uint64_t cur = a[shift + i];
            a[shift + i] = static_cast<std::uint32_t>((cur + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

bool is_irreducible(const Poly& m, std::uint64_t p) {
    unsigned deg = static_cast<unsigned>(m.size()) - 1;
    if (deg == 0) return false;
    if (m[0] == 0) return deg == 1;  // divisible by x
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (unsigned dd = 1; dd <= deg / 2; ++dd) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < dd; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly div(dd + 1, 0);
            std::uint64_t c = code;
            for (unsigned i = 0; i < dd; ++i) {
                div[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            div[dd] = 1;
            if (poly_mod(m, div, p).empty()) return false;
        }
    }
    return true;
}

// Lexicographically smallest monic irreducible of degree f over F_p,
// comparing coefficient vectors (c_0,...,c_{f-1}) lowest degree first.
Poly smallest_irreducible(std::uint64_t p, unsigned f) {
    Poly m(f + 1, 0);
    m[f] = 1;
    std::vector<std::uint32_t> c(f, 0);
    for (;;) {
        for (unsigned i = 0; i < f; ++i) m[i] = c[i];
        if (is_irreducible(m, p)) return m;
        // increment (c_0,...,c_{f-1}) with c_0 most significant
        int pos = static_cast<int>(f) - 1;
        while (pos >= 0) {
            if (++c[pos] < p) break;
            c[pos] = 0;
            --pos;
        }
        if (pos < 0) throw std::logic_error("no irreducible polynomial found");
    }
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimePower PrimePower::make(std::uint64_t p, unsigned f, std::uint64_t cap) {
    if (!is_prime(p)) throw NotPrimeError("p = " + std::to_string(p) + " is not prime");
    if (f < 1) throw InvalidInputError("exponent f must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < f; ++i) {
        if (q > cap / p)
            throw BudgetExceededError("field order " + std::to_string(p) + "^" +
                                      std::to_string(f) + " exceeds cap " +
                                      std::to_string(cap));
        q *= p;
    }
    return PrimePower{p, f, q};
}

PrimePower PrimePower::from_q(std::uint64_t q, std::uint64_t cap) {
    if (q < 2) throw NotPrimeError("q = " + std::to_string(q) + " is not a prime power");
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    unsigned f = 0;
    std::uint64_t rest = q;
    while (rest > 1) {
        if (rest % p != 0)
            throw NotPrimeError("q = " + std::to_string(q) + " is not a prime power");
        rest /= p;
        ++f;
    }
    return make(p, f, cap);
}

FiniteField::FiniteField(PrimePower pp)
    : pp_(pp), p_(pp.p), q_(pp.q), f_(pp.f) {
    // For f = 1 the presentation degenerates to F_p[x]/(x).
    modulus_ = (f_ == 1) ? Poly{0, 1} : smallest_irreducible(p_, f_);
    neg_table_.resize(q_);
    for (std::uint64_t a = 0; a < q_; ++a) {
        if (f_ == 1) {
            neg_table_[a] = static_cast<Elem>(a == 0 ? 0 : p_ - a);
        } else {
            std::uint64_t code = 0, mult = 1, v = a;
            for (unsigned i = 0; i < f_; ++i) {
                std::uint64_t digit = v % p_;
                code += (digit == 0 ? 0 : p_ - digit) * mult;
                mult *= p_;
                v /= p_;
            }
            neg_table_[a] = static_cast<Elem>(code);
        }
    }
    if (f_ > 1 && q_ <= kTableLimit) {
        add_table_.resize(q_ * q_);
        mul_table_.resize(q_ * q_);
        for (std::uint64_t a = 0; a < q_; ++a)
            for (std::uint64_t b = 0; b < q_; ++b) {
                add_table_[a * q_ + b] = add_generic(static_cast<Elem>(a), static_cast<Elem>(b));
                mul_table_[a * q_ + b] = mul_generic(static_cast<Elem>(a), static_cast<Elem>(b));
            }
    } else if (f_ == 1 && q_ <= kTableLimit) {
        mul_table_.resize(q_ * q_);
        for (std::uint64_t a = 0; a < q_; ++a)
            for (std::uint64_t b = 0; b < q_; ++b)
                mul_table_[a * q_ + b] = static_cast<Elem>(a * b % p_);
    }
}

std::vector<std::uint32_t> FiniteField::digits(Elem a) const {
    std::vector<std::uint32_t> d(f_);
    std::uint64_t v = a;
    for (unsigned i = 0; i < f_; ++i) {
        d[i] = static_cast<std::uint32_t>(v % p_);
        v /= p_;
    }
    return d;
}

FiniteField::Elem FiniteField::add_generic(Elem a, Elem b) const {
    std::uint64_t code = 0, mult = 1, va = a, vb = b;
    for (unsigned i = 0; i < f_; ++i) {
        code += (va % p_ + vb % p_) % p_ * mult;
        mult *= p_;
        va /= p_;
        vb /= p_;
    }
    return static_cast<Elem>(code);
}

FiniteField::Elem FiniteField::mul_generic(Elem a, Elem b) const {
    Poly pa = digits(a), pb = digits(b);
    trim(pa);
    trim(pb);
    Poly prod = poly_mod(poly_mul(pa, pb, p_), modulus_, p_);
    std::uint64_t code = 0, mult = 1;
    for (std::size_t i = 0; i < prod.size(); ++i) {
        code += prod[i] * mult;
        mult *= p_;
    }
    return static_cast<Elem>(code);
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
    Elem r = one(), base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

FiniteField::Elem FiniteField::inv(Elem a) const {
    if (a == 0) throw InvalidInputError("inverse of zero field element");
    return pow(a, q_ - 2);
}

FiniteField::Elem FiniteField::from_int(const Int& v) const {
    Int m = v % static_cast<unsigned long>(p_);
    if (m < 0) m += static_cast<unsigned long>(p_);
    return static_cast<Elem>(m.get_ui());
}

FiniteField::Elem FiniteField::from_int(long v) const {
    long m = v % static_cast<long>(p_);
    if (m < 0) m += static_cast<long>(p_);
    return static_cast<Elem>(m);
}

FiniteField make_field(std::uint64_t p, unsigned f, std::uint64_t cap) {
    return FiniteField(PrimePower::make(p, f, cap));
}

std::shared_ptr<const FiniteField> get_field(PrimePower pp) {
    static std::mutex mu;
    static std::map<std::uint64_t, std::shared_ptr<const FiniteField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(pp.q);
    if (it != cache.end()) return it->second;
    auto field = std::make_shared<const FiniteField>(pp);
    cache.emplace(pp.q, field);
    return field;
}

}  // namespace asklab
