#include "asklab/rational.hpp"

#include <cassert>

namespace asklab {

Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat rat_pow(std::uint64_t q, long e) {
    Int qz(static_cast<unsigned long>(q));
    if (e >= 0) return Rat(int_pow(qz, static_cast<unsigned long>(e)));
    Rat r(1, int_pow(qz, static_cast<unsigned long>(-e)));
    r.canonicalize();
    return r;
}

long int_valuation(const Int& x, const Int& q) {
    assert(x != 0 && q >= 2);
    long v = 0;
    Int rest = x, r, quo;
    for (;;) {
        mpz_tdiv_qr(quo.get_mpz_t(), r.get_mpz_t(), rest.get_mpz_t(), q.get_mpz_t());
        if (r != 0) return v;
        rest = quo;
        ++v;
    }
}

std::optional<long> q_power_exponent(const Int& x, const Int& q) {
    Int rest = abs(x);
    if (rest == 0) return std::nullopt;
    long e = 0;
    while (rest != 1) {
        Int quo, r;
        mpz_tdiv_qr(quo.get_mpz_t(), r.get_mpz_t(), rest.get_mpz_t(), q.get_mpz_t());
        if (r != 0) return std::nullopt;
        rest = quo;
        ++e;
    }
    return e;
}

long rat_valuation(const Rat& x, std::uint64_t q) {
    assert(x != 0);
    Int qz(static_cast<unsigned long>(q));
    auto den_exp = q_power_exponent(Int(x.get_den()), qz);
    if (!den_exp)
        throw BadDenominatorError("denominator " + x.get_den().get_str() +
                                  " is not a power of q=" + qz.get_str());
    return int_valuation(Int(x.get_num()), qz) - *den_exp;
}

std::optional<std::vector<Rat>> solve_rational(std::vector<Rat> a, std::vector<Rat> b,
                                               int rows, int cols) {
    assert(static_cast<int>(a.size()) == rows * cols);
    assert(static_cast<int>(b.size()) == rows);
    std::vector<int> pivot_col_of_row;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pr = -1;
        for (int i = row; i < rows; ++i)
            if (a[i * cols + col] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != row) {
            for (int j = 0; j < cols; ++j) std::swap(a[row * cols + j], a[pr * cols + j]);
            std::swap(b[row], b[pr]);
        }
        Rat inv = 1 / a[row * cols + col];
        for (int j = col; j < cols; ++j) a[row * cols + j] *= inv;
        b[row] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == row) continue;
            Rat factor = a[i * cols + col];
            if (factor == 0) continue;
            for (int j = col; j < cols; ++j) a[i * cols + j] -= factor * a[row * cols + j];
            b[i] -= factor * b[row];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (int i = row; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;  // inconsistent
    if (static_cast<int>(pivot_col_of_row.size()) < cols)
        throw std::invalid_argument("underdetermined rational system");
    std::vector<Rat> sol(cols);
    for (int i = 0; i < cols; ++i) sol[pivot_col_of_row[i]] = b[i];
    return sol;
}

}  // namespace asklab
