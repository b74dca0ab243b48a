#pragma once

// Test-only reference implementations, deliberately independent of the
// library's computation paths: pair counting instead of rank histograms,
// minor gcds instead of elimination, full conjugation instead of
// generator moves, row-span enumeration instead of echelon rank.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "asklab/grouplab.hpp"
#include "asklab/modrep.hpp"

namespace asklab::testing {

// |{(x, a) : x (a theta) = 0}| over F_q by literal double enumeration.
// Equals q^l ask(theta, q).
inline Int oracle_pair_count(const ModuleRep& rep, PrimePower q) {
    auto field = get_field(q);
    const FiniteField& k = *field;
    const int l = rep.l(), d = rep.d(), e = rep.e();
    std::uint64_t ql = 1, qd = 1;
    for (int t = 0; t < l; ++t) ql *= k.q();
    for (int t = 0; t < d; ++t) qd *= k.q();
    Int count = 0;
    std::vector<FiniteField::Elem> a(l), x(d);
    for (std::uint64_t ac = 0; ac < ql; ++ac) {
        std::uint64_t v = ac;
        for (int t = 0; t < l; ++t) {
            a[t] = static_cast<FiniteField::Elem>(v % k.q());
            v /= k.q();
        }
        for (std::uint64_t xc = 0; xc < qd; ++xc) {
            v = xc;
            for (int t = 0; t < d; ++t) {
                x[t] = static_cast<FiniteField::Elem>(v % k.q());
                v /= k.q();
            }
            bool in_kernel = true;
            for (int j = 0; j < e && in_kernel; ++j) {
                FiniteField::Elem s = 0;
                for (int i = 0; i < d; ++i)
                    for (int kk = 0; kk < l; ++kk) {
                        FiniteField::Elem coef = k.from_int(rep.c(kk, i, j));
                        s = k.add(s, k.mul(k.mul(x[i], a[kk]), coef));
                    }
                if (s != 0) in_kernel = false;
            }
            if (in_kernel) count += 1;
        }
    }
    return count;
}

// gcd of all k x k minors, via recursive determinants. Products of the first
// k Smith invariant factors must match these.
inline Int oracle_minor_gcd(const IntMatrix& m, int k);

inline Int det_recursive(const IntMatrix& m, const std::vector<int>& rows,
                         const std::vector<int>& cols) {
    if (rows.size() == 1) return m.at(rows[0], cols[0]);
    Int det = 0;
    std::vector<int> subrows(rows.begin() + 1, rows.end());
    for (std::size_t t = 0; t < cols.size(); ++t) {
        std::vector<int> subcols;
        for (std::size_t u = 0; u < cols.size(); ++u)
            if (u != t) subcols.push_back(cols[u]);
        Int term = m.at(rows[0], cols[t]) * det_recursive(m, subrows, subcols);
        det += (t % 2 == 0) ? term : -term;
    }
    return det;
}

inline void subsets_of(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    for (;;) {
        out.push_back(cur);
        int pos = k - 1;
        while (pos >= 0 && cur[pos] == n - k + pos) --pos;
        if (pos < 0) break;
        ++cur[pos];
        for (int i = pos + 1; i < k; ++i) cur[i] = cur[i - 1] + 1;
    }
}

inline Int oracle_minor_gcd(const IntMatrix& m, int k) {
    std::vector<std::vector<int>> rsets, csets;
    subsets_of(m.rows(), k, rsets);
    subsets_of(m.cols(), k, csets);
    Int g = 0;
    for (const auto& rs : rsets)
        for (const auto& cs : csets) {
            Int d = abs(det_recursive(m, rs, cs));
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        }
    return g;
}

// Conjugacy classes by conjugating with every group element, no generator
// shortcut and no union-find.
inline Int oracle_class_count_full(const GroupTable& g) {
    std::vector<bool> seen(g.order(), false);
    Int classes = 0;
    for (std::uint64_t x = 0; x < g.order(); ++x) {
        if (seen[x]) continue;
        classes += 1;
        for (std::uint64_t h = 0; h < g.order(); ++h)
            seen[g.mul(g.mul(g.inv(h), x), h)] = true;
    }
    return classes;
}

// Rank via the size of the row span: |span| = q^rank.
inline int oracle_rank_by_span(const FqMatrix& m) {
    const FiniteField& k = m.field();
    std::set<std::vector<FiniteField::Elem>> span;
    std::uint64_t combos = 1;
    for (int i = 0; i < m.rows(); ++i) combos *= k.q();
    for (std::uint64_t code = 0; code < combos; ++code) {
        std::uint64_t v = code;
        std::vector<FiniteField::Elem> coeff(m.rows());
        for (int i = 0; i < m.rows(); ++i) {
            coeff[i] = static_cast<FiniteField::Elem>(v % k.q());
            v /= k.q();
        }
        std::vector<FiniteField::Elem> vec(m.cols(), 0);
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                vec[j] = k.add(vec[j], k.mul(coeff[i], m.at(i, j)));
        span.insert(vec);
    }
    int rank = 0;
    std::uint64_t size = span.size();
    while (size > 1) {
        size /= k.q();
        ++rank;
    }
    return rank;
}

// Deterministic pseudo-random stream for generated test data.
struct Lcg {
    std::uint64_t state;
    explicit Lcg(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 17;
    }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

inline ModuleRep random_rep(Lcg& rng, int max_rank = 2, long max_entry = 2) {
    int l = static_cast<int>(rng.range(0, max_rank));
    int d = static_cast<int>(rng.range(0, max_rank));
    int e = static_cast<int>(rng.range(0, max_rank));
    std::vector<Int> tensor(static_cast<std::size_t>(l) * d * e);
    for (Int& v : tensor) v = rng.range(-max_entry, max_entry);
    return ModuleRep(l, d, e, std::move(tensor));
}

}  // namespace asklab::testing
