#include "asklab/scheme.hpp"

#include <thread>

namespace asklab {

void AffineScheme::validate() const {
    if (vars < 0) throw InvalidInputError("negative variable count");
    for (std::size_t p = 0; p < polys.size(); ++p)
        for (const PolyTerm& t : polys[p])
            if (static_cast<int>(t.exps.size()) != vars)
                throw ShapeMismatchError("polynomial " + std::to_string(p) +
                                         " has a term with " + std::to_string(t.exps.size()) +
                                         " exponents, expected " + std::to_string(vars));
}

namespace {

struct ReducedPoly {
    // terms as (coefficient code, exponent list)
    std::vector<std::pair<FiniteField::Elem, std::vector<unsigned>>> terms;
};

}  // namespace

Int affine_count(const AffineScheme& y, PrimePower q, const Budget& budget,
                 unsigned threads) {
    y.validate();
    Int totalz = int_pow(Int(static_cast<unsigned long>(q.q)),
                         static_cast<unsigned long>(y.vars));
    if (totalz > static_cast<unsigned long>(budget.points))
        throw BudgetExceededError("affine_count needs " + totalz.get_str() +
                                  " points, budget is " + std::to_string(budget.points));
    std::uint64_t total = totalz.get_ui();
    auto field = get_field(q);
    const FiniteField& k = *field;

    // coefficients reduce into the field once per call
    std::vector<ReducedPoly> polys;
    for (const auto& poly : y.polys) {
        ReducedPoly rp;
        for (const PolyTerm& t : poly) {
            FiniteField::Elem c = k.from_int(t.coeff);
            if (c != 0) rp.terms.emplace_back(c, t.exps);
        }
        polys.push_back(std::move(rp));
    }

    auto count_range = [&](std::uint64_t begin, std::uint64_t end) -> std::uint64_t {
        std::vector<FiniteField::Elem> x(y.vars);
        std::uint64_t hits = 0;
        for (std::uint64_t code = begin; code < end; ++code) {
            std::uint64_t c = code;
            for (int t = 0; t < y.vars; ++t) {
                x[t] = static_cast<FiniteField::Elem>(c % k.q());
                c /= k.q();
            }
            bool all_zero = true;
            for (const ReducedPoly& rp : polys) {
                FiniteField::Elem val = 0;
                for (const auto& [coef, exps] : rp.terms) {
                    FiniteField::Elem term = coef;
                    for (int v = 0; v < y.vars && term != 0; ++v)
                        for (unsigned e = 0; e < exps[v]; ++e) term = k.mul(term, x[v]);
                    val = k.add(val, term);
                }
                if (val != 0) {
                    all_zero = false;
                    break;
                }
            }
            if (all_zero) ++hits;
        }
        return hits;
    };

    unsigned nthreads = std::max(1u, threads);
    if (static_cast<std::uint64_t>(nthreads) > total) nthreads = static_cast<unsigned>(total);
    if (nthreads <= 1) return Int(static_cast<unsigned long>(count_range(0, total)));
    std::vector<std::uint64_t> parts(nthreads, 0);
    std::vector<std::thread> pool;
    std::uint64_t chunk = total / nthreads, at = 0;
    for (unsigned t = 0; t < nthreads; ++t) {
        std::uint64_t end = (t + 1 == nthreads) ? total : at + chunk;
        pool.emplace_back([&, t, at, end] { parts[t] = count_range(at, end); });
        at = end;
    }
    for (auto& th : pool) th.join();
    Int sum = 0;
    for (std::uint64_t p : parts) sum += static_cast<unsigned long>(p);
    return sum;
}

AffineScheme kernel_pair_scheme(const ModuleRep& rep) {
    // variables: x_0..x_{d-1}, a_0..a_{l-1}
    AffineScheme y;
    y.vars = rep.d() + rep.l();
    y.name = "pairs(" + (rep.name().empty() ? "theta" : rep.name()) + ")";
    for (int j = 0; j < rep.e(); ++j) {
        std::vector<PolyTerm> poly;
        for (int i = 0; i < rep.d(); ++i)
            for (int k = 0; k < rep.l(); ++k) {
                if (rep.c(k, i, j) == 0) continue;
                PolyTerm t;
                t.coeff = rep.c(k, i, j);
                t.exps.assign(y.vars, 0);
                t.exps[i] = 1;
                t.exps[rep.d() + k] = 1;
                poly.push_back(std::move(t));
            }
        y.polys.push_back(std::move(poly));
    }
    return y;
}

}  // namespace asklab
