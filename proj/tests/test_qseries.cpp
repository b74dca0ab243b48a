#include <doctest.h>

#include "asklab/qseries.hpp"
#include "oracles.hpp"

using namespace asklab;
using namespace asklab::testing;

namespace {

PrimePower pp(std::uint64_t q) { return PrimePower::from_q(q); }

}  // namespace

TEST_CASE("laurent polynomial basics") {
    LaurentPoly f(0, {Int(-2), Int(3)});  // 3X - 2
    CHECK(eval_laurent(f, pp(5)) == 13);
    CHECK(eval_laurent(LaurentPoly::monomial(Int(1), -1), pp(3)) == Rat(1, 3));
    CHECK(eval_laurent(LaurentPoly(), pp(7)) == 0);
    CHECK(f.str() == "3*X - 2");

    LaurentPoly trimmed(-2, {Int(0), Int(4), Int(0)});
    CHECK(trimmed.min_exp() == -1);
    CHECK(trimmed.max_exp() == -1);

    LaurentPoly g = LaurentPoly::monomial(Int(1), 2) - LaurentPoly::monomial(Int(1), 2);
    CHECK(g.is_zero());
    CHECK((f * LaurentPoly::monomial(Int(2), 3)).eval(pp(2)) == Rat(64));  // (3*2-2)*2*8
}

TEST_CASE("s-ring evaluation") {
    SRingElem geom{LaurentPoly::constant(Int(1)), {1}};
    CHECK(eval_sring(geom, pp(3)) == Rat(-1, 2));

    SRingElem cancel{LaurentPoly(0, {Int(1), Int(-1)}), {1}};  // (1 - X)/(1 - X)
    for (std::uint64_t q : {2, 3, 5, 7}) CHECK(eval_sring(cancel, pp(q)) == 1);

    SRingElem plain{LaurentPoly::monomial(Int(1), 2), {}};
    CHECK(eval_sring(plain, pp(2)) == 4);
}

TEST_CASE("q-adic expansion") {
    QAdicTruncation g1 = expand_sring({LaurentPoly::constant(Int(1)), {1}}, 4);
    CHECK(g1.coeff(0) == 1);
    CHECK(g1.coeff(1) == 1);
    CHECK(g1.coeff(2) == 1);
    CHECK(g1.coeff(3) == 1);
    CHECK(g1.coeff(4) == 0);  // beyond the cutoff

    QAdicTruncation inv_q = expand_sring({LaurentPoly::monomial(Int(1), -1), {}}, 2);
    CHECK(inv_q.min_exp() == -1);
    CHECK(inv_q.coeff(-1) == 1);
    CHECK(inv_q.coeff(0) == 0);

    QAdicTruncation g2 = expand_sring({LaurentPoly::constant(Int(1)), {2}}, 5);
    CHECK(g2.coeff(0) == 1);
    CHECK(g2.coeff(1) == 0);
    CHECK(g2.coeff(2) == 1);
    CHECK(g2.coeff(4) == 1);
}

TEST_CASE("expansion agrees with evaluation up to the cutoff") {
    Lcg rng(1234);
    for (int trial = 0; trial < 50; ++trial) {
        long min_exp = rng.range(-2, 2);
        std::vector<Int> coeffs;
        int len = static_cast<int>(rng.range(1, 4));
        for (int i = 0; i < len; ++i) coeffs.emplace_back(rng.range(-9, 9));
        SRingElem s{LaurentPoly(min_exp, std::move(coeffs)), {}};
        int nfactors = static_cast<int>(rng.range(0, 2));
        for (int i = 0; i < nfactors; ++i) s.geom_factors.push_back(rng.range(1, 3));

        long cutoff = rng.range(1, 8);
        QAdicTruncation expansion = expand_sring(s, cutoff);
        long guarantee = cutoff + std::min(0L, s.numerator.is_zero() ? 0L : s.numerator.min_exp());
        for (std::uint64_t q : {2, 3, 5}) {
            Rat difference = eval_sring(s, pp(q)) - expansion.eval(pp(q));
            if (difference == 0) continue;
            // valuation in the extended sense: prime-to-q denominators are units
            Int qz(static_cast<unsigned long>(q));
            long v = int_valuation(Int(difference.get_num()), qz) -
                     int_valuation(Int(difference.get_den()), qz);
            CHECK(v >= guarantee);
        }
    }
}

TEST_CASE("congruences modulo q^n") {
    CHECK(congruent_mod_qn(Rat(129, 5), Rat(4, 5), pp(5), 2));
    CHECK_FALSE(congruent_mod_qn(Rat(129, 5), Rat(4, 5), pp(5), 3));

    // q^3 + q - 1 vs q - 1 at q = 3
    CHECK(congruent_mod_qn(Rat(29), Rat(2), pp(3), 3));
    CHECK_FALSE(congruent_mod_qn(Rat(29), Rat(2), pp(3), 4));

    // denominator 2 is a power of q = 2: no error, valuation -1
    CHECK_FALSE(congruent_mod_qn(Rat(1, 2), Rat(0), pp(2), 1));
    CHECK_THROWS_AS(congruent_mod_qn(Rat(1, 3), Rat(0), pp(2), 1), BadDenominatorError);

    CHECK(congruent_mod_qn(Rat(7), Rat(7), pp(3), 100));
}

TEST_CASE("congruence is an equivalence that weakens downward") {
    Lcg rng(5150);
    for (int trial = 0; trial < 30; ++trial) {
        std::uint64_t q = (trial % 2) ? 3 : 2;
        auto value = [&]() {
            return Rat(Int(rng.range(-40, 40)), int_pow(Int(static_cast<long>(q)),
                                                        static_cast<unsigned long>(rng.range(0, 2))));
        };
        Rat x = value(), y = value(), z = value();
        long n = rng.range(1, 3);
        CHECK(congruent_mod_qn(x, x, pp(q), n));
        if (congruent_mod_qn(x, y, pp(q), n)) {
            CHECK(congruent_mod_qn(y, x, pp(q), n));
            for (long k = 1; k <= n; ++k) CHECK(congruent_mod_qn(x, y, pp(q), k));
            if (congruent_mod_qn(y, z, pp(q), n)) CHECK(congruent_mod_qn(x, z, pp(q), n));
        }
    }
}

TEST_CASE("laurent interpolation") {
    // 3X^4 - 2X^3 from six samples, the last held out
    LaurentPoly target(3, {Int(-2), Int(3)});
    std::vector<std::pair<PrimePower, Rat>> samples;
    for (std::uint64_t q : {2, 3, 5, 7, 9, 11}) samples.emplace_back(pp(q), target.eval(pp(q)));
    auto fit = laurent_fit(samples, 0, 4);
    REQUIRE(fit.has_value());
    CHECK(*fit == target);

    // refitting the emitted polynomial's own samples returns it verbatim
    std::vector<std::pair<PrimePower, Rat>> refit_samples;
    for (std::uint64_t q : {2, 3, 4, 5, 8, 13}) refit_samples.emplace_back(pp(q), fit->eval(pp(q)));
    CHECK(*laurent_fit(refit_samples, 0, 4) == target);

    // a non-polynomial source fails the holdout
    std::vector<std::pair<PrimePower, Rat>> bad;
    for (std::uint64_t q : {2, 3, 4, 5, 7, 13})
        bad.emplace_back(pp(q), Rat(q % 3 == 1 ? 1 : 0));
    CHECK_FALSE(laurent_fit(bad, 0, 4).has_value());

    CHECK_THROWS_AS(laurent_fit({{pp(2), Rat(1)}, {pp(3), Rat(1)}}, 0, 4),
                    InsufficientSamplesError);
    CHECK_THROWS_AS(laurent_fit({{pp(2), Rat(1)}, {pp(2), Rat(1)}, {pp(3), Rat(0)}}, 0, 1),
                    InsufficientSamplesError);

    // non-integer interpolants are rejected: X/2 through three points
    std::vector<std::pair<PrimePower, Rat>> half;
    for (std::uint64_t q : {2, 3, 5}) half.emplace_back(pp(q), Rat(Int(q), Int(2)));
    CHECK_FALSE(laurent_fit(half, 0, 1).has_value());

    // negative exponents work
    LaurentPoly inv(-1, {Int(5)});
    std::vector<std::pair<PrimePower, Rat>> invs;
    for (std::uint64_t q : {2, 3, 5, 7}) invs.emplace_back(pp(q), inv.eval(pp(q)));
    CHECK(*laurent_fit(invs, -1, 1) == inv);
}
