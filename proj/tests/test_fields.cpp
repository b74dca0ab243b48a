#include <doctest.h>

#include "asklab/fields.hpp"

using namespace asklab;

TEST_CASE("prime power validation") {
    CHECK_THROWS_AS(PrimePower::make(4, 1), NotPrimeError);
    CHECK_THROWS_AS(PrimePower::make(1, 1), NotPrimeError);
    CHECK_THROWS_AS(PrimePower::make(2, 25), BudgetExceededError);
    CHECK(PrimePower::make(3, 1).q == 3);
    CHECK(PrimePower::make(2, 10).q == 1024);

    PrimePower nine = PrimePower::from_q(9);
    CHECK(nine.p == 3);
    CHECK(nine.f == 2);
    CHECK_THROWS_AS(PrimePower::from_q(12), NotPrimeError);
    CHECK_THROWS_AS(PrimePower::from_q(1), NotPrimeError);
}

TEST_CASE("prime field arithmetic") {
    FiniteField f3 = make_field(3, 1);
    CHECK(f3.mul(2, 2) == 1);
    CHECK(f3.add(2, 2) == 1);
    CHECK(f3.neg(1) == 2);
    CHECK(f3.inv(2) == 2);
    CHECK(f3.from_int(Int(-1)) == 2);
    CHECK(f3.from_int(Int("123456789123456789123456789")) == 0);
}

TEST_CASE("field of order four") {
    FiniteField f4 = make_field(2, 2);
    // the only irreducible monic quadratic over F_2
    CHECK(f4.modulus() == std::vector<std::uint32_t>{1, 1, 1});
    // x has code 2, x^2 = x + 1 has code 3
    CHECK(f4.mul(2, 2) == 3);
    CHECK(f4.add(2, 3) == 1);
}

TEST_CASE("deterministic modulus choice") {
    CHECK(make_field(3, 2).modulus() == std::vector<std::uint32_t>{1, 0, 1});      // x^2+1
    CHECK(make_field(2, 3).modulus() == std::vector<std::uint32_t>{1, 0, 1, 1});   // x^3+x^2+1
    CHECK(make_field(5, 2).modulus() == std::vector<std::uint32_t>{1, 1, 1});      // x^2+x+1
}

TEST_CASE("field axioms") {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        FiniteField k(PrimePower::from_q(q));
        for (std::uint64_t a = 0; a < q; ++a)
            for (std::uint64_t b = 0; b < q; ++b)
                for (std::uint64_t c = 0; c < q; ++c) {
                    auto ea = static_cast<FiniteField::Elem>(a);
                    auto eb = static_cast<FiniteField::Elem>(b);
                    auto ec = static_cast<FiniteField::Elem>(c);
                    REQUIRE(k.mul(k.mul(ea, eb), ec) == k.mul(ea, k.mul(eb, ec)));
                    REQUIRE(k.add(k.add(ea, eb), ec) == k.add(ea, k.add(eb, ec)));
                    REQUIRE(k.mul(ea, k.add(eb, ec)) == k.add(k.mul(ea, eb), k.mul(ea, ec)));
                }
    }
    for (std::uint64_t q : {16, 25, 27, 49}) {
        FiniteField k(PrimePower::from_q(q));
        for (std::uint64_t a = 1; a < q; ++a) {
            auto ea = static_cast<FiniteField::Elem>(a);
            REQUIRE(k.mul(ea, k.inv(ea)) == k.one());
            REQUIRE(k.add(ea, k.neg(ea)) == k.zero());
        }
        // strided associativity probe
        for (std::uint64_t a = 0; a < q; a += 3)
            for (std::uint64_t b = 0; b < q; b += 5)
                for (std::uint64_t c = 0; c < q; c += 7) {
                    auto ea = static_cast<FiniteField::Elem>(a);
                    auto eb = static_cast<FiniteField::Elem>(b);
                    auto ec = static_cast<FiniteField::Elem>(c);
                    REQUIRE(k.mul(k.mul(ea, eb), ec) == k.mul(ea, k.mul(eb, ec)));
                }
    }
}

TEST_CASE("element codes follow base-p digits") {
    FiniteField f9 = make_field(3, 2);
    // code 5 = 2 + 1*3 is 2 + x; adding (1 + x) code 4 gives 3 + 2x -> (0, 2) code 6
    CHECK(f9.add(5, 4) == 6);
    CHECK(f9.digits(5) == std::vector<std::uint32_t>{2, 1});
}
