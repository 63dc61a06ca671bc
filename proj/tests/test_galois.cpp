#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "steenrod/galois.hpp"

using namespace steenrod;

TEST_CASE("prime field construction and the degenerate nu = 1 case") {
    const Field f2 = Field::make(2);
    CHECK(f2.characteristic() == 2);
    CHECK(f2.order() == 2);
    CHECK(f2.modulus().empty());
    CHECK(f2.from_int(1) + f2.from_int(1) == f2.zero());
}

TEST_CASE("explicit modulus is validated") {
    const Field f4 = Field::make(2, 2, {1, 1, 1});  // t^2 + t + 1
    CHECK(f4.order() == 4);
    // t^2 + t + 1 has no root in F_2, hence is irreducible
    CHECK_THROWS_AS(Field::make(2, 2, {1, 0, 1}), ReducibleModulusError);  // (t+1)^2
    CHECK_THROWS_AS(Field::make(2, 2, {1, 1}), ReducibleModulusError);     // wrong degree
    CHECK_THROWS_AS(Field::make(2, 2, {1, 1, 2}), ReducibleModulusError);  // not monic
}

TEST_CASE("non-prime characteristic is rejected") {
    CHECK_THROWS_AS(Field::make(4), NonPrimeError);
    CHECK_THROWS_AS(Field::make(1), NonPrimeError);
    CHECK_THROWS_AS(Field::make(9, 2), NonPrimeError);
}

TEST_CASE("default moduli are the lexicographically least irreducibles") {
    CHECK(Field::make(2, 2).modulus() == std::vector<std::int64_t>{1, 1, 1});
    CHECK(Field::make(3, 2).modulus() == std::vector<std::int64_t>{1, 0, 1});
    CHECK(Field::make(2, 3).modulus() == std::vector<std::int64_t>{1, 0, 1, 1});
}

TEST_CASE("arithmetic examples") {
    const Field f4 = Field::make(2, 2, {1, 1, 1});
    const FieldElement t = f4.generator();
    CHECK(t * t == t + f4.one());  // reduce t^2 by t^2+t+1

    const Field f3 = Field::make(3);
    CHECK(f3.from_int(2).inv() == f3.from_int(2));  // 2*2 = 4 = 1 mod 3
    CHECK(f3.from_int(2) * f3.from_int(2) == f3.one());
}

TEST_CASE("frobenius") {
    const Field f2 = Field::make(2);
    CHECK(f2.one().frobenius(5) == f2.one());

    const Field f4 = Field::make(2, 2);
    const FieldElement t = f4.generator();
    CHECK(t.frobenius(1) == t + f4.one());  // t^2 = t + 1

    const Field f9 = Field::make(3, 2, {1, 0, 1});
    CHECK(f9.generator().frobenius(2) == f9.generator());  // q-power identity

    for (const Field& f : {Field::make(2, 2), Field::make(3, 2)})
        for (const FieldElement& a : f.elements())
            CHECK(a.frobenius(f.degree()) == a);
}

TEST_CASE("binomial coefficients mod p: stated examples") {
    CHECK(binom_mod_p(1, 0, 2) == 1);
    CHECK(binom_mod_p(5, 2, 2) == 0);  // C(5,2) = 10
    CHECK(binom_mod_p(1, 1, 3) == 1);
    CHECK(binom_mod_p(0, 1, 3) == 0);
    CHECK(binom_mod_p(-1, 0, 3) == 0);
    CHECK(binom_mod_p(3, -1, 3) == 0);
    CHECK(binom_mod_p(3, 5, 3) == 0);
}

TEST_CASE("binomial coefficients match the exact integer oracle up to n = 40") {
    const auto c = test::pascal_table(40);
    for (std::int64_t p : {2, 3, 5, 7})
        for (int n = 0; n <= 40; ++n)
            for (int k = 0; k <= n; ++k)
                CHECK(binom_mod_p(n, k, p) ==
                      static_cast<std::int64_t>(c[n][k] % static_cast<std::uint64_t>(p)));
}

TEST_CASE("frobenius is additive, exhaustively for q <= 9") {
    const std::vector<Field> fields = {Field::make(2),    Field::make(3),
                                       Field::make(2, 2), Field::make(5),
                                       Field::make(7),    Field::make(2, 3),
                                       Field::make(3, 2)};
    for (const Field& f : fields) {
        const std::int64_t p = f.characteristic();
        for (const FieldElement& a : f.elements())
            for (const FieldElement& b : f.elements())
                CHECK((a + b).pow(p) == a.pow(p) + b.pow(p));
    }
}

TEST_CASE("every nonzero element has an inverse, exhaustively for q <= 25") {
    std::vector<Field> fields;
    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23})
        fields.push_back(Field::make(p));
    fields.push_back(Field::make(2, 2));
    fields.push_back(Field::make(2, 3));
    fields.push_back(Field::make(2, 4));
    fields.push_back(Field::make(3, 2));
    fields.push_back(Field::make(5, 2));
    for (const Field& f : fields) {
        for (const FieldElement& a : f.elements()) {
            if (a.is_zero())
                continue;
            CHECK(a * a.inv() == f.one());
        }
    }
}

TEST_CASE("x^q = x for every element") {
    for (const Field& f : {Field::make(2, 2), Field::make(3, 2), Field::make(2, 3)})
        for (const FieldElement& a : f.elements())
            CHECK(a.pow(f.order()) == a);
}

TEST_CASE("error paths") {
    const Field f2 = Field::make(2);
    const Field f3 = Field::make(3);
    CHECK_THROWS_AS(f2.zero().inv(), DivisionByZeroError);
    CHECK_THROWS_AS(f2.one() + f3.one(), FieldMismatchError);
    CHECK_THROWS_AS(f2.generator(), DomainError);
    // structurally equal fields interoperate even as separate handles
    CHECK(Field::make(2, 2).generator() + Field::make(2, 2).generator() ==
          Field::make(2, 2).zero());
}
