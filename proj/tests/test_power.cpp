#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "steenrod/power.hpp"

using namespace steenrod;

namespace {

Polynomial var(const Field& f, std::size_t i) { return Polynomial::variable(f, i); }

}  // namespace

TEST_CASE("total power on a linear form is l + l^q xi") {
    const Field f2 = Field::make(2);
    const Polynomial x = var(f2, 0);
    const XiSeries s = total_power(x);
    CHECK(s.size() == 2);
    CHECK(s.coeff(0) == x);
    CHECK(s.coeff(1) == x * x);
}

TEST_CASE("total power of the quadratic form Q over F_2") {
    const Field f2 = Field::make(2);
    const Polynomial x = var(f2, 0), y = var(f2, 1);
    const Polynomial q = x * x + x * y + y * y;
    const XiSeries s = total_power(q);
    CHECK(s.size() == 3);
    CHECK(s.coeff(0) == q);
    CHECK(s.coeff(1) == x * x * y + x * y * y);
    CHECK(s.coeff(2) == q * q);
}

TEST_CASE("total power of a constant is the constant") {
    for (const Field& f : {Field::make(2), Field::make(3), Field::make(2, 2)}) {
        const XiSeries s = total_power(Polynomial::constant(f.one()));
        CHECK(s.size() == 1);
        CHECK(s.coeff(0) == Polynomial::constant(f.one()));
    }
}

TEST_CASE("total power of xy over F_3") {
    const Field f3 = Field::make(3);
    const Polynomial x = var(f3, 0), y = var(f3, 1);
    const XiSeries s = total_power(x * y);
    CHECK(s.size() == 3);
    CHECK(s.coeff(0) == x * y);
    CHECK(s.coeff(1) == x.pow(3) * y + x * y.pow(3));
    CHECK(s.coeff(2) == x.pow(3) * y.pow(3));
}

TEST_CASE("P^1 of the determinant form") {
    const Field f3 = Field::make(3);
    const Polynomial x = var(f3, 0), y = var(f3, 1), z = var(f3, 2);
    const Polynomial det = x * z - y * y;
    const Polynomial expected =
        x.pow(3) * z + x * z.pow(3) + (y.pow(4)).scale(f3.from_int(-2));
    CHECK(steenrod_op(1, det) == expected);
}

TEST_CASE("P^0 is the identity and the top operation is the q-th power") {
    const Field f2 = Field::make(2);
    const Polynomial x = var(f2, 0), y = var(f2, 1);
    const Polynomial f = x * x * y;
    CHECK(steenrod_op(0, f) == f);
    CHECK(steenrod_op(3, f) == f * f);  // deg f = 3
    CHECK(steenrod_op(4, f).is_zero());
}

TEST_CASE("steenrod_op agrees with the xi^i coefficient of the full series") {
    test::Rng rng(9001);
    for (const Field& f : {Field::make(2), Field::make(3), Field::make(2, 2)}) {
        for (int trial = 0; trial < 20; ++trial) {
            const Polynomial g = test::random_polynomial(rng, f, 3, 4, 4);
            const XiSeries s = total_power(g);
            for (std::int64_t i = 0; i <= g.degree() + 2; ++i)
                CHECK(steenrod_op(i, g) == s.coeff(static_cast<std::size_t>(i)));
        }
    }
}

TEST_CASE("iterated application") {
    test::Rng rng(9000);
    const Field f2 = Field::make(2);
    const Polynomial x = var(f2, 0);
    CHECK(apply_basic_monomial(IndexSeq({2, 1}), x) == x.pow(4));
    const Polynomial f = test::random_polynomial(rng, f2, 2, 3, 3);
    CHECK(apply_basic_monomial(IndexSeq(), f) == f);
    // trailing zeros act as the identity
    CHECK(apply_basic_monomial(IndexSeq({2, 1, 0, 0}), x) == x.pow(4));
}

TEST_CASE("Sq^1 Sq^1 kills low-degree polynomials") {
    test::Rng rng(9002);
    const Field f2 = Field::make(2);
    for (int trial = 0; trial < 30; ++trial) {
        const Polynomial f = test::random_polynomial(rng, f2, 3, 4, 4);
        CHECK(apply_basic_monomial(IndexSeq({1, 1}), f).is_zero());
    }
}

TEST_CASE("Cartan formula") {
    const Field f2 = Field::make(2);
    const Polynomial x = var(f2, 0), y = var(f2, 1);
    CHECK(check_cartan(x, y, 1));
    CHECK(steenrod_op(1, x * y) == x * x * y + x * y * y);
    CHECK(check_cartan(x, y, 0));

    test::Rng rng(9003);
    for (const Field& f : {Field::make(2), Field::make(3), Field::make(2, 2)}) {
        for (int trial = 0; trial < 10; ++trial) {
            const Polynomial g = test::random_polynomial(rng, f, 3, 3, 3);
            const Polynomial h = test::random_polynomial(rng, f, 3, 3, 3);
            const std::int64_t top = std::max<std::int64_t>(0, g.degree()) +
                                     std::max<std::int64_t>(0, h.degree());
            for (std::int64_t k = 0; k <= top; ++k)
                CHECK(check_cartan(g, h, k));
        }
    }
}

TEST_CASE("Bullett-Macdonald identity in truncated series arithmetic") {
    CHECK(check_bullett_macdonald(Field::make(2), 1, 8));
    CHECK(check_bullett_macdonald(Field::make(3), 1, 8));
    CHECK(check_bullett_macdonald(Field::make(2), 1, 0));  // vacuous truncation
    CHECK(check_bullett_macdonald(Field::make(2), 2, 6));
}

TEST_CASE("Wu formula on elementary symmetric polynomials") {
    const Field f2 = Field::make(2);
    const Polynomial x = var(f2, 0), y = var(f2, 1);
    CHECK(wu_elementary(f2, 1, 2) == x * x * y + x * y * y);
    CHECK(wu_elementary(f2, 0, 2) == elementary_symmetric(f2, 2, 2));

    const Field f3 = Field::make(3);
    const Polynomial u = var(f3, 0), v = var(f3, 1);
    CHECK(wu_elementary(f3, 2, 2) == u.pow(3) * v.pow(3));

    for (const Field& f : {Field::make(2), Field::make(3)})
        for (std::int64_t n = 0; n <= 4; ++n)
            for (std::int64_t i = 0; i <= n; ++i)
                CHECK(wu_elementary(f, i, n) ==
                      steenrod_op(i, elementary_symmetric(f, n, n)));

    CHECK_THROWS_AS(wu_elementary(f2, 3, 2), IndexRangeError);
}

TEST_CASE("unstability on random homogeneous polynomials") {
    test::Rng rng(9004);
    int samples = 0;
    for (const Field& f : {Field::make(2), Field::make(3), Field::make(2, 2)}) {
        for (int trial = 0; trial < 67; ++trial) {
            const std::int64_t d = test::rand_int(rng, 1, 5);
            const Polynomial g = test::random_nonzero_homogeneous(rng, f, 3, d, 3);
            CHECK(steenrod_op(d, g) == g.pow(f.order()));
            for (std::int64_t i = d + 1; i <= d + 3; ++i)
                CHECK(steenrod_op(i, g).is_zero());
            ++samples;
        }
    }
    CHECK(samples > 200);
}

TEST_CASE("total power is multiplicative") {
    test::Rng rng(9005);
    for (const Field& f : {Field::make(2), Field::make(3), Field::make(2, 2)}) {
        for (int trial = 0; trial < 15; ++trial) {
            const Polynomial g = test::random_polynomial(rng, f, 3, 3, 3);
            const Polynomial h = test::random_polynomial(rng, f, 3, 3, 3);
            CHECK(total_power(g * h) == total_power(g) * total_power(h));
        }
    }
}

TEST_CASE("each P^i is additive and F_q-linear") {
    test::Rng rng(9006);
    for (const Field& f : {Field::make(2), Field::make(3), Field::make(2, 2)}) {
        for (int trial = 0; trial < 15; ++trial) {
            const Polynomial g = test::random_polynomial(rng, f, 3, 4, 3);
            const Polynomial h = test::random_polynomial(rng, f, 3, 4, 3);
            const FieldElement c = test::random_element(rng, f);
            for (std::int64_t i = 0; i <= 4; ++i) {
                CHECK(steenrod_op(i, g + h) == steenrod_op(i, g) + steenrod_op(i, h));
                CHECK(steenrod_op(i, g.scale(c)) == steenrod_op(i, g).scale(c));
            }
        }
    }
}

TEST_CASE("naturality: P^i commutes with linear substitution") {
    test::Rng rng(9007);
    for (const Field& f : {Field::make(2), Field::make(3)}) {
        for (int trial = 0; trial < 20; ++trial) {
            const Polynomial g = test::random_polynomial(rng, f, 3, 4, 4);
            const LinearMap a = test::random_invertible(rng, f, 3);
            for (std::int64_t i = 0; i <= g.degree() + 1; ++i)
                CHECK(steenrod_op(i, substitute(g, a)) == substitute(steenrod_op(i, g), a));
        }
    }
}
