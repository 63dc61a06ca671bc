#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "steenrod/poly.hpp"

using namespace steenrod;

namespace {

Polynomial var(const Field& f, std::size_t i) { return Polynomial::variable(f, i); }

}  // namespace

TEST_CASE("ring arithmetic examples") {
    const Field f2 = Field::make(2);
    const Polynomial x = var(f2, 0), y = var(f2, 1);
    CHECK((x + y) * (x + y) == x * x + y * y);  // characteristic 2
    CHECK(x * y == y * x);

    const Field f3 = Field::make(3);
    const Polynomial u = var(f3, 0), v = var(f3, 1);
    CHECK((u + v).pow(3) == u.pow(3) + v.pow(3));  // Frobenius on the ring
}

TEST_CASE("grading bookkeeping") {
    const Field f2 = Field::make(2);
    const Polynomial x = var(f2, 0), y = var(f2, 1);
    const Polynomial f = x * x + x * y * y;
    CHECK(f.degree() == 3);
    CHECK_FALSE(f.is_homogeneous());
    CHECK(f.homogeneous_component(2) == x * x);
    CHECK(f.homogeneous_component(5).is_zero());
    CHECK(Polynomial::zero(f2).degree() == -1);
    CHECK((x * y).degree() == 2);
}

TEST_CASE("substitution") {
    const Field f2 = Field::make(2);
    const Polynomial x = var(f2, 0), y = var(f2, 1);
    const Polynomial f = x * x * y;

    CHECK(substitute(f, LinearMap::identity(f2, 2)) == f);

    LinearMap swap(f2, 2, 2);
    swap.set(0, 1, f2.one());
    swap.set(1, 0, f2.one());
    CHECK(substitute(f, swap) == y * y * x);

    // [[1,1],[0,1]] lies in GL(2, F_2) and fixes Q = x^2 + xy + y^2
    LinearMap a(f2, 2, 2);
    a.set(0, 0, f2.one());
    a.set(0, 1, f2.one());
    a.set(1, 1, f2.one());
    const Polynomial q = x * x + x * y + y * y;
    CHECK(substitute(q, a) == q);

    CHECK_THROWS_AS(substitute(f, LinearMap::identity(f2, 1)), ShapeMismatchError);
}

TEST_CASE("substitution is an algebra homomorphism") {
    test::Rng rng(7101);
    for (const Field& f : {Field::make(2), Field::make(3), Field::make(2, 2)}) {
        for (int trial = 0; trial < 25; ++trial) {
            const std::size_t n = 1 + static_cast<std::size_t>(test::rand_int(rng, 0, 2));
            const std::size_t m = 1 + static_cast<std::size_t>(test::rand_int(rng, 0, 2));
            LinearMap a(f, m, n);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    a.set(i, j, test::random_element(rng, f));
            const Polynomial g = test::random_polynomial(rng, f, n, 3, 3);
            const Polynomial h = test::random_polynomial(rng, f, n, 3, 3);
            CHECK(substitute(g * h, a) == substitute(g, a) * substitute(h, a));
            CHECK(substitute(g + h, a) == substitute(g, a) + substitute(h, a));
        }
    }
}

TEST_CASE("homogeneous components sum back to the original") {
    test::Rng rng(7103);
    for (const Field& f : {Field::make(2), Field::make(3)}) {
        for (int trial = 0; trial < 30; ++trial) {
            const Polynomial g = test::random_polynomial(rng, f, 3, 5, 6);
            Polynomial sum(f);
            for (const auto& [d, comp] : g.homogeneous_components()) {
                CHECK(comp.is_homogeneous());
                CHECK(comp.degree() == d);
                sum = sum + comp;
            }
            CHECK(sum == g);
        }
    }
}

TEST_CASE("elementary symmetric polynomials") {
    const Field f2 = Field::make(2);
    CHECK(elementary_symmetric(f2, 0, 3) == Polynomial::constant(f2.one()));
    const Polynomial x = var(f2, 0), y = var(f2, 1), z = var(f2, 2);
    CHECK(elementary_symmetric(f2, 2, 2) == x * y);
    CHECK(elementary_symmetric(f2, 2, 3) == x * y + x * z + y * z);
    CHECK_THROWS_AS(elementary_symmetric(f2, 3, 2), IndexRangeError);
    CHECK_THROWS_AS(elementary_symmetric(f2, -1, 2), IndexRangeError);
}

TEST_CASE("generating function identity for elementary symmetrics, n <= 5") {
    for (const Field& f : {Field::make(2), Field::make(3), Field::make(5)}) {
        for (std::int64_t n = 0; n <= 5; ++n) {
            // product over j of (1 + z_j t), collected by powers of t
            std::vector<Polynomial> by_t_power{Polynomial::constant(f.one())};
            for (std::int64_t j = 0; j < n; ++j) {
                std::vector<Polynomial> next(by_t_power.size() + 1, Polynomial::zero(f));
                const Polynomial zj = var(f, static_cast<std::size_t>(j));
                for (std::size_t k = 0; k < by_t_power.size(); ++k) {
                    next[k] = next[k] + by_t_power[k];
                    next[k + 1] = next[k + 1] + by_t_power[k] * zj;
                }
                by_t_power = std::move(next);
            }
            for (std::int64_t i = 0; i <= n; ++i)
                CHECK(by_t_power[static_cast<std::size_t>(i)] ==
                      elementary_symmetric(f, i, n));
        }
    }
}

TEST_CASE("field mismatch is rejected") {
    const Field f2 = Field::make(2);
    const Field f3 = Field::make(3);
    CHECK_THROWS_AS(var(f2, 0) + var(f3, 0), FieldMismatchError);
    CHECK_THROWS_AS(var(f2, 0) * var(f3, 0), FieldMismatchError);
}
