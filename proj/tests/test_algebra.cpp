#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "steenrod/algebra.hpp"
#include "steenrod/power.hpp"

using namespace steenrod;

namespace {

SteenrodElement basic(const SteenrodAlgebra& alg, std::vector<std::int64_t> seq) {
    return SteenrodElement::basic(alg, IndexSeq(std::move(seq)));
}

// Reference normalizer that rewrites a RANDOM inadmissible pair each step,
// built on the public adem_wu_expand only; used to certify confluence.
SteenrodElement normalize_random_order(test::Rng& rng, const SteenrodElement& e) {
    const SteenrodAlgebra& alg = e.algebra();
    const std::int64_t q = alg.q();
    SteenrodElement result(alg);
    std::vector<std::pair<IndexSeq, FieldElement>> work(e.terms().begin(), e.terms().end());
    while (!work.empty()) {
        auto [seq, c] = work.back();
        work.pop_back();
        std::vector<std::size_t> bad;
        for (std::size_t s = 0; s + 1 < seq.length(); ++s)
            if (seq.entries()[s] < q * seq.entries()[s + 1])
                bad.push_back(s);
        if (bad.empty()) {
            result.add_term(seq, c);
            continue;
        }
        const std::size_t s = bad[static_cast<std::size_t>(
            test::rand_int(rng, 0, static_cast<std::int64_t>(bad.size()) - 1))];
        const auto& entries = seq.entries();
        const SteenrodElement expansion = adem_wu_expand(alg, entries[s], entries[s + 1]);
        for (const auto& [term, coeff] : expansion.terms()) {
            std::vector<std::int64_t> next(entries.begin(), entries.begin() + s);
            next.insert(next.end(), term.entries().begin(), term.entries().end());
            next.insert(next.end(), entries.begin() + s + 2, entries.end());
            work.emplace_back(IndexSeq(std::move(next)), c * coeff);
        }
    }
    return result;
}

}  // namespace

TEST_CASE("Adem-Wu expansion examples") {
    const SteenrodAlgebra a2{Field::make(2)};
    CHECK(adem_wu_expand(a2, 1, 1).is_zero());  // Sq^1 Sq^1 = 0
    CHECK(adem_wu_expand(a2, 1, 2) == basic(a2, {3}));
    CHECK(adem_wu_expand(a2, 2, 2) == basic(a2, {3, 1}));

    const SteenrodAlgebra a3{Field::make(3)};
    CHECK(adem_wu_expand(a3, 1, 1) == basic(a3, {2}).scale(a3.field().from_int(2)));

    CHECK_THROWS_AS(adem_wu_expand(a2, 2, 1), NotInadmissibleError);
    CHECK_THROWS_AS(adem_wu_expand(a2, 4, 2), NotInadmissibleError);
    CHECK_THROWS_AS(adem_wu_expand(a3, 3, 1), NotInadmissibleError);
}

TEST_CASE("moment") {
    CHECK(IndexSeq({1}).moment() == 1);
    CHECK(IndexSeq({2, 1}).moment() == 4);
    CHECK(IndexSeq().moment() == 0);
}

TEST_CASE("every Adem-Wu replacement strictly lowers the moment") {
    for (const Field& f : {Field::make(2), Field::make(3)}) {
        const SteenrodAlgebra alg{f};
        for (std::int64_t a = 1; a <= 12; ++a)
            for (std::int64_t b = 1; b <= 12; ++b) {
                if (a >= alg.q() * b || a + b > 12)
                    continue;
                const std::int64_t before = IndexSeq({a, b}).moment();
                const SteenrodElement expansion = adem_wu_expand(alg, a, b);
                for (const auto& [seq, c] : expansion.terms())
                    CHECK(seq.moment() < before);
            }
    }
}

TEST_CASE("normal form examples") {
    const SteenrodAlgebra a2{Field::make(2)};
    CHECK(to_admissible(basic(a2, {2, 3})) == basic(a2, {5}) + basic(a2, {4, 1}));
    const SteenrodElement adm = basic(a2, {4, 2, 1});
    CHECK(to_admissible(adm) == adm);
    CHECK(to_admissible(basic(a2, {1, 1, 5})).is_zero());
}

TEST_CASE("products") {
    const SteenrodAlgebra a2{Field::make(2)};
    const SteenrodElement one = SteenrodElement::unit(a2);
    const SteenrodElement p1 = SteenrodElement::op(a2, 1);
    CHECK(product(p1, one) == p1);
    CHECK(product(one, p1) == p1);
    CHECK(product(p1, SteenrodElement::op(a2, 2)) == basic(a2, {3}));
    CHECK(product(p1, p1).is_zero());
}

TEST_CASE("excess") {
    // The sequences M_k are exactly the admissible sequences of minimal
    // excess: every summand j_s - q j_{s+1} vanishes except the final entry.
    for (const Field& f : {Field::make(2), Field::make(3)}) {
        const SteenrodAlgebra alg{f};
        for (std::size_t k = 1; k <= 5; ++k)
            CHECK(excess(alg.q(), IndexSeq::m_sequence(alg.q(), k)) == 1);
        for (const IndexSeq& seq : enumerate_admissible(alg.q(), 5 * (alg.q() - 1)))
            if (!seq.empty() && excess(alg.q(), seq) == 1)
                CHECK(seq == IndexSeq::m_sequence(alg.q(), seq.length()));
    }
    CHECK(excess(2, IndexSeq()) == 0);
    CHECK(excess(2, IndexSeq({5})) == 5);
    CHECK(excess(2, IndexSeq({3, 1})) == 2);
    CHECK_THROWS_AS(excess(2, IndexSeq({1, 1})), NotAdmissibleError);
}

TEST_CASE("coproduct examples") {
    const SteenrodAlgebra a2{Field::make(2)};
    const SteenrodElement one = SteenrodElement::unit(a2);
    CHECK(coproduct(one) == TensorElement::outer(one, one));

    const SteenrodElement p1 = SteenrodElement::op(a2, 1);
    CHECK(coproduct(p1) ==
          TensorElement::outer(p1, one) + TensorElement::outer(one, p1));

    const SteenrodElement p2 = SteenrodElement::op(a2, 2);
    CHECK(coproduct(p2) == TensorElement::outer(p2, one) +
                               TensorElement::outer(p1, p1) +
                               TensorElement::outer(one, p2));
}

TEST_CASE("coproduct is cocommutative and counit-compatible") {
    test::Rng rng(8801);
    for (const Field& f : {Field::make(2), Field::make(3)}) {
        const SteenrodAlgebra alg{f};
        for (int trial = 0; trial < 10; ++trial) {
            const SteenrodElement e =
                to_admissible(test::random_steenrod(rng, alg, 3, 3, 4));
            const TensorElement t = coproduct(e);
            CHECK(t.flip() == t);
            // (counit x 1) of the coproduct recovers the element
            SteenrodElement left(alg), right(alg);
            for (const auto& [key, c] : t.terms()) {
                if (key.first.empty())
                    right.add_term(key.second, c);
                if (key.second.empty())
                    left.add_term(key.first, c);
            }
            CHECK(left == e);
            CHECK(right == e);
        }
    }
}

TEST_CASE("admissible enumeration") {
    const auto small = enumerate_admissible(2, 3);
    REQUIRE(small.size() == 5);
    CHECK(small[0] == IndexSeq());
    CHECK(small[1] == IndexSeq({1}));
    CHECK(small[2] == IndexSeq({2}));
    CHECK(small[3] == IndexSeq({2, 1}));
    CHECK(small[4] == IndexSeq({3}));

    // dimension counts at q = 2 for degrees 0..7
    const std::vector<std::size_t> expected{1, 1, 1, 2, 2, 2, 3, 4};
    const auto all = enumerate_admissible(2, 7);
    for (std::int64_t d = 0; d <= 7; ++d) {
        std::size_t count = 0;
        for (const IndexSeq& seq : all)
            if (seq.sum() == d)
                ++count;
        CHECK(count == expected[static_cast<std::size_t>(d)]);
        // independent oracle: filter all compositions of d
        CHECK(count == test::count_admissible_by_filter(2, d));
    }

    const auto q3 = enumerate_admissible(3, 4);
    REQUIRE(q3.size() == 3);
    CHECK(q3[0] == IndexSeq());
    CHECK(q3[1] == IndexSeq({1}));
    CHECK(q3[2] == IndexSeq({2}));

    for (std::int64_t d = 0; d <= 6; ++d) {
        std::size_t count = 0;
        for (const IndexSeq& seq : enumerate_admissible(3, 2 * d))
            if (seq.sum() == d)
                ++count;
        CHECK(count == test::count_admissible_by_filter(3, d));
    }
}

TEST_CASE("oracle soundness: normal forms act identically on polynomials") {
    for (const Field& f : {Field::make(2), Field::make(3)}) {
        const SteenrodAlgebra alg{f};
        const auto monomials = test::monomials_up_to(3, 5);
        std::vector<Polynomial> basis;
        basis.reserve(monomials.size());
        for (const Monomial& m : monomials) {
            Polynomial poly(f);
            poly.add_term(m, f.one());
            basis.push_back(std::move(poly));
        }
        // every sequence with at most 4 entries, each between 1 and 6
        std::vector<std::vector<std::int64_t>> seqs{{}};
        std::size_t checked = 0;
        for (int len = 1; len <= 4; ++len) {
            std::vector<std::vector<std::int64_t>> next;
            for (const auto& prefix : seqs) {
                if (prefix.size() != static_cast<std::size_t>(len) - 1)
                    continue;
                for (std::int64_t e = 1; e <= 6; ++e) {
                    auto extended = prefix;
                    extended.push_back(e);
                    next.push_back(extended);
                }
            }
            for (const auto& entries : next) {
                const IndexSeq seq{std::vector<std::int64_t>(entries)};
                if (seq.is_admissible(alg.q()))
                    continue;  // normal form is itself; nothing to compare
                const SteenrodElement nf = to_admissible(basic(alg, entries));
                for (const Polynomial& m : basis) {
                    const Polynomial direct = apply_basic_monomial(seq, m);
                    CHECK(apply(nf, m) == direct);
                }
                ++checked;
            }
            seqs.insert(seqs.end(), next.begin(), next.end());
        }
        CHECK(checked > 500);
    }
}

TEST_CASE("confluence: random rewrite order reaches the same normal form") {
    test::Rng rng(8802);
    for (int trial = 0; trial < 1000; ++trial) {
        const Field f = (trial % 2 == 0) ? Field::make(2) : Field::make(3);
        const SteenrodAlgebra alg{f};
        const SteenrodElement e = test::random_steenrod(rng, alg, 2, 4, 6);
        const SteenrodElement a = to_admissible(e);
        const SteenrodElement b = normalize_random_order(rng, e);
        CHECK(a == b);
        CHECK(b.admissible_form());
    }
}

TEST_CASE("product is associative after normalization") {
    test::Rng rng(8803);
    for (const Field& f : {Field::make(2), Field::make(3)}) {
        const SteenrodAlgebra alg{f};
        for (int trial = 0; trial < 20; ++trial) {
            const SteenrodElement a = test::random_steenrod(rng, alg, 2, 2, 5);
            const SteenrodElement b = test::random_steenrod(rng, alg, 2, 2, 5);
            const SteenrodElement c = test::random_steenrod(rng, alg, 2, 2, 5);
            CHECK(product(product(a, b), c) == product(a, product(b, c)));
        }
    }
}

TEST_CASE("coproduct is an algebra map") {
    test::Rng rng(8804);
    for (const Field& f : {Field::make(2), Field::make(3)}) {
        const SteenrodAlgebra alg{f};
        for (int trial = 0; trial < 12; ++trial) {
            const SteenrodElement a = test::random_steenrod(rng, alg, 2, 2, 4);
            const SteenrodElement b = test::random_steenrod(rng, alg, 2, 2, 4);
            CHECK(coproduct(product(a, b)) == coproduct(a) * coproduct(b));
        }
    }
}

TEST_CASE("expansion coefficients lie in the prime subfield") {
    const SteenrodAlgebra a4{Field::make(2, 2)};
    const SteenrodAlgebra a9{Field::make(3, 2)};
    for (const auto& alg : {a4, a9})
        for (std::int64_t a = 1; a <= 8; ++a)
            for (std::int64_t b = 1; b <= 8; ++b) {
                if (a >= alg.q() * b)
                    continue;
                const SteenrodElement expansion = adem_wu_expand(alg, a, b);
                for (const auto& [seq, c] : expansion.terms())
                    CHECK(c.in_prime_subfield());
            }
}

TEST_CASE("mixed-degree elements are allowed and report their degrees") {
    const SteenrodAlgebra a2{Field::make(2)};
    SteenrodElement e = basic(a2, {2}) + basic(a2, {3, 1});
    CHECK_FALSE(e.is_homogeneous());
    CHECK(e.degrees() == std::set<std::int64_t>{2, 4});
}

TEST_CASE("the extended algebra validates its parameter") {
    CHECK_THROWS_AS(SteenrodAlgebra(Field::make(2), 6), DomainError);
    CHECK_THROWS_AS(SteenrodAlgebra(Field::make(3), 2), DomainError);
    const SteenrodAlgebra ext(Field::make(2, 2), 2);
    CHECK(ext.q() == 2);
    CHECK(ext.field().order() == 4);
}
