#ifndef STEENROD_ALGEBRA_HPP
#define STEENROD_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "steenrod/index_seq.hpp"
#include "steenrod/poly.hpp"

namespace steenrod {

/// The reduced-power algebra P*: its defining relations are parametrized by
/// a prime power q, while coefficients live in a field of the same
/// characteristic. The standard algebra P*(F_q) has q equal to the field
/// order; the base-changed algebra P*(F_p) tensor F_q keeps q = p with F_q
/// coefficients.
class SteenrodAlgebra {
public:
    explicit SteenrodAlgebra(Field field)
        : field_(std::move(field)), q_(field_.order()) {}

    SteenrodAlgebra(Field field, std::int64_t q);

    const Field& field() const { return field_; }
    std::int64_t q() const { return q_; }
    std::int64_t characteristic() const { return field_.characteristic(); }

    bool operator==(const SteenrodAlgebra& o) const {
        return field_ == o.field_ && q_ == o.q_;
    }
    bool operator!=(const SteenrodAlgebra& o) const { return !(*this == o); }

private:
    Field field_;
    std::int64_t q_;
};

/// A finite linear combination of basic monomials P^I. Keys store strictly
/// positive entries (P^0 factors are dropped); the support need not be
/// admissible until to_admissible is applied.
class SteenrodElement {
public:
    using TermMap = std::map<IndexSeq, FieldElement, SumRightLexLess>;

    explicit SteenrodElement(SteenrodAlgebra alg) : alg_(std::move(alg)) {}

    static SteenrodElement zero(const SteenrodAlgebra& alg) { return SteenrodElement(alg); }
    static SteenrodElement unit(const SteenrodAlgebra& alg);
    /// The basic monomial P^I with coefficient 1.
    static SteenrodElement basic(const SteenrodAlgebra& alg, const IndexSeq& seq);
    /// P^i (the unit for i == 0).
    static SteenrodElement op(const SteenrodAlgebra& alg, std::int64_t i);

    const SteenrodAlgebra& algebra() const { return alg_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    FieldElement coeff(const IndexSeq& seq) const;
    void add_term(const IndexSeq& seq, const FieldElement& c);

    /// Degrees (q-1) * sum(I) present in the support.
    std::set<std::int64_t> degrees() const;
    bool is_homogeneous() const { return degrees().size() <= 1; }

    bool admissible_form() const;

    SteenrodElement operator+(const SteenrodElement& o) const;
    SteenrodElement operator-(const SteenrodElement& o) const;
    SteenrodElement operator-() const;
    SteenrodElement scale(const FieldElement& c) const;
    bool operator==(const SteenrodElement& o) const;
    bool operator!=(const SteenrodElement& o) const { return !(*this == o); }

private:
    SteenrodAlgebra alg_;
    TermMap terms_;
};

/// The Adem-Wu expansion of the inadmissible product P^a P^b (a < q b):
/// sum over j of (-1)^{a-qj} C((b-j)(q-1)-1, a-qj) P^{a+b-j} P^j. Throws
/// NotInadmissibleError when a >= q b.
SteenrodElement adem_wu_expand(const SteenrodAlgebra& alg, std::int64_t a, std::int64_t b);

/// Normal form: rewrites the leftmost inadmissible pair until all monomials
/// are admissible. Terminates because the moment strictly drops.
SteenrodElement to_admissible(const SteenrodElement& e);

/// Bilinear concatenation of index sequences, no normalization.
SteenrodElement concat_product(const SteenrodElement& a, const SteenrodElement& b);

/// Algebra product: concatenation followed by to_admissible.
SteenrodElement product(const SteenrodElement& a, const SteenrodElement& b);

/// An element of P* tensor P*, both components in admissible form.
class TensorElement {
public:
    using Key = std::pair<IndexSeq, IndexSeq>;
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const;
    };
    using TermMap = std::map<Key, FieldElement, KeyLess>;

    explicit TensorElement(SteenrodAlgebra alg) : alg_(std::move(alg)) {}

    static TensorElement outer(const SteenrodElement& left, const SteenrodElement& right);

    const SteenrodAlgebra& algebra() const { return alg_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    FieldElement coeff(const IndexSeq& left, const IndexSeq& right) const;
    void add_term(const IndexSeq& left, const IndexSeq& right, const FieldElement& c);

    TensorElement operator+(const TensorElement& o) const;
    TensorElement scale(const FieldElement& c) const;
    /// Componentwise product followed by normalization on both sides.
    TensorElement operator*(const TensorElement& o) const;
    /// Swaps the two tensor factors.
    TensorElement flip() const;
    bool operator==(const TensorElement& o) const;
    bool operator!=(const TensorElement& o) const { return !(*this == o); }

private:
    SteenrodAlgebra alg_;
    TermMap terms_;
};

/// Coproduct: algebra-map extension of P^k -> sum over i+j=k of P^i x P^j,
/// with both output components normalized.
TensorElement coproduct(const SteenrodElement& e);

/// All admissible sequences with (q-1) * sum <= degree_bound, ordered by
/// degree then lexicographically.
std::vector<IndexSeq> enumerate_admissible(std::int64_t q, std::int64_t degree_bound);

/// Action on polynomials: sum of c * apply_basic_monomial(I, f). The field
/// of f must match the coefficient field, and the algebra must be standard
/// (q equal to the field order).
Polynomial apply(const SteenrodElement& e, const Polynomial& f);

}  // namespace steenrod

#endif
