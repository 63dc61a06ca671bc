#ifndef STEENROD_MILNOR_HPP
#define STEENROD_MILNOR_HPP

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "steenrod/algebra.hpp"

namespace steenrod {

/// Linear combination of Milnor basis elements P(I), the basis of P* dual
/// to the monomials xi^I of the polynomial dual. deg P(I) = sum i_s (q^s - 1).
class MilnorElement {
public:
    using TermMap = std::map<IndexSeq, FieldElement, RightLexLess>;

    explicit MilnorElement(SteenrodAlgebra alg) : alg_(std::move(alg)) {}

    static MilnorElement zero(const SteenrodAlgebra& alg) { return MilnorElement(alg); }
    static MilnorElement unit(const SteenrodAlgebra& alg);
    /// P(I) with coefficient 1.
    static MilnorElement basis(const SteenrodAlgebra& alg, const IndexSeq& exponents);

    const SteenrodAlgebra& algebra() const { return alg_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    FieldElement coeff(const IndexSeq& exponents) const;
    void add_term(const IndexSeq& exponents, const FieldElement& c);

    std::set<std::int64_t> degrees() const;
    bool is_homogeneous() const { return degrees().size() <= 1; }

    MilnorElement operator+(const MilnorElement& o) const;
    MilnorElement operator-() const;
    MilnorElement scale(const FieldElement& c) const;
    bool operator==(const MilnorElement& o) const;
    bool operator!=(const MilnorElement& o) const { return !(*this == o); }

private:
    SteenrodAlgebra alg_;
    TermMap terms_;
};

/// Element of the dual Hopf algebra P_* = F_q[xi_1, xi_2, ...]; keys are the
/// exponent sequences of monomials xi^I.
class DualElement {
public:
    using TermMap = std::map<IndexSeq, FieldElement, RightLexLess>;

    explicit DualElement(SteenrodAlgebra alg) : alg_(std::move(alg)) {}

    static DualElement zero(const SteenrodAlgebra& alg) { return DualElement(alg); }
    static DualElement one(const SteenrodAlgebra& alg);
    /// xi_k (xi_0 = 1).
    static DualElement xi(const SteenrodAlgebra& alg, std::size_t k);
    static DualElement monomial(const SteenrodAlgebra& alg, const IndexSeq& exponents);

    const SteenrodAlgebra& algebra() const { return alg_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    FieldElement coeff(const IndexSeq& exponents) const;
    void add_term(const IndexSeq& exponents, const FieldElement& c);

    std::set<std::int64_t> degrees() const;
    bool is_homogeneous() const { return degrees().size() <= 1; }

    DualElement operator+(const DualElement& o) const;
    DualElement operator*(const DualElement& o) const;
    DualElement scale(const FieldElement& c) const;
    DualElement pow(std::int64_t k) const;
    bool operator==(const DualElement& o) const;
    bool operator!=(const DualElement& o) const { return !(*this == o); }

private:
    SteenrodAlgebra alg_;
    TermMap terms_;
};

/// Element of P_* tensor P_*.
class DualTensor {
public:
    using Key = std::pair<IndexSeq, IndexSeq>;
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const;
    };
    using TermMap = std::map<Key, FieldElement, KeyLess>;

    explicit DualTensor(SteenrodAlgebra alg) : alg_(std::move(alg)) {}

    static DualTensor outer(const DualElement& left, const DualElement& right);

    const SteenrodAlgebra& algebra() const { return alg_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const IndexSeq& left, const IndexSeq& right, const FieldElement& c);

    DualTensor operator+(const DualTensor& o) const;
    DualTensor operator*(const DualTensor& o) const;
    bool operator==(const DualTensor& o) const;
    bool operator!=(const DualTensor& o) const { return !(*this == o); }

private:
    SteenrodAlgebra alg_;
    TermMap terms_;
};

/// All exponent sequences I with sum i_s (q^s - 1) == degree, ascending
/// right-lex.
std::vector<IndexSeq> enumerate_milnor(std::int64_t q, std::int64_t degree);

/// <P^J | xi^K>, computed by splitting xi_l off xi^K and pairing the
/// coproduct of P^J against xi^{K - Delta_l} tensor xi_l; values always lie
/// in the prime subfield. J need not be admissible (it is normalized first).
FieldElement pairing(const SteenrodAlgebra& alg, const IndexSeq& j, const IndexSeq& k);

/// Bilinear extension of the monomial pairing.
FieldElement pairing(const SteenrodElement& e, const DualElement& x);

/// Componentwise pairing of tensors.
FieldElement pairing(const TensorElement& e, const DualTensor& x);

/// Change of basis: P^J = sum over K of <P^J | xi^K> P(K) degree by degree.
MilnorElement admissible_to_milnor(const SteenrodElement& e);

/// Inverse change of basis via back-substitution against the unit
/// triangular pairing matrix.
SteenrodElement milnor_to_admissible(const MilnorElement& m);

/// The Milnor primitive P^{Delta_k}: P^1 for k = 1, otherwise the
/// normalized commutator [P^{q^{k-1}}, P^{Delta_{k-1}}].
SteenrodElement milnor_primitive(const SteenrodAlgebra& alg, std::int64_t k);

/// Algebra-map extension of xi_k -> sum over i+j=k of xi_i^{q^j} tensor xi_j.
DualTensor dual_coproduct(const DualElement& x);

/// Product in the Milnor basis via the round trip through the admissible
/// basis.
MilnorElement milnor_product(const MilnorElement& a, const MilnorElement& b);

}  // namespace steenrod

#endif
