#ifndef STEENROD_FORMS_HPP
#define STEENROD_FORMS_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "steenrod/poly.hpp"
#include "steenrod/power.hpp"

namespace steenrod {

/// Polynomial differential form in H(V) = F_q[V] (x) E[V]. A basis term is a
/// monomial times a product of distinct dz factors, stored as a bitmask
/// (bit i set means dz_{i+1} present, factors in ascending order).
class DifferentialForm {
public:
    using Key = std::pair<Monomial, std::uint64_t>;
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const;
    };
    using TermMap = std::map<Key, FieldElement, KeyLess>;

    explicit DifferentialForm(Field field) : field_(std::move(field)) {}

    static DifferentialForm zero(const Field& field) { return DifferentialForm(field); }
    static DifferentialForm from_polynomial(const Polynomial& f);
    /// dz_{index+1} (0-based index).
    static DifferentialForm dz(const Field& field, std::size_t index);

    const Field& field() const { return field_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, std::uint64_t dz_mask, const FieldElement& c);

    DifferentialForm operator+(const DifferentialForm& o) const;
    DifferentialForm operator-(const DifferentialForm& o) const;
    DifferentialForm operator-() const;
    /// Exterior product: alternating in the dz factors, zero on repeats.
    DifferentialForm operator*(const DifferentialForm& o) const;
    DifferentialForm scale(const FieldElement& c) const;
    bool operator==(const DifferentialForm& o) const;
    bool operator!=(const DifferentialForm& o) const { return !(*this == o); }

private:
    Field field_;
    TermMap terms_;
};

/// The Bockstein: the derivation with beta(dz) = z and beta(z) = 0. On a
/// basis term f dz_{i_1}...dz_{i_k} it returns the signed sum over j of
/// f z_{i_j} with dz_{i_j} removed. Satisfies beta o beta = 0.
DifferentialForm bockstein(const DifferentialForm& a);

/// Xi-series with differential-form coefficients.
class FormSeries {
public:
    explicit FormSeries(Field field) : field_(std::move(field)) {}

    const Field& field() const { return field_; }
    std::size_t size() const { return c_.size(); }
    DifferentialForm coeff(std::size_t i) const;
    void set_coeff(std::size_t i, const DifferentialForm& value);

    FormSeries operator+(const FormSeries& o) const;
    FormSeries operator*(const FormSeries& o) const;
    bool operator==(const FormSeries& o) const;
    bool operator!=(const FormSeries& o) const { return !(*this == o); }

private:
    void trim();
    Field field_;
    std::vector<DifferentialForm> c_;
};

/// P(xi) on forms: the multiplicative extension with z -> z + z^q xi on
/// polynomial generators and dz -> dz on exterior generators, so the series
/// restricts to total_power on purely polynomial forms.
FormSeries total_power_on_forms(const DifferentialForm& a);

}  // namespace steenrod

#endif
