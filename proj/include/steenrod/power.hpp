#ifndef STEENROD_POWER_HPP
#define STEENROD_POWER_HPP

#include <cstdint>
#include <vector>

#include "steenrod/index_seq.hpp"
#include "steenrod/poly.hpp"

namespace steenrod {

/// Polynomial coefficients of powers of the degree-(1-q) variable xi; the
/// value of the total operation P(xi) on a polynomial. Trailing zero
/// coefficients are trimmed, so size() <= deg(f)+1 with the top coefficient
/// equal to the q-th power of the top homogeneous part.
class XiSeries {
public:
    explicit XiSeries(Field field) : field_(std::move(field)) {}

    const Field& field() const { return field_; }
    std::size_t size() const { return c_.size(); }
    Polynomial coeff(std::size_t i) const;
    void set_coeff(std::size_t i, const Polynomial& value);

    XiSeries operator+(const XiSeries& o) const;
    XiSeries operator*(const XiSeries& o) const;
    XiSeries scale(const FieldElement& c) const;
    bool operator==(const XiSeries& o) const;
    bool operator!=(const XiSeries& o) const { return !(*this == o); }

private:
    void trim();
    Field field_;
    std::vector<Polynomial> c_;
};

/// P(xi)(f): the multiplicative extension of z -> z + z^q xi. The
/// coefficient list is [P^0 f, P^1 f, ..., P^{deg f} f].
XiSeries total_power(const Polynomial& f);

/// P^i(f), the xi^i coefficient of total_power(f); computed termwise from
/// the binomial expansion of (z + z^q xi)^e so high components never force a
/// full series build.
Polynomial steenrod_op(std::int64_t i, const Polynomial& f);

/// P^{i_1}(P^{i_2}(... f)); zero entries act as the identity.
Polynomial apply_basic_monomial(const IndexSeq& seq, const Polynomial& f);

/// P^k(fg) == sum over i+j=k of P^i(f) P^j(g).
bool check_cartan(const Polynomial& f, const Polynomial& g, std::int64_t k);

/// Univariate truncated power series in t with polynomial coefficients,
/// exact modulo t^{order+1}.
class TruncatedSeries {
public:
    TruncatedSeries(Field field, std::int64_t order);

    std::int64_t order() const { return order_; }
    const Field& field() const { return field_; }
    Polynomial coeff(std::int64_t i) const;
    void set_coeff(std::int64_t i, const Polynomial& value);

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    bool operator==(const TruncatedSeries& o) const;
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

    /// c * t^k as a truncated series.
    static TruncatedSeries term(const Field& field, std::int64_t order,
                                const FieldElement& c, std::int64_t k);

private:
    Field field_;
    std::int64_t order_;
    std::vector<Polynomial> c_;
};

/// Evaluates P(sigma)(h) t-linearly: sum over k of P^k(h_j) sigma^k t^j.
TruncatedSeries apply_total(const TruncatedSeries& sigma, const TruncatedSeries& h);

/// P(s) o P(1) == P(u) o P(t^q) with u = (1-t)^{q-1}, s = t u, checked on
/// every variable of an n-variable ring modulo t^{order+1}; vacuously true
/// for order <= 0.
bool check_bullett_macdonald(const Field& field, std::size_t n_vars, std::int64_t order);

/// e_n * e_i(z_1^{q-1}, ..., z_n^{q-1}); verified against steenrod_op(i, e_n)
/// before returning.
Polynomial wu_elementary(const Field& field, std::int64_t i, std::int64_t n);

}  // namespace steenrod

#endif
