#ifndef STEENROD_POLY_HPP
#define STEENROD_POLY_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "steenrod/galois.hpp"

namespace steenrod {

/// Exponent vector with trailing zeros trimmed; variables are z_1, z_2, ...
class Monomial {
public:
    Monomial() = default;  // the unit monomial
    explicit Monomial(std::vector<std::int64_t> exps);

    static Monomial variable(std::size_t index, std::int64_t exp = 1);

    std::int64_t degree() const;
    std::size_t nvars() const { return e_.size(); }
    std::int64_t exponent(std::size_t index) const;  // 0-based; 0 beyond support
    const std::vector<std::int64_t>& exponents() const { return e_; }

    Monomial operator*(const Monomial& o) const;
    Monomial pow(std::int64_t k) const;
    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

private:
    std::vector<std::int64_t> e_;
};

/// Graded lexicographic order (total degree, then leftmost exponent).
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grlex_less(a, b);
    }
};

/// Sparse multivariate polynomial over F_q; no zero coefficients are stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, FieldElement, GrlexLess>;

    explicit Polynomial(Field field) : field_(std::move(field)) {}

    static Polynomial zero(const Field& field) { return Polynomial(field); }
    static Polynomial constant(const FieldElement& value);
    static Polynomial variable(const Field& field, std::size_t index);

    const Field& field() const { return field_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    /// Max total degree over terms; -1 for the zero polynomial.
    std::int64_t degree() const;
    std::size_t nvars() const;
    bool is_homogeneous() const;

    FieldElement coeff(const Monomial& m) const;
    /// Adds c * m, erasing the term when the sum vanishes.
    void add_term(const Monomial& m, const FieldElement& c);

    Polynomial homogeneous_component(std::int64_t d) const;
    std::map<std::int64_t, Polynomial> homogeneous_components() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scale(const FieldElement& c) const;
    Polynomial pow(std::int64_t k) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

private:
    Field field_;
    TermMap terms_;
};

/// An m x n matrix over F_q acting contravariantly on polynomials: the
/// substitution z_j -> sum_i a_{ij} z_i maps an n-variable polynomial to an
/// m-variable one.
class LinearMap {
public:
    LinearMap(Field field, std::size_t rows, std::size_t cols);

    static LinearMap identity(const Field& field, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    const FieldElement& at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const FieldElement& value);

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<FieldElement> a_;  // row major
};

/// Algebra homomorphism induced by a linear map; ShapeMismatchError when f
/// uses more variables than the map has columns.
Polynomial substitute(const Polynomial& f, const LinearMap& a);

/// e_i(z_1, ..., z_n); IndexRangeError unless 0 <= i <= n.
Polynomial elementary_symmetric(const Field& field, std::int64_t i, std::int64_t n);

}  // namespace steenrod

#endif
