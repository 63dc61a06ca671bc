#ifndef STEENROD_GALOIS_HPP
#define STEENROD_GALOIS_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "steenrod/errors.hpp"

namespace steenrod {

class FieldElement;

/// A Galois field F_q, q = p^nu, represented in the polynomial basis over F_p
/// with an explicit monic irreducible modulus. For nu == 1 the modulus
/// machinery is bypassed and plain residue arithmetic is used.
///
/// Field values are cheap shared handles; all arithmetic is exact.
class Field {
public:
    /// F_{p^nu} with the default modulus: the lexicographically least monic
    /// irreducible polynomial of degree nu (coefficient list read low to
    /// high). Throws NonPrimeError unless p is prime.
    static Field make(std::int64_t p, int nu = 1);

    /// F_{p^nu} with an explicit modulus, given as nu+1 coefficients low to
    /// high, monic. Throws ReducibleModulusError when the modulus fails trial
    /// factorization over F_p.
    static Field make(std::int64_t p, int nu, const std::vector<std::int64_t>& modulus);

    std::int64_t characteristic() const;
    int degree() const;            ///< nu
    std::int64_t order() const;    ///< q = p^nu

    /// Modulus coefficients, low to high (size nu+1); empty when nu == 1.
    const std::vector<std::int64_t>& modulus() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(std::int64_t value) const;
    /// Coefficients low to high, at most nu of them.
    FieldElement from_coeffs(const std::vector<std::int64_t>& coeffs) const;
    /// The class of t; requires nu >= 2.
    FieldElement generator() const;

    /// All q elements in a fixed deterministic order.
    std::vector<FieldElement> elements() const;

    bool operator==(const Field& other) const;
    bool operator!=(const Field& other) const { return !(*this == other); }

    /// "p" or "p^nu".
    std::string spec_string() const;

private:
    struct Impl;
    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
    friend class FieldElement;
};

/// An element of F_q in the polynomial basis; immutable value type.
class FieldElement {
public:
    const Field& field() const { return field_; }
    const std::vector<std::int64_t>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;

    /// True when the element lies in the prime subfield F_p.
    bool in_prime_subfield() const;
    /// The residue in [0, p) of a prime-subfield element; DomainError otherwise.
    std::int64_t prime_value() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    /// Multiplicative inverse; DivisionByZeroError on 0.
    FieldElement inv() const;
    /// a^e for e >= 0.
    FieldElement pow(std::int64_t e) const;
    /// a^{p^k}; frobenius(nu) is the identity.
    FieldElement frobenius(std::int64_t k) const;

private:
    friend class Field;
    FieldElement(Field f, std::vector<std::int64_t> c)
        : field_(std::move(f)), c_(std::move(c)) {}
    Field field_;
    std::vector<std::int64_t> c_;
};

/// C(n, k) mod p by Lucas' theorem on base-p digits; 0 when k < 0, n < 0 or
/// k > n.
std::int64_t binom_mod_p(std::int64_t n, std::int64_t k, std::int64_t p);

}  // namespace steenrod

#endif
