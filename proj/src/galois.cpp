#include "steenrod/galois.hpp"

#include <algorithm>

namespace steenrod {

struct Field::Impl {
    std::int64_t p;
    int nu;
    std::int64_t q;
    std::vector<std::int64_t> modulus;  // size nu+1, monic; empty for nu == 1
};

namespace {

bool is_prime(std::int64_t n) {
    if (n < 2)
        return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::int64_t mod(std::int64_t v, std::int64_t p) {
    v %= p;
    return v < 0 ? v + p : v;
}

void trim(std::vector<std::int64_t>& v) {
    while (!v.empty() && v.back() == 0)
        v.pop_back();
}

// Remainder of a modulo the monic polynomial b, coefficients low to high.
std::vector<std::int64_t> poly_rem(std::vector<std::int64_t> a,
                                   const std::vector<std::int64_t>& b,
                                   std::int64_t p) {
    const std::size_t db = b.size() - 1;
    trim(a);
    while (a.size() > db) {
        const std::int64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        if (lead != 0)
            for (std::size_t i = 0; i <= db; ++i)
                a[shift + i] = mod(a[shift + i] - lead * b[i], p);
        a.pop_back();
        trim(a);
    }
    return a;
}

// Trial factorization: a monic f of degree d >= 1 is irreducible iff no monic
// polynomial of degree 1..d/2 divides it. Feasible for desk-scale degrees.
bool is_irreducible(const std::vector<std::int64_t>& f, std::int64_t p) {
    const std::size_t d = f.size() - 1;
    if (d == 0)
        return false;
    for (std::size_t e = 1; 2 * e <= d; ++e) {
        std::int64_t count = 1;
        for (std::size_t i = 0; i < e; ++i)
            count *= p;
        for (std::int64_t v = 0; v < count; ++v) {
            std::vector<std::int64_t> g(e + 1, 0);
            std::int64_t rest = v;
            for (std::size_t i = 0; i < e; ++i) {
                g[i] = rest % p;
                rest /= p;
            }
            g[e] = 1;
            if (poly_rem(f, g, p).empty())
                return false;
        }
    }
    return true;
}

// Lexicographically least (coefficient list low to high) monic irreducible
// of degree nu over F_p. Candidates are scanned so that the constant
// coefficient is the most significant comparison key.
std::vector<std::int64_t> default_modulus(std::int64_t p, int nu) {
    std::int64_t count = 1;
    for (int i = 0; i < nu; ++i)
        count *= p;
    for (std::int64_t v = 0; v < count; ++v) {
        std::vector<std::int64_t> f(nu + 1, 0);
        std::int64_t rest = v;
        for (int i = nu - 1; i >= 0; --i) {
            f[i] = rest % p;
            rest /= p;
        }
        f[nu] = 1;
        if (is_irreducible(f, p))
            return f;
    }
    throw DomainError("no irreducible modulus found");  // unreachable for nu >= 1
}

}  // namespace

Field Field::make(std::int64_t p, int nu) {
    if (!is_prime(p))
        throw NonPrimeError(p);
    if (nu < 1)
        throw DomainError("extension degree must be positive");
    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->nu = nu;
    impl->q = 1;
    for (int i = 0; i < nu; ++i)
        impl->q *= p;
    if (nu > 1)
        impl->modulus = default_modulus(p, nu);
    return Field(std::move(impl));
}

Field Field::make(std::int64_t p, int nu, const std::vector<std::int64_t>& modulus) {
    if (!is_prime(p))
        throw NonPrimeError(p);
    if (nu < 1)
        throw DomainError("extension degree must be positive");
    if (nu == 1)
        return make(p, 1);
    if (modulus.size() != static_cast<std::size_t>(nu) + 1)
        throw ReducibleModulusError("modulus must have degree " + std::to_string(nu));
    std::vector<std::int64_t> m(modulus.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        m[i] = mod(modulus[i], p);
    if (m.back() != 1)
        throw ReducibleModulusError("modulus must be monic");
    if (!is_irreducible(m, p))
        throw ReducibleModulusError("modulus is reducible over F_" + std::to_string(p));
    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->nu = nu;
    impl->q = 1;
    for (int i = 0; i < nu; ++i)
        impl->q *= p;
    impl->modulus = std::move(m);
    return Field(std::move(impl));
}

std::int64_t Field::characteristic() const { return impl_->p; }
int Field::degree() const { return impl_->nu; }
std::int64_t Field::order() const { return impl_->q; }
const std::vector<std::int64_t>& Field::modulus() const { return impl_->modulus; }

FieldElement Field::zero() const {
    return FieldElement(*this, std::vector<std::int64_t>(impl_->nu, 0));
}

FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(std::int64_t value) const {
    std::vector<std::int64_t> c(impl_->nu, 0);
    c[0] = mod(value, impl_->p);
    return FieldElement(*this, std::move(c));
}

FieldElement Field::from_coeffs(const std::vector<std::int64_t>& coeffs) const {
    if (coeffs.size() > static_cast<std::size_t>(impl_->nu))
        throw DomainError("too many coefficients for field of degree " +
                          std::to_string(impl_->nu));
    std::vector<std::int64_t> c(impl_->nu, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        c[i] = mod(coeffs[i], impl_->p);
    return FieldElement(*this, std::move(c));
}

FieldElement Field::generator() const {
    if (impl_->nu < 2)
        throw DomainError("prime field has no polynomial-basis generator t");
    std::vector<std::int64_t> c(impl_->nu, 0);
    c[1] = 1;
    return FieldElement(*this, std::move(c));
}

std::vector<FieldElement> Field::elements() const {
    std::vector<FieldElement> all;
    all.reserve(static_cast<std::size_t>(impl_->q));
    for (std::int64_t v = 0; v < impl_->q; ++v) {
        std::vector<std::int64_t> c(impl_->nu, 0);
        std::int64_t rest = v;
        for (int i = 0; i < impl_->nu; ++i) {
            c[i] = rest % impl_->p;
            rest /= impl_->p;
        }
        all.push_back(FieldElement(*this, std::move(c)));
    }
    return all;
}

bool Field::operator==(const Field& other) const {
    if (impl_ == other.impl_)
        return true;
    return impl_->p == other.impl_->p && impl_->nu == other.impl_->nu &&
           impl_->modulus == other.impl_->modulus;
}

std::string Field::spec_string() const {
    if (impl_->nu == 1)
        return std::to_string(impl_->p);
    return std::to_string(impl_->p) + "^" + std::to_string(impl_->nu);
}

namespace {

void check_same_field(const FieldElement& a, const FieldElement& b) {
    if (a.field() != b.field())
        throw FieldMismatchError();
}

}  // namespace

bool FieldElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](std::int64_t v) { return v == 0; });
}

bool FieldElement::is_one() const {
    if (c_[0] != 1)
        return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0)
            return false;
    return true;
}

bool FieldElement::in_prime_subfield() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0)
            return false;
    return true;
}

std::int64_t FieldElement::prime_value() const {
    if (!in_prime_subfield())
        throw DomainError("element does not lie in the prime subfield");
    return c_[0];
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_field(*this, o);
    const std::int64_t p = field_.characteristic();
    std::vector<std::int64_t> c(c_.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = mod(c_[i] + o.c_[i], p);
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same_field(*this, o);
    const std::int64_t p = field_.characteristic();
    std::vector<std::int64_t> c(c_.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = mod(c_[i] - o.c_[i], p);
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-() const {
    const std::int64_t p = field_.characteristic();
    std::vector<std::int64_t> c(c_.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = mod(-c_[i], p);
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_field(*this, o);
    const std::int64_t p = field_.characteristic();
    const int nu = field_.degree();
    if (nu == 1)
        return FieldElement(field_, {mod(c_[0] * o.c_[0], p)});
    std::vector<std::int64_t> c(2 * nu - 1, 0);
    for (int i = 0; i < nu; ++i) {
        if (c_[i] == 0)
            continue;
        for (int j = 0; j < nu; ++j)
            c[i + j] = mod(c[i + j] + c_[i] * o.c_[j], p);
    }
    const auto& m = field_.modulus();
    for (int k = 2 * nu - 2; k >= nu; --k) {
        const std::int64_t lead = c[k];
        if (lead == 0)
            continue;
        for (int i = 0; i < nu; ++i)
            c[k - nu + i] = mod(c[k - nu + i] - lead * m[i], p);
        c[k] = 0;
    }
    c.resize(nu);
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    return *this * o.inv();
}

bool FieldElement::operator==(const FieldElement& o) const {
    return field_ == o.field_ && c_ == o.c_;
}

FieldElement FieldElement::inv() const {
    if (is_zero())
        throw DivisionByZeroError();
    return pow(field_.order() - 2);
}

FieldElement FieldElement::pow(std::int64_t e) const {
    if (e < 0)
        throw DomainError("negative exponent; use inv()");
    FieldElement result = field_.one();
    FieldElement base = *this;
    while (e > 0) {
        if (e & 1)
            result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

FieldElement FieldElement::frobenius(std::int64_t k) const {
    const int nu = field_.degree();
    k %= nu;  // a^{p^nu} = a
    std::int64_t e = 1;
    for (std::int64_t i = 0; i < k; ++i)
        e *= field_.characteristic();
    return pow(e);
}

namespace {

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1;
    b %= p;
    while (e > 0) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// C(n, k) mod p for digits 0 <= k <= n < p.
std::int64_t binom_digit(std::int64_t n, std::int64_t k, std::int64_t p) {
    std::int64_t c = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        c = c * ((n - i) % p) % p;
        c = c * pow_mod(i + 1, p - 2, p) % p;
    }
    return c;
}

}  // namespace

std::int64_t binom_mod_p(std::int64_t n, std::int64_t k, std::int64_t p) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    std::int64_t result = 1;
    while (n > 0 || k > 0) {
        const std::int64_t nd = n % p;
        const std::int64_t kd = k % p;
        if (kd > nd)
            return 0;
        result = result * binom_digit(nd, kd, p) % p;
        n /= p;
        k /= p;
    }
    return result;
}

}  // namespace steenrod
