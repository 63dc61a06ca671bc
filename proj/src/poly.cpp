#include "steenrod/poly.hpp"

#include <algorithm>

namespace steenrod {

Monomial::Monomial(std::vector<std::int64_t> exps) : e_(std::move(exps)) {
    for (std::int64_t v : e_)
        if (v < 0)
            throw IndexRangeError("monomial exponents must be nonnegative");
    while (!e_.empty() && e_.back() == 0)
        e_.pop_back();
}

Monomial Monomial::variable(std::size_t index, std::int64_t exp) {
    std::vector<std::int64_t> e(index + 1, 0);
    e[index] = exp;
    return Monomial(std::move(e));
}

std::int64_t Monomial::degree() const {
    std::int64_t total = 0;
    for (std::int64_t v : e_)
        total += v;
    return total;
}

std::int64_t Monomial::exponent(std::size_t index) const {
    return index < e_.size() ? e_[index] : 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    std::vector<std::int64_t> e(std::max(e_.size(), o.e_.size()), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = exponent(i) + o.exponent(i);
    return Monomial(std::move(e));
}

Monomial Monomial::pow(std::int64_t k) const {
    if (k < 0)
        throw IndexRangeError("monomial power must be nonnegative");
    std::vector<std::int64_t> e = e_;
    for (std::int64_t& v : e)
        v *= k;
    return Monomial(std::move(e));
}

bool grlex_less(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    const std::size_t n = std::max(a.nvars(), b.nvars());
    for (std::size_t i = 0; i < n; ++i)
        if (a.exponent(i) != b.exponent(i))
            return a.exponent(i) < b.exponent(i);
    return false;
}

Polynomial Polynomial::constant(const FieldElement& value) {
    Polynomial f(value.field());
    f.add_term(Monomial(), value);
    return f;
}

Polynomial Polynomial::variable(const Field& field, std::size_t index) {
    Polynomial f(field);
    f.add_term(Monomial::variable(index), field.one());
    return f;
}

std::int64_t Polynomial::degree() const {
    std::int64_t d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.degree());
    return d;
}

std::size_t Polynomial::nvars() const {
    std::size_t n = 0;
    for (const auto& [m, c] : terms_)
        n = std::max(n, m.nvars());
    return n;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty())
        return true;
    const std::int64_t d = terms_.begin()->first.degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return t.first.degree() == d; });
}

FieldElement Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? field_.zero() : it->second;
}

void Polynomial::add_term(const Monomial& m, const FieldElement& c) {
    if (c.field() != field_)
        throw FieldMismatchError();
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Polynomial Polynomial::homogeneous_component(std::int64_t d) const {
    Polynomial out(field_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == d)
            out.add_term(m, c);
    return out;
}

std::map<std::int64_t, Polynomial> Polynomial::homogeneous_components() const {
    std::map<std::int64_t, Polynomial> out;
    for (const auto& [m, c] : terms_) {
        auto it = out.find(m.degree());
        if (it == out.end())
            it = out.emplace(m.degree(), Polynomial(field_)).first;
        it->second.add_term(m, c);
    }
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (field_ != o.field_)
        throw FieldMismatchError();
    Polynomial out = *this;
    for (const auto& [m, c] : o.terms_)
        out.add_term(m, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return *this + (-o);
}

Polynomial Polynomial::operator-() const {
    Polynomial out(field_);
    for (const auto& [m, c] : terms_)
        out.add_term(m, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (field_ != o.field_)
        throw FieldMismatchError();
    Polynomial out(field_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_)
            out.add_term(m1 * m2, c1 * c2);
    return out;
}

Polynomial Polynomial::scale(const FieldElement& c) const {
    if (c.field() != field_)
        throw FieldMismatchError();
    Polynomial out(field_);
    for (const auto& [m, v] : terms_)
        out.add_term(m, v * c);
    return out;
}

Polynomial Polynomial::pow(std::int64_t k) const {
    if (k < 0)
        throw IndexRangeError("polynomial power must be nonnegative");
    Polynomial result = Polynomial::constant(field_.one());
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1)
            result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return field_ == o.field_ && terms_ == o.terms_;
}

LinearMap::LinearMap(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
    a_.reserve(rows * cols);
    for (std::size_t i = 0; i < rows * cols; ++i)
        a_.push_back(field_.zero());
}

LinearMap LinearMap::identity(const Field& field, std::size_t n) {
    LinearMap a(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        a.set(i, i, field.one());
    return a;
}

const FieldElement& LinearMap::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_)
        throw IndexRangeError("linear map index out of range");
    return a_[i * cols_ + j];
}

void LinearMap::set(std::size_t i, std::size_t j, const FieldElement& value) {
    if (i >= rows_ || j >= cols_)
        throw IndexRangeError("linear map index out of range");
    if (value.field() != field_)
        throw FieldMismatchError();
    a_[i * cols_ + j] = value;
}

Polynomial substitute(const Polynomial& f, const LinearMap& a) {
    if (f.field() != a.field())
        throw FieldMismatchError();
    if (f.nvars() > a.cols())
        throw ShapeMismatchError("polynomial uses more variables than the map has columns");
    std::vector<Polynomial> forms;  // image of z_j
    forms.reserve(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        Polynomial l(f.field());
        for (std::size_t i = 0; i < a.rows(); ++i)
            l.add_term(Monomial::variable(i), a.at(i, j));
        forms.push_back(std::move(l));
    }
    Polynomial out(f.field());
    for (const auto& [m, c] : f.terms()) {
        Polynomial prod = Polynomial::constant(c);
        for (std::size_t j = 0; j < m.nvars(); ++j)
            if (m.exponent(j) > 0)
                prod = prod * forms[j].pow(m.exponent(j));
        out = out + prod;
    }
    return out;
}

Polynomial elementary_symmetric(const Field& field, std::int64_t i, std::int64_t n) {
    if (i < 0 || n < 0 || i > n)
        throw IndexRangeError("elementary symmetric polynomial needs 0 <= i <= n");
    // e[k] after processing j variables holds e_k(z_1..z_j).
    std::vector<Polynomial> e(static_cast<std::size_t>(i) + 1, Polynomial(field));
    e[0] = Polynomial::constant(field.one());
    for (std::int64_t j = 0; j < n; ++j) {
        const Polynomial z = Polynomial::variable(field, static_cast<std::size_t>(j));
        for (std::int64_t k = std::min<std::int64_t>(i, j + 1); k >= 1; --k)
            e[k] = e[k] + e[k - 1] * z;
    }
    return e[i];
}

}  // namespace steenrod
