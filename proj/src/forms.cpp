#include "steenrod/forms.hpp"

#include <bit>

namespace steenrod {

bool DifferentialForm::KeyLess::operator()(const Key& a, const Key& b) const {
    if (a.second != b.second)
        return a.second < b.second;
    return grlex_less(a.first, b.first);
}

DifferentialForm DifferentialForm::from_polynomial(const Polynomial& f) {
    DifferentialForm out(f.field());
    for (const auto& [m, c] : f.terms())
        out.add_term(m, 0, c);
    return out;
}

DifferentialForm DifferentialForm::dz(const Field& field, std::size_t index) {
    if (index >= 64)
        throw IndexRangeError("at most 64 exterior generators are supported");
    DifferentialForm out(field);
    out.add_term(Monomial(), std::uint64_t{1} << index, field.one());
    return out;
}

void DifferentialForm::add_term(const Monomial& m, std::uint64_t dz_mask,
                                const FieldElement& c) {
    if (c.field() != field_)
        throw FieldMismatchError();
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(Key{m, dz_mask}, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

DifferentialForm DifferentialForm::operator+(const DifferentialForm& o) const {
    if (field_ != o.field_)
        throw FieldMismatchError();
    DifferentialForm out = *this;
    for (const auto& [key, c] : o.terms_)
        out.add_term(key.first, key.second, c);
    return out;
}

DifferentialForm DifferentialForm::operator-(const DifferentialForm& o) const {
    return *this + (-o);
}

DifferentialForm DifferentialForm::operator-() const {
    DifferentialForm out(field_);
    for (const auto& [key, c] : terms_)
        out.add_term(key.first, key.second, -c);
    return out;
}

namespace {

// Sign of merging two strictly increasing dz blocks: parity of the number of
// pairs (i in a, j in b) with i > j.
int merge_sign(std::uint64_t a, std::uint64_t b) {
    int inversions = 0;
    while (b != 0) {
        const int j = std::countr_zero(b);
        // bits of a above position j
        inversions += std::popcount(a >> (j + 1));
        b &= b - 1;
    }
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

DifferentialForm DifferentialForm::operator*(const DifferentialForm& o) const {
    if (field_ != o.field_)
        throw FieldMismatchError();
    DifferentialForm out(field_);
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_) {
            if ((k1.second & k2.second) != 0)
                continue;  // repeated dz
            FieldElement c = c1 * c2;
            if (merge_sign(k1.second, k2.second) < 0)
                c = -c;
            out.add_term(k1.first * k2.first, k1.second | k2.second, c);
        }
    return out;
}

DifferentialForm DifferentialForm::scale(const FieldElement& c) const {
    DifferentialForm out(field_);
    for (const auto& [key, v] : terms_)
        out.add_term(key.first, key.second, v * c);
    return out;
}

bool DifferentialForm::operator==(const DifferentialForm& o) const {
    return field_ == o.field_ && terms_ == o.terms_;
}

DifferentialForm bockstein(const DifferentialForm& a) {
    const Field& field = a.field();
    DifferentialForm out(field);
    for (const auto& [key, c] : a.terms()) {
        std::uint64_t rest = key.second;
        int position = 0;  // 1-based index of the dz factor within the term
        while (rest != 0) {
            const int bit = std::countr_zero(rest);
            ++position;
            FieldElement coeff = c;
            if (position % 2 == 0)
                coeff = -coeff;  // (-1)^{j-1}
            out.add_term(key.first * Monomial::variable(static_cast<std::size_t>(bit)),
                         key.second & ~(std::uint64_t{1} << bit), coeff);
            rest &= rest - 1;
        }
    }
    return out;
}

DifferentialForm FormSeries::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : DifferentialForm::zero(field_);
}

void FormSeries::set_coeff(std::size_t i, const DifferentialForm& value) {
    if (value.field() != field_)
        throw FieldMismatchError();
    if (i >= c_.size())
        c_.resize(i + 1, DifferentialForm::zero(field_));
    c_[i] = value;
    trim();
}

void FormSeries::trim() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

FormSeries FormSeries::operator+(const FormSeries& o) const {
    if (field_ != o.field_)
        throw FieldMismatchError();
    FormSeries out(field_);
    const std::size_t n = std::max(c_.size(), o.c_.size());
    for (std::size_t i = 0; i < n; ++i)
        out.set_coeff(i, coeff(i) + o.coeff(i));
    return out;
}

FormSeries FormSeries::operator*(const FormSeries& o) const {
    if (field_ != o.field_)
        throw FieldMismatchError();
    FormSeries out(field_);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            out.set_coeff(i + j, out.coeff(i + j) + c_[i] * o.c_[j]);
    return out;
}

bool FormSeries::operator==(const FormSeries& o) const {
    return field_ == o.field_ && c_ == o.c_;
}

FormSeries total_power_on_forms(const DifferentialForm& a) {
    const Field& field = a.field();
    FormSeries out(field);
    for (const auto& [key, c] : a.terms()) {
        Polynomial mono(field);
        mono.add_term(key.first, c);
        const XiSeries series = total_power(mono);
        for (std::size_t i = 0; i < series.size(); ++i) {
            DifferentialForm lifted = DifferentialForm::from_polynomial(series.coeff(i));
            DifferentialForm dzs(field);
            dzs.add_term(Monomial(), key.second, field.one());
            out.set_coeff(i, out.coeff(i) + lifted * dzs);
        }
    }
    return out;
}

}  // namespace steenrod
