#include "steenrod/power.hpp"

#include <algorithm>

namespace steenrod {

Polynomial XiSeries::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : Polynomial::zero(field_);
}

void XiSeries::set_coeff(std::size_t i, const Polynomial& value) {
    if (value.field() != field_)
        throw FieldMismatchError();
    if (i >= c_.size())
        c_.resize(i + 1, Polynomial::zero(field_));
    c_[i] = value;
    trim();
}

void XiSeries::trim() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

XiSeries XiSeries::operator+(const XiSeries& o) const {
    if (field_ != o.field_)
        throw FieldMismatchError();
    XiSeries out(field_);
    out.c_.resize(std::max(c_.size(), o.c_.size()), Polynomial::zero(field_));
    for (std::size_t i = 0; i < out.c_.size(); ++i)
        out.c_[i] = coeff(i) + o.coeff(i);
    out.trim();
    return out;
}

XiSeries XiSeries::operator*(const XiSeries& o) const {
    if (field_ != o.field_)
        throw FieldMismatchError();
    XiSeries out(field_);
    if (c_.empty() || o.c_.empty())
        return out;
    out.c_.resize(c_.size() + o.c_.size() - 1, Polynomial::zero(field_));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            out.c_[i + j] = out.c_[i + j] + c_[i] * o.c_[j];
    out.trim();
    return out;
}

XiSeries XiSeries::scale(const FieldElement& c) const {
    XiSeries out(field_);
    for (std::size_t i = 0; i < c_.size(); ++i)
        out.set_coeff(i, c_[i].scale(c));
    return out;
}

bool XiSeries::operator==(const XiSeries& o) const {
    return field_ == o.field_ && c_ == o.c_;
}

namespace {

// (z + z^q xi)^e as a XiSeries: coefficient of xi^j is C(e, j) z^{e+(q-1)j}.
XiSeries variable_power_series(const Field& field, std::size_t var, std::int64_t e) {
    const std::int64_t q = field.order();
    const std::int64_t p = field.characteristic();
    XiSeries out(field);
    for (std::int64_t j = 0; j <= e; ++j) {
        const std::int64_t b = binom_mod_p(e, j, p);
        if (b == 0)
            continue;
        Polynomial term(field);
        term.add_term(Monomial::variable(var, e + (q - 1) * j), field.from_int(b));
        out.set_coeff(static_cast<std::size_t>(j), term);
    }
    return out;
}

}  // namespace

XiSeries total_power(const Polynomial& f) {
    const Field& field = f.field();
    XiSeries out(field);
    for (const auto& [m, c] : f.terms()) {
        XiSeries term(field);
        term.set_coeff(0, Polynomial::constant(c));
        for (std::size_t v = 0; v < m.nvars(); ++v)
            if (m.exponent(v) > 0)
                term = term * variable_power_series(field, v, m.exponent(v));
        out = out + term;
    }
    return out;
}

Polynomial steenrod_op(std::int64_t i, const Polynomial& f) {
    const Field& field = f.field();
    const std::int64_t q = field.order();
    const std::int64_t p = field.characteristic();
    Polynomial out(field);
    if (i < 0)
        return out;
    if (i == 0)
        return f;
    for (const auto& [m, c] : f.terms()) {
        if (m.degree() < i)
            continue;
        const std::size_t nv = m.nvars();
        // Distribute i among the variables: coefficient of the composition
        // (j_1, ..., j_nv) is the product of C(e_v, j_v) mod p.
        std::vector<std::int64_t> j(nv, 0);
        auto emit = [&](auto&& self, std::size_t v, std::int64_t rest) -> void {
            if (v + 1 == nv || rest == 0) {
                const std::size_t last = (rest == 0) ? v : nv - 1;
                if (rest > m.exponent(last))
                    return;
                j[last] = rest;
                std::int64_t b = 1;
                std::vector<std::int64_t> exps(nv);
                for (std::size_t w = 0; w < nv; ++w) {
                    b = b * binom_mod_p(m.exponent(w), j[w], p) % p;
                    exps[w] = m.exponent(w) + (q - 1) * j[w];
                }
                if (b != 0)
                    out.add_term(Monomial(std::move(exps)), c * field.from_int(b));
                j[last] = 0;
                return;
            }
            const std::int64_t cap = std::min(rest, m.exponent(v));
            for (std::int64_t take = 0; take <= cap; ++take) {
                j[v] = take;
                self(self, v + 1, rest - take);
            }
            j[v] = 0;
        };
        if (nv == 0)
            continue;  // constant term, killed by i > 0
        emit(emit, 0, i);
    }
    return out;
}

Polynomial apply_basic_monomial(const IndexSeq& seq, const Polynomial& f) {
    Polynomial out = f;
    for (std::size_t s = seq.length(); s >= 1; --s) {
        if (seq.entry(s) == 0)
            continue;
        out = steenrod_op(seq.entry(s), out);
    }
    return out;
}

bool check_cartan(const Polynomial& f, const Polynomial& g, std::int64_t k) {
    Polynomial rhs(f.field());
    for (std::int64_t i = 0; i <= k; ++i)
        rhs = rhs + steenrod_op(i, f) * steenrod_op(k - i, g);
    return steenrod_op(k, f * g) == rhs;
}

TruncatedSeries::TruncatedSeries(Field field, std::int64_t order)
    : field_(std::move(field)), order_(order) {
    if (order_ < 0)
        order_ = -1;  // the zero ring
    c_.assign(static_cast<std::size_t>(order_ + 1), Polynomial::zero(field_));
}

Polynomial TruncatedSeries::coeff(std::int64_t i) const {
    if (i < 0 || i > order_)
        return Polynomial::zero(field_);
    return c_[static_cast<std::size_t>(i)];
}

void TruncatedSeries::set_coeff(std::int64_t i, const Polynomial& value) {
    if (i < 0 || i > order_)
        return;  // truncated away
    c_[static_cast<std::size_t>(i)] = value;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    if (field_ != o.field_ || order_ != o.order_)
        throw ShapeMismatchError("truncated series orders differ");
    TruncatedSeries out(field_, order_);
    for (std::int64_t i = 0; i <= order_; ++i)
        out.set_coeff(i, coeff(i) + o.coeff(i));
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    if (field_ != o.field_ || order_ != o.order_)
        throw ShapeMismatchError("truncated series orders differ");
    TruncatedSeries out(field_, order_);
    for (std::int64_t i = 0; i <= order_; ++i) {
        if (coeff(i).is_zero())
            continue;
        for (std::int64_t j = 0; i + j <= order_; ++j)
            out.set_coeff(i + j, out.coeff(i + j) + coeff(i) * o.coeff(j));
    }
    return out;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    return field_ == o.field_ && order_ == o.order_ && c_ == o.c_;
}

TruncatedSeries TruncatedSeries::term(const Field& field, std::int64_t order,
                                      const FieldElement& c, std::int64_t k) {
    TruncatedSeries out(field, order);
    out.set_coeff(k, Polynomial::constant(c));
    return out;
}

TruncatedSeries apply_total(const TruncatedSeries& sigma, const TruncatedSeries& h) {
    const Field& field = sigma.field();
    TruncatedSeries out(field, h.order());
    // Powers of sigma computed incrementally up to the largest degree seen.
    std::vector<TruncatedSeries> powers = {
        TruncatedSeries::term(field, h.order(), field.one(), 0)};
    for (std::int64_t j = 0; j <= h.order(); ++j) {
        const Polynomial hj = h.coeff(j);
        if (hj.is_zero())
            continue;
        for (std::int64_t k = 0; k <= hj.degree(); ++k) {
            const Polynomial pk = steenrod_op(k, hj);
            if (pk.is_zero())
                continue;
            while (static_cast<std::int64_t>(powers.size()) <= k)
                powers.push_back(powers.back() * sigma);
            const TruncatedSeries& sk = powers[static_cast<std::size_t>(k)];
            for (std::int64_t i = 0; i + j <= h.order(); ++i)
                out.set_coeff(i + j, out.coeff(i + j) + sk.coeff(i) * pk);
        }
    }
    return out;
}

bool check_bullett_macdonald(const Field& field, std::size_t n_vars, std::int64_t order) {
    if (order <= 0)
        return true;
    const std::int64_t q = field.order();

    // u = (1-t)^{q-1}, s = t u, both scalar series.
    TruncatedSeries one_minus_t =
        TruncatedSeries::term(field, order, field.one(), 0) +
        TruncatedSeries::term(field, order, -field.one(), 1);
    TruncatedSeries u = TruncatedSeries::term(field, order, field.one(), 0);
    for (std::int64_t i = 0; i < q - 1; ++i)
        u = u * one_minus_t;
    const TruncatedSeries s = TruncatedSeries::term(field, order, field.one(), 1) * u;
    const TruncatedSeries one = TruncatedSeries::term(field, order, field.one(), 0);
    const TruncatedSeries tq = TruncatedSeries::term(field, order, field.one(), q);

    for (std::size_t v = 0; v < n_vars; ++v) {
        TruncatedSeries z(field, order);
        z.set_coeff(0, Polynomial::variable(field, v));
        const TruncatedSeries lhs = apply_total(s, apply_total(one, z));
        const TruncatedSeries rhs = apply_total(u, apply_total(tq, z));
        if (lhs != rhs)
            return false;
    }
    return true;
}

Polynomial wu_elementary(const Field& field, std::int64_t i, std::int64_t n) {
    if (i < 0 || n < 0 || i > n)
        throw IndexRangeError("wu_elementary needs 0 <= i <= n");
    const std::int64_t q = field.order();
    // e_i(z_1^{q-1}, ..., z_n^{q-1}): stretch every exponent by q-1.
    const Polynomial ei = elementary_symmetric(field, i, n);
    Polynomial stretched(field);
    for (const auto& [m, c] : ei.terms())
        stretched.add_term(m.pow(q - 1), c);
    const Polynomial result = elementary_symmetric(field, n, n) * stretched;
    if (result != steenrod_op(i, elementary_symmetric(field, n, n)))
        throw Error("Wu formula mismatch");  // unreachable
    return result;
}

}  // namespace steenrod
