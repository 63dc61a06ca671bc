#include "steenrod/milnor.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

#include "steenrod/detail/normal_form.hpp"

namespace steenrod {

MilnorElement MilnorElement::unit(const SteenrodAlgebra& alg) {
    MilnorElement m(alg);
    m.add_term(IndexSeq(), alg.field().one());
    return m;
}

MilnorElement MilnorElement::basis(const SteenrodAlgebra& alg, const IndexSeq& exponents) {
    MilnorElement m(alg);
    m.add_term(exponents, alg.field().one());
    return m;
}

FieldElement MilnorElement::coeff(const IndexSeq& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? alg_.field().zero() : it->second;
}

void MilnorElement::add_term(const IndexSeq& exponents, const FieldElement& c) {
    if (c.field() != alg_.field())
        throw FieldMismatchError();
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(exponents, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

std::set<std::int64_t> MilnorElement::degrees() const {
    std::set<std::int64_t> out;
    for (const auto& [seq, c] : terms_)
        out.insert(milnor_degree(alg_.q(), seq));
    return out;
}

MilnorElement MilnorElement::operator+(const MilnorElement& o) const {
    if (alg_ != o.alg_)
        throw FieldMismatchError();
    MilnorElement out = *this;
    for (const auto& [seq, c] : o.terms_)
        out.add_term(seq, c);
    return out;
}

MilnorElement MilnorElement::operator-() const {
    MilnorElement out(alg_);
    for (const auto& [seq, c] : terms_)
        out.add_term(seq, -c);
    return out;
}

MilnorElement MilnorElement::scale(const FieldElement& c) const {
    MilnorElement out(alg_);
    for (const auto& [seq, v] : terms_)
        out.add_term(seq, v * c);
    return out;
}

bool MilnorElement::operator==(const MilnorElement& o) const {
    return alg_ == o.alg_ && terms_ == o.terms_;
}

DualElement DualElement::one(const SteenrodAlgebra& alg) {
    DualElement x(alg);
    x.add_term(IndexSeq(), alg.field().one());
    return x;
}

DualElement DualElement::xi(const SteenrodAlgebra& alg, std::size_t k) {
    if (k == 0)
        return one(alg);
    return monomial(alg, IndexSeq::delta(k));
}

DualElement DualElement::monomial(const SteenrodAlgebra& alg, const IndexSeq& exponents) {
    DualElement x(alg);
    x.add_term(exponents, alg.field().one());
    return x;
}

FieldElement DualElement::coeff(const IndexSeq& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? alg_.field().zero() : it->second;
}

void DualElement::add_term(const IndexSeq& exponents, const FieldElement& c) {
    if (c.field() != alg_.field())
        throw FieldMismatchError();
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(exponents, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

std::set<std::int64_t> DualElement::degrees() const {
    std::set<std::int64_t> out;
    for (const auto& [seq, c] : terms_)
        out.insert(milnor_degree(alg_.q(), seq));
    return out;
}

DualElement DualElement::operator+(const DualElement& o) const {
    if (alg_ != o.alg_)
        throw FieldMismatchError();
    DualElement out = *this;
    for (const auto& [seq, c] : o.terms_)
        out.add_term(seq, c);
    return out;
}

namespace {

IndexSeq add_exponents(const IndexSeq& a, const IndexSeq& b) {
    std::vector<std::int64_t> v(std::max(a.length(), b.length()), 0);
    for (std::size_t s = 1; s <= v.size(); ++s)
        v[s - 1] = a.entry(s) + b.entry(s);
    return IndexSeq(std::move(v));
}

}  // namespace

DualElement DualElement::operator*(const DualElement& o) const {
    if (alg_ != o.alg_)
        throw FieldMismatchError();
    DualElement out(alg_);
    for (const auto& [s1, c1] : terms_)
        for (const auto& [s2, c2] : o.terms_)
            out.add_term(add_exponents(s1, s2), c1 * c2);
    return out;
}

DualElement DualElement::scale(const FieldElement& c) const {
    DualElement out(alg_);
    for (const auto& [seq, v] : terms_)
        out.add_term(seq, v * c);
    return out;
}

DualElement DualElement::pow(std::int64_t k) const {
    if (k < 0)
        throw IndexRangeError("dual element power must be nonnegative");
    DualElement result = one(alg_);
    DualElement base = *this;
    while (k > 0) {
        if (k & 1)
            result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

bool DualElement::operator==(const DualElement& o) const {
    return alg_ == o.alg_ && terms_ == o.terms_;
}

bool DualTensor::KeyLess::operator()(const Key& a, const Key& b) const {
    if (a.first != b.first)
        return right_lex_less(a.first, b.first);
    return right_lex_less(a.second, b.second);
}

DualTensor DualTensor::outer(const DualElement& left, const DualElement& right) {
    if (left.algebra() != right.algebra())
        throw FieldMismatchError();
    DualTensor out(left.algebra());
    for (const auto& [s1, c1] : left.terms())
        for (const auto& [s2, c2] : right.terms())
            out.add_term(s1, s2, c1 * c2);
    return out;
}

void DualTensor::add_term(const IndexSeq& left, const IndexSeq& right,
                          const FieldElement& c) {
    if (c.field() != alg_.field())
        throw FieldMismatchError();
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(Key{left, right}, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

DualTensor DualTensor::operator+(const DualTensor& o) const {
    if (alg_ != o.alg_)
        throw FieldMismatchError();
    DualTensor out = *this;
    for (const auto& [key, c] : o.terms_)
        out.add_term(key.first, key.second, c);
    return out;
}

DualTensor DualTensor::operator*(const DualTensor& o) const {
    if (alg_ != o.alg_)
        throw FieldMismatchError();
    DualTensor out(alg_);
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_)
            out.add_term(add_exponents(k1.first, k2.first),
                         add_exponents(k1.second, k2.second), c1 * c2);
    return out;
}

bool DualTensor::operator==(const DualTensor& o) const {
    return alg_ == o.alg_ && terms_ == o.terms_;
}

std::vector<IndexSeq> enumerate_milnor(std::int64_t q, std::int64_t degree) {
    std::vector<IndexSeq> out;
    if (degree < 0)
        return out;
    std::vector<std::int64_t> prefix;
    // Position s contributes multiples of q^s - 1.
    auto rec = [&](auto&& self, std::size_t s, std::int64_t rest, std::int64_t weight) -> void {
        if (rest == 0) {
            out.push_back(IndexSeq(prefix));
            return;
        }
        if (weight > rest)
            return;
        for (std::int64_t count = 0; count * weight <= rest; ++count) {
            prefix.resize(s, 0);
            if (count > 0)
                prefix[s - 1] = count;
            self(self, s + 1, rest - count * weight, weight * q + (q - 1));
            prefix.resize(s - 1);
        }
    };
    rec(rec, 1, degree, q - 1);
    std::sort(out.begin(), out.end(), right_lex_less);
    return out;
}

namespace {

// <P^J | xi^K> mod p for admissible J, memoized across coefficient fields.
std::int64_t pairing_int(std::int64_t p, std::int64_t q, const IndexSeq& j,
                         const IndexSeq& k) {
    if ((q - 1) * j.sum() != milnor_degree(q, k))
        return 0;
    if (k.empty())
        return j.empty() ? 1 : 0;

    using Key = std::tuple<std::int64_t, std::int64_t, std::vector<std::int64_t>,
                           std::vector<std::int64_t>>;
    static std::map<Key, std::int64_t> cache;
    static std::mutex mutex;
    const Key key{p, q, j.entries(), k.entries()};
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end())
            return it->second;
    }

    // Split off one factor xi_l, l = length of K: <P^J | xi^{K'} xi_l> =
    // <coproduct(P^J) | xi^{K'} (x) xi_l>, and only tensor terms with right
    // component M_l survive the pairing against xi_l.
    const std::size_t l = k.length();
    std::vector<std::int64_t> k2 = k.entries();
    k2[l - 1] -= 1;
    const IndexSeq kprime{std::move(k2)};
    const IndexSeq ml = IndexSeq::m_sequence(q, l);

    std::int64_t total = 0;
    for (const auto& [left, right, c] : detail::coproduct_monomial(p, q, j))
        if (right == ml)
            total = (total + c * pairing_int(p, q, left, kprime)) % p;

    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(key, total);
    return total;
}

}  // namespace

FieldElement pairing(const SteenrodAlgebra& alg, const IndexSeq& j, const IndexSeq& k) {
    const std::int64_t p = alg.characteristic();
    const IndexSeq key = j.without_zeros();
    if (key.is_admissible(alg.q()))
        return alg.field().from_int(pairing_int(p, alg.q(), key, k));
    std::int64_t total = 0;
    for (const auto& [seq, c] : detail::normalize_monomial(p, alg.q(), key))
        total = (total + c * pairing_int(p, alg.q(), seq, k)) % p;
    return alg.field().from_int(total);
}

FieldElement pairing(const SteenrodElement& e, const DualElement& x) {
    if (e.algebra() != x.algebra())
        throw FieldMismatchError();
    FieldElement total = e.algebra().field().zero();
    for (const auto& [j, cj] : e.terms())
        for (const auto& [k, ck] : x.terms())
            total = total + cj * ck * pairing(e.algebra(), j, k);
    return total;
}

FieldElement pairing(const TensorElement& e, const DualTensor& x) {
    if (e.algebra() != x.algebra())
        throw FieldMismatchError();
    FieldElement total = e.algebra().field().zero();
    for (const auto& [jk, cj] : e.terms())
        for (const auto& [kk, ck] : x.terms())
            total = total + cj * ck * pairing(e.algebra(), jk.first, kk.first) *
                                pairing(e.algebra(), jk.second, kk.second);
    return total;
}

namespace {

// Per-degree basis data: Milnor monomials ascending right-lex, the matching
// admissible sequences J(I), and the pairing matrix (unit triangular).
struct DegreeBasis {
    std::vector<IndexSeq> milnor;
    std::vector<IndexSeq> admissible;
    std::vector<std::vector<std::int64_t>> pairing;  // [row J][col K]
};

const DegreeBasis& degree_basis(std::int64_t p, std::int64_t q, std::int64_t degree) {
    using Key = std::tuple<std::int64_t, std::int64_t, std::int64_t>;
    static std::map<Key, DegreeBasis> cache;
    static std::mutex mutex;
    const Key key{p, q, degree};
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end())
            return it->second;
    }

    DegreeBasis basis;
    basis.milnor = enumerate_milnor(q, degree);
    basis.admissible.reserve(basis.milnor.size());
    for (const IndexSeq& i : basis.milnor)
        basis.admissible.push_back(profile(q, i));
    basis.pairing.resize(basis.milnor.size());
    for (std::size_t a = 0; a < basis.milnor.size(); ++a) {
        basis.pairing[a].resize(basis.milnor.size());
        for (std::size_t b = 0; b < basis.milnor.size(); ++b)
            basis.pairing[a][b] = pairing_int(p, q, basis.admissible[a], basis.milnor[b]);
    }

    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(key, std::move(basis)).first->second;
}

}  // namespace

MilnorElement admissible_to_milnor(const SteenrodElement& e) {
    const SteenrodAlgebra& alg = e.algebra();
    const SteenrodElement nf = e.admissible_form() ? e : to_admissible(e);
    MilnorElement out(alg);
    for (const auto& [j, c] : nf.terms()) {
        const std::int64_t d = (alg.q() - 1) * j.sum();
        const DegreeBasis& basis = degree_basis(alg.characteristic(), alg.q(), d);
        for (std::size_t b = 0; b < basis.milnor.size(); ++b) {
            const std::int64_t v = pairing_int(alg.characteristic(), alg.q(), j,
                                               basis.milnor[b]);
            if (v != 0)
                out.add_term(basis.milnor[b], c * alg.field().from_int(v));
        }
    }
    return out;
}

SteenrodElement milnor_to_admissible(const MilnorElement& m) {
    const SteenrodAlgebra& alg = m.algebra();
    const Field& field = alg.field();
    SteenrodElement out(alg);
    for (const std::int64_t d : m.degrees()) {
        const DegreeBasis& basis = degree_basis(alg.characteristic(), alg.q(), d);
        const std::size_t n = basis.milnor.size();
        std::vector<FieldElement> v;
        v.reserve(n);
        for (std::size_t b = 0; b < n; ++b)
            v.push_back(m.coeff(basis.milnor[b]));
        // v_b = sum over a >= b of M[a][b] x_a with unit diagonal: solve from
        // the top index down.
        std::vector<FieldElement> x(n, field.zero());
        for (std::size_t b = n; b-- > 0;) {
            FieldElement acc = v[b];
            for (std::size_t a = b + 1; a < n; ++a)
                if (basis.pairing[a][b] != 0)
                    acc = acc - field.from_int(basis.pairing[a][b]) * x[a];
            x[b] = acc;
        }
        for (std::size_t a = 0; a < n; ++a)
            out.add_term(basis.admissible[a], x[a]);
    }
    return out;
}

SteenrodElement milnor_primitive(const SteenrodAlgebra& alg, std::int64_t k) {
    if (k < 1)
        throw IndexRangeError("Milnor primitives are indexed from 1");
    if (k == 1)
        return SteenrodElement::op(alg, 1);
    const SteenrodElement prev = milnor_primitive(alg, k - 1);
    std::int64_t power = 1;
    for (std::int64_t i = 1; i < k; ++i)
        power *= alg.q();
    const SteenrodElement pq = SteenrodElement::op(alg, power);
    return product(pq, prev) - product(prev, pq);
}

DualTensor dual_coproduct(const DualElement& x) {
    const SteenrodAlgebra& alg = x.algebra();
    const std::int64_t q = alg.q();
    DualTensor out(alg);
    for (const auto& [seq, c] : x.terms()) {
        DualTensor term(alg);
        term.add_term(IndexSeq(), IndexSeq(), alg.field().one());
        for (std::size_t s = 1; s <= seq.length(); ++s) {
            if (seq.entry(s) == 0)
                continue;
            DualTensor gen(alg);  // coproduct of xi_s
            std::int64_t qj = 1;
            for (std::size_t jj = 0; jj <= s; ++jj) {
                const std::size_t ii = s - jj;
                IndexSeq left, right;
                if (ii > 0) {
                    std::vector<std::int64_t> v(ii, 0);
                    v[ii - 1] = qj;
                    left = IndexSeq(std::move(v));
                }
                if (jj > 0)
                    right = IndexSeq::delta(jj);
                gen.add_term(left, right, alg.field().one());
                qj *= q;
            }
            DualTensor power(alg);
            power.add_term(IndexSeq(), IndexSeq(), alg.field().one());
            for (std::int64_t e = 0; e < seq.entry(s); ++e)
                power = power * gen;
            term = term * power;
        }
        for (const auto& [key, v] : term.terms())
            out.add_term(key.first, key.second, v * c);
    }
    return out;
}

MilnorElement milnor_product(const MilnorElement& a, const MilnorElement& b) {
    if (a.algebra() != b.algebra())
        throw FieldMismatchError();
    return admissible_to_milnor(
        product(milnor_to_admissible(a), milnor_to_admissible(b)));
}

}  // namespace steenrod
