#include "steenrod/algebra.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

#include "steenrod/detail/normal_form.hpp"
#include "steenrod/power.hpp"

namespace steenrod {

SteenrodAlgebra::SteenrodAlgebra(Field field, std::int64_t q)
    : field_(std::move(field)), q_(q) {
    const std::int64_t p = field_.characteristic();
    std::int64_t v = q;
    while (v > 1 && v % p == 0)
        v /= p;
    if (v != 1)
        throw DomainError("algebra parameter q must be a power of the field characteristic");
}

SteenrodElement SteenrodElement::unit(const SteenrodAlgebra& alg) {
    SteenrodElement e(alg);
    e.add_term(IndexSeq(), alg.field().one());
    return e;
}

SteenrodElement SteenrodElement::basic(const SteenrodAlgebra& alg, const IndexSeq& seq) {
    SteenrodElement e(alg);
    e.add_term(seq, alg.field().one());
    return e;
}

SteenrodElement SteenrodElement::op(const SteenrodAlgebra& alg, std::int64_t i) {
    if (i < 0)
        throw IndexRangeError("operation index must be nonnegative");
    if (i == 0)
        return unit(alg);
    return basic(alg, IndexSeq({i}));
}

FieldElement SteenrodElement::coeff(const IndexSeq& seq) const {
    auto it = terms_.find(seq.without_zeros());
    return it == terms_.end() ? alg_.field().zero() : it->second;
}

void SteenrodElement::add_term(const IndexSeq& seq, const FieldElement& c) {
    if (c.field() != alg_.field())
        throw FieldMismatchError();
    if (c.is_zero())
        return;
    const IndexSeq key = seq.without_zeros();
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

std::set<std::int64_t> SteenrodElement::degrees() const {
    std::set<std::int64_t> out;
    for (const auto& [seq, c] : terms_)
        out.insert((alg_.q() - 1) * seq.sum());
    return out;
}

bool SteenrodElement::admissible_form() const {
    for (const auto& [seq, c] : terms_)
        if (!seq.is_admissible(alg_.q()))
            return false;
    return true;
}

SteenrodElement SteenrodElement::operator+(const SteenrodElement& o) const {
    if (alg_ != o.alg_)
        throw FieldMismatchError();
    SteenrodElement out = *this;
    for (const auto& [seq, c] : o.terms_)
        out.add_term(seq, c);
    return out;
}

SteenrodElement SteenrodElement::operator-(const SteenrodElement& o) const {
    return *this + (-o);
}

SteenrodElement SteenrodElement::operator-() const {
    SteenrodElement out(alg_);
    for (const auto& [seq, c] : terms_)
        out.add_term(seq, -c);
    return out;
}

SteenrodElement SteenrodElement::scale(const FieldElement& c) const {
    SteenrodElement out(alg_);
    for (const auto& [seq, v] : terms_)
        out.add_term(seq, v * c);
    return out;
}

bool SteenrodElement::operator==(const SteenrodElement& o) const {
    return alg_ == o.alg_ && terms_ == o.terms_;
}

namespace {

// Expansion coefficients live in the prime subfield, so the rewriting layer
// works with integer residues mod p and is shared across coefficient fields.
using ExpandKey = std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>;
using ExpandTerms = std::vector<std::pair<std::int64_t, std::int64_t>>;  // (j, coeff)

const ExpandTerms& adem_expand_int(std::int64_t p, std::int64_t q, std::int64_t a,
                                   std::int64_t b) {
    static std::map<ExpandKey, ExpandTerms> cache;
    static std::mutex mutex;
    const ExpandKey key{p, q, a, b};
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end())
            return it->second;
    }
    ExpandTerms terms;
    for (std::int64_t j = 0; j <= a / q; ++j) {
        std::int64_t c = binom_mod_p((b - j) * (q - 1) - 1, a - q * j, p);
        if (((a - q * j) & 1) != 0)
            c = (p - c) % p;
        if (c != 0)
            terms.emplace_back(j, c);
    }
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(key, std::move(terms)).first->second;
}

}  // namespace

namespace detail {

// Normal form of a single basic monomial, coefficients mod p.
const NormalTerms& normalize_monomial(std::int64_t p, std::int64_t q, const IndexSeq& seq) {
    using Key = std::tuple<std::int64_t, std::int64_t, std::vector<std::int64_t>>;
    static std::map<Key, NormalTerms> cache;
    static std::mutex mutex;
    const Key key{p, q, seq.entries()};
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end())
            return it->second;
    }

    NormalTerms result;
    if (seq.is_admissible(q)) {
        result.emplace_back(seq, 1);
    } else {
        // Leftmost inadmissible pair.
        std::size_t s = 0;
        const auto& e = seq.entries();
        while (e[s] >= q * e[s + 1])
            ++s;
        std::map<std::vector<std::int64_t>, std::int64_t> acc;
        for (const auto& [j, c] : adem_expand_int(p, q, e[s], e[s + 1])) {
            std::vector<std::int64_t> next(e.begin(), e.begin() + s);
            next.push_back(e[s] + e[s + 1] - j);
            if (j > 0)
                next.push_back(j);
            next.insert(next.end(), e.begin() + s + 2, e.end());
            for (const auto& [sub, c2] : normalize_monomial(p, q, IndexSeq(next))) {
                auto [it, inserted] = acc.emplace(sub.entries(), c * c2 % p);
                if (!inserted)
                    it->second = (it->second + c * c2) % p;
            }
        }
        for (const auto& [entries, c] : acc)
            if (c % p != 0)
                result.emplace_back(IndexSeq(entries), c % p);
    }

    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(key, std::move(result)).first->second;
}

}  // namespace detail

using detail::normalize_monomial;

SteenrodElement adem_wu_expand(const SteenrodAlgebra& alg, std::int64_t a, std::int64_t b) {
    if (a < 1 || b < 1 || a >= alg.q() * b)
        throw NotInadmissibleError(a, b);
    SteenrodElement out(alg);
    for (const auto& [j, c] : adem_expand_int(alg.characteristic(), alg.q(), a, b)) {
        std::vector<std::int64_t> seq{a + b - j};
        if (j > 0)
            seq.push_back(j);
        out.add_term(IndexSeq(std::move(seq)), alg.field().from_int(c));
    }
    return out;
}

SteenrodElement to_admissible(const SteenrodElement& e) {
    const SteenrodAlgebra& alg = e.algebra();
    SteenrodElement out(alg);
    for (const auto& [seq, c] : e.terms())
        for (const auto& [sub, k] : normalize_monomial(alg.characteristic(), alg.q(), seq))
            out.add_term(sub, c * alg.field().from_int(k));
    return out;
}

SteenrodElement concat_product(const SteenrodElement& a, const SteenrodElement& b) {
    if (a.algebra() != b.algebra())
        throw FieldMismatchError();
    SteenrodElement out(a.algebra());
    for (const auto& [s1, c1] : a.terms())
        for (const auto& [s2, c2] : b.terms())
            out.add_term(s1.concat(s2), c1 * c2);
    return out;
}

SteenrodElement product(const SteenrodElement& a, const SteenrodElement& b) {
    return to_admissible(concat_product(a, b));
}

bool TensorElement::KeyLess::operator()(const Key& a, const Key& b) const {
    const std::int64_t sa = a.first.sum() + a.second.sum();
    const std::int64_t sb = b.first.sum() + b.second.sum();
    if (sa != sb)
        return sa < sb;
    if (a.first != b.first)
        return right_lex_less(a.first, b.first);
    return right_lex_less(a.second, b.second);
}

TensorElement TensorElement::outer(const SteenrodElement& left, const SteenrodElement& right) {
    if (left.algebra() != right.algebra())
        throw FieldMismatchError();
    TensorElement out(left.algebra());
    for (const auto& [s1, c1] : left.terms())
        for (const auto& [s2, c2] : right.terms())
            out.add_term(s1, s2, c1 * c2);
    return out;
}

FieldElement TensorElement::coeff(const IndexSeq& left, const IndexSeq& right) const {
    auto it = terms_.find({left.without_zeros(), right.without_zeros()});
    return it == terms_.end() ? alg_.field().zero() : it->second;
}

void TensorElement::add_term(const IndexSeq& left, const IndexSeq& right,
                             const FieldElement& c) {
    if (c.field() != alg_.field())
        throw FieldMismatchError();
    if (c.is_zero())
        return;
    const Key key{left.without_zeros(), right.without_zeros()};
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
    if (alg_ != o.alg_)
        throw FieldMismatchError();
    TensorElement out = *this;
    for (const auto& [key, c] : o.terms_)
        out.add_term(key.first, key.second, c);
    return out;
}

TensorElement TensorElement::scale(const FieldElement& c) const {
    TensorElement out(alg_);
    for (const auto& [key, v] : terms_)
        out.add_term(key.first, key.second, v * c);
    return out;
}

TensorElement TensorElement::operator*(const TensorElement& o) const {
    if (alg_ != o.alg_)
        throw FieldMismatchError();
    const std::int64_t p = alg_.characteristic();
    const std::int64_t q = alg_.q();
    TensorElement out(alg_);
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_) {
            const FieldElement c = c1 * c2;
            for (const auto& [left, cl] :
                 normalize_monomial(p, q, k1.first.concat(k2.first)))
                for (const auto& [right, cr] :
                     normalize_monomial(p, q, k1.second.concat(k2.second)))
                    out.add_term(left, right,
                                 c * alg_.field().from_int(cl * cr % p));
        }
    return out;
}

TensorElement TensorElement::flip() const {
    TensorElement out(alg_);
    for (const auto& [key, c] : terms_)
        out.add_term(key.second, key.first, c);
    return out;
}

bool TensorElement::operator==(const TensorElement& o) const {
    return alg_ == o.alg_ && terms_ == o.terms_;
}

namespace detail {

// Coproduct of a basic monomial with mod-p coefficients, both sides
// admissible.
const CoproductTerms& coproduct_monomial(std::int64_t p, std::int64_t q,
                                         const IndexSeq& seq) {
    using Key = std::tuple<std::int64_t, std::int64_t, std::vector<std::int64_t>>;
    static std::map<Key, CoproductTerms> cache;
    static std::mutex mutex;
    const Key key{p, q, seq.entries()};
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end())
            return it->second;
    }

    using PairKey = std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>;
    std::map<PairKey, std::int64_t> acc;
    acc[{{}, {}}] = 1;
    for (std::size_t s = 1; s <= seq.length(); ++s) {
        const std::int64_t entry = seq.entry(s);
        std::map<PairKey, std::int64_t> next;
        for (const auto& [key2, c] : acc) {
            for (std::int64_t a = 0; a <= entry; ++a) {
                const std::int64_t b = entry - a;
                std::vector<std::int64_t> la = key2.first;
                if (a > 0)
                    la.push_back(a);
                std::vector<std::int64_t> rb = key2.second;
                if (b > 0)
                    rb.push_back(b);
                for (const auto& [ls, lc] : normalize_monomial(p, q, IndexSeq(la)))
                    for (const auto& [rs, rc] : normalize_monomial(p, q, IndexSeq(rb))) {
                        const std::int64_t v = c * lc % p * rc % p;
                        auto [it, inserted] =
                            next.emplace(PairKey{ls.entries(), rs.entries()}, v);
                        if (!inserted)
                            it->second = (it->second + v) % p;
                    }
            }
        }
        acc.clear();
        for (auto& [k2, v] : next)
            if (v % p != 0)
                acc.emplace(k2, v % p);
    }

    CoproductTerms result;
    for (const auto& [k2, v] : acc)
        result.emplace_back(IndexSeq(k2.first), IndexSeq(k2.second), v);

    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(key, std::move(result)).first->second;
}

}  // namespace detail

TensorElement coproduct(const SteenrodElement& e) {
    const SteenrodAlgebra& alg = e.algebra();
    TensorElement out(alg);
    for (const auto& [seq, c] : e.terms())
        for (const auto& [left, right, k] :
             detail::coproduct_monomial(alg.characteristic(), alg.q(), seq))
            out.add_term(left, right, c * alg.field().from_int(k));
    return out;
}

std::vector<IndexSeq> enumerate_admissible(std::int64_t q, std::int64_t degree_bound) {
    std::vector<IndexSeq> out;
    if (degree_bound < 0)
        return out;
    const std::int64_t budget = degree_bound / (q - 1);
    // Build left to right: each next entry is at most floor(previous / q).
    std::vector<std::int64_t> prefix;
    auto rec = [&](auto&& self, std::int64_t rest, std::int64_t max_entry) -> void {
        out.push_back(IndexSeq(prefix));
        for (std::int64_t e = 1; e <= std::min(rest, max_entry); ++e) {
            prefix.push_back(e);
            self(self, rest - e, e / q);
            prefix.pop_back();
        }
    };
    rec(rec, budget, budget);
    std::sort(out.begin(), out.end(), [](const IndexSeq& a, const IndexSeq& b) {
        if (a.sum() != b.sum())
            return a.sum() < b.sum();
        return lex_less(a, b);
    });
    return out;
}

Polynomial apply(const SteenrodElement& e, const Polynomial& f) {
    if (e.algebra().field() != f.field())
        throw FieldMismatchError();
    if (e.algebra().q() != f.field().order())
        throw DomainError("polynomial action requires the standard algebra");
    Polynomial out(f.field());
    for (const auto& [seq, c] : e.terms())
        out = out + apply_basic_monomial(seq, f).scale(c);
    return out;
}

}  // namespace steenrod
