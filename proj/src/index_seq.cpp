#include "steenrod/index_seq.hpp"

#include <algorithm>

namespace steenrod {

IndexSeq::IndexSeq(std::vector<std::int64_t> entries) : e_(std::move(entries)) {
    for (std::int64_t v : e_)
        if (v < 0)
            throw IndexRangeError("index sequence entries must be nonnegative");
    while (!e_.empty() && e_.back() == 0)
        e_.pop_back();
}

std::int64_t IndexSeq::entry(std::size_t s) const {
    if (s == 0 || s > e_.size())
        return 0;
    return e_[s - 1];
}

std::int64_t IndexSeq::sum() const {
    std::int64_t total = 0;
    for (std::int64_t v : e_)
        total += v;
    return total;
}

std::int64_t IndexSeq::moment() const {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < e_.size(); ++i)
        total += static_cast<std::int64_t>(i + 1) * e_[i];
    return total;
}

bool IndexSeq::is_admissible(std::int64_t q) const {
    for (std::size_t i = 0; i + 1 < e_.size(); ++i)
        if (e_[i] < q * e_[i + 1])
            return false;
    return true;
}

IndexSeq IndexSeq::concat(const IndexSeq& tail) const {
    std::vector<std::int64_t> v = e_;
    v.insert(v.end(), tail.e_.begin(), tail.e_.end());
    return IndexSeq(std::move(v));
}

IndexSeq IndexSeq::without_zeros() const {
    std::vector<std::int64_t> v;
    v.reserve(e_.size());
    for (std::int64_t x : e_)
        if (x != 0)
            v.push_back(x);
    return IndexSeq(std::move(v));
}

IndexSeq IndexSeq::delta(std::size_t k) {
    if (k == 0)
        throw IndexRangeError("delta position is 1-based");
    std::vector<std::int64_t> v(k, 0);
    v[k - 1] = 1;
    return IndexSeq(std::move(v));
}

IndexSeq IndexSeq::m_sequence(std::int64_t q, std::size_t k) {
    std::vector<std::int64_t> v(k);
    std::int64_t power = 1;
    for (std::size_t i = k; i-- > 0;) {
        v[i] = power;
        power *= q;
    }
    return IndexSeq(std::move(v));
}

bool right_lex_less(const IndexSeq& a, const IndexSeq& b) {
    const std::size_t n = std::max(a.length(), b.length());
    for (std::size_t s = n; s >= 1; --s) {
        if (a.entry(s) != b.entry(s))
            return a.entry(s) < b.entry(s);
    }
    return false;
}

bool lex_less(const IndexSeq& a, const IndexSeq& b) {
    return std::lexicographical_compare(a.entries().begin(), a.entries().end(),
                                        b.entries().begin(), b.entries().end());
}

bool sum_right_lex_less(const IndexSeq& a, const IndexSeq& b) {
    if (a.sum() != b.sum())
        return a.sum() < b.sum();
    return right_lex_less(a, b);
}

std::int64_t milnor_degree(std::int64_t q, const IndexSeq& seq) {
    std::int64_t total = 0;
    std::int64_t power = q;
    for (std::size_t s = 1; s <= seq.length(); ++s) {
        total += seq.entry(s) * (power - 1);
        power *= q;
    }
    return total;
}

IndexSeq profile(std::int64_t q, const IndexSeq& seq) {
    std::vector<std::int64_t> j(seq.length(), 0);
    std::int64_t tail = 0;  // j_{k+1}
    for (std::size_t k = seq.length(); k-- > 0;) {
        tail = seq.entries()[k] + q * tail;
        j[k] = tail;
    }
    return IndexSeq(std::move(j));
}

IndexSeq profile_inverse(std::int64_t q, const IndexSeq& admissible) {
    if (!admissible.is_admissible(q))
        throw NotAdmissibleError("profile_inverse requires an admissible sequence");
    std::vector<std::int64_t> i(admissible.length(), 0);
    for (std::size_t k = 1; k <= admissible.length(); ++k)
        i[k - 1] = admissible.entry(k) - q * admissible.entry(k + 1);
    return IndexSeq(std::move(i));
}

std::int64_t excess(std::int64_t q, const IndexSeq& admissible) {
    if (!admissible.is_admissible(q))
        throw NotAdmissibleError("excess requires an admissible sequence");
    std::int64_t total = 0;
    for (std::size_t s = 1; s <= admissible.length(); ++s)
        total += admissible.entry(s) - q * admissible.entry(s + 1);
    return total;
}

}  // namespace steenrod
