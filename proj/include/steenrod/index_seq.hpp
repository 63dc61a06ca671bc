#ifndef STEENROD_INDEX_SEQ_HPP
#define STEENROD_INDEX_SEQ_HPP

#include <cstdint>
#include <vector>

#include "steenrod/errors.hpp"

namespace steenrod {

/// A finitely supported sequence of nonnegative integers, stored with
/// trailing zeros trimmed. Index sequences name both basic monomials
/// P^{i_1} P^{i_2} ... and dual monomials xi_1^{i_1} xi_2^{i_2} ....
class IndexSeq {
public:
    IndexSeq() = default;
    explicit IndexSeq(std::vector<std::int64_t> entries);

    bool empty() const { return e_.empty(); }
    std::size_t length() const { return e_.size(); }
    /// Entry at position s (1-based, matching i_s); 0 beyond the support.
    std::int64_t entry(std::size_t s) const;
    const std::vector<std::int64_t>& entries() const { return e_; }

    std::int64_t sum() const;
    /// m(I) = sum of s * i_s.
    std::int64_t moment() const;

    /// i_s >= q * i_{s+1} for every s.
    bool is_admissible(std::int64_t q) const;

    IndexSeq concat(const IndexSeq& tail) const;
    /// Same sequence with every zero entry removed (P^0 factors are the
    /// identity); distinct from trailing-zero trimming, which is automatic.
    IndexSeq without_zeros() const;

    bool operator==(const IndexSeq& o) const { return e_ == o.e_; }
    bool operator!=(const IndexSeq& o) const { return e_ != o.e_; }

    /// Delta_k: 1 in position k (1-based), zero elsewhere.
    static IndexSeq delta(std::size_t k);
    /// M_k = (q^{k-1}, ..., q, 1), the admissible sequence of excess zero.
    static IndexSeq m_sequence(std::int64_t q, std::size_t k);

private:
    std::vector<std::int64_t> e_;
};

/// Lexicographic from the right: compare at the largest position where the
/// sequences differ, so (1,2,0,...) < (0,0,1,...).
bool right_lex_less(const IndexSeq& a, const IndexSeq& b);

/// Plain left-to-right lexicographic order.
bool lex_less(const IndexSeq& a, const IndexSeq& b);

/// Sum-major, then right-lex; the canonical term order for printing
/// Steenrod elements (degree differs from sum by the constant factor q-1).
bool sum_right_lex_less(const IndexSeq& a, const IndexSeq& b);

struct SumRightLexLess {
    bool operator()(const IndexSeq& a, const IndexSeq& b) const {
        return sum_right_lex_less(a, b);
    }
};

struct RightLexLess {
    bool operator()(const IndexSeq& a, const IndexSeq& b) const {
        return right_lex_less(a, b);
    }
};

/// deg(xi^I) = sum of i_s (q^s - 1).
std::int64_t milnor_degree(std::int64_t q, const IndexSeq& seq);

/// The admissible sequence J(I): j_k = sum over s >= k of i_s q^{s-k}.
IndexSeq profile(std::int64_t q, const IndexSeq& seq);

/// Inverse of profile; NotAdmissibleError unless the input is admissible.
IndexSeq profile_inverse(std::int64_t q, const IndexSeq& admissible);

/// e(J) = sum of (j_s - q j_{s+1}); NotAdmissibleError unless J admissible.
std::int64_t excess(std::int64_t q, const IndexSeq& admissible);

}  // namespace steenrod

#endif
