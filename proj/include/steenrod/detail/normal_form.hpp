#ifndef STEENROD_DETAIL_NORMAL_FORM_HPP
#define STEENROD_DETAIL_NORMAL_FORM_HPP

#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include "steenrod/index_seq.hpp"

// Shared rewriting caches. All coefficients are residues mod p: the Adem-Wu
// coefficients lie in the prime subfield, so these tables are independent of
// the coefficient field and shared across base changes with the same (p, q).
namespace steenrod::detail {

using NormalTerms = std::vector<std::pair<IndexSeq, std::int64_t>>;
using CoproductTerms = std::vector<std::tuple<IndexSeq, IndexSeq, std::int64_t>>;

/// Memoized admissible normal form of a basic monomial.
const NormalTerms& normalize_monomial(std::int64_t p, std::int64_t q, const IndexSeq& seq);

/// Memoized coproduct of a basic monomial, both sides admissible.
const CoproductTerms& coproduct_monomial(std::int64_t p, std::int64_t q, const IndexSeq& seq);

}  // namespace steenrod::detail

#endif
