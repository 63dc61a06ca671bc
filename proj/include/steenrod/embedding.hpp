#ifndef STEENROD_EMBEDDING_HPP
#define STEENROD_EMBEDDING_HPP

#include <cstdint>
#include <vector>

#include "steenrod/milnor.hpp"

namespace steenrod {

/// The algebra P*(F_p) tensor F_q: relations at q = p, coefficients in F_q.
/// Elements of its dual are DualElement values over this algebra.
SteenrodAlgebra extended_prime_algebra(const Field& field);

/// theta_*: P_*(F_p) tensor F_q -> P_*(F_q), the algebra map sending
/// xi_k(p) to xi_m(q) when k = m nu and to 0 otherwise. The input must live
/// over extended_prime_algebra(field).
DualElement theta_star(const DualElement& x);

/// theta: P*(F_q) -> P*(F_p) tensor F_q, computed degree by degree as the
/// transpose of the theta_* matrix in the dual monomial bases; the result is
/// expressed in the Milnor basis of the prime-field algebra.
MilnorElement theta(const SteenrodElement& e);

/// The theta_* matrix in one degree: rows are prime-field dual monomials of
/// that degree, columns are F_q dual monomials, entries in {0, 1}.
struct ThetaDegreeMatrix {
    std::vector<IndexSeq> prime_monomials;  ///< xi^K(p) basis, ascending right-lex
    std::vector<IndexSeq> q_monomials;      ///< xi^I(q) basis, ascending right-lex
    std::vector<std::vector<int>> entries;  ///< entries[row K][col I]
};

ThetaDegreeMatrix theta_degree_matrix(const SteenrodAlgebra& alg, std::int64_t degree);

}  // namespace steenrod

#endif
