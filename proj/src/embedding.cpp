#include "steenrod/embedding.hpp"

namespace steenrod {

SteenrodAlgebra extended_prime_algebra(const Field& field) {
    return SteenrodAlgebra(field, field.characteristic());
}

namespace {

// xi^K(p) -> xi^I(q) with i_m = k_{m nu}, or nothing when K touches a
// position outside nu * N.
bool contract_exponents(const IndexSeq& k, int nu, IndexSeq& out) {
    std::vector<std::int64_t> i((k.length() + nu - 1) / nu, 0);
    for (std::size_t s = 1; s <= k.length(); ++s) {
        if (k.entry(s) == 0)
            continue;
        if (s % nu != 0)
            return false;
        i[s / nu - 1] = k.entry(s);
    }
    out = IndexSeq(std::move(i));
    return true;
}

}  // namespace

DualElement theta_star(const DualElement& x) {
    const SteenrodAlgebra& src = x.algebra();
    const Field& field = src.field();
    if (src.q() != field.characteristic())
        throw DomainError("theta_star expects an element of the prime-field dual");
    const SteenrodAlgebra target(field);
    const int nu = field.degree();
    DualElement out(target);
    for (const auto& [k, c] : x.terms()) {
        IndexSeq image;
        if (contract_exponents(k, nu, image))
            out.add_term(image, c);
    }
    return out;
}

ThetaDegreeMatrix theta_degree_matrix(const SteenrodAlgebra& alg, std::int64_t degree) {
    if (alg.q() != alg.field().order())
        throw DomainError("theta is defined on the standard algebra");
    const std::int64_t p = alg.characteristic();
    const int nu = alg.field().degree();
    ThetaDegreeMatrix m;
    m.prime_monomials = enumerate_milnor(p, degree);
    m.q_monomials = enumerate_milnor(alg.q(), degree);
    m.entries.assign(m.prime_monomials.size(),
                     std::vector<int>(m.q_monomials.size(), 0));
    for (std::size_t row = 0; row < m.prime_monomials.size(); ++row) {
        IndexSeq image;
        if (!contract_exponents(m.prime_monomials[row], nu, image))
            continue;
        for (std::size_t col = 0; col < m.q_monomials.size(); ++col)
            if (m.q_monomials[col] == image)
                m.entries[row][col] = 1;
    }
    return m;
}

MilnorElement theta(const SteenrodElement& e) {
    const SteenrodAlgebra& alg = e.algebra();
    if (alg.q() != alg.field().order())
        throw DomainError("theta is defined on the standard algebra");
    const SteenrodAlgebra target = extended_prime_algebra(alg.field());
    const MilnorElement coords = admissible_to_milnor(e);
    MilnorElement out(target);
    for (const std::int64_t d : coords.degrees()) {
        const ThetaDegreeMatrix m = theta_degree_matrix(alg, d);
        // theta is the transpose of theta_*: the coordinate of xi^I pushes
        // onto the unique row K with theta_*(xi^K) = xi^I.
        for (std::size_t col = 0; col < m.q_monomials.size(); ++col) {
            const FieldElement c = coords.coeff(m.q_monomials[col]);
            if (c.is_zero())
                continue;
            for (std::size_t row = 0; row < m.prime_monomials.size(); ++row)
                if (m.entries[row][col] != 0)
                    out.add_term(m.prime_monomials[row], c);
        }
    }
    return out;
}

}  // namespace steenrod
