#ifndef STEENROD_TEST_HELPERS_HPP
#define STEENROD_TEST_HELPERS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "steenrod/algebra.hpp"
#include "steenrod/linalg.hpp"
#include "steenrod/poly.hpp"

namespace steenrod::test {

using Rng = std::mt19937;

inline std::int64_t rand_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline FieldElement random_element(Rng& rng, const Field& field) {
    const auto all = field.elements();
    return all[static_cast<std::size_t>(rand_int(rng, 0, field.order() - 1))];
}

inline FieldElement random_nonzero(Rng& rng, const Field& field) {
    while (true) {
        FieldElement c = random_element(rng, field);
        if (!c.is_zero())
            return c;
    }
}

/// All monomials of total degree exactly d in nvars variables.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::int64_t d) {
    std::vector<Monomial> out;
    std::vector<std::int64_t> exps(nvars, 0);
    auto rec = [&](auto&& self, std::size_t v, std::int64_t rest) -> void {
        if (v + 1 == nvars) {
            exps[v] = rest;
            out.push_back(Monomial(exps));
            exps[v] = 0;
            return;
        }
        for (std::int64_t e = 0; e <= rest; ++e) {
            exps[v] = e;
            self(self, v + 1, rest - e);
            exps[v] = 0;
        }
    };
    if (nvars == 0) {
        if (d == 0)
            out.push_back(Monomial());
        return out;
    }
    rec(rec, 0, d);
    return out;
}

/// All monomials of total degree at most d.
inline std::vector<Monomial> monomials_up_to(std::size_t nvars, std::int64_t d) {
    std::vector<Monomial> out;
    for (std::int64_t k = 0; k <= d; ++k)
        for (auto& m : monomials_of_degree(nvars, k))
            out.push_back(std::move(m));
    return out;
}

inline Polynomial random_polynomial(Rng& rng, const Field& field, std::size_t nvars,
                                    std::int64_t max_deg, int terms) {
    Polynomial f(field);
    for (int t = 0; t < terms; ++t) {
        std::vector<std::int64_t> exps(nvars, 0);
        std::int64_t budget = rand_int(rng, 0, max_deg);
        for (std::size_t v = 0; v < nvars && budget > 0; ++v) {
            const std::int64_t e = rand_int(rng, 0, budget);
            exps[v] = e;
            budget -= e;
        }
        f.add_term(Monomial(exps), random_element(rng, field));
    }
    return f;
}

inline Polynomial random_homogeneous(Rng& rng, const Field& field, std::size_t nvars,
                                     std::int64_t degree, int terms) {
    const auto basis = monomials_of_degree(nvars, degree);
    Polynomial f(field);
    for (int t = 0; t < terms; ++t) {
        const auto& m = basis[static_cast<std::size_t>(
            rand_int(rng, 0, static_cast<std::int64_t>(basis.size()) - 1))];
        f.add_term(m, random_element(rng, field));
    }
    return f;
}

inline Polynomial random_nonzero_homogeneous(Rng& rng, const Field& field,
                                             std::size_t nvars, std::int64_t degree,
                                             int terms) {
    while (true) {
        Polynomial f = random_homogeneous(rng, field, nvars, degree, terms);
        if (!f.is_zero())
            return f;
    }
}

inline LinearMap random_invertible(Rng& rng, const Field& field, std::size_t n) {
    while (true) {
        LinearMap a(field, n, n);
        FqMatrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const FieldElement v = random_element(rng, field);
                a.set(i, j, v);
                m.set(i, j, v);
            }
        if (m.rank() == n)
            return a;
    }
}

inline IndexSeq random_sequence(Rng& rng, std::size_t max_len, std::int64_t max_entry) {
    const std::size_t len = static_cast<std::size_t>(rand_int(rng, 0, max_len));
    std::vector<std::int64_t> entries(len);
    for (auto& e : entries)
        e = rand_int(rng, 1, max_entry);
    return IndexSeq(std::move(entries));
}

inline SteenrodElement random_steenrod(Rng& rng, const SteenrodAlgebra& alg, int terms,
                                       std::size_t max_len, std::int64_t max_entry) {
    SteenrodElement e(alg);
    for (int t = 0; t < terms; ++t)
        e.add_term(random_sequence(rng, max_len, max_entry),
                   random_element(rng, alg.field()));
    return e;
}

/// Random element supported on admissible sequences of one fixed degree.
inline SteenrodElement random_homogeneous_steenrod(Rng& rng, const SteenrodAlgebra& alg,
                                                   std::int64_t degree, int terms) {
    std::vector<IndexSeq> basis;
    for (const IndexSeq& seq : enumerate_admissible(alg.q(), degree))
        if ((alg.q() - 1) * seq.sum() == degree)
            basis.push_back(seq);
    SteenrodElement e(alg);
    if (basis.empty())
        return e;
    for (int t = 0; t < terms; ++t)
        e.add_term(basis[static_cast<std::size_t>(
                       rand_int(rng, 0, static_cast<std::int64_t>(basis.size()) - 1))],
                   random_element(rng, alg.field()));
    return e;
}

/// Pascal's triangle in exact 64-bit arithmetic; valid through n = 40.
inline std::vector<std::vector<std::uint64_t>> pascal_table(int n_max) {
    std::vector<std::vector<std::uint64_t>> c(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        c[n].assign(n + 1, 1);
        for (int k = 1; k < n; ++k)
            c[n][k] = c[n - 1][k - 1] + c[n - 1][k];
    }
    return c;
}

/// Independent enumeration oracle: every composition, filtered by the
/// admissibility inequality.
inline std::size_t count_admissible_by_filter(std::int64_t q, std::int64_t sum) {
    std::size_t count = 0;
    std::vector<std::int64_t> parts;
    auto rec = [&](auto&& self, std::int64_t rest) -> void {
        if (rest == 0) {
            bool ok = true;
            for (std::size_t i = 0; i + 1 < parts.size(); ++i)
                if (parts[i] < q * parts[i + 1])
                    ok = false;
            if (ok)
                ++count;
            return;
        }
        for (std::int64_t e = 1; e <= rest; ++e) {
            parts.push_back(e);
            self(self, rest - e);
            parts.pop_back();
        }
    };
    rec(rec, sum);
    return count;
}

}  // namespace steenrod::test

#endif
