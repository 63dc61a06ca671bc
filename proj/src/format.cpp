#include "steenrod/format.hpp"

#include <algorithm>

namespace steenrod {

namespace {

std::string var_name(std::size_t index, std::size_t nvars) {
    static const char* xyz[] = {"x", "y", "z"};
    if (nvars <= 3)
        return xyz[index];
    return "z" + std::to_string(index + 1);
}

std::string dz_name(std::size_t index, std::size_t nvars) {
    static const char* dxyz[] = {"dx", "dy", "dz"};
    if (nvars <= 3)
        return dxyz[index];
    return "dz" + std::to_string(index + 1);
}

bool multi_term(const std::string& s) {
    return s.find('+') != std::string::npos;
}

// Coefficient as a multiplicative prefix ("2*", "(1+t)*"), empty for 1.
std::string coeff_star_prefix(const FieldElement& c) {
    if (c.is_one())
        return "";
    std::string s = to_string(c);
    if (multi_term(s))
        s = "(" + s + ")";
    return s + "*";
}

// Coefficient as a space-separated prefix ("2 ", "(1+t) "), empty for 1.
std::string coeff_space_prefix(const FieldElement& c) {
    if (c.is_one())
        return "";
    std::string s = to_string(c);
    if (multi_term(s))
        s = "(" + s + ")";
    return s + " ";
}

std::string monomial_string(const Monomial& m, std::size_t nvars) {
    std::string out;
    for (std::size_t v = 0; v < m.nvars(); ++v) {
        const std::int64_t e = m.exponent(v);
        if (e == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += var_name(v, nvars);
        if (e > 1)
            out += "^" + std::to_string(e);
    }
    return out;
}

std::string join_terms(const std::vector<std::string>& terms) {
    if (terms.empty())
        return "0";
    std::string out = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i)
        out += " + " + terms[i];
    return out;
}

std::string milnor_monomial_string(const IndexSeq& seq) {
    std::string out = "P(";
    for (std::size_t s = 1; s <= seq.length(); ++s) {
        if (s > 1)
            out += ",";
        out += std::to_string(seq.entry(s));
    }
    return out + ")";
}

std::string dual_monomial_string(const IndexSeq& seq) {
    std::string out;
    for (std::size_t s = 1; s <= seq.length(); ++s) {
        const std::int64_t e = seq.entry(s);
        if (e == 0)
            continue;
        if (!out.empty())
            out += " * ";
        out += "xi_" + std::to_string(s);
        if (e > 1)
            out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

// Milnor/dual keys print degree-major, then right-lex.
std::vector<IndexSeq> sorted_keys_by_degree(const std::int64_t q,
                                            const std::vector<IndexSeq>& keys) {
    std::vector<IndexSeq> sorted = keys;
    std::sort(sorted.begin(), sorted.end(), [q](const IndexSeq& a, const IndexSeq& b) {
        const std::int64_t da = milnor_degree(q, a);
        const std::int64_t db = milnor_degree(q, b);
        if (da != db)
            return da < db;
        return right_lex_less(a, b);
    });
    return sorted;
}

}  // namespace

std::string to_string(const FieldElement& c) {
    const Field& field = c.field();
    if (field.degree() == 1)
        return std::to_string(c.coeffs()[0]);
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < c.coeffs().size(); ++i) {
        const std::int64_t v = c.coeffs()[i];
        if (v == 0)
            continue;
        std::string part;
        if (i == 0) {
            part = std::to_string(v);
        } else {
            if (v != 1)
                part = std::to_string(v) + "*";
            part += "t";
            if (i > 1)
                part += "^" + std::to_string(i);
        }
        parts.push_back(part);
    }
    return join_terms(parts);
}

std::string to_string(const Polynomial& f) {
    const std::size_t nvars = f.nvars();
    std::vector<std::string> terms;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const std::string mono = monomial_string(it->first, nvars);
        if (mono.empty()) {
            std::string s = to_string(it->second);
            terms.push_back(s);
        } else {
            terms.push_back(coeff_star_prefix(it->second) + mono);
        }
    }
    return join_terms(terms);
}

std::string op_string(const IndexSeq& seq, bool sq_alias) {
    if (seq.empty())
        return "1";
    std::string out;
    for (std::size_t s = 1; s <= seq.length(); ++s) {
        if (s > 1)
            out += " ";
        out += (sq_alias ? "Sq^" : "P^") + std::to_string(seq.entry(s));
    }
    return out;
}

std::string to_string(const SteenrodElement& e) {
    const bool sq = e.algebra().q() == 2;
    std::vector<std::string> terms;
    for (const auto& [seq, c] : e.terms()) {
        if (seq.empty())
            terms.push_back(to_string(c));
        else
            terms.push_back(coeff_space_prefix(c) + op_string(seq, sq));
    }
    return join_terms(terms);
}

std::string to_string(const TensorElement& e) {
    const bool sq = e.algebra().q() == 2;
    std::vector<std::string> terms;
    for (const auto& [key, c] : e.terms())
        terms.push_back(coeff_space_prefix(c) + op_string(key.first, sq) + " @ " +
                        op_string(key.second, sq));
    return join_terms(terms);
}

std::string to_string(const MilnorElement& m) {
    std::vector<IndexSeq> keys;
    for (const auto& [seq, c] : m.terms())
        keys.push_back(seq);
    std::vector<std::string> terms;
    for (const IndexSeq& seq : sorted_keys_by_degree(m.algebra().q(), keys))
        terms.push_back(coeff_space_prefix(m.coeff(seq)) + milnor_monomial_string(seq));
    return join_terms(terms);
}

std::string to_string(const DualElement& x) {
    std::vector<IndexSeq> keys;
    for (const auto& [seq, c] : x.terms())
        keys.push_back(seq);
    std::vector<std::string> terms;
    for (const IndexSeq& seq : sorted_keys_by_degree(x.algebra().q(), keys)) {
        const FieldElement c = x.coeff(seq);
        if (seq.empty())
            terms.push_back(to_string(c));
        else
            terms.push_back(coeff_space_prefix(c) + dual_monomial_string(seq));
    }
    return join_terms(terms);
}

std::string to_string(const DualTensor& x) {
    std::vector<std::string> terms;
    for (const auto& [key, c] : x.terms())
        terms.push_back(coeff_space_prefix(c) + dual_monomial_string(key.first) +
                        " @ " + dual_monomial_string(key.second));
    return join_terms(terms);
}

std::string to_string(const DifferentialForm& a) {
    std::size_t nvars = 0;
    for (const auto& [key, c] : a.terms()) {
        nvars = std::max(nvars, key.first.nvars());
        if (key.second != 0)
            nvars = std::max(nvars, static_cast<std::size_t>(
                                        64 - std::countl_zero(key.second)));
    }
    std::vector<std::string> terms;
    for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
        const auto& [mono, mask] = it->first;
        std::string body = monomial_string(mono, nvars);
        for (std::size_t v = 0; v < 64; ++v)
            if (mask & (std::uint64_t{1} << v)) {
                if (!body.empty())
                    body += "*";
                body += dz_name(v, nvars);
            }
        if (body.empty())
            terms.push_back(to_string(it->second));
        else
            terms.push_back(coeff_star_prefix(it->second) + body);
    }
    return join_terms(terms);
}

nlohmann::json to_json(const Polynomial& f) {
    const std::size_t nvars = f.nvars();
    nlohmann::json out = nlohmann::json::array();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        std::vector<std::int64_t> exps(nvars, 0);
        for (std::size_t v = 0; v < it->first.nvars(); ++v)
            exps[v] = it->first.exponent(v);
        out.push_back({{"coeff", to_string(it->second)}, {"exps", exps}});
    }
    return out;
}

nlohmann::json to_json(const SteenrodElement& e) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [seq, c] : e.terms())
        out.push_back({{"coeff", to_string(c)}, {"entries", seq.entries()}});
    return out;
}

nlohmann::json to_json(const TensorElement& e) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [key, c] : e.terms())
        out.push_back({{"coeff", to_string(c)},
                       {"left", key.first.entries()},
                       {"right", key.second.entries()}});
    return out;
}

nlohmann::json to_json(const MilnorElement& m) {
    std::vector<IndexSeq> keys;
    for (const auto& [seq, c] : m.terms())
        keys.push_back(seq);
    nlohmann::json out = nlohmann::json::array();
    for (const IndexSeq& seq : sorted_keys_by_degree(m.algebra().q(), keys))
        out.push_back({{"coeff", to_string(m.coeff(seq))}, {"exponents", seq.entries()}});
    return out;
}

nlohmann::json to_json(const DualElement& x) {
    std::vector<IndexSeq> keys;
    for (const auto& [seq, c] : x.terms())
        keys.push_back(seq);
    nlohmann::json out = nlohmann::json::array();
    for (const IndexSeq& seq : sorted_keys_by_degree(x.algebra().q(), keys))
        out.push_back({{"coeff", to_string(x.coeff(seq))}, {"exponents", seq.entries()}});
    return out;
}

nlohmann::json to_json(const DifferentialForm& a) {
    nlohmann::json out = nlohmann::json::array();
    for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
        const auto& [mono, mask] = it->first;
        std::vector<int> dz;
        for (int v = 0; v < 64; ++v)
            if (mask & (std::uint64_t{1} << v))
                dz.push_back(v + 1);
        out.push_back({{"coeff", to_string(it->second)},
                       {"exps", mono.exponents()},
                       {"dz", dz}});
    }
    return out;
}

}  // namespace steenrod
