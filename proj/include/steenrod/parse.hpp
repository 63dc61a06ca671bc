#ifndef STEENROD_PARSE_HPP
#define STEENROD_PARSE_HPP

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "steenrod/embedding.hpp"
#include "steenrod/forms.hpp"
#include "steenrod/milnor.hpp"

namespace steenrod {

// Expression grammar (whitespace insignificant, '*' between factors
// optional):
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor (['*'] factor)*
//   factor := op | var | dual | milnor | form | scalar | '(' expr ')'
//   op     := ('P' | 'Sq') '^' uint            ("Sq" only when q = 2)
//   var    := 'x' | 'y' | 'z' | 'z'uint        (each with optional '^' uint)
//   dual   := 'xi_'uint ['^' uint]
//   milnor := 'P' '(' uint (',' uint)* ')' | 'Q' '(' uint ')'
//   form   := 'dx' | 'dy' | 'dz' | 'dz'uint
//   scalar := uint | 't' ['^' uint]            ('t' only for extensions)

struct Expr;

struct OpFactor {
    std::int64_t index;
    std::size_t pos;
};
struct VarFactor {
    std::size_t var;  // 0-based variable index
    std::int64_t exp;
    std::size_t pos;
};
struct DualFactor {
    std::size_t k;
    std::int64_t exp;
    std::size_t pos;
};
struct MilnorFactor {
    IndexSeq exponents;
    std::size_t pos;
};
struct FormFactor {
    std::size_t var;  // 0-based dz index
    std::size_t pos;
};
struct ScalarFactor {
    FieldElement value;
    std::size_t pos;
};
struct GroupFactor {
    std::shared_ptr<Expr> inner;
    std::size_t pos;
};

using Factor = std::variant<OpFactor, VarFactor, DualFactor, MilnorFactor, FormFactor,
                            ScalarFactor, GroupFactor>;

struct Term {
    std::vector<Factor> factors;
};

struct Expr {
    std::vector<std::pair<int, Term>> terms;  // sign is +1 or -1
};

/// Parses the expression grammar; SyntaxErrors carry the byte offset.
Expr parse(std::string_view input, const Field& field);

/// "p" or "p^nu"; ParseError on malformed text, NonPrimeError for bad p.
Field parse_field_spec(const std::string& spec);
Field parse_field_spec(const std::string& spec, const std::vector<std::int64_t>& modulus);

// Typed evaluation; a factor of the wrong kind raises ParseError at its
// position.
Polynomial eval_polynomial(const Expr& e, const Field& field);
SteenrodElement eval_steenrod(const Expr& e, const SteenrodAlgebra& alg);
DualElement eval_dual(const Expr& e, const SteenrodAlgebra& alg);
MilnorElement eval_milnor(const Expr& e, const SteenrodAlgebra& alg);
DifferentialForm eval_form(const Expr& e, const Field& field);

Polynomial parse_polynomial(std::string_view input, const Field& field);
SteenrodElement parse_steenrod(std::string_view input, const SteenrodAlgebra& alg);
DualElement parse_dual(std::string_view input, const SteenrodAlgebra& alg);
MilnorElement parse_milnor(std::string_view input, const SteenrodAlgebra& alg);
DifferentialForm parse_form(std::string_view input, const Field& field);

}  // namespace steenrod

#endif
