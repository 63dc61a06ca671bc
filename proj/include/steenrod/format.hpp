#ifndef STEENROD_FORMAT_HPP
#define STEENROD_FORMAT_HPP

#include <string>

#include <json.hpp>

#include "steenrod/embedding.hpp"
#include "steenrod/forms.hpp"
#include "steenrod/milnor.hpp"

namespace steenrod {

// Canonical text forms. Coefficients print as the least nonnegative residue
// for prime fields and as a polynomial-basis t-expression for extensions;
// polynomial terms are listed in descending graded-lex order, operator terms
// degree-major then right-lex ascending. Every printed string parses back to
// the same value.

std::string to_string(const FieldElement& c);
std::string to_string(const Polynomial& f);
std::string to_string(const SteenrodElement& e);
std::string to_string(const TensorElement& e);
std::string to_string(const MilnorElement& m);
std::string to_string(const DualElement& x);
std::string to_string(const DualTensor& x);
std::string to_string(const DifferentialForm& a);

/// "Sq^a Sq^b ..." when sq_alias, else "P^a P^b ..."; "1" for the empty
/// sequence.
std::string op_string(const IndexSeq& seq, bool sq_alias);

nlohmann::json to_json(const Polynomial& f);
nlohmann::json to_json(const SteenrodElement& e);
nlohmann::json to_json(const TensorElement& e);
nlohmann::json to_json(const MilnorElement& m);
nlohmann::json to_json(const DualElement& x);
nlohmann::json to_json(const DifferentialForm& a);

}  // namespace steenrod

#endif
