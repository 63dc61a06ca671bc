#include "steenrod/parse.hpp"

#include <cctype>
#include <optional>

namespace steenrod {

namespace {

struct Token {
    enum Kind { Ident, Int, Plus, Minus, Star, Caret, LParen, RParen, Comma, End };
    Kind kind;
    std::string text;
    std::int64_t value = 0;
    std::size_t pos = 0;
};

std::vector<Token> tokenize(std::string_view input) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < input.size()) {
        const char c = input[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        Token t;
        t.pos = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::int64_t v = 0;
            std::size_t j = i;
            while (j < input.size() && std::isdigit(static_cast<unsigned char>(input[j]))) {
                v = v * 10 + (input[j] - '0');
                ++j;
            }
            t.kind = Token::Int;
            t.value = v;
            t.text = std::string(input.substr(i, j - i));
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < input.size() &&
                   (std::isalnum(static_cast<unsigned char>(input[j])) || input[j] == '_'))
                ++j;
            t.kind = Token::Ident;
            t.text = std::string(input.substr(i, j - i));
            i = j;
        } else {
            switch (c) {
                case '+': t.kind = Token::Plus; break;
                case '-': t.kind = Token::Minus; break;
                case '*': t.kind = Token::Star; break;
                case '^': t.kind = Token::Caret; break;
                case '(': t.kind = Token::LParen; break;
                case ')': t.kind = Token::RParen; break;
                case ',': t.kind = Token::Comma; break;
                default:
                    throw ParseError(std::string("unexpected character '") + c + "'", i);
            }
            t.text = std::string(1, c);
            ++i;
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.kind = Token::End;
    end.pos = input.size();
    out.push_back(end);
    return out;
}

class Parser {
public:
    Parser(std::string_view input, const Field& field)
        : field_(field), tokens_(tokenize(input)) {}

    Expr parse_expr() {
        Expr e = expr();
        if (peek().kind != Token::End)
            throw ParseError("trailing input", peek().pos);
        return e;
    }

private:
    const Token& peek() const { return tokens_[at_]; }
    Token take() { return tokens_[at_++]; }

    bool accept(Token::Kind kind) {
        if (peek().kind == kind) {
            ++at_;
            return true;
        }
        return false;
    }

    void expect(Token::Kind kind, const char* what) {
        if (!accept(kind))
            throw ParseError(std::string("expected ") + what, peek().pos);
    }

    std::int64_t expect_uint() {
        if (peek().kind != Token::Int)
            throw ParseError("expected an integer", peek().pos);
        return take().value;
    }

    Expr expr() {
        Expr e;
        int sign = accept(Token::Minus) ? -1 : 1;
        e.terms.emplace_back(sign, term());
        while (true) {
            if (accept(Token::Plus))
                e.terms.emplace_back(1, term());
            else if (accept(Token::Minus))
                e.terms.emplace_back(-1, term());
            else
                break;
        }
        return e;
    }

    bool starts_factor() const {
        switch (peek().kind) {
            case Token::Ident:
            case Token::Int:
            case Token::LParen:
                return true;
            default:
                return false;
        }
    }

    Term term() {
        Term t;
        t.factors.push_back(factor());
        while (true) {
            if (accept(Token::Star)) {
                t.factors.push_back(factor());
            } else if (starts_factor()) {
                t.factors.push_back(factor());  // juxtaposition
            } else {
                break;
            }
        }
        return t;
    }

    std::int64_t optional_exponent() {
        if (accept(Token::Caret))
            return expect_uint();
        return 1;
    }

    Factor factor() {
        const Token t = peek();
        if (t.kind == Token::Int) {
            take();
            return ScalarFactor{field_.from_int(t.value), t.pos};
        }
        if (t.kind == Token::LParen) {
            take();
            auto inner = std::make_shared<Expr>(expr());
            expect(Token::RParen, "')'");
            return GroupFactor{std::move(inner), t.pos};
        }
        if (t.kind != Token::Ident)
            throw ParseError("expected a factor", t.pos);
        take();
        return ident_factor(t);
    }

    Factor ident_factor(const Token& t) {
        const std::string& name = t.text;
        if (name == "P" || name == "Sq") {
            if (name == "Sq" && field_.order() != 2)
                throw ParseError("the Sq alias is reserved for q = 2", t.pos);
            if (name == "P" && peek().kind == Token::LParen)
                return milnor_factor(t.pos);
            expect(Token::Caret, "'^' after operation name");
            return OpFactor{expect_uint(), t.pos};
        }
        if (name == "Q" && peek().kind == Token::LParen) {
            take();
            const std::int64_t k = expect_uint();
            expect(Token::RParen, "')'");
            if (k < 1)
                throw ParseError("Q(k) needs k >= 1", t.pos);
            return MilnorFactor{IndexSeq::delta(static_cast<std::size_t>(k)), t.pos};
        }
        if (name == "t") {
            if (field_.degree() == 1)
                throw FieldLiteralError("t is only a field literal over extensions", t.pos);
            return ScalarFactor{field_.generator().pow(optional_exponent()), t.pos};
        }
        if (name == "x" || name == "y" || name == "z")
            return VarFactor{static_cast<std::size_t>(name[0] - 'x'), optional_exponent(),
                             t.pos};
        if (name == "dx" || name == "dy" || name == "dz")
            return FormFactor{static_cast<std::size_t>(name[1] - 'x'), t.pos};
        if (auto n = trailing_number(name, "z"))
            return VarFactor{*n - 1, optional_exponent(), t.pos};
        if (auto n = trailing_number(name, "dz"))
            return FormFactor{*n - 1, t.pos};
        if (auto n = trailing_number(name, "xi_"))
            return DualFactor{*n, optional_exponent(), t.pos};
        throw ParseError("unknown name '" + name + "'", t.pos);
    }

    // "z3" -> 3 for prefix "z"; empty for anything else. Zero indices are
    // rejected (variables and generators are numbered from 1).
    std::optional<std::size_t> trailing_number(const std::string& name,
                                               const std::string& prefix) const {
        if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
            return std::nullopt;
        std::size_t value = 0;
        for (std::size_t i = prefix.size(); i < name.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(name[i])))
                return std::nullopt;
            value = value * 10 + static_cast<std::size_t>(name[i] - '0');
        }
        return value == 0 ? std::nullopt : std::optional<std::size_t>(value);
    }

    Factor milnor_factor(std::size_t pos) {
        expect(Token::LParen, "'('");
        std::vector<std::int64_t> entries;
        entries.push_back(expect_uint());
        while (accept(Token::Comma))
            entries.push_back(expect_uint());
        expect(Token::RParen, "')'");
        return MilnorFactor{IndexSeq(std::move(entries)), pos};
    }

    Field field_;
    std::vector<Token> tokens_;
    std::size_t at_ = 0;
};

std::size_t factor_pos(const Factor& f) {
    return std::visit([](const auto& v) { return v.pos; }, f);
}

}  // namespace

Expr parse(std::string_view input, const Field& field) {
    return Parser(input, field).parse_expr();
}

Field parse_field_spec(const std::string& spec) {
    return parse_field_spec(spec, {});
}

Field parse_field_spec(const std::string& spec, const std::vector<std::int64_t>& modulus) {
    std::size_t caret = spec.find('^');
    std::int64_t p = 0;
    std::int64_t nu = 1;
    try {
        std::size_t used = 0;
        p = std::stoll(spec.substr(0, caret), &used);
        if (used != (caret == std::string::npos ? spec.size() : caret))
            throw ParseError("malformed field spec '" + spec + "'", used);
        if (caret != std::string::npos) {
            nu = std::stoll(spec.substr(caret + 1), &used);
            if (caret + 1 + used != spec.size())
                throw ParseError("malformed field spec '" + spec + "'", caret + 1 + used);
        }
    } catch (const std::logic_error&) {
        throw ParseError("malformed field spec '" + spec + "'", 0);
    }
    if (nu < 1 || nu > 16)
        throw ParseError("extension degree out of range in '" + spec + "'", 0);
    if (modulus.empty())
        return Field::make(p, static_cast<int>(nu));
    return Field::make(p, static_cast<int>(nu), modulus);
}

namespace {

// Shared evaluation shell: splits each term into a scalar coefficient and
// the product of its non-scalar factors, handled by the Ops policy.
template <typename Value, typename Ops>
Value eval_expr(const Expr& e, const Ops& ops) {
    Value total = ops.zero();
    for (const auto& [sign, term] : e.terms) {
        Value prod = ops.one();
        FieldElement coeff = ops.field().one();
        for (const Factor& f : term.factors) {
            if (const auto* s = std::get_if<ScalarFactor>(&f)) {
                if (s->value.field() != ops.field())
                    throw FieldMismatchError();
                coeff = coeff * s->value;
            } else if (const auto* g = std::get_if<GroupFactor>(&f)) {
                prod = ops.mul(prod, eval_expr<Value>(*g->inner, ops));
            } else {
                prod = ops.mul(prod, ops.atom(f));
            }
        }
        if (sign < 0)
            coeff = -coeff;
        total = ops.add(total, ops.scale(prod, coeff));
    }
    return total;
}

struct PolyOps {
    Field f;
    const Field& field() const { return f; }
    Polynomial zero() const { return Polynomial::zero(f); }
    Polynomial one() const { return Polynomial::constant(f.one()); }
    Polynomial add(const Polynomial& a, const Polynomial& b) const { return a + b; }
    Polynomial mul(const Polynomial& a, const Polynomial& b) const { return a * b; }
    Polynomial scale(const Polynomial& a, const FieldElement& c) const { return a.scale(c); }
    Polynomial atom(const Factor& fac) const {
        if (const auto* v = std::get_if<VarFactor>(&fac)) {
            Polynomial out(f);
            out.add_term(Monomial::variable(v->var, v->exp), f.one());
            return out;
        }
        throw ParseError("expected a polynomial", factor_pos(fac));
    }
};

struct SteenrodOps {
    SteenrodAlgebra alg;
    const Field& field() const { return alg.field(); }
    SteenrodElement zero() const { return SteenrodElement::zero(alg); }
    SteenrodElement one() const { return SteenrodElement::unit(alg); }
    SteenrodElement add(const SteenrodElement& a, const SteenrodElement& b) const {
        return a + b;
    }
    SteenrodElement mul(const SteenrodElement& a, const SteenrodElement& b) const {
        return concat_product(a, b);  // keep the written monomials unnormalized
    }
    SteenrodElement scale(const SteenrodElement& a, const FieldElement& c) const {
        return a.scale(c);
    }
    SteenrodElement atom(const Factor& fac) const {
        if (const auto* op = std::get_if<OpFactor>(&fac))
            return SteenrodElement::op(alg, op->index);
        throw ParseError("expected a Steenrod operation", factor_pos(fac));
    }
};

struct DualOps {
    SteenrodAlgebra alg;
    const Field& field() const { return alg.field(); }
    DualElement zero() const { return DualElement::zero(alg); }
    DualElement one() const { return DualElement::one(alg); }
    DualElement add(const DualElement& a, const DualElement& b) const { return a + b; }
    DualElement mul(const DualElement& a, const DualElement& b) const { return a * b; }
    DualElement scale(const DualElement& a, const FieldElement& c) const {
        return a.scale(c);
    }
    DualElement atom(const Factor& fac) const {
        if (const auto* d = std::get_if<DualFactor>(&fac))
            return DualElement::xi(alg, d->k).pow(d->exp);
        throw ParseError("expected a dual monomial", factor_pos(fac));
    }
};

struct MilnorOps {
    SteenrodAlgebra alg;
    const Field& field() const { return alg.field(); }
    MilnorElement zero() const { return MilnorElement::zero(alg); }
    MilnorElement one() const { return MilnorElement::unit(alg); }
    MilnorElement add(const MilnorElement& a, const MilnorElement& b) const {
        return a + b;
    }
    MilnorElement mul(const MilnorElement& a, const MilnorElement& b) const {
        return milnor_product(a, b);
    }
    MilnorElement scale(const MilnorElement& a, const FieldElement& c) const {
        return a.scale(c);
    }
    MilnorElement atom(const Factor& fac) const {
        if (const auto* m = std::get_if<MilnorFactor>(&fac))
            return MilnorElement::basis(alg, m->exponents);
        throw ParseError("expected a Milnor basis element", factor_pos(fac));
    }
};

struct FormOps {
    Field f;
    const Field& field() const { return f; }
    DifferentialForm zero() const { return DifferentialForm::zero(f); }
    DifferentialForm one() const {
        return DifferentialForm::from_polynomial(Polynomial::constant(f.one()));
    }
    DifferentialForm add(const DifferentialForm& a, const DifferentialForm& b) const {
        return a + b;
    }
    DifferentialForm mul(const DifferentialForm& a, const DifferentialForm& b) const {
        return a * b;
    }
    DifferentialForm scale(const DifferentialForm& a, const FieldElement& c) const {
        return a.scale(c);
    }
    DifferentialForm atom(const Factor& fac) const {
        if (const auto* v = std::get_if<VarFactor>(&fac)) {
            Polynomial poly(f);
            poly.add_term(Monomial::variable(v->var, v->exp), f.one());
            return DifferentialForm::from_polynomial(poly);
        }
        if (const auto* d = std::get_if<FormFactor>(&fac))
            return DifferentialForm::dz(f, d->var);
        throw ParseError("expected a differential form", factor_pos(fac));
    }
};

}  // namespace

Polynomial eval_polynomial(const Expr& e, const Field& field) {
    return eval_expr<Polynomial>(e, PolyOps{field});
}

SteenrodElement eval_steenrod(const Expr& e, const SteenrodAlgebra& alg) {
    return eval_expr<SteenrodElement>(e, SteenrodOps{alg});
}

DualElement eval_dual(const Expr& e, const SteenrodAlgebra& alg) {
    return eval_expr<DualElement>(e, DualOps{alg});
}

MilnorElement eval_milnor(const Expr& e, const SteenrodAlgebra& alg) {
    return eval_expr<MilnorElement>(e, MilnorOps{alg});
}

DifferentialForm eval_form(const Expr& e, const Field& field) {
    return eval_expr<DifferentialForm>(e, FormOps{field});
}

Polynomial parse_polynomial(std::string_view input, const Field& field) {
    return eval_polynomial(parse(input, field), field);
}

SteenrodElement parse_steenrod(std::string_view input, const SteenrodAlgebra& alg) {
    return eval_steenrod(parse(input, alg.field()), alg);
}

DualElement parse_dual(std::string_view input, const SteenrodAlgebra& alg) {
    return eval_dual(parse(input, alg.field()), alg);
}

MilnorElement parse_milnor(std::string_view input, const SteenrodAlgebra& alg) {
    return eval_milnor(parse(input, alg.field()), alg);
}

DifferentialForm parse_form(std::string_view input, const Field& field) {
    return eval_form(parse(input, field), field);
}

}  // namespace steenrod
