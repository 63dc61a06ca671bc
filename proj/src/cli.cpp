#include "steenrod/cli.hpp"

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "steenrod/format.hpp"
#include "steenrod/parse.hpp"

namespace steenrod::cli {

namespace {

std::string read_arg(const std::string& arg) {
    if (arg != "-")
        return arg;
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
}

struct Common {
    std::string field_spec = "2";
    std::vector<std::int64_t> modulus;
    bool json = false;

    Field field() const { return parse_field_spec(field_spec, modulus); }

    void attach(CLI::App* cmd) {
        cmd->add_option("--field", field_spec, "field spec p or p^nu")
            ->capture_default_str();
        cmd->add_option("--modulus", modulus,
                        "modulus coefficients c0,c1,...,1 (low to high)")
            ->delimiter(',');
        cmd->add_flag("--json", json, "machine-readable output");
    }
};

void emit(std::ostream& out, bool json, const nlohmann::json& j, const std::string& text) {
    if (json)
        out << j.dump() << "\n";
    else
        out << text << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Steenrod reduced-power operations over Galois fields"};
    app.require_subcommand(1);

    Common common;
    std::string expr_arg, second_arg, to_target = "milnor";
    std::int64_t degree = 0, primitive_k = 1;

    auto* normalize = app.add_subcommand("normalize", "Adem-Wu normal form of an expression");
    common.attach(normalize);
    normalize->add_option("expr", expr_arg, "operator expression")->required();

    auto* act = app.add_subcommand("act", "apply an operator expression to a polynomial");
    common.attach(act);
    act->add_option("operator", expr_arg, "operator expression");
    act->add_option("polynomial", second_arg, "polynomial expression");
    act->add_option("--op", expr_arg, "operator expression (flag form)");
    act->add_option("--poly", second_arg, "polynomial expression (flag form)");

    auto* pair = app.add_subcommand("pair", "Milnor pairing of an operator and a dual monomial");
    common.attach(pair);
    pair->add_option("op", expr_arg, "operator expression")->required();
    pair->add_option("dual", second_arg, "dual expression")->required();

    auto* convert = app.add_subcommand("convert", "change between admissible and Milnor bases");
    common.attach(convert);
    convert->add_option("--to", to_target, "milnor or admissible")->required();
    convert->add_option("expr", expr_arg, "expression")->required();

    auto* primitive = app.add_subcommand("primitive", "the Milnor primitive P^{Delta_k}");
    common.attach(primitive);
    primitive->add_option("k", primitive_k, "index k >= 1")->required();

    auto* coprod = app.add_subcommand("coproduct", "coproduct of an operator expression");
    common.attach(coprod);
    coprod->add_option("expr", expr_arg, "operator expression")->required();

    auto* embed = app.add_subcommand("embed", "embed into the prime-field algebra");
    common.attach(embed);
    embed->add_option("expr", expr_arg, "operator expression")->required();

    auto* bock = app.add_subcommand("bockstein", "Bockstein of a differential form");
    common.attach(bock);
    bock->add_option("form", expr_arg, "form expression")->required();

    auto* basis = app.add_subcommand("basis", "admissible monomials of one degree");
    common.attach(basis);
    basis->add_option("--degree", degree, "degree")->required();

    std::vector<const char*> argv;
    argv.push_back("steenrod");
    for (const auto& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        const Field field = common.field();
        const SteenrodAlgebra alg(field);
        const bool json = common.json;

        if (normalize->parsed()) {
            const SteenrodElement e = to_admissible(parse_steenrod(read_arg(expr_arg), alg));
            emit(out, json, to_json(e), to_string(e));
        } else if (act->parsed()) {
            if (expr_arg.empty() || second_arg.empty())
                throw ParseError("act needs an operator and a polynomial", 0);
            const SteenrodElement e = parse_steenrod(read_arg(expr_arg), alg);
            const Polynomial f = parse_polynomial(read_arg(second_arg), field);
            const Polynomial result = apply(e, f);
            emit(out, json, to_json(result), to_string(result));
        } else if (pair->parsed()) {
            const SteenrodElement e = parse_steenrod(read_arg(expr_arg), alg);
            const DualElement x = parse_dual(read_arg(second_arg), alg);
            const FieldElement value = pairing(e, x);
            emit(out, json, nlohmann::json{{"value", to_string(value)}}, to_string(value));
        } else if (convert->parsed()) {
            if (to_target == "milnor") {
                const MilnorElement m =
                    admissible_to_milnor(parse_steenrod(read_arg(expr_arg), alg));
                emit(out, json, to_json(m), to_string(m));
            } else if (to_target == "admissible") {
                const SteenrodElement e =
                    milnor_to_admissible(parse_milnor(read_arg(expr_arg), alg));
                emit(out, json, to_json(e), to_string(e));
            } else {
                throw ParseError("--to must be milnor or admissible", 0);
            }
        } else if (primitive->parsed()) {
            const SteenrodElement e = milnor_primitive(alg, primitive_k);
            emit(out, json, to_json(e), to_string(e));
        } else if (coprod->parsed()) {
            const TensorElement t =
                coproduct(to_admissible(parse_steenrod(read_arg(expr_arg), alg)));
            emit(out, json, to_json(t), to_string(t));
        } else if (embed->parsed()) {
            const MilnorElement image = theta(parse_steenrod(read_arg(expr_arg), alg));
            emit(out, json, to_json(image), to_string(image));
        } else if (bock->parsed()) {
            const DifferentialForm b = bockstein(parse_form(read_arg(expr_arg), field));
            emit(out, json, to_json(b), to_string(b));
        } else if (basis->parsed()) {
            const bool sq = alg.q() == 2;
            nlohmann::json j = nlohmann::json::array();
            std::string text;
            for (const IndexSeq& seq : enumerate_admissible(alg.q(), degree)) {
                if ((alg.q() - 1) * seq.sum() != degree)
                    continue;
                j.push_back(seq.entries());
                if (!text.empty())
                    text += "\n";
                text += op_string(seq, sq);
            }
            emit(out, json, j, text);
        }
        return 0;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace steenrod::cli
