#pragma once

// Command-line front end. run_cli() is the whole program; main() only
// forwards to it, so tests can drive it with string streams.

#include <cstdint>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "errors.hpp"
#include "evenops.hpp"
#include "loopgrade.hpp"
#include "models.hpp"
#include "parse.hpp"
#include "suites.hpp"
#include "symcore.hpp"

namespace kops {

struct RunConfig {
    int trunc = 5;
    std::int64_t window = 16;
    std::string model = "int";
    std::string format = "text";
    std::uint64_t seed = 1;

    bool json() const { return format == "json"; }
};

namespace detail {

inline nlohmann::json tensor_json(const EvenOpTensor& t)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [ij, p] : t.coeffs)
        terms.push_back({{"left", FnZZ::chi(ij.first).to_string()}, {"right", FnZZ::chi(ij.second).to_string()}, {"kbu", to_json(p)}});
    return {{"trunc", t.trunc}, {"window", t.window.radius}, {"terms", terms}};
}

inline void print_report(const Report& rep, const RunConfig& cfg, std::ostream& out)
{
    const nlohmann::json j = rep.to_json();
    if (cfg.json()) {
        out << j.dump(2) << "\n";
        return;
    }
    for (const auto& a : j["axioms"])
        out << a["axiom"].get<std::string>() << ": " << a["instances"].get<std::size_t>() << " instances, " << a["failures"].get<std::size_t>()
            << " failures\n";
    if (!j["failures"].empty()) {
        const auto& f = j["failures"][0];
        out << "first counterexample (" << f["axiom"].get<std::string>() << "): " << f["instance"].get<std::string>() << "\n  "
            << f["witness"].get<std::string>() << "\n";
    }
    out << (rep.ok() ? "ok" : "FAILED") << "\n";
}

inline IntPoly upoly(const std::string& kind, const std::vector<int>& idx)
{
    auto need = [&](std::size_t n) {
        if (idx.size() != n) throw InvalidArgument("upoly " + kind + " takes " + std::to_string(n) + " index(es)");
        for (int i : idx)
            if (i < 1) throw InvalidArgument("indices must be positive");
    };
    if (kind == "pk") return need(1), universal_pk(idx[0]);
    if (kind == "pij") return need(2), universal_pij(idx[0], idx[1]);
    if (kind == "plin") return need(1), left_linearise(universal_pk(idx[0]));
    if (kind == "psi") return need(1), newton_psi(idx[0]);
    throw InvalidArgument("unknown polynomial kind " + kind);
}

inline const char* parity(const OpValue& v) { return std::holds_alternative<OddOp>(v) ? "odd" : "even"; }

inline EvenOp as_even(const OpValue& v, const RunConfig& cfg)
{
    if (auto* c = std::get_if<Int>(&v)) return EvenOp::tensor(FnZZ::constant(*c), KBUElem::one(cfg.trunc), Window(cfg.window));
    if (auto* e = std::get_if<EvenOp>(&v)) return *e;
    throw ParityMismatch("expected an even operation");
}

inline OddOp as_odd(const OpValue& v, const RunConfig& cfg)
{
    if (auto* c = std::get_if<Int>(&v)) return OddOp(Exterior(*c), cfg.trunc);
    if (auto* o = std::get_if<OddOp>(&v)) return *o;
    throw ParityMismatch("expected an odd operation");
}

inline void print_op(const OpValue& v, const RunConfig& cfg, const std::string& command, std::ostream& out)
{
    if (cfg.json()) {
        nlohmann::json j = {{"command", command}, {"parity", parity(v)}, {"trunc", cfg.trunc}, {"window", cfg.window}};
        j["result"] = std::holds_alternative<OddOp>(v) ? to_json(std::get<OddOp>(v)) : to_json(as_even(v, cfg));
        out << j.dump(2) << "\n";
    } else {
        out << (std::holds_alternative<OddOp>(v) ? to_text(std::get<OddOp>(v)) : to_text(as_even(v, cfg))) << "\n";
    }
}

} // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Exact computations in the plethory of K-theory operations"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--trunc", cfg.trunc, "truncation level N")->check(CLI::PositiveNumber);
    app.add_option("--window", cfg.window, "window radius W")->check(CLI::PositiveNumber);
    app.add_option("--model", cfg.model, "lambda-ring model: int, sphere, cp:m, split:m, nil:m:D, coi:m");
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", cfg.seed, "random seed for generated corpora");

    std::string kind;
    std::vector<int> indices;
    auto* up = app.add_subcommand("upoly", "universal polynomial P_k, P_ij, P^L_k or psi^k");
    up->add_option("kind", kind, "pk | pij | plin | psi")->required()->check(CLI::IsMember({"pk", "pij", "plin", "psi"}));
    up->add_option("indices", indices, "indices")->required();

    std::string lhs, rhs;
    auto* comp = app.add_subcommand("compose", "composite of two operations of the same parity");
    comp->add_option("lhs", lhs, "left operand, or \"r ∘ s\"")->required();
    comp->add_option("rhs", rhs, "right operand");

    std::string op, element;
    auto* actc = app.add_subcommand("act", "action of an even operation on a model element");
    actc->add_option("op", op, "operation")->required();
    actc->add_option("element", element, "model element")->required();

    auto* loop = app.add_subcommand("loop", "looping: even to odd, odd to even");
    loop->add_option("op", op, "operation")->required();

    std::string which;
    auto* cop = app.add_subcommand("coprod", "co-addition or co-multiplication of an even operation");
    cop->add_option("which", which, "add | mult")->required()->check(CLI::IsMember({"add", "mult"}));
    cop->add_option("op", op, "operation")->required();

    std::string suite;
    auto* check = app.add_subcommand("check", "run property suites");
    check->add_option("suite", suite, "all | biring | compose | looping | models | main")
        ->required()
        ->check(CLI::IsMember({"all", "biring", "compose", "looping", "models", "main"}));

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        const Window w(cfg.window);
        if (up->parsed()) {
            IntPoly p = detail::upoly(kind, indices);
            if (cfg.json())
                out << nlohmann::json{{"command", "upoly"}, {"kind", kind}, {"indices", indices}, {"result", to_json(p)}}.dump(2) << "\n";
            else
                out << to_text(p) << "\n";
        } else if (comp->parsed()) {
            std::string a = lhs, b = rhs;
            if (b.empty()) std::tie(a, b) = split_composition(lhs);
            if (b.empty()) throw InvalidArgument("compose needs two operands");
            OpValue x = parse_operation(a, cfg.trunc, w);
            OpValue y = parse_operation(b, cfg.trunc, w);
            const bool odd = std::holds_alternative<OddOp>(x) || std::holds_alternative<OddOp>(y);
            OpValue result = odd ? OpValue(compose_odd(detail::as_odd(x, cfg), detail::as_odd(y, cfg)))
                                 : OpValue(compose(detail::as_even(x, cfg), detail::as_even(y, cfg)));
            detail::print_op(result, cfg, "compose", out);
        } else if (actc->parsed()) {
            EvenOp r = detail::as_even(parse_operation(op, cfg.trunc, w), cfg);
            auto model = get_model(cfg.model);
            IntPoly a = model->reduce(parse_element(element));
            IntPoly result = act(r, *model, a);
            if (cfg.json())
                out << nlohmann::json{{"command", "act"}, {"model", model->name()}, {"result", to_json(result)}}.dump(2) << "\n";
            else
                out << to_text(result) << "\n";
        } else if (loop->parsed()) {
            OpValue x = parse_operation(op, cfg.trunc, w);
            OpValue result = std::holds_alternative<OddOp>(x) ? OpValue(loop_odd(std::get<OddOp>(x), w))
                                                             : OpValue(loop_even(detail::as_even(x, cfg)));
            detail::print_op(result, cfg, "loop", out);
        } else if (cop->parsed()) {
            EvenOp r = detail::as_even(parse_operation(op, cfg.trunc, w), cfg);
            EvenOpTensor t = which == "add" ? op_coadd(r) : op_comult(r);
            if (cfg.json())
                out << nlohmann::json{{"command", "coprod"}, {"which", which}, {"result", detail::tensor_json(t)}}.dump(2) << "\n";
            else
                out << to_text(t) << "\n";
        } else if (check->parsed()) {
            Report rep;
            const bool all = suite == "all";
            if (all || suite == "biring") rep.merge(check_biring(cfg.trunc));
            if (all || suite == "models") rep.merge(check_models(cfg.seed));
            if (all || suite == "compose") rep.merge(check_compose(cfg.trunc, w, cfg.seed, 100));
            if (all || suite == "looping") rep.merge(check_looping_axioms(cfg.trunc, w, cfg.seed));
            if (all || suite == "main") rep.merge(main_relations_check(cfg.trunc, cfg.trunc, w));
            detail::print_report(rep, cfg, out);
            return rep.ok() ? 0 : 1;
        }
    } catch (const Error& e) {
        if (cfg.json())
            out << nlohmann::json{{"error", e.what()}}.dump(2) << "\n";
        else
            err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

inline int run_cli(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_cli(args, out, err);
}

} // namespace kops
