#include "resloc/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "resloc/errors.hpp"
#include "resloc/expr_parser.hpp"
#include "resloc/fgl.hpp"
#include "resloc/localization.hpp"
#include "resloc/localized_ring.hpp"
#include "resloc/model_io.hpp"
#include "resloc/models.hpp"
#include "resloc/residue_maps.hpp"

namespace resloc::cli {

namespace {

using nlohmann::json;

struct ResidueOpts {
    std::string kind;
    std::string expr;
    bool strict = false;
    bool as_json = false;
};

struct ExpandOpts {
    std::string at = "zero";
    long long order = 32;
    std::string expr;
    bool as_json = false;
};

struct ModelCmdOpts {
    std::string model_path;
    std::string kind;
    bool as_json = false;
    bool require_conditions = false;
};

struct FglCheckOpts {
    std::string law;
    std::string kind;
    int order = 16;
    std::string euler_expr;
    bool as_json = false;
};

struct EmitOpts {
    std::string recipe;
    std::string emit_path;
};

json series_to_json(const TruncatedSeries& s) {
    json terms = json::object();
    for (std::size_t i = 0; i < s.coefficients().size(); ++i) {
        if (s.coefficients()[i].is_zero()) continue;
        terms[std::to_string(s.u_exponent(i))] = s.coefficients()[i].str();
    }
    json j;
    switch (s.anchor().tag()) {
        case ExpansionAnchor::Tag::Zero: j["anchor"] = "zero"; break;
        case ExpansionAnchor::Tag::Infinity: j["anchor"] = "inf"; break;
        case ExpansionAnchor::Tag::FinitePoint:
            j["anchor"] = "point";
            j["point"] = s.anchor().point().str();
            break;
    }
    j["order"] = s.truncation_order();
    j["terms"] = std::move(terms);
    return j;
}

void cmd_residue(const ResidueOpts& opt, std::ostream& out) {
    const ResidueKind kind = residue_kind_from_name(opt.kind);
    const RationalFunction f = parse_expression(opt.expr);
    const Rational value =
        residue_map(kind, f, opt.strict ? ResidueDomain::Strict : ResidueDomain::Relaxed);
    if (opt.as_json) {
        json j;
        j["kind"] = opt.kind;
        j["strict"] = opt.strict;
        j["value"] = value.str();
        out << j.dump() << "\n";
    } else {
        out << value.str() << "\n";
    }
}

void cmd_expand(const ExpandOpts& opt, std::ostream& out) {
    const RationalFunction f = parse_expression(opt.expr);
    ExpansionAnchor anchor = ExpansionAnchor::zero();
    if (opt.at == "inf" || opt.at == "infinity")
        anchor = ExpansionAnchor::infinity();
    else if (opt.at != "zero")
        anchor = ExpansionAnchor::at(Rational::parse(opt.at));
    const TruncatedSeries s = expand(f, anchor, opt.order);
    if (opt.as_json)
        out << series_to_json(s).dump() << "\n";
    else
        out << s.str() << "\n";
}

void cmd_kappa(const ModelCmdOpts& opt, std::ostream& out) {
    const ManifoldModel m = read_model_file(opt.model_path);
    const Rational value = kappa(m, residue_kind_from_name(opt.kind));
    if (opt.as_json) {
        json j;
        j["kappa"] = value.str();
        j["kind"] = opt.kind;
        j["model"] = m.name;
        out << j.dump() << "\n";
    } else {
        out << value.str() << "\n";
    }
}

void cmd_push(const ModelCmdOpts& opt, std::ostream& out) {
    const ManifoldModel m = read_model_file(opt.model_path);
    const LaurentPolynomial p = pushforward_closed(m);
    if (opt.as_json) {
        json j;
        j["model"] = m.name;
        j["pushforward"] = laurent_to_json(p);
        out << j.dump() << "\n";
    } else {
        out << p.str() << "\n";
    }
}

void cmd_mult0(const ModelCmdOpts& opt, std::ostream& out) {
    const ManifoldModel m = read_model_file(opt.model_path);
    const Rational value = multiplicity_zero(m);
    if (opt.as_json) {
        json j;
        j["model"] = m.name;
        j["mult0"] = value.str();
        out << j.dump() << "\n";
    } else {
        out << value.str() << "\n";
    }
}

int cmd_qr(const ModelCmdOpts& opt, std::ostream& out) {
    const ManifoldModel m = read_model_file(opt.model_path);
    const QrReport r = qr_check(m);
    if (opt.as_json) {
        json comps = json::array();
        for (const auto& c : r.conditions) {
            json jc;
            jc["id"] = c.id;
            jc["side"] = side_name(c.side);
            jc["w"] = c.w;
            jc["bound"] = c.side_bound;
            jc["zeroRestriction"] = c.zero_restriction;
            jc["min"] = c.min;
            jc["max"] = c.max;
            jc["ok"] = c.ok;
            comps.push_back(std::move(jc));
        }
        json j;
        j["model"] = m.name;
        j["components"] = std::move(comps);
        j["qM0"] = r.q_m0.str();
        j["qMred"] = r.q_mred.str();
        j["defectPlus"] = r.defect_plus.str();
        j["defectMinus"] = r.defect_minus.str();
        j["allConditionsOk"] = r.all_conditions_ok;
        j["equal"] = r.equal;
        out << j.dump() << "\n";
    } else {
        for (const auto& c : r.conditions) {
            out << c.id << "  side=" << side_name(c.side) << "  w=" << c.w;
            if (c.zero_restriction)
                out << "  restriction=0";
            else
                out << "  min=" << c.min << "  max=" << c.max;
            out << "  condition=" << (c.ok ? "ok" : "VIOLATED") << "\n";
        }
        out << "qM0 = " << r.q_m0.str() << "\n";
        out << "qMred = " << r.q_mred.str() << "\n";
        out << "defectPlus = " << r.defect_plus.str() << "\n";
        out << "defectMinus = " << r.defect_minus.str() << "\n";
        out << "equal = " << (r.equal ? "true" : "false") << "\n";
    }
    if (opt.require_conditions && !r.all_conditions_ok) return 1;
    return 0;
}

int cmd_fgl_check(const FglCheckOpts& opt, std::ostream& out) {
    const ResidueKind kind = residue_kind_from_name(opt.kind);
    FormalGroupLaw law(0);
    RationalFunction euler;
    if (opt.law == "additive" || opt.law == "multiplicative") {
        BuiltinFgl builtin =
            fgl_builtin(opt.law == "additive" ? FglName::Additive : FglName::Multiplicative);
        law = builtin.law;
        euler = builtin.euler;
    } else {
        FglTable table = read_fgl_file(opt.law);
        law = table.law;
        if (opt.euler_expr.empty() && !table.euler)
            fail(Errc::InvalidFgl, "law file has no 'euler' entry; pass --euler EXPR");
        if (table.euler) euler = *table.euler;
    }
    if (!opt.euler_expr.empty()) euler = parse_expression(opt.euler_expr);
    const AxiomReport report = residue_axiom_check(kind, law, euler, opt.order);
    if (opt.as_json) {
        json j;
        j["law"] = opt.law;
        j["kind"] = opt.kind;
        j["order"] = opt.order;
        j["axiom1Violations"] = report.axiom1_violations;
        j["axiom2Value"] = report.axiom2_value.str();
        j["cKill"] = report.c_kill;
        j["passed"] = report.passed();
        out << j.dump() << "\n";
    } else {
        out << "axiom 1 (rho kills the unlocalized ring): "
            << (report.axiom1_violations.empty() ? "ok" : "VIOLATED") << "\n";
        for (const auto& v : report.axiom1_violations) out << "  rho(" << v << ") != 0\n";
        out << "axiom 2 value rho(e^-1) = " << report.axiom2_value.str() << " (want -1)\n";
        std::size_t killed = 0;
        for (bool k : report.c_kill) killed += k ? 1 : 0;
        out << "rho(c_k) = 0 for " << killed << "/" << report.c_kill.size() << " coefficients\n";
        out << "passed = " << (report.passed() ? "true" : "false") << "\n";
    }
    return report.passed() ? 0 : 1;
}

void cmd_model(const EmitOpts& opt, std::ostream& out) {
    const ManifoldModel m = build_from_recipe(opt.recipe);
    if (opt.emit_path.empty() || opt.emit_path == "-")
        out << model_to_json(m).dump(2) << "\n";
    else
        write_model_file(m, opt.emit_path);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact S^1-equivariant localization calculator"};
    app.require_subcommand(1);

    ResidueOpts residue_opts;
    auto* residue_cmd = app.add_subcommand("residue", "Apply a residue map to an expression");
    residue_cmd->add_option("--kind", residue_opts.kind, "borel|rho1|rho0inf")->required();
    residue_cmd->add_option("--expr", residue_opts.expr, "expression in u")->required();
    residue_cmd->add_flag("--strict", residue_opts.strict,
                          "restrict to the localized coefficient ring");
    residue_cmd->add_flag("--json", residue_opts.as_json, "canonical JSON output");

    ExpandOpts expand_opts;
    auto* expand_cmd = app.add_subcommand("expand", "Laurent-expand an expression");
    expand_cmd->add_option("--at", expand_opts.at, "zero|inf|POINT (rational)");
    expand_cmd->add_option("--order", expand_opts.order, "truncation order (default 32)");
    expand_cmd->add_option("--expr", expand_opts.expr, "expression in u")->required();
    expand_cmd->add_flag("--json", expand_opts.as_json, "canonical JSON output");

    ModelCmdOpts kappa_opts;
    auto* kappa_cmd = app.add_subcommand("kappa", "Boundary localization sum of an all-plus model");
    kappa_cmd->add_option("--model", kappa_opts.model_path, "model JSON file")->required();
    kappa_cmd->add_option("--kind", kappa_opts.kind, "borel|rho1|rho0inf")->required();
    kappa_cmd->add_flag("--json", kappa_opts.as_json, "canonical JSON output");

    ModelCmdOpts push_opts;
    auto* push_cmd = app.add_subcommand("push", "Closed-model pushforward with integrality check");
    push_cmd->add_option("--model", push_opts.model_path, "model JSON file")->required();
    push_cmd->add_flag("--json", push_opts.as_json, "canonical JSON output");

    ModelCmdOpts mult_opts;
    auto* mult_cmd = app.add_subcommand("mult0", "Multiplicity of the trivial representation");
    mult_cmd->add_option("--model", mult_opts.model_path, "model JSON file")->required();
    mult_cmd->add_flag("--json", mult_opts.as_json, "canonical JSON output");

    ModelCmdOpts qr_opts;
    auto* qr_cmd = app.add_subcommand("qr", "Quantization-commutes-with-reduction comparison");
    qr_cmd->add_option("--model", qr_opts.model_path, "model JSON file")->required();
    qr_cmd->add_flag("--json", qr_opts.as_json, "canonical JSON output");
    qr_cmd->add_flag("--require-conditions", qr_opts.require_conditions,
                     "exit 1 when a degree condition fails");

    FglCheckOpts fgl_opts;
    auto* fgl_cmd = app.add_subcommand("fgl-check", "Check the residue-map axioms against a law");
    fgl_cmd->add_option("--law", fgl_opts.law, "additive|multiplicative|FILE")->required();
    fgl_cmd->add_option("--kind", fgl_opts.kind, "borel|rho1|rho0inf")->required();
    fgl_cmd->add_option("--order", fgl_opts.order, "series order (default 16)");
    fgl_cmd->add_option("--euler", fgl_opts.euler_expr, "Euler element expression override");
    fgl_cmd->add_flag("--json", fgl_opts.as_json, "canonical JSON output");

    EmitOpts model_opts;
    auto* model_cmd = app.add_subcommand("model", "Emit a built-in model as JSON");
    model_cmd->add_option("--recipe", model_opts.recipe,
                          "cp1:k=K | cpn:n=N,k=K | product(R,R) | custom:path=FILE")
        ->required();
    model_cmd->add_option("--emit", model_opts.emit_path, "output file ('-' for stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (residue_cmd->parsed()) cmd_residue(residue_opts, out);
        if (expand_cmd->parsed()) cmd_expand(expand_opts, out);
        if (kappa_cmd->parsed()) cmd_kappa(kappa_opts, out);
        if (push_cmd->parsed()) cmd_push(push_opts, out);
        if (mult_cmd->parsed()) cmd_mult0(mult_opts, out);
        if (qr_cmd->parsed()) return cmd_qr(qr_opts, out);
        if (fgl_cmd->parsed()) return cmd_fgl_check(fgl_opts, out);
        if (model_cmd->parsed()) cmd_model(model_opts, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == Errc::SyntaxError ? 2 : 1;
    }
    return 0;
}

}  // namespace resloc::cli
