#include "gja/bracket.hpp"
#include "gja/parser.hpp"
#include "gja/rep.hpp"
#include "gja/suites.hpp"
#include "gja/verifier.hpp"
#include "gja/word.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

using namespace gja;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitEngineError = 3;
constexpr int kExitIoError = 4;

struct RunConfig {
    std::string algebra = "A";
    std::string format = "text";
    std::string mode = "fito";
    std::string suite = "all";
    std::string variant;
    bool parallel = false;
};

void add_common(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--algebra", cfg.algebra, "A | H | C | path to a custom algebra JSON");
    cmd->add_option("--format", cfg.format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
}

void emit_element(const Element& e, const RunConfig& cfg,
                  const std::vector<std::string>& warnings = {}) {
    for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
    if (cfg.format == "json") {
        ordered_json out;
        out["value"] = element_json(e);
        out["algebra"] = e.algebra()->name();
        out["version"] = kVersion;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << e.str() << "\n";
    }
}

int cmd_eval(const std::string& text, const RunConfig& cfg) {
    const AlgebraPtr alg = resolve_algebra(cfg.algebra);
    const ExprPtr expr = parse(text, alg);
    const EvalResult r = eval(*expr, alg);
    emit_element(r.value, cfg, r.warnings);
    return kExitOk;
}

int cmd_contract(const std::string& text, const RunConfig& cfg, bool show_trace) {
    const AlgebraPtr alg = resolve_algebra(cfg.algebra);
    const Word w = parse_word(text, alg);
    const ContractionTrace trace = contract_traced(w);
    if (cfg.format == "json") {
        ordered_json out;
        out["word"] = w.str();
        out["normalized"] = trace.normalized.str();
        ordered_json steps = ordered_json::array();
        for (const ContractionStep& s : trace.steps) {
            Word remaining{alg, s.coeff, s.letters};
            steps.push_back({{"remaining", s.letters.empty() ? "(done)" : remaining.str()},
                             {"grade_sign", s.grade_sign}});
        }
        out["steps"] = steps;
        out["value"] = element_json(trace.result);
        out["algebra"] = alg->name();
        out["version"] = kVersion;
        std::cout << out.dump(2) << "\n";
    } else {
        if (show_trace) {
            std::cout << w.str() << " -> " << trace.normalized.str();
            for (const ContractionStep& s : trace.steps)
                if (!s.letters.empty())
                    std::cout << " -> " << Word{alg, s.coeff, s.letters}.str();
            std::cout << " -> " << trace.result.str() << "\n";
        } else {
            std::cout << trace.result.str() << "\n";
        }
    }
    return kExitOk;
}

int cmd_normalize(const std::string& text, const RunConfig& cfg) {
    const AlgebraPtr alg = resolve_algebra(cfg.algebra);
    const Word n = normalize(parse_word(text, alg));
    if (cfg.format == "json") {
        ordered_json out;
        out["normalized"] = n.str();
        const NormalForm nf = normal_form(parse_word(text, alg));
        out["exponents"] = {{"s", nf.s}, {"r", nf.r}, {"q", nf.q}, {"p", nf.p}};
        out["coeff"] = to_string(nf.coeff);
        out["algebra"] = alg->name();
        out["version"] = kVersion;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << n.str() << "\n";
    }
    return kExitOk;
}

int cmd_bracket(const std::string& lhs, const std::string& rhs, const RunConfig& cfg) {
    const AlgebraPtr alg = resolve_algebra(cfg.algebra);
    const Element x = eval(*parse(lhs, alg), alg).value;
    const Element y = eval(*parse(rhs, alg), alg).value;
    emit_element(bracket(x, y), cfg);
    return kExitOk;
}

int cmd_jacobi(const RunConfig& cfg) {
    const AlgebraPtr alg = resolve_algebra(cfg.algebra);
    if (alg != builtin_A()) throw Error("jacobi is defined only over algebra A");

    if (cfg.variant == "commutator") {
        const Element v = jacobi_commutator_variant();
        emit_element(v, cfg);
        return v.is_zero() ? kExitOk : kExitVerificationFailure;
    }
    if (!cfg.variant.empty()) throw Error("unknown variant: " + cfg.variant);

    const bool fito = cfg.mode == "fito";
    bool all_zero = true;
    ordered_json rows = ordered_json::array();
    for (const JacobiInstance& inst : jacobi_instances()) {
        const Element v = fito ? jacobi_fito(inst) : jacobi_foti(inst);
        if (!v.is_zero()) all_zero = false;
        rows.push_back({{"identity", inst.name},
                        {"value", element_json(v)},
                        {"zero", v.is_zero()}});
        if (cfg.format == "text")
            std::cout << inst.name << "  =  " << v.str() << (v.is_zero() ? "" : "  (nonzero)")
                      << "\n";
    }
    if (cfg.format == "json") {
        ordered_json out;
        out["mode"] = cfg.mode;
        out["identities"] = rows;
        out["all_zero"] = all_zero;
        out["algebra"] = alg->name();
        out["version"] = kVersion;
        std::cout << out.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        std::cout << "identity,value,zero\n";
        for (const auto& row : rows)
            std::cout << '"' << row["identity"].get<std::string>() << "\","
                      << row["value"].dump() << "," << (row["zero"].get<bool>() ? "1" : "0")
                      << "\n";
    }
    return all_zero ? kExitOk : kExitVerificationFailure;
}

int cmd_verify(const RunConfig& cfg) {
    const AlgebraPtr alg = resolve_algebra(cfg.algebra);
    const Report report =
        cfg.suite == "all" ? run_all_suites(alg, cfg.parallel) : run_suite(cfg.suite, alg);
    if (cfg.format == "json")
        std::cout << report.to_json().dump(2) << "\n";
    else if (cfg.format == "csv")
        std::cout << report.to_csv();
    else
        std::cout << report.to_text();
    return report.all_ok() ? kExitOk : kExitVerificationFailure;
}

int cmd_classify(const RunConfig& cfg) {
    const AlgebraPtr alg = resolve_algebra(cfg.algebra);
    const Classification cls = classify_assoc(alg);
    if (cfg.format == "json") {
        ordered_json out;
        out["class"] = to_string(cls.cls);
        out["witnesses_plus"] = cls.plus.checks[0].witnesses;
        out["witnesses_minus"] = cls.minus.checks[0].witnesses;
        out["algebra"] = alg->name();
        out["version"] = kVersion;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << to_string(cls.cls) << "\n";
        const auto show = [&](const char* label, const AxiomReport& r) {
            if (!r.checks[0].witnesses.empty())
                std::cout << label << " first witness: " << r.checks[0].witnesses[0].dump()
                          << "\n";
        };
        show("delta=+1", cls.plus);
        show("delta=-1", cls.minus);
    }
    return kExitOk;
}

int cmd_table(const RunConfig& cfg) {
    const AlgebraPtr alg = resolve_algebra(cfg.algebra);
    if (cfg.format == "json") {
        ordered_json rows = ordered_json::array();
        for (int i = 0; i < alg->dim(); ++i) {
            ordered_json row = ordered_json::array();
            for (int j = 0; j < alg->dim(); ++j) row.push_back(table_entry_str(alg, i, j));
            rows.push_back(row);
        }
        ordered_json out;
        out["table"] = rows;
        out["orientation"] = "row is the left factor";
        out["algebra"] = alg->name();
        out["version"] = kVersion;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << render_table(alg);
    }
    return kExitOk;
}

int cmd_rep(const std::string& element, const std::string& side, const RunConfig& cfg) {
    const AlgebraPtr alg = resolve_algebra(cfg.algebra);
    const int idx = alg->generator_index(element);
    if (idx < 0) throw UnknownElementError("no generator named '" + element + "'");
    const Element x = Element::basis(alg, idx);
    const auto print_matrix = [&](const char* label, const Matrix& m) {
        if (cfg.format == "json") return;
        std::cout << label << "(" << element << "):\n";
        for (int r = 0; r < m.dim(); ++r) {
            for (int c = 0; c < m.dim(); ++c)
                std::cout << (c ? " " : "  ") << to_string(m.at(r, c));
            std::cout << "\n";
        }
    };
    ordered_json out;
    if (side == "left" || side == "both") {
        print_matrix("L", left_matrix(x));
        out["left"] = left_matrix(x).to_json();
    }
    if (side == "right" || side == "both") {
        print_matrix("R", right_matrix(x));
        out["right"] = right_matrix(x).to_json();
    }
    if (cfg.format == "json") {
        out["element"] = element;
        out["algebra"] = alg->name();
        out["version"] = kVersion;
        std::cout << out.dump(2) << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symbolic kernel for a graded quaternion deformation"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string expr_text, lhs, rhs, word_text, element = "1", side = "both";
    bool show_trace = false;

    CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate an expression");
    eval_cmd->add_option("expr", expr_text, "expression text")->required();
    add_common(eval_cmd, cfg);

    CLI::App* contract_cmd = app.add_subcommand("contract", "Totally contract a word");
    contract_cmd->add_option("word", word_text, "word text, e.g. cbcb")->required();
    contract_cmd->add_flag("--trace", show_trace, "print the step chain");
    add_common(contract_cmd, cfg);

    CLI::App* normalize_cmd = app.add_subcommand("normalize", "Normal-order a word");
    normalize_cmd->add_option("word", word_text, "word text")->required();
    add_common(normalize_cmd, cfg);

    CLI::App* bracket_cmd =
        app.add_subcommand("bracket", "Parity-dispatched bracket of two expressions");
    bracket_cmd->add_option("lhs", lhs, "left operand")->required();
    bracket_cmd->add_option("rhs", rhs, "right operand")->required();
    add_common(bracket_cmd, cfg);

    CLI::App* jacobi_cmd = app.add_subcommand("jacobi", "Evaluate the eight built-in identities");
    jacobi_cmd->add_option("--mode", cfg.mode, "fito | foti")
        ->check(CLI::IsMember({"fito", "foti"}));
    jacobi_cmd->add_option("--variant", cfg.variant, "commutator");
    add_common(jacobi_cmd, cfg);

    CLI::App* verify_cmd = app.add_subcommand("verify", "Run verification suites");
    verify_cmd->add_option("--suite", cfg.suite,
                           "table | words | brackets | jacobi | axioms | quaternion | compare | all");
    verify_cmd->add_flag("--parallel", cfg.parallel, "run suites concurrently");
    add_common(verify_cmd, cfg);

    CLI::App* classify_cmd = app.add_subcommand("classify", "Associativity class with witnesses");
    add_common(classify_cmd, cfg);

    CLI::App* table_cmd = app.add_subcommand("table", "Print the multiplication table");
    add_common(table_cmd, cfg);

    CLI::App* rep_cmd = app.add_subcommand("rep", "Left/right multiplication matrices");
    rep_cmd->add_option("--element", element, "generator name")->required();
    rep_cmd->add_option("--side", side, "left | right | both")
        ->check(CLI::IsMember({"left", "right", "both"}));
    add_common(rep_cmd, cfg);

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval_cmd->parsed()) return cmd_eval(expr_text, cfg);
        if (contract_cmd->parsed()) return cmd_contract(word_text, cfg, show_trace);
        if (normalize_cmd->parsed()) return cmd_normalize(word_text, cfg);
        if (bracket_cmd->parsed()) return cmd_bracket(lhs, rhs, cfg);
        if (jacobi_cmd->parsed()) return cmd_jacobi(cfg);
        if (verify_cmd->parsed()) return cmd_verify(cfg);
        if (classify_cmd->parsed()) return cmd_classify(cfg);
        if (table_cmd->parsed()) return cmd_table(cfg);
        if (rep_cmd->parsed()) return cmd_rep(element, side, cfg);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIoError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEngineError;
    }
    return kExitOk;
}
