#include "gja/bracket.hpp"
#include "gja/parser.hpp"
#include "gja/rep.hpp"
#include "gja/suites.hpp"
#include "gja/verifier.hpp"
#include "gja/word.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace gja;

namespace {

std::map<std::string, std::string> element_dict(const Element& e) {
    std::map<std::string, std::string> out;
    for (const auto& [idx, coeff] : e.coeffs())
        out[e.algebra()->generator(idx).name] = to_string(coeff);
    return out;
}

AlgebraPtr select(const std::string& selector) { return resolve_algebra(selector); }

}  // namespace

PYBIND11_MODULE(_gja, m) {
    m.doc() = "Exact symbolic kernel for a graded quaternion deformation";
    m.attr("__version__") = kVersion;

    // Translators run newest-first, so the more specific one goes last.
    py::register_exception<Error>(m, "GjaError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "GjaParseError", PyExc_ValueError);

    m.def(
        "evaluate",
        [](const std::string& text, const std::string& algebra) {
            const AlgebraPtr alg = select(algebra);
            return element_dict(eval(*parse(text, alg), alg).value);
        },
        py::arg("text"), py::arg("algebra") = "A",
        "Evaluate an expression; returns {generator: rational-string}.");

    m.def(
        "evaluate_str",
        [](const std::string& text, const std::string& algebra) {
            const AlgebraPtr alg = select(algebra);
            return eval(*parse(text, alg), alg).value.str();
        },
        py::arg("text"), py::arg("algebra") = "A");

    m.def(
        "contract",
        [](const std::string& word) {
            return element_dict(contract(parse_word(word, builtin_A())));
        },
        py::arg("word"), "Totally contract a word over the deformed table.");

    m.def(
        "normalize",
        [](const std::string& word) { return gja::normalize(parse_word(word, builtin_A())).str(); },
        py::arg("word"), "Normal-order a word; returns its signed string form.");

    m.def(
        "bracket",
        [](const std::string& lhs, const std::string& rhs, const std::string& algebra) {
            const AlgebraPtr alg = select(algebra);
            return element_dict(gja::bracket(eval(*parse(lhs, alg), alg).value,
                                             eval(*parse(rhs, alg), alg).value));
        },
        py::arg("lhs"), py::arg("rhs"), py::arg("algebra") = "A",
        "Parity-dispatched graded bracket of two expressions.");

    m.def(
        "jacobi",
        [](const std::string& mode) {
            if (mode != "fito" && mode != "foti") throw Error("mode must be fito or foti");
            std::vector<std::pair<std::string, std::map<std::string, std::string>>> rows;
            for (const JacobiInstance& inst : jacobi_instances())
                rows.emplace_back(inst.name, element_dict(mode == "fito" ? jacobi_fito(inst)
                                                                         : jacobi_foti(inst)));
            return rows;
        },
        py::arg("mode") = "fito", "The eight identities as (name, value) pairs.");

    m.def("jacobi_commutator_variant",
          [] { return element_dict(jacobi_commutator_variant()); });

    m.def(
        "classify",
        [](const std::string& algebra) { return to_string(classify_assoc(select(algebra)).cls); },
        py::arg("algebra") = "A");

    m.def(
        "signature",
        [](const std::string& algebra) { return gja::signature(select(algebra)).str(); },
        py::arg("algebra") = "A");

    m.def(
        "table",
        [](const std::string& algebra) { return render_table(select(algebra)); },
        py::arg("algebra") = "A");

    m.def(
        "verify",
        [](const std::string& suite, const std::string& algebra, bool parallel) {
            const AlgebraPtr alg = select(algebra);
            const Report r =
                suite == "all" ? run_all_suites(alg, parallel) : run_suite(suite, alg);
            return py::make_tuple(r.all_ok(), r.to_json().dump(2));
        },
        py::arg("suite") = "all", py::arg("algebra") = "A", py::arg("parallel") = false,
        "Run a verification suite; returns (ok, report_json).");

    m.def("suites", [] { return suite_names(); });
}
