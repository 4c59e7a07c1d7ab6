#include "gja/verifier.hpp"

#include <algorithm>
#include <functional>

namespace gja {

bool AxiomReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const AxiomCheck& c) { return c.passed; });
}

nlohmann::ordered_json AxiomReport::to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const AxiomCheck& c : checks) {
        nlohmann::ordered_json jc;
        jc["axiom"] = c.axiom;
        jc["passed"] = c.passed;
        jc["witnesses"] = c.witnesses;
        j.push_back(jc);
    }
    return j;
}

std::string to_string(AssocClass c) {
    switch (c) {
        case AssocClass::Associative: return "associative";
        case AssocClass::Antiassociative: return "antiassociative";
        case AssocClass::Both: return "both";
        case AssocClass::Neither: return "neither";
    }
    return "?";
}

namespace {

int grade_sign(const AlgebraTable& alg, int i, int j) {
    return (alg.generator(i).parity * alg.generator(j).parity) % 2 == 1 ? -1 : 1;
}

nlohmann::ordered_json names(const AlgebraPtr& alg, std::initializer_list<int> idx) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (int i : idx) j.push_back(alg->generator(i).name);
    return j;
}

}  // namespace

Element generic_bracket(const Element& x, const Element& y, Delta delta) {
    if (x.algebra() != y.algebra())
        throw MixedAlgebraError("bracket operands belong to different algebras");
    const AlgebraPtr& alg = x.algebra();
    Element result(alg);
    for (const auto& [i, xi] : x.coeffs()) {
        for (const auto& [j, yj] : y.coeffs()) {
            const Element gi = Element::basis(alg, i);
            const Element gj = Element::basis(alg, j);
            Element br = binary_product(gi, gj) -
                         Scalar(delta.value * grade_sign(*alg, i, j)) * binary_product(gj, gi);
            result += (xi * yj) * br;
        }
    }
    return result;
}

AxiomReport check_delta_assoc(const AlgebraPtr& alg, Delta delta) {
    const int n = alg->dim();
    AxiomCheck check{"delta-assoc(" + std::string(delta.value > 0 ? "+1" : "-1") + ")"};
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            for (int z = 0; z < n; ++z) {
                const Element gx = Element::basis(alg, x);
                const Element gy = Element::basis(alg, y);
                const Element gz = Element::basis(alg, z);
                const Element lhs = binary_product(binary_product(gx, gy), gz);
                const Element rhs = Scalar(delta.value) * binary_product(gx, binary_product(gy, gz));
                if (lhs != rhs) {
                    check.passed = false;
                    nlohmann::ordered_json w;
                    w["triple"] = names(alg, {x, y, z});
                    w["lhs"] = element_json(lhs);
                    w["rhs"] = element_json(rhs);
                    check.witnesses.push_back(w);
                }
            }
        }
    }
    check.witnesses = sorted_witnesses(check.witnesses);
    return AxiomReport{{check}};
}

Classification classify_assoc(const AlgebraPtr& alg) {
    Classification c{AssocClass::Neither, check_delta_assoc(alg, Delta(1)),
                     check_delta_assoc(alg, Delta(-1))};
    const bool plus = c.plus.all_passed();
    const bool minus = c.minus.all_passed();
    if (plus && minus)
        c.cls = AssocClass::Both;
    else if (plus)
        c.cls = AssocClass::Associative;
    else if (minus)
        c.cls = AssocClass::Antiassociative;
    return c;
}

AxiomReport check_graded_bracket_axioms(const AlgebraPtr& alg, Delta delta) {
    const int n = alg->dim();
    AxiomReport report;
    const auto basis = [&](int i) { return Element::basis(alg, i); };
    const auto br = [&](const Element& x, const Element& y) {
        return generic_bracket(x, y, delta);
    };

    AxiomCheck closure{"parity-closure"};
    AxiomCheck antisym{"graded-antisymmetry"};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Element b = br(basis(i), basis(j));
            const int want = (alg->generator(i).parity + alg->generator(j).parity) % 2;
            const Parity p = b.parity();
            const bool parity_ok =
                p == Parity::Zero || p == (want == 0 ? Parity::Even : Parity::Odd);
            if (!parity_ok) {
                closure.passed = false;
                nlohmann::ordered_json w;
                w["pair"] = names(alg, {i, j});
                w["bracket"] = element_json(b);
                closure.witnesses.push_back(w);
            }
            const Element mirrored =
                Scalar(-delta.value * grade_sign(*alg, i, j)) * br(basis(j), basis(i));
            if (b != mirrored) {
                antisym.passed = false;
                nlohmann::ordered_json w;
                w["pair"] = names(alg, {i, j});
                w["lhs"] = element_json(b);
                w["rhs"] = element_json(mirrored);
                antisym.witnesses.push_back(w);
            }
        }
    }

    AxiomCheck jacobi_outer{"graded-jacobi-outer-nesting"};
    AxiomCheck jacobi_inner{"graded-jacobi-inner-nesting"};
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            for (int z = 0; z < n; ++z) {
                const Element gx = basis(x), gy = basis(y), gz = basis(z);
                const Scalar pxz(grade_sign(*alg, x, z));
                const Scalar pyx(grade_sign(*alg, y, x));
                const Scalar pzy(grade_sign(*alg, z, y));
                const Element outer = pxz * br(br(gx, gy), gz) + pyx * br(br(gy, gz), gx) +
                                      pzy * br(br(gz, gx), gy);
                const Element inner = pxz * br(gx, br(gy, gz)) + pyx * br(gy, br(gz, gx)) +
                                      pzy * br(gz, br(gx, gy));
                const auto record = [&](AxiomCheck& check, const Element& total) {
                    if (!total.is_zero()) {
                        check.passed = false;
                        nlohmann::ordered_json w;
                        w["triple"] = names(alg, {x, y, z});
                        w["value"] = element_json(total);
                        check.witnesses.push_back(w);
                    }
                };
                record(jacobi_outer, outer);
                record(jacobi_inner, inner);
            }
        }
    }

    for (AxiomCheck* c : {&closure, &antisym, &jacobi_outer, &jacobi_inner}) {
        c->witnesses = sorted_witnesses(c->witnesses);
        report.checks.push_back(std::move(*c));
    }
    return report;
}

namespace {

// All full binary bracketings of the factor sequence [lo, hi).
std::vector<Element> all_bracketings(const AlgebraPtr& alg, const std::vector<int>& factors,
                                     int lo, int hi) {
    if (hi - lo == 1) return {Element::basis(alg, factors[lo])};
    std::vector<Element> out;
    for (int split = lo + 1; split < hi; ++split) {
        for (const Element& left : all_bracketings(alg, factors, lo, split))
            for (const Element& right : all_bracketings(alg, factors, split, hi))
                out.push_back(binary_product(left, right));
    }
    return out;
}

// Left- and right-nested products only; used past length 4 to bound cost.
std::vector<Element> nested_bracketings(const AlgebraPtr& alg, const std::vector<int>& factors) {
    Element left = Element::basis(alg, factors[0]);
    for (std::size_t i = 1; i < factors.size(); ++i)
        left = binary_product(left, Element::basis(alg, factors[i]));
    Element right = Element::basis(alg, factors.back());
    for (std::size_t i = factors.size() - 1; i-- > 0;)
        right = binary_product(Element::basis(alg, factors[i]), right);
    return {left, right};
}

void for_each_tuple(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> tuple(k, 0);
    while (true) {
        fn(tuple);
        int pos = k - 1;
        while (pos >= 0 && tuple[pos] == n - 1) tuple[pos--] = 0;
        if (pos < 0) return;
        ++tuple[pos];
    }
}

}  // namespace

AxiomReport check_length4_vanish(const AlgebraPtr& alg) {
    AxiomCheck check{"length4-vanish"};
    for_each_tuple(alg->dim(), 4, [&](const std::vector<int>& tuple) {
        int bracketing = 0;
        for (const Element& value : all_bracketings(alg, tuple, 0, 4)) {
            if (!value.is_zero()) {
                check.passed = false;
                nlohmann::ordered_json w;
                w["tuple"] = names(alg, {tuple[0], tuple[1], tuple[2], tuple[3]});
                w["bracketing"] = bracketing;
                w["value"] = element_json(value);
                check.witnesses.push_back(w);
            }
            ++bracketing;
        }
    });
    check.witnesses = sorted_witnesses(check.witnesses);
    return AxiomReport{{check}};
}

std::optional<int> check_nilpotency(const AlgebraPtr& alg, int max_k) {
    if (max_k < 2) throw Error("max_k must be at least 2");
    for (int k = 2; k <= max_k; ++k) {
        bool all_zero = true;
        for_each_tuple(alg->dim(), k, [&](const std::vector<int>& tuple) {
            if (!all_zero) return;
            const std::vector<Element> values =
                k <= 4 ? all_bracketings(alg, tuple, 0, k) : nested_bracketings(alg, tuple);
            for (const Element& v : values)
                if (!v.is_zero()) {
                    all_zero = false;
                    return;
                }
        });
        if (all_zero) return k;
    }
    return std::nullopt;
}

nlohmann::ordered_json IdempotentUnitReport::to_json() const {
    nlohmann::ordered_json j;
    j["search_scope"] = "plus-minus-basis";
    j["idempotents"] = idempotents;
    const auto opt = [](const std::optional<std::string>& s) {
        return s ? nlohmann::ordered_json(*s) : nlohmann::ordered_json(nullptr);
    };
    j["right_identity"] = opt(right_identity);
    j["left_identity"] = opt(left_identity);
    j["two_sided_identity"] = opt(two_sided_identity);
    return j;
}

IdempotentUnitReport check_idempotents_and_units(const AlgebraPtr& alg) {
    IdempotentUnitReport report;
    const int n = alg->dim();
    for (int i = 0; i < n; ++i) {
        for (int sign : {1, -1}) {
            const Element x = Scalar(sign) * Element::basis(alg, i);
            if (binary_product(x, x) == x)
                report.idempotents.push_back((sign < 0 ? "-" : "") + alg->generator(i).name);
        }
    }
    for (int e = 0; e < n; ++e) {
        const Element ge = Element::basis(alg, e);
        bool right = true, left = true;
        for (int x = 0; x < n; ++x) {
            const Element gx = Element::basis(alg, x);
            if (binary_product(gx, ge) != gx) right = false;
            if (binary_product(ge, gx) != gx) left = false;
        }
        const std::string& name = alg->generator(e).name;
        if (right && left && !report.two_sided_identity) report.two_sided_identity = name;
        if (right && !left && !report.right_identity) report.right_identity = name;
        if (left && !right && !report.left_identity) report.left_identity = name;
    }
    return report;
}

}  // namespace gja
