#include "gja/bracket.hpp"
#include "gja/verifier.hpp"

namespace gja {

Report bracket_parity_check(const AlgebraPtr& alg) {
    Report report{"bracket-parity", alg->name(), {}};
    Check check = make_pass("parity-closure-all-pairs");
    nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
    const int n = alg->dim();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Element b = bracket(Element::basis(alg, i), Element::basis(alg, j));
            const int want = (alg->generator(i).parity + alg->generator(j).parity) % 2;
            const Parity p = b.parity();
            if (p == Parity::Zero || p == (want == 0 ? Parity::Even : Parity::Odd)) continue;
            nlohmann::ordered_json w;
            w["pair"] = nlohmann::ordered_json::array(
                {alg->generator(i).name, alg->generator(j).name});
            w["bracket"] = element_json(b);
            witnesses.push_back(w);
        }
    }
    if (!witnesses.empty()) check = make_fail(check.id, witnesses);
    report.checks.push_back(std::move(check));
    return report;
}

namespace {

Check finding(std::string id, bool as_expected, CheckStatus status,
              nlohmann::ordered_json value,
              nlohmann::ordered_json witnesses = nlohmann::ordered_json::array()) {
    Check c;
    c.id = std::move(id);
    c.status = as_expected ? status : CheckStatus::Fail;
    c.ok = as_expected;
    c.value = std::move(value);
    c.witnesses = sorted_witnesses(std::move(witnesses));
    return c;
}

}  // namespace

Report compare_structures() {
    const AlgebraPtr A = builtin_A();
    Report report{"compare", "A", {}};

    // (i) Both structures are finite dimensional and Z2-graded.
    {
        bool graded = true;
        for (const Generator& g : A->generators())
            if (g.parity != 0 && g.parity != 1) graded = false;
        report.checks.push_back(
            finding("i-grading", graded && A->dim() == 4, CheckStatus::Pass,
                    {{"dim", A->dim()}, {"even", {"a", "b"}}, {"odd", {"c", "d"}}}));
    }

    // (ii) Neither associative nor antiassociative; witness triple (a,b,c).
    {
        const Classification cls = classify_assoc(A);
        const Element a = Element::basis(A, 0), b = Element::basis(A, 1),
                      c = Element::basis(A, 2);
        const Element assoc_rhs = binary_product(a, binary_product(b, c));   // a(bc) = c
        const Element assoc_lhs = binary_product(binary_product(a, b), c);   // (ab)c = -d
        nlohmann::ordered_json w;
        w["triple"] = {"a", "b", "c"};
        w["x(yz)"] = element_json(assoc_rhs);
        w["(xy)z"] = element_json(assoc_lhs);
        w["-(xy)z"] = element_json(-assoc_lhs);
        const bool as_expected = cls.cls == AssocClass::Neither && assoc_rhs == c &&
                                 assoc_lhs == -Element::basis(A, 3);
        report.checks.push_back(finding("ii-associativity-class", as_expected,
                                        CheckStatus::ExpectedFail, to_string(cls.cls),
                                        nlohmann::ordered_json::array({w})));
    }

    // (iii) Graded bracket relations close exactly as in the abstract case.
    report.checks.push_back(finding("iii-bracket-closure",
                                    bracket_parity_check(A).all_ok(), CheckStatus::Pass,
                                    "parity closure on all 16 pairs"));

    // (iv) Jacobi identities hold without the external grade prefactors.
    {
        bool all_zero = true;
        for (const JacobiInstance& inst : jacobi_instances())
            if (!jacobi_fito(inst).is_zero()) all_zero = false;
        report.checks.push_back(finding("iv-externally-ungraded-jacobi", all_zero,
                                        CheckStatus::Pass,
                                        "all 8 identities vanish with no prefactors"));
    }

    // (v) fito passes, foti does not.
    {
        const Element foti = jacobi_foti(jacobi_instances()[6]);
        nlohmann::ordered_json w;
        w["identity"] = jacobi_instances()[6].name;
        w["foti_value"] = element_json(foti);
        report.checks.push_back(finding("v-foti-sensitivity", !foti.is_zero(),
                                        CheckStatus::ExpectedFail, element_json(foti),
                                        nlohmann::ordered_json::array({w})));
    }

    // (vi)(alpha) Length-4 words do not vanish identically.
    {
        const Word cbcb{A, Scalar(1), {2, 1, 2, 1}};
        const Element value = contract(cbcb);
        nlohmann::ordered_json w;
        w["word"] = "cbcb";
        w["value"] = element_json(value);
        report.checks.push_back(finding("vi-alpha-length4-nonvanishing",
                                        value == -Element::basis(A, 0),
                                        CheckStatus::ExpectedFail, element_json(value),
                                        nlohmann::ordered_json::array({w})));
    }

    // (vi)(beta) Right identity a, no left identity; but the table's
    // a o a = a is an idempotent, at odds with the no-idempotent claim.
    {
        const IdempotentUnitReport idem = check_idempotents_and_units(A);
        const bool as_expected = idem.right_identity == "a" && !idem.left_identity &&
                                 !idem.two_sided_identity && idem.idempotents.size() == 1 &&
                                 idem.idempotents[0] == "a";
        nlohmann::ordered_json value = idem.to_json();
        value["idempotent_claim_inconsistent"] = true;  // a o a = a exists
        report.checks.push_back(
            finding("vi-beta-identities-and-idempotents", as_expected, CheckStatus::Pass,
                    std::move(value)));
    }

    // (vi)(gamma) Not nilpotent: powers of a never vanish.
    report.checks.push_back(finding("vi-gamma-not-nilpotent",
                                    !check_nilpotency(A, 6).has_value(), CheckStatus::Pass,
                                    "no k <= 6 with all k-fold products zero"));

    // (vii) Commutator variant of the mixed bracket breaks the identity.
    {
        const Element v = jacobi_commutator_variant();
        const Element expected = Scalar(-4) * Element::basis(A, 0);
        report.checks.push_back(finding("vii-commutator-variant", v == expected,
                                        CheckStatus::ExpectedFail, element_json(v)));
    }

    return report;
}

}  // namespace gja
