#include "gja/suites.hpp"

#include "gja/bracket.hpp"
#include "gja/parser.hpp"
#include "gja/rep.hpp"
#include "gja/verifier.hpp"
#include "gja/word.hpp"

#include <algorithm>
#include <future>
#include <random>

namespace gja {

using nlohmann::ordered_json;

AlgebraPtr antiassociative_fixture() {
    static const AlgebraPtr fixture = [] {
        std::vector<Generator> gens = {{"e1", 0, 0}, {"e2", 1, 0}};
        std::vector<std::vector<std::vector<TableTerm>>> table(2,
                                                               std::vector<std::vector<TableTerm>>(2));
        table[0][0] = {TableTerm{Scalar(1), 1}};  // e1 o e1 = e2
        return std::make_shared<AlgebraTable>("T2", std::move(gens), std::move(table));
    }();
    return fixture;
}

std::string table_entry_str(const AlgebraPtr& alg, int row, int col) {
    Element e(alg);
    for (const TableTerm& t : alg->entry(row, col)) e += Element::term(alg, t.index, t.coeff);
    return e.str();
}

std::string render_table(const AlgebraPtr& alg) {
    const int n = alg->dim();
    std::vector<std::vector<std::string>> cells(n + 1, std::vector<std::string>(n + 1));
    cells[0][0] = "o";
    for (int j = 0; j < n; ++j) cells[0][j + 1] = alg->generator(j).name;
    for (int i = 0; i < n; ++i) {
        cells[i + 1][0] = alg->generator(i).name;
        for (int j = 0; j < n; ++j) cells[i + 1][j + 1] = table_entry_str(alg, i, j);
    }
    std::vector<std::size_t> width(n + 1, 0);
    for (const auto& row : cells)
        for (int j = 0; j <= n; ++j) width[j] = std::max(width[j], row[j].size());
    std::string out;
    for (std::size_t r = 0; r < cells.size(); ++r) {
        for (int j = 0; j <= n; ++j) {
            std::string cell = cells[r][j];
            cell.resize(width[j], ' ');
            out += cell;
            out += j == 0 ? " | " : (j < n ? "  " : "");
        }
        out += "\n";
        if (r == 0) {
            out += std::string(width[0], '-') + "-+-";
            std::size_t rest = 0;
            for (int j = 1; j <= n; ++j) rest += width[j] + (j < n ? 2 : 0);
            out += std::string(rest, '-') + "\n";
        }
    }
    return out;
}

namespace {

Element basis(const AlgebraPtr& alg, int i) { return Element::basis(alg, i); }

Check expect(std::string id, bool as_expected, CheckStatus status_when_ok,
             ordered_json value = {}, ordered_json witnesses = ordered_json::array()) {
    Check c;
    c.id = std::move(id);
    c.status = as_expected ? status_when_ok : CheckStatus::Fail;
    c.ok = as_expected;
    c.value = std::move(value);
    c.witnesses = sorted_witnesses(std::move(witnesses));
    return c;
}

Scalar random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    return Scalar(num(rng)) / den(rng);
}

Word random_word(std::mt19937& rng, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> letter(0, 3);
    Word w{builtin_A(), Scalar(1), {}};
    const int l = len(rng);
    for (int i = 0; i < l; ++i) w.letters.push_back(letter(rng));
    Scalar c = random_scalar(rng);
    w.coeff = c == 0 ? Scalar(1) : c;
    return w;
}

// ----------------------------------------------------------------- table

Report suite_table() {
    const AlgebraPtr A = builtin_A();
    const AlgebraPtr H = builtin_H();
    Report report{"table", "A", {}};

    // Golden copies of both tables, entered independently of the builtins.
    static const int a_sign[4][4] = {{1, 1, -1, -1}, {1, -1, -1, 1}, {1, 1, 1, -1}, {1, -1, 1, -1}};
    static const int a_idx[4][4] = {{0, 1, 3, 2}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int h_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    static const int h_idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};

    const auto check_table = [&](const char* id, const AlgebraPtr& alg, const int sign[4][4],
                                 const int idx[4][4]) {
        ordered_json witnesses = ordered_json::array();
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                const auto& entry = alg->entry(i, j);
                if (entry.size() != 1 || entry[0].index != idx[i][j] ||
                    entry[0].coeff != sign[i][j])
                    witnesses.push_back({{"cell", {i, j}}, {"got", table_entry_str(alg, i, j)}});
            }
        report.checks.push_back(
            expect(id, witnesses.empty(), CheckStatus::Pass, "16 entries", witnesses));
    };
    check_table("A-table-entries", A, a_sign, a_idx);
    check_table("H-table-entries", H, h_sign, h_idx);

    {
        bool right = true;
        for (int i = 0; i < 4; ++i)
            if (binary_product(basis(A, i), basis(A, 0)) != basis(A, i)) right = false;
        const bool not_left = binary_product(basis(A, 0), basis(A, 2)) != basis(A, 2);
        report.checks.push_back(expect("A-right-identity-only", right && not_left,
                                       CheckStatus::Pass, "x o a = x for all x; a o c = -d"));
    }
    {
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i)
            for (int j = 0; j < 4 && ok; ++j) {
                const Element p = binary_product(basis(A, i), basis(A, j));
                const int want = (A->generator(i).parity + A->generator(j).parity) % 2;
                const Parity got = p.parity();
                ok = got == (want == 0 ? Parity::Even : Parity::Odd);
            }
        report.checks.push_back(
            expect("A-parity-additivity", ok, CheckStatus::Pass, "pi(xy) = pi(x)+pi(y) mod 2"));
    }
    {
        const Element a = basis(A, 0);
        const bool ok = binary_product(basis(A, 0), basis(A, 0)) == a &&
                        binary_product(basis(A, 2), basis(A, 2)) == a &&
                        binary_product(basis(A, 1), basis(A, 1)) == -a &&
                        binary_product(basis(A, 3), basis(A, 3)) == -a;
        report.checks.push_back(expect("A-square-roots", ok, CheckStatus::Pass,
                                       "a,c are sqrt(a); b,d are sqrt(-a)"));
    }
    {
        bool ok = binary_product(basis(A, 0), basis(A, 1)) == binary_product(basis(A, 1), basis(A, 0));
        for (int x : {1, 2, 3})
            for (int y : {1, 2, 3})
                if (x != y &&
                    binary_product(basis(A, x), basis(A, y)) !=
                        -binary_product(basis(A, y), basis(A, x)))
                    ok = false;
        report.checks.push_back(expect("A-anticommutation", ok, CheckStatus::Pass,
                                       "b,c,d mutually anticommute; a commutes with b"));
    }
    {
        const Element n1 = basis(A, 1) + basis(A, 2);  // b + c
        const Element n2 = basis(A, 2) + basis(A, 3);  // c + d
        const bool ok = binary_product(n1, n1).is_zero() && binary_product(n2, n2).is_zero() &&
                        n1.parity() == Parity::Inhomogeneous && n2.parity() == Parity::Odd;
        report.checks.push_back(
            expect("A-nilpotents", ok, CheckStatus::Pass, "(b+c)^2 = 0 and (c+d)^2 = 0"));
    }
    report.checks.push_back(expect("A-even-subalgebra-iso-C",
                                   check_even_subalgebra_iso_C(A).all_passed(), CheckStatus::Pass,
                                   "a -> 1, b -> i preserves all four products"));
    report.checks.push_back(expect("A-table-orientation", table_entry_str(A, 1, 2) == "-d",
                                   CheckStatus::Pass, "row b, column c prints -d"));
    return report;
}

// ----------------------------------------------------------------- words

// Oracle: sort by adjacent transpositions, one sign flip per swap.
Word brute_force_sort(Word w) {
    bool swapped = true;
    while (swapped) {
        swapped = false;
        for (std::size_t i = 0; i + 1 < w.letters.size(); ++i) {
            if (w.letters[i] < w.letters[i + 1]) {
                std::swap(w.letters[i], w.letters[i + 1]);
                w.coeff = -w.coeff;
                swapped = true;
            }
        }
    }
    return w;
}

// Phase (a) with the rightmost eligible `a` absorbed first instead of the
// leftmost; used only to probe order sensitivity empirically.
Word absorb_rightmost_first(Word w) {
    while (true) {
        int pos = -1;
        for (std::size_t i = 0; i + 1 < w.letters.size(); ++i)
            if (w.letters[i] == 0) pos = static_cast<int>(i);
        if (pos < 0) break;
        const TableTerm& t = w.alg->entry(0, w.letters[pos + 1]).front();
        w.coeff *= t.coeff;
        w.letters[pos] = t.index;
        w.letters.erase(w.letters.begin() + pos + 1);
    }
    return w;
}

Report suite_words() {
    const AlgebraPtr A = builtin_A();
    Report report{"words", "A", {}};
    std::mt19937 rng(20260826);

    const auto word = [&](std::vector<int> letters, int coeff = 1) {
        return Word{A, Scalar(coeff), std::move(letters)};
    };
    constexpr int a = 0, b = 1, c = 2, d = 3;

    {
        const ContractionTrace trace = contract_traced(word({c, b, c, b}));
        const bool chain_ok = trace.normalized == word({c, c, b, b}, -1) &&
                              trace.steps.size() == 3 &&
                              trace.steps[0].coeff == 1 &&
                              trace.steps[0].letters == std::vector<int>{c, c, a} &&
                              trace.steps[1].coeff == -1 &&
                              trace.steps[1].letters == std::vector<int>{c, c} &&
                              trace.result == -basis(A, a);
        report.checks.push_back(expect("worked-chain", chain_ok, CheckStatus::Pass,
                                       "cbcb -> -ccbb -> +cca -> -cc -> -a"));
    }
    report.checks.push_back(expect("bdbd-contracts-to-a",
                                   contract(word({b, d, b, d})) == basis(A, a), CheckStatus::Pass,
                                   element_json(contract(word({b, d, b, d})))));
    {
        const bool ok = normalize(word({c, b, c, b})) == word({c, c, b, b}, -1) &&
                        normalize(word({b, d, b, d})) == word({d, d, b, b}, -1) &&
                        normalize(word({d, c, b, a})) == word({d, c, b, a}) &&
                        normalize(word({a, b, d})) == word({d, b}, -1) &&
                        normalize(word({a, d, b})) == word({c, b}, -1);
        report.checks.push_back(expect("normalize-goldens", ok, CheckStatus::Pass));
    }
    {
        const bool ok = contract(word({d, b, a})) == -basis(A, c) &&
                        contract(word({a, b, d})) == basis(A, c) &&
                        contract(word({d, a, b})) == -basis(A, c) &&
                        contract(word({d})) == basis(A, d);
        report.checks.push_back(expect("contract-goldens", ok, CheckStatus::Pass));
    }
    {
        bool ok = true;
        for (int i = 0; i < 1000 && ok; ++i) {
            const Word w = random_word(rng, 8);
            const Word once = normalize(w);
            ok = normalize(once) == once;
        }
        report.checks.push_back(
            expect("normalize-idempotent", ok, CheckStatus::Pass, "1000 random words"));
    }
    {
        bool ok = true;
        for (int i = 0; i < 1000 && ok; ++i) {
            Superposition s1{A, {}}, s2{A, {}}, both{A, {}};
            std::uniform_int_distribution<int> n(0, 3);
            for (int k = n(rng); k-- > 0;) {
                Word w = random_word(rng, 5);
                if (w.length() == 0) continue;
                s1.add(w);
                both.add(w);
            }
            for (int k = n(rng); k-- > 0;) {
                Word w = random_word(rng, 5);
                if (w.length() == 0) continue;
                s2.add(w);
                both.add(w);
            }
            ok = contract_superposition(both) ==
                 contract_superposition(s1) + contract_superposition(s2);
        }
        report.checks.push_back(
            expect("contraction-linearity", ok, CheckStatus::Pass, "1000 random superpositions"));
    }
    {
        bool ok = true;
        std::uniform_int_distribution<int> len(0, 8);
        std::uniform_int_distribution<int> letter(1, 3);  // b, c, d only
        for (int i = 0; i < 1000 && ok; ++i) {
            Word w{A, Scalar(1), {}};
            for (int k = len(rng); k-- > 0;) w.letters.push_back(letter(rng));
            ok = normalize(w) == brute_force_sort(w);
        }
        report.checks.push_back(expect("sort-sign-vs-brute-force", ok, CheckStatus::Pass,
                                       "1000 random words over {b,c,d}"));
    }
    {
        bool ok = true;
        ordered_json witnesses = ordered_json::array();
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                Element table(A);
                for (const TableTerm& t : A->entry(i, j)) table += Element::term(A, t.index, t.coeff);
                if (contract(word({i, j})) != table) {
                    ok = false;
                    witnesses.push_back({{"word", {i, j}}});
                }
            }
        report.checks.push_back(
            expect("length2-table-agreement", ok, CheckStatus::Pass, "all 16 pairs", witnesses));
    }
    {
        // Rule 2 instrumentation: every recorded step's sign factor must be
        // reproducible from the parities of the contracted pair.
        bool ok = true;
        for (int i = 0; i < 1000 && ok; ++i) {
            const Word w = random_word(rng, 8);
            if (normalize(w).length() < 1) continue;
            const ContractionTrace trace = contract_traced(w);
            std::vector<int> letters = trace.normalized.letters;
            Scalar coeff = trace.normalized.coeff;
            for (std::size_t s = 0; s + 1 < trace.steps.size(); ++s) {
                const int p = letters[letters.size() - 2];
                const int q = letters[letters.size() - 1];
                const int mixed = (A->generator(p).parity + A->generator(q).parity) % 2;
                const TableTerm& t = A->entry(p, q).front();
                coeff *= t.coeff * (mixed ? -1 : 1);
                letters.pop_back();
                letters.back() = t.index;
                if (trace.steps[s].grade_sign != (mixed ? -1 : 1) ||
                    trace.steps[s].coeff != coeff || trace.steps[s].letters != letters) {
                    ok = false;
                    break;
                }
            }
        }
        report.checks.push_back(expect("rule2-sign-instrumentation", ok, CheckStatus::Pass,
                                       "mixed-parity steps carry -1, homogeneous +1"));
    }
    {
        // Order sensitivity of a-absorption, probed empirically and
        // reported; confluence is not asserted.
        int agree = 0, total = 0;
        for (int i = 0; i < 1000; ++i) {
            const Word w = random_word(rng, 8);
            ++total;
            if (normalize(w) == normalize(absorb_rightmost_first(w))) ++agree;
        }
        ordered_json value;
        value["agreeing"] = agree;
        value["total"] = total;
        report.checks.push_back(
            expect("rule0-order-sensitivity-observed", true, CheckStatus::Pass, value));
    }
    return report;
}

// --------------------------------------------------------------- brackets

Report suite_brackets() {
    const AlgebraPtr A = builtin_A();
    Report report{"brackets", "A", {}};
    std::mt19937 rng(7341);
    constexpr int a = 0, b = 1, c = 2, d = 3;

    {
        const bool ok = bracket(basis(A, d), basis(A, a)) == basis(A, d) - basis(A, c) &&
                        bracket(basis(A, b), basis(A, d)).is_zero() &&
                        bracket(basis(A, d), basis(A, d)) == Scalar(-2) * basis(A, a) &&
                        bracket(basis(A, a), basis(A, a)).is_zero();
        report.checks.push_back(expect("bracket-goldens", ok, CheckStatus::Pass,
                                       "<d,a> = d - c, <b,d> = 0, <d,d> = -2a"));
    }
    {
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i)
            for (int j = 0; j < 4 && ok; ++j) {
                const Element xy = bracket(basis(A, i), basis(A, j));
                const Element yx = bracket(basis(A, j), basis(A, i));
                const int pi = A->generator(i).parity, pj = A->generator(j).parity;
                const int delta = pi == pj ? 1 : -1;
                const int grade = (pi * pj) % 2 == 1 ? -1 : 1;
                ok = xy == Scalar(-delta * grade) * yx;
            }
        report.checks.push_back(expect("graded-antisymmetry-16-pairs", ok, CheckStatus::Pass,
                                       "commutators antisymmetric, anticommutators symmetric"));
    }
    report.checks.push_back(expect("parity-closure-A", bracket_parity_check(A).all_ok(),
                                   CheckStatus::Pass, "all 16 pairs"));
    report.checks.push_back(expect("parity-closure-H", bracket_parity_check(builtin_H()).all_ok(),
                                   CheckStatus::Pass, "trivial grading"));
    {
        bool ok = true;
        for (int n = 0; n < 1000 && ok; ++n) {
            // Homogeneous combinations: both terms even or both odd.
            const bool odd = n % 2 == 1;
            const int g1 = odd ? 2 : 0, g2 = odd ? 3 : 1;
            const Scalar alpha = random_scalar(rng), beta = random_scalar(rng);
            const Element x = alpha * basis(A, g1) + beta * basis(A, g2);
            const Element y = basis(A, n % 4);
            ok = bracket(x, y) ==
                 alpha * bracket(basis(A, g1), y) + beta * bracket(basis(A, g2), y) &&
                 bracket(y, x) ==
                     alpha * bracket(y, basis(A, g1)) + beta * bracket(y, basis(A, g2));
        }
        report.checks.push_back(expect("bracket-bilinearity", ok, CheckStatus::Pass,
                                       "1000 random homogeneous combinations"));
    }
    {
        bool threw = false;
        try {
            bracket(basis(A, b) + basis(A, c), basis(A, d));
        } catch (const InhomogeneousOperandError&) {
            threw = true;
        }
        report.checks.push_back(expect("inhomogeneous-operand-rejected", threw, CheckStatus::Pass,
                                       "superselection rule enforced"));
    }
    return report;
}

// ----------------------------------------------------------------- jacobi

Report suite_jacobi() {
    const AlgebraPtr A = builtin_A();
    Report report{"jacobi", "A", {}};
    constexpr int a = 0, b = 1, c = 2, d = 3;

    {
        bool ok = true;
        for (const JacobiInstance& inst : jacobi_instances())
            for (const JacobiTerm& t : inst.terms) {
                const Parity pu = A->generator(t.u).parity == 0 ? Parity::Even : Parity::Odd;
                const Parity pv = A->generator(t.v).parity == 0 ? Parity::Even : Parity::Odd;
                const Parity pw = A->generator(t.w).parity == 0 ? Parity::Even : Parity::Odd;
                const int inner_parity =
                    (A->generator(t.u).parity + A->generator(t.v).parity) % 2;
                const Parity pi = inner_parity == 0 ? Parity::Even : Parity::Odd;
                if (bracket_kind_for(pu, pv) != t.inner || bracket_kind_for(pi, pw) != t.outer)
                    ok = false;
            }
        report.checks.push_back(expect("printed-kinds-match-parity-dispatch", ok,
                                       CheckStatus::Pass, "all 24 bracket positions"));
    }
    {
        ordered_json witnesses = ordered_json::array();
        for (const JacobiInstance& inst : jacobi_instances()) {
            const Element v = jacobi_fito(inst);
            if (!v.is_zero())
                witnesses.push_back({{"identity", inst.name}, {"value", element_json(v)}});
        }
        report.checks.push_back(expect("fito-all-eight-zero", witnesses.empty(), CheckStatus::Pass,
                                       "8 identities", witnesses));
    }
    {
        bool ok = true;
        for (const JacobiInstance& inst : jacobi_instances())
            for (const JacobiTerm& t : inst.terms) {
                const Element inner = bracket_forced(basis(A, t.u), basis(A, t.v), t.inner);
                if (inner.parity() == Parity::Inhomogeneous) ok = false;
            }
        report.checks.push_back(expect("fito-inner-results-homogeneous", ok, CheckStatus::Pass));
    }
    {
        const JacobiInstance& line3 = jacobi_instances()[6];
        Superposition expansion = jacobi_foti_expansion(line3);
        expansion.canonicalize();
        Superposition expected{A, {}};
        for (const std::vector<int>& letters :
             {std::vector<int>{a, b, d}, {a, d, b}, {b, d, a}, {d, a, b}})
            expected.add(Word{A, Scalar(2), letters});
        expected.canonicalize();
        report.checks.push_back(expect("foti-line3-expansion",
                                       expansion.terms == expected.terms, CheckStatus::Pass,
                                       "2(abd + adb + bda + dab)"));

        const Element value = jacobi_foti(line3);
        Element frozen = Scalar(2) * basis(A, c) - Scalar(2) * basis(A, d);
        ordered_json v;
        v["identity"] = line3.name;
        v["engine_value"] = element_json(value);
        v["note"] =
            "nonzero as required; differs from the printed total 2c via the dab term, "
            "whose stepwise value is -c";
        report.checks.push_back(
            expect("foti-line3-nonzero", !value.is_zero() && value == frozen,
                   CheckStatus::ExpectedFail, v));
    }
    {
        // The identity-by-identity foti values, frozen as the regression
        // baseline for the negative half of the fito/foti split.
        ordered_json values = ordered_json::array();
        bool any_nonzero = false;
        for (const JacobiInstance& inst : jacobi_instances()) {
            const Element v = jacobi_foti(inst);
            values.push_back({{"identity", inst.name}, {"value", element_json(v)}});
            if (!v.is_zero()) any_nonzero = true;
        }
        report.checks.push_back(
            expect("foti-values-baseline", any_nonzero, CheckStatus::ExpectedFail, values));
    }
    {
        const Element v = jacobi_commutator_variant();
        report.checks.push_back(expect("commutator-variant",
                                       v == Scalar(-4) * basis(A, a), CheckStatus::ExpectedFail,
                                       element_json(v)));
    }
    return report;
}

// ----------------------------------------------------------------- axioms

Report suite_axioms(const AlgebraPtr& alg) {
    Report report{"axioms", alg->name(), {}};
    const bool is_A = alg == builtin_A();
    const bool is_H = alg == builtin_H();

    const Classification cls = classify_assoc(alg);
    report.checks.push_back(expect("classification", true, CheckStatus::Pass, to_string(cls.cls)));

    const auto assoc_check = [&](const char* id, const AxiomReport& r, bool expect_pass) {
        ordered_json witnesses = ordered_json::array();
        if (!r.checks[0].witnesses.empty()) witnesses.push_back(r.checks[0].witnesses[0]);
        if (expect_pass)
            report.checks.push_back(expect(id, r.all_passed(), CheckStatus::Pass));
        else
            report.checks.push_back(
                expect(id, !r.all_passed(), CheckStatus::ExpectedFail, {}, witnesses));
    };
    if (is_A) {
        assoc_check("delta-assoc-plus", cls.plus, false);
        assoc_check("delta-assoc-minus", cls.minus, false);
    } else if (is_H) {
        assoc_check("delta-assoc-plus", cls.plus, true);
        assoc_check("delta-assoc-minus", cls.minus, false);
    } else {
        report.checks.push_back(expect("delta-assoc-plus", true, CheckStatus::Pass,
                                       cls.plus.all_passed() ? "holds" : "fails"));
        report.checks.push_back(expect("delta-assoc-minus", true, CheckStatus::Pass,
                                       cls.minus.all_passed() ? "holds" : "fails"));
    }

    for (int delta : {1, -1}) {
        const AxiomReport r = check_graded_bracket_axioms(alg, Delta(delta));
        const std::string id =
            std::string("graded-bracket-axioms(") + (delta > 0 ? "+1" : "-1") + ")";
        ordered_json value = ordered_json::array();
        for (const AxiomCheck& c : r.checks)
            value.push_back({{"axiom", c.axiom},
                             {"passed", c.passed},
                             {"violations", c.witnesses.size()}});
        if (is_H && delta == 1) {
            report.checks.push_back(expect(id, r.all_passed(), CheckStatus::Pass, value));
        } else if (is_A && delta == 1) {
            // The deformed table is not a delta-J-L algebra in the abstract
            // sense: the externally graded Jacobi forms must fail.
            report.checks.push_back(
                expect(id, !r.all_passed(), CheckStatus::ExpectedFail, value));
        } else {
            report.checks.push_back(expect(id, true, CheckStatus::Pass, value));
        }
    }

    {
        const AxiomReport r = check_length4_vanish(alg);
        if (cls.cls == AssocClass::Antiassociative || cls.cls == AssocClass::Both) {
            // Lemma consequence: antiassociative implies all length-4
            // products vanish.
            report.checks.push_back(expect("length4-vanish", r.all_passed(), CheckStatus::Pass,
                                           "all 4-tuples x 5 bracketings"));
        } else if (is_A) {
            ordered_json witnesses = ordered_json::array();
            if (!r.checks[0].witnesses.empty()) witnesses.push_back(r.checks[0].witnesses[0]);
            report.checks.push_back(expect("length4-vanish", !r.all_passed(),
                                           CheckStatus::ExpectedFail, {}, witnesses));
        } else {
            report.checks.push_back(expect("length4-vanish", true, CheckStatus::Pass,
                                           r.all_passed() ? "holds" : "fails"));
        }
    }
    {
        const std::optional<int> k = check_nilpotency(alg, 6);
        ordered_json value = k ? ordered_json(*k) : ordered_json("none <= 6");
        if (is_A)
            report.checks.push_back(expect("nilpotency", !k.has_value(), CheckStatus::Pass, value));
        else
            report.checks.push_back(expect("nilpotency", true, CheckStatus::Pass, value));
    }
    report.checks.push_back(expect("idempotents-and-units", true, CheckStatus::Pass,
                                   check_idempotents_and_units(alg).to_json()));
    return report;
}

// ------------------------------------------------------------- quaternion

Report suite_quaternion() {
    const AlgebraPtr A = builtin_A();
    const AlgebraPtr H = builtin_H();
    const AlgebraPtr T2 = antiassociative_fixture();
    Report report{"quaternion", "A", {}};
    std::mt19937 rng(90210);

    {
        const LRReport lr = check_LR_commutation(H);
        report.checks.push_back(expect("H-LR-commute", lr.all_commute, CheckStatus::Pass,
                                       "[L(x),R(y)] = 0 on all 16 pairs"));
    }
    {
        const LRReport lr = check_LR_commutation(T2);
        report.checks.push_back(expect("T2-LR-anticommute", lr.all_anticommute,
                                       CheckStatus::Pass, "{L(x),R(y)} = 0 on all pairs"));
    }
    {
        const LRReport lr = check_LR_commutation(A);
        ordered_json witnesses = ordered_json::array();
        for (const AxiomCheck& c : lr.details.checks)
            if (!c.witnesses.empty()) witnesses.push_back(c.witnesses[0]);
        report.checks.push_back(expect("A-LR-neither", !lr.all_commute && !lr.all_anticommute,
                                       CheckStatus::ExpectedFail, {}, witnesses));
    }
    report.checks.push_back(expect("H-left-homomorphism",
                                   check_left_homomorphism(H).all_passed(), CheckStatus::Pass,
                                   "L(xy) = L(x)L(y) on all pairs"));
    report.checks.push_back(expect("H-right-antihomomorphism",
                                   check_right_antihomomorphism(H).all_passed(),
                                   CheckStatus::Pass, "derived finding: R reverses products"));
    {
        const AxiomReport r = check_left_homomorphism(A);
        ordered_json witnesses = ordered_json::array();
        if (!r.checks[0].witnesses.empty()) witnesses.push_back(r.checks[0].witnesses[0]);
        report.checks.push_back(expect("A-left-homomorphism-fails", !r.all_passed(),
                                       CheckStatus::ExpectedFail, {}, witnesses));
    }
    {
        const SignatureProfile sh = signature(H);
        const SignatureProfile sa = signature(A);
        report.checks.push_back(expect("signature-H",
                                       sh.signs == std::vector<int>{1, -1, -1, -1} &&
                                           sh.trace == -2,
                                       CheckStatus::Pass, sh.str() + " trace -2"));
        report.checks.push_back(expect("signature-A",
                                       sa.signs == std::vector<int>{1, -1, 1, -1} && sa.trace == 0,
                                       CheckStatus::Pass, sa.str() + " trace 0"));
    }
    report.checks.push_back(expect("A-even-subalgebra-iso-C",
                                   check_even_subalgebra_iso_C(A).all_passed(), CheckStatus::Pass));
    {
        // Frozen deformation cells under a<->1, b<->i, c<->j, d<->k.
        static const std::vector<std::pair<int, int>> expected_cells = {
            {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}};
        const std::vector<CellDiff> diffs = quaternion_table_diff();
        bool ok = diffs.size() == expected_cells.size();
        ordered_json value = ordered_json::array();
        for (std::size_t k = 0; k < diffs.size(); ++k) {
            value.push_back({{"cell", {diffs[k].row, diffs[k].col}},
                             {"A", diffs[k].a_entry},
                             {"H", diffs[k].h_entry}});
            if (ok && std::pair(diffs[k].row, diffs[k].col) != expected_cells[k]) ok = false;
        }
        report.checks.push_back(expect("deformation-cells", ok, CheckStatus::Pass, value));
    }
    {
        bool ok = true;
        for (const AlgebraPtr& alg : {A, H})
            for (int i = 0; i < 4 && ok; ++i)
                for (int j = 0; j < 4 && ok; ++j) {
                    const Element x = basis(alg, i), y = basis(alg, j);
                    ok = apply(left_matrix(x), y) == binary_product(x, y) &&
                         apply(right_matrix(x), y) == binary_product(y, x);
                }
        report.checks.push_back(expect("LR-definitional", ok, CheckStatus::Pass,
                                       "L(x)[y] = [x o y], R(x)[y] = [y o x]"));
    }
    {
        bool ok = true;
        for (int n = 0; n < 200 && ok; ++n) {
            const Scalar alpha = random_scalar(rng), beta = random_scalar(rng);
            std::uniform_int_distribution<int> pick(0, 3);
            const Element x = basis(A, pick(rng)), y = basis(A, pick(rng));
            const Element combo = alpha * x + beta * y;
            Matrix expected(4);
            {
                const Matrix lx = left_matrix(x), ly = left_matrix(y);
                for (int r = 0; r < 4; ++r)
                    for (int cc = 0; cc < 4; ++cc)
                        expected.at(r, cc) = alpha * lx.at(r, cc) + beta * ly.at(r, cc);
            }
            ok = left_matrix(combo) == expected;
            Matrix expected_r(4);
            {
                const Matrix rx = right_matrix(x), ry = right_matrix(y);
                for (int r = 0; r < 4; ++r)
                    for (int cc = 0; cc < 4; ++cc)
                        expected_r.at(r, cc) = alpha * rx.at(r, cc) + beta * ry.at(r, cc);
            }
            ok = ok && right_matrix(combo) == expected_r;
        }
        report.checks.push_back(
            expect("LR-linearity", ok, CheckStatus::Pass, "200 random combinations"));
    }
    return report;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"table",  "words",  "brackets", "jacobi",
                                                   "axioms", "quaternion", "compare"};
    return names;
}

Report run_suite(const std::string& suite, const AlgebraPtr& alg) {
    if (suite == "table") return suite_table();
    if (suite == "words") return suite_words();
    if (suite == "brackets") return suite_brackets();
    if (suite == "jacobi") return suite_jacobi();
    if (suite == "axioms") return suite_axioms(alg);
    if (suite == "quaternion") return suite_quaternion();
    if (suite == "compare") return compare_structures();
    throw Error("unknown suite: " + suite);
}

Report run_all_suites(const AlgebraPtr& alg, bool parallel) {
    std::vector<Report> reports(suite_names().size());
    if (parallel) {
        std::vector<std::future<Report>> futures;
        for (const std::string& name : suite_names())
            futures.push_back(std::async(std::launch::async,
                                         [&alg, name] { return run_suite(name, alg); }));
        for (std::size_t i = 0; i < futures.size(); ++i) reports[i] = futures[i].get();
    } else {
        for (std::size_t i = 0; i < suite_names().size(); ++i)
            reports[i] = run_suite(suite_names()[i], alg);
    }
    Report merged{"all", alg->name(), {}};
    for (const Report& r : reports)
        for (const Check& c : r.checks) {
            Check copy = c;
            copy.id = r.suite + "." + c.id;
            merged.checks.push_back(std::move(copy));
        }
    return merged;
}

}  // namespace gja
