#include "gja/word.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace gja {

namespace {

void require_builtin_A(const Word& w) {
    if (w.alg != builtin_A())
        throw NonAWordError("rules 0-2 are defined only over the built-in algebra A");
}

// Table entries of A are single signed terms.
const TableTerm& single_term(const AlgebraTable& alg, int i, int j) {
    return alg.entry(i, j).front();
}

}  // namespace

std::string Word::str() const {
    std::string out;
    if (coeff == -1) {
        out += "-";
    } else if (coeff != 1) {
        out += to_string(coeff) + " ";
    }
    if (letters.empty()) return out + "(empty)";
    for (int i : letters) out += alg->generator(i).name;
    return out;
}

Superposition& Superposition::add(const Word& w) {
    terms.push_back(w);
    return *this;
}

void Superposition::canonicalize() {
    std::map<std::vector<int>, Scalar> merged;
    for (const Word& w : terms) merged[w.letters] += w.coeff;
    std::vector<Word> out;
    for (auto& [letters, coeff] : merged)
        if (coeff != 0) out.push_back(Word{alg, coeff, letters});
    terms = std::move(out);
}

Word normalize(const Word& w) {
    require_builtin_A(w);
    Word r = w;
    if (r.coeff == 0) return Word{r.alg, Scalar(0), {}};

    // Phase (a): absorb every non-rightmost `a`, leftmost first, via the
    // row-a products. No grade sign attaches to these contractions.
    const int a = 0;
    for (std::size_t i = 0; i + 1 < r.letters.size();) {
        if (r.letters[i] == a) {
            const TableTerm& t = single_term(*r.alg, a, r.letters[i + 1]);
            r.coeff *= t.coeff;
            r.letters[i] = t.index;
            r.letters.erase(r.letters.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            if (i > 0) --i;  // the replacement may sit right of an earlier `a`
        } else {
            ++i;
        }
    }

    // Phase (b): signed stable sort into descending order d > c > b > a.
    // Equal letters contribute no inversions.
    long inversions = 0;
    for (std::size_t i = 0; i < r.letters.size(); ++i)
        for (std::size_t j = i + 1; j < r.letters.size(); ++j)
            if (r.letters[i] < r.letters[j]) ++inversions;
    if (inversions % 2 != 0) r.coeff = -r.coeff;
    std::stable_sort(r.letters.begin(), r.letters.end(), std::greater<int>());
    return r;
}

NormalForm normal_form(const Word& w) {
    Word n = normalize(w);
    NormalForm nf{n.coeff, 0, 0, 0, 0};
    for (int letter : n.letters) {
        switch (letter) {
            case 3: ++nf.s; break;
            case 2: ++nf.r; break;
            case 1: ++nf.q; break;
            default: ++nf.p; break;
        }
    }
    return nf;
}

Word NormalForm::to_word() const {
    Word w{builtin_A(), coeff, {}};
    w.letters.insert(w.letters.end(), static_cast<std::size_t>(s), 3);
    w.letters.insert(w.letters.end(), static_cast<std::size_t>(r), 2);
    w.letters.insert(w.letters.end(), static_cast<std::size_t>(q), 1);
    w.letters.insert(w.letters.end(), static_cast<std::size_t>(p), 0);
    return w;
}

ContractionTrace contract_traced(const Word& w) {
    require_builtin_A(w);
    Word cur = normalize(w);
    ContractionTrace trace{cur, {}, Element(w.alg)};
    if (cur.coeff == 0) return trace;
    if (cur.letters.empty())
        throw EmptyWordError("the empty word has no value: the algebra has no unit");

    const AlgebraTable& alg = *cur.alg;
    while (cur.letters.size() > 2) {
        const int p = cur.letters[cur.letters.size() - 2];
        const int q = cur.letters[cur.letters.size() - 1];
        const TableTerm& t = single_term(alg, p, q);
        const int mixed = (alg.generator(p).parity + alg.generator(q).parity) % 2;
        const int grade_sign = mixed ? -1 : 1;
        cur.coeff *= t.coeff * grade_sign;
        cur.letters.pop_back();
        cur.letters.back() = t.index;
        trace.steps.push_back({cur.coeff, cur.letters, grade_sign});
    }

    if (cur.letters.size() == 2) {
        // Final pair: plain table lookup, no grade factor.
        Element r(w.alg);
        for (const TableTerm& t : alg.entry(cur.letters[0], cur.letters[1]))
            r += Element::term(w.alg, t.index, cur.coeff * t.coeff);
        trace.steps.push_back({cur.coeff, {}, 1});
        trace.result = r;
    } else {
        trace.result = Element::term(w.alg, cur.letters[0], cur.coeff);
    }
    return trace;
}

Element contract(const Word& w) { return contract_traced(w).result; }

Element contract_superposition(const Superposition& s) {
    if (!s.alg) throw Error("superposition has no algebra");
    Superposition canon = s;
    canon.canonicalize();
    Element total(s.alg);
    for (const Word& w : canon.terms) total += contract(w);
    return total;
}

Word parse_word(const std::string& text, const AlgebraPtr& alg) {
    std::size_t i = 0;
    const auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    Word w{alg, Scalar(1), {}};
    skip_ws();
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        if (text[i] == '-') w.coeff = -w.coeff;
        ++i;
        skip_ws();
    }
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        std::size_t start = i;
        while (i < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
            ++i;
        w.coeff *= parse_rational(text.substr(start, i - start));
    }
    skip_ws();
    while (i < text.size()) {
        const std::size_t pos = i;
        const int idx = alg->generator_index(std::string_view(&text[i], 1));
        if (idx < 0) throw UnknownLetterError("unknown letter '" + text.substr(i, 1) + "'", pos);
        w.letters.push_back(idx);
        ++i;
        skip_ws();
    }
    if (w.letters.empty()) throw EmptyWordError("word text contains no letters: " + text);
    return w;
}

}  // namespace gja
