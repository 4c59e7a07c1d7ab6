#include <doctest.h>

#include "gja/word.hpp"

#include <algorithm>
#include <random>

using namespace gja;

namespace {

constexpr int a = 0, b = 1, c = 2, d = 3;

Word word(std::vector<int> letters, int coeff = 1) {
    return Word{builtin_A(), Scalar(coeff), std::move(letters)};
}

// Oracle for phase (b): adjacent transpositions, one sign per swap.
Word bubble_sort_signed(Word w) {
    bool swapped = true;
    while (swapped) {
        swapped = false;
        for (std::size_t i = 0; i + 1 < w.letters.size(); ++i)
            if (w.letters[i] < w.letters[i + 1]) {
                std::swap(w.letters[i], w.letters[i + 1]);
                w.coeff = -w.coeff;
                swapped = true;
            }
    }
    return w;
}

Word random_word(std::mt19937& rng, int min_len, int max_len, int min_letter = 0) {
    std::uniform_int_distribution<int> len(min_len, max_len);
    std::uniform_int_distribution<int> letter(min_letter, 3);
    Word w{builtin_A(), Scalar(1), {}};
    for (int k = len(rng); k-- > 0;) w.letters.push_back(letter(rng));
    return w;
}

}  // namespace

TEST_CASE("normal ordering goldens") {
    CHECK(normalize(word({c, b, c, b})) == word({c, c, b, b}, -1));
    CHECK(normalize(word({b, d, b, d})) == word({d, d, b, b}, -1));
    CHECK(normalize(word({d, c, b, a})) == word({d, c, b, a}));
    CHECK(normalize(word({a, b, d})) == word({d, b}, -1));
    CHECK(normalize(word({a, d, b})) == word({c, b}, -1));
    CHECK(normalize(word({a, a, a})) == word({a}));
    CHECK(normalize(word({b, a, a})) == word({b, a}));
    CHECK(normalize(word({a})) == word({a}));
}

TEST_CASE("normal form exponents") {
    // The embedded a absorbs its right neighbour d into -c; the sort then
    // contributes three more inversions, restoring the plus sign.
    const NormalForm nf = normal_form(word({b, d, c, a, d}));
    CHECK(nf.coeff == 1);
    CHECK(nf.s == 1);
    CHECK(nf.r == 2);
    CHECK(nf.q == 1);
    CHECK(nf.p == 0);
    CHECK(nf.to_word().letters == std::vector<int>{d, c, c, b});
    // Trailing a survives absorption.
    CHECK(normal_form(word({b, a})).p == 1);
}

TEST_CASE("total contraction goldens") {
    CHECK(contract(word({c, b, c, b})) == -Element::basis(builtin_A(), a));
    CHECK(contract(word({b, d, b, d})) == Element::basis(builtin_A(), a));
    CHECK(contract(word({d, b, a})) == -Element::basis(builtin_A(), c));
    CHECK(contract(word({a, b, d})) == Element::basis(builtin_A(), c));
    CHECK(contract(word({d, a, b})) == -Element::basis(builtin_A(), c));
    CHECK(contract(word({a, d, b})) == -Element::basis(builtin_A(), d));
    CHECK(contract(word({d})) == Element::basis(builtin_A(), d));
    CHECK(contract(word({c, b}, -3)) == Scalar(-3) * Element::basis(builtin_A(), d));
}

TEST_CASE("contraction trace reproduces the worked chain") {
    const ContractionTrace t = contract_traced(word({c, b, c, b}));
    REQUIRE(t.normalized == word({c, c, b, b}, -1));
    REQUIRE(t.steps.size() == 3);
    CHECK(t.steps[0].coeff == 1);
    CHECK(t.steps[0].letters == std::vector<int>{c, c, a});
    CHECK(t.steps[0].grade_sign == 1);
    CHECK(t.steps[1].coeff == -1);
    CHECK(t.steps[1].letters == std::vector<int>{c, c});
    CHECK(t.steps[1].grade_sign == -1);
    CHECK(t.result == -Element::basis(builtin_A(), a));
}

TEST_CASE("word errors") {
    CHECK_THROWS_AS(contract(word({})), EmptyWordError);
    CHECK_THROWS_AS(normalize(Word{builtin_H(), Scalar(1), {0, 1}}), NonAWordError);
    CHECK_THROWS_AS(contract(Word{builtin_H(), Scalar(1), {0, 1}}), NonAWordError);
}

TEST_CASE("normalize is idempotent") {
    std::mt19937 rng(1001);
    for (int n = 0; n < 1200; ++n) {
        const Word w = random_word(rng, 0, 9);
        const Word once = normalize(w);
        CHECK(normalize(once) == once);
    }
}

TEST_CASE("sort sign equals brute-force transposition parity") {
    std::mt19937 rng(1002);
    for (int n = 0; n < 1200; ++n) {
        const Word w = random_word(rng, 0, 9, 1);  // letters b, c, d: no absorption
        CHECK(normalize(w) == bubble_sort_signed(w));
    }
}

TEST_CASE("contraction is linear over superpositions") {
    std::mt19937 rng(1003);
    std::uniform_int_distribution<int> count(0, 3);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int n = 0; n < 1000; ++n) {
        Superposition s1{builtin_A(), {}}, s2{builtin_A(), {}}, both{builtin_A(), {}};
        const auto fill = [&](Superposition& s) {
            for (int k = count(rng); k-- > 0;) {
                Word w = random_word(rng, 1, 6);
                const int cf = coeff(rng);
                w.coeff = cf == 0 ? Scalar(1) : Scalar(cf);
                s.add(w);
                both.add(w);
            }
        };
        fill(s1);
        fill(s2);
        CHECK(contract_superposition(both) ==
              contract_superposition(s1) + contract_superposition(s2));
    }
}

TEST_CASE("length-2 contraction agrees with the table") {
    const AlgebraPtr A = builtin_A();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(contract(word({i, j})) == binary_product(Element::basis(A, i), Element::basis(A, j)));
}

TEST_CASE("word text parsing") {
    CHECK(parse_word("cbcb", builtin_A()) == word({c, b, c, b}));
    const Word scaled = parse_word("-3/2 cbcb", builtin_A());
    CHECK(scaled.coeff == Scalar(-3) / 2);
    CHECK(scaled.letters == std::vector<int>{c, b, c, b});
    CHECK(parse_word("c b c b", builtin_A()) == word({c, b, c, b}));
    CHECK_THROWS_AS(parse_word("cxc", builtin_A()), UnknownLetterError);
    CHECK_THROWS_AS(parse_word("  ", builtin_A()), EmptyWordError);
}
