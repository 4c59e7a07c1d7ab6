#include <doctest.h>

#include "gja/parser.hpp"
#include "gja/word.hpp"

#include <random>

using namespace gja;

namespace {

Element run(const std::string& text, const AlgebraPtr& alg = builtin_A()) {
    return eval(*parse(text, alg), alg).value;
}

Element gen(int i) { return Element::basis(builtin_A(), i); }

}  // namespace

TEST_CASE("expression goldens") {
    CHECK(run("cbcb") == -gen(0));
    CHECK(run("(a*b)*c") == -gen(3));
    CHECK(run("a*(b*c)") == gen(2));
    CHECK(run("<d,a>") == gen(3) - gen(2));
    CHECK(run("{b,d}").is_zero());
    CHECK(run("b*c") == -gen(3));
    CHECK(run("bdbd") == gen(0));
}

TEST_CASE("sums, signs and rational scaling") {
    CHECK(run("b + c - d") == gen(1) + gen(2) - gen(3));
    CHECK(run("-a") == -gen(0));
    CHECK(run("3/2 a") == Scalar(3) / 2 * gen(0));
    CHECK(run("2 (b*c)") == Scalar(-2) * gen(3));
    CHECK(run("a - a").is_zero());
    CHECK(run("-(c*d)") == gen(1));
}

TEST_CASE("ring operator is an alias for the star") {
    CHECK(run("b∘c") == run("b*c"));
    CHECK(run("(a∘b)∘c") == run("(a*b)*c"));
}

TEST_CASE("brackets dispatch and force") {
    // <.,.> dispatches by parity; [.,.] and {.,.} are explicit.
    CHECK(run("[a,b]").is_zero());
    CHECK(run("{c,d}").is_zero());
    CHECK(run("[d,a]") == gen(3) + gen(2));
    const EvalResult forced = eval(*parse("[d,a]", builtin_A()), builtin_A());
    CHECK_FALSE(forced.warnings.empty());
    const EvalResult dispatched = eval(*parse("<d,a>", builtin_A()), builtin_A());
    CHECK(dispatched.warnings.empty());
    // Nesting.
    CHECK(run("{[a,b],d}").is_zero());
    CHECK(run("<a,<b,d>>").is_zero());
}

TEST_CASE("quaternion generator named 1 is not a scalar") {
    const AlgebraPtr H = builtin_H();
    CHECK(run("1*i", H) == Element::basis(H, 1));
    CHECK(run("2 i", H) == Scalar(2) * Element::basis(H, 1));
    CHECK(run("1/2 i", H) == Scalar(1) / 2 * Element::basis(H, 1));
}

TEST_CASE("unparenthesized chains are rejected") {
    CHECK_THROWS_AS(parse("a*b*c", builtin_A()), UnparenthesizedProductChainError);
    CHECK_THROWS_AS(parse("a*(b*c)*d", builtin_A()), UnparenthesizedProductChainError);
    CHECK_NOTHROW(parse("(a*b)*(c*d)", builtin_A()));
}

TEST_CASE("error positions point inside the offending token") {
    try {
        parse("b + zz", builtin_A());
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.pos == 4);
    }
    try {
        parse("a*b*c", builtin_A());
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.pos == 3);
    }
    CHECK_THROWS_AS(parse("", builtin_A()), ParseError);
    CHECK_THROWS_AS(parse("(a", builtin_A()), ParseError);
    CHECK_THROWS_AS(parse("<a,", builtin_A()), ParseError);
    CHECK_THROWS_AS(parse("[a,b}", builtin_A()), ParseError);
}

TEST_CASE("print round-trip is stable") {
    const std::vector<std::string> samples = {
        "cbcb", "(a*b)*c",   "a*(b*c)", "<d,a>",      "{b,d}",       "[a,b]",
        "-a",   "3/2 a + b", "b+c-d",   "{[a,b],d}",  "2 (b*c)",     "-(c*d)",
        "dcba", "<a,<b,d>>", "1/2 c",   "(a*b)*(c*d)"};
    for (const std::string& s : samples) {
        const ExprPtr first = parse(s, builtin_A());
        const std::string printed = print(*first, builtin_A());
        const ExprPtr second = parse(printed, builtin_A());
        CHECK(print(*second, builtin_A()) == printed);
        CHECK(eval(*second, builtin_A()).value == eval(*first, builtin_A()).value);
    }
}

TEST_CASE("fuzzed corruptions fail with in-range positions") {
    std::mt19937 rng(77);
    const std::string base = "(a*b)*c + <d,a> - 3/2 cbcb";
    const std::string junk = "?!@#$%^&";
    std::uniform_int_distribution<std::size_t> at(0, base.size() - 1);
    std::uniform_int_distribution<std::size_t> which(0, junk.size() - 1);
    int failures = 0;
    for (int n = 0; n < 300; ++n) {
        std::string corrupted = base;
        corrupted[at(rng)] = junk[which(rng)];
        try {
            eval(*parse(corrupted, builtin_A()), builtin_A());
        } catch (const ParseError& e) {
            ++failures;
            CHECK(e.pos <= corrupted.size());
        } catch (const Error&) {
            ++failures;  // engine-level rejection is acceptable
        }
    }
    CHECK(failures > 0);
}
