#include <doctest.h>

#include "gja/algebra.hpp"
#include "gja/suites.hpp"

#include <random>

using namespace gja;

namespace {
Element gen(const AlgebraPtr& alg, int i) { return Element::basis(alg, i); }
}

TEST_CASE("deformed table golden entries") {
    const AlgebraPtr A = builtin_A();
    // row a
    CHECK(table_entry_str(A, 0, 0) == "a");
    CHECK(table_entry_str(A, 0, 1) == "b");
    CHECK(table_entry_str(A, 0, 2) == "-d");
    CHECK(table_entry_str(A, 0, 3) == "-c");
    // row b
    CHECK(table_entry_str(A, 1, 0) == "b");
    CHECK(table_entry_str(A, 1, 1) == "-a");
    CHECK(table_entry_str(A, 1, 2) == "-d");
    CHECK(table_entry_str(A, 1, 3) == "c");
    // row c
    CHECK(table_entry_str(A, 2, 0) == "c");
    CHECK(table_entry_str(A, 2, 1) == "d");
    CHECK(table_entry_str(A, 2, 2) == "a");
    CHECK(table_entry_str(A, 2, 3) == "-b");
    // row d
    CHECK(table_entry_str(A, 3, 0) == "d");
    CHECK(table_entry_str(A, 3, 1) == "-c");
    CHECK(table_entry_str(A, 3, 2) == "b");
    CHECK(table_entry_str(A, 3, 3) == "-a");
}

TEST_CASE("quaternion table golden entries") {
    const AlgebraPtr H = builtin_H();
    CHECK(table_entry_str(H, 0, 0) == "1");
    CHECK(table_entry_str(H, 0, 1) == "i");
    CHECK(table_entry_str(H, 0, 2) == "j");
    CHECK(table_entry_str(H, 0, 3) == "k");
    CHECK(table_entry_str(H, 1, 0) == "i");
    CHECK(table_entry_str(H, 1, 1) == "-1");
    CHECK(table_entry_str(H, 1, 2) == "k");
    CHECK(table_entry_str(H, 1, 3) == "-j");
    CHECK(table_entry_str(H, 2, 0) == "j");
    CHECK(table_entry_str(H, 2, 1) == "-k");
    CHECK(table_entry_str(H, 2, 2) == "-1");
    CHECK(table_entry_str(H, 2, 3) == "i");
    CHECK(table_entry_str(H, 3, 0) == "k");
    CHECK(table_entry_str(H, 3, 1) == "j");
    CHECK(table_entry_str(H, 3, 2) == "-i");
    CHECK(table_entry_str(H, 3, 3) == "-1");
}

TEST_CASE("parities and grading") {
    const AlgebraPtr A = builtin_A();
    CHECK(A->generator(0).parity == 0);
    CHECK(A->generator(1).parity == 0);
    CHECK(A->generator(2).parity == 1);
    CHECK(A->generator(3).parity == 1);
    CHECK(gen(A, 0).parity() == Parity::Even);
    CHECK(gen(A, 3).parity() == Parity::Odd);
    CHECK((gen(A, 0) + gen(A, 2)).parity() == Parity::Inhomogeneous);
    CHECK(Element(A).parity() == Parity::Zero);
}

TEST_CASE("element arithmetic and rendering") {
    const AlgebraPtr A = builtin_A();
    const Element e = gen(A, 2) - gen(A, 3);
    CHECK(e.str() == "c - d");
    CHECK((-gen(A, 0)).str() == "-a");
    CHECK((Scalar(3) / 2 * gen(A, 0) + gen(A, 1)).str() == "3/2a + b");
    CHECK(Element(A).str() == "0");
    CHECK(gen(A, 1) - gen(A, 1) == Element(A));
    CHECK(Scalar(0) * e == Element(A));
    CHECK(e.coeff(2) == 1);
    CHECK(e.coeff(0) == 0);
}

TEST_CASE("binary product is bilinear") {
    const AlgebraPtr A = builtin_A();
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> pick(0, 3);
    for (int n = 0; n < 1000; ++n) {
        const Scalar alpha(coeff(rng)), beta(coeff(rng));
        const Element x = gen(A, pick(rng)), y = gen(A, pick(rng)), z = gen(A, pick(rng));
        CHECK(binary_product(alpha * x + beta * y, z) ==
              alpha * binary_product(x, z) + beta * binary_product(y, z));
        CHECK(binary_product(z, alpha * x + beta * y) ==
              alpha * binary_product(z, x) + beta * binary_product(z, y));
    }
}

TEST_CASE("cross-algebra products are rejected") {
    CHECK_THROWS_AS(binary_product(gen(builtin_A(), 0), gen(builtin_H(), 0)), MixedAlgebraError);
    CHECK_THROWS_AS(gen(builtin_A(), 0) + gen(builtin_C(), 0), MixedAlgebraError);
}

TEST_CASE("custom algebra document validation") {
    const char* good = R"({"name":"T2","dim":2,"generators":["e1","e2"],"parity":[0,0],
        "table":[[[{"c":"1","i":1}],[]],[[],[]]]})";
    const AlgebraPtr t2 = load_algebra_text(good);
    CHECK(t2->dim() == 2);
    CHECK(binary_product(gen(t2, 0), gen(t2, 0)) == gen(t2, 1));
    CHECK(binary_product(gen(t2, 1), gen(t2, 1)).is_zero());

    CHECK_THROWS_AS(load_algebra_text(R"({"name":"x","dim":3,"generators":["a"],"parity":[0],
        "table":[[[]]]})"),
                    DimensionMismatchError);
    CHECK_THROWS_AS(load_algebra_text(R"({"name":"x","dim":1,"generators":["a"],"parity":[2],
        "table":[[[]]]})"),
                    BadParityError);
    CHECK_THROWS_AS(load_algebra_text(R"({"name":"x","dim":1,"generators":["a"],"parity":[0],
        "table":[[[{"c":"1","i":5}]]]})"),
                    BadIndexError);
    CHECK_THROWS_AS(load_algebra_text(R"({"name":"x","dim":1,"generators":["a"],"parity":[0],
        "table":[[[{"c":"1/0","i":0}]]]})"),
                    Error);
}

TEST_CASE("resolve_algebra selectors") {
    CHECK(resolve_algebra("A") == builtin_A());
    CHECK(resolve_algebra("H") == builtin_H());
    CHECK(resolve_algebra("C") == builtin_C());
    CHECK_THROWS_AS(resolve_algebra("./does-not-exist.json"), IoError);
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/2") == Scalar(3) / 2);
    CHECK(parse_rational("-7") == Scalar(-7));
    CHECK(parse_rational("0") == Scalar(0));
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
    CHECK(to_string(Scalar(-3) / 4) == "-3/4");
}
