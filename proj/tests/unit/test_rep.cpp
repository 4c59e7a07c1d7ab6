#include <doctest.h>

#include "gja/rep.hpp"
#include "gja/suites.hpp"

using namespace gja;

namespace {
Element gen(const AlgebraPtr& alg, int i) { return Element::basis(alg, i); }
}

TEST_CASE("multiplication operators reproduce the products") {
    for (const AlgebraPtr& alg : {builtin_A(), builtin_H()})
        for (int i = 0; i < alg->dim(); ++i)
            for (int j = 0; j < alg->dim(); ++j) {
                const Element x = gen(alg, i), y = gen(alg, j);
                CHECK(apply(left_matrix(x), y) == binary_product(x, y));
                CHECK(apply(right_matrix(x), y) == binary_product(y, x));
            }
}

TEST_CASE("quaternion left and right operators commute") {
    const LRReport lr = check_LR_commutation(builtin_H());
    CHECK(lr.all_commute);
    CHECK_FALSE(lr.all_anticommute);
}

TEST_CASE("antiassociative fixture operators anticommute") {
    const LRReport lr = check_LR_commutation(antiassociative_fixture());
    CHECK(lr.all_anticommute);
}

TEST_CASE("deformed operators neither commute nor anticommute") {
    const LRReport lr = check_LR_commutation(builtin_A());
    CHECK_FALSE(lr.all_commute);
    CHECK_FALSE(lr.all_anticommute);
}

TEST_CASE("left multiplication is a homomorphism exactly for the quaternions") {
    CHECK(check_left_homomorphism(builtin_H()).all_passed());
    CHECK(check_right_antihomomorphism(builtin_H()).all_passed());
    const AxiomReport r = check_left_homomorphism(builtin_A());
    CHECK_FALSE(r.all_passed());
    CHECK_FALSE(r.checks[0].witnesses.empty());
}

TEST_CASE("signatures") {
    const SignatureProfile h = signature(builtin_H());
    CHECK(h.signs == std::vector<int>{1, -1, -1, -1});
    CHECK(h.trace == -2);
    CHECK(h.str() == "(+,-,-,-)");

    const SignatureProfile a = signature(builtin_A());
    CHECK(a.signs == std::vector<int>{1, -1, 1, -1});
    CHECK(a.trace == 0);
    CHECK(a.str() == "(+,-,+,-)");

    // e1*e1 = e2 is not proportional to e1, so no signature exists.
    CHECK_THROWS_AS(signature(antiassociative_fixture()), UndefinedSignatureError);
}

TEST_CASE("even corner is the complex numbers") {
    CHECK(check_even_subalgebra_iso_C(builtin_A()).all_passed());
    CHECK(check_even_subalgebra_iso_C(builtin_H()).all_passed());
}

TEST_CASE("table difference against the quaternions") {
    const std::vector<CellDiff> diffs = quaternion_table_diff();
    REQUIRE(diffs.size() == 9);
    const std::vector<std::pair<int, int>> cells = {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 1},
                                                    {2, 2}, {2, 3}, {3, 1}, {3, 2}};
    for (std::size_t k = 0; k < diffs.size(); ++k) {
        CHECK(diffs[k].row == cells[k].first);
        CHECK(diffs[k].col == cells[k].second);
    }
    CHECK(diffs[0].a_entry == "-d");
    CHECK(diffs[0].h_entry == "j");
}

TEST_CASE("matrix arithmetic") {
    Matrix id(2), sw(2);
    id.at(0, 0) = 1;
    id.at(1, 1) = 1;
    sw.at(0, 1) = 1;
    sw.at(1, 0) = 1;
    CHECK(sw * sw == id);
    CHECK((id - id).is_zero());
    CHECK(id + id == id * (id + id));
}
