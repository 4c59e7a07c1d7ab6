#include <doctest.h>

#include "gja/suites.hpp"

using namespace gja;

TEST_CASE("every named suite runs green on the default algebra") {
    for (const std::string& name : suite_names()) {
        const Report r = run_suite(name, builtin_A());
        INFO(name);
        CHECK(r.all_ok());
        CHECK_FALSE(r.checks.empty());
    }
    CHECK_THROWS_AS(run_suite("bogus", builtin_A()), Error);
}

TEST_CASE("merged report is byte-identical across serial and parallel runs") {
    const std::string serial = run_all_suites(builtin_A(), false).to_json().dump();
    for (int n = 0; n < 3; ++n) {
        CHECK(run_all_suites(builtin_A(), true).to_json().dump() == serial);
        CHECK(run_all_suites(builtin_A(), false).to_json().dump() == serial);
    }
}

TEST_CASE("report serialization carries the shared schema") {
    const Report r = run_suite("table", builtin_A());
    const auto j = r.to_json();
    CHECK(j.contains("suite"));
    CHECK(j.contains("checks"));
    CHECK(j.contains("algebra"));
    CHECK(j["version"] == kVersion);
    for (const auto& check : j["checks"]) {
        CHECK(check.contains("id"));
        const std::string status = check["status"];
        CHECK((status == "pass" || status == "fail" || status == "expected-fail"));
        CHECK(check.contains("witnesses"));
    }
    CHECK_FALSE(r.to_text().empty());
    CHECK(r.to_csv().rfind("suite,", 0) == 0);
}

TEST_CASE("table rendering uses the row-as-left-factor orientation") {
    CHECK(table_entry_str(builtin_A(), 1, 2) == "-d");
    const std::string rendered = render_table(builtin_A());
    CHECK(rendered.find("o |") != std::string::npos);
    CHECK(rendered.find("-d") != std::string::npos);
}

TEST_CASE("axioms suite adapts to the selected algebra") {
    CHECK(run_suite("axioms", builtin_H()).all_ok());
    CHECK(run_suite("axioms", antiassociative_fixture()).all_ok());
}
