#pragma once

#include "gja/algebra.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace gja {

inline constexpr const char* kVersion = "0.1.0";

enum class CheckStatus { Pass, Fail, ExpectedFail };

std::string to_string(CheckStatus s);

/// One machine-checked finding. `ok` is true when the outcome matches
/// the expectation (a pass, or a negative result that was expected).
struct Check {
    std::string id;
    CheckStatus status = CheckStatus::Pass;
    nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
    nlohmann::ordered_json value;  // optional payload (element, class, ...)
    bool ok = true;

    nlohmann::ordered_json to_json() const;
};

Check make_pass(std::string id);
Check make_fail(std::string id, nlohmann::ordered_json witnesses);
Check make_expected_fail(std::string id, nlohmann::ordered_json witnesses);

struct Report {
    std::string suite;
    std::string algebra;
    std::vector<Check> checks;

    bool all_ok() const;
    /// Deterministic: ordered keys, checks in insertion order, witnesses
    /// sorted at construction time.
    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
    std::string to_csv() const;
};

nlohmann::ordered_json element_json(const Element& e);
nlohmann::ordered_json sorted_witnesses(nlohmann::ordered_json witnesses);

}  // namespace gja
