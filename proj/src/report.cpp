#include "gja/report.hpp"

#include <algorithm>

namespace gja {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::ExpectedFail: return "expected-fail";
    }
    return "?";
}

nlohmann::ordered_json Check::to_json() const {
    nlohmann::ordered_json j;
    j["id"] = id;
    j["status"] = to_string(status);
    j["witnesses"] = witnesses;
    if (!value.is_null()) j["value"] = value;
    return j;
}

Check make_pass(std::string id) { return Check{std::move(id)}; }

Check make_fail(std::string id, nlohmann::ordered_json witnesses) {
    return Check{std::move(id), CheckStatus::Fail, sorted_witnesses(std::move(witnesses)), {},
                 false};
}

Check make_expected_fail(std::string id, nlohmann::ordered_json witnesses) {
    return Check{std::move(id), CheckStatus::ExpectedFail, sorted_witnesses(std::move(witnesses)),
                 {}, true};
}

bool Report::all_ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["checks"] = nlohmann::ordered_json::array();
    for (const Check& c : checks) j["checks"].push_back(c.to_json());
    j["algebra"] = algebra;
    j["version"] = kVersion;
    return j;
}

std::string Report::to_text() const {
    std::string out = "suite: " + suite + " (algebra " + algebra + ")\n";
    for (const Check& c : checks) {
        out += "  [" + std::string(c.ok ? "OK" : "FAIL") + "] " + c.id + " -> " +
               to_string(c.status);
        if (!c.value.is_null()) out += " " + c.value.dump();
        if (!c.ok && !c.witnesses.empty()) out += " witnesses: " + c.witnesses.dump();
        out += "\n";
    }
    out += all_ok() ? "result: OK\n" : "result: FAIL\n";
    return out;
}

std::string Report::to_csv() const {
    std::string out = "suite,algebra,check,status,ok\n";
    for (const Check& c : checks)
        out += suite + "," + algebra + "," + c.id + "," + to_string(c.status) + "," +
               (c.ok ? "true" : "false") + "\n";
    return out;
}

nlohmann::ordered_json element_json(const Element& e) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [i, c] : e.coeffs()) j[e.algebra()->generator(i).name] = to_string(c);
    return j;
}

nlohmann::ordered_json sorted_witnesses(nlohmann::ordered_json witnesses) {
    std::vector<std::string> dumped;
    for (const auto& w : witnesses) dumped.push_back(w.dump());
    std::vector<std::size_t> order(dumped.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return dumped[a] < dumped[b]; });
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (std::size_t i : order) out.push_back(witnesses[i]);
    return out;
}

}  // namespace gja
