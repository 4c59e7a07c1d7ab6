#include "gja/algebra.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <utility>

namespace gja {

AlgebraTable::AlgebraTable(std::string name, std::vector<Generator> generators,
                           std::vector<std::vector<std::vector<TableTerm>>> table)
    : name_(std::move(name)), generators_(std::move(generators)), table_(std::move(table)) {
    const int n = dim();
    if (n <= 0) throw DimensionMismatchError("algebra dimension must be positive");
    if (static_cast<int>(table_.size()) != n)
        throw DimensionMismatchError("table must have dim rows");
    for (int i = 0; i < n; ++i) {
        generators_[i].index = i;
        if (generators_[i].parity != 0 && generators_[i].parity != 1)
            throw BadParityError("parity must be 0 or 1: generator " + generators_[i].name);
        if (static_cast<int>(table_[i].size()) != n)
            throw DimensionMismatchError("table row " + std::to_string(i) + " must have dim entries");
        for (int j = 0; j < n; ++j)
            for (const TableTerm& t : table_[i][j])
                if (t.index < 0 || t.index >= n)
                    throw BadIndexError("table entry (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") references basis index " +
                                        std::to_string(t.index));
    }
}

int AlgebraTable::generator_index(std::string_view name) const {
    for (const Generator& g : generators_)
        if (g.name == name) return g.index;
    return -1;
}

namespace {

// Single signed term g_i o g_j = sign * g_k, encoded (sign, k).
using Row = std::vector<std::pair<int, int>>;

AlgebraPtr make_signed_table(std::string name, std::vector<std::string> names,
                             std::vector<int> parities, std::vector<Row> rows) {
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < names.size(); ++i)
        gens.push_back({names[i], static_cast<int>(i), parities[i]});
    std::vector<std::vector<std::vector<TableTerm>>> table;
    for (const Row& row : rows) {
        std::vector<std::vector<TableTerm>> r;
        for (const auto& [sign, k] : row) r.push_back({TableTerm{Scalar(sign), k}});
        table.push_back(std::move(r));
    }
    return std::make_shared<AlgebraTable>(std::move(name), std::move(gens), std::move(table));
}

}  // namespace

AlgebraPtr builtin_A() {
    // Row = left factor, column = right factor; indices a=0, b=1, c=2, d=3.
    static const AlgebraPtr table = make_signed_table(
        "A", {"a", "b", "c", "d"}, {0, 0, 1, 1},
        {
            {{+1, 0}, {+1, 1}, {-1, 3}, {-1, 2}},  // a o _
            {{+1, 1}, {-1, 0}, {-1, 3}, {+1, 2}},  // b o _
            {{+1, 2}, {+1, 3}, {+1, 0}, {-1, 1}},  // c o _
            {{+1, 3}, {-1, 2}, {+1, 1}, {-1, 0}},  // d o _
        });
    return table;
}

AlgebraPtr builtin_H() {
    static const AlgebraPtr table = make_signed_table(
        "H", {"1", "i", "j", "k"}, {0, 0, 0, 0},
        {
            {{+1, 0}, {+1, 1}, {+1, 2}, {+1, 3}},  // 1 o _
            {{+1, 1}, {-1, 0}, {+1, 3}, {-1, 2}},  // i o _
            {{+1, 2}, {-1, 3}, {-1, 0}, {+1, 1}},  // j o _
            {{+1, 3}, {+1, 2}, {-1, 1}, {-1, 0}},  // k o _
        });
    return table;
}

AlgebraPtr builtin_C() {
    static const AlgebraPtr table = make_signed_table("C", {"1", "i"}, {0, 0},
                                                      {
                                                          {{+1, 0}, {+1, 1}},
                                                          {{+1, 1}, {-1, 0}},
                                                      });
    return table;
}

AlgebraPtr load_algebra(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ParseError("algebra document must be a JSON object", 0);
    const auto require = [&](const char* key) -> const nlohmann::json& {
        if (!doc.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"", 0);
        return doc.at(key);
    };
    if (!require("name").is_string()) throw ParseError("\"name\" must be a string", 0);
    const std::string name = doc.at("name").get<std::string>();
    if (!require("dim").is_number_integer() || doc.at("dim").get<int>() <= 0)
        throw DimensionMismatchError("\"dim\" must be a positive integer");
    const int dim = doc.at("dim").get<int>();

    const auto& jgens = require("generators");
    const auto& jparity = require("parity");
    const auto& jtable = require("table");
    if (!jgens.is_array() || static_cast<int>(jgens.size()) != dim)
        throw DimensionMismatchError("\"generators\" must list dim names");
    if (!jparity.is_array() || static_cast<int>(jparity.size()) != dim)
        throw DimensionMismatchError("\"parity\" must list dim bits");
    if (!jtable.is_array() || static_cast<int>(jtable.size()) != dim)
        throw DimensionMismatchError("\"table\" must have dim rows");

    std::vector<Generator> gens;
    for (int i = 0; i < dim; ++i) {
        if (!jgens[i].is_string()) throw ParseError("generator names must be strings", 0);
        if (!jparity[i].is_number_integer()) throw BadParityError("parity entries must be integers");
        const int p = jparity[i].get<int>();
        if (p != 0 && p != 1) throw BadParityError("parity entries must be 0 or 1");
        gens.push_back({jgens[i].get<std::string>(), i, p});
    }

    std::vector<std::vector<std::vector<TableTerm>>> table(dim);
    for (int i = 0; i < dim; ++i) {
        if (!jtable[i].is_array() || static_cast<int>(jtable[i].size()) != dim)
            throw DimensionMismatchError("table row " + std::to_string(i) + " must have dim entries");
        table[i].resize(dim);
        for (int j = 0; j < dim; ++j) {
            const auto& jterms = jtable[i][j];
            if (!jterms.is_array()) throw ParseError("table entries must be term arrays", 0);
            for (const auto& jterm : jterms) {
                if (!jterm.is_object() || !jterm.contains("c") || !jterm.contains("i"))
                    throw ParseError("each term must be {\"c\": rational, \"i\": index}", 0);
                if (!jterm.at("c").is_string()) throw ParseError("term coefficient must be a string", 0);
                if (!jterm.at("i").is_number_integer()) throw BadIndexError("term index must be an integer");
                const int k = jterm.at("i").get<int>();
                if (k < 0 || k >= dim) throw BadIndexError("term index out of range");
                Scalar c = parse_rational(jterm.at("c").get<std::string>());
                if (c != 0) table[i][j].push_back({std::move(c), k});
            }
        }
    }
    return std::make_shared<AlgebraTable>(name, std::move(gens), std::move(table));
}

AlgebraPtr load_algebra_text(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    return load_algebra(doc);
}

AlgebraPtr load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open algebra file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_algebra_text(buf.str());
}

AlgebraPtr resolve_algebra(const std::string& selector) {
    if (selector == "A") return builtin_A();
    if (selector == "H") return builtin_H();
    if (selector == "C") return builtin_C();
    return load_algebra_file(selector);
}

std::string to_string(Parity p) {
    switch (p) {
        case Parity::Even: return "even";
        case Parity::Odd: return "odd";
        case Parity::Inhomogeneous: return "inhomogeneous";
        case Parity::Zero: return "zero";
    }
    return "?";
}

Element Element::basis(AlgebraPtr alg, int index) { return term(std::move(alg), index, Scalar(1)); }

Element Element::term(AlgebraPtr alg, int index, const Scalar& coeff) {
    Element e(std::move(alg));
    if (index < 0 || index >= e.alg_->dim()) throw BadIndexError("basis index out of range");
    e.add_term(index, coeff);
    return e;
}

Scalar Element::coeff(int index) const {
    auto it = coeffs_.find(index);
    return it == coeffs_.end() ? Scalar(0) : it->second;
}

Parity Element::parity() const {
    if (coeffs_.empty()) return Parity::Zero;
    bool even = false, odd = false;
    for (const auto& [i, c] : coeffs_) (alg_->generator(i).parity == 0 ? even : odd) = true;
    if (even && odd) return Parity::Inhomogeneous;
    return even ? Parity::Even : Parity::Odd;
}

void Element::add_term(int index, const Scalar& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(index, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) coeffs_.erase(it);
    }
}

namespace {
void require_same_algebra(const Element& x, const Element& y) {
    if (x.algebra() != y.algebra())
        throw MixedAlgebraError("operands belong to different algebras: " + x.algebra()->name() +
                                " vs " + y.algebra()->name());
}
}  // namespace

Element& Element::operator+=(const Element& rhs) {
    require_same_algebra(*this, rhs);
    for (const auto& [i, c] : rhs.coeffs_) add_term(i, c);
    return *this;
}

Element& Element::operator-=(const Element& rhs) {
    require_same_algebra(*this, rhs);
    for (const auto& [i, c] : rhs.coeffs_) add_term(i, -c);
    return *this;
}

Element& Element::operator*=(const Scalar& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [i, c] : coeffs_) c *= s;
    return *this;
}

bool Element::operator==(const Element& rhs) const {
    return alg_ == rhs.alg_ && coeffs_ == rhs.coeffs_;
}

std::string Element::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [i, c] : coeffs_) {
        const bool negative = c < 0;
        const Scalar mag = negative ? Scalar(-c) : c;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (mag != 1) out += to_string(mag);
        out += alg_->generator(i).name;
        first = false;
    }
    return out;
}

Element binary_product(const Element& x, const Element& y) {
    require_same_algebra(x, y);
    Element result(x.algebra());
    for (const auto& [i, xi] : x.coeffs())
        for (const auto& [j, yj] : y.coeffs())
            for (const TableTerm& t : x.algebra()->entry(i, j))
                result += Element::term(x.algebra(), t.index, xi * yj * t.coeff);
    return result;
}

}  // namespace gja
