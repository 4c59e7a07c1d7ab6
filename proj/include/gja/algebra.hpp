#pragma once

#include "gja/errors.hpp"
#include "gja/rational.hpp"

#include <nlohmann/json_fwd.hpp>

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace gja {

/// A named basis letter with a parity bit.
struct Generator {
    std::string name;
    int index = 0;
    int parity = 0;  // 0 even, 1 odd
};

/// One signed term of a structure-constant entry.
struct TableTerm {
    Scalar coeff;
    int index = 0;
};

/// Immutable structure-constant table. entry(i, j) expands g_i o g_j.
class AlgebraTable {
public:
    AlgebraTable(std::string name, std::vector<Generator> generators,
                 std::vector<std::vector<std::vector<TableTerm>>> table);

    const std::string& name() const { return name_; }
    int dim() const { return static_cast<int>(generators_.size()); }
    const std::vector<Generator>& generators() const { return generators_; }
    const Generator& generator(int i) const { return generators_.at(i); }
    /// Returns -1 when no generator has that name.
    int generator_index(std::string_view name) const;
    const std::vector<TableTerm>& entry(int i, int j) const { return table_.at(i).at(j); }

private:
    std::string name_;
    std::vector<Generator> generators_;
    std::vector<std::vector<std::vector<TableTerm>>> table_;
};

using AlgebraPtr = std::shared_ptr<const AlgebraTable>;

/// The 4-dimensional graded quaternion deformation (generators a, b, c, d).
AlgebraPtr builtin_A();
/// The unit quaternions (generators 1, i, j, k), trivially graded.
AlgebraPtr builtin_H();
/// The complex numbers (generators 1, i), trivially graded.
AlgebraPtr builtin_C();

/// Parses and validates the custom-algebra JSON document.
AlgebraPtr load_algebra(const nlohmann::json& doc);
AlgebraPtr load_algebra_text(const std::string& json_text);
AlgebraPtr load_algebra_file(const std::string& path);
/// "A" | "H" | "C" | path to a custom JSON document.
AlgebraPtr resolve_algebra(const std::string& selector);

enum class Parity { Even, Odd, Inhomogeneous, Zero };

std::string to_string(Parity p);

/// Sparse exact-rational linear combination over one algebra's basis.
/// Canonical: no stored coefficient is zero.
class Element {
public:
    explicit Element(AlgebraPtr alg) : alg_(std::move(alg)) {}
    static Element basis(AlgebraPtr alg, int index);
    static Element term(AlgebraPtr alg, int index, const Scalar& coeff);

    const AlgebraPtr& algebra() const { return alg_; }
    const std::map<int, Scalar>& coeffs() const { return coeffs_; }
    Scalar coeff(int index) const;
    bool is_zero() const { return coeffs_.empty(); }

    Parity parity() const;

    Element& operator+=(const Element& rhs);
    Element& operator-=(const Element& rhs);
    Element& operator*=(const Scalar& s);

    friend Element operator+(Element lhs, const Element& rhs) { return lhs += rhs; }
    friend Element operator-(Element lhs, const Element& rhs) { return lhs -= rhs; }
    friend Element operator*(const Scalar& s, Element x) { return x *= s; }
    friend Element operator-(Element x) { return x *= Scalar(-1); }

    bool operator==(const Element& rhs) const;
    bool operator!=(const Element& rhs) const { return !(*this == rhs); }

    /// e.g. "-a", "c - d", "3/2a + b", "0".
    std::string str() const;

private:
    void add_term(int index, const Scalar& coeff);

    AlgebraPtr alg_;
    std::map<int, Scalar> coeffs_;
};

/// Bilinear extension of the structure-constant table.
Element binary_product(const Element& x, const Element& y);

}  // namespace gja
