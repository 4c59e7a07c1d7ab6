#pragma once

#include "gja/algebra.hpp"
#include "gja/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gja {

/// The sign in (xy)z = delta * x(yz).
struct Delta {
    int value;
    explicit Delta(int v) : value(v) {
        if (v != 1 && v != -1) throw Error("delta must be +1 or -1");
    }
};

struct AxiomCheck {
    std::string axiom;
    bool passed = true;
    nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool all_passed() const;
    nlohmann::ordered_json to_json() const;
};

/// Generic bracket <x,y> := xy - delta*(-1)^(pi(x)pi(y)) yx, extended
/// bilinearly over basis parities (well defined for any operands).
Element generic_bracket(const Element& x, const Element& y, Delta delta);

/// (xy)z = delta * x(yz) over all basis triples.
AxiomReport check_delta_assoc(const AlgebraPtr& alg, Delta delta);

enum class AssocClass { Associative, Antiassociative, Both, Neither };

std::string to_string(AssocClass c);

struct Classification {
    AssocClass cls;
    AxiomReport plus;   // delta = +1
    AxiomReport minus;  // delta = -1
};

Classification classify_assoc(const AlgebraPtr& alg);

/// Parity closure, graded antisymmetry and both graded Jacobi forms
/// (with their external grade prefactors) for the generic bracket.
AxiomReport check_graded_bracket_axioms(const AlgebraPtr& alg, Delta delta);

/// All basis 4-tuples under all five binary bracketings vanish.
AxiomReport check_length4_vanish(const AlgebraPtr& alg);

/// Minimal k in [2, max_k] with every k-fold basis product zero, under
/// all bracketings for k <= 4 and the two nested bracketings beyond.
std::optional<int> check_nilpotency(const AlgebraPtr& alg, int max_k);

struct IdempotentUnitReport {
    std::vector<std::string> idempotents;  // among +/- basis elements
    std::optional<std::string> right_identity;
    std::optional<std::string> left_identity;
    std::optional<std::string> two_sided_identity;
    nlohmann::ordered_json to_json() const;
};

IdempotentUnitReport check_idempotents_and_units(const AlgebraPtr& alg);

}  // namespace gja
