#pragma once

#include "gja/algebra.hpp"
#include "gja/report.hpp"
#include "gja/word.hpp"

#include <array>
#include <string>
#include <vector>

namespace gja {

enum class BracketKind { Commutator, Anticommutator };

/// Kind dictated by operand parities: (even,even) -> commutator,
/// (odd,odd) and mixed -> anticommutator. Zero counts as either; both
/// kinds agree on it only up to 2xy, so zero defers to the other operand.
BracketKind bracket_kind_for(Parity x, Parity y);

/// xy -/+ yx with the kind forced by the caller.
Element bracket_forced(const Element& x, const Element& y, BracketKind kind);

/// Parity-dispatched graded bracket. Operands must be parity-homogeneous
/// (even, odd or zero); throws InhomogeneousOperandError otherwise.
Element bracket(const Element& x, const Element& y);

/// One summand of a super-Jacobi identity: an outer bracket whose one
/// argument is an inner bracket of two generators and whose other
/// argument is a third generator.
struct JacobiTerm {
    BracketKind outer;
    BracketKind inner;
    int u, v;            // inner bracket arguments, in printed order
    int w;               // the outer bracket's lone generator
    bool inner_on_left;  // true: outer(inner(u,v), w); false: outer(w, inner(u,v))
};

enum class JacobiForm { OuterFirst, InnerFirst };

struct JacobiInstance {
    std::string name;  // e.g. "[{d,c},a] + {{c,a},d} + {{a,d},c}"
    JacobiForm form;
    std::array<JacobiTerm, 3> terms;
};

/// The eight built-in super-Jacobi identities over the deformed
/// quaternion table: four outer-first lines and four inner-first lines.
const std::vector<JacobiInstance>& jacobi_instances();

/// From-inside-to-outside: inner brackets evaluate to elements via the
/// binary table, then the outer brackets apply bilinearly.
Element jacobi_fito(const JacobiInstance& instance);

/// From-outside-to-inside: both bracket layers expand formally into
/// signed length-3 words before any table evaluation.
Superposition jacobi_foti_expansion(const JacobiInstance& instance);

/// Totally contracts the foti expansion under rules 0-2.
Element jacobi_foti(const JacobiInstance& instance);

/// The first outer-first identity with its mixed-parity inner brackets
/// replaced by commutators, fito-contracted. Inputs may be scaled to
/// exercise bilinearity (each term is cubic in the scale).
Element jacobi_commutator_variant(const Scalar& scale = Scalar(1));

/// Parity closure of the graded bracket over all homogeneous basis
/// pairs: the bracket's parity is pi(x)+pi(y) mod 2, or zero.
Report bracket_parity_check(const AlgebraPtr& alg);

/// Structural comparison of the deformed quaternions against the
/// abstract delta-Jordan-Lie framework: grading, associativity class,
/// bracket structure, Jacobi gradedness, fito/foti sensitivity,
/// length-4 nonvanishing, identities and idempotents.
Report compare_structures();

}  // namespace gja
