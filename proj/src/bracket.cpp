#include "gja/bracket.hpp"

namespace gja {

BracketKind bracket_kind_for(Parity x, Parity y) {
    if (x == Parity::Zero) x = y;
    if (y == Parity::Zero) y = x;
    if (x == Parity::Even && y == Parity::Even) return BracketKind::Commutator;
    return BracketKind::Anticommutator;
}

Element bracket_forced(const Element& x, const Element& y, BracketKind kind) {
    Element xy = binary_product(x, y);
    Element yx = binary_product(y, x);
    return kind == BracketKind::Commutator ? xy - yx : xy + yx;
}

Element bracket(const Element& x, const Element& y) {
    const Parity px = x.parity();
    const Parity py = y.parity();
    if (px == Parity::Inhomogeneous || py == Parity::Inhomogeneous)
        throw InhomogeneousOperandError(
            "bracket operands must be parity-homogeneous (superselection rule)");
    if (x.algebra() != y.algebra())
        throw MixedAlgebraError("bracket operands belong to different algebras");
    return bracket_forced(x, y, bracket_kind_for(px, py));
}

namespace {

constexpr BracketKind Comm = BracketKind::Commutator;
constexpr BracketKind Anti = BracketKind::Anticommutator;
constexpr int A = 0, B = 1, C = 2, D = 3;

}  // namespace

const std::vector<JacobiInstance>& jacobi_instances() {
    static const std::vector<JacobiInstance> instances = {
        // Outer-first lines.
        {"[{d,c},a] + {{c,a},d} + {{a,d},c}",
         JacobiForm::OuterFirst,
         {JacobiTerm{Comm, Anti, D, C, A, true}, JacobiTerm{Anti, Anti, C, A, D, true},
          JacobiTerm{Anti, Anti, A, D, C, true}}},
        {"[{d,c},b] + {{c,b},d} + {{b,d},c}",
         JacobiForm::OuterFirst,
         {JacobiTerm{Comm, Anti, D, C, B, true}, JacobiTerm{Anti, Anti, C, B, D, true},
          JacobiTerm{Anti, Anti, B, D, C, true}}},
        {"{[a,b],d} + {{b,d},a} + {{d,a},b}",
         JacobiForm::OuterFirst,
         {JacobiTerm{Anti, Comm, A, B, D, true}, JacobiTerm{Anti, Anti, B, D, A, true},
          JacobiTerm{Anti, Anti, D, A, B, true}}},
        {"{[a,b],c} + {{b,c},a} + {{c,a},b}",
         JacobiForm::OuterFirst,
         {JacobiTerm{Anti, Comm, A, B, C, true}, JacobiTerm{Anti, Anti, B, C, A, true},
          JacobiTerm{Anti, Anti, C, A, B, true}}},
        // Inner-first lines.
        {"{d,{c,a}} + {c,{a,d}} + [a,{d,c}]",
         JacobiForm::InnerFirst,
         {JacobiTerm{Anti, Anti, C, A, D, false}, JacobiTerm{Anti, Anti, A, D, C, false},
          JacobiTerm{Comm, Anti, D, C, A, false}}},
        {"{d,{c,b}} + {c,{b,d}} + [b,{d,c}]",
         JacobiForm::InnerFirst,
         {JacobiTerm{Anti, Anti, C, B, D, false}, JacobiTerm{Anti, Anti, B, D, C, false},
          JacobiTerm{Comm, Anti, D, C, B, false}}},
        {"{a,{b,d}} + {b,{d,a}} + {d,[a,b]}",
         JacobiForm::InnerFirst,
         {JacobiTerm{Anti, Anti, B, D, A, false}, JacobiTerm{Anti, Anti, D, A, B, false},
          JacobiTerm{Anti, Comm, A, B, D, false}}},
        {"{a,{b,c}} + {b,{c,a}} + {c,[a,b]}",
         JacobiForm::InnerFirst,
         {JacobiTerm{Anti, Anti, B, C, A, false}, JacobiTerm{Anti, Anti, C, A, B, false},
          JacobiTerm{Anti, Comm, A, B, C, false}}},
    };
    return instances;
}

namespace {

Element fito_term(const JacobiTerm& t, const Scalar& scale) {
    const AlgebraPtr alg = builtin_A();
    const Element u = scale * Element::basis(alg, t.u);
    const Element v = scale * Element::basis(alg, t.v);
    const Element w = scale * Element::basis(alg, t.w);
    const Element inner = bracket_forced(u, v, t.inner);
    return t.inner_on_left ? bracket_forced(inner, w, t.outer)
                           : bracket_forced(w, inner, t.outer);
}

void expand_term(const JacobiTerm& t, Superposition& out) {
    const int inner_sign = t.inner == Comm ? -1 : 1;
    const int outer_sign = t.outer == Comm ? -1 : 1;
    const auto word = [&](int x, int y, int z, int sign) {
        out.add(Word{out.alg, Scalar(sign), {x, y, z}});
    };
    if (t.inner_on_left) {
        // (uv + is*vu)w + os*w(uv + is*vu)
        word(t.u, t.v, t.w, 1);
        word(t.v, t.u, t.w, inner_sign);
        word(t.w, t.u, t.v, outer_sign);
        word(t.w, t.v, t.u, outer_sign * inner_sign);
    } else {
        // w(uv + is*vu) + os*(uv + is*vu)w
        word(t.w, t.u, t.v, 1);
        word(t.w, t.v, t.u, inner_sign);
        word(t.u, t.v, t.w, outer_sign);
        word(t.v, t.u, t.w, outer_sign * inner_sign);
    }
}

}  // namespace

Element jacobi_fito(const JacobiInstance& instance) {
    Element total(builtin_A());
    for (const JacobiTerm& t : instance.terms) total += fito_term(t, Scalar(1));
    return total;
}

Superposition jacobi_foti_expansion(const JacobiInstance& instance) {
    Superposition s{builtin_A(), {}};
    for (const JacobiTerm& t : instance.terms) expand_term(t, s);
    s.canonicalize();
    return s;
}

Element jacobi_foti(const JacobiInstance& instance) {
    return contract_superposition(jacobi_foti_expansion(instance));
}

Element jacobi_commutator_variant(const Scalar& scale) {
    // [{d,c},a] + {[c,a],d} + {[a,d],c}
    const std::array<JacobiTerm, 3> terms = {
        JacobiTerm{Comm, Anti, D, C, A, true},
        JacobiTerm{Anti, Comm, C, A, D, true},
        JacobiTerm{Anti, Comm, A, D, C, true},
    };
    Element total(builtin_A());
    for (const JacobiTerm& t : terms) total += fito_term(t, scale);
    return total;
}

}  // namespace gja
