#pragma once

#include "gja/algebra.hpp"
#include "gja/bracket.hpp"

#include <memory>
#include <string>
#include <vector>

namespace gja {

/// Abstract syntax for CLI expressions. Products are strictly binary;
/// unparenthesized chains are rejected because the product is
/// non-associative.
struct Expr {
    enum class Kind { Generator, Sum, Scaled, Product, Word, Bracket };

    Kind kind;
    std::size_t begin = 0, end = 0;  // source span

    // Generator
    int index = 0;
    // Sum: signs pair with operands
    std::vector<int> signs;
    std::vector<std::unique_ptr<Expr>> operands;
    // Scaled
    Scalar coeff{1};
    // Product / Bracket: operands[0], operands[1]
    char bracket_style = 0;  // '[', '{' or '<'
    // Word
    std::vector<int> letters;
};

using ExprPtr = std::unique_ptr<Expr>;

/// Recursive-descent parser for
///   expr := sum
///   sum := ['-'] product (('+'|'-') product)*
///   product := atom | atom '*' atom | rational atom
///   atom := letter | word | bracket | '(' expr ')'
///   bracket := ('['|'{'|'<') expr ',' expr (']'|'}'|'>')
///   word := letter letter+
/// Whitespace between the letters of a word is permitted; the unicode
/// ring operator is accepted as an alias for '*'.
ExprPtr parse(const std::string& input, const AlgebraPtr& alg);

struct EvalResult {
    Element value;
    std::vector<std::string> warnings;  // e.g. a forced bracket kind overriding the parity dispatch
};

/// Word literals contract under rules 0-2 (algebra A only); '<x,y>'
/// dispatches the bracket kind from parities; '[x,y]' and '{x,y}' force
/// commutator/anticommutator, warning when that disagrees with dispatch.
EvalResult eval(const Expr& expr, const AlgebraPtr& alg);

/// Canonical printer; parse(print(parse(s))) == parse(s).
std::string print(const Expr& expr, const AlgebraPtr& alg);

}  // namespace gja
