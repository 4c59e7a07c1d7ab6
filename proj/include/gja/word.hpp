#pragma once

#include "gja/algebra.hpp"

#include <string>
#include <vector>

namespace gja {

/// A signed product string of basis letters over one algebra.
struct Word {
    AlgebraPtr alg;
    Scalar coeff{1};
    std::vector<int> letters;

    int length() const { return static_cast<int>(letters.size()); }
    bool operator==(const Word& rhs) const = default;
    /// e.g. "cbcb", "-ccbb", "3/2 dcba".
    std::string str() const;
};

/// Linear combination of words; canonical form merges equal letter
/// sequences and drops zero terms.
struct Superposition {
    AlgebraPtr alg;
    std::vector<Word> terms;

    Superposition& add(const Word& w);
    void canonicalize();
};

/// Exponents of the normal-ordered shape d^s c^r b^q a^p.
struct NormalForm {
    Scalar coeff;
    int s = 0, r = 0, q = 0, p = 0;  // p in {0,1} after a-absorption
    Word to_word() const;
};

/// Two-phase normal ordering: a-absorption (leftmost non-rightmost `a`
/// contracts with its right neighbour, no grade sign), then signed
/// descending sort under d > c > b > a. Only defined over the built-in
/// deformed-quaternion table.
Word normalize(const Word& w);

NormalForm normal_form(const Word& w);

/// One pairwise step of the total contraction.
struct ContractionStep {
    Scalar coeff;              // running coefficient after the step
    std::vector<int> letters;  // remaining letters after the step
    int grade_sign = 1;        // the (-1)^(pi(p)+pi(q)) factor applied, +1 at the final pair
};

struct ContractionTrace {
    Word normalized;
    std::vector<ContractionStep> steps;
    Element result;
};

/// Total contraction: normalize, then strictly right-to-left pairwise
/// table contractions with the graded sign at every step while the
/// remaining length is >= 3; the final length-2 pair is a plain table
/// lookup. Throws EmptyWordError for the empty word.
Element contract(const Word& w);

ContractionTrace contract_traced(const Word& w);

/// Linear extension of contract. The empty superposition is zero.
Element contract_superposition(const Superposition& s);

/// Word text syntax: optional sign and rational coefficient, then
/// juxtaposed letters with optional whitespace, e.g. "-3/2 cbcb", "c b c b".
Word parse_word(const std::string& text, const AlgebraPtr& alg);

}  // namespace gja
