#pragma once

#include "gja/algebra.hpp"
#include "gja/verifier.hpp"

#include <string>
#include <vector>

namespace gja {

/// Dense square matrix of exact rationals, row major.
class Matrix {
public:
    explicit Matrix(int dim) : dim_(dim), cells_(static_cast<std::size_t>(dim) * dim, Scalar(0)) {}

    int dim() const { return dim_; }
    Scalar& at(int row, int col) { return cells_[static_cast<std::size_t>(row) * dim_ + col]; }
    const Scalar& at(int row, int col) const {
        return cells_[static_cast<std::size_t>(row) * dim_ + col];
    }

    bool is_zero() const;
    bool operator==(const Matrix& rhs) const = default;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);

    /// Row-major rational-string rows.
    nlohmann::ordered_json to_json() const;

private:
    int dim_;
    std::vector<Scalar> cells_;
};

/// L(x): column j holds the coordinates of x o g_j, so L(x)[y] = [x o y].
Matrix left_matrix(const Element& x);
/// R(x): column j holds the coordinates of g_j o x, so R(x)[y] = [y o x].
Matrix right_matrix(const Element& x);

/// Applies a matrix to an element's coordinate vector.
Element apply(const Matrix& m, const Element& y);

/// For every basis pair, whether [L,R] and {L,R} vanish.
struct LRReport {
    bool all_commute = true;
    bool all_anticommute = true;
    AxiomReport details;  // one check per relation, with witnesses
};

LRReport check_LR_commutation(const AlgebraPtr& alg);

/// L(x o y) = L(x) L(y) over all basis pairs.
AxiomReport check_left_homomorphism(const AlgebraPtr& alg);
/// R(x o y) = R(y) R(x) over all basis pairs.
AxiomReport check_right_antihomomorphism(const AlgebraPtr& alg);

/// Signs of the diagonal self-products, read off the table.
struct SignatureProfile {
    std::vector<int> signs;  // each +1 or -1
    int trace = 0;
    std::string str() const;  // e.g. "(+,-,+,-)"
};

/// Requires every diagonal entry x o x to be +/-(first basis generator);
/// throws UndefinedSignatureError otherwise.
SignatureProfile signature(const AlgebraPtr& alg);

/// Verifies the map g0 -> 1, g1 -> i carries the even 2x2 corner of the
/// given table onto the complex-number table.
AxiomReport check_even_subalgebra_iso_C(const AlgebraPtr& alg);

/// Positional table comparison under the correspondence a<->1, b<->i,
/// c<->j, d<->k: the cells where the deformed table departs from the
/// quaternions.
struct CellDiff {
    int row, col;
    std::string a_entry;
    std::string h_entry;
};

std::vector<CellDiff> quaternion_table_diff();

}  // namespace gja
