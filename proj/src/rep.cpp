#include "gja/rep.hpp"

#include <algorithm>

namespace gja {

bool Matrix::is_zero() const {
    return std::all_of(cells_.begin(), cells_.end(), [](const Scalar& c) { return c == 0; });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix out(a.dim_);
    for (int i = 0; i < a.dim_; ++i)
        for (int k = 0; k < a.dim_; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < a.dim_; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix out(a.dim_);
    for (std::size_t i = 0; i < a.cells_.size(); ++i) out.cells_[i] = a.cells_[i] + b.cells_[i];
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix out(a.dim_);
    for (std::size_t i = 0; i < a.cells_.size(); ++i) out.cells_[i] = a.cells_[i] - b.cells_[i];
    return out;
}

nlohmann::ordered_json Matrix::to_json() const {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < dim_; ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 0; j < dim_; ++j) row.push_back(to_string(at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Matrix left_matrix(const Element& x) {
    const AlgebraPtr& alg = x.algebra();
    Matrix m(alg->dim());
    for (int j = 0; j < alg->dim(); ++j) {
        const Element col = binary_product(x, Element::basis(alg, j));
        for (const auto& [i, c] : col.coeffs()) m.at(i, j) = c;
    }
    return m;
}

Matrix right_matrix(const Element& x) {
    const AlgebraPtr& alg = x.algebra();
    Matrix m(alg->dim());
    for (int j = 0; j < alg->dim(); ++j) {
        const Element col = binary_product(Element::basis(alg, j), x);
        for (const auto& [i, c] : col.coeffs()) m.at(i, j) = c;
    }
    return m;
}

Element apply(const Matrix& m, const Element& y) {
    Element out(y.algebra());
    for (const auto& [j, c] : y.coeffs())
        for (int i = 0; i < m.dim(); ++i)
            if (m.at(i, j) != 0) out += Element::term(y.algebra(), i, m.at(i, j) * c);
    return out;
}

namespace {

nlohmann::ordered_json pair_names(const AlgebraPtr& alg, int i, int j) {
    return nlohmann::ordered_json::array({alg->generator(i).name, alg->generator(j).name});
}

}  // namespace

LRReport check_LR_commutation(const AlgebraPtr& alg) {
    LRReport report;
    AxiomCheck comm{"LR-commutator-zero"};
    AxiomCheck anti{"LR-anticommutator-zero"};
    const int n = alg->dim();
    for (int i = 0; i < n; ++i) {
        const Matrix L = left_matrix(Element::basis(alg, i));
        for (int j = 0; j < n; ++j) {
            const Matrix R = right_matrix(Element::basis(alg, j));
            if (!(L * R - R * L).is_zero()) {
                comm.passed = false;
                comm.witnesses.push_back({{"pair", pair_names(alg, i, j)}});
            }
            if (!(L * R + R * L).is_zero()) {
                anti.passed = false;
                anti.witnesses.push_back({{"pair", pair_names(alg, i, j)}});
            }
        }
    }
    report.all_commute = comm.passed;
    report.all_anticommute = anti.passed;
    comm.witnesses = sorted_witnesses(comm.witnesses);
    anti.witnesses = sorted_witnesses(anti.witnesses);
    report.details.checks = {std::move(comm), std::move(anti)};
    return report;
}

AxiomReport check_left_homomorphism(const AlgebraPtr& alg) {
    AxiomCheck check{"left-homomorphism"};
    const int n = alg->dim();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Element gi = Element::basis(alg, i);
            const Element gj = Element::basis(alg, j);
            const Matrix lhs = left_matrix(binary_product(gi, gj));
            const Matrix rhs = left_matrix(gi) * left_matrix(gj);
            if (!(lhs == rhs)) {
                check.passed = false;
                check.witnesses.push_back({{"pair", pair_names(alg, i, j)},
                                           {"L(xy)", lhs.to_json()},
                                           {"L(x)L(y)", rhs.to_json()}});
            }
        }
    }
    check.witnesses = sorted_witnesses(check.witnesses);
    return AxiomReport{{check}};
}

AxiomReport check_right_antihomomorphism(const AlgebraPtr& alg) {
    AxiomCheck check{"right-antihomomorphism"};
    const int n = alg->dim();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Element gi = Element::basis(alg, i);
            const Element gj = Element::basis(alg, j);
            const Matrix lhs = right_matrix(binary_product(gi, gj));
            const Matrix rhs = right_matrix(gj) * right_matrix(gi);
            if (!(lhs == rhs)) {
                check.passed = false;
                check.witnesses.push_back({{"pair", pair_names(alg, i, j)}});
            }
        }
    }
    check.witnesses = sorted_witnesses(check.witnesses);
    return AxiomReport{{check}};
}

std::string SignatureProfile::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (i > 0) out += ",";
        out += signs[i] > 0 ? "+" : "-";
    }
    return out + ")";
}

SignatureProfile signature(const AlgebraPtr& alg) {
    SignatureProfile profile;
    for (int i = 0; i < alg->dim(); ++i) {
        const auto& entry = alg->entry(i, i);
        if (entry.size() != 1 || entry[0].index != 0 ||
            (entry[0].coeff != 1 && entry[0].coeff != -1))
            throw UndefinedSignatureError("diagonal entry " + alg->generator(i).name + " o " +
                                          alg->generator(i).name +
                                          " is not +/- the first basis generator");
        const int sign = entry[0].coeff == 1 ? 1 : -1;
        profile.signs.push_back(sign);
        profile.trace += sign;
    }
    return profile;
}

AxiomReport check_even_subalgebra_iso_C(const AlgebraPtr& alg) {
    AxiomCheck check{"even-subalgebra-iso-C"};
    const AlgebraPtr C = builtin_C();
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            // Map the entry through g0 -> 1, g1 -> i; it must stay in the
            // even corner and match the complex table.
            Element mapped(C);
            bool in_corner = true;
            for (const TableTerm& t : alg->entry(i, j)) {
                if (t.index > 1) {
                    in_corner = false;
                    break;
                }
                mapped += Element::term(C, t.index, t.coeff);
            }
            Element expected(C);
            for (const TableTerm& t : C->entry(i, j)) expected += Element::term(C, t.index, t.coeff);
            if (!in_corner || mapped != expected) {
                check.passed = false;
                check.witnesses.push_back({{"pair", pair_names(alg, i, j)},
                                           {"mapped", in_corner ? element_json(mapped)
                                                                : nlohmann::ordered_json("outside even corner")},
                                           {"expected", element_json(expected)}});
            }
        }
    }
    check.witnesses = sorted_witnesses(check.witnesses);
    return AxiomReport{{check}};
}

std::vector<CellDiff> quaternion_table_diff() {
    const AlgebraPtr A = builtin_A();
    const AlgebraPtr H = builtin_H();
    std::vector<CellDiff> diffs;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const TableTerm& ta = A->entry(i, j).front();
            const TableTerm& th = H->entry(i, j).front();
            if (ta.index != th.index || ta.coeff != th.coeff) {
                const auto fmt = [](const AlgebraPtr& alg, const TableTerm& t) {
                    return std::string(t.coeff < 0 ? "-" : "") + alg->generator(t.index).name;
                };
                diffs.push_back({i, j, fmt(A, ta), fmt(H, th)});
            }
        }
    }
    return diffs;
}

}  // namespace gja
