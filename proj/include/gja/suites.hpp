#pragma once

#include "gja/algebra.hpp"
#include "gja/report.hpp"

#include <string>
#include <vector>

namespace gja {

/// Dim-2 antiassociative fixture: e1 o e1 = e2, every other product zero.
AlgebraPtr antiassociative_fixture();

/// Multiplication table rendered with the row as the left factor.
std::string render_table(const AlgebraPtr& alg);
/// The printed entry at (row, col), e.g. "-d".
std::string table_entry_str(const AlgebraPtr& alg, int row, int col);

const std::vector<std::string>& suite_names();  // without "all"

/// Runs one named suite. "axioms" honours the algebra selector; the
/// remaining suites verify the built-in structures.
Report run_suite(const std::string& suite, const AlgebraPtr& alg);

/// Runs every suite, optionally with one task per suite, and merges the
/// checks into a single report with suite-prefixed ids. Output is
/// byte-identical regardless of parallelism.
Report run_all_suites(const AlgebraPtr& alg, bool parallel = false);

}  // namespace gja
