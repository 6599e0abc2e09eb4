#pragma once

#include <optional>

#include "eqalg/matrix.hpp"

namespace eqalg {

// U * A * V = D with U, V unimodular (inverses tracked exactly), D diagonal
// with nonnegative entries satisfying d_i | d_{i+1}.
struct SmithForm {
  Mat U, Uinv, V, Vinv, D;
  int rank = 0;
  std::vector<Int> diag;  // the first `rank` diagonal entries (each > 0)
};

SmithForm smith_normal_form(const Mat& A);

// Basis of { x : A x = 0 } as columns (the kernel lattice is saturated, so
// these are a genuine Z-basis).
Mat kernel_basis(const Mat& A);

// One solution of A x = b, if any.
std::optional<Vec> solve(const Mat& A, const Vec& b);
std::optional<Vec> solve(const SmithForm& S, const Vec& b);

bool in_image(const Mat& A, const Vec& b);

// Solve A X = B column by column; nullopt if any column unsolvable.
std::optional<Mat> solve_matrix(const Mat& A, const Mat& B);

}  // namespace eqalg
