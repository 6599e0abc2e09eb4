#include "eqalg/smith.hpp"

namespace eqalg {

namespace {

// Elementary operations on (D, U, Uinv) resp. (D, V, Vinv) keeping
// U*A*V = D and U*Uinv = I, V*Vinv = I invariant throughout.
struct Worker {
  Mat D, U, Ui, V, Vi;

  explicit Worker(const Mat& A)
      : D(A),
        U(Mat::identity(A.rows())),
        Ui(Mat::identity(A.rows())),
        V(Mat::identity(A.cols())),
        Vi(Mat::identity(A.cols())) {}

  void row_add(int i, int j, const Int& c) {  // row_i += c * row_j
    for (int k = 0; k < D.cols(); ++k) D(i, k) += c * D(j, k);
    for (int k = 0; k < U.cols(); ++k) U(i, k) += c * U(j, k);
    for (int k = 0; k < Ui.rows(); ++k) Ui(k, j) -= c * Ui(k, i);
  }
  void row_swap(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < D.cols(); ++k) std::swap(D(i, k), D(j, k));
    for (int k = 0; k < U.cols(); ++k) std::swap(U(i, k), U(j, k));
    for (int k = 0; k < Ui.rows(); ++k) std::swap(Ui(k, i), Ui(k, j));
  }
  void row_negate(int i) {
    for (int k = 0; k < D.cols(); ++k) D(i, k) = -D(i, k);
    for (int k = 0; k < U.cols(); ++k) U(i, k) = -U(i, k);
    for (int k = 0; k < Ui.rows(); ++k) Ui(k, i) = -Ui(k, i);
  }
  void col_add(int j, int i, const Int& c) {  // col_j += c * col_i
    for (int k = 0; k < D.rows(); ++k) D(k, j) += c * D(k, i);
    for (int k = 0; k < V.rows(); ++k) V(k, j) += c * V(k, i);
    for (int k = 0; k < Vi.cols(); ++k) Vi(i, k) -= c * Vi(j, k);
  }
  void col_swap(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < D.rows(); ++k) std::swap(D(k, i), D(k, j));
    for (int k = 0; k < V.rows(); ++k) std::swap(V(k, i), V(k, j));
    for (int k = 0; k < Vi.cols(); ++k) std::swap(Vi(i, k), Vi(j, k));
  }
  void col_negate(int j) {
    for (int k = 0; k < D.rows(); ++k) D(k, j) = -D(k, j);
    for (int k = 0; k < V.rows(); ++k) V(k, j) = -V(k, j);
    for (int k = 0; k < Vi.cols(); ++k) Vi(j, k) = -Vi(j, k);
  }
};

}  // namespace

SmithForm smith_normal_form(const Mat& A) {
  Worker w(A);
  const int m = A.rows(), n = A.cols();
  const int lim = std::min(m, n);

  for (int t = 0; t < lim; ++t) {
    // locate a nonzero entry of minimal absolute value in the remaining block
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        if (w.D(i, j) == 0) continue;
        Int a = iabs(w.D(i, j));
        if (pi < 0 || a < best) best = a, pi = i, pj = j;
      }
    if (pi < 0) break;
    w.row_swap(t, pi);
    w.col_swap(t, pj);

    for (;;) {
      // clear column t below the pivot
      bool restart = false;
      for (int i = t + 1; i < m && !restart; ++i) {
        if (w.D(i, t) == 0) continue;
        Int q = w.D(i, t) / w.D(t, t);
        w.row_add(i, t, -q);
        if (w.D(i, t) != 0) {  // remainder became the smaller pivot
          w.row_swap(t, i);
          restart = true;
        }
      }
      if (restart) continue;
      // clear row t to the right of the pivot
      for (int j = t + 1; j < n && !restart; ++j) {
        if (w.D(t, j) == 0) continue;
        Int q = w.D(t, j) / w.D(t, t);
        w.col_add(j, t, -q);
        if (w.D(t, j) != 0) {
          w.col_swap(t, j);
          restart = true;
        }
      }
      if (restart) continue;
      // pivot must divide every remaining entry for the divisor chain
      bool fixed = false;
      for (int i = t + 1; i < m && !fixed; ++i)
        for (int j = t + 1; j < n && !fixed; ++j)
          if (w.D(i, j) % w.D(t, t) != 0) {
            w.row_add(t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (w.D(t, t) < 0) w.row_negate(t);
  }

  SmithForm S;
  S.U = w.U;
  S.Uinv = w.Ui;
  S.V = w.V;
  S.Vinv = w.Vi;
  S.D = w.D;
  for (int t = 0; t < lim; ++t) {
    if (w.D(t, t) == 0) break;
    S.diag.push_back(w.D(t, t));
  }
  S.rank = (int)S.diag.size();
  return S;
}

Mat kernel_basis(const Mat& A) {
  SmithForm S = smith_normal_form(A);
  int n = A.cols();
  Mat K(n, n - S.rank);
  for (int j = S.rank; j < n; ++j)
    for (int i = 0; i < n; ++i) K(i, j - S.rank) = S.V(i, j);
  return K;
}

std::optional<Vec> solve(const SmithForm& S, const Vec& b) {
  int m = S.D.rows(), n = S.D.cols();
  if ((int)b.size() != m) throw std::invalid_argument("solve: rhs size mismatch");
  Vec y = S.U * b;
  Vec x(n, Int(0));
  for (int i = 0; i < m; ++i) {
    if (i < S.rank) {
      if (y[i] % S.diag[i] != 0) return std::nullopt;
      x[i] = y[i] / S.diag[i];
    } else if (y[i] != 0) {
      return std::nullopt;
    }
  }
  return S.V * x;
}

std::optional<Vec> solve(const Mat& A, const Vec& b) {
  return solve(smith_normal_form(A), b);
}

bool in_image(const Mat& A, const Vec& b) { return solve(A, b).has_value(); }

std::optional<Mat> solve_matrix(const Mat& A, const Mat& B) {
  if (A.rows() != B.rows()) throw std::invalid_argument("solve_matrix: shape mismatch");
  SmithForm S = smith_normal_form(A);
  Mat X(A.cols(), B.cols());
  for (int j = 0; j < B.cols(); ++j) {
    auto x = solve(S, B.col(j));
    if (!x) return std::nullopt;
    X.set_col(j, *x);
  }
  return X;
}

}  // namespace eqalg
