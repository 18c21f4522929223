#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "liftproj/errors.hpp"

namespace liftproj {

inline constexpr double kPsdTol = 1e-9;

/// Dense rectangular matrix, row-major doubles.
struct Matrix {
  int rows = 0, cols = 0;
  std::vector<double> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}

  double& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  double at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static Matrix identity(int n);
  Matrix transposed() const;
};

Matrix matmul(const Matrix& A, const Matrix& B);

/// Dense symmetric matrix; construction symmetrizes so entries[i][j] ==
/// entries[j][i] holds exactly.
struct SymMatrix {
  int dim = 0;
  std::vector<double> a;  // row-major, full storage

  SymMatrix() = default;
  explicit SymMatrix(int d) : dim(d), a(static_cast<size_t>(d) * d, 0.0) {}

  double& at(int i, int j) { return a[static_cast<size_t>(i) * dim + j]; }
  double at(int i, int j) const { return a[static_cast<size_t>(i) * dim + j]; }

  /// Set both (i,j) and (j,i).
  void set(int i, int j, double v) {
    at(i, j) = v;
    at(j, i) = v;
  }

  /// Average a raw square matrix with its transpose.
  static SymMatrix symmetrized(const Matrix& m);
  static SymMatrix identity(int n);
};

/// Full spectrum of a symmetric matrix, ascending.
struct EigenResult {
  std::vector<double> values;
  double min() const { return values.front(); }
  double max() const { return values.back(); }
};

EigenResult eigenvalues(const SymMatrix& A);

/// lambda_min >= -tol * max(1, |lambda_max|).
bool is_psd(const SymMatrix& A, double tol = kPsdTol);
/// lambda_min > +tol * max(1, |lambda_max|).
bool is_pd(const SymMatrix& A, double tol = kPsdTol);

/// Smallest eigenvalue of the pencil A x = lambda B x with B positive
/// definite.  Used for one-shot thresholds of pencils A - rho*B.
double pencil_min_eigenvalue(const SymMatrix& A, const SymMatrix& B);

/// L * A * L^T, re-symmetrized.
SymMatrix congruence(const Matrix& L, const SymMatrix& A);

double quadratic_form(std::span<const double> x, const SymMatrix& A);

/// Dense CSV, one row per line, 17 significant digits.
void write_csv(std::ostream& os, const Matrix& m);
void write_csv(std::ostream& os, const SymMatrix& m);

/// Canonical number formatting used in all text output (%.17g).
std::string format_double(double v);

/// Set the worker-thread count used by the numerical backend.
void set_num_threads(int n);

}  // namespace liftproj
