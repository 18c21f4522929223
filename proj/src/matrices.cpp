#include "liftproj/matrices.hpp"

#include <cblas.h>
#include <lapacke.h>

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

extern "C" void openblas_set_num_threads(int);

namespace liftproj {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix matmul(const Matrix& A, const Matrix& B) {
  if (A.cols != B.rows) throw ArgumentError("matmul: incompatible shapes");
  Matrix C(A.rows, B.cols);
  if (A.rows == 0 || B.cols == 0 || A.cols == 0) return C;
  cblas_dgemm(CblasRowMajor, CblasNoTrans, CblasNoTrans, A.rows, B.cols, A.cols, 1.0,
              A.a.data(), A.cols, B.a.data(), B.cols, 0.0, C.a.data(), C.cols);
  return C;
}

SymMatrix SymMatrix::symmetrized(const Matrix& m) {
  if (m.rows != m.cols) throw ArgumentError("symmetrized: matrix not square");
  SymMatrix s(m.rows);
  for (int i = 0; i < m.rows; ++i) {
    s.at(i, i) = m.at(i, i);
    for (int j = i + 1; j < m.rows; ++j) {
      double v = 0.5 * (m.at(i, j) + m.at(j, i));
      s.at(i, j) = v;
      s.at(j, i) = v;
    }
  }
  return s;
}

SymMatrix SymMatrix::identity(int n) {
  SymMatrix s(n);
  for (int i = 0; i < n; ++i) s.at(i, i) = 1.0;
  return s;
}

static void check_finite(const SymMatrix& A) {
  for (double v : A.a)
    if (!std::isfinite(v)) throw ArgumentError("eigenvalues: non-finite entry");
}

EigenResult eigenvalues(const SymMatrix& A) {
  if (A.dim < 1) throw ArgumentError("eigenvalues: empty matrix");
  check_finite(A);
  std::vector<double> buf = A.a;
  std::vector<double> w(A.dim);
  int info = LAPACKE_dsyevd(LAPACK_ROW_MAJOR, 'N', 'U', A.dim, buf.data(), A.dim, w.data());
  if (info != 0) throw std::runtime_error("dsyevd failed, info=" + std::to_string(info));
  return EigenResult{std::move(w)};
}

bool is_psd(const SymMatrix& A, double tol) {
  if (tol < 0) throw ArgumentError("is_psd: negative tolerance");
  EigenResult e = eigenvalues(A);
  return e.min() >= -tol * std::max(1.0, std::fabs(e.max()));
}

bool is_pd(const SymMatrix& A, double tol) {
  if (tol < 0) throw ArgumentError("is_pd: negative tolerance");
  EigenResult e = eigenvalues(A);
  return e.min() > tol * std::max(1.0, std::fabs(e.max()));
}

double pencil_min_eigenvalue(const SymMatrix& A, const SymMatrix& B) {
  if (A.dim != B.dim) throw ArgumentError("pencil: dimension mismatch");
  check_finite(A);
  check_finite(B);
  std::vector<double> ab = A.a, bb = B.a;
  std::vector<double> w(A.dim);
  int info = LAPACKE_dsygvd(LAPACK_ROW_MAJOR, 1, 'N', 'U', A.dim, ab.data(), A.dim, bb.data(),
                            A.dim, w.data());
  if (info != 0) throw std::runtime_error("dsygvd failed, info=" + std::to_string(info));
  return w.front();
}

SymMatrix congruence(const Matrix& L, const SymMatrix& A) {
  if (L.cols != A.dim) throw ArgumentError("congruence: L.cols must equal A.dim");
  Matrix am(A.dim, A.dim);
  am.a = A.a;
  Matrix t = matmul(L, am);
  Matrix r = matmul(t, L.transposed());
  return SymMatrix::symmetrized(r);
}

double quadratic_form(std::span<const double> x, const SymMatrix& A) {
  if (static_cast<int>(x.size()) != A.dim)
    throw ArgumentError("quadratic_form: length mismatch");
  double total = 0.0;
  for (int i = 0; i < A.dim; ++i) {
    double row = 0.0;
    for (int j = 0; j < A.dim; ++j) row += A.at(i, j) * x[j];
    total += x[i] * row;
  }
  return total;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

static void write_rows(std::ostream& os, int rows, int cols, const std::vector<double>& a) {
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (j) os << ',';
      os << format_double(a[static_cast<size_t>(i) * cols + j]);
    }
    os << '\n';
  }
}

void write_csv(std::ostream& os, const Matrix& m) { write_rows(os, m.rows, m.cols, m.a); }
void write_csv(std::ostream& os, const SymMatrix& m) { write_rows(os, m.dim, m.dim, m.a); }

void set_num_threads(int n) { openblas_set_num_threads(n < 1 ? 1 : n); }

}  // namespace liftproj
