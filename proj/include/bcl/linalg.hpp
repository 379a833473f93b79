#pragma once

#include <cstddef>
#include <vector>

#include "bcl/common.hpp"

namespace bcl {

using Vec = std::vector<double>;

// Dense row-major matrix. Everything in this project is small (<= ~32x32),
// so a flat vector with bounds left to the caller is all we need.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;

  Mat() = default;
  Mat(int r, int c, double fill = 0.0) : rows(r), cols(c), a(size_t(r) * c, fill) {}

  double& operator()(int i, int j) { return a[size_t(i) * cols + j]; }
  double operator()(int i, int j) const { return a[size_t(i) * cols + j]; }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }
};

Mat operator*(const Mat& x, const Mat& y);
Mat transpose(const Mat& m);
Vec matvec(const Mat& m, const Vec& v);

double dot(const Vec& x, const Vec& y);
double norm(const Vec& x);
Vec normalized(const Vec& x);
double max_abs(const Mat& m);
double max_abs_diff(const Mat& x, const Mat& y);

// Solves A x = b by Gaussian elimination with partial pivoting.
Vec solve(Mat A, Vec b);
Mat inverse(const Mat& A);

// Eigen-decomposition of a symmetric matrix.
struct SymSpectrum {
  Vec eigenvalues;   // ascending
  Mat eigenvectors;  // orthonormal columns, same order
};

// Cyclic Jacobi rotations; iteration cap 100 sweeps. Throws NotSymmetric if
// max|A - A^T| > 1e-10 * (1 + max|A|), NoConvergence past the sweep cap.
// Eigenvector signs are canonicalized (largest-magnitude entry positive) so
// identical input gives identical output.
SymSpectrum sym_eigen(const Mat& matrix);

// Eigenvalues of the pencil (A, G), i.e. of G^{-1}A for symmetric A and
// symmetric positive definite G. Used for shape operators in non-orthonormal
// coordinate bases.
SymSpectrum sym_eigen_generalized(const Mat& A, const Mat& G);

// Orthonormal coframe W (rows are covectors) for a metric G, lower triangular
// in coordinate order with positive diagonal: G = W^T W. This is what
// Gram-Schmidt on the coordinate basis in descending index order produces,
// and matches the connection-metric coframes used throughout.
Mat coframe_from_metric(const Mat& G);

// Columns form an orthonormal basis of the hyperplane orthogonal to unit u
// (Householder completion); deterministic in u.
Mat orthonormal_complement(const Vec& u);

}  // namespace bcl
