#include "bcl/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace bcl {

Mat operator*(const Mat& x, const Mat& y) {
  Mat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      double xik = x(i, k);
      if (xik == 0.0) continue;
      for (int j = 0; j < y.cols; ++j) r(i, j) += xik * y(k, j);
    }
  return r;
}

Mat transpose(const Mat& m) {
  Mat r(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r(j, i) = m(i, j);
  return r;
}

Vec matvec(const Mat& m, const Vec& v) {
  Vec r(m.rows, 0.0);
  for (int i = 0; i < m.rows; ++i) {
    double s = 0.0;
    for (int j = 0; j < m.cols; ++j) s += m(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

double dot(const Vec& x, const Vec& y) {
  double s = 0.0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

double norm(const Vec& x) { return std::sqrt(dot(x, x)); }

Vec normalized(const Vec& x) {
  double n = norm(x);
  Vec r(x);
  for (double& v : r) v /= n;
  return r;
}

double max_abs(const Mat& m) {
  double r = 0.0;
  for (double v : m.a) r = std::max(r, std::fabs(v));
  return r;
}

double max_abs_diff(const Mat& x, const Mat& y) {
  double r = 0.0;
  for (size_t i = 0; i < x.a.size(); ++i) r = std::max(r, std::fabs(x.a[i] - y.a[i]));
  return r;
}

Vec solve(Mat A, Vec b) {
  const int n = A.rows;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs(A(r, col)) > std::fabs(A(piv, col))) piv = r;
    if (std::fabs(A(piv, col)) < 1e-300) throw IllConditioned("singular matrix in solve");
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(A(piv, j), A(col, j));
      std::swap(b[piv], b[col]);
    }
    for (int r = col + 1; r < n; ++r) {
      double f = A(r, col) / A(col, col);
      if (f == 0.0) continue;
      for (int j = col; j < n; ++j) A(r, j) -= f * A(col, j);
      b[r] -= f * b[col];
    }
  }
  Vec x(n, 0.0);
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int j = i + 1; j < n; ++j) s -= A(i, j) * x[j];
    x[i] = s / A(i, i);
  }
  return x;
}

Mat inverse(const Mat& A) {
  const int n = A.rows;
  Mat inv(n, n);
  for (int j = 0; j < n; ++j) {
    Vec e(n, 0.0);
    e[j] = 1.0;
    Vec col = solve(A, e);
    for (int i = 0; i < n; ++i) inv(i, j) = col[i];
  }
  return inv;
}

SymSpectrum sym_eigen(const Mat& matrix) {
  const int n = matrix.rows;
  double scale = max_abs(matrix);
  double asym = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) asym = std::max(asym, std::fabs(matrix(i, j) - matrix(j, i)));
  if (asym > 1e-10 * (1.0 + scale)) throw NotSymmetric("max asymmetry " + std::to_string(asym));

  Mat A = matrix;
  // symmetrize so rotations see an exactly symmetric input
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double v = 0.5 * (A(i, j) + A(j, i));
      A(i, j) = A(j, i) = v;
    }
  Mat V = Mat::identity(n);

  const int max_sweeps = 100;
  const double tol = 1e-15 * (1.0 + scale);
  bool converged = (n <= 1);
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::fabs(A(p, q)));
    if (off <= tol) {
      converged = true;
      break;
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = A(p, q);
        if (std::fabs(apq) <= tol * 1e-2) continue;
        double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
        double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = A(k, p), akq = A(k, q);
          A(k, p) = c * akp - s * akq;
          A(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = A(p, k), aqk = A(q, k);
          A(p, k) = c * apk - s * aqk;
          A(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          double vkp = V(k, p), vkq = V(k, q);
          V(k, p) = c * vkp - s * vkq;
          V(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  if (!converged) {
    double off = 0.0;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::fabs(A(p, q)));
    if (off > 1e-11 * (1.0 + scale)) throw NoConvergence("jacobi off-diagonal " + std::to_string(off));
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return A(i, i) < A(j, j); });

  SymSpectrum out;
  out.eigenvalues.resize(n);
  out.eigenvectors = Mat(n, n);
  for (int j = 0; j < n; ++j) {
    int src = order[j];
    out.eigenvalues[j] = A(src, src);
    // canonical sign: largest-|.| component positive
    int imax = 0;
    for (int i = 1; i < n; ++i)
      if (std::fabs(V(i, src)) > std::fabs(V(imax, src))) imax = i;
    double sgn = V(imax, src) < 0.0 ? -1.0 : 1.0;
    for (int i = 0; i < n; ++i) out.eigenvectors(i, j) = sgn * V(i, src);
  }
  return out;
}

SymSpectrum sym_eigen_generalized(const Mat& A, const Mat& G) {
  SymSpectrum gs = sym_eigen(G);
  const int n = G.rows;
  for (double ev : gs.eigenvalues)
    if (ev <= 0.0) throw IllConditioned("generalized eigen: G not positive definite");
  // G^{-1/2} = V diag(1/sqrt(l)) V^T
  Mat gihalf(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k)
        s += gs.eigenvectors(i, k) * gs.eigenvectors(j, k) / std::sqrt(gs.eigenvalues[k]);
      gihalf(i, j) = s;
    }
  Mat B = gihalf * A * gihalf;
  // enforce symmetry lost to roundoff
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double v = 0.5 * (B(i, j) + B(j, i));
      B(i, j) = B(j, i) = v;
    }
  return sym_eigen(B);
}

Mat coframe_from_metric(const Mat& G) {
  const int n = G.rows;
  // G = W^T W with W lower triangular, positive diagonal. Peel rows from the
  // bottom: row d couples only to itself in column d.
  Mat W(n, n);
  Mat R = G;  // residual metric after removing processed rows
  for (int A = n - 1; A >= 0; --A) {
    double d = R(A, A);
    if (d <= 1e-300) throw IllConditioned("coframe: metric not positive definite");
    double wAA = std::sqrt(d);
    W(A, A) = wAA;
    for (int mu = 0; mu < A; ++mu) W(A, mu) = R(A, mu) / wAA;
    for (int mu = 0; mu <= A; ++mu)
      for (int nu = 0; nu <= A; ++nu) R(mu, nu) -= W(A, mu) * W(A, nu);
  }
  return W;
}

Mat orthonormal_complement(const Vec& u) {
  const int n = int(u.size());
  // Householder H = I - 2 w w^T with H e_n = +-u; drop the image of e_n.
  Vec w(u);
  double sign = u[n - 1] >= 0.0 ? 1.0 : -1.0;
  w[n - 1] += sign;  // reflects e_n to -sign*u
  double wn = norm(w);
  Mat Q(n, n - 1);
  if (wn < 1e-14) {
    for (int j = 0; j < n - 1; ++j) Q(j, j) = 1.0;
    return Q;
  }
  for (double& v : w) v /= wn;
  for (int j = 0; j < n - 1; ++j)
    for (int i = 0; i < n; ++i) Q(i, j) = (i == j ? 1.0 : 0.0) - 2.0 * w[i] * w[j];
  return Q;
}

}  // namespace bcl
