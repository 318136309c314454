#include "theta_guide/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "theta_guide/simd.hpp"

namespace theta_guide {

Matrix Matrix::identity(int n, double diag) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = diag;
  return m;
}

void Matrix::fill(double v) { std::fill(data_.begin(), data_.end(), v); }

void Matrix::add_scaled(double alpha, const Matrix& other) { simd::axpy(alpha, other.flat(), flat()); }

void Matrix::symmetrize() {
  for (int i = 0; i < rows_; ++i) {
    for (int j = i + 1; j < cols_; ++j) {
      const double avg = 0.5 * ((*this)(i, j) + (*this)(j, i));
      (*this)(i, j) = avg;
      (*this)(j, i) = avg;
    }
  }
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: dimension mismatch");
  Matrix c(a.rows(), b.cols());
  const auto& k = simd::active();
  for (int i = 0; i < a.rows(); ++i) {
    k.gemv_acc(1.0, a.row(i).data(), b.data(), static_cast<std::size_t>(b.cols()), static_cast<std::size_t>(a.cols()),
               c.row(i).data(), static_cast<std::size_t>(b.cols()));
  }
  return c;
}

Matrix multiply_transposed(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("multiply_transposed: dimension mismatch");
  Matrix c(a.rows(), b.rows());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < b.rows(); ++j) c(i, j) = simd::dot(a.row(i), b.row(j));
  }
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

double frobenius_inner(const Matrix& a, const Matrix& b) { return simd::dot(a.flat(), b.flat()); }

double frobenius_norm(const Matrix& a) { return std::sqrt(frobenius_inner(a, a)); }

double max_abs(const Matrix& a) {
  double m = 0.0;
  for (double v : a.flat()) m = std::max(m, std::abs(v));
  return m;
}

double trace(const Matrix& a) {
  double t = 0.0;
  for (int i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
  return t;
}

bool cholesky(const Matrix& a, Matrix& l, double min_pivot) {
  const int n = a.rows();
  if (l.rows() != n || l.cols() != n) l = Matrix(n, n);
  const auto& k = simd::active();
  for (int i = 0; i < n; ++i) {
    double* li = l.row(i).data();
    for (int j = 0; j <= i; ++j) {
      const double s = a(i, j) - k.dot(li, l.row(j).data(), static_cast<std::size_t>(j));
      if (j < i) {
        li[j] = s / l(j, j);
      } else {
        if (!(s > min_pivot)) return false;
        li[i] = std::sqrt(s);
      }
    }
    for (int j = i + 1; j < n; ++j) li[j] = 0.0;
  }
  return true;
}

void cholesky_solve(const Matrix& l, std::span<double> b) {
  const int n = l.rows();
  const auto& k = simd::active();
  for (int i = 0; i < n; ++i) {
    b[static_cast<std::size_t>(i)] =
        (b[static_cast<std::size_t>(i)] - k.dot(l.row(i).data(), b.data(), static_cast<std::size_t>(i))) / l(i, i);
  }
  for (int i = n - 1; i >= 0; --i) {
    const double xi = b[static_cast<std::size_t>(i)] / l(i, i);
    b[static_cast<std::size_t>(i)] = xi;
    k.axpy(-xi, l.row(i).data(), b.data(), static_cast<std::size_t>(i));
  }
}

Matrix lower_triangular_inverse(const Matrix& l) {
  const int n = l.rows();
  Matrix inv(n, n);
  const auto& k = simd::active();
  for (int i = 0; i < n; ++i) {
    const double d = 1.0 / l(i, i);
    double* out = inv.row(i).data();
    // row i of inv: -(1/l_ii) * sum_{m<i} l(i,m) inv.row(m), restricted to columns < i
    k.gemv_acc(-d, l.row(i).data(), inv.data(), static_cast<std::size_t>(n), static_cast<std::size_t>(i), out,
               static_cast<std::size_t>(i));
    out[i] = d;
  }
  return inv;
}

Matrix inverse_from_cholesky(const Matrix& l) {
  const Matrix linv = lower_triangular_inverse(l);
  Matrix inv = multiply(transpose(linv), linv);
  inv.symmetrize();
  return inv;
}

namespace {

// Householder reduction to tridiagonal form; d receives the diagonal and
// e the subdiagonal in e[1..n-1].
void tridiagonalize(Matrix& a, std::vector<double>& d, std::vector<double>& e) {
  const int n = a.rows();
  d.assign(static_cast<std::size_t>(n), 0.0);
  e.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = n - 1; i > 0; --i) {
    const int l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (int k = 0; k <= l; ++k) scale += std::abs(a(i, k));
      if (scale == 0.0) {
        e[static_cast<std::size_t>(i)] = a(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          a(i, k) /= scale;
          h += a(i, k) * a(i, k);
        }
        double f = a(i, l);
        const double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[static_cast<std::size_t>(i)] = scale * g;
        h -= f * g;
        a(i, l) = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          double gj = 0.0;
          for (int k = 0; k <= j; ++k) gj += a(j, k) * a(i, k);
          for (int k = j + 1; k <= l; ++k) gj += a(k, j) * a(i, k);
          e[static_cast<std::size_t>(j)] = gj / h;
          f += e[static_cast<std::size_t>(j)] * a(i, j);
        }
        const double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          const double fj = a(i, j);
          const double gj = e[static_cast<std::size_t>(j)] - hh * fj;
          e[static_cast<std::size_t>(j)] = gj;
          for (int k = 0; k <= j; ++k) a(j, k) -= fj * e[static_cast<std::size_t>(k)] + gj * a(i, k);
        }
      }
    } else {
      e[static_cast<std::size_t>(i)] = a(i, l);
    }
    d[static_cast<std::size_t>(i)] = h;
  }
  for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = a(i, i);
}

// Implicit QL on a symmetric tridiagonal matrix, eigenvalues only.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e) {
  const int n = static_cast<int>(d.size());
  for (int i = 1; i < n; ++i) e[static_cast<std::size_t>(i - 1)] = e[static_cast<std::size_t>(i)];
  if (n > 0) e[static_cast<std::size_t>(n - 1)] = 0.0;
  auto D = [&](int i) -> double& { return d[static_cast<std::size_t>(i)]; };
  auto E = [&](int i) -> double& { return e[static_cast<std::size_t>(i)]; };
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(D(m)) + std::abs(D(m + 1));
        if (std::abs(E(m)) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m != l) {
        if (++iter > 200) throw std::runtime_error("symmetric_eigenvalues: QL iteration did not converge");
        double g = (D(l + 1) - D(l)) / (2.0 * E(l));
        double r = std::hypot(g, 1.0);
        g = D(m) - D(l) + E(l) / (g + (g >= 0.0 ? std::abs(r) : -std::abs(r)));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        int i;
        bool underflow = false;
        for (i = m - 1; i >= l; --i) {
          double f = s * E(i);
          const double b = c * E(i);
          r = std::hypot(f, g);
          E(i + 1) = r;
          if (r == 0.0) {
            D(i + 1) -= p;
            E(m) = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = D(i + 1) - p;
          r = (D(i) - g) * s + 2.0 * c * b;
          p = s * r;
          D(i + 1) = g + p;
          g = c * r - b;
        }
        if (underflow) continue;
        D(l) -= p;
        E(l) = g;
        E(m) = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

std::vector<double> symmetric_eigenvalues(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("symmetric_eigenvalues: matrix not square");
  if (a.rows() == 0) return {};
  Matrix work = a;
  std::vector<double> d;
  std::vector<double> e;
  tridiagonalize(work, d, e);
  tridiagonal_ql(d, e);
  std::sort(d.begin(), d.end());
  return d;
}

double min_eigenvalue(const Matrix& a) {
  const auto ev = symmetric_eigenvalues(a);
  return ev.empty() ? 0.0 : ev.front();
}

}  // namespace theta_guide
