#include "spdc/numerics/linalg.hpp"

#include "spdc/error.hpp"

#include <algorithm>
#include <cmath>

namespace spdc::numerics {

double SymMatrix::max_abs() const {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

double SymMatrix::max_asymmetry() const {
  double m = 0.0;
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = i + 1; j < n_; ++j)
      m = std::max(m, std::abs((*this)(i, j) - (*this)(j, i)));
  return m;
}

EigenSym eigen_symmetric(const SymMatrix& a0) {
  const size_t n = a0.dim();
  std::vector<double> a = a0.data();
  std::vector<double> v(n * n, 0.0);
  for (size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  auto off = [&]() {
    double s = 0.0;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) s += a[i * n + j] * a[i * n + j];
    return s;
  };

  const double scale = a0.max_abs();
  const double tol = (scale > 0.0 ? scale : 1.0) * 1e-15;
  for (int sweep = 0; sweep < 100; ++sweep) {
    if (std::sqrt(2.0 * off()) <= tol * n) break;
    for (size_t p = 0; p < n; ++p) {
      for (size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (std::abs(apq) <= tol * 1e-2 / n) continue;
        const double app = a[p * n + p], aqq = a[q * n + q];
        const double theta = 0.5 * (aqq - app) / apq;
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double cth = 1.0 / std::sqrt(t * t + 1.0);
        const double sth = t * cth;
        for (size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p], akq = a[k * n + q];
          a[k * n + p] = cth * akp - sth * akq;
          a[k * n + q] = sth * akp + cth * akq;
        }
        for (size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k], aqk = a[q * n + k];
          a[p * n + k] = cth * apk - sth * aqk;
          a[q * n + k] = sth * apk + cth * aqk;
        }
        for (size_t k = 0; k < n; ++k) {
          const double vkp = v[k * n + p], vkq = v[k * n + q];
          v[k * n + p] = cth * vkp - sth * vkq;
          v[k * n + q] = sth * vkp + cth * vkq;
        }
      }
    }
  }

  EigenSym out;
  out.values.resize(n);
  for (size_t i = 0; i < n; ++i) out.values[i] = a[i * n + i];
  out.vectors = std::move(v);
  return out;
}

double Mat2::max_abs() const {
  return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
}

Mat2 inverse(const Mat2& m) {
  const std::complex<double> det = m.det();
  require(std::abs(det) > 0.0, Err::SingularDenominator, "2x2 matrix is singular");
  const std::complex<double> inv = 1.0 / det;
  return {m.d * inv, -m.b * inv, -m.c * inv, m.a * inv};
}

Mat2 expm(const Mat2& m) {
  // Scale so the max element magnitude is below 1/4, Taylor to machine
  // precision, then square back.
  int squarings = 0;
  double norm = m.max_abs();
  while (norm > 0.25 && squarings < 60) {
    norm *= 0.5;
    ++squarings;
  }
  const double scale = std::ldexp(1.0, -squarings);
  const Mat2 ms = m * scale;

  Mat2 sum = Mat2::identity();
  Mat2 term = Mat2::identity();
  for (int k = 1; k <= 24; ++k) {
    term = term * ms * (1.0 / k);
    sum = sum + term;
    if (term.max_abs() < 1e-18 * sum.max_abs()) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

} // namespace spdc::numerics
