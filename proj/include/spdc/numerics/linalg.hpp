#ifndef SPDC_NUMERICS_LINALG_HPP
#define SPDC_NUMERICS_LINALG_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace spdc::numerics {

// Dense real symmetric matrix, row-major.
class SymMatrix {
public:
  SymMatrix() = default;
  explicit SymMatrix(size_t n) : n_(n), a_(n * n, 0.0) {}

  size_t dim() const { return n_; }
  double& operator()(size_t i, size_t j) { return a_[i * n_ + j]; }
  double operator()(size_t i, size_t j) const { return a_[i * n_ + j]; }
  const std::vector<double>& data() const { return a_; }
  std::vector<double>& data() { return a_; }

  double max_abs() const;
  double max_asymmetry() const; // max |a_ij - a_ji|

private:
  size_t n_ = 0;
  std::vector<double> a_;
};

struct EigenSym {
  std::vector<double> values;
  std::vector<double> vectors; // column k = eigenvector k, row-major n x n
};

// Cyclic Jacobi for real symmetric matrices. Reconstruction error
// ||Q L Q^T - A|| stays near machine precision for the sizes used here.
EigenSym eigen_symmetric(const SymMatrix& a);

// 2x2 complex matrices for the ring propagation algebra.
struct Mat2 {
  std::complex<double> a, b, c, d; // [[a, b], [c, d]]

  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  Mat2 operator*(std::complex<double> s) const { return {a * s, b * s, c * s, d * s}; }
  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  std::complex<double> det() const { return a * d - b * c; }
  double max_abs() const;
};

Mat2 inverse(const Mat2& m);

// Matrix exponential by scaling-and-squaring with a Taylor kernel; relative
// element error below 1e-12 for the norms that occur in the ring model.
Mat2 expm(const Mat2& m);

} // namespace spdc::numerics

#endif
