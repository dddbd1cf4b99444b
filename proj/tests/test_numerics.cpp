#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spdc/error.hpp"

#include "spdc/numerics/elliptic.hpp"
#include "spdc/numerics/fft.hpp"
#include "spdc/numerics/linalg.hpp"
#include "spdc/numerics/ode.hpp"
#include "spdc/numerics/quadrature.hpp"
#include "spdc/numerics/rng.hpp"

#include <cmath>
#include <complex>
#include <numeric>

using namespace spdc::numerics;

TEST_CASE("adaptive quadrature on known integrals") {
  auto res = integrate([](double x) { return std::sin(x); }, 0.0, M_PI);
  CHECK(res.value == doctest::Approx(2.0).epsilon(1e-10));

  // oscillatory
  auto osc = integrate([](double x) { return std::cos(40.0 * x); }, 0.0, 1.0,
                       {.rel_tol = 1e-10, .abs_tol = 1e-14, .max_intervals = 4000});
  CHECK(osc.value == doctest::Approx(std::sin(40.0) / 40.0).epsilon(1e-9));

  // integrable endpoint behaviour after substitution x = u^2
  auto root = integrate([](double u) { return 2.0; }, 0.0, 1.0);
  CHECK(root.value == doctest::Approx(2.0));
}

TEST_CASE("quadrature throws when the tolerance cannot be met") {
  // pathological: rapidly oscillating with max_intervals too small
  CHECK_THROWS_AS(integrate_or_throw([](double x) { return std::sin(1e6 * x * x); }, 0.0, 10.0,
                                     1e-12, {}, 4),
                  spdc::Error);
}

TEST_CASE("dormand-prince reproduces exp and circular motion") {
  auto sol = integrate_ode(
      [](double, const std::vector<double>& y, std::vector<double>& dy) { dy[0] = y[0]; },
      {1.0}, 0.0, 2.0, {.rel_tol = 1e-11, .abs_tol = 1e-13});
  CHECK(sol.y.back()[0] == doctest::Approx(std::exp(2.0)).epsilon(1e-9));

  auto circ = integrate_ode(
      [](double, const std::vector<double>& y, std::vector<double>& dy) {
        dy[0] = y[1];
        dy[1] = -y[0];
      },
      {1.0, 0.0}, 0.0, 2.0 * M_PI, {.rel_tol = 1e-11, .abs_tol = 1e-13});
  CHECK(circ.y.back()[0] == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(std::abs(circ.y.back()[1]) < 1e-8);
}

TEST_CASE("carlson R_F against closed forms") {
  // K(0) = pi/2
  CHECK(elliptic_k(0.0).real() == doctest::Approx(M_PI / 2.0).epsilon(1e-12));
  // K(1/2) = 1.85407467730137...
  CHECK(elliptic_k(0.5).real() == doctest::Approx(1.8540746773013719).epsilon(1e-12));
  // R_F(x,x,x) = 1/sqrt(x)
  const cplx v = carlson_rf(2.0, 2.0, 2.0);
  CHECK(v.real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(std::abs(v.imag()) < 1e-14);
  // F(phi, 0) = phi
  CHECK(elliptic_f(0.7, 0.0).real() == doctest::Approx(0.7).epsilon(1e-12));
  // complex m > 1 branch stays finite
  const cplx k2 = elliptic_k(2.0);
  CHECK(std::isfinite(k2.real()));
  CHECK(std::isfinite(k2.imag()));
}

TEST_CASE("elliptic F against direct quadrature") {
  const double m = 0.65, phi = 1.1;
  const double direct = integrate_or_throw(
      [m](double t) { return 1.0 / std::sqrt(1.0 - m * std::sin(t) * std::sin(t)); }, 0.0, phi,
      1e-12);
  CHECK(elliptic_f(phi, m).real() == doctest::Approx(direct).epsilon(1e-10));
}

TEST_CASE("jacobi eigensolver reconstructs the matrix") {
  const size_t n = 24;
  Rng rng(7);
  SymMatrix a(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      const double v = rng.normal();
      a(i, j) = v;
      a(j, i) = v;
    }
  const EigenSym eig = eigen_symmetric(a);

  // || Q L Q^T - A ||_max <= 1e-10 ||A||_max
  double worst = 0.0;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      double rec = 0.0;
      for (size_t k = 0; k < n; ++k)
        rec += eig.vectors[i * n + k] * eig.values[k] * eig.vectors[j * n + k];
      worst = std::max(worst, std::abs(rec - a(i, j)));
    }
  }
  CHECK(worst <= 1e-10 * a.max_abs());

  // trace preserved
  double tr_a = 0.0, tr_l = 0.0;
  for (size_t i = 0; i < n; ++i) {
    tr_a += a(i, i);
    tr_l += eig.values[i];
  }
  CHECK(tr_a == doctest::Approx(tr_l).epsilon(1e-12));
}

TEST_CASE("2x2 matrix exponential") {
  // diagonal case
  Mat2 d{cplx(0.3, 0.0), 0.0, 0.0, cplx(-0.7, 0.2)};
  Mat2 e = expm(d);
  CHECK(std::abs(e.a - std::exp(cplx(0.3, 0.0))) < 1e-14);
  CHECK(std::abs(e.d - std::exp(cplx(-0.7, 0.2))) < 1e-14);
  CHECK(std::abs(e.b) < 1e-15);

  // nilpotent: exp([[0,1],[0,0]]) = [[1,1],[0,1]]
  Mat2 nl{0.0, 1.0, 0.0, 0.0};
  Mat2 en = expm(nl);
  CHECK(std::abs(en.a - 1.0) < 1e-14);
  CHECK(std::abs(en.b - 1.0) < 1e-14);
  CHECK(std::abs(en.c) < 1e-15);

  // hyperbolic rotation: exp(r [[0,-1],[-1,0]]) = [[cosh r, -sinh r], [-sinh r, cosh r]]
  const double r = 0.83;
  Mat2 h{0.0, -r, -r, 0.0};
  Mat2 eh = expm(h);
  CHECK(std::abs(eh.a - std::cosh(r)) < 1e-13);
  CHECK(std::abs(eh.b + std::sinh(r)) < 1e-13);
}

TEST_CASE("fft: parseval and delta transform") {
  const size_t n = 1024;
  Rng rng(11);
  std::vector<std::complex<double>> x(n);
  for (auto& v : x) v = {rng.normal(), rng.normal()};
  std::vector<std::complex<double>> f = x;
  fft_radix2(f, -1);
  double px = 0.0, pf = 0.0;
  for (size_t i = 0; i < n; ++i) {
    px += std::norm(x[i]);
    pf += std::norm(f[i]);
  }
  CHECK(pf == doctest::Approx(px * n).epsilon(1e-10));

  std::vector<std::complex<double>> delta(n, 0.0);
  delta[3] = 1.0;
  fft_radix2(delta, -1);
  for (size_t k = 0; k < n; k += 97)
    CHECK(std::abs(delta[k]) == doctest::Approx(1.0).epsilon(1e-12));

  // round trip
  fft_radix2(f, +1);
  for (size_t i = 0; i < n; i += 131)
    CHECK(std::abs(f[i] / static_cast<double>(n) - x[i]) < 1e-12);
}

TEST_CASE("rng determinism and moments") {
  Rng a(123), b(123);
  for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());

  Rng r(42);
  const long n = 200000;
  double sum = 0.0, sum2 = 0.0;
  for (long i = 0; i < n; ++i) {
    const double v = r.normal();
    sum += v;
    sum2 += v * v;
  }
  CHECK(std::abs(sum / n) < 0.01);
  CHECK(std::abs(sum2 / n - 1.0) < 0.02);

  // Poisson mean/variance at small and large means
  for (double mean : {3.0, 800.0, 2.0e6}) {
    double s = 0.0, s2 = 0.0;
    const long trials = mean > 1e5 ? 400 : 20000;
    for (long i = 0; i < trials; ++i) {
      const double k = static_cast<double>(r.poisson(mean));
      s += k;
      s2 += k * k;
    }
    const double m = s / trials;
    const double var = s2 / trials - m * m;
    CHECK(m == doctest::Approx(mean).epsilon(mean > 1e5 ? 5e-4 : 5e-2));
    CHECK(var == doctest::Approx(mean).epsilon(0.25));
  }
}
