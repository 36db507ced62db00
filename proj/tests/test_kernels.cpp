#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "casimir/kernels/kernels.hpp"
#include "casimir/linalg/matrix.hpp"

using namespace casimir;

namespace {

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

double max_rel_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double scale = 1.0, worst = 0.0;
  for (double x : a) scale = std::max(scale, std::abs(x));
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst / scale;
}

}  // namespace

TEST_CASE("active kernel table is complete") {
  const auto& k = kernels::active_kernels();
  CHECK(k.gemm != nullptr);
  CHECK(k.dot != nullptr);
  CHECK(k.axpy != nullptr);
  MESSAGE("active kernels: " << std::string(k.name));
}

TEST_CASE("AVX2 kernels match the scalar reference") {
  const kernels::KernelTable* vec = kernels::avx2_kernels();
  if (vec == nullptr) {
    MESSAGE("AVX2 kernels unavailable; equivalence test skipped");
    return;
  }
  const kernels::KernelTable& ref = kernels::scalar_kernels();
  std::mt19937_64 rng(42);
  const std::size_t shapes[][3] = {{1, 1, 1}, {3, 5, 7}, {4, 4, 4}, {8, 8, 8}, {13, 17, 9}, {33, 31, 29}, {64, 65, 66}};
  for (const auto& s : shapes) {
    const std::size_t m = s[0], n = s[1], k = s[2];
    const auto a = random_vector(rng, m * k);
    const auto b = random_vector(rng, k * n);
    std::vector<double> c_ref(m * n, 0.25), c_vec(m * n, 0.25);
    ref.gemm(m, n, k, a.data(), k, b.data(), n, c_ref.data(), n);
    vec->gemm(m, n, k, a.data(), k, b.data(), n, c_vec.data(), n);
    CHECK(max_rel_diff(c_ref, c_vec) < 1e-13);
  }
  for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 16u, 31u, 1000u, 1027u}) {
    const auto x = random_vector(rng, n);
    const auto y = random_vector(rng, n);
    CHECK(std::abs(ref.dot(x.data(), y.data(), n) - vec->dot(x.data(), y.data(), n)) < 1e-12 * (1.0 + n));
    auto y_ref = y, y_vec = y;
    ref.axpy(-0.7, x.data(), y_ref.data(), n);
    vec->axpy(-0.7, x.data(), y_vec.data(), n);
    CHECK(max_rel_diff(y_ref, y_vec) < 1e-15);
  }
}

TEST_CASE("gemm honours leading dimensions") {
  const kernels::KernelTable* tables[] = {&kernels::scalar_kernels(), kernels::avx2_kernels()};
  for (const auto* t : tables) {
    if (t == nullptr) continue;
    // 2x2 blocks embedded in 3-wide storage
    const double a[] = {1, 2, -9, 3, 4, -9};
    const double b[] = {5, 6, -9, 7, 8, -9};
    double c[] = {0, 0, 100, 0, 0, 100};
    t->gemm(2, 2, 2, a, 3, b, 3, c, 3);
    CHECK(c[0] == 19);
    CHECK(c[1] == 22);
    CHECK(c[2] == 100);
    CHECK(c[3] == 43);
    CHECK(c[4] == 50);
  }
}

TEST_CASE("matrix product against a naive triple loop") {
  std::mt19937_64 rng(1);
  linalg::Matrix a(7, 5), b(5, 6);
  for (auto& x : a.data()) x = std::uniform_real_distribution<double>(-2, 2)(rng);
  for (auto& x : b.data()) x = std::uniform_real_distribution<double>(-2, 2)(rng);
  const linalg::Matrix c = linalg::multiply(a, b);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      double s = 0;
      for (std::size_t k = 0; k < 5; ++k) s += a(i, k) * b(k, j);
      CHECK(c(i, j) == doctest::Approx(s).epsilon(1e-14));
    }
  const linalg::Matrix at = linalg::transpose(a);
  CHECK(at(3, 6) == a(6, 3));
  const std::vector<double> x{1, -1, 2, 0, 0.5};
  const auto y = linalg::multiply(a, x);
  for (std::size_t i = 0; i < 7; ++i) {
    double s = 0;
    for (std::size_t k = 0; k < 5; ++k) s += a(i, k) * x[k];
    CHECK(y[i] == doctest::Approx(s).epsilon(1e-14));
  }
}

TEST_CASE("symmetric eigen-decomposition reconstructs the matrix") {
  std::mt19937_64 rng(9);
  const std::size_t n = 12;
  linalg::Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) a(i, j) = a(j, i) = std::uniform_real_distribution<double>(-1, 1)(rng);
  const auto eig = linalg::symmetric_eigen(a);
  for (std::size_t k = 1; k < n; ++k) CHECK(eig.values[k] >= eig.values[k - 1]);
  linalg::Matrix d(n, n);
  for (std::size_t k = 0; k < n; ++k) d(k, k) = eig.values[k];
  const linalg::Matrix r = linalg::multiply(linalg::multiply(eig.vectors, d), linalg::transpose(eig.vectors));
  CHECK(linalg::max_abs_difference(r, a) < 1e-12);
  const linalg::Matrix o = linalg::multiply(linalg::transpose(eig.vectors), eig.vectors);
  CHECK(linalg::max_abs_difference(o, linalg::Matrix::identity(n)) < 1e-12);
}
