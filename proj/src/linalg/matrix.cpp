#include "casimir/linalg/matrix.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "casimir/error.hpp"
#include "casimir/kernels/kernels.hpp"

namespace casimir::linalg {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw PreconditionError(std::string(what) + ": shape mismatch");
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same_shape(*this, o, "operator+=");
  kernels::active_kernels().axpy(1.0, o.data_.data(), data_.data(), data_.size());
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_same_shape(*this, o, "operator-=");
  kernels::active_kernels().axpy(-1.0, o.data_.data(), data_.data(), data_.size());
  return *this;
}

Matrix& Matrix::operator*=(double s) {
  for (double& v : data_) v *= s;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(double s, Matrix a) { return a *= s; }

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw PreconditionError("multiply: inner dimension mismatch");
  Matrix c(a.rows(), b.cols());
  kernels::active_kernels().gemm(a.rows(), b.cols(), a.cols(), a.data().data(), a.cols(), b.data().data(), b.cols(),
                                 c.data().data(), c.cols());
  return c;
}

std::vector<double> multiply(const Matrix& a, std::span<const double> x) {
  if (a.cols() != x.size()) throw PreconditionError("multiply: vector size mismatch");
  std::vector<double> y(a.rows());
  const auto& k = kernels::active_kernels();
  for (std::size_t i = 0; i < a.rows(); ++i) y[i] = k.dot(a.row(i).data(), x.data(), x.size());
  return y;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

double frobenius_inner(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "frobenius_inner");
  return kernels::active_kernels().dot(a.data().data(), b.data().data(), a.data().size());
}

double frobenius_norm(const Matrix& a) { return std::sqrt(frobenius_inner(a, a)); }

double max_abs(const Matrix& a) {
  double m = 0.0;
  for (double v : a.data()) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_difference(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "max_abs_difference");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

double dot(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw PreconditionError("dot: size mismatch");
  return kernels::active_kernels().dot(x.data(), y.data(), x.size());
}

double norm2(std::span<const double> x) { return std::sqrt(dot(x, x)); }

SymmetricEigen symmetric_eigen(const Matrix& a) {
  if (!a.square()) throw PreconditionError("symmetric_eigen: matrix is not square");
  const auto n = static_cast<Eigen::Index>(a.rows());
  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> view(a.data().data(), n, n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(view);
  if (solver.info() != Eigen::Success) throw NumericalError("symmetric eigen-decomposition did not converge");
  SymmetricEigen out;
  out.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  out.vectors = Matrix(a.rows(), a.rows());
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out.vectors(i, j) = solver.eigenvectors()(i, j);
  return out;
}

}  // namespace casimir::linalg
