#include "casimir/lattice/observable.hpp"

#include <cmath>
#include <utility>

#include "casimir/error.hpp"

namespace casimir::lattice {

QuadraticObservable::QuadraticObservable(linalg::Matrix quad, std::vector<double> lin, double scalar)
    : quad_(std::move(quad)), lin_(std::move(lin)), scalar_(scalar) {
  if (!quad_.square() || quad_.rows() != lin_.size() || lin_.size() % 2 != 0)
    throw PreconditionError("QuadraticObservable: inconsistent sizes");
  const std::size_t n = quad_.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double s = 0.5 * (quad_(i, j) + quad_(j, i));
      quad_(i, j) = s;
      quad_(j, i) = s;
    }
}

QuadraticObservable QuadraticObservable::zero(std::size_t n) {
  return QuadraticObservable(linalg::Matrix(n, n), std::vector<double>(n, 0.0), 0.0);
}

QuadraticObservable QuadraticObservable::quadratic(linalg::Matrix quad) {
  const std::size_t n = quad.rows();
  return QuadraticObservable(std::move(quad), std::vector<double>(n, 0.0), 0.0);
}

QuadraticObservable QuadraticObservable::with_scalar(double s) const {
  QuadraticObservable out = *this;
  out.scalar_ = s;
  return out;
}

QuadraticObservable& QuadraticObservable::operator+=(const QuadraticObservable& o) {
  if (o.canonical_dimension() != canonical_dimension()) throw PreconditionError("observable size mismatch");
  quad_ += o.quad_;
  for (std::size_t i = 0; i < lin_.size(); ++i) lin_[i] += o.lin_[i];
  scalar_ += o.scalar_;
  return *this;
}

QuadraticObservable& QuadraticObservable::operator-=(const QuadraticObservable& o) {
  if (o.canonical_dimension() != canonical_dimension()) throw PreconditionError("observable size mismatch");
  quad_ -= o.quad_;
  for (std::size_t i = 0; i < lin_.size(); ++i) lin_[i] -= o.lin_[i];
  scalar_ -= o.scalar_;
  return *this;
}

QuadraticObservable& QuadraticObservable::operator*=(double s) {
  quad_ *= s;
  for (double& v : lin_) v *= s;
  scalar_ *= s;
  return *this;
}

QuadraticObservable operator+(QuadraticObservable a, const QuadraticObservable& b) { return a += b; }
QuadraticObservable operator-(QuadraticObservable a, const QuadraticObservable& b) { return a -= b; }
QuadraticObservable operator*(double s, QuadraticObservable a) { return a *= s; }

double SymplecticStructure::operator()(std::size_t a, std::size_t b) const {
  if (a < modes_ && b == a + modes_) return 1.0;
  if (a >= modes_ && b + modes_ == a) return -1.0;
  return 0.0;
}

linalg::Matrix SymplecticStructure::matrix() const {
  linalg::Matrix m(dimension(), dimension());
  for (std::size_t i = 0; i < modes_; ++i) {
    m(i, modes_ + i) = 1.0;
    m(modes_ + i, i) = -1.0;
  }
  return m;
}

linalg::Matrix SymplecticStructure::right_multiply(const linalg::Matrix& a) const {
  if (a.cols() != dimension()) throw PreconditionError("right_multiply: size mismatch");
  linalg::Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t j = 0; j < modes_; ++j) {
      out(r, j) = -a(r, modes_ + j);
      out(r, modes_ + j) = a(r, j);
    }
  return out;
}

std::vector<double> SymplecticStructure::apply(const std::vector<double>& v) const {
  if (v.size() != dimension()) throw PreconditionError("apply: size mismatch");
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < modes_; ++i) {
    out[i] = v[modes_ + i];
    out[modes_ + i] = -v[i];
  }
  return out;
}

QuadraticObservable commutator(const QuadraticObservable& a, const QuadraticObservable& b,
                               const SymplecticStructure& omega) {
  if (a.canonical_dimension() != b.canonical_dimension() || a.canonical_dimension() != omega.dimension())
    throw PreconditionError("commutator: dimension mismatch");
  // Q_B omega Q_A = -(Q_A omega Q_B)^T for symmetric Q_A, Q_B.
  linalg::Matrix x = linalg::multiply(omega.right_multiply(a.quad()), b.quad());
  linalg::Matrix quad = x;
  const std::size_t n = quad.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) quad(i, j) += x(j, i);

  std::vector<double> lin = linalg::multiply(a.quad(), omega.apply(b.lin()));
  const std::vector<double> lb = linalg::multiply(b.quad(), omega.apply(a.lin()));
  for (std::size_t i = 0; i < n; ++i) lin[i] -= lb[i];
  const double scalar = linalg::dot(a.lin(), omega.apply(b.lin()));
  return QuadraticObservable(std::move(quad), std::move(lin), scalar);
}

double norm(const QuadraticObservable& o) {
  const double q = linalg::frobenius_inner(o.quad(), o.quad());
  const double l = linalg::dot(o.lin(), o.lin());
  return std::sqrt(q + l + o.scalar() * o.scalar());
}

}  // namespace casimir::lattice
