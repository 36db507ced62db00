#include "casimir/lattice/geometry.hpp"

#include <algorithm>
#include <string>

#include "casimir/error.hpp"

namespace casimir::lattice {

void LatticeGeometry::validate() const {
  if (dims != 1 && dims != 2) throw InputError("lattice dims must be 1 or 2, got " + std::to_string(dims));
  if (sites_per_dim < 3) throw InputError("lattice needs at least 3 sites per dimension");
  if (!(spacing > 0.0)) throw InputError("lattice spacing must be positive");
}

std::array<std::size_t, 2> LatticeGeometry::coords(std::size_t s) const {
  if (dims == 1) return {s, 0};
  return {s / sites_per_dim, s % sites_per_dim};
}

std::size_t LatticeGeometry::site(std::array<std::size_t, 2> c) const {
  return dims == 1 ? c[0] : c[0] * sites_per_dim + c[1];
}

std::optional<std::size_t> LatticeGeometry::neighbor(std::size_t s, int axis, int step) const {
  auto c = coords(s);
  const auto n = static_cast<long long>(sites_per_dim);
  long long v = static_cast<long long>(c[axis]) + step;
  if (v < 0 || v >= n) {
    if (boundary == Boundary::open) return std::nullopt;
    v = (v + n) % n;
  }
  c[axis] = static_cast<std::size_t>(v);
  return site(c);
}

double LatticeGeometry::position(std::size_t s, int axis) const {
  const auto c = coords(s);
  return (static_cast<double>(c[axis]) - 0.5 * static_cast<double>(sites_per_dim - 1)) * spacing;
}

std::size_t LatticeGeometry::edge_distance(std::size_t s) const {
  const auto c = coords(s);
  std::size_t d = std::min(c[0], sites_per_dim - 1 - c[0]);
  if (dims == 2) d = std::min({d, c[1], sites_per_dim - 1 - c[1]});
  return d;
}

}  // namespace casimir::lattice
