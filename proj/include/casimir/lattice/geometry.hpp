#pragma once

#include <array>
#include <cstddef>
#include <optional>

namespace casimir::lattice {

enum class Boundary { periodic, open };

/// Square lattice discretising the transverse plane (dims = 2) or a line (dims = 1).
/// Sites are numbered row-major, axis 0 slowest. Open lattices are centred:
/// x_i ranges over {-(N-1)/2, ..., (N-1)/2} * spacing.
struct LatticeGeometry {
  int dims = 1;
  std::size_t sites_per_dim = 3;
  double spacing = 1.0;
  Boundary boundary = Boundary::open;

  /// Throws InputError unless dims in {1, 2}, N >= 3, spacing > 0.
  void validate() const;

  std::size_t sites() const { return dims == 1 ? sites_per_dim : sites_per_dim * sites_per_dim; }
  /// Length 2 * sites of the canonical vector (phi_1..phi_M, pi_1..pi_M).
  std::size_t canonical_dimension() const { return 2 * sites(); }
  double cell_volume() const { return dims == 1 ? spacing : spacing * spacing; }

  std::array<std::size_t, 2> coords(std::size_t site) const;
  std::size_t site(std::array<std::size_t, 2> coords) const;
  /// Neighbour one step along `axis` in direction `step` (+1 or -1); empty past an open edge.
  std::optional<std::size_t> neighbor(std::size_t site, int axis, int step) const;
  /// Centred physical coordinate of a site along an axis.
  double position(std::size_t site, int axis) const;
  /// Distance in sites from the site to the nearest edge, minimised over axes.
  std::size_t edge_distance(std::size_t site) const;
};

}  // namespace casimir::lattice
