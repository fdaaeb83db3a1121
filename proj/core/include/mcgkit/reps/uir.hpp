#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcgkit/reps/matrix_rep.hpp"

namespace mcgkit {

/// <omega, mu | omega^2, mu^2>, the free product Z2 * Z2.
Presentation z2_star_z2_presentation();

/// rho_tau: omega -> diag(1,-1), mu -> [[cos t, sin t], [sin t, -cos t]].
MatrixRep rho_tau(double tau, double tolerance = kDefaultTolerance);

struct UIRCatalogEntry {
  std::string name;
  std::size_t dimension = 1;
  /// Open interval of the family parameter; absent for isolated entries.
  std::optional<std::pair<double, double>> parameter_domain;
  /// Ignores its argument for isolated entries.
  std::function<MatrixRep(double)> construct;
};

/// rho1..rho4 (omega, mu = +-1) followed by the family rho_tau, tau in (0, pi).
std::vector<UIRCatalogEntry> classify_uirs_z2star_z2();

/// One-dimensional representations found by scanning all pairs of
/// `roots`-th roots of unity and keeping those satisfying the relators.
std::vector<MatrixRep> scan_one_dimensional(const Presentation& p, int roots);

/// Names of the one-dimensional catalog entries whose direct sum gives `rep`
/// when all its matrices are diagonal; nullopt otherwise.
std::optional<std::vector<std::string>> diagonal_constituents(const MatrixRep& rep);

}  // namespace mcgkit
