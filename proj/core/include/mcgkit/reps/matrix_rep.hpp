#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mcgkit/group/presentation.hpp"

namespace mcgkit {

inline constexpr double kDefaultTolerance = 1e-9;

/// A finite-dimensional unitary representation given on generators.
class MatrixRep {
 public:
  /// Throws DimensionMismatch for non-square or differently sized matrices
  /// and NotUnitary if some matrix fails unitarity within `tolerance`.
  explicit MatrixRep(std::vector<Eigen::MatrixXcd> matrices, double tolerance = kDefaultTolerance);

  std::size_t dimension() const { return dimension_; }
  std::size_t generator_count() const { return matrices_.size(); }
  const std::vector<Eigen::MatrixXcd>& matrices() const { return matrices_; }
  const Eigen::MatrixXcd& matrix(std::size_t gen) const { return matrices_.at(gen); }
  double tolerance() const { return tolerance_; }

  /// Image of a word as a matrix product, letters applied left to right.
  Eigen::MatrixXcd evaluate(const Word& w) const;

  /// U^* A U for every generator matrix A.
  MatrixRep conjugated(const Eigen::MatrixXcd& unitary) const;

 private:
  std::size_t dimension_ = 0;
  std::vector<Eigen::MatrixXcd> matrices_;
  double tolerance_ = kDefaultTolerance;
};

/// Max entry deviation of A^* A from the identity.
double unitarity_defect(const Eigen::MatrixXcd& a);

/// True iff every relator evaluates to the identity. Matrices whose entries
/// are all Gaussian integers are multiplied exactly; otherwise entries are
/// compared within the representation's tolerance. Throws DimensionMismatch
/// if the generator counts differ.
bool verify_relations(const MatrixRep& rep, const Presentation& p);

/// Dimension of {X : XA = AX for every generator matrix A}, from the
/// singular values of the stacked system (I (x) A - A^T (x) I).
std::size_t commutant_dimension(const MatrixRep& rep);

/// For <omega, mu | omega^2, mu^2>: lambda with omega mu + mu omega =
/// lambda * 1, or nullopt when that element is not scalar. Throws
/// WrongPresentation for any other presentation.
std::optional<std::complex<double>> central_element_scalar(const MatrixRep& rep,
                                                           const Presentation& p);

enum class SectorLabel { Bosonic, Fermionic, Mixed };
std::string to_string(SectorLabel s);

/// Eigenvalue structure of the exchange image. Throws NotInvolution.
SectorLabel sector_analysis(const MatrixRep& rep, std::size_t exchange_generator);

/// Haar-random unitary via QR of a complex Gaussian matrix.
Eigen::MatrixXcd random_unitary(std::size_t dimension, std::mt19937_64& rng);

}  // namespace mcgkit
