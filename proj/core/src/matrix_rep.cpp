#include "mcgkit/reps/matrix_rep.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

#include "mcgkit/errors.hpp"

namespace mcgkit {

namespace {

using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

// Exact Gaussian-integer matrix, stored as real and imaginary parts.
struct GaussianMatrix {
  IntMatrix re;
  IntMatrix im;

  static std::optional<GaussianMatrix> from(const Eigen::MatrixXcd& a) {
    GaussianMatrix g{IntMatrix(a.rows(), a.cols()), IntMatrix(a.rows(), a.cols())};
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      for (Eigen::Index j = 0; j < a.cols(); ++j) {
        const double r = a(i, j).real(), m = a(i, j).imag();
        if (r != std::round(r) || m != std::round(m) || std::abs(r) > 1 || std::abs(m) > 1)
          return std::nullopt;
        g.re(i, j) = static_cast<long long>(r);
        g.im(i, j) = static_cast<long long>(m);
      }
    return g;
  }

  GaussianMatrix operator*(const GaussianMatrix& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }

  bool is_identity() const {
    return re == IntMatrix::Identity(re.rows(), re.cols()) && im.isZero();
  }
};

std::optional<std::vector<GaussianMatrix>> exact_images(const MatrixRep& rep) {
  std::vector<GaussianMatrix> out;
  for (const auto& a : rep.matrices()) {
    auto g = GaussianMatrix::from(a);
    if (!g) return std::nullopt;
    out.push_back(std::move(*g));
  }
  return out;
}

bool exact_is_identity(const std::vector<GaussianMatrix>& gens,
                       const std::vector<GaussianMatrix>& inverses, const Word& w,
                       std::size_t d) {
  GaussianMatrix acc{IntMatrix::Identity(d, d), IntMatrix::Zero(d, d)};
  for (const auto& l : w) {
    const auto& step = l.exp > 0 ? gens[l.gen] : inverses[l.gen];
    for (int k = 0; k < std::abs(l.exp); ++k) acc = acc * step;
  }
  return acc.is_identity();
}

// Conjugate transpose, exact because the matrices are unitary.
GaussianMatrix adjoint(const GaussianMatrix& g) {
  return {g.re.transpose(), -g.im.transpose()};
}

bool close_to_identity(const Eigen::MatrixXcd& a, double tol) {
  return (a - Eigen::MatrixXcd::Identity(a.rows(), a.cols())).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace

MatrixRep::MatrixRep(std::vector<Eigen::MatrixXcd> matrices, double tolerance)
    : matrices_(std::move(matrices)), tolerance_(tolerance) {
  if (tolerance < 0) throw BadParameters("tolerance must be non-negative");
  dimension_ = matrices_.empty() ? 0 : static_cast<std::size_t>(matrices_.front().rows());
  for (std::size_t g = 0; g < matrices_.size(); ++g) {
    const auto& a = matrices_[g];
    if (a.rows() != a.cols() || static_cast<std::size_t>(a.rows()) != dimension_)
      throw DimensionMismatch("matrix " + std::to_string(g) + " is " + std::to_string(a.rows()) +
                              "x" + std::to_string(a.cols()) + ", expected " +
                              std::to_string(dimension_) + "x" + std::to_string(dimension_));
    if (unitarity_defect(a) > tolerance_)
      throw NotUnitary("matrix " + std::to_string(g) + " is not unitary");
  }
}

Eigen::MatrixXcd MatrixRep::evaluate(const Word& w) const {
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(dimension_, dimension_);
  for (const auto& l : w) {
    if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= matrices_.size())
      throw DimensionMismatch("no matrix for generator " + std::to_string(l.gen));
    const Eigen::MatrixXcd step =
        l.exp > 0 ? matrices_[l.gen] : Eigen::MatrixXcd(matrices_[l.gen].adjoint());
    for (int k = 0; k < std::abs(l.exp); ++k) acc = acc * step;
  }
  return acc;
}

MatrixRep MatrixRep::conjugated(const Eigen::MatrixXcd& unitary) const {
  std::vector<Eigen::MatrixXcd> out;
  for (const auto& a : matrices_) out.push_back(unitary.adjoint() * a * unitary);
  return MatrixRep(std::move(out), tolerance_);
}

double unitarity_defect(const Eigen::MatrixXcd& a) {
  if (a.size() == 0) return 0;
  return (a.adjoint() * a - Eigen::MatrixXcd::Identity(a.rows(), a.cols())).cwiseAbs().maxCoeff();
}

bool verify_relations(const MatrixRep& rep, const Presentation& p) {
  if (rep.generator_count() != p.generator_count())
    throw DimensionMismatch("representation has " + std::to_string(rep.generator_count()) +
                            " matrices for " + std::to_string(p.generator_count()) +
                            " generators");
  if (auto exact = exact_images(rep)) {
    std::vector<GaussianMatrix> inverses;
    for (const auto& g : *exact) inverses.push_back(adjoint(g));
    for (const auto& r : p.relators())
      if (!exact_is_identity(*exact, inverses, r, rep.dimension())) return false;
    return true;
  }
  for (const auto& r : p.relators())
    if (!close_to_identity(rep.evaluate(r), rep.tolerance())) return false;
  return true;
}

std::size_t commutant_dimension(const MatrixRep& rep) {
  const auto d = static_cast<Eigen::Index>(rep.dimension());
  if (d == 0) return 0;
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  Eigen::MatrixXcd system(d * d * static_cast<Eigen::Index>(std::max<std::size_t>(1, rep.generator_count())), d * d);
  system.setZero();
  Eigen::Index row = 0;
  for (const auto& a : rep.matrices()) {
    // vec(AX - XA) = (I (x) A - A^T (x) I) vec(X), column-major vec.
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j) {
        system.block(row + i * d, j * d, d, d) += id(i, j) * a;
        system.block(row + i * d, j * d, d, d) -= a(j, i) * id;
      }
    row += d * d;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(system);
  const auto& sv = svd.singularValues();
  const double cutoff = rep.tolerance() * std::max(1.0, sv.size() ? sv(0) : 0.0);
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return static_cast<std::size_t>(d * d) - rank;
}

std::optional<std::complex<double>> central_element_scalar(const MatrixRep& rep,
                                                           const Presentation& p) {
  const Word w = Word::generator(0), m = Word::generator(1);
  const std::vector<Word> expected{w.pow(2), m.pow(2)};
  auto relators = p.relators();
  std::sort(relators.begin(), relators.end());
  if (p.generator_count() != 2 || relators != expected)
    throw WrongPresentation("central element needs <omega, mu | omega^2, mu^2>, got " +
                            p.to_string());
  if (rep.generator_count() != 2) throw DimensionMismatch("need two matrices");
  const auto& a = rep.matrix(0);
  const auto& b = rep.matrix(1);
  const Eigen::MatrixXcd c = a * b + b * a;
  const auto d = static_cast<Eigen::Index>(rep.dimension());
  if (d == 0) return std::nullopt;
  const std::complex<double> lambda = c.trace() / static_cast<double>(d);
  if ((c - lambda * Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff() > rep.tolerance())
    return std::nullopt;
  return lambda;
}

std::string to_string(SectorLabel s) {
  switch (s) {
    case SectorLabel::Bosonic: return "Bosonic";
    case SectorLabel::Fermionic: return "Fermionic";
    case SectorLabel::Mixed: return "Mixed";
  }
  return "?";
}

SectorLabel sector_analysis(const MatrixRep& rep, std::size_t exchange_generator) {
  if (exchange_generator >= rep.generator_count())
    throw DimensionMismatch("no matrix for generator " + std::to_string(exchange_generator));
  const auto& a = rep.matrix(exchange_generator);
  if (!close_to_identity(a * a, rep.tolerance()))
    throw NotInvolution("exchange image does not square to the identity");
  // A unitary involution is Hermitian; symmetrise against rounding.
  const Eigen::MatrixXcd h = (a + a.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h);
  bool plus = false, minus = false;
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i)
    (eig.eigenvalues()(i) > 0 ? plus : minus) = true;
  if (plus && minus) return SectorLabel::Mixed;
  return plus ? SectorLabel::Bosonic : SectorLabel::Fermionic;
}

Eigen::MatrixXcd random_unitary(std::size_t dimension, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  const auto d = static_cast<Eigen::Index>(dimension);
  Eigen::MatrixXcd z(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) z(i, j) = {normal(rng), normal(rng)};
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < d; ++j) {
    const auto diag = r(j, j);
    if (std::abs(diag) > 0) q.col(j) *= diag / std::abs(diag);
  }
  return q;
}

}  // namespace mcgkit
