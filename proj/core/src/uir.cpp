#include "mcgkit/reps/uir.hpp"

#include <cmath>
#include <numbers>

namespace mcgkit {

namespace {

MatrixRep scalar_rep(double omega, double mu) {
  return MatrixRep({Eigen::MatrixXcd::Constant(1, 1, omega), Eigen::MatrixXcd::Constant(1, 1, mu)});
}

struct OneDimensional {
  const char* name;
  double omega;
  double mu;
};

constexpr OneDimensional kOneDimensional[] = {
    {"rho1", 1, 1}, {"rho2", 1, -1}, {"rho3", -1, 1}, {"rho4", -1, -1}};

}  // namespace

Presentation z2_star_z2_presentation() {
  return Presentation({"omega", "mu"}, {Word::power(0, 2), Word::power(1, 2)});
}

MatrixRep rho_tau(double tau, double tolerance) {
  Eigen::MatrixXcd omega(2, 2), mu(2, 2);
  omega << 1, 0, 0, -1;
  mu << std::cos(tau), std::sin(tau), std::sin(tau), -std::cos(tau);
  return MatrixRep({omega, mu}, tolerance);
}

std::vector<UIRCatalogEntry> classify_uirs_z2star_z2() {
  std::vector<UIRCatalogEntry> out;
  for (const auto& e : kOneDimensional)
    out.push_back({e.name, 1, std::nullopt, [e](double) { return scalar_rep(e.omega, e.mu); }});
  out.push_back({"rho_tau", 2, std::make_pair(0.0, std::numbers::pi),
                 [](double tau) { return rho_tau(tau); }});
  return out;
}

std::vector<MatrixRep> scan_one_dimensional(const Presentation& p, int roots) {
  std::vector<std::complex<double>> units;
  for (int k = 0; k < roots; ++k) {
    const double angle = 2 * std::numbers::pi * k / roots;
    // Snap to exact values where the root is a Gaussian integer.
    std::complex<double> z = std::polar(1.0, angle);
    if (4 * k % roots == 0) z = {std::round(z.real()), std::round(z.imag())};
    units.push_back(z);
  }
  std::vector<MatrixRep> out;
  std::vector<std::size_t> digits(p.generator_count(), 0);
  while (true) {
    std::vector<Eigen::MatrixXcd> matrices;
    for (auto d : digits) matrices.push_back(Eigen::MatrixXcd::Constant(1, 1, units[d]));
    MatrixRep rep(std::move(matrices));
    if (verify_relations(rep, p)) out.push_back(std::move(rep));
    std::size_t i = 0;
    for (; i < digits.size(); ++i) {
      if (++digits[i] < units.size()) break;
      digits[i] = 0;
    }
    if (i == digits.size()) break;
  }
  return out;
}

std::optional<std::vector<std::string>> diagonal_constituents(const MatrixRep& rep) {
  if (rep.generator_count() != 2) return std::nullopt;
  const double tol = rep.tolerance();
  for (const auto& a : rep.matrices())
    if ((a - Eigen::MatrixXcd(a.diagonal().asDiagonal())).cwiseAbs().maxCoeff() > tol)
      return std::nullopt;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < rep.dimension(); ++i) {
    const auto w = rep.matrix(0)(i, i);
    const auto m = rep.matrix(1)(i, i);
    const OneDimensional* match = nullptr;
    for (const auto& e : kOneDimensional)
      if (std::abs(w - e.omega) <= tol && std::abs(m - e.mu) <= tol) match = &e;
    if (!match) return std::nullopt;
    names.push_back(match->name);
  }
  return names;
}

}  // namespace mcgkit
