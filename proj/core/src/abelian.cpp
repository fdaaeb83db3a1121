#include "mcgkit/group/abelian.hpp"

#include <algorithm>
#include <sstream>

namespace mcgkit {

namespace {

using Matrix = std::vector<std::vector<BigInt>>;

void swap_rows(Matrix& m, std::size_t a, std::size_t b) { std::swap(m[a], m[b]); }

void swap_cols(Matrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

std::vector<BigInt> smith_diagonal(Matrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<BigInt> diag;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Pivot: smallest non-zero absolute value in the trailing block.
      std::size_t pr = rows, pc = cols;
      BigInt best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (best == 0 || abs(m[i][j]) < best)) {
            best = abs(m[i][j]);
            pr = i;
            pc = j;
          }
      if (pr == rows) {
        diag.resize(std::min(rows, cols), 0);
        return diag;
      }
      swap_rows(m, t, pr);
      swap_cols(m, t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        const BigInt q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        const BigInt q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs(m[t][t]));
  }
  return diag;
}

Matrix relation_matrix(const Presentation& p) {
  Matrix m;
  for (const auto& r : p.relators()) {
    std::vector<BigInt> row(p.generator_count(), 0);
    for (const auto& l : r) row[l.gen] += l.exp;
    m.push_back(std::move(row));
  }
  return m;
}

AbelianGroupStructure abelianization(const Presentation& p) {
  const auto diag = smith_diagonal(relation_matrix(p));
  AbelianGroupStructure out;
  std::size_t rank = 0;
  for (const auto& d : diag) {
    if (d != 0) ++rank;
    if (d > 1) out.torsion_factors.push_back(d);
  }
  out.free_rank = p.generator_count() - rank;
  return out;
}

AbelianGroupStructure direct_sum(const std::vector<AbelianGroupStructure>& parts) {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;
  for (const auto& part : parts) {
    free_rank += part.free_rank;
    torsion.insert(torsion.end(), part.torsion_factors.begin(), part.torsion_factors.end());
  }
  Matrix m(torsion.size(), std::vector<BigInt>(torsion.size(), 0));
  for (std::size_t i = 0; i < torsion.size(); ++i) m[i][i] = torsion[i];
  AbelianGroupStructure out;
  out.free_rank = free_rank;
  for (const auto& d : smith_diagonal(std::move(m)))
    if (d > 1) out.torsion_factors.push_back(d);
  return out;
}

std::string AbelianGroupStructure::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << 'Z';
    if (free_rank > 1) os << '^' << free_rank;
    first = false;
  }
  for (const auto& t : torsion_factors) {
    os << (first ? "" : " + ") << "Z" << t;
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace mcgkit
