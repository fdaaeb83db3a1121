#include "mcgkit/manifold/connected_sum.hpp"

#include <algorithm>

#include "mcgkit/errors.hpp"

namespace mcgkit {

ConnectedSum::ConnectedSum(std::vector<Prime> primes) : primes_(std::move(primes)) {
  if (primes_.empty()) throw ValidationError("a connected sum needs at least one prime");
  for (const auto& p : primes_) validate(p);
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    auto it = std::find_if(species_.begin(), species_.end(), [&](const auto& cls) {
      return same_species(primes_[cls.front()], primes_[i]);
    });
    if (it == species_.end()) {
      species_.push_back({i});
    } else {
      it->push_back(i);
    }
  }
}

std::size_t ConnectedSum::irreducible_count() const {
  return static_cast<std::size_t>(std::count_if(primes_.begin(), primes_.end(), is_irreducible));
}

std::size_t ConnectedSum::handle_count() const {
  return static_cast<std::size_t>(std::count_if(primes_.begin(), primes_.end(), is_handle));
}

std::size_t ConnectedSum::spinorial_count() const {
  return static_cast<std::size_t>(std::count_if(primes_.begin(), primes_.end(), is_spinorial));
}

std::size_t ConnectedSum::species_of(std::size_t prime) const {
  for (std::size_t r = 0; r < species_.size(); ++r)
    if (std::find(species_[r].begin(), species_[r].end(), prime) != species_[r].end()) return r;
  throw BadParameters("prime index out of range");
}

std::string to_string(ExtensionVerdict v) {
  return v == ExtensionVerdict::Isomorphic ? "Isomorphic" : "CentralZ2Extension";
}

Presentation fundamental_group_sum(const ConnectedSum& sum) {
  std::vector<Presentation> parts;
  for (const auto& p : sum.primes()) parts.push_back(fundamental_group(p));

  std::vector<std::string> labels;
  const bool all_cyclic = std::all_of(parts.begin(), parts.end(),
                                      [](const auto& p) { return p.generator_count() == 1; });
  if (all_cyclic && parts.size() <= 26) {
    for (std::size_t i = 0; i < parts.size(); ++i) labels.push_back(std::string(1, char('a' + i)));
  } else {
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (const auto& l : parts[i].labels()) labels.push_back(l + "_" + std::to_string(i + 1));
  }
  return Presentation::free_product(parts, std::move(labels));
}

bool is_spinorial_sum(const ConnectedSum& sum) { return sum.spinorial_count() > 0; }

ExtensionVerdict extension_type(const ConnectedSum& sum) {
  return is_spinorial_sum(sum) ? ExtensionVerdict::CentralZ2Extension
                               : ExtensionVerdict::Isomorphic;
}

std::size_t kernel_rank(const ConnectedSum& sum) {
  for (std::size_t i = 0; i < sum.size(); ++i)
    if (!has_homotopy_implies_isotopy(sum.prime(i)))
      throw AssumptionViolated("prime " + std::to_string(i + 1) + " (" + describe(sum.prime(i)) +
                               ") does not declare the homotopy-implies-isotopy property");
  return sum.handle_count() + sum.spinorial_count();
}

}  // namespace mcgkit
