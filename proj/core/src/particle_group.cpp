#include "mcgkit/mcg/particle_group.hpp"

#include <algorithm>
#include <numeric>

#include "mcgkit/errors.hpp"

namespace mcgkit {

namespace {

std::vector<Presentation> cataloged_internal_groups(const ConnectedSum& sum) {
  std::vector<Presentation> out;
  for (const auto& p : sum.primes()) {
    auto g = prime_mcg_presentation(p);
    if (!g) throw NotCataloged("mapping class group of " + describe(p) + " is not cataloged");
    out.push_back(std::move(*g));
  }
  return out;
}

std::vector<Word> internal_parts_of(const std::vector<std::size_t>& elements,
                                    const std::vector<std::shared_ptr<const FiniteGroupModel>>& m) {
  std::vector<Word> out;
  for (std::size_t i = 0; i < elements.size(); ++i) out.push_back(m[i]->canonical_word(elements[i]));
  return out;
}

}  // namespace

ParticleGroup::ParticleGroup(const ConnectedSum& sum)
    : ParticleGroup(sum, cataloged_internal_groups(sum)) {}

ParticleGroup::ParticleGroup(const ConnectedSum& sum, std::vector<Presentation> internal_groups)
    : species_(sum.species()),
      prime_species_(sum.size()),
      prime_position_(sum.size()) {
  if (internal_groups.size() != sum.size())
    throw MismatchedStructure("need one internal group per prime");
  for (std::size_t r = 0; r < species_.size(); ++r)
    for (std::size_t t = 0; t < species_[r].size(); ++t) {
      const auto i = species_[r][t];
      prime_species_[i] = r;
      prime_position_[i] = t;
      if (!(internal_groups[i] == internal_groups[species_[r].front()]))
        throw MismatchedStructure("primes of one species need equal internal groups");
    }
  models_.resize(sum.size());
  for (std::size_t i = 0; i < sum.size(); ++i) {
    const auto lead = species_[prime_species_[i]].front();
    models_[i] = lead == i ? std::make_shared<const FiniteGroupModel>(internal_groups[i])
                           : models_[lead];
  }
}

const FiniteGroupModel& ParticleGroup::internal_group(std::size_t prime) const {
  return *models_.at(prime);
}

std::uint64_t ParticleGroup::order() const {
  std::uint64_t out = 1;
  for (const auto& m : models_) out *= m->order();
  for (const auto& cls : species_)
    for (std::uint64_t k = 2; k <= cls.size(); ++k) out *= k;
  return out;
}

ParticleGroupElement ParticleGroup::identity() const {
  ParticleGroupElement e;
  e.internal.assign(prime_count(), Word{});
  for (const auto& cls : species_) e.external.push_back(Permutation::identity(cls.size()));
  return e;
}

void ParticleGroup::check(const ParticleGroupElement& x) const {
  if (x.internal.size() != prime_count() || x.external.size() != species_.size())
    throw MismatchedStructure("element has the wrong number of components");
  for (std::size_t r = 0; r < species_.size(); ++r)
    if (x.external[r].degree() != species_[r].size())
      throw MismatchedStructure("species " + std::to_string(r + 1) +
                                " permutation has the wrong degree");
}

ParticleGroupElement ParticleGroup::multiply(const ParticleGroupElement& x,
                                             const ParticleGroupElement& y) const {
  check(x);
  check(y);
  ParticleGroupElement out;
  out.internal.resize(prime_count());
  for (std::size_t i = 0; i < prime_count(); ++i) {
    const auto& cls = species_[prime_species_[i]];
    const auto source = cls[x.external[prime_species_[i]](prime_position_[i])];
    const auto& m = *models_[i];
    out.internal[i] = m.canonical_word(m.multiply(m.element_of(x.internal[i]),
                                                  m.element_of(y.internal[source])));
  }
  for (std::size_t r = 0; r < species_.size(); ++r)
    out.external.push_back(x.external[r] * y.external[r]);
  return out;
}

ParticleGroupElement ParticleGroup::inverse(const ParticleGroupElement& x) const {
  check(x);
  ParticleGroupElement out;
  out.internal.resize(prime_count());
  // (g; s)^-1 = (h; s^-1) with h_{s(t)} = g_t^-1.
  for (std::size_t i = 0; i < prime_count(); ++i) {
    const auto r = prime_species_[i];
    const auto target = species_[r][x.external[r](prime_position_[i])];
    out.internal[target] = models_[i]->reduce(x.internal[i].inverse());
  }
  for (const auto& s : x.external) out.external.push_back(s.inverse());
  return out;
}

ParticleGroupElement ParticleGroup::random(std::mt19937_64& rng) const {
  ParticleGroupElement out;
  for (const auto& m : models_) {
    std::uniform_int_distribution<std::size_t> pick(0, m->order() - 1);
    out.internal.push_back(m->canonical_word(pick(rng)));
  }
  for (const auto& cls : species_) {
    std::vector<Permutation::Point> images(cls.size());
    std::iota(images.begin(), images.end(), 0);
    std::shuffle(images.begin(), images.end(), rng);
    out.external.emplace_back(std::move(images));
  }
  return out;
}

std::vector<ParticleGroupElement> ParticleGroup::elements(std::size_t limit) const {
  if (order() > limit)
    throw BadParameters("particle group of order " + std::to_string(order()) +
                        " exceeds the enumeration limit");
  std::vector<std::vector<Permutation>> perms;
  for (const auto& cls : species_) perms.push_back(symmetric_group_elements(cls.size()));

  std::vector<ParticleGroupElement> out;
  std::vector<std::size_t> internal(prime_count(), 0);
  std::vector<std::size_t> external(species_.size(), 0);
  while (true) {
    ParticleGroupElement e;
    e.internal = internal_parts_of(internal, models_);
    for (std::size_t r = 0; r < species_.size(); ++r) e.external.push_back(perms[r][external[r]]);
    out.push_back(std::move(e));

    // Odometer over internal digits, then external digits.
    std::size_t d = 0;
    for (; d < internal.size(); ++d) {
      if (++internal[d] < models_[d]->order()) break;
      internal[d] = 0;
    }
    if (d < internal.size()) continue;
    std::size_t r = 0;
    for (; r < external.size(); ++r) {
      if (++external[r] < perms[r].size()) break;
      external[r] = 0;
    }
    if (r == external.size()) break;
  }
  return out;
}

ParticleGroupElement ParticleGroup::internal_element(std::size_t prime, const Word& g) const {
  auto e = identity();
  e.internal.at(prime) = models_.at(prime)->reduce(g);
  return e;
}

ParticleGroupElement ParticleGroup::external_element(std::size_t r, const Permutation& s) const {
  auto e = identity();
  e.external.at(r) = s;
  check(e);
  return e;
}

}  // namespace mcgkit
