#include "mcgkit/finite/homomorphism.hpp"

#include <algorithm>

#include "mcgkit/errors.hpp"

namespace mcgkit {

Permutation evaluate_word(const Word& w, std::span<const Permutation> assignment) {
  if (assignment.empty()) {
    if (!w.empty()) throw UnknownGenerator("empty assignment");
    return Permutation::identity(1);
  }
  const std::size_t n = assignment.front().degree();
  // Track every point through the word; inverse letters use the inverse image table.
  std::vector<Permutation> inverses;
  std::vector<bool> have_inverse(assignment.size(), false);
  inverses.resize(assignment.size());
  std::vector<Permutation::Point> images(n);
  for (std::size_t x = 0; x < n; ++x) images[x] = static_cast<Permutation::Point>(x);
  for (const auto& l : w) {
    if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= assignment.size())
      throw UnknownGenerator("generator id " + std::to_string(l.gen) + " has no image");
    const Permutation* step = &assignment[l.gen];
    if (l.exp < 0) {
      if (!have_inverse[l.gen]) {
        inverses[l.gen] = assignment[l.gen].inverse();
        have_inverse[l.gen] = true;
      }
      step = &inverses[l.gen];
    }
    for (auto& x : images) x = (*step)(x);
  }
  return Permutation(std::move(images));
}

Permutation evaluate_word(const Word& w, const GroupHomomorphism& h) {
  return evaluate_word(w, h.assignment);
}

bool GroupHomomorphism::satisfies_relators() const {
  for (const auto& r : source->relators())
    if (!evaluate_word(r, assignment).is_identity()) return false;
  return true;
}

namespace {

// Relators grouped by the largest generator they use; a relator is checked
// once that generator has been assigned.
std::vector<std::vector<const Word*>> relators_by_last_generator(const Presentation& p) {
  std::vector<std::vector<const Word*>> out(p.generator_count());
  for (const auto& r : p.relators()) {
    const int m = r.max_generator();
    if (m >= 0) out[m].push_back(&r);
  }
  return out;
}

bool relator_trivial(const Word& r, std::span<const Permutation> images,
                     std::span<const Permutation> inverses, std::size_t n) {
  for (std::size_t x = 0; x < n; ++x) {
    auto y = static_cast<Permutation::Point>(x);
    for (const auto& l : r) y = l.exp > 0 ? images[l.gen](y) : inverses[l.gen](y);
    if (y != x) return false;
  }
  return true;
}

}  // namespace

bool for_each_homomorphism(const Presentation& p, std::size_t n,
                           const std::function<bool(std::span<const Permutation>)>& visit,
                           std::size_t max_degree) {
  if (n > max_degree)
    throw DegreeTooLarge("homomorphism search degree " + std::to_string(n) + " exceeds limit " +
                         std::to_string(max_degree));
  if (n == 0) throw BadParameters("degree must be positive");
  const auto elements = symmetric_group_elements(n);
  std::vector<Permutation> element_inverses;
  element_inverses.reserve(elements.size());
  for (const auto& e : elements) element_inverses.push_back(e.inverse());

  const std::size_t gens = p.generator_count();
  const auto checks = relators_by_last_generator(p);
  // Relators on no generator (empty words) are trivially satisfied.
  std::vector<Permutation> images(gens, Permutation::identity(n));
  std::vector<Permutation> inverses(gens, Permutation::identity(n));

  std::function<bool(std::size_t)> assign = [&](std::size_t g) -> bool {
    if (g == gens) return visit(images);
    for (std::size_t i = 0; i < elements.size(); ++i) {
      images[g] = elements[i];
      inverses[g] = element_inverses[i];
      bool ok = true;
      for (const Word* r : checks[g])
        if (!relator_trivial(*r, images, inverses, n)) {
          ok = false;
          break;
        }
      if (ok && assign(g + 1)) return true;
    }
    return false;
  };
  return assign(0);
}

std::vector<GroupHomomorphism> enumerate_homomorphisms(const Presentation& p, std::size_t n,
                                                       std::size_t max_degree) {
  auto source = std::make_shared<const Presentation>(p);
  const auto target = PermutationGroup::symmetric(n);
  std::vector<GroupHomomorphism> out;
  for_each_homomorphism(
      p, n,
      [&](std::span<const Permutation> images) {
        out.push_back({source, target, {images.begin(), images.end()}});
        return false;
      },
      max_degree);
  return out;
}

}  // namespace mcgkit
