#include "mcgkit/mcg/presentation.hpp"

#include "mcgkit/errors.hpp"

namespace mcgkit {

bool is_rp3_sum(const ConnectedSum& sum) {
  if (sum.size() != 2) return false;
  const Prime rp3 = LensSpace{2, 1};
  return sum.prime(0) == rp3 && sum.prime(1) == rp3;
}

Presentation rp3_sum_three_generator_presentation() {
  const Word omega = Word::generator(0), mu12 = Word::generator(1), mu21 = Word::generator(2);
  return Presentation({"omega", "mu12", "mu21"},
                      {omega.pow(2), mu12.pow(2), mu21.pow(2),
                       omega * mu12 * omega.inverse() * mu21.inverse()});
}

Presentation mcg_presentation(const ConnectedSum& sum) {
  if (is_rp3_sum(sum))
    return Presentation({"omega", "mu"}, {Word::power(0, 2), Word::power(1, 2)});
  if (sum.size() == 1) {
    if (auto p = prime_mcg_presentation(sum.prime(0))) return *p;
  }
  throw UnsupportedSum("no cataloged mapping class group presentation for this sum");
}

SemidirectDecomposition decompose_semidirect(const ConnectedSum& sum) {
  SemidirectDecomposition out;
  for (auto& g : enumerate_generators(sum).generators) {
    if (is_slide(g)) {
      out.slide_subgroup_generators.push_back(std::move(g));
    } else if (is_twist(g)) {
      out.kernel_generators.push_back(std::move(g));
    } else {
      out.particle_generators.push_back(std::move(g));
    }
  }
  out.splits = sum.handle_count() == 0;
  return out;
}

}  // namespace mcgkit
