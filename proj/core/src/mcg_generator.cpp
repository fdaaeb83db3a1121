#include "mcgkit/mcg/generator.hpp"

#include "mcgkit/errors.hpp"

namespace mcgkit {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string one_based(std::size_t i) { return std::to_string(i + 1); }

std::string slide_label(const char* name, std::size_t i, std::size_t j, std::size_t k) {
  return std::string(name) + "(" + one_based(i) + "." + one_based(j) + "," + one_based(k) + ")";
}

std::vector<std::size_t> generator_counts(const ConnectedSum& sum) {
  std::vector<std::size_t> out;
  for (const auto& p : sum.primes()) out.push_back(fundamental_group(p).generator_count());
  return out;
}

}  // namespace

std::string label(const MCGGenerator& g, const ConnectedSum& sum) {
  return std::visit(
      Overloaded{
          [&](const InternalGen& x) {
            const auto autos = internal_automorphisms(sum.prime(x.prime));
            const std::string name =
                x.index < autos.size() ? autos[x.index].label : one_based(x.index);
            return "phi(" + one_based(x.prime) + "," + name + ")";
          },
          [](const SpinGen& x) { return "sigma(" + one_based(x.handle) + ")"; },
          [](const ExchangeGen& x) {
            return "omega(" + one_based(x.i) + "," + one_based(x.k) + ")";
          },
          [](const SlideIrreducibleGen& x) { return slide_label("mu", x.i, x.j, x.k); },
          [](const SlideHandleLeftGen& x) { return slide_label("lambda", x.i, x.j, x.k); },
          [](const SlideHandleRightGen& x) { return slide_label("rho", x.i, x.j, x.k); },
          [](const NeckTwistGen& x) { return "neck(" + one_based(x.prime) + ")"; },
          [](const HandleTwistGen& x) { return "twist(" + one_based(x.handle) + ")"; },
      },
      g);
}

std::string kind_name(const MCGGenerator& g) {
  static constexpr const char* kNames[] = {"Internal",        "Spin",           "Exchange",
                                           "SlideIrreducible", "SlideHandleLeft", "SlideHandleRight",
                                           "NeckTwist",       "HandleTwist"};
  return kNames[g.index()];
}

bool is_slide(const MCGGenerator& g) {
  return std::holds_alternative<SlideIrreducibleGen>(g) ||
         std::holds_alternative<SlideHandleLeftGen>(g) ||
         std::holds_alternative<SlideHandleRightGen>(g);
}

bool is_twist(const MCGGenerator& g) {
  return std::holds_alternative<NeckTwistGen>(g) || std::holds_alternative<HandleTwistGen>(g);
}

MCGGeneratorSet enumerate_generators(const ConnectedSum& sum) {
  MCGGeneratorSet out;
  auto& gens = out.generators;
  auto& c = out.counts;
  const std::size_t n = sum.size();
  const auto gen_counts = generator_counts(sum);

  for (std::size_t i = 0; i < n; ++i) {
    if (is_handle(sum.prime(i))) continue;
    const auto autos = internal_automorphisms(sum.prime(i));
    for (std::size_t a = 0; a < autos.size(); ++a) gens.push_back(InternalGen{i, a});
    c.internals += autos.size();
  }
  for (std::size_t h = 0; h < n; ++h)
    if (is_handle(sum.prime(h))) {
      gens.push_back(SpinGen{h});
      ++c.spins;
    }
  for (const auto& cls : sum.species())
    for (std::size_t a = 0; a < cls.size(); ++a)
      for (std::size_t b = a + 1; b < cls.size(); ++b) {
        gens.push_back(ExchangeGen{cls[a], cls[b]});
        ++c.exchanges;
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < gen_counts[i]; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (k != i && is_irreducible(sum.prime(k))) {
          gens.push_back(SlideIrreducibleGen{i, j, k});
          ++c.slides_irreducible;
        }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < gen_counts[i]; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (k != i && is_handle(sum.prime(k))) {
          gens.push_back(SlideHandleLeftGen{i, j, k});
          gens.push_back(SlideHandleRightGen{i, j, k});
          ++c.slides_left;
          ++c.slides_right;
        }
  for (std::size_t i = 0; i < n; ++i)
    if (is_spinorial(sum.prime(i))) {
      gens.push_back(NeckTwistGen{i});
      ++c.neck_twists;
    }
  for (std::size_t h = 0; h < n; ++h)
    if (is_handle(sum.prime(h))) {
      gens.push_back(HandleTwistGen{h});
      ++c.handle_twists;
    }
  return out;
}

GeneratorCounts expected_counts(const ConnectedSum& sum) {
  GeneratorCounts c;
  const std::size_t m = sum.handle_count();
  const std::size_t irreducible = sum.irreducible_count();
  c.spins = m;
  c.handle_twists = m;
  c.neck_twists = sum.spinorial_count();
  for (const auto& cls : sum.species()) c.exchanges += cls.size() * (cls.size() - 1) / 2;
  const auto gen_counts = generator_counts(sum);
  for (std::size_t i = 0; i < sum.size(); ++i) {
    const bool handle = is_handle(sum.prime(i));
    if (!handle) c.internals += internal_automorphisms(sum.prime(i)).size();
    c.slides_irreducible += gen_counts[i] * (irreducible - (handle ? 0 : 1));
    c.slides_left += gen_counts[i] * (m - (handle ? 1 : 0));
  }
  c.slides_right = c.slides_left;
  return c;
}

}  // namespace mcgkit
