#include "mcgkit/mcg/automorphism.hpp"

#include <memory>

#include "mcgkit/errors.hpp"
#include "mcgkit/group/free_product.hpp"

namespace mcgkit {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Word shifted(const Word& w, std::size_t offset) {
  Word out;
  for (const auto& l : w) out.push_back({l.gen + static_cast<int>(offset), l.exp});
  return out;
}

struct Layout {
  std::vector<std::size_t> offsets;
  std::vector<std::size_t> counts;

  int gen(std::size_t prime, std::size_t j) const {
    return static_cast<int>(offsets.at(prime) + j);
  }
};

Layout layout_of(const ConnectedSum& sum, const Presentation& p) {
  Layout lay;
  std::size_t offset = 0;
  for (const auto& prime : sum.primes()) {
    const auto count = fundamental_group(prime).generator_count();
    lay.offsets.push_back(offset);
    lay.counts.push_back(count);
    offset += count;
  }
  if (p.generator_count() != offset)
    throw IncompatiblePresentation("presentation has " + std::to_string(p.generator_count()) +
                                   " generators, the sum needs " + std::to_string(offset));
  if (!p.has_factor_structure() || p.factors().size() != sum.size())
    throw IncompatiblePresentation("presentation lacks one factor per prime");
  for (std::size_t i = 0; i < sum.size(); ++i) {
    const auto& f = p.factors()[i];
    for (std::size_t j = 0; j < lay.counts[i]; ++j)
      if (f.size() != lay.counts[i] || f[j] != lay.gen(i, j))
        throw IncompatiblePresentation("factor " + std::to_string(i + 1) +
                                       " does not match prime " + describe(sum.prime(i)));
  }
  return lay;
}

std::size_t handle_gen_checked(const Layout& lay, const ConnectedSum& sum, std::size_t h) {
  if (!is_handle(sum.prime(h)))
    throw IncompatiblePresentation("prime " + std::to_string(h + 1) + " is not a handle");
  return lay.offsets[h];
}

// Builds the map for generator g, or its inverse when `inverse` is set.
Automorphism build(const ConnectedSum& sum, const MCGGenerator& g, const Presentation& p,
                   bool inverse) {
  const Layout lay = layout_of(sum, p);
  Automorphism f = Automorphism::identity(p.generator_count());
  const auto check_prime = [&](std::size_t i) {
    if (i >= sum.size()) throw IncompatiblePresentation("prime index out of range");
  };
  const auto along = [&](std::size_t i, std::size_t j) {
    check_prime(i);
    if (j >= lay.counts[i]) throw IncompatiblePresentation("generator index out of range");
    return Word::generator(lay.gen(i, j));
  };

  std::visit(
      Overloaded{
          [&](const InternalGen& x) {
            check_prime(x.prime);
            const auto autos = internal_automorphisms(sum.prime(x.prime));
            if (x.index >= autos.size())
              throw IncompatiblePresentation("no internal automorphism " +
                                             std::to_string(x.index + 1));
            const auto& images = inverse ? autos[x.index].inverse_images : autos[x.index].images;
            for (std::size_t j = 0; j < lay.counts[x.prime]; ++j)
              f.images[lay.gen(x.prime, j)] = shifted(images[j], lay.offsets[x.prime]);
          },
          [&](const SpinGen& x) {
            check_prime(x.handle);
            const auto a = handle_gen_checked(lay, sum, x.handle);
            f.images[a] = Word::generator(static_cast<int>(a), -1);
          },
          [&](const ExchangeGen& x) {
            check_prime(x.i);
            check_prime(x.k);
            if (!same_species(sum.prime(x.i), sum.prime(x.k)))
              throw IncompatiblePresentation("exchange of primes of different species");
            for (std::size_t j = 0; j < lay.counts[x.i]; ++j) {
              f.images[lay.gen(x.i, j)] = Word::generator(lay.gen(x.k, j));
              f.images[lay.gen(x.k, j)] = Word::generator(lay.gen(x.i, j));
            }
          },
          [&](const SlideIrreducibleGen& x) {
            Word c = along(x.i, x.j);
            check_prime(x.k);
            if (x.i == x.k || !is_irreducible(sum.prime(x.k)))
              throw IncompatiblePresentation("slid prime must be irreducible and distinct");
            if (inverse) c = c.inverse();
            for (std::size_t l = 0; l < lay.counts[x.k]; ++l)
              f.images[lay.gen(x.k, l)] =
                  free_reduce(c.inverse() * Word::generator(lay.gen(x.k, l)) * c);
          },
          [&](const SlideHandleLeftGen& x) {
            Word c = along(x.i, x.j);
            check_prime(x.k);
            if (x.i == x.k) throw IncompatiblePresentation("handle slid through itself");
            const auto a = static_cast<int>(handle_gen_checked(lay, sum, x.k));
            f.images[a] = inverse ? c * Word::generator(a) : c.inverse() * Word::generator(a);
          },
          [&](const SlideHandleRightGen& x) {
            Word c = along(x.i, x.j);
            check_prime(x.k);
            if (x.i == x.k) throw IncompatiblePresentation("handle slid through itself");
            const auto a = static_cast<int>(handle_gen_checked(lay, sum, x.k));
            f.images[a] = inverse ? Word::generator(a) * c.inverse() : Word::generator(a) * c;
          },
          [&](const NeckTwistGen& x) { check_prime(x.prime); },
          [&](const HandleTwistGen& x) { check_prime(x.handle); },
      },
      g);

  if (check_relators(p, f) == RelatorCheck::Fails)
    throw IncompatiblePresentation("induced map of " + label(g, sum) +
                                   " does not preserve the relators");
  return f;
}

// Exact triviality test when all factors are cyclic, decider otherwise.
class TrivialityOracle {
 public:
  TrivialityOracle(const Presentation& p, const Budget& budget) : p_(p), budget_(budget) {
    try {
      cyclic_factor_orders(p);
      exact_ = true;
    } catch (const UnsupportedPresentation&) {
      exact_ = false;
    }
  }

  RelatorCheck is_trivial(const Word& w) {
    if (exact_) return free_product_normal_form(p_, w).empty() ? RelatorCheck::Holds
                                                               : RelatorCheck::Fails;
    if (!decider_) decider_ = std::make_unique<WordDecider>(p_, budget_);
    const auto v = decider_->decide(w);
    if (std::holds_alternative<TrivialVerdict>(v)) return RelatorCheck::Holds;
    if (std::holds_alternative<NontrivialVerdict>(v)) return RelatorCheck::Fails;
    return RelatorCheck::Unknown;
  }

 private:
  const Presentation& p_;
  Budget budget_;
  bool exact_ = false;
  std::unique_ptr<WordDecider> decider_;
};

RelatorCheck all_trivial(const Presentation& p, const std::vector<Word>& words,
                         const Budget& budget) {
  TrivialityOracle oracle(p, budget);
  RelatorCheck result = RelatorCheck::Holds;
  for (const auto& w : words) {
    const auto r = oracle.is_trivial(w);
    if (r == RelatorCheck::Fails) return r;
    if (r == RelatorCheck::Unknown) result = r;
  }
  return result;
}

}  // namespace

Automorphism Automorphism::identity(std::size_t generator_count) {
  Automorphism f;
  for (std::size_t g = 0; g < generator_count; ++g)
    f.images.push_back(Word::generator(static_cast<int>(g)));
  return f;
}

Word Automorphism::apply(const Word& w) const {
  Word out;
  for (const auto& l : w) {
    if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= images.size())
      throw UnknownGenerator("generator " + std::to_string(l.gen) + " has no image");
    const Word& img = images[l.gen];
    out.append(img.pow(l.exp));
  }
  return free_reduce(out);
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
  Automorphism out;
  for (const auto& w : g.images) out.images.push_back(f.apply(w));
  return out;
}

std::vector<std::size_t> prime_generator_offsets(const ConnectedSum& sum) {
  std::vector<std::size_t> out;
  std::size_t offset = 0;
  for (const auto& prime : sum.primes()) {
    out.push_back(offset);
    offset += fundamental_group(prime).generator_count();
  }
  return out;
}

Automorphism induced_automorphism(const ConnectedSum& sum, const MCGGenerator& g,
                                  const Presentation& p) {
  return build(sum, g, p, false);
}

Automorphism induced_automorphism(const ConnectedSum& sum, const MCGGenerator& g) {
  return build(sum, g, fundamental_group_sum(sum), false);
}

Automorphism inverse_induced_automorphism(const ConnectedSum& sum, const MCGGenerator& g,
                                          const Presentation& p) {
  return build(sum, g, p, true);
}

RelatorCheck check_relators(const Presentation& p, const Automorphism& f, const Budget& budget) {
  if (f.images.size() != p.generator_count())
    throw IncompatiblePresentation("automorphism size does not match the presentation");
  std::vector<Word> images;
  for (const auto& r : p.relators()) images.push_back(f.apply(r));
  return all_trivial(p, images, budget);
}

RelatorCheck check_equal_on_generators(const Presentation& p, const Automorphism& f,
                                       const Automorphism& target, const Budget& budget) {
  if (f.images.size() != p.generator_count() || target.images.size() != p.generator_count())
    throw IncompatiblePresentation("automorphism size does not match the presentation");
  std::vector<Word> quotients;
  for (std::size_t g = 0; g < f.images.size(); ++g)
    quotients.push_back(free_reduce(f.images[g] * target.images[g].inverse()));
  return all_trivial(p, quotients, budget);
}

}  // namespace mcgkit
