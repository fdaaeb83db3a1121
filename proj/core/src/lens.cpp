#include "mcgkit/manifold/lens.hpp"

#include <numeric>

#include "mcgkit/errors.hpp"

namespace mcgkit {

namespace {

using Wide = __int128;

void check_lens_parameters(long long p, long long q) {
  if (p < 1) throw BadParameters("lens space needs p >= 1, got " + std::to_string(p));
  if (std::gcd(p, q) != 1)
    throw BadParameters("gcd(" + std::to_string(p) + ", " + std::to_string(q) + ") != 1");
}

long long mul_mod(long long a, long long b, long long p) {
  return static_cast<long long>((static_cast<Wide>(a) * b) % p);
}

}  // namespace

long long mod_positive(long long q, long long p) {
  const long long r = q % p;
  return r < 0 ? r + p : r;
}

std::string to_string(NamedGroup g) {
  switch (g) {
    case NamedGroup::Trivial: return "Trivial";
    case NamedGroup::Z2: return "Z2";
    case NamedGroup::Z4: return "Z4";
    case NamedGroup::Z2xZ2: return "Z2xZ2";
  }
  return "?";
}

Presentation presentation_of(NamedGroup g) {
  switch (g) {
    case NamedGroup::Trivial: return Presentation({}, {});
    case NamedGroup::Z2: return Presentation({"s"}, {Word::power(0, 2)});
    case NamedGroup::Z4: return Presentation({"t"}, {Word::power(0, 4)});
    case NamedGroup::Z2xZ2: {
      const Word t = Word::generator(0);
      const Word s = Word::generator(1);
      return Presentation({"t", "s"}, {t.pow(2), s.pow(2), commutator(t, s)});
    }
  }
  throw BadParameters("unknown named group");
}

bool lens_homeomorphic(long long p, long long q, long long q_prime) {
  check_lens_parameters(p, q);
  check_lens_parameters(p, q_prime);
  const long long a = mod_positive(q, p);
  const long long b = mod_positive(q_prime, p);
  if (b == a || b == mod_positive(-a, p)) return true;
  const long long prod = mul_mod(a, b, p);
  return prod == mod_positive(1, p) || prod == mod_positive(-1, p);
}

bool lens_homotopy_equivalent(long long p, long long q, long long q_prime) {
  check_lens_parameters(p, q);
  check_lens_parameters(p, q_prime);
  const long long prod = mul_mod(mod_positive(q, p), mod_positive(q_prime, p), p);
  const long long neg = mod_positive(-prod, p);
  for (long long n = 0; n < p; ++n) {
    const long long sq = mul_mod(n, n, p);
    if (sq == prod || sq == neg) return true;
  }
  return false;
}

NamedGroup lens_mcg(long long p, long long q) {
  check_lens_parameters(p, q);
  if (p <= 2) return NamedGroup::Trivial;
  const long long r = mod_positive(q, p);
  const long long sq = mul_mod(r, r, p);
  const bool plus_minus_one = r == 1 || r == p - 1;
  if (sq == 1 && !plus_minus_one) return NamedGroup::Z2xZ2;
  if (sq == p - 1) return NamedGroup::Z4;
  return NamedGroup::Z2;
}

}  // namespace mcgkit
