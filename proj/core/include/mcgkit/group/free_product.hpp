#pragma once

#include "mcgkit/group/presentation.hpp"

namespace mcgkit {

/// Normal form of `w` in a free product of cyclic groups.
///
/// Every factor of `p` must be a single generator g with either no relator
/// (infinite cyclic) or one relator g^k. Without a factor structure each
/// generator is taken as its own factor.
/// The result is the alternating syllable form: adjacent syllables come from
/// distinct factors, finite-order exponents lie in [1, k), and each syllable
/// is written as |e| copies of g^sign(e). The result is empty iff w = 1.
///
/// Throws UnsupportedPresentation otherwise.
Word free_product_normal_form(const Presentation& p, const Word& w);

/// Orders of the cyclic factors of `p` (0 for infinite cyclic). Throws
/// UnsupportedPresentation if `p` is not a free product of cyclic groups.
std::vector<long long> cyclic_factor_orders(const Presentation& p);

}  // namespace mcgkit
