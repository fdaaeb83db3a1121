#pragma once

#include <vector>

#include "mcgkit/group/presentation.hpp"
#include "mcgkit/manifold/connected_sum.hpp"
#include "mcgkit/mcg/generator.hpp"

namespace mcgkit {

/// Cataloged presentation of the frame-fixing mapping class group: a single
/// lens space, a single handle, RP^3 # RP^3 as <omega, mu | omega^2, mu^2>,
/// or a single generic prime with stored data. Throws UnsupportedSum otherwise.
Presentation mcg_presentation(const ConnectedSum& sum);

/// <omega, mu12, mu21 | omega^2, mu12^2, mu21^2, omega mu12 omega^-1 mu21^-1>.
Presentation rp3_sum_three_generator_presentation();

bool is_rp3_sum(const ConnectedSum& sum);

struct SemidirectDecomposition {
  std::vector<MCGGenerator> slide_subgroup_generators;
  std::vector<MCGGenerator> particle_generators;
  std::vector<MCGGenerator> kernel_generators;
  /// Slides split off as a normal subgroup complemented by the particle group
  /// exactly when the sum has no handle.
  bool splits = false;
};

SemidirectDecomposition decompose_semidirect(const ConnectedSum& sum);

}  // namespace mcgkit
