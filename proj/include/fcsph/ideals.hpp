#pragma once

#include <vector>

#include "fcsph/affine.hpp"
#include "fcsph/cartan.hpp"

namespace fcsph {

/// Upward-closed subset of the positive roots with its layer sequence.
struct CombinatorialIdeal {
  RootSet members;
  /// layers[0] = members, layers[k] = (layers[k-1] + members) cap Phi+; trailing empties trimmed.
  std::vector<RootSet> layers;

  /// Minimal elements of the root poset inside the ideal.
  std::vector<int> generators(const RootSystem& rs) const;
};

/// b - a is a nonnegative combination reachable by adding simple roots inside Phi+.
bool root_poset_leq(const RootSystem& rs, int a, int b);

bool is_ideal(const RootSystem& rs, const RootSet& psi);
std::vector<RootSet> compute_layers(const RootSystem& rs, const RootSet& psi);
/// Throws InvalidArgument when psi is not upward closed.
CombinatorialIdeal make_ideal(const RootSystem& rs, const RootSet& psi);
CombinatorialIdeal ideal_generated_by(const RootSystem& rs, const std::vector<int>& generators);

/// All ideals ordered by cardinality, then lexicographically by member indices.
std::vector<CombinatorialIdeal> enumerate_ideals(const RootSystem& rs);

/// No two members (repetition allowed) sum to a root.
bool is_abelian(const RootSystem& rs, const RootSet& psi);

/// {k delta - alpha : alpha in layers[k-1]}.
AffineRootSet psi_hat(const RootSystem& rs, const CombinatorialIdeal& ideal);
AffineWeylWord w_of_ideal(RootSystemPtr rs, const CombinatorialIdeal& ideal);

}  // namespace fcsph
