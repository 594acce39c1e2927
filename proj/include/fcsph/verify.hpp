#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fcsph/chevalley.hpp"
#include "fcsph/ideals.hpp"
#include "fcsph/report.hpp"
#include "fcsph/spherical.hpp"
#include "fcsph/weyl.hpp"

namespace fcsph {

struct VerifyOptions {
  int trials = kDefaultTrials;
  std::uint64_t seed = 0;
  int workers = 1;
  std::uint64_t budget = kDefaultWeylBudget;
  std::size_t word_cap = kDefaultWordCap;
  /// Cross-check the deterministic oracle against sampled heights.
  bool randomized = true;
};

/// Shared read-only data for the exhaustive verifiers of one type.
struct VerifyContext {
  RootSystemPtr rs;
  ChevalleyPtr L;
  PolarizationIndexPtr index;
  std::vector<WeylElement> W;
  std::vector<CombinatorialIdeal> ideals;
};

/// Throws BudgetExceeded when the Weyl group is needed and exceeds the budget.
VerifyContext make_context(const CartanType& type, const VerifyOptions& opts, bool need_weyl = true,
                           bool need_ideals = true);

/// FC (commutative for G2) against sphericality of a_w over the whole Weyl group.
Report verify_theorem1(const VerifyContext& ctx, const VerifyOptions& opts);
/// Affine FC (commutative for G2) of w_a against sphericality over all ideals.
Report verify_theorem2(const VerifyContext& ctx, const VerifyOptions& opts);
/// Sphericality against the pairing criterion over inversion sets and ideals.
Report verify_subspace_theorem(const VerifyContext& ctx, const VerifyOptions& opts);
/// Negative-pairing pairs, the quadruple sweep and orthogonal patterns.
Report verify_lemmas(const VerifyContext& ctx, const VerifyOptions& opts);
/// Every G2-specific statement; throws InvalidArgument for other types.
Report verify_g2(const VerifyContext& ctx, const VerifyOptions& opts);
/// Word-level deciders against the inversion-set criteria.
Report verify_word_criteria(const VerifyContext& ctx, const VerifyOptions& opts);

/// Maximal elements, under inclusion, of the spherical ideals.
std::vector<CombinatorialIdeal> maximal_spherical_ideals(const VerifyContext& ctx);

}  // namespace fcsph
