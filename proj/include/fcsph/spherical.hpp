#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fcsph/chevalley.hpp"

namespace fcsph {

/// Sorted multiset of four positive root indices.
using Multiset4 = std::array<int, 4>;

std::string format_multiset(const RootSystem& rs, const Multiset4& m);

/// True iff the polarization q_M = sum over distinct orderings of
/// ad(e_{m1}) ad(e_{m2}) ad(e_{m3}) ad(e_{m4}) vanishes on the whole algebra.
bool polarization_vanishes(const ChevalleyAlgebra& L, const Multiset4& m);

/// Non-vanishing polarizations of a root system, reduced to minimal supports.
///
/// (ad x)^4 = sum_M c^M q_M over multisets M of supp(x), with distinct monomials c^M,
/// so (ad x)^4 vanishes on a_Psi iff every q_M with M inside Psi vanishes.
class PolarizationIndex {
 public:
  struct Entry {
    RootSet support;
    Multiset4 multiset;
  };

  static std::shared_ptr<const PolarizationIndex> build(ChevalleyPtr L);

  const ChevalleyAlgebra& algebra() const { return *L_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::uint64_t multisets_examined() const { return examined_; }
  std::uint64_t nonvanishing() const { return nonvanishing_; }

  bool is_spherical(const RootSet& psi) const { return !witness(psi).has_value(); }
  /// A multiset inside psi with non-vanishing polarization, if any.
  std::optional<Multiset4> witness(const RootSet& psi) const;

 private:
  ChevalleyPtr L_;
  std::vector<Entry> entries_;
  std::uint64_t examined_ = 0;
  std::uint64_t nonvanishing_ = 0;
};

using PolarizationIndexPtr = std::shared_ptr<const PolarizationIndex>;

/// Direct enumeration of the multisets inside psi.
std::optional<Multiset4> spherical_witness_direct(const ChevalleyAlgebra& L, const RootSet& psi);
/// ad(x)^4 = 0 for every x in a_Psi.
bool is_spherical_subspace(const ChevalleyAlgebra& L, const RootSet& psi);

inline constexpr int kDefaultTrials = 5;

/// Random element of a_Psi with coefficients uniform in [1, 2^20].
Element sample_element(const ChevalleyAlgebra& L, const RootSet& psi, std::mt19937_64& rng);
/// Maximum height over `trials` random elements of a_Psi.
int generic_height(const ChevalleyAlgebra& L, const RootSet& psi, int trials = kDefaultTrials,
                   std::uint64_t seed = 0);

struct OrbitFingerprint {
  int orbit_dim = 0;       ///< rank of ad(x) = dim g - dim ker ad(x)
  int height = 0;
  std::vector<int> ranks;  ///< ranks of ad(x)^k, k = 1, 2, ...

  bool operator==(const OrbitFingerprint&) const = default;
  auto operator<=>(const OrbitFingerprint&) const = default;
};

/// Fingerprint of the most generic sample (largest orbit dimension and rank sequence).
OrbitFingerprint orbit_fingerprint(const ChevalleyAlgebra& L, const RootSet& psi, int trials = kDefaultTrials,
                                   std::uint64_t seed = 0);

/// Neither a + b nor a - b is a root. Throws InvalidArgument if a = +-b.
bool strongly_orthogonal(const RootSystem& rs, int a, int b);

enum class OrthogonalPattern { None, D4, BF4, B3 };
std::string to_string(OrthogonalPattern p);

struct PatternMatch {
  OrthogonalPattern pattern = OrthogonalPattern::None;
  std::vector<int> roots;  ///< matched subset, in pattern order
};

/// First matching non-spherical orthogonal configuration (D4, then BF4, then B3): the
/// half-sum condition together with the type of Phi cap span(matched roots).
/// Throws InvalidArgument when gamma is not pairwise orthogonal.
PatternMatch classify_nonspherical_orthogonal(const RootSystem& rs, const std::vector<int>& gamma);
/// Searches all orthogonal subsets of psi for a pattern.
PatternMatch find_orthogonal_pattern(const RootSystem& rs, const RootSet& psi);

/// Configuration gamma_1 + ... + gamma_4 = alpha - beta with nonnegative pairings
/// and a non-orthogonal underlying set.
struct Quadruple {
  Multiset4 gammas;
  int alpha = -1;
  int beta = -1;
  bool beta_is_minus_alpha = false;
  bool alpha_long = false;
  int long_count = 0;
  bool long_orthogonal_to_rest = true;
  bool all_short = false;
  bool splits_into_equal_pair_sums = false;
};

struct QuadrupleSweep {
  std::uint64_t multisets_examined = 0;
  std::vector<Quadruple> configurations;
};

QuadrupleSweep sweep_quadruples(const RootSystem& rs);

}  // namespace fcsph
