#pragma once

#include <compare>
#include <string>
#include <vector>

#include "fcsph/cartan.hpp"
#include "fcsph/weyl.hpp"

namespace fcsph {

/// Real affine root: finite root plus level * delta.
struct AffineRoot {
  int root = 0;   ///< finite root index
  int level = 0;  ///< coefficient of delta

  auto operator<=>(const AffineRoot&) const = default;
};

bool is_positive(const RootSystem& rs, const AffineRoot& a);
AffineRoot negate(const RootSystem& rs, const AffineRoot& a);
/// Affine simple root: index 0 is delta - theta, index i >= 1 is alpha_i.
AffineRoot affine_simple(const RootSystem& rs, int i);
std::string format(const RootSystem& rs, const AffineRoot& a);

/// Finite set of positive real affine roots, ordered by (level, root index).
class AffineRootSet {
 public:
  AffineRootSet() = default;
  /// Sorts, deduplicates and checks positivity.
  AffineRootSet(const RootSystem& rs, std::vector<AffineRoot> members);

  const std::vector<AffineRoot>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const AffineRoot& a) const;
  int max_level() const;

  bool operator==(const AffineRootSet&) const = default;

 private:
  std::vector<AffineRoot> members_;
};

AffineRoot affine_apply_simple(const RootSystem& rs, int i, const AffineRoot& a);
/// Pairing of the finite parts.
int affine_pairing(const RootSystem& rs, const AffineRoot& a, const AffineRoot& b);

/// Affine Weyl group element given by a reduced word over {0, ..., rank}.
class AffineWeylWord {
 public:
  /// Throws InvalidArgument when the word is not reduced.
  AffineWeylWord(RootSystemPtr rs, Word word);

  const RootSystem& system() const { return *rs_; }
  const Word& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  /// w(a), applying letters right to left.
  AffineRoot apply(const AffineRoot& a) const;
  /// Images of the affine simple roots; equal iff the elements are equal.
  const std::vector<AffineRoot>& canonical() const { return canonical_; }

  bool operator==(const AffineWeylWord& o) const { return rs_ == o.rs_ && canonical_ == o.canonical_; }

 private:
  RootSystemPtr rs_;
  Word word_;
  std::vector<AffineRoot> canonical_;
};

/// Inversion set of a word; throws InvalidArgument if the word is not reduced.
AffineRootSet affine_inversions(const RootSystem& rs, const Word& word);
AffineRootSet affine_inversions(const AffineWeylWord& w);

bool is_biconvex_affine(const RootSystem& rs, const AffineRootSet& s);
/// Throws NotBiconvex when s is not an inversion set.
AffineWeylWord element_from_biconvex_affine(RootSystemPtr rs, const AffineRootSet& s);

/// No two members (repetition allowed) sum to a real affine root.
bool is_commutative_affine(const RootSystem& rs, const AffineRootSet& s);
/// No irreducible rank-2 parabolic of the affine system has a positive system inside s.
bool is_fc_affine(const RootSystem& rs, const AffineRootSet& s);
bool pairing_nonneg_affine(const RootSystem& rs, const AffineRootSet& s);

}  // namespace fcsph
