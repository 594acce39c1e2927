#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fcsph/cartan.hpp"

namespace fcsph {

/// Words are sequences of 1-based simple reflection indices; the word
/// (i1, ..., ik) denotes s_{i1} ... s_{ik}, acting on roots right to left.
using Word = std::vector<int>;

std::string format_word(const Word& w);
/// Parses "1,2,1"; the empty string is the identity.
Word parse_word(std::string_view text);

/// s_i(r) for 1-based simple index i.
int apply_simple(const RootSystem& rs, int i, int r);

/// Finite Weyl group element stored as its permutation of root indices.
class WeylElement {
 public:
  static WeylElement identity(RootSystemPtr rs);
  /// Product of simple reflections; the word need not be reduced.
  static WeylElement from_word(RootSystemPtr rs, const Word& word);

  const RootSystem& system() const { return *rs_; }
  const RootSystemPtr& system_ptr() const { return rs_; }
  /// Image w(r) of root index r.
  int apply(int r) const { return action_[r]; }
  const std::vector<std::uint8_t>& action() const { return action_; }
  /// Lexicographically least reduced word.
  const Word& word() const { return word_; }
  const RootSet& inversions() const { return inv_; }
  int length() const { return static_cast<int>(word_.size()); }

  bool is_right_descent(int i) const { return !rs_->is_positive(action_[rs_->simple(i - 1)]); }

  WeylElement operator*(const WeylElement& o) const;
  WeylElement inverse() const;
  /// w * s_i
  WeylElement times_simple(int i) const;

  bool operator==(const WeylElement& o) const { return rs_ == o.rs_ && action_ == o.action_; }

 private:
  WeylElement(RootSystemPtr rs, std::vector<std::uint8_t> action);
  WeylElement(RootSystemPtr rs, std::vector<std::uint8_t> action, Word word);
  void compute_inversions();

  RootSystemPtr rs_;
  std::vector<std::uint8_t> action_;
  Word word_;
  RootSet inv_;

  friend std::vector<WeylElement> enumerate_weyl(RootSystemPtr, std::uint64_t);
};

WeylElement multiply(const WeylElement& u, const WeylElement& v);
WeylElement inverse(const WeylElement& u);

inline constexpr std::uint64_t kDefaultWeylBudget = 60000;

/// All elements by nondecreasing length, lexicographic on reduced words within a length.
/// Throws BudgetExceeded when |W| exceeds `budget`.
std::vector<WeylElement> enumerate_weyl(RootSystemPtr rs, std::uint64_t budget = kDefaultWeylBudget);

RootSet inversions(const WeylElement& w);

bool is_closed(const RootSystem& rs, const RootSet& psi);
bool is_biclosed(const RootSystem& rs, const RootSet& psi);
/// Closed under nonnegative real combinations inside Phi+, and so is the complement.
bool is_biconvex(const RootSystem& rs, const RootSet& psi);
/// Peels simple roots; throws NotBiconvex when psi is not an inversion set.
WeylElement element_from_biconvex(RootSystemPtr rs, const RootSet& psi);

bool bruhat_leq(const WeylElement& v, const WeylElement& w);
/// Phi(v) contained in Phi(w).
bool weak_leq(const WeylElement& v, const WeylElement& w);

struct ReducedWords {
  std::vector<Word> words;  ///< sorted lexicographically
  bool overflow = false;
};

inline constexpr std::size_t kDefaultWordCap = 1000000;

/// Closure of the canonical word under braid and commutation moves.
ReducedWords reduced_words(const WeylElement& w, std::size_t cap = kDefaultWordCap);

/// Definition-level deciders over all reduced words. Throw WordCapExceeded if the
/// search reaches `cap` words without finding a forbidden factor.
bool is_commutative_def(const WeylElement& w, std::size_t cap = kDefaultWordCap);
bool is_fc_def(const WeylElement& w, std::size_t cap = kDefaultWordCap);

/// No two members (repetition allowed) sum to a root.
bool is_commutative_set(const RootSystem& rs, const RootSet& psi);
/// psi contains no positive system of an irreducible rank-2 parabolic.
bool is_fc_set(const RootSystem& rs, const RootSet& psi);
/// For biclosed psi: no base pair of an irreducible rank-2 parabolic inside psi.
bool is_fc_set_by_bases(const RootSystem& rs, const RootSet& psi);
bool pairing_nonneg(const RootSystem& rs, const RootSet& psi);

bool is_commutative_inv(const WeylElement& w);
bool is_fc_inv(const WeylElement& w);

}  // namespace fcsph
