#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fcsph/rank2.hpp"
#include "fcsph/root_set.hpp"

namespace fcsph {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Cartan type of a finite irreducible root system, e.g. B3 or G2.
struct CartanType {
  Family family = Family::A;
  int rank = 1;

  /// Throws InvalidCartanType when the rank is not allowed for the family.
  CartanType(Family f, int r);
  CartanType() = default;

  /// Parses strings such as "B3", "g2" or "E6".
  static CartanType parse(std::string_view text);

  std::string name() const;
  bool simply_laced() const;
  bool is_g2() const { return family == Family::G; }
  /// Classical order of the Weyl group.
  std::uint64_t weyl_order() const;

  bool operator==(const CartanType&) const = default;
};

class RootSystem;

/// Handle to a root of a specific system; used at API boundaries that must
/// reject roots coming from another system.
struct Root {
  const RootSystem* owner = nullptr;
  int index = -1;

  bool operator==(const Root&) const = default;
};

/// Rank-2 parabolic subsystem: the roots in the plane spanned by two roots.
struct Rank2Parabolic {
  std::vector<int> members;  ///< root indices, ascending
  Rank2Layout layout;        ///< positive systems are indices into `members`
  /// Positive systems made of positive roots only, as sets over Phi+.
  std::vector<RootSet> positive_sets;
  /// Bases (root indices) of those positive systems.
  std::vector<std::pair<int, int>> positive_bases;

  Rank2Type type() const { return layout.type; }
  /// Positive systems expressed as root indices.
  std::vector<std::vector<int>> positive_systems() const;
};

/// Immutable tables for a finite irreducible (reduced, crystallographic) root system.
///
/// Roots are integer coefficient vectors over the simple roots. Positive roots come
/// first, sorted by height and then by descending lexicographic order of their
/// coefficients (so the simple roots occupy indices 0..rank-1 in Bourbaki order);
/// the negative of positive root k has index num_positive()+k.
/// The inner product is normalised so that short roots have squared length 2.
class RootSystem {
 public:
  /// `swap_simple` reverses the numbering of the two simple roots of a rank-2
  /// system (e.g. B2 with a short first simple root).
  static std::shared_ptr<const RootSystem> build(CartanType type, bool swap_simple = false);

  const CartanType& type() const { return type_; }
  bool swapped() const { return swapped_; }
  int rank() const { return rank_; }
  int num_roots() const { return static_cast<int>(coords_.size()); }
  int num_positive() const { return npos_; }

  std::span<const int> coords(int r) const { return coords_[r]; }
  int height(int r) const { return height_[r]; }
  bool is_positive(int r) const { return r < npos_; }
  int negate(int r) const { return r < npos_ ? r + npos_ : r - npos_; }
  /// Root index of the simple root alpha_{i+1} (i is 0-based).
  int simple(int i) const { return i; }
  bool is_simple(int r) const { return r < rank_; }

  int gram(int i, int j) const { return gram_[i * rank_ + j]; }
  int inner(int a, int b) const { return inner_[a * num_roots() + b]; }
  int norm2(int r) const { return inner(r, r); }
  /// Cartan integer 2(a,b)/(b,b).
  int pairing(int a, int b) const { return pairing_[a * num_roots() + b]; }
  /// Index of a+b when it is a root, otherwise -1.
  int sum(int a, int b) const { return sum_[a * num_roots() + b]; }
  int difference(int a, int b) const { return sum(a, negate(b)); }

  std::optional<int> find(std::span<const int> coords) const;

  /// Index of s_a(r) = r - <r,a> a.
  int reflect(int a, int r) const { return reflect_[a * num_roots() + r]; }

  int theta() const { return theta_; }
  int theta_short() const { return theta_s_; }
  bool is_long(int r) const { return norm2(r) == max_norm2_; }
  bool is_short(int r) const { return norm2(r) == min_norm2_; }
  bool simply_laced() const { return max_norm2_ == min_norm2_; }
  int coxeter_number() const { return height_[theta_] + 1; }

  /// Max k >= 0 with b - k*a a root. Throws InvalidArgument if a = +-b.
  int root_string_p(int a, int b) const;
  /// Roots in span{a, b}. Throws InvalidArgument for proportional inputs.
  Rank2Parabolic rank2_parabolic(int a, int b) const;

  /// Index of the memoised parabolic spanned by positive roots a != b.
  int plane_of(int a, int b) const { return plane_id_[a * npos_ + b]; }
  const Rank2Parabolic& plane(int id) const { return planes_[id]; }
  int num_planes() const { return static_cast<int>(planes_.size()); }

  Root root(int index) const { return Root{this, index}; }
  int index_of(const Root& r) const;

  RootSet empty_set() const { return RootSet(npos_); }
  RootSet positive_set() const { return RootSet::full(npos_); }

  /// Human-readable form such as "a1+2a2".
  std::string format(int r) const;

 private:
  RootSystem() = default;
  void build_tables();

  CartanType type_;
  bool swapped_ = false;
  int rank_ = 0;
  int npos_ = 0;
  std::vector<int> gram_;
  std::vector<std::vector<int>> coords_;
  std::vector<int> height_;
  std::vector<int> inner_;
  std::vector<int> pairing_;
  std::vector<int> sum_;
  std::vector<int> reflect_;
  std::map<std::vector<int>, int> lookup_;
  int theta_ = 0, theta_s_ = 0;
  int max_norm2_ = 0, min_norm2_ = 0;
  std::vector<int> plane_id_;
  std::vector<Rank2Parabolic> planes_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// Checked accessors over Root handles.
int pairing(const RootSystem& rs, const Root& a, const Root& b);
std::optional<Root> root_sum(const RootSystem& rs, const Root& a, const Root& b);
int root_string_p(const RootSystem& rs, const Root& a, const Root& b);

/// Cartan integer product <a,b><b,a> for simple roots, giving m(s_i, s_j).
int braid_order(const RootSystem& rs, int i, int j);

/// Parses comma-separated simple-root coefficients ("2,1") into a root index.
int parse_root(const RootSystem& rs, std::string_view text);

}  // namespace fcsph
