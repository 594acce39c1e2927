#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fcsph {

/// Integer plane spanned by two linearly independent integer vectors.
///
/// Membership is decided exactly: v lies in the plane iff det*v = s*a + t*b
/// for integers s, t, where det is a nonzero 2x2 minor of (a, b).
class IntegerPlane {
 public:
  /// Empty optional when a and b are proportional.
  static std::optional<IntegerPlane> spanned_by(std::span<const int> a, std::span<const int> b);

  /// Scaled coordinates (s, t) with det*v = s*a + t*b, if v is in the plane.
  std::optional<std::array<std::int64_t, 2>> coordinates(std::span<const int> v) const;

  std::int64_t det() const { return det_; }

 private:
  std::vector<int> a_, b_;
  int i_ = 0, j_ = 0;
  std::int64_t det_ = 0;
};

enum class Rank2Type { A1xA1, A2, B2, G2 };

std::string to_string(Rank2Type t);

/// A rank-2 root system given by planar coordinates of its members.
struct Rank2Layout {
  Rank2Type type = Rank2Type::A1xA1;
  /// Unordered base pairs (indices into the member list); one per positive system.
  std::vector<std::pair<int, int>> bases;
  /// Positive system attached to each base, as indices into the member list.
  std::vector<std::vector<int>> positive_systems;

  bool irreducible() const { return type != Rank2Type::A1xA1; }
};

/// Classifies a rank-2 root system from planar coordinates of all its roots
/// (both signs present). Throws InvalidArgument on a malformed configuration.
Rank2Layout classify_rank2(const std::vector<std::array<std::int64_t, 2>>& points);

}  // namespace fcsph
