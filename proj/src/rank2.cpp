#include "fcsph/rank2.hpp"

#include <algorithm>

#include "fcsph/errors.hpp"

namespace fcsph {

std::optional<IntegerPlane> IntegerPlane::spanned_by(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) throw InvalidArgument("IntegerPlane: dimension mismatch");
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::int64_t d = std::int64_t{a[i]} * b[j] - std::int64_t{a[j]} * b[i];
      if (d != 0) {
        IntegerPlane p;
        p.a_.assign(a.begin(), a.end());
        p.b_.assign(b.begin(), b.end());
        p.i_ = i;
        p.j_ = j;
        p.det_ = d;
        return p;
      }
    }
  }
  return std::nullopt;
}

std::optional<std::array<std::int64_t, 2>> IntegerPlane::coordinates(std::span<const int> v) const {
  // Cramer on the chosen minor, then check the remaining coordinates.
  const std::int64_t s = std::int64_t{v[i_]} * b_[j_] - std::int64_t{v[j_]} * b_[i_];
  const std::int64_t t = std::int64_t{a_[i_]} * v[j_] - std::int64_t{a_[j_]} * v[i_];
  for (std::size_t k = 0; k < a_.size(); ++k) {
    if (det_ * v[k] != s * a_[k] + t * b_[k]) return std::nullopt;
  }
  return std::array<std::int64_t, 2>{s, t};
}

std::string to_string(Rank2Type t) {
  switch (t) {
    case Rank2Type::A1xA1: return "A1xA1";
    case Rank2Type::A2: return "A2";
    case Rank2Type::B2: return "B2";
    case Rank2Type::G2: return "G2";
  }
  return "?";
}

Rank2Layout classify_rank2(const std::vector<std::array<std::int64_t, 2>>& points) {
  Rank2Layout out;
  switch (points.size()) {
    case 4: out.type = Rank2Type::A1xA1; break;
    case 6: out.type = Rank2Type::A2; break;
    case 8: out.type = Rank2Type::B2; break;
    case 12: out.type = Rank2Type::G2; break;
    default: throw InvalidArgument("classify_rank2: not a rank-2 root system");
  }
  const int n = static_cast<int>(points.size());
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      const auto& p = points[x];
      const auto& q = points[y];
      const std::int64_t d = p[0] * q[1] - p[1] * q[0];
      if (d == 0) continue;
      std::vector<int> positive;
      bool is_base = true;
      for (int m = 0; m < n && is_base; ++m) {
        const auto& r = points[m];
        const std::int64_t sn = r[0] * q[1] - r[1] * q[0];
        const std::int64_t tn = p[0] * r[1] - p[1] * r[0];
        if (sn % d != 0 || tn % d != 0) {
          is_base = false;
          break;
        }
        const std::int64_t s = sn / d, t = tn / d;
        if (s >= 0 && t >= 0) {
          positive.push_back(m);
        } else if (!(s <= 0 && t <= 0)) {
          is_base = false;
        }
      }
      if (is_base) {
        out.bases.emplace_back(x, y);
        out.positive_systems.push_back(std::move(positive));
      }
    }
  }
  if (out.positive_systems.size() != points.size()) {
    throw InvalidArgument("classify_rank2: unexpected number of positive systems");
  }
  return out;
}

}  // namespace fcsph
