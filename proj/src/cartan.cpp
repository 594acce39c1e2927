#include "fcsph/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "fcsph/errors.hpp"

namespace fcsph {

namespace {

bool rank_allowed(Family f, int r) {
  switch (f) {
    case Family::A: return r >= 1;
    case Family::B:
    case Family::C: return r >= 2;
    case Family::D: return r >= 4;
    case Family::E: return r >= 6 && r <= 8;
    case Family::F: return r == 4;
    case Family::G: return r == 2;
  }
  return false;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// Gram matrix of the simple roots in Bourbaki numbering, short roots of squared length 2.
std::vector<int> bourbaki_gram(const CartanType& t) {
  const int n = t.rank;
  std::vector<int> g(static_cast<std::size_t>(n * n), 0);
  auto set = [&](int i, int j, int v) {
    g[i * n + j] = v;
    g[j * n + i] = v;
  };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i < n; ++i) g[i * n + i] = 2;
      for (int i = 0; i + 1 < n; ++i) set(i, i + 1, -1);
      break;
    case Family::B:
      // alpha_1..alpha_{n-1} long, alpha_n short.
      for (int i = 0; i < n - 1; ++i) g[i * n + i] = 4;
      g[(n - 1) * n + (n - 1)] = 2;
      for (int i = 0; i + 1 < n; ++i) set(i, i + 1, -2);
      break;
    case Family::C:
      // alpha_1..alpha_{n-1} short, alpha_n long.
      for (int i = 0; i < n - 1; ++i) g[i * n + i] = 2;
      g[(n - 1) * n + (n - 1)] = 4;
      for (int i = 0; i + 2 < n; ++i) set(i, i + 1, -1);
      set(n - 2, n - 1, -2);
      break;
    case Family::D:
      for (int i = 0; i < n; ++i) g[i * n + i] = 2;
      for (int i = 0; i + 2 < n; ++i) set(i, i + 1, -1);
      set(n - 3, n - 1, -1);
      break;
    case Family::E:
      // Bourbaki: 1-3-4-5-6(-7-8), with 2 attached to 4.
      for (int i = 0; i < n; ++i) g[i * n + i] = 2;
      set(0, 2, -1);
      set(1, 3, -1);
      set(2, 3, -1);
      for (int i = 3; i + 1 < n; ++i) set(i, i + 1, -1);
      break;
    case Family::F:
      g[0] = 4;
      g[1 * n + 1] = 4;
      g[2 * n + 2] = 2;
      g[3 * n + 3] = 2;
      set(0, 1, -2);
      set(1, 2, -2);
      set(2, 3, -1);
      break;
    case Family::G:
      // alpha_1 short, alpha_2 long.
      g[0] = 2;
      g[3] = 6;
      set(0, 1, -3);
      break;
  }
  return g;
}

}  // namespace

CartanType::CartanType(Family f, int r) : family(f), rank(r) {
  if (!rank_allowed(f, r)) {
    throw InvalidCartanType("invalid rank " + std::to_string(r) + " for family " +
                            std::string(1, static_cast<char>(f)));
  }
}

CartanType CartanType::parse(std::string_view text) {
  if (text.size() < 2) throw InvalidCartanType("cannot parse Cartan type '" + std::string(text) + "'");
  const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (c < 'A' || c > 'G') throw InvalidCartanType("unknown family in '" + std::string(text) + "'");
  int r = 0;
  auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), r);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InvalidCartanType("cannot parse rank in '" + std::string(text) + "'");
  }
  return CartanType(static_cast<Family>(c), r);
}

std::string CartanType::name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

bool CartanType::simply_laced() const {
  return family == Family::A || family == Family::D || family == Family::E;
}

std::uint64_t CartanType::weyl_order() const {
  switch (family) {
    case Family::A: return factorial(rank + 1);
    case Family::B:
    case Family::C: return (std::uint64_t{1} << rank) * factorial(rank);
    case Family::D: return (std::uint64_t{1} << (rank - 1)) * factorial(rank);
    case Family::E: return rank == 6 ? 51840 : rank == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

std::vector<std::vector<int>> Rank2Parabolic::positive_systems() const {
  std::vector<std::vector<int>> out;
  for (const auto& ps : layout.positive_systems) {
    std::vector<int> roots;
    for (int m : ps) roots.push_back(members[m]);
    std::sort(roots.begin(), roots.end());
    out.push_back(std::move(roots));
  }
  return out;
}

std::shared_ptr<const RootSystem> RootSystem::build(CartanType type, bool swap_simple) {
  if (swap_simple && type.rank != 2) throw InvalidArgument("swap_simple requires a rank-2 type");
  std::shared_ptr<RootSystem> rs(new RootSystem());
  rs->type_ = type;
  rs->swapped_ = swap_simple;
  rs->rank_ = type.rank;
  rs->gram_ = bourbaki_gram(type);
  if (swap_simple) std::swap(rs->gram_[0], rs->gram_[3]);
  rs->build_tables();
  return rs;
}

void RootSystem::build_tables() {
  const int n = rank_;
  auto inner_coords = [&](const std::vector<int>& x, const std::vector<int>& y) {
    int s = 0;
    for (int i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < n; ++j) s += x[i] * gram_[i * n + j] * y[j];
    }
    return s;
  };

  // Closure from the simple roots: beta + alpha_i is a root iff q > 0, where
  // p - q = <beta, alpha_i> and p counts the alpha_i-string below beta.
  std::vector<std::vector<int>> positive;
  std::map<std::vector<int>, int> seen;
  for (int i = 0; i < n; ++i) {
    std::vector<int> c(n, 0);
    c[i] = 1;
    seen[c] = static_cast<int>(positive.size());
    positive.push_back(c);
  }
  for (std::size_t k = 0; k < positive.size(); ++k) {
    const std::vector<int> beta = positive[k];
    for (int i = 0; i < n; ++i) {
      std::vector<int> ai(n, 0);
      ai[i] = 1;
      if (beta == ai) continue;
      int p = 0;
      std::vector<int> down = beta;
      while (true) {
        down[i] -= 1;
        if (down[i] < 0 || !seen.count(down)) break;
        ++p;
      }
      const int pair = 2 * inner_coords(beta, ai) / gram_[i * n + i];
      const int q = p - pair;
      if (q > 0) {
        std::vector<int> up = beta;
        up[i] += 1;
        if (!seen.count(up)) {
          seen[up] = static_cast<int>(positive.size());
          positive.push_back(up);
        }
      }
    }
  }

  auto ht = [](const std::vector<int>& c) {
    int s = 0;
    for (int x : c) s += x;
    return s;
  };
  std::sort(positive.begin(), positive.end(), [&](const auto& x, const auto& y) {
    const int hx = ht(x), hy = ht(y);
    if (hx != hy) return hx < hy;
    return x > y;
  });

  npos_ = static_cast<int>(positive.size());
  coords_ = positive;
  for (const auto& c : positive) {
    std::vector<int> neg(c);
    for (int& x : neg) x = -x;
    coords_.push_back(std::move(neg));
  }
  const int N = num_roots();
  height_.resize(N);
  for (int r = 0; r < N; ++r) {
    height_[r] = ht(coords_[r]);
    lookup_[coords_[r]] = r;
  }

  inner_.assign(static_cast<std::size_t>(N) * N, 0);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) inner_[a * N + b] = inner_coords(coords_[a], coords_[b]);

  pairing_.assign(static_cast<std::size_t>(N) * N, 0);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) pairing_[a * N + b] = 2 * inner(a, b) / norm2(b);

  sum_.assign(static_cast<std::size_t>(N) * N, -1);
  std::vector<int> tmp(n);
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) {
      for (int i = 0; i < n; ++i) tmp[i] = coords_[a][i] + coords_[b][i];
      auto it = lookup_.find(tmp);
      if (it != lookup_.end()) sum_[a * N + b] = it->second;
    }
  }

  reflect_.assign(static_cast<std::size_t>(N) * N, -1);
  for (int a = 0; a < N; ++a) {
    for (int r = 0; r < N; ++r) {
      const int k = pairing(r, a);
      for (int i = 0; i < n; ++i) tmp[i] = coords_[r][i] - k * coords_[a][i];
      reflect_[a * N + r] = lookup_.at(tmp);
    }
  }

  max_norm2_ = min_norm2_ = norm2(0);
  for (int r = 0; r < N; ++r) {
    max_norm2_ = std::max(max_norm2_, norm2(r));
    min_norm2_ = std::min(min_norm2_, norm2(r));
  }
  theta_ = npos_ - 1;  // unique root of maximal height
  theta_s_ = -1;
  for (int r = 0; r < npos_; ++r)
    if (is_short(r) && (theta_s_ < 0 || height_[r] >= height_[theta_s_])) theta_s_ = r;

  plane_id_.assign(static_cast<std::size_t>(npos_) * npos_, -1);
  std::map<std::vector<int>, int> plane_lookup;
  for (int a = 0; a < npos_; ++a) {
    for (int b = a + 1; b < npos_; ++b) {
      if (plane_id_[a * npos_ + b] >= 0) continue;
      Rank2Parabolic par = rank2_parabolic(a, b);
      auto [it, inserted] = plane_lookup.emplace(par.members, static_cast<int>(planes_.size()));
      if (inserted) planes_.push_back(std::move(par));
      const int id = it->second;
      // Every pair of positive members spans the same plane.
      for (int x : planes_[id].members) {
        if (!is_positive(x)) continue;
        for (int y : planes_[id].members) {
          if (!is_positive(y) || x == y) continue;
          plane_id_[x * npos_ + y] = id;
        }
      }
    }
  }
}

std::optional<int> RootSystem::find(std::span<const int> c) const {
  auto it = lookup_.find(std::vector<int>(c.begin(), c.end()));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

int RootSystem::root_string_p(int a, int b) const {
  if (a == b || a == negate(b)) throw InvalidArgument("root_string_p: roots are proportional");
  int p = 0;
  int cur = b;
  while (true) {
    const int next = difference(cur, a);
    if (next < 0) break;
    ++p;
    cur = next;
  }
  return p;
}

Rank2Parabolic RootSystem::rank2_parabolic(int a, int b) const {
  auto plane = IntegerPlane::spanned_by(coords(a), coords(b));
  if (!plane) throw InvalidArgument("rank2_parabolic: roots are proportional");
  Rank2Parabolic out;
  std::vector<std::array<std::int64_t, 2>> pts;
  for (int r = 0; r < num_roots(); ++r) {
    if (auto c = plane->coordinates(coords(r))) {
      out.members.push_back(r);
      pts.push_back(*c);
    }
  }
  out.layout = classify_rank2(pts);
  for (std::size_t k = 0; k < out.layout.positive_systems.size(); ++k) {
    RootSet set(npos_);
    bool all_positive = true;
    for (int m : out.layout.positive_systems[k]) {
      const int r = out.members[m];
      if (!is_positive(r)) {
        all_positive = false;
        break;
      }
      set.insert(r);
    }
    if (!all_positive) continue;
    out.positive_sets.push_back(set);
    const auto [x, y] = out.layout.bases[k];
    out.positive_bases.emplace_back(out.members[x], out.members[y]);
  }
  return out;
}

int RootSystem::index_of(const Root& r) const {
  if (r.owner != this) throw MismatchedSystems();
  return r.index;
}

std::string RootSystem::format(int r) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < rank_; ++i) {
    const int c = coords_[r][i];
    if (c == 0) continue;
    if (c < 0) {
      os << "-";
    } else if (!first) {
      os << "+";
    }
    if (std::abs(c) != 1) os << std::abs(c);
    os << "a" << (i + 1);
    first = false;
  }
  return os.str();
}

int pairing(const RootSystem& rs, const Root& a, const Root& b) {
  return rs.pairing(rs.index_of(a), rs.index_of(b));
}

std::optional<Root> root_sum(const RootSystem& rs, const Root& a, const Root& b) {
  const int s = rs.sum(rs.index_of(a), rs.index_of(b));
  if (s < 0) return std::nullopt;
  return rs.root(s);
}

int root_string_p(const RootSystem& rs, const Root& a, const Root& b) {
  return rs.root_string_p(rs.index_of(a), rs.index_of(b));
}

int braid_order(const RootSystem& rs, int i, int j) {
  if (i == j) return 1;
  switch (rs.pairing(i, j) * rs.pairing(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
  }
  throw InvalidArgument("braid_order: invalid Cartan product");
}

int parse_root(const RootSystem& rs, std::string_view text) {
  std::vector<int> c;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view tok = text.substr(pos, next - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw InvalidArgument("cannot parse root coefficients '" + std::string(text) + "'");
    }
    c.push_back(v);
    pos = next + 1;
  }
  if (static_cast<int>(c.size()) != rs.rank()) {
    throw InvalidArgument("root '" + std::string(text) + "' has wrong number of coefficients");
  }
  auto idx = rs.find(c);
  if (!idx) throw InvalidArgument("'" + std::string(text) + "' is not a root");
  return *idx;
}

}  // namespace fcsph
