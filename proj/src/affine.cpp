#include "fcsph/affine.hpp"

#include <algorithm>
#include <set>

#include "fcsph/errors.hpp"

namespace fcsph {

bool is_positive(const RootSystem& rs, const AffineRoot& a) {
  return a.level > 0 || (a.level == 0 && rs.is_positive(a.root));
}

AffineRoot negate(const RootSystem& rs, const AffineRoot& a) { return {rs.negate(a.root), -a.level}; }

AffineRoot affine_simple(const RootSystem& rs, int i) {
  if (i < 0 || i > rs.rank()) throw InvalidArgument("affine simple index out of range");
  if (i == 0) return {rs.negate(rs.theta()), 1};
  return {rs.simple(i - 1), 0};
}

std::string format(const RootSystem& rs, const AffineRoot& a) {
  std::string s = rs.format(a.root);
  if (a.level == 0) return s;
  std::string d = (a.level == 1 ? "" : a.level == -1 ? "-" : std::to_string(a.level)) + "d";
  if (s[0] != '-') s = "+" + s;
  return d + s;
}

AffineRootSet::AffineRootSet(const RootSystem& rs, std::vector<AffineRoot> members) : members_(std::move(members)) {
  for (const auto& a : members_) {
    if (a.root < 0 || a.root >= rs.num_roots()) throw InvalidArgument("affine root with invalid finite part");
    if (!is_positive(rs, a)) throw InvalidArgument("affine root set member is not positive: " + format(rs, a));
  }
  std::sort(members_.begin(), members_.end(), [](const AffineRoot& x, const AffineRoot& y) {
    return x.level != y.level ? x.level < y.level : x.root < y.root;
  });
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool AffineRootSet::contains(const AffineRoot& a) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), a, [](const AffineRoot& x, const AffineRoot& y) {
    return x.level != y.level ? x.level < y.level : x.root < y.root;
  });
  return it != members_.end() && *it == a;
}

int AffineRootSet::max_level() const { return members_.empty() ? 0 : members_.back().level; }

AffineRoot affine_apply_simple(const RootSystem& rs, int i, const AffineRoot& a) {
  if (i < 0 || i > rs.rank()) throw InvalidArgument("affine simple index out of range");
  if (i > 0) return {rs.reflect(rs.simple(i - 1), a.root), a.level};
  // s_0(a + n delta) = s_theta(a) + (n + <a, theta>) delta
  return {rs.reflect(rs.theta(), a.root), a.level + rs.pairing(a.root, rs.theta())};
}

int affine_pairing(const RootSystem& rs, const AffineRoot& a, const AffineRoot& b) {
  return rs.pairing(a.root, b.root);
}

AffineRootSet affine_inversions(const RootSystem& rs, const Word& word) {
  // Phi(u s) = {alpha_s} + s(Phi(u)) when u(alpha_s) > 0, i.e. alpha_s not in Phi(u).
  std::vector<AffineRoot> cur;
  for (int s : word) {
    const AffineRoot simple = affine_simple(rs, s);
    if (std::find(cur.begin(), cur.end(), simple) != cur.end()) {
      throw InvalidArgument("affine word " + format_word(word) + " is not reduced");
    }
    for (auto& x : cur) x = affine_apply_simple(rs, s, x);
    cur.push_back(simple);
  }
  return AffineRootSet(rs, std::move(cur));
}

AffineWeylWord::AffineWeylWord(RootSystemPtr rs, Word word) : rs_(std::move(rs)), word_(std::move(word)) {
  affine_inversions(*rs_, word_);
  for (int i = 0; i <= rs_->rank(); ++i) canonical_.push_back(apply(affine_simple(*rs_, i)));
}

AffineRoot AffineWeylWord::apply(const AffineRoot& a) const {
  AffineRoot cur = a;
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) cur = affine_apply_simple(*rs_, *it, cur);
  return cur;
}

AffineRootSet affine_inversions(const AffineWeylWord& w) { return affine_inversions(w.system(), w.word()); }

bool is_biconvex_affine(const RootSystem& rs, const AffineRootSet& s) {
  const auto& m = s.members();
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (std::size_t y = x; y < m.size(); ++y) {
      // Opposite finite parts force infinitely many roots into the convex hull.
      if (m[y].root == rs.negate(m[x].root)) return false;
      const int f = rs.sum(m[x].root, m[y].root);
      if (f >= 0 && !s.contains({f, m[x].level + m[y].level})) return false;
    }
  }
  for (const auto& c : m) {
    // Lower members of a delta-string are convex combinations of c and higher ones.
    for (int p = c.level - 1; p >= 0; --p) {
      const AffineRoot lower{c.root, p};
      if (is_positive(rs, lower) && !s.contains(lower)) return false;
    }
    // Complement closed: c = a + b with a, b positive forces a or b into s.
    for (int a = 0; a < rs.num_roots(); ++a) {
      const int b = rs.difference(c.root, a);
      if (b < 0) continue;
      for (int p = 0; p <= c.level; ++p) {
        const AffineRoot ra{a, p}, rb{b, c.level - p};
        if (!is_positive(rs, ra) || !is_positive(rs, rb)) continue;
        if (!s.contains(ra) && !s.contains(rb)) return false;
      }
    }
  }
  return true;
}

AffineWeylWord element_from_biconvex_affine(RootSystemPtr rs, const AffineRootSet& s) {
  std::vector<AffineRoot> cur = s.members();
  Word reversed;
  while (!cur.empty()) {
    int letter = -1;
    for (int i = 0; i <= rs->rank() && letter < 0; ++i) {
      if (std::find(cur.begin(), cur.end(), affine_simple(*rs, i)) != cur.end()) letter = i;
    }
    if (letter < 0) throw NotBiconvex("set contains no affine simple root");
    const AffineRoot simple = affine_simple(*rs, letter);
    std::vector<AffineRoot> next;
    for (const auto& x : cur) {
      if (x == simple) continue;
      const AffineRoot img = affine_apply_simple(*rs, letter, x);
      if (!is_positive(*rs, img)) throw NotBiconvex("reflection leaves the positive affine roots");
      next.push_back(img);
    }
    reversed.push_back(letter);
    cur = std::move(next);
  }
  std::reverse(reversed.begin(), reversed.end());
  AffineWeylWord w(rs, reversed);
  if (!(affine_inversions(*rs, w.word()) == s)) throw NotBiconvex("reconstruction does not reproduce the set");
  return w;
}

bool is_commutative_affine(const RootSystem& rs, const AffineRootSet& s) {
  const auto& m = s.members();
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t y = x; y < m.size(); ++y)
      if (rs.sum(m[x].root, m[y].root) >= 0) return false;
  return true;
}

bool is_fc_affine(const RootSystem& rs, const AffineRootSet& s) {
  const auto& m = s.members();
  std::set<std::vector<AffineRoot>> seen;
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (std::size_t y = x + 1; y < m.size(); ++y) {
      const AffineRoot& a = m[x];
      const AffineRoot& b = m[y];
      // Proportional finite parts: the plane contains delta and its positive systems are infinite.
      const auto plane = IntegerPlane::spanned_by(rs.coords(a.root), rs.coords(b.root));
      if (!plane) continue;
      std::vector<AffineRoot> members;
      std::vector<std::array<std::int64_t, 2>> pts;
      for (int g = 0; g < rs.num_roots(); ++g) {
        const auto st = plane->coordinates(rs.coords(g));
        if (!st) continue;
        const std::int64_t num = (*st)[0] * a.level + (*st)[1] * b.level;
        if (num % plane->det() != 0) continue;
        members.push_back({g, static_cast<int>(num / plane->det())});
        pts.push_back(*st);
      }
      if (!seen.insert(members).second) continue;
      const Rank2Layout layout = classify_rank2(pts);
      if (!layout.irreducible()) continue;
      for (const auto& ps : layout.positive_systems) {
        bool inside = true;
        for (int k : ps) {
          if (!is_positive(rs, members[k]) || !s.contains(members[k])) {
            inside = false;
            break;
          }
        }
        if (inside) return false;
      }
    }
  }
  return true;
}

bool pairing_nonneg_affine(const RootSystem& rs, const AffineRootSet& s) {
  const auto& m = s.members();
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t y = x + 1; y < m.size(); ++y)
      if (affine_pairing(rs, m[x], m[y]) < 0) return false;
  return true;
}

}  // namespace fcsph
