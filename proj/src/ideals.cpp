#include "fcsph/ideals.hpp"

#include <algorithm>
#include <functional>

#include "fcsph/errors.hpp"

namespace fcsph {

std::vector<int> CombinatorialIdeal::generators(const RootSystem& rs) const {
  std::vector<int> out;
  members.for_each([&](int r) {
    for (int i = 0; i < rs.rank(); ++i) {
      const int below = rs.difference(r, rs.simple(i));
      if (below >= 0 && rs.is_positive(below) && members.contains(below)) return;
    }
    out.push_back(r);
  });
  return out;
}

bool root_poset_leq(const RootSystem& rs, int a, int b) {
  if (!rs.is_positive(a) || !rs.is_positive(b)) throw InvalidArgument("root poset is defined on positive roots");
  for (int i = 0; i < rs.rank(); ++i)
    if (rs.coords(b)[i] < rs.coords(a)[i]) return false;
  std::vector<char> seen(rs.num_positive(), 0);
  std::vector<int> stack{a};
  seen[a] = 1;
  while (!stack.empty()) {
    const int r = stack.back();
    stack.pop_back();
    if (r == b) return true;
    for (int i = 0; i < rs.rank(); ++i) {
      const int up = rs.sum(r, rs.simple(i));
      if (up >= 0 && !seen[up]) {
        seen[up] = 1;
        stack.push_back(up);
      }
    }
  }
  return false;
}

bool is_ideal(const RootSystem& rs, const RootSet& psi) {
  bool ok = true;
  psi.for_each([&](int a) {
    for (int b = 0; b < rs.num_positive() && ok; ++b) {
      const int s = rs.sum(a, b);
      if (s >= 0 && !psi.contains(s)) ok = false;
    }
  });
  return ok;
}

std::vector<RootSet> compute_layers(const RootSystem& rs, const RootSet& psi) {
  std::vector<RootSet> layers;
  if (psi.empty()) return layers;
  layers.push_back(psi);
  const auto base = psi.members();
  while (true) {
    RootSet next = rs.empty_set();
    layers.back().for_each([&](int a) {
      for (int b : base) {
        const int s = rs.sum(a, b);
        if (s >= 0) next.insert(s);
      }
    });
    if (next.empty()) break;
    layers.push_back(next);
  }
  return layers;
}

CombinatorialIdeal make_ideal(const RootSystem& rs, const RootSet& psi) {
  if (psi.width() != rs.num_positive()) throw MismatchedSystems();
  if (!is_ideal(rs, psi)) throw InvalidArgument("set is not closed under adding positive roots");
  return CombinatorialIdeal{psi, compute_layers(rs, psi)};
}

CombinatorialIdeal ideal_generated_by(const RootSystem& rs, const std::vector<int>& generators) {
  RootSet psi = rs.empty_set();
  for (int g : generators) {
    if (g < 0 || !rs.is_positive(g)) throw InvalidArgument("ideal generators must be positive roots");
    for (int r = 0; r < rs.num_positive(); ++r)
      if (root_poset_leq(rs, g, r)) psi.insert(r);
  }
  return make_ideal(rs, psi);
}

std::vector<CombinatorialIdeal> enumerate_ideals(const RootSystem& rs) {
  const int n = rs.num_positive();
  // covers[r]: positive roots r + alpha_i
  std::vector<std::vector<int>> covers(n);
  for (int r = 0; r < n; ++r)
    for (int i = 0; i < rs.rank(); ++i)
      if (const int up = rs.sum(r, rs.simple(i)); up >= 0) covers[r].push_back(up);

  std::vector<RootSet> found;
  RootSet cur = rs.empty_set();
  // Roots are sorted by height, so descending index visits covers first.
  std::function<void(int)> rec = [&](int r) {
    if (r < 0) {
      found.push_back(cur);
      return;
    }
    rec(r - 1);
    bool allowed = true;
    for (int c : covers[r]) allowed = allowed && cur.contains(c);
    if (!allowed) return;
    cur.insert(r);
    rec(r - 1);
    cur.erase(r);
  };
  rec(n - 1);

  std::sort(found.begin(), found.end(), [](const RootSet& a, const RootSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.lex_less(b);
  });
  std::vector<CombinatorialIdeal> out;
  out.reserve(found.size());
  for (const auto& s : found) out.push_back(CombinatorialIdeal{s, compute_layers(rs, s)});
  return out;
}

bool is_abelian(const RootSystem& rs, const RootSet& psi) {
  const auto m = psi.members();
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t y = x; y < m.size(); ++y)
      if (rs.sum(m[x], m[y]) >= 0) return false;
  return true;
}

AffineRootSet psi_hat(const RootSystem& rs, const CombinatorialIdeal& ideal) {
  std::vector<AffineRoot> out;
  for (std::size_t k = 0; k < ideal.layers.size(); ++k) {
    ideal.layers[k].for_each([&](int a) { out.push_back({rs.negate(a), static_cast<int>(k) + 1}); });
  }
  return AffineRootSet(rs, std::move(out));
}

AffineWeylWord w_of_ideal(RootSystemPtr rs, const CombinatorialIdeal& ideal) {
  const AffineRootSet s = psi_hat(*rs, ideal);
  if (!is_biconvex_affine(*rs, s)) throw NotBiconvex("affine encoding of the ideal is not biconvex");
  return element_from_biconvex_affine(rs, s);
}

}  // namespace fcsph
