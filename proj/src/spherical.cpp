#include "fcsph/spherical.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "fcsph/errors.hpp"

namespace fcsph {

std::string format_multiset(const RootSystem& rs, const Multiset4& m) {
  std::ostringstream os;
  os << "{";
  for (int k = 0; k < 4; ++k) os << (k ? ", " : "") << rs.format(m[k]);
  os << "}";
  return os.str();
}

namespace {

// A basis vector times a coefficient, or a Cartan vector; int64 is ample since
// every structure constant has absolute value at most 4.
struct ChainState {
  bool cartan = false;
  int root = -1;
  std::int64_t c = 0;
  std::array<std::int64_t, 8> h{};
};

bool apply_root(const ChevalleyAlgebra& L, int g, ChainState& s) {
  const RootSystem& rs = L.system();
  if (s.cartan) {
    // [e_g, sum h_i d_i] = -sum d_i <g, alpha_i> e_g
    std::int64_t c = 0;
    for (int i = 0; i < rs.rank(); ++i) c -= s.h[i] * rs.pairing(g, rs.simple(i));
    if (c == 0) return false;
    s.cartan = false;
    s.root = g;
    s.c = c;
    return true;
  }
  if (s.root == rs.negate(g)) {
    s.cartan = true;
    const auto& co = L.coroot(g);
    for (int i = 0; i < rs.rank(); ++i) s.h[i] = s.c * co[i];
    return true;
  }
  const int t = rs.sum(g, s.root);
  if (t < 0) return false;
  s.c = s.c * L.N(g, s.root);
  s.root = t;
  return true;
}

// q_M applied to one input basis vector; true when the result is nonzero.
bool polarization_hits(const ChevalleyAlgebra& L, const Multiset4& m, const ChainState& input) {
  const int rank = L.system().rank();
  std::int64_t acc = 0;
  std::array<std::int64_t, 8> hacc{};
  bool output_cartan = false;
  Multiset4 perm = m;
  do {
    ChainState s = input;
    bool alive = true;
    for (int k = 3; k >= 0 && alive; --k) alive = apply_root(L, perm[k], s);
    if (!alive) continue;
    if (s.cartan) {
      output_cartan = true;
      for (int i = 0; i < rank; ++i) hacc[i] += s.h[i];
    } else {
      acc += s.c;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (output_cartan) {
    for (int i = 0; i < rank; ++i)
      if (hacc[i] != 0) return true;
    return false;
  }
  return acc != 0;
}

}  // namespace

bool polarization_vanishes(const ChevalleyAlgebra& L, const Multiset4& m) {
  const RootSystem& rs = L.system();
  Multiset4 sorted = m;
  std::sort(sorted.begin(), sorted.end());
  for (int r : sorted)
    if (r < 0 || !rs.is_positive(r)) throw InvalidArgument("polarization needs positive roots");
  std::vector<int> sigma(rs.rank(), 0);
  int sigma_height = 0;
  for (int r : sorted) {
    for (int i = 0; i < rs.rank(); ++i) sigma[i] += rs.coords(r)[i];
    sigma_height += rs.height(r);
  }
  const int top = rs.height(rs.theta());
  std::vector<int> target(rs.rank());
  // Inputs of weight beta with beta + sigma in Phi or zero.
  for (int b = 0; b < rs.num_roots(); ++b) {
    const int ht = rs.height(b) + sigma_height;
    if (ht > top || ht < -top) continue;
    bool zero = true;
    for (int i = 0; i < rs.rank(); ++i) {
      target[i] = rs.coords(b)[i] + sigma[i];
      zero = zero && target[i] == 0;
    }
    if (!zero && !rs.find(target)) continue;
    ChainState in;
    in.root = b;
    in.c = 1;
    if (polarization_hits(L, sorted, in)) return false;
  }
  if (rs.find(sigma)) {
    for (int i = 0; i < rs.rank(); ++i) {
      ChainState in;
      in.cartan = true;
      in.h[i] = 1;
      if (polarization_hits(L, sorted, in)) return false;
    }
  }
  return true;
}

std::shared_ptr<const PolarizationIndex> PolarizationIndex::build(ChevalleyPtr L) {
  std::shared_ptr<PolarizationIndex> idx(new PolarizationIndex());
  idx->L_ = L;
  const RootSystem& rs = L->system();
  const int n = rs.num_positive();
  std::map<std::vector<int>, Multiset4> first;  // support members -> lex-first multiset
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      for (int c = b; c < n; ++c)
        for (int d = c; d < n; ++d) {
          ++idx->examined_;
          const Multiset4 m{a, b, c, d};
          if (polarization_vanishes(*L, m)) continue;
          ++idx->nonvanishing_;
          std::vector<int> supp(m.begin(), m.end());
          supp.erase(std::unique(supp.begin(), supp.end()), supp.end());
          first.emplace(supp, m);
        }
  std::vector<Entry> all;
  for (const auto& [supp, m] : first) {
    RootSet s = rs.empty_set();
    for (int r : supp) s.insert(r);
    all.push_back({s, m});
  }
  std::stable_sort(all.begin(), all.end(), [](const Entry& x, const Entry& y) {
    if (x.support.size() != y.support.size()) return x.support.size() < y.support.size();
    return x.multiset < y.multiset;
  });
  for (const auto& e : all) {
    bool minimal = true;
    for (const auto& kept : idx->entries_) {
      if (kept.support.is_subset_of(e.support)) {
        minimal = false;
        break;
      }
    }
    if (minimal) idx->entries_.push_back(e);
  }
  return idx;
}

std::optional<Multiset4> PolarizationIndex::witness(const RootSet& psi) const {
  if (psi.width() != L_->system().num_positive()) throw MismatchedSystems();
  for (const auto& e : entries_)
    if (e.support.is_subset_of(psi)) return e.multiset;
  return std::nullopt;
}

std::optional<Multiset4> spherical_witness_direct(const ChevalleyAlgebra& L, const RootSet& psi) {
  if (psi.width() != L.system().num_positive()) throw MismatchedSystems();
  const auto m = psi.members();
  const std::size_t n = m.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      for (std::size_t c = b; c < n; ++c)
        for (std::size_t d = c; d < n; ++d) {
          const Multiset4 ms{m[a], m[b], m[c], m[d]};
          if (!polarization_vanishes(L, ms)) return ms;
        }
  return std::nullopt;
}

bool is_spherical_subspace(const ChevalleyAlgebra& L, const RootSet& psi) {
  return !spherical_witness_direct(L, psi).has_value();
}

Element sample_element(const ChevalleyAlgebra& L, const RootSet& psi, std::mt19937_64& rng) {
  Element x = L.zero();
  psi.for_each([&](int r) { x[L.e(r)] = static_cast<unsigned long>(1 + rng() % (std::uint64_t{1} << 20)); });
  return x;
}

int generic_height(const ChevalleyAlgebra& L, const RootSet& psi, int trials, std::uint64_t seed) {
  if (trials < 1) throw InvalidArgument("trials must be at least 1");
  std::mt19937_64 rng(seed);
  int best = 0;
  for (int t = 0; t < trials; ++t) best = std::max(best, height(L, sample_element(L, psi, rng)));
  return best;
}

OrbitFingerprint orbit_fingerprint(const ChevalleyAlgebra& L, const RootSet& psi, int trials, std::uint64_t seed) {
  if (trials < 1) throw InvalidArgument("trials must be at least 1");
  std::mt19937_64 rng(seed);
  OrbitFingerprint best;
  for (int t = 0; t < trials; ++t) {
    OrbitFingerprint fp;
    fp.ranks = ad_rank_sequence(L, sample_element(L, psi, rng));
    fp.height = static_cast<int>(fp.ranks.size());
    fp.orbit_dim = fp.ranks.empty() ? 0 : fp.ranks[0];
    best = std::max(best, fp);
  }
  return best;
}

bool strongly_orthogonal(const RootSystem& rs, int a, int b) {
  if (a == b || a == rs.negate(b)) throw InvalidArgument("strongly_orthogonal needs non-proportional roots");
  return rs.sum(a, b) < 0 && rs.difference(a, b) < 0;
}

std::string to_string(OrthogonalPattern p) {
  switch (p) {
    case OrthogonalPattern::None: return "none";
    case OrthogonalPattern::D4: return "D4";
    case OrthogonalPattern::BF4: return "BF4";
    case OrthogonalPattern::B3: return "B3";
  }
  return "?";
}

namespace {

// Root equal to half of sum mult_k * root_k, if any.
bool half_sum_is_root(const RootSystem& rs, std::initializer_list<std::pair<int, int>> terms) {
  std::vector<int> c(rs.rank(), 0);
  for (const auto& [r, mult] : terms)
    for (int i = 0; i < rs.rank(); ++i) c[i] += mult * rs.coords(r)[i];
  for (int& v : c) {
    if (v % 2 != 0) return false;
    v /= 2;
  }
  return rs.find(c).has_value();
}

bool long_root(const RootSystem& rs, int r) { return !rs.simply_laced() && rs.is_long(r); }

// Sizes of Phi cap span(gamma) for pairwise orthogonal gamma: r lies in the span
// iff its squared length equals the sum of its squared projections.
struct SpanProfile {
  int roots = 0;
  int long_roots = 0;
};

SpanProfile span_profile(const RootSystem& rs, const std::vector<int>& gamma) {
  std::int64_t denom = 1;
  for (int g : gamma) denom *= rs.norm2(g);
  SpanProfile p;
  for (int r = 0; r < rs.num_roots(); ++r) {
    std::int64_t proj = 0;
    for (int g : gamma) proj += std::int64_t{rs.inner(r, g)} * rs.inner(r, g) * (denom / rs.norm2(g));
    if (proj != std::int64_t{rs.norm2(r)} * denom) continue;
    ++p.roots;
    if (long_root(rs, r)) ++p.long_roots;
  }
  return p;
}

bool spans_d4(const RootSystem& rs, const std::vector<int>& g) {
  const SpanProfile p = span_profile(rs, g);
  return p.roots == 24 && (p.long_roots == 0 || p.long_roots == 24);
}

bool spans_b4_or_f4(const RootSystem& rs, const std::vector<int>& g) {
  const SpanProfile p = span_profile(rs, g);
  return (p.roots == 32 && p.long_roots == 24) || (p.roots == 48 && p.long_roots == 24);
}

bool spans_b3(const RootSystem& rs, const std::vector<int>& g) {
  const SpanProfile p = span_profile(rs, g);
  return p.roots == 18 && p.long_roots == 12;
}

}  // namespace

PatternMatch classify_nonspherical_orthogonal(const RootSystem& rs, const std::vector<int>& gamma) {
  std::vector<int> g = gamma;
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::size_t y = x + 1; y < g.size(); ++y)
      if (rs.inner(g[x], g[y]) != 0) throw InvalidArgument("roots are not pairwise orthogonal");
  const std::size_t n = g.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d)
          if (half_sum_is_root(rs, {{g[a], 1}, {g[b], 1}, {g[c], 1}, {g[d], 1}}) &&
              spans_d4(rs, {g[a], g[b], g[c], g[d]}))
            return {OrthogonalPattern::D4, {g[a], g[b], g[c], g[d]}};
  std::vector<int> lng, shrt;
  for (int r : g) (long_root(rs, r) ? lng : shrt).push_back(r);
  const std::size_t nl = lng.size();
  for (std::size_t a = 0; a < nl; ++a)
    for (std::size_t b = a + 1; b < nl; ++b)
      for (std::size_t c = b + 1; c < nl; ++c)
        for (std::size_t d = c + 1; d < nl; ++d) {
          const int q[4] = {lng[a], lng[b], lng[c], lng[d]};
          const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
          for (const auto& p : pairings) {
            if (half_sum_is_root(rs, {{q[p[0]], 1}, {q[p[1]], 1}}) &&
                half_sum_is_root(rs, {{q[p[2]], 1}, {q[p[3]], 1}}) && spans_b4_or_f4(rs, {q[0], q[1], q[2], q[3]}))
              return {OrthogonalPattern::BF4, {q[p[0]], q[p[1]], q[p[2]], q[p[3]]}};
          }
        }
  for (std::size_t a = 0; a < nl; ++a)
    for (std::size_t b = a + 1; b < nl; ++b)
      for (int s : shrt)
        if (half_sum_is_root(rs, {{lng[a], 1}, {lng[b], 1}, {s, 2}}) && spans_b3(rs, {lng[a], lng[b], s}))
          return {OrthogonalPattern::B3, {lng[a], lng[b], s}};
  return {};
}

PatternMatch find_orthogonal_pattern(const RootSystem& rs, const RootSet& psi) {
  const auto m = psi.members();
  std::vector<int> clique;
  PatternMatch found;
  std::function<bool(std::size_t)> grow = [&](std::size_t from) {
    if (clique.size() >= 3) {
      found = classify_nonspherical_orthogonal(rs, clique);
      if (found.pattern != OrthogonalPattern::None) return true;
    }
    if (clique.size() == 4) return false;
    for (std::size_t k = from; k < m.size(); ++k) {
      bool orth = true;
      for (int c : clique) orth = orth && rs.inner(c, m[k]) == 0;
      if (!orth) continue;
      clique.push_back(m[k]);
      if (grow(k + 1)) return true;
      clique.pop_back();
    }
    return false;
  };
  grow(0);
  return found;
}

QuadrupleSweep sweep_quadruples(const RootSystem& rs) {
  QuadrupleSweep out;
  const int n = rs.num_positive();
  std::vector<int> sigma(rs.rank()), beta(rs.rank());
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      for (int c = b; c < n; ++c)
        for (int d = c; d < n; ++d) {
          ++out.multisets_examined;
          const Multiset4 g{a, b, c, d};
          bool nonneg = true, orthogonal = true;
          for (int x = 0; x < 4; ++x)
            for (int y = x + 1; y < 4; ++y) {
              if (rs.pairing(g[x], g[y]) < 0) nonneg = false;
              if (g[x] != g[y] && rs.inner(g[x], g[y]) != 0) orthogonal = false;
            }
          if (!nonneg || orthogonal) continue;
          for (int i = 0; i < rs.rank(); ++i) sigma[i] = 0;
          for (int r : g)
            for (int i = 0; i < rs.rank(); ++i) sigma[i] += rs.coords(r)[i];
          for (int alpha = 0; alpha < rs.num_roots(); ++alpha) {
            for (int i = 0; i < rs.rank(); ++i) beta[i] = rs.coords(alpha)[i] - sigma[i];
            const auto bidx = rs.find(beta);
            if (!bidx) continue;
            Quadruple q;
            q.gammas = g;
            q.alpha = alpha;
            q.beta = *bidx;
            q.beta_is_minus_alpha = q.beta == rs.negate(alpha);
            q.alpha_long = !rs.simply_laced() && rs.is_long(alpha);
            int long_index = -1;
            for (int x = 0; x < 4; ++x) {
              if (long_root(rs, g[x])) {
                ++q.long_count;
                long_index = x;
              }
            }
            if (long_index >= 0) {
              for (int y = 0; y < 4; ++y)
                if (y != long_index && rs.inner(g[long_index], g[y]) != 0) q.long_orthogonal_to_rest = false;
            }
            q.all_short = !rs.simply_laced() && q.long_count == 0;
            const int splits[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
            for (const auto& s : splits) {
              bool eq = true;
              for (int i = 0; i < rs.rank(); ++i)
                eq = eq && rs.coords(g[s[0]])[i] + rs.coords(g[s[1]])[i] == rs.coords(g[s[2]])[i] + rs.coords(g[s[3]])[i];
              q.splits_into_equal_pair_sums = q.splits_into_equal_pair_sums || eq;
            }
            out.configurations.push_back(q);
          }
        }
  return out;
}

}  // namespace fcsph
