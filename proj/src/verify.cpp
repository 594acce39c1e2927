#include "fcsph/verify.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "fcsph/affine.hpp"
#include "fcsph/errors.hpp"

namespace fcsph {

namespace {

Report base_report(const VerifyContext& ctx, const std::string& subject, std::initializer_list<const char*> keys) {
  Report r;
  r.type = ctx.rs->type().name();
  r.subject = subject;
  for (const char* k : keys) r.add(k, 0);
  return r;
}

// Splits [0, n) into contiguous ranges, one per worker, and merges in range order.
void run_partitioned(Report& out, std::size_t n, int workers,
                     const std::function<void(std::size_t, std::size_t, Report&)>& body) {
  const std::size_t k = std::clamp<std::size_t>(workers < 1 ? 1 : workers, 1, std::max<std::size_t>(n, 1));
  std::vector<Report> parts(k);
  if (k == 1) {
    body(0, n, parts[0]);
  } else {
    std::vector<std::exception_ptr> errors(k);
    std::vector<std::thread> threads;
    for (std::size_t p = 0; p < k; ++p) {
      threads.emplace_back([&, p] {
        try {
          body(n * p / k, n * (p + 1) / k, parts[p]);
        } catch (...) {
          errors[p] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  for (auto& p : parts) out.merge(p);
}

std::string element_name(const WeylElement& w) { return "w=[" + format_word(w.word()) + "]"; }

std::string root_list(const RootSystem& rs, const std::vector<int>& roots) {
  std::string s = "{";
  for (std::size_t k = 0; k < roots.size(); ++k) s += (k ? ", " : "") + rs.format(roots[k]);
  return s + "}";
}

std::string ideal_name(const RootSystem& rs, const CombinatorialIdeal& I) {
  return "ideal" + root_list(rs, I.generators(rs));
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// Sampled elements of a_Psi: true when some sample has ad(x)^4 != 0.
bool sampled_nonspherical(const ChevalleyAlgebra& L, const RootSet& psi, const VerifyOptions& opts,
                          std::uint64_t subject_index) {
  if (psi.empty()) return false;
  std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                    static_cast<std::uint32_t>(subject_index)};
  std::mt19937_64 rng(seq);
  for (int t = 0; t < opts.trials; ++t)
    if (!ad_power_vanishes(L, sample_element(L, psi, rng), 4)) return true;
  return false;
}

}  // namespace

VerifyContext make_context(const CartanType& type, const VerifyOptions& opts, bool need_weyl, bool need_ideals) {
  VerifyContext ctx;
  if (need_weyl && type.weyl_order() > opts.budget)
    throw BudgetExceeded("Weyl group of " + type.name() + " has " + std::to_string(type.weyl_order()) +
                         " elements, budget is " + std::to_string(opts.budget));
  ctx.rs = RootSystem::build(type);
  ctx.L = ChevalleyAlgebra::build(ctx.rs);
  ctx.index = PolarizationIndex::build(ctx.L);
  if (need_weyl) ctx.W = enumerate_weyl(ctx.rs, opts.budget);
  if (need_ideals) ctx.ideals = enumerate_ideals(*ctx.rs);
  return ctx;
}

Report verify_theorem1(const VerifyContext& ctx, const VerifyOptions& opts) {
  const RootSystem& rs = *ctx.rs;
  const bool g2 = rs.type().is_g2();
  Report out = base_report(ctx, "theorem1", {"elements", "fully_commutative", "commutative", "spherical"});
  out.subject_count = ctx.W.size();
  run_partitioned(out, ctx.W.size(), opts.workers, [&](std::size_t b, std::size_t e, Report& r) {
    for (std::size_t k = b; k < e; ++k) {
      const WeylElement& w = ctx.W[k];
      const bool fc = is_fc_inv(w);
      const bool comm = is_commutative_inv(w);
      const bool sph = ctx.index->is_spherical(w.inversions());
      r.add("elements");
      r.add("fully_commutative", fc);
      r.add("commutative", comm);
      r.add("spherical", sph);
      const bool expected = g2 ? comm : fc;
      if (expected != sph)
        r.mismatch(element_name(w), std::string(g2 ? "commutative=" : "fc=") + yes_no(expected) + " spherical=" + yes_no(sph));
      if (rs.simply_laced() && fc != comm)
        r.mismatch(element_name(w), "simply laced but fc=" + yes_no(fc) + " commutative=" + yes_no(comm));
    }
  });
  return out;
}

std::vector<CombinatorialIdeal> maximal_spherical_ideals(const VerifyContext& ctx) {
  std::vector<CombinatorialIdeal> sph;
  for (const auto& I : ctx.ideals)
    if (ctx.index->is_spherical(I.members)) sph.push_back(I);
  std::vector<CombinatorialIdeal> out;
  for (const auto& I : sph) {
    bool maximal = true;
    for (const auto& J : sph)
      if (I.members != J.members && I.members.is_subset_of(J.members)) maximal = false;
    if (maximal) out.push_back(I);
  }
  return out;
}

Report verify_theorem2(const VerifyContext& ctx, const VerifyOptions& opts) {
  const RootSystem& rs = *ctx.rs;
  const bool g2 = rs.type().is_g2();
  Report out = base_report(ctx, "theorem2",
                           {"ideals", "spherical", "abelian", "fully_commutative_affine", "commutative_affine", "round_trips"});
  out.subject_count = ctx.ideals.size();
  run_partitioned(out, ctx.ideals.size(), opts.workers, [&](std::size_t b, std::size_t e, Report& r) {
    for (std::size_t k = b; k < e; ++k) {
      const CombinatorialIdeal& I = ctx.ideals[k];
      const std::string name = ideal_name(rs, I);
      const bool sph = ctx.index->is_spherical(I.members);
      const AffineRootSet ph = psi_hat(rs, I);
      r.add("ideals");
      r.add("spherical", sph);
      if (!is_biconvex_affine(rs, ph)) {
        r.mismatch(name, "affine encoding is not biconvex");
        continue;
      }
      const AffineWeylWord w = element_from_biconvex_affine(ctx.rs, ph);
      const bool round_trip = affine_inversions(w) == ph;
      r.add("round_trips", round_trip);
      if (!round_trip) r.mismatch(name, "inversion set of w_a differs from the affine encoding");
      const bool fc = is_fc_affine(rs, ph);
      const bool comm = is_commutative_affine(rs, ph);
      const bool abelian = is_abelian(rs, I.members);
      r.add("abelian", abelian);
      r.add("fully_commutative_affine", fc);
      r.add("commutative_affine", comm);
      const bool expected = g2 ? comm : fc;
      if (expected != sph)
        r.mismatch(name, std::string(g2 ? "commutative=" : "fc=") + yes_no(expected) + " spherical=" + yes_no(sph));
      if (abelian != comm) r.mismatch(name, "abelian=" + yes_no(abelian) + " commutative=" + yes_no(comm));
      if (abelian != (I.layers.size() <= 1)) r.mismatch(name, "abelian disagrees with the second layer");
      if (sph && I.layers.size() > 2) r.mismatch(name, "spherical with a nonempty third layer");
      if (pairing_nonneg(rs, I.members) != pairing_nonneg_affine(rs, ph))
        r.mismatch(name, "pairing criterion differs on the affine encoding");
    }
  });
  for (const auto& I : maximal_spherical_ideals(ctx)) {
    const AffineWeylWord w = element_from_biconvex_affine(ctx.rs, psi_hat(rs, I));
    out.witness(ideal_name(rs, I), "maximal spherical; w=[" + format_word(w.word()) + "]");
  }
  return out;
}

Report verify_subspace_theorem(const VerifyContext& ctx, const VerifyOptions& opts) {
  const RootSystem& rs = *ctx.rs;
  const bool g2 = rs.type().is_g2();
  Report out = base_report(ctx, "subspaces",
                           {"biconvex_sets", "ideals", "spherical_biconvex", "spherical_ideals", "pairing_nonneg_biconvex",
                            "pairing_nonneg_ideals", "orthogonal_patterns", "sampled"});
  out.subject_count = ctx.W.size() + ctx.ideals.size();
  RootSet psi0 = rs.empty_set();
  if (g2) psi0 = ideal_generated_by(rs, {parse_root(rs, "2,1")}).members;

  auto check = [&](const RootSet& psi, const std::string& name, std::uint64_t subject_index, Report& r,
                   const char* sph_key, const char* pn_key) {
    const bool sph = ctx.index->is_spherical(psi);
    const bool pn = pairing_nonneg(rs, psi);
    r.add(sph_key, sph);
    r.add(pn_key, pn);
    if (!g2 && sph != pn) r.mismatch(name, "spherical=" + yes_no(sph) + " pairing_nonneg=" + yes_no(pn));
    if (!g2 && pn) {
      const PatternMatch m = find_orthogonal_pattern(rs, psi);
      if (m.pattern != OrthogonalPattern::None)
        r.mismatch(name, "orthogonal pattern " + to_string(m.pattern) + " " + root_list(rs, m.roots));
    } else if (!sph && find_orthogonal_pattern(rs, psi).pattern != OrthogonalPattern::None) {
      r.add("orthogonal_patterns");
    }
    if (opts.randomized && opts.trials > 0) {
      r.add("sampled");
      if (sampled_nonspherical(*ctx.L, psi, opts, subject_index) == sph)
        r.mismatch(name, "sampled heights disagree with spherical=" + yes_no(sph));
    }
    return sph;
  };

  run_partitioned(out, ctx.W.size() + ctx.ideals.size(), opts.workers, [&](std::size_t b, std::size_t e, Report& r) {
    for (std::size_t k = b; k < e; ++k) {
      if (k < ctx.W.size()) {
        const WeylElement& w = ctx.W[k];
        r.add("biconvex_sets");
        const bool sph = check(w.inversions(), element_name(w), k, r, "spherical_biconvex", "pairing_nonneg_biconvex");
        if (g2) {
          if (pairing_nonneg(rs, w.inversions()) != (w.length() <= 4))
            r.mismatch(element_name(w), "pairing criterion does not select length <= 4");
          if (sph != is_commutative_inv(w)) r.mismatch(element_name(w), "spherical differs from commutative");
        }
      } else {
        const CombinatorialIdeal& I = ctx.ideals[k - ctx.W.size()];
        r.add("ideals");
        const bool sph = check(I.members, ideal_name(rs, I), k, r, "spherical_ideals", "pairing_nonneg_ideals");
        if (g2) {
          const bool abelian = is_abelian(rs, I.members);
          const bool inside = I.members.is_subset_of(psi0);
          if (sph != abelian || sph != inside)
            r.mismatch(ideal_name(rs, I), "spherical=" + yes_no(sph) + " abelian=" + yes_no(abelian) +
                                              " inside_psi0=" + yes_no(inside));
        }
      }
    }
  });
  return out;
}

Report verify_lemmas(const VerifyContext& ctx, const VerifyOptions& opts) {
  const RootSystem& rs = *ctx.rs;
  const ChevalleyAlgebra& L = *ctx.L;
  Report out = base_report(ctx, "lemmas",
                           {"negative_pairs", "g2_exceptions", "multisets_examined", "configurations", "long_configurations",
                            "all_short_configurations", "pairing_nonneg_sets"});
  const int n = rs.num_positive();

  // Negative pairings force a nonzero fourth power.
  std::vector<std::pair<int, int>> neg;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (rs.pairing(a, b) < 0) neg.emplace_back(a, b);
  run_partitioned(out, neg.size(), opts.workers, [&](std::size_t b, std::size_t e, Report& r) {
    for (std::size_t k = b; k < e; ++k) {
      const auto [x, y] = neg[k];
      r.add("negative_pairs");
      const Element v = nilpotent(L, {{x, 1}, {y, 1}});
      if (!ad_power_vanishes(L, v, 4)) continue;
      // The negative-pairing statement is made outside G2 only.
      if (rs.type().is_g2()) {
        r.add("g2_exceptions");
        r.witness(root_list(rs, {x, y}), "negative pairing with height " + std::to_string(height(L, v)));
      } else {
        r.mismatch(root_list(rs, {x, y}), "ad(e_a + e_b)^4 vanishes");
      }
    }
  });
  out.subject_count = neg.size();
  if (rs.type().is_g2()) {
    out.witness("quadruple sweep", "not applicable to G2");
    return out;
  }

  const QuadrupleSweep sweep = sweep_quadruples(rs);
  out.add("multisets_examined", static_cast<std::int64_t>(sweep.multisets_examined));
  std::vector<RootSet> long_supports;
  for (const Quadruple& q : sweep.configurations) {
    out.add("configurations");
    std::vector<int> g(q.gammas.begin(), q.gammas.end());
    const std::string name = format_multiset(rs, q.gammas) + " alpha=" + rs.format(q.alpha);
    if (rs.simply_laced()) out.mismatch(name, "configuration in a simply laced system");
    if (!q.beta_is_minus_alpha) out.mismatch(name, "beta=" + rs.format(q.beta) + " is not -alpha");
    if (!q.alpha_long) out.mismatch(name, "alpha is not long");
    if (q.long_count > 1) out.mismatch(name, "more than one long member");
    if (q.long_count == 1 && !q.long_orthogonal_to_rest) out.mismatch(name, "long member pairs with the others");
    if (q.all_short) {
      out.add("all_short_configurations");
      if (!q.splits_into_equal_pair_sums) out.mismatch(name, "all short but no split into equal pair sums");
    }
    if (q.long_count > 0) {
      out.add("long_configurations");
      out.witness(name, "long member inside the multiset");
      RootSet s = rs.empty_set();
      for (int r : g) s.insert(r);
      long_supports.push_back(s);
    }
  }

  // Configurations with a long member never sit inside a pairing-nonnegative
  // inversion set or ideal.
  std::vector<RootSet> candidates;
  for (const auto& w : ctx.W) candidates.push_back(w.inversions());
  for (const auto& I : ctx.ideals) candidates.push_back(I.members);
  for (const auto& psi : candidates) {
    if (!pairing_nonneg(rs, psi)) continue;
    out.add("pairing_nonneg_sets");
    for (const auto& s : long_supports)
      if (s.is_subset_of(psi)) out.mismatch(root_list(rs, s.members()), "long configuration inside a pairing-nonnegative set");
  }
  return out;
}

Report verify_g2(const VerifyContext& ctx, const VerifyOptions& opts) {
  const RootSystem& rs = *ctx.rs;
  if (!rs.type().is_g2()) throw InvalidArgument("g2 verification needs type G2");
  const ChevalleyAlgebra& L = *ctx.L;
  (void)opts;
  Report out = base_report(ctx, "g2", {"elements", "fully_commutative", "pairing_nonneg", "commutative", "spherical",
                                       "ideals", "abelian_ideals", "spherical_ideals"});
  const int a1 = parse_root(rs, "1,0"), a2 = parse_root(rs, "0,1"), a12 = parse_root(rs, "1,1");
  const int b = parse_root(rs, "2,1"), t = parse_root(rs, "3,2");

  const WeylElement bound = WeylElement::from_word(ctx.rs, {2, 1, 2});
  for (const auto& w : ctx.W) {
    const RootSet& inv = w.inversions();
    const bool fc = is_fc_inv(w), pn = pairing_nonneg(rs, inv), comm = is_commutative_inv(w);
    const bool sph = ctx.index->is_spherical(inv);
    out.add("elements");
    out.add("fully_commutative", fc);
    out.add("pairing_nonneg", pn);
    out.add("commutative", comm);
    out.add("spherical", sph);
    if (fc != (w.length() <= 5)) out.mismatch(element_name(w), "fc differs from length <= 5");
    if (pn != (w.length() <= 4)) out.mismatch(element_name(w), "pairing criterion differs from length <= 4");
    if (comm != bruhat_leq(w, bound)) out.mismatch(element_name(w), "commutative differs from w <= s2s1s2");
    if (sph != comm) out.mismatch(element_name(w), "spherical differs from commutative");
  }
  out.subject_count = ctx.W.size() + ctx.ideals.size();

  const CombinatorialIdeal psi0 = ideal_generated_by(rs, {b});
  for (const auto& I : ctx.ideals) {
    const bool ab = is_abelian(rs, I.members), sph = ctx.index->is_spherical(I.members);
    out.add("ideals");
    out.add("abelian_ideals", ab);
    out.add("spherical_ideals", sph);
    if (ab != I.members.is_subset_of(psi0.members)) out.mismatch(ideal_name(rs, I), "abelian differs from inclusion in psi0");
    if (sph != ab) out.mismatch(ideal_name(rs, I), "spherical differs from abelian");
  }
  out.witness("psi0", root_list(rs, psi0.members.members()));

  // Orthogonal pair of height four.
  const int h_orth = height(L, nilpotent(L, {{a2, 1}, {b, 1}}));
  if (h_orth != 4) out.mismatch("e_a2 + e_(2a1+a2)", "height " + std::to_string(h_orth));

  // One-parameter action of gamma = a1+a2 on e_a1 + e_(2a1+a2).
  const Element x = nilpotent(L, {{a1, 1}, {b, 1}});
  const int na = L.N(a12, a1), nb = L.N(a12, b);
  const mpq_class samples[] = {0, 1, -1, 2, mpq_class(1, 3), mpq_class(-5, 7)};
  for (const mpq_class& xi : samples) {
    Element expect = L.zero();
    expect[a1] = 1;
    expect[b] = 1 + mpq_class(na) * xi;
    expect[t] = mpq_class(nb) / 2 * xi * (2 + mpq_class(na) * xi);
    if (exp_root_action(L, a12, xi, x) != expect)
      out.mismatch("u_gamma(" + xi.get_str() + ")", "coefficients differ from the displayed polynomial");
  }
  const mpq_class xi0 = mpq_class(-1) / na;
  const Element y = exp_root_action(L, a12, xi0, x);
  const RootSet ys = support(L, y);
  RootSet want = rs.empty_set();
  want.insert(a1);
  want.insert(t);
  if (ys != want) out.mismatch("u_gamma(xi0)", "support is not {a1, 3a1+2a2}");
  const int hy = height(L, y);
  if (hy < 4) out.mismatch("u_gamma(xi0)", "height " + std::to_string(hy) + " is spherical");
  out.witness("u_gamma(xi0)", "xi0=" + xi0.get_str() + " c=" + y[t].get_str() + " height=" + std::to_string(hy));

  // Reflection s2 carries the third pair to the second.
  if (apply_simple(rs, 2, a12) != a1 || apply_simple(rs, 2, b) != b)
    out.mismatch("s2", "does not map {a1+a2, 2a1+a2} to {a1, 2a1+a2}");
  return out;
}

Report verify_word_criteria(const VerifyContext& ctx, const VerifyOptions& opts) {
  const RootSystem& rs = *ctx.rs;
  const bool g2 = rs.type().is_g2();
  Report out = base_report(ctx, "words", {"elements", "fully_commutative", "commutative", "pairing_nonneg", "cap_overflow"});
  out.subject_count = ctx.W.size();
  run_partitioned(out, ctx.W.size(), opts.workers, [&](std::size_t b, std::size_t e, Report& r) {
    for (std::size_t k = b; k < e; ++k) {
      const WeylElement& w = ctx.W[k];
      const bool fc = is_fc_inv(w), comm = is_commutative_inv(w), pn = pairing_nonneg(rs, w.inversions());
      r.add("elements");
      r.add("fully_commutative", fc);
      r.add("commutative", comm);
      r.add("pairing_nonneg", pn);
      try {
        if (is_fc_def(w, opts.word_cap) != fc) r.mismatch(element_name(w), "word-level fc differs");
        if (is_commutative_def(w, opts.word_cap) != comm) r.mismatch(element_name(w), "word-level commutative differs");
      } catch (const WordCapExceeded&) {
        r.add("cap_overflow");
      }
      if (!g2 && fc != pn) r.mismatch(element_name(w), "fc=" + yes_no(fc) + " pairing_nonneg=" + yes_no(pn));
      if (g2 && (fc != (w.length() <= 5) || pn != (w.length() <= 4)))
        r.mismatch(element_name(w), "G2 length thresholds violated");
    }
  });
  return out;
}

}  // namespace fcsph
