// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any FAIL.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fcsph/affine.hpp"
#include "fcsph/chevalley.hpp"
#include "fcsph/ideals.hpp"
#include "fcsph/spherical.hpp"
#include "fcsph/verify.hpp"
#include "oracles.hpp"

using namespace fcsph;

namespace {

using Clock = std::chrono::steady_clock;

const std::vector<std::string> kTypes = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"};

bool with_e6() {
  const char* v = std::getenv("FCSPH_ACCEPT_E6");
  return v == nullptr || std::string(v) != "0";
}

std::vector<std::string> exhaustive_types() {
  auto t = kTypes;
  if (with_e6()) t.push_back("E6");
  return t;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

struct Line {
  bool pass = true;
  std::vector<std::string> notes;
  std::vector<std::string> failures;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      failures.push_back(what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

int failed = 0;

void emit(int number, const char* title, const Line& line) {
  std::string s = std::string(line.pass ? "PASS" : "FAIL") + " [" + std::to_string(number) + "] " + title;
  for (const auto& n : line.notes) s += "; " + n;
  for (const auto& f : line.failures) s += "; FAILED: " + f;
  std::printf("%s\n", s.c_str());
  std::fflush(stdout);
  if (!line.pass) ++failed;
}

std::string first_mismatch(const Report& r) {
  if (r.mismatches.empty()) return "";
  return r.mismatches.front().subject + " " + r.mismatches.front().detail;
}

VerifyOptions options() {
  VerifyOptions o;
  o.workers = 4;
  o.seed = 1;
  return o;
}

Element random_nilpotent(const ChevalleyAlgebra& L, std::mt19937_64& rng) {
  std::map<int, mpq_class> c;
  const int terms = 1 + static_cast<int>(rng() % 5);
  for (int t = 0; t < terms; ++t) {
    const long v = static_cast<long>(rng() % 7) - 3;
    if (v != 0) c[static_cast<int>(rng() % L.system().num_positive())] = v;
  }
  return nilpotent(L, c);
}

void criterion_theorem1() {
  Line line;
  for (const auto& name : exhaustive_types()) {
    const auto t0 = Clock::now();
    const auto opts = options();
    const auto ctx = make_context(CartanType::parse(name), opts, true, true);
    const Report r = verify_theorem1(ctx, opts);
    line.require(r.ok(), name + ": " + first_mismatch(r));
    line.require(r.get("elements") == static_cast<std::int64_t>(ctx.rs->type().weyl_order()), name + ": element count");
    if (name != "E6") {
      const Report s = verify_subspace_theorem(ctx, opts);
      line.require(s.ok(), name + " subspaces: " + first_mismatch(s));
    }
    if (name == "F4" || name == "E6")
      line.note(name + " " + std::to_string(r.get("elements")) + " elements, " + std::to_string(r.get("spherical")) +
                " spherical in " + fmt_seconds(seconds_since(t0)));
  }
  if (!with_e6()) line.note("E6 skipped by FCSPH_ACCEPT_E6=0");
  emit(1, "fully commutative (commutative for G2) elements are exactly those with spherical a_w", line);
}

void criterion_theorem2() {
  Line line;
  const std::map<std::string, std::int64_t> expected = {{"A2", 5},  {"B2", 6},  {"G2", 8},  {"A3", 14},
                                                        {"B3", 20}, {"C3", 20}, {"D4", 50}, {"F4", 105}};
  const auto t0 = Clock::now();
  double through_f4 = 0;
  for (const auto& name : exhaustive_types()) {
    const auto opts = options();
    const auto ctx = make_context(CartanType::parse(name), opts, false, true);
    const Report r = verify_theorem2(ctx, opts);
    line.require(r.ok(), name + ": " + first_mismatch(r));
    const std::int64_t n = r.get("ideals");
    line.require(n == oracle::count_antichains(*ctx.rs), name + ": ideal count differs from the antichain count");
    if (auto it = expected.find(name); it != expected.end())
      line.require(n == it->second, name + ": " + std::to_string(n) + " ideals");
    if (name == "F4") through_f4 = seconds_since(t0);
  }
  line.note("counts 5/6/8/14/20/20/50/105 matched");
  line.note("through F4 in " + fmt_seconds(through_f4));
  emit(2, "affine FC (commutative for G2) of w_a matches sphericality over all ad-nilpotent ideals", line);
}

void criterion_words() {
  Line line;
  std::int64_t overflow = 0, elements = 0;
  for (const auto& name : kTypes) {
    const CartanType type = CartanType::parse(name);
    if (type.weyl_order() > 2000) continue;
    const auto opts = options();
    const auto ctx = make_context(type, opts, true, false);
    const Report r = verify_word_criteria(ctx, opts);
    line.require(r.ok(), name + ": " + first_mismatch(r));
    overflow += r.get("cap_overflow");
    elements += r.get("elements");
    if (name == "G2") {
      line.require(r.get("pairing_nonneg") == 9, "G2 pairing criterion selects " + std::to_string(r.get("pairing_nonneg")));
      line.require(r.get("fully_commutative") == 11, "G2 FC count " + std::to_string(r.get("fully_commutative")));
    }
  }
  line.note(std::to_string(elements) + " elements");
  line.note(std::to_string(overflow) + " word-cap overflows");
  line.note("G2 pairing criterion 9 elements, FC 11");
  emit(3, "word-level and inversion-set deciders agree; pairing criterion equals FC outside G2", line);
}

void criterion_negative_pairs() {
  Line line;
  std::int64_t pairs = 0, g2_pairs = 0;
  std::vector<std::string> disclosed;
  for (const auto& name : exhaustive_types()) {
    auto rs = RootSystem::build(CartanType::parse(name));
    auto L = ChevalleyAlgebra::build(rs);
    for (int a = 0; a < rs->num_positive(); ++a)
      for (int b = a + 1; b < rs->num_positive(); ++b) {
        if (rs->pairing(a, b) >= 0) continue;
        const bool nonspherical = !ad_power_vanishes(*L, nilpotent(*L, {{a, 1}, {b, 1}}), 4);
        if (rs->type().is_g2()) {
          ++g2_pairs;
          if (!nonspherical) disclosed.push_back("{" + rs->format(a) + ", " + rs->format(b) + "}");
          continue;
        }
        ++pairs;
        line.require(nonspherical, name + " {" + rs->format(a) + ", " + rs->format(b) + "} is spherical");
      }
  }
  line.note(std::to_string(pairs) + " negatively pairing pairs outside G2, all non-spherical");
  std::string g2 = "G2: " + std::to_string(g2_pairs) + " pairs, spherical exceptions";
  for (const auto& d : disclosed) g2 += " " + d;
  line.note(g2 + " (outside the statement's scope)");
  emit(4, "negatively pairing root pairs give ad(e_a + e_b)^4 != 0", line);
}

void criterion_sweep() {
  Line line;
  const auto t0 = Clock::now();
  const auto a3 = sweep_quadruples(*RootSystem::build(CartanType::parse("A3")));
  line.require(a3.configurations.empty(), "A3 has configurations");
  std::size_t total = 0, all_short = 0;
  for (const char* name : {"B3", "C3", "B4", "C4", "F4"}) {
    const auto opts = options();
    const auto ctx = make_context(CartanType::parse(name), opts, true, true);
    const Report r = verify_lemmas(ctx, opts);
    line.require(r.ok(), std::string(name) + ": " + first_mismatch(r));
    total += r.get("configurations");
    all_short += r.get("all_short_configurations");
  }
  auto f4 = RootSystem::build(CartanType::parse("F4"));
  Multiset4 example = {parse_root(*f4, "1,0,0,0"), parse_root(*f4, "1,2,2,1"), parse_root(*f4, "1,2,3,1"),
                       parse_root(*f4, "1,2,3,2")};
  std::sort(example.begin(), example.end());
  const auto sweep = sweep_quadruples(*f4);
  bool present = false;
  for (const auto& q : sweep.configurations)
    if (q.gammas == example && q.alpha == parse_root(*f4, "2,3,4,2") && q.beta_is_minus_alpha) present = true;
  line.require(present, "F4 example configuration missing");
  line.note("A3 0 configurations");
  line.note(std::to_string(total) + " configurations in B3/C3/B4/C4/F4, " + std::to_string(all_short) + " all short");
  line.note("F4 " + std::to_string(sweep.multisets_examined) + " multisets, " +
            std::to_string(sweep.configurations.size()) + " configurations, example present");
  line.note("runtime " + fmt_seconds(seconds_since(t0)));
  emit(5, "quadruple sweep conclusions", line);
}

void criterion_chevalley() {
  Line line;
  std::int64_t triples = 0, samples = 0;
  for (const auto& name : kTypes) {
    auto rs = RootSystem::build(CartanType::parse(name));
    auto L = ChevalleyAlgebra::build(rs, SignConvention::Standard);
    auto alt = ChevalleyAlgebra::build(rs, SignConvention::Alternate);
    for (const auto* M : {L.get(), alt.get()}) {
      for (int a = 0; a < rs->num_roots(); ++a)
        for (int b = 0; b < rs->num_roots(); ++b)
          if (b != rs->negate(a) && rs->sum(a, b) >= 0 && std::abs(M->N(a, b)) != rs->root_string_p(a, b) + 1)
            line.require(false, name + ": |N| differs from p+1");
      // Jacobi on basis triples.
      const int n = M->dim();
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          for (int c = b + 1; c < n; ++c) {
            const Element x = M->basis(a), y = M->basis(b), z = M->basis(c);
            Element j = bracket(*M, x, bracket(*M, y, z));
            const Element j2 = bracket(*M, y, bracket(*M, z, x));
            const Element j3 = bracket(*M, z, bracket(*M, x, y));
            for (std::size_t k = 0; k < j.size(); ++k) j[k] += j2[k] + j3[k];
            ++triples;
            if (j != M->zero()) line.require(false, name + ": Jacobi fails");
          }
    }
    std::mt19937_64 rng(1000 + rs->num_roots());
    for (int t = 0; t < 100; ++t) {
      const Element x = random_nilpotent(*L, rng);
      const int a = static_cast<int>(rng() % rs->num_roots());
      const mpq_class xi = mpq_class(static_cast<long>(rng() % 11) - 5) / static_cast<long>(1 + rng() % 4);
      const int h = height(*L, x);
      ++samples;
      if (height(*alt, x) != h) line.require(false, name + ": height depends on the sign convention");
      if (height(*L, exp_root_action(*L, a, xi, x)) != h) line.require(false, name + ": height changes under a root group");
    }
  }
  line.note(std::to_string(triples) + " basis triples");
  line.note(std::to_string(samples) + " random height samples");
  emit(6, "structure constants, Jacobi identity and invariance of heights", line);
}

void criterion_round_trip() {
  Line line;
  std::int64_t ideals = 0;
  for (const auto& name : exhaustive_types()) {
    auto rs = RootSystem::build(CartanType::parse(name));
    auto L = ChevalleyAlgebra::build(rs);
    auto index = PolarizationIndex::build(L);
    for (const auto& I : enumerate_ideals(*rs)) {
      ++ideals;
      const AffineRootSet hat = psi_hat(*rs, I);
      const AffineWeylWord w = w_of_ideal(rs, I);
      if (affine_inversions(w) != hat) line.require(false, name + ": inversion set of w_a differs");
      if (is_abelian(*rs, I.members) != is_commutative_affine(*rs, affine_inversions(w)))
        line.require(false, name + ": abelian differs from commutative");
      if (index->is_spherical(I.members) && I.layers.size() > 2) line.require(false, name + ": spherical with a third layer");
    }
  }
  line.note(std::to_string(ideals) + " ideals");
  emit(7, "affine encoding round trip, abelian iff commutative, spherical ideals have no third layer", line);
}

void criterion_g2() {
  Line line;
  const auto opts = options();
  const auto ctx = make_context(CartanType::parse("G2"), opts, true, true);
  const Report r = verify_g2(ctx, opts);
  line.require(r.ok(), first_mismatch(r));
  const auto& rs = *ctx.rs;
  const auto& L = *ctx.L;
  const int a1 = parse_root(rs, "1,0"), a2 = parse_root(rs, "0,1"), g = parse_root(rs, "1,1");
  const int b = parse_root(rs, "2,1"), t = parse_root(rs, "3,2");
  line.require(height(L, nilpotent(L, {{a2, 1}, {b, 1}})) == 4, "orthogonal pair height");
  // Coefficients are polynomials of degree <= 2 in xi: agreement at three points is identity.
  const Element x = nilpotent(L, {{a1, 1}, {b, 1}});
  for (int k = -3; k <= 3; ++k) {
    const mpq_class xi = mpq_class(k) / 2;
    Element expect = L.zero();
    expect[L.e(a1)] = 1;
    expect[L.e(b)] = 1 + L.N(g, a1) * xi;
    expect[L.e(t)] = mpq_class(L.N(g, b)) / 2 * xi * (2 + L.N(g, a1) * xi);
    line.require(exp_root_action(L, g, xi, x) == expect, "polynomial at xi=" + xi.get_str());
  }
  const mpq_class xi0 = mpq_class(-1) / L.N(g, a1);
  const Element y = exp_root_action(L, g, xi0, x);
  line.require(y[L.e(b)] == 0 && y[L.e(a1)] == 1 && y[L.e(t)] != 0, "xi0 does not reach e_a1 + c e_theta");
  line.require(!ad_power_vanishes(L, y, 4), "e_a1 + c e_theta is spherical");
  line.require(apply_simple(rs, 2, g) == a1 && apply_simple(rs, 2, b) == b, "s2 does not carry the pair");
  line.note("xi0=" + xi0.get_str() + " c=" + y[L.e(t)].get_str() + " height " + std::to_string(height(L, y)));
  line.note(std::to_string(r.get("commutative")) + " commutative, " + std::to_string(r.get("spherical_ideals")) +
            " spherical ideals");
  emit(8, "G2 root group computation and height-four elements", line);
}

void criterion_determinism() {
  Line line;
  for (const char* name : {"B3", "C3", "G2", "F4"}) {
    std::vector<std::string> dumps;
    for (int workers : {1, 1, 3, 8}) {
      VerifyOptions opts;
      opts.seed = 42;
      opts.workers = workers;
      const auto ctx = make_context(CartanType::parse(name), opts, true, true);
      std::string d;
      for (const Report& r : {verify_theorem1(ctx, opts), verify_theorem2(ctx, opts), verify_subspace_theorem(ctx, opts),
                              verify_lemmas(ctx, opts)})
        d += to_json(r).dump(2);
      dumps.push_back(d);
    }
    for (const auto& d : dumps) line.require(d == dumps.front(), std::string(name) + ": reports differ");
  }
  line.note("B3/C3/G2/F4 reports identical over repeated runs and 1/3/8 workers");
  emit(9, "fixed-seed reports are byte-identical", line);
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria = {criterion_theorem1, criterion_theorem2, criterion_words,
                                                       criterion_negative_pairs, criterion_sweep, criterion_chevalley,
                                                       criterion_round_trip, criterion_g2, criterion_determinism};
  for (const auto& c : criteria) c();
  return failed == 0 ? 0 : 1;
}
