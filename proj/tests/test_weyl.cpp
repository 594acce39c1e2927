#include <doctest.h>

#include <map>
#include <set>

#include "fcsph/errors.hpp"
#include "fcsph/weyl.hpp"
#include "oracles.hpp"

using namespace fcsph;

namespace {

RootSystemPtr sys(const char* name, bool swap = false) { return RootSystem::build(CartanType::parse(name), swap); }

WeylElement el(const RootSystemPtr& rs, const char* word) { return WeylElement::from_word(rs, parse_word(word)); }

RootSet roots(const RootSystem& rs, std::initializer_list<const char*> coords) {
  RootSet s = rs.empty_set();
  for (const char* c : coords) s.insert(parse_root(rs, c));
  return s;
}

}  // namespace

TEST_CASE("simple reflections") {
  auto g2 = sys("G2");
  CHECK(apply_simple(*g2, 1, 0) == g2->negate(0));
  CHECK(apply_simple(*g2, 1, 1) == parse_root(*g2, "3,1"));
  CHECK(apply_simple(*g2, 2, g2->theta()) == parse_root(*g2, "3,1"));
  for (const char* name : {"A3", "B3", "G2", "F4"}) {
    auto rs = sys(name);
    for (int i = 1; i <= rs->rank(); ++i)
      for (int r = 0; r < rs->num_roots(); ++r) CHECK(apply_simple(*rs, i, apply_simple(*rs, i, r)) == r);
  }
}

TEST_CASE("group laws and braid orders") {
  auto b3 = sys("B3");
  const auto W = enumerate_weyl(b3);
  const auto id = WeylElement::identity(b3);
  for (std::size_t k = 0; k < W.size(); k += 7) {
    CHECK(W[k] * W[k].inverse() == id);
    CHECK(multiply(W[k], inverse(W[k])) == id);
    CHECK(W[k].inverse().length() == W[k].length());
    CHECK(W[k].inverse().inversions().size() == W[k].inversions().size());
    for (std::size_t j = 0; j < W.size(); j += 11) CHECK((W[k] * W[j]).apply(3) == W[k].apply(W[j].apply(3)));
  }
  CHECK(braid_order(*sys("B2"), 0, 1) == 4);
  CHECK(braid_order(*sys("G2"), 0, 1) == 6);
  CHECK(braid_order(*sys("A3"), 0, 2) == 2);
  CHECK(braid_order(*sys("A3"), 0, 1) == 3);
  CHECK_THROWS_AS(el(sys("A2"), "1") * el(sys("A2"), "2"), MismatchedSystems);
}

TEST_CASE("enumeration sizes") {
  CHECK(enumerate_weyl(sys("A2")).size() == 6);
  const auto g2 = enumerate_weyl(sys("G2"));
  CHECK(g2.size() == 12);
  int top = 0;
  for (const auto& w : g2) top += w.length() == 6;
  CHECK(top == 1);
  const auto f4 = enumerate_weyl(sys("F4"));
  CHECK(f4.size() == 1152);
  for (std::size_t k = 1; k < f4.size(); ++k) CHECK(f4[k - 1].length() <= f4[k].length());
  CHECK_THROWS_AS(enumerate_weyl(sys("F4"), 1000), BudgetExceeded);
}

TEST_CASE("inversion sets") {
  auto g2 = sys("G2");
  CHECK(el(g2, "1").inversions() == roots(*g2, {"1,0"}));
  CHECK(el(g2, "1,2,1").inversions() == roots(*g2, {"1,0", "2,1", "3,1"}));
  CHECK(el(g2, "1,2,1,2,1,2").inversions() == g2->positive_set());
  for (const char* name : {"A3", "B3", "C3", "G2", "D4"}) {
    auto rs = sys(name);
    for (const auto& w : enumerate_weyl(rs)) {
      CHECK(w.inversions().size() == w.length());
      RootSet direct = rs->empty_set();
      for (int r = 0; r < rs->num_positive(); ++r)
        if (!rs->is_positive(w.apply(r))) direct.insert(r);
      CHECK(direct == w.inversions());
      CHECK(is_biconvex(*rs, w.inversions()));
      CHECK(is_biclosed(*rs, w.inversions()));
      CHECK(element_from_biconvex(rs, w.inversions()) == w);
      CHECK(is_fc_set(*rs, w.inversions()) == is_fc_set_by_bases(*rs, w.inversions()));
    }
  }
}

TEST_CASE("biconvex sets are exactly the inversion sets") {
  for (const char* name : {"A3", "B2", "G2", "B3"}) {
    auto rs = sys(name);
    std::set<std::vector<int>> inv;
    for (const auto& w : enumerate_weyl(rs)) inv.insert(w.inversions().members());
    const int n = rs->num_positive();
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      RootSet s = rs->empty_set();
      for (int r = 0; r < n; ++r)
        if (mask & (1U << r)) s.insert(r);
      const bool expected = inv.count(s.members()) > 0;
      CHECK(is_biconvex(*rs, s) == expected);
      CHECK(is_biclosed(*rs, s) == expected);
      if (!expected) CHECK_THROWS_AS(element_from_biconvex(rs, s), NotBiconvex);
    }
  }
}

TEST_CASE("biconvex reconstruction examples") {
  auto b2 = sys("B2");
  CHECK(element_from_biconvex(b2, b2->empty_set()) == WeylElement::identity(b2));
  CHECK(element_from_biconvex(b2, roots(*b2, {"1,0"})) == el(b2, "1"));
  const RootSet s = roots(*b2, {"1,0", "1,1", "1,2"});
  CHECK(is_biconvex(*b2, s));
  CHECK(element_from_biconvex(b2, s) == el(b2, "1,2,1"));
  CHECK(el(b2, "1,2,1").inversions() == s);
}

TEST_CASE("Bruhat order matches the subword criterion") {
  for (const char* name : {"A3", "B2", "G2", "B3"}) {
    auto rs = sys(name);
    const auto W = enumerate_weyl(rs);
    for (const auto& v : W)
      for (const auto& w : W) CHECK(bruhat_leq(v, w) == oracle::bruhat_by_subwords(v, w));
  }
}

TEST_CASE("order examples") {
  auto g2 = sys("G2");
  const auto id = WeylElement::identity(g2);
  for (const auto& w : enumerate_weyl(g2)) {
    CHECK(bruhat_leq(id, w));
    CHECK(weak_leq(id, w));
  }
  CHECK_FALSE(bruhat_leq(el(g2, "1,2,1"), el(g2, "2,1,2")));
  CHECK_FALSE(weak_leq(el(g2, "1,2,1"), el(g2, "2,1,2")));
  // Inversion sets grow along suffixes: Phi(uv) = Phi(v) + v^-1 Phi(u) when lengths add.
  // Read literally, s1s2s1 is a prefix of s1s2s1s2 and the containment fails.
  CHECK_FALSE(weak_leq(el(g2, "1,2,1"), el(g2, "1,2,1,2")));
  CHECK(weak_leq(el(g2, "2,1,2"), el(g2, "1,2,1,2")));
  CHECK(weak_leq(el(g2, "1,2,1"), el(g2, "2,1,2,1")));
  CHECK(weak_leq(el(g2, "1,2,1").inverse(), el(g2, "1,2,1,2").inverse()));
}

TEST_CASE("reduced words match brute force") {
  auto a1 = sys("A1");
  CHECK(reduced_words(el(a1, "1")).words == std::vector<Word>{{1}});
  CHECK(reduced_words(el(sys("B2"), "1,2,1,2")).words == std::vector<Word>{{1, 2, 1, 2}, {2, 1, 2, 1}});
  CHECK(reduced_words(el(sys("A2"), "1,2,1")).words == std::vector<Word>{{1, 2, 1}, {2, 1, 2}});
  for (const char* name : {"A3", "B2", "G2", "B3", "C3"}) {
    auto rs = sys(name);
    for (const auto& w : enumerate_weyl(rs)) {
      const auto brute = oracle::reduced_words_brute(w);
      const auto rw = reduced_words(w);
      CHECK_FALSE(rw.overflow);
      CHECK(rw.words == brute);
      CHECK(w.word() == brute.front());
      CHECK(is_fc_def(w) == oracle::words_avoid_braids(*rs, brute));
      CHECK(is_commutative_def(w) == oracle::words_avoid_short_long_short(*rs, brute));
    }
  }
}

TEST_CASE("reduced-word cap") {
  auto b3 = sys("B3");
  const auto w0 = enumerate_weyl(b3).back();
  REQUIRE(w0.length() == 9);
  const auto capped = reduced_words(w0, 5);
  CHECK(capped.overflow);
  CHECK(capped.words.size() <= 5);
  auto a3 = sys("A3");
  CHECK_THROWS_AS(is_fc_def(el(a3, "1,3"), 1), WordCapExceeded);
  CHECK(is_fc_def(el(a3, "1,3"), 2));
}

TEST_CASE("definition-level deciders in rank 2") {
  // Bourbaki B2: a1 long. The printed definition makes s2s1s2 non-commutative.
  auto b2 = sys("B2");
  CHECK(is_fc_def(el(b2, "2,1,2")));
  CHECK_FALSE(is_commutative_def(el(b2, "2,1,2")));
  CHECK(is_commutative_def(el(b2, "1,2,1")));
  CHECK_FALSE(is_fc_def(el(b2, "1,2,1,2")));
  CHECK_FALSE(is_commutative_inv(el(b2, "2,1,2")));
  CHECK(is_commutative_inv(el(b2, "1,2,1")));
  // With the labels swapped (a1 short) the sentence naming s1s2s1 holds verbatim.
  auto b2s = sys("B2", true);
  CHECK(is_fc_def(el(b2s, "1,2,1")));
  CHECK_FALSE(is_commutative_def(el(b2s, "1,2,1")));
  CHECK_FALSE(is_commutative_inv(el(b2s, "1,2,1")));

  auto g2 = sys("G2");
  CHECK(is_commutative_def(el(g2, "2,1,2")));
  CHECK(is_commutative_inv(el(g2, "2,1,2")));
  CHECK(el(g2, "2,1,2").inversions() == roots(*g2, {"0,1", "1,1", "3,2"}));
  const auto w = el(g2, "1,2,1");
  CHECK(pairing_nonneg(*g2, w.inversions()));
  CHECK(is_fc_inv(w));
  CHECK_FALSE(is_commutative_inv(w));
  CHECK_FALSE(is_fc_inv(el(g2, "1,2,1,2,1,2")));
}

TEST_CASE("inversion criteria agree with word deciders") {
  for (const char* name : {"A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"}) {
    auto rs = sys(name);
    for (const auto& w : enumerate_weyl(rs)) {
      CHECK(is_fc_def(w) == is_fc_inv(w));
      CHECK(is_commutative_def(w) == is_commutative_inv(w));
      CHECK(is_commutative_inv(w) == is_commutative_set(*rs, w.inversions()));
      if (!rs->type().is_g2()) CHECK(is_fc_inv(w) == pairing_nonneg(*rs, w.inversions()));
      if (rs->simply_laced()) CHECK(is_fc_inv(w) == is_commutative_inv(w));
    }
  }
}

TEST_CASE("fully commutative counts by brute force") {
  const std::map<std::string, int> expected = {{"A2", 5}, {"A3", 14}, {"B2", 7}, {"G2", 11}};
  for (const auto& [name, count] : expected) {
    auto rs = sys(name.c_str());
    int fc = 0;
    for (const auto& w : enumerate_weyl(rs)) fc += oracle::words_avoid_braids(*rs, oracle::reduced_words_brute(w));
    CHECK_MESSAGE(fc == count, name);
  }
}

TEST_CASE("G2 length thresholds") {
  auto g2 = sys("G2");
  int nonneg = 0, fc = 0;
  for (const auto& w : enumerate_weyl(g2)) {
    CHECK(pairing_nonneg(*g2, w.inversions()) == (w.length() <= 4));
    CHECK(is_fc_inv(w) == (w.length() <= 5));
    nonneg += w.length() <= 4;
    fc += is_fc_inv(w);
  }
  CHECK(nonneg == 9);
  CHECK(fc == 11);
}

TEST_CASE("word parsing") {
  CHECK(parse_word("1,2,1") == Word{1, 2, 1});
  CHECK(parse_word("").empty());
  CHECK(format_word({2, 1, 2}) == "2,1,2");
  CHECK_THROWS_AS(parse_word("1,,2"), InvalidArgument);
  CHECK_THROWS_AS(WeylElement::from_word(sys("A2"), {3}), InvalidArgument);
}
