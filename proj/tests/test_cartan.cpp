#include <doctest.h>

#include <set>

#include "fcsph/cartan.hpp"
#include "fcsph/errors.hpp"
#include "oracles.hpp"

using namespace fcsph;

namespace {

RootSystemPtr sys(const char* name) { return RootSystem::build(CartanType::parse(name)); }

const char* kTypes[] = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "D5", "F4", "G2", "E6"};

int dot(const oracle::IntVec& a, const oracle::IntVec& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

TEST_CASE("cartan types parse and reject invalid ranks") {
  CHECK(CartanType::parse("b3") == CartanType(Family::B, 3));
  CHECK(CartanType::parse("E6").name() == "E6");
  for (const char* bad : {"A0", "B1", "C1", "D3", "E5", "E9", "F3", "G3", "X2", "", "B"})
    CHECK_THROWS_AS(CartanType::parse(bad), InvalidCartanType);
  CHECK(CartanType::parse("F4").weyl_order() == 1152);
  CHECK(CartanType::parse("E6").weyl_order() == 51840);
}

TEST_CASE("positive root counts") {
  const std::pair<const char*, int> expected[] = {{"A1", 1},  {"A2", 3},  {"A3", 6},  {"A4", 10}, {"B2", 4},
                                                  {"B3", 9},  {"B4", 16}, {"C3", 9},  {"C4", 16}, {"D4", 12},
                                                  {"D5", 20}, {"F4", 24}, {"G2", 6},  {"E6", 36}};
  for (auto [name, npos] : expected) {
    auto rs = sys(name);
    CHECK_MESSAGE(rs->num_positive() == npos, name);
    CHECK(rs->num_roots() == 2 * npos);
  }
}

TEST_CASE("G2 positive roots and pairings") {
  auto rs = sys("G2");
  std::set<std::vector<int>> got;
  for (int r = 0; r < rs->num_positive(); ++r) got.insert({rs->coords(r)[0], rs->coords(r)[1]});
  CHECK(got == std::set<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}});
  CHECK(rs->norm2(rs->simple(0)) < rs->norm2(rs->simple(1)));
  CHECK(rs->pairing(rs->simple(1), rs->simple(0)) == -3);
  CHECK(rs->pairing(rs->simple(0), rs->simple(1)) == -1);
  CHECK(rs->theta() == parse_root(*rs, "3,2"));
  CHECK(rs->theta_short() == parse_root(*rs, "2,1"));
  CHECK(rs->pairing(rs->theta_short(), rs->theta()) == 1);
  for (int r = 0; r < rs->num_roots(); ++r) CHECK(rs->pairing(r, r) == 2);
  CHECK(braid_order(*rs, 0, 1) == 6);
}

TEST_CASE("A1 and F4 highest roots") {
  auto a1 = sys("A1");
  CHECK(a1->num_positive() == 1);
  CHECK(a1->theta() == 0);
  CHECK(a1->theta_short() == 0);
  auto f4 = sys("F4");
  CHECK(f4->is_long(f4->theta()));
  CHECK(f4->is_short(f4->theta_short()));
  CHECK(f4->format(f4->theta()) == "2a1+3a2+4a3+2a4");
  CHECK(f4->format(f4->theta_short()) == "a1+2a2+3a3+2a4");
}

TEST_CASE("root sums") {
  auto rs = sys("G2");
  const Root a1 = rs->root(0), a2 = rs->root(1);
  auto s = root_sum(*rs, a1, a2);
  REQUIRE(s);
  CHECK(s->index == parse_root(*rs, "1,1"));
  for (int r = 0; r < rs->num_roots(); ++r) CHECK_FALSE(root_sum(*rs, rs->root(r), rs->root(r)));
  CHECK_FALSE(root_sum(*rs, a1, rs->root(rs->negate(0))));
  auto t = root_sum(*rs, rs->root(parse_root(*rs, "3,1")), a2);
  REQUIRE(t);
  CHECK(t->index == rs->theta());
}

TEST_CASE("root strings") {
  auto g2 = sys("G2");
  CHECK(g2->root_string_p(0, 1) == 0);
  CHECK(g2->root_string_p(0, parse_root(*g2, "2,1")) == 2);
  CHECK_THROWS_AS(g2->root_string_p(0, g2->negate(0)), InvalidArgument);
  auto b2 = sys("B2");
  CHECK(b2->root_string_p(1, parse_root(*b2, "1,1")) == 1);
}

TEST_CASE("rank-2 parabolics") {
  auto g2 = sys("G2");
  auto p = g2->rank2_parabolic(0, 1);
  CHECK(p.members.size() == 12);
  CHECK(p.type() == Rank2Type::G2);
  auto b3 = sys("B3");
  auto a = b3->rank2_parabolic(0, 1);
  CHECK(a.type() == Rank2Type::A2);
  CHECK(a.members.size() == 6);
  // e1 = a1+a2+a3 and e2 = a2+a3.
  auto b = b3->rank2_parabolic(parse_root(*b3, "1,1,1"), parse_root(*b3, "0,1,1"));
  CHECK(b.type() == Rank2Type::B2);
  CHECK(b.members.size() == 8);
  CHECK_THROWS_AS(b3->rank2_parabolic(0, b3->negate(0)), InvalidArgument);
}

TEST_CASE("B2 orientation flag") {
  auto std_b2 = RootSystem::build(CartanType::parse("B2"));
  auto swapped = RootSystem::build(CartanType::parse("B2"), true);
  CHECK(std_b2->is_long(0));
  CHECK(std_b2->is_short(1));
  CHECK(swapped->is_short(0));
  CHECK(swapped->is_long(1));
  CHECK(braid_order(*std_b2, 0, 1) == 4);
}

TEST_CASE("mismatched systems are rejected") {
  auto a = sys("A2");
  auto b = sys("A2");
  CHECK_THROWS_AS(pairing(*a, a->root(0), b->root(1)), MismatchedSystems);
  CHECK_THROWS_AS(root_sum(*a, b->root(0), a->root(1)), MismatchedSystems);
}

TEST_CASE("root tables satisfy the structural invariants") {
  for (const char* name : kTypes) {
    auto rs = sys(name);
    const int n = rs->num_roots();
    const bool g2 = rs->type().is_g2();
    for (int a = 0; a < n; ++a) {
      bool pos = true, neg = true;
      for (int c : rs->coords(a)) pos = pos && c >= 0, neg = neg && c <= 0;
      CHECK((pos || neg));
      CHECK(rs->is_positive(a) == pos);
      CHECK(rs->pairing(a, a) == 2);
      for (int b = 0; b < n; ++b) {
        if (b == a || b == rs->negate(a)) continue;
        const int prod = rs->pairing(a, b) * rs->pairing(b, a);
        CHECK((prod >= 0 && prod <= 3));
        std::vector<int> s(rs->rank());
        for (int i = 0; i < rs->rank(); ++i) s[i] = rs->coords(a)[i] + rs->coords(b)[i];
        const auto found = rs->find(s);
        CHECK(rs->sum(a, b) == (found ? *found : -1));
        if (rs->pairing(a, b) < 0) CHECK(rs->sum(a, b) >= 0);
        if (rs->sum(a, b) >= 0 && rs->norm2(a) == rs->norm2(b)) CHECK(rs->pairing(a, b) <= 1);
        // The string {k : b + k a in Phi} is an unbroken interval.
        int lo = 0, hi = 0;
        for (int r = b; (r = rs->difference(r, a)) >= 0;) --lo;
        for (int r = b; (r = rs->sum(r, a)) >= 0;) ++hi;
        CHECK(hi - lo + 1 <= (g2 ? 4 : 3));
        CHECK(-lo == rs->root_string_p(a, b));
        CHECK(-lo - hi == rs->pairing(b, a));
      }
    }
    for (int i = 0; i < rs->rank(); ++i) CHECK(rs->sum(rs->theta(), i) < 0);
    for (int r = 0; r < rs->num_positive(); ++r) {
      bool top = true;
      for (int i = 0; i < rs->rank(); ++i) top = top && rs->sum(r, i) < 0;
      CHECK(top == (r == rs->theta()));
      if (!rs->is_short(r)) continue;
      bool top_short = true;
      for (int i = 0; i < rs->rank(); ++i) {
        const int s = rs->sum(r, i);
        top_short = top_short && (s < 0 || !rs->is_short(s));
      }
      CHECK(top_short == (r == rs->theta_short()));
    }
  }
}

TEST_CASE("classical systems agree with the epsilon model") {
  const std::pair<char, int> models[] = {{'B', 2}, {'B', 3}, {'B', 4}, {'C', 3}, {'C', 4}, {'D', 4}, {'D', 5}};
  for (auto [family, n] : models) {
    auto rs = RootSystem::build(CartanType(static_cast<Family>(family), n));
    const auto eps = oracle::classical_positive_roots(family, n);
    REQUIRE(static_cast<int>(eps.size()) == rs->num_positive());
    std::set<int> hit;
    for (const auto& e : eps) {
      auto r = oracle::from_epsilon(*rs, family, e);
      REQUIRE(r);
      CHECK(rs->is_positive(*r));
      hit.insert(*r);
    }
    CHECK(static_cast<int>(hit.size()) == rs->num_positive());
    for (std::size_t i = 0; i < eps.size(); ++i)
      for (std::size_t j = 0; j < eps.size(); ++j) {
        const int a = *oracle::from_epsilon(*rs, family, eps[i]);
        const int b = *oracle::from_epsilon(*rs, family, eps[j]);
        CHECK(rs->pairing(a, b) == 2 * dot(eps[i], eps[j]) / dot(eps[j], eps[j]));
      }
  }
}
