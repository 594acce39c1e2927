#include "fcsph/weyl.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "fcsph/errors.hpp"

namespace fcsph {

std::string format_word(const Word& w) {
  std::ostringstream os;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) os << ",";
    os << w[k];
  }
  return os.str();
}

Word parse_word(std::string_view text) {
  Word out;
  if (text.empty()) return out;
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
      throw InvalidArgument("cannot parse word '" + std::string(text) + "'");
    }
    out.push_back(v);
    pos = next + 1;
  }
  return out;
}

namespace {

void check_letter(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank()) throw InvalidArgument("simple index " + std::to_string(i) + " out of range");
}

std::vector<std::uint8_t> identity_perm(int n) {
  std::vector<std::uint8_t> p(n);
  for (int k = 0; k < n; ++k) p[k] = static_cast<std::uint8_t>(k);
  return p;
}

// p * s_i
std::vector<std::uint8_t> right_simple(const RootSystem& rs, const std::vector<std::uint8_t>& p, int i) {
  std::vector<std::uint8_t> out(p.size());
  for (std::size_t b = 0; b < p.size(); ++b) out[b] = p[rs.reflect(i - 1, static_cast<int>(b))];
  return out;
}

std::vector<std::uint8_t> invert(const std::vector<std::uint8_t>& p) {
  std::vector<std::uint8_t> out(p.size());
  for (std::size_t b = 0; b < p.size(); ++b) out[p[b]] = static_cast<std::uint8_t>(b);
  return out;
}

int perm_length(const RootSystem& rs, const std::vector<std::uint8_t>& p) {
  int n = 0;
  for (int b = 0; b < rs.num_positive(); ++b) n += !rs.is_positive(p[b]);
  return n;
}

// Greedy smallest left descent gives the lexicographically least reduced word.
Word lex_least_word(const RootSystem& rs, const std::vector<std::uint8_t>& p) {
  std::vector<std::uint8_t> v = invert(p);
  Word out;
  while (true) {
    int letter = 0;
    for (int i = 1; i <= rs.rank(); ++i) {
      if (!rs.is_positive(v[rs.simple(i - 1)])) {
        letter = i;
        break;
      }
    }
    if (!letter) break;
    out.push_back(letter);
    v = right_simple(rs, v, letter);
  }
  return out;
}

}  // namespace

int apply_simple(const RootSystem& rs, int i, int r) {
  check_letter(rs, i);
  return rs.reflect(rs.simple(i - 1), r);
}

WeylElement::WeylElement(RootSystemPtr rs, std::vector<std::uint8_t> action)
    : rs_(std::move(rs)), action_(std::move(action)) {
  word_ = lex_least_word(*rs_, action_);
  compute_inversions();
}

WeylElement::WeylElement(RootSystemPtr rs, std::vector<std::uint8_t> action, Word word)
    : rs_(std::move(rs)), action_(std::move(action)), word_(std::move(word)) {
  compute_inversions();
}

void WeylElement::compute_inversions() {
  inv_ = RootSet(rs_->num_positive());
  for (int b = 0; b < rs_->num_positive(); ++b)
    if (!rs_->is_positive(action_[b])) inv_.insert(b);
}

WeylElement WeylElement::identity(RootSystemPtr rs) {
  auto p = identity_perm(rs->num_roots());
  return WeylElement(std::move(rs), std::move(p), Word{});
}

WeylElement WeylElement::from_word(RootSystemPtr rs, const Word& word) {
  auto p = identity_perm(rs->num_roots());
  for (int i : word) {
    check_letter(*rs, i);
    p = right_simple(*rs, p, i);
  }
  return WeylElement(std::move(rs), std::move(p));
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  if (rs_ != o.rs_) throw MismatchedSystems();
  std::vector<std::uint8_t> p(action_.size());
  for (std::size_t b = 0; b < p.size(); ++b) p[b] = action_[o.action_[b]];
  return WeylElement(rs_, std::move(p));
}

WeylElement WeylElement::inverse() const { return WeylElement(rs_, invert(action_)); }

WeylElement WeylElement::times_simple(int i) const {
  check_letter(*rs_, i);
  return WeylElement(rs_, right_simple(*rs_, action_, i));
}

WeylElement multiply(const WeylElement& u, const WeylElement& v) { return u * v; }
WeylElement inverse(const WeylElement& u) { return u.inverse(); }

std::vector<WeylElement> enumerate_weyl(RootSystemPtr rs, std::uint64_t budget) {
  const std::uint64_t order = rs->type().weyl_order();
  if (order > budget) {
    throw BudgetExceeded("|W(" + rs->type().name() + ")| = " + std::to_string(order) + " exceeds budget " +
                         std::to_string(budget));
  }
  // An element is determined by the images of the simple roots.
  auto key = [&](const std::vector<std::uint8_t>& p) {
    std::string k(static_cast<std::size_t>(rs->rank()), '\0');
    for (int i = 0; i < rs->rank(); ++i) k[i] = static_cast<char>(p[i]);
    return k;
  };
  std::vector<WeylElement> out;
  out.reserve(order);
  std::unordered_set<std::string> seen;
  out.push_back(WeylElement::identity(rs));
  seen.insert(key(out.back().action_));
  std::size_t level_begin = 0;
  while (level_begin < out.size()) {
    const std::size_t level_end = out.size();
    for (std::size_t k = level_begin; k < level_end; ++k) {
      for (int i = 1; i <= rs->rank(); ++i) {
        const WeylElement& u = out[k];
        if (u.is_right_descent(i)) continue;
        auto p = right_simple(*rs, u.action_, i);
        if (!seen.insert(key(p)).second) continue;
        Word w = u.word_;
        w.push_back(i);
        out.push_back(WeylElement(rs, std::move(p), std::move(w)));
      }
    }
    level_begin = level_end;
  }
  if (out.size() != order) throw Error("Weyl enumeration produced an unexpected number of elements");
  return out;
}

RootSet inversions(const WeylElement& w) { return w.inversions(); }

bool is_closed(const RootSystem& rs, const RootSet& psi) {
  const auto m = psi.members();
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (std::size_t y = x; y < m.size(); ++y) {
      const int s = rs.sum(m[x], m[y]);
      if (s >= 0 && !psi.contains(s)) return false;
    }
  }
  return true;
}

bool is_biclosed(const RootSystem& rs, const RootSet& psi) {
  return is_closed(rs, psi) && is_closed(rs, psi.complement());
}

namespace {

bool is_convex(const RootSystem& rs, const RootSet& psi) {
  const auto m = psi.members();
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (std::size_t y = x + 1; y < m.size(); ++y) {
      const auto plane = IntegerPlane::spanned_by(rs.coords(m[x]), rs.coords(m[y]));
      const auto& par = rs.plane(rs.plane_of(m[x], m[y]));
      for (int c : par.members) {
        if (!rs.is_positive(c) || psi.contains(c)) continue;
        const auto st = plane->coordinates(rs.coords(c));
        if ((*st)[0] * plane->det() >= 0 && (*st)[1] * plane->det() >= 0) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_biconvex(const RootSystem& rs, const RootSet& psi) {
  return is_convex(rs, psi) && is_convex(rs, psi.complement());
}

WeylElement element_from_biconvex(RootSystemPtr rs, const RootSet& psi) {
  if (psi.width() != rs->num_positive()) throw MismatchedSystems();
  RootSet cur = psi;
  Word reversed;
  while (!cur.empty()) {
    int letter = 0;
    for (int i = 1; i <= rs->rank(); ++i) {
      if (cur.contains(rs->simple(i - 1))) {
        letter = i;
        break;
      }
    }
    if (!letter) throw NotBiconvex("set contains no simple root");
    RootSet next(rs->num_positive());
    bool ok = true;
    cur.for_each([&](int r) {
      if (r == rs->simple(letter - 1)) return;
      const int img = rs->reflect(rs->simple(letter - 1), r);
      if (!rs->is_positive(img)) {
        ok = false;
        return;
      }
      next.insert(img);
    });
    if (!ok) throw NotBiconvex("reflection leaves the positive roots");
    reversed.push_back(letter);
    cur = next;
  }
  std::reverse(reversed.begin(), reversed.end());
  WeylElement w = WeylElement::from_word(rs, reversed);
  if (!(w.inversions() == psi)) throw NotBiconvex("reconstruction does not reproduce the set");
  return w;
}

namespace {

bool bruhat_perm(const RootSystem& rs, std::vector<std::uint8_t> v, std::vector<std::uint8_t> w) {
  while (true) {
    const int lv = perm_length(rs, v), lw = perm_length(rs, w);
    if (lv > lw) return false;
    if (lw == 0) return lv == 0;
    int s = 0;
    for (int i = 1; i <= rs.rank(); ++i) {
      if (!rs.is_positive(w[rs.simple(i - 1)])) {
        s = i;
        break;
      }
    }
    if (!rs.is_positive(v[rs.simple(s - 1)])) v = right_simple(rs, v, s);
    w = right_simple(rs, w, s);
  }
}

}  // namespace

bool bruhat_leq(const WeylElement& v, const WeylElement& w) {
  if (v.system_ptr() != w.system_ptr()) throw MismatchedSystems();
  return bruhat_perm(v.system(), v.action(), w.action());
}

bool weak_leq(const WeylElement& v, const WeylElement& w) {
  if (v.system_ptr() != w.system_ptr()) throw MismatchedSystems();
  return v.inversions().is_subset_of(w.inversions());
}

namespace {

using Forbidden = std::function<bool(const std::string&)>;

struct Exploration {
  std::vector<std::string> words;
  bool found = false;
  bool overflow = false;
};

// Breadth-first closure under braid relations, stopping at a forbidden factor or the cap.
Exploration explore(const WeylElement& w, std::size_t cap, const Forbidden& forbidden) {
  const RootSystem& rs = w.system();
  Exploration ex;
  std::string start;
  for (int i : w.word()) start.push_back(static_cast<char>(i));
  std::unordered_set<std::string> seen{start};
  std::deque<std::string> queue{start};
  ex.words.push_back(start);
  if (forbidden && forbidden(start)) {
    ex.found = true;
    return ex;
  }
  while (!queue.empty()) {
    const std::string cur = queue.front();
    queue.pop_front();
    const std::size_t len = cur.size();
    for (std::size_t p = 0; p + 1 < len; ++p) {
      const int a = cur[p], b = cur[p + 1];
      if (a == b) continue;
      const std::size_t m = static_cast<std::size_t>(braid_order(rs, a - 1, b - 1));
      if (p + m > len) continue;
      bool alternating = true;
      for (std::size_t k = 0; k < m && alternating; ++k) alternating = cur[p + k] == (k % 2 ? b : a);
      if (!alternating) continue;
      std::string next = cur;
      for (std::size_t k = 0; k < m; ++k) next[p + k] = static_cast<char>(k % 2 ? a : b);
      if (!seen.insert(next).second) continue;
      if (forbidden && forbidden(next)) {
        ex.words.push_back(next);
        ex.found = true;
        return ex;
      }
      if (ex.words.size() >= cap) {
        ex.overflow = true;
        return ex;
      }
      ex.words.push_back(next);
      queue.push_back(std::move(next));
    }
  }
  return ex;
}

}  // namespace

ReducedWords reduced_words(const WeylElement& w, std::size_t cap) {
  Exploration ex = explore(w, cap, nullptr);
  ReducedWords out;
  out.overflow = ex.overflow;
  for (const auto& s : ex.words) {
    Word wd;
    for (char c : s) wd.push_back(c);
    out.words.push_back(std::move(wd));
  }
  std::sort(out.words.begin(), out.words.end());
  return out;
}

bool is_commutative_def(const WeylElement& w, std::size_t cap) {
  const RootSystem& rs = w.system();
  auto forbidden = [&](const std::string& s) {
    for (std::size_t p = 0; p + 2 < s.size(); ++p) {
      const int a = s[p] - 1, b = s[p + 1] - 1;
      if (s[p] == s[p + 2] && a != b && rs.norm2(rs.simple(a)) <= rs.norm2(rs.simple(b))) return true;
    }
    return false;
  };
  Exploration ex = explore(w, cap, forbidden);
  if (ex.overflow) throw WordCapExceeded("reduced-word cap reached for " + format_word(w.word()));
  return !ex.found;
}

bool is_fc_def(const WeylElement& w, std::size_t cap) {
  const RootSystem& rs = w.system();
  auto forbidden = [&](const std::string& s) {
    for (std::size_t p = 0; p + 1 < s.size(); ++p) {
      const int a = s[p], b = s[p + 1];
      if (a == b) continue;
      const std::size_t m = static_cast<std::size_t>(braid_order(rs, a - 1, b - 1));
      if (m < 3 || p + m > s.size()) continue;
      bool alternating = true;
      for (std::size_t k = 0; k < m && alternating; ++k) alternating = s[p + k] == (k % 2 ? b : a);
      if (alternating) return true;
    }
    return false;
  };
  Exploration ex = explore(w, cap, forbidden);
  if (ex.overflow) throw WordCapExceeded("reduced-word cap reached for " + format_word(w.word()));
  return !ex.found;
}

bool is_commutative_set(const RootSystem& rs, const RootSet& psi) {
  const auto m = psi.members();
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t y = x; y < m.size(); ++y)
      if (rs.sum(m[x], m[y]) >= 0) return false;
  return true;
}

bool is_fc_set(const RootSystem& rs, const RootSet& psi) {
  const auto m = psi.members();
  std::vector<char> visited(static_cast<std::size_t>(rs.num_planes()), 0);
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (std::size_t y = x + 1; y < m.size(); ++y) {
      const int id = rs.plane_of(m[x], m[y]);
      if (visited[id]) continue;
      visited[id] = 1;
      const Rank2Parabolic& par = rs.plane(id);
      if (!par.layout.irreducible()) continue;
      for (const RootSet& pos : par.positive_sets)
        if (pos.is_subset_of(psi)) return false;
    }
  }
  return true;
}

bool is_fc_set_by_bases(const RootSystem& rs, const RootSet& psi) {
  const auto m = psi.members();
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (std::size_t y = x + 1; y < m.size(); ++y) {
      const Rank2Parabolic& par = rs.plane(rs.plane_of(m[x], m[y]));
      if (!par.layout.irreducible()) continue;
      for (const auto& [a, b] : par.positive_bases)
        if (psi.contains(a) && psi.contains(b)) return false;
    }
  }
  return true;
}

bool pairing_nonneg(const RootSystem& rs, const RootSet& psi) {
  const auto m = psi.members();
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t y = x + 1; y < m.size(); ++y)
      if (rs.pairing(m[x], m[y]) < 0) return false;
  return true;
}

bool is_commutative_inv(const WeylElement& w) { return is_commutative_set(w.system(), w.inversions()); }

bool is_fc_inv(const WeylElement& w) {
  const bool by_planes = is_fc_set(w.system(), w.inversions());
  if (by_planes != is_fc_set_by_bases(w.system(), w.inversions())) {
    throw Error("rank-2 parabolic routes disagree for " + format_word(w.word()));
  }
  return by_planes;
}

}  // namespace fcsph
