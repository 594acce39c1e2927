#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace fcsph {

/// Fixed-width bit vector indexed by the positive roots of a root system.
///
/// Bit i corresponds to positive root index i in the system's canonical order.
/// Width is capped at 128, enough for every finite irreducible type (E8 has 120).
class RootSet {
 public:
  static constexpr int kMaxWidth = 128;

  RootSet() = default;
  explicit RootSet(int width) : width_(width) {
    if (width < 0 || width > kMaxWidth) throw std::invalid_argument("RootSet: width out of range");
  }

  static RootSet full(int width) {
    RootSet s(width);
    for (int i = 0; i < width; ++i) s.insert(i);
    return s;
  }

  int width() const { return width_; }

  bool contains(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void insert(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  int size() const { return std::popcount(words_[0]) + std::popcount(words_[1]); }
  bool empty() const { return (words_[0] | words_[1]) == 0; }

  bool is_subset_of(const RootSet& o) const {
    return (words_[0] & ~o.words_[0]) == 0 && (words_[1] & ~o.words_[1]) == 0;
  }

  RootSet operator|(const RootSet& o) const {
    RootSet r(*this);
    r.words_[0] |= o.words_[0];
    r.words_[1] |= o.words_[1];
    return r;
  }
  RootSet operator&(const RootSet& o) const {
    RootSet r(*this);
    r.words_[0] &= o.words_[0];
    r.words_[1] &= o.words_[1];
    return r;
  }
  /// Set difference.
  RootSet operator-(const RootSet& o) const {
    RootSet r(*this);
    r.words_[0] &= ~o.words_[0];
    r.words_[1] &= ~o.words_[1];
    return r;
  }
  RootSet complement() const { return full(width_) - *this; }

  template <class F>
  void for_each(F&& f) const {
    for (int w = 0; w < 2; ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        f(w * 64 + b);
        bits &= bits - 1;
      }
    }
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(size());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  std::uint64_t word(int w) const { return words_[w]; }

  bool operator==(const RootSet& o) const = default;

  /// Orders by member list, lexicographically on ascending indices.
  bool lex_less(const RootSet& o) const { return members() < o.members(); }

 private:
  std::array<std::uint64_t, 2> words_{};
  int width_ = 0;
};

}  // namespace fcsph

template <>
struct std::hash<fcsph::RootSet> {
  std::size_t operator()(const fcsph::RootSet& s) const noexcept {
    return std::hash<std::uint64_t>{}(s.word(0) * 0x9E3779B97F4A7C15ULL ^ s.word(1));
  }
};
