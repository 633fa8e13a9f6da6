#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace sigmakit {

// Fixed-size bitset over group element indices.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }

  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bitset& o) const { return !(*this == o); }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }

  bool contains(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if ((o.w_[i] & ~w_[i]) != 0) return false;
    return true;
  }

  // Lexicographic on the 0/1 sequence from index 0; a set bit sorts before a
  // clear one, so subgroups holding smaller elements come first.
  bool lex_less(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (w_[i] == o.w_[i]) continue;
      std::uint64_t d = w_[i] ^ o.w_[i];
      std::uint64_t low = d & ~(d - 1);
      return (w_[i] & low) != 0;
    }
    return false;
  }

  void for_each(const std::function<void(std::size_t)>& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        unsigned b = static_cast<unsigned>(__builtin_ctzll(w));
        f(i * 64 + b);
        w &= w - 1;
      }
    }
  }

  std::vector<std::uint32_t> elements() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
    return out;
  }

private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace sigmakit
