#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace rclkit {

/// Fixed-width dynamic bitset. Used both for subsets of a lattice carrier
/// and for subsets of a set-RCL universe.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}
  Bitset(std::size_t width, std::initializer_list<std::size_t> members);

  static Bitset full(std::size_t width);

  std::size_t width() const noexcept { return width_; }
  std::size_t count() const noexcept;
  bool empty() const noexcept;

  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  bool is_subset_of(const Bitset& other) const noexcept;
  bool intersects(const Bitset& other) const noexcept;

  Bitset& operator&=(const Bitset& other) noexcept;
  Bitset& operator|=(const Bitset& other) noexcept;
  friend Bitset operator&(Bitset a, const Bitset& b) noexcept { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) noexcept { return a |= b; }
  Bitset complement() const;

  std::vector<std::size_t> members() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        f(w * 64 + static_cast<std::size_t>(bit));
        bits &= bits - 1;
      }
    }
  }

  /// Low 64 bits as an integer; the index of a subset in a materialized powerset.
  std::uint64_t low_word() const noexcept { return words_.empty() ? 0 : words_[0]; }
  static Bitset from_word(std::size_t width, std::uint64_t word);

  friend bool operator==(const Bitset&, const Bitset&) = default;
  friend bool operator<(const Bitset& a, const Bitset& b) noexcept;

 private:
  void trim() noexcept;

  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

using ElementSet = Bitset;
using Subset = Bitset;

}  // namespace rclkit
