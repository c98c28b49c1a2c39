#include "rclkit/bitset.hpp"

#include <algorithm>

namespace rclkit {

Bitset::Bitset(std::size_t width, std::initializer_list<std::size_t> members) : Bitset(width) {
  for (auto m : members) set(m);
}

Bitset Bitset::full(std::size_t width) {
  Bitset b(width);
  std::fill(b.words_.begin(), b.words_.end(), ~std::uint64_t{0});
  b.trim();
  return b;
}

Bitset Bitset::from_word(std::size_t width, std::uint64_t word) {
  Bitset b(width);
  if (!b.words_.empty()) b.words_[0] = word;
  b.trim();
  return b;
}

void Bitset::trim() noexcept {
  if (width_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (width_ % 64)) - 1;
}

std::size_t Bitset::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
  return n;
}

bool Bitset::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

bool Bitset::is_subset_of(const Bitset& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

bool Bitset::intersects(const Bitset& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

Bitset& Bitset::operator&=(const Bitset& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

Bitset Bitset::complement() const {
  Bitset b = *this;
  for (auto& w : b.words_) w = ~w;
  b.trim();
  return b;
}

std::vector<std::size_t> Bitset::members() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

bool operator<(const Bitset& a, const Bitset& b) noexcept {
  if (a.width_ != b.width_) return a.width_ < b.width_;
  for (std::size_t i = a.words_.size(); i-- > 0;)
    if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
  return false;
}

}  // namespace rclkit
