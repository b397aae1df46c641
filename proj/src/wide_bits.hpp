#pragma once

// Dense bit rows of arbitrary length, used for words over the n factors.

#include <bit>
#include <cstdint>
#include <vector>

namespace fracfac::detail {

class WideBits {
 public:
  WideBits() = default;
  explicit WideBits(int length)
      : words_(static_cast<std::size_t>((length + 63) / 64), 0) {}

  void set(int i) { words_[static_cast<std::size_t>(i / 64)] |= std::uint64_t{1} << (i % 64); }
  bool test(int i) const {
    return ((words_[static_cast<std::size_t>(i / 64)] >> (i % 64)) & 1u) != 0;
  }

  WideBits& operator^=(const WideBits& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }

  int popcount() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool none() const {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace fracfac::detail
