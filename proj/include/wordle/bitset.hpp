#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace wordle {

/// Fixed-size dynamic bit vector. Bits past size() are always zero so equality
/// and hashing can work on whole blocks.
class BitSet {
 public:
  BitSet() = default;
  explicit BitSet(std::size_t n, bool value = false)
      : size_(n), blocks_((n + 63) / 64, value ? ~std::uint64_t{0} : 0) {
    trim();
  }

  std::size_t size() const noexcept { return size_; }
  bool test(std::size_t i) const noexcept { return (blocks_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) noexcept { blocks_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { blocks_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto b : blocks_) c += static_cast<std::size_t>(std::popcount(b));
    return c;
  }
  bool none() const noexcept {
    for (auto b : blocks_)
      if (b) return false;
    return true;
  }
  bool any() const noexcept { return !none(); }

  /// Index of the lowest set bit, or size() when empty.
  std::size_t first() const noexcept {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      if (blocks_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(blocks_[i]));
    return size_;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      std::uint64_t b = blocks_[i];
      while (b) {
        f(i * 64 + static_cast<std::size_t>(std::countr_zero(b)));
        b &= b - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  bool is_subset_of(const BitSet& other) const noexcept {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      if (blocks_[i] & ~other.blocks_[i]) return false;
    return true;
  }

  BitSet& operator|=(const BitSet& o) noexcept {
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] |= o.blocks_[i];
    return *this;
  }
  BitSet& operator&=(const BitSet& o) noexcept {
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= o.blocks_[i];
    return *this;
  }

  const std::vector<std::uint64_t>& blocks() const noexcept { return blocks_; }

  bool operator==(const BitSet&) const = default;

 private:
  void trim() noexcept {
    if (size_ % 64 && !blocks_.empty()) blocks_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> blocks_;
};

struct BitSetHash {
  std::size_t operator()(const BitSet& b) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ b.size();
    for (auto x : b.blocks()) {
      h ^= x;
      h *= 0xff51afd7ed558ccdull;
      h ^= h >> 33;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace wordle
