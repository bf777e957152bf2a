#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace intrep {

// Fixed-universe bitset sized at construction. Poset ground sets and
// interval member sets are small, so a word vector beats std::set by a
// wide margin in the enumeration loops.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t universe)
      : size_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return size_; }

  void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(std::size_t i) {
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  bool subset_of(const Bitset& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < size_; ++i)
      if (test(i)) out.push_back(static_cast<int>(i));
    return out;
  }

  static Bitset from_indices(std::size_t universe, const std::vector<int>& xs) {
    Bitset b(universe);
    for (int x : xs) b.set(static_cast<std::size_t>(x));
    return b;
  }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto w : words_) {
      h ^= static_cast<std::size_t>(w);
      h *= 0x100000001b3ULL;
    }
    return h;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace intrep
