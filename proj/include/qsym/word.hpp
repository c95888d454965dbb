// Packed words for the Groebner engine.
//
// A word of length <= 15 over an alphabet of <= 256 letters is stored in a
// 128-bit integer: the top byte holds the length and the following bytes hold
// the letters, first letter most significant.  Letters are order codes (a
// larger code is a larger letter), so plain integer comparison of the packed
// value is exactly the degree-lexicographic order.

#ifndef QSYM_WORD_HPP_
#define QSYM_WORD_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>

namespace qsym {

class Word {
 public:
  using Bits = unsigned __int128;
  static constexpr int kMaxLength = 15;

  Word() = default;

  static Word letter(std::uint8_t code) { return Word(Bits{1} << 120 | Bits{code} << 112); }

  int size() const { return static_cast<int>(bits_ >> 120); }
  bool empty() const { return size() == 0; }

  std::uint8_t operator[](int i) const {
    return static_cast<std::uint8_t>(bits_ >> (112 - 8 * i));
  }

  Word sub(int pos, int len) const {
    if (len == 0) return Word();
    Bits body = (bits_ << (8 + 8 * pos)) >> 8;
    body &= mask(len);
    return Word(Bits(len) << 120 | body);
  }
  Word prefix(int len) const { return sub(0, len); }
  Word suffix_from(int pos) const { return sub(pos, size() - pos); }

  friend Word operator*(Word a, Word b) {
    const int la = a.size(), lb = b.size();
    Bits body = (a.bits_ & kBodyMask) | ((b.bits_ & kBodyMask) >> (8 * la));
    return Word(Bits(la + lb) << 120 | body);
  }

  // Position of the first occurrence of w as a subword, or -1.
  int find(Word w) const {
    const int n = size(), k = w.size();
    for (int pos = 0; pos + k <= n; ++pos)
      if (sub(pos, k) == w) return pos;
    return -1;
  }

  Bits bits() const { return bits_; }
  static Word from_bits(Bits b) { return Word(b); }

  friend bool operator==(Word a, Word b) { return a.bits_ == b.bits_; }
  friend bool operator!=(Word a, Word b) { return a.bits_ != b.bits_; }
  friend bool operator<(Word a, Word b) { return a.bits_ < b.bits_; }
  friend bool operator>(Word a, Word b) { return a.bits_ > b.bits_; }

 private:
  explicit Word(Bits b) : bits_(b) {}
  static constexpr Bits kBodyMask = (Bits{1} << 120) - 1;
  static Bits mask(int len) {
    // Keeps the first `len` letters of the body.
    return len >= 15 ? kBodyMask : kBodyMask & ~((Bits{1} << (120 - 8 * len)) - 1);
  }

  Bits bits_ = 0;
};

struct WordHash {
  std::size_t operator()(Word w) const {
    auto b = w.bits();
    std::uint64_t lo = static_cast<std::uint64_t>(b), hi = static_cast<std::uint64_t>(b >> 64);
    std::uint64_t h = lo * 0x9E3779B97F4A7C15ull ^ (hi + 0x632BE59BD9B4E019ull + (lo << 6) + (lo >> 2));
    h ^= h >> 31;
    h *= 0xBF58476D1CE4E5B9ull;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

}  // namespace qsym

#endif  // QSYM_WORD_HPP_
