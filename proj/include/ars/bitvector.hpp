#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "ars/errors.hpp"

namespace ars {

// A point in B^k. Coordinates are 1-based; coordinate 1 is the most
// significant bit of the packed word, so to_index() reads the tuple
// (b1, ..., bk) as a binary number with b1 on top. Generator-function
// tables rely on that convention: concat(state, input).to_index() puts
// the state bits in the high-order positions.
class BitVector {
public:
  static constexpr int kMaxWidth = 63;

  BitVector(int width, std::uint64_t value) : width_(width), word_(value) {
    if (width < 1 || width > kMaxWidth)
      throw Error("BitVector width out of range: " + std::to_string(width));
    if (width < 64 && value >> width)
      throw Error("BitVector value wider than declared width");
  }

  static BitVector zeros(int width) { return BitVector(width, 0); }
  static BitVector ones(int width) { return BitVector(width, mask(width)); }

  // "0101" with the first character as coordinate 1.
  static BitVector parse(std::string_view text) {
    if (text.empty() || text.size() > kMaxWidth)
      throw Error("bad bit string: \"" + std::string(text) + "\"");
    std::uint64_t w = 0;
    for (char c : text) {
      if (c != '0' && c != '1')
        throw Error("bad bit string: \"" + std::string(text) + "\"");
      w = (w << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return BitVector(static_cast<int>(text.size()), w);
  }

  int width() const { return width_; }
  std::uint64_t to_index() const { return word_; }

  bool bit(int i) const {
    check_coord(i);
    return (word_ >> (width_ - i)) & 1u;
  }

  BitVector with_bit(int i, bool v) const {
    check_coord(i);
    const std::uint64_t m = std::uint64_t{1} << (width_ - i);
    return BitVector(width_, v ? (word_ | m) : (word_ & ~m));
  }

  bool any() const { return word_ != 0; }
  bool none() const { return word_ == 0; }

  int count() const {
    int c = 0;
    for (std::uint64_t w = word_; w; w &= w - 1) ++c;
    return c;
  }

  BitVector operator~() const { return BitVector(width_, ~word_ & mask(width_)); }
  BitVector operator&(const BitVector& o) const {
    check_width(o);
    return BitVector(width_, word_ & o.word_);
  }
  BitVector operator|(const BitVector& o) const {
    check_width(o);
    return BitVector(width_, word_ | o.word_);
  }
  BitVector operator^(const BitVector& o) const {
    check_width(o);
    return BitVector(width_, word_ ^ o.word_);
  }

  BitVector concat(const BitVector& o) const {
    if (width_ + o.width_ > kMaxWidth) throw Error("BitVector concat too wide");
    return BitVector(width_ + o.width_, (word_ << o.width_) | o.word_);
  }

  // Coordinates lo..hi, 1-based inclusive.
  BitVector slice(int lo, int hi) const {
    if (lo < 1 || lo > hi || hi > width_)
      throw BadRange("bad coordinate range [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "] for width " +
                     std::to_string(width_));
    const int w = hi - lo + 1;
    return BitVector(w, (word_ >> (width_ - hi)) & mask(w));
  }

  std::string to_string() const {
    std::string s(static_cast<std::size_t>(width_), '0');
    for (int i = 1; i <= width_; ++i)
      if (bit(i)) s[static_cast<std::size_t>(i - 1)] = '1';
    return s;
  }

  friend auto operator<=>(const BitVector&, const BitVector&) = default;

private:
  static std::uint64_t mask(int w) {
    return w >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << w) - 1;
  }

  void check_coord(int i) const {
    if (i < 1 || i > width_)
      throw BadRange("coordinate " + std::to_string(i) +
                     " out of range for width " + std::to_string(width_));
  }

  void check_width(const BitVector& o) const {
    if (width_ != o.width_)
      throw WidthMismatch("BitVector widths differ: " + std::to_string(width_) +
                          " vs " + std::to_string(o.width_));
  }

  int width_;
  std::uint64_t word_;
};

}  // namespace ars
