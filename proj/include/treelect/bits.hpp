#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace treelect {

class BitString {
 public:
  BitString() = default;
  explicit BitString(std::string_view zeros_and_ones);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  bool operator[](std::size_t i) const { return bits_[i]; }

  void push_back(bool b) { bits_.push_back(b); }
  void append(const BitString& other);
  // Bits [from, size()).
  BitString suffix(std::size_t from) const;

  std::string to_string() const;
  const std::vector<bool>& raw() const { return bits_; }

  bool operator==(const BitString&) const = default;
  std::strong_ordering operator<=>(const BitString& o) const;

 private:
  std::vector<bool> bits_;
};

using AdviceBits = BitString;

// Elias gamma code of v >= 1: floor(log2 v) zeros, then v in binary.
std::size_t gamma_length(std::uint64_t v);
void put_gamma(BitString& out, std::uint64_t v);
// Fixed-width, most significant bit first.
void put_bits(BitString& out, std::uint64_t v, int width);

// ceil(log2 x) for x >= 1.
int ceil_log2(std::uint64_t x);
int floor_log2(std::uint64_t x);

class BitReader {
 public:
  explicit BitReader(const BitString& bits) : bits_(&bits) {}

  bool get();
  std::uint64_t get_bits(int width);
  std::uint64_t get_gamma();
  bool at_end() const { return pos_ == bits_->size(); }
  std::size_t position() const { return pos_; }

 private:
  const BitString* bits_;
  std::size_t pos_ = 0;
};

}  // namespace treelect

template <>
struct std::hash<treelect::BitString> {
  std::size_t operator()(const treelect::BitString& b) const noexcept {
    return std::hash<std::vector<bool>>{}(b.raw());
  }
};
