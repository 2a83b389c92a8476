#include "treelect/bits.hpp"

#include <algorithm>
#include <bit>

#include "treelect/error.hpp"

namespace treelect {

BitString::BitString(std::string_view s) {
  bits_.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') throw Error(Errc::BadFormat, "bit string contains '" + std::string(1, c) + "'");
    bits_.push_back(c == '1');
  }
}

void BitString::append(const BitString& other) {
  bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

BitString BitString::suffix(std::size_t from) const {
  BitString out;
  if (from < bits_.size()) out.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(from), bits_.end());
  return out;
}

std::string BitString::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (bool b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

std::strong_ordering BitString::operator<=>(const BitString& o) const {
  return std::lexicographical_compare_three_way(bits_.begin(), bits_.end(), o.bits_.begin(), o.bits_.end());
}

int floor_log2(std::uint64_t x) { return 63 - std::countl_zero(x); }

int ceil_log2(std::uint64_t x) { return x <= 1 ? 0 : floor_log2(x - 1) + 1; }

std::size_t gamma_length(std::uint64_t v) {
  if (v == 0) throw Error(Errc::BadParameters, "gamma code needs v >= 1");
  return 2 * static_cast<std::size_t>(floor_log2(v)) + 1;
}

void put_bits(BitString& out, std::uint64_t v, int width) {
  for (int i = width - 1; i >= 0; --i) out.push_back(((v >> i) & 1U) != 0);
}

void put_gamma(BitString& out, std::uint64_t v) {
  if (v == 0) throw Error(Errc::BadParameters, "gamma code needs v >= 1");
  int len = floor_log2(v);
  for (int i = 0; i < len; ++i) out.push_back(false);
  put_bits(out, v, len + 1);
}

bool BitReader::get() {
  if (pos_ >= bits_->size()) throw Error(Errc::BadAdvice, "read past end of bit string");
  return (*bits_)[pos_++];
}

std::uint64_t BitReader::get_bits(int width) {
  std::uint64_t v = 0;
  for (int i = 0; i < width; ++i) v = (v << 1) | (get() ? 1U : 0U);
  return v;
}

std::uint64_t BitReader::get_gamma() {
  int zeros = 0;
  while (!get()) {
    if (++zeros > 62) throw Error(Errc::BadAdvice, "gamma prefix too long");
  }
  std::uint64_t v = 1;
  for (int i = 0; i < zeros; ++i) v = (v << 1) | (get() ? 1U : 0U);
  return v;
}

}  // namespace treelect
