#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sparsebool {

/// Largest ambient dimension for subspaces and truth tables (2^24 entries).
inline constexpr int kMaxDim = 24;

/// Largest length a BitVec can carry. Matrix right-hand sides may be longer
/// than kMaxDim, so the storage word bounds this, not the table budget.
inline constexpr int kMaxBits = 64;

/// A vector in F_2^n. Coordinate x_{j+1} lives in bit j of the word, so the
/// word doubles as the truth-table index of the point.
class BitVec {
 public:
  BitVec() = default;

  explicit BitVec(int size, std::uint64_t bits = 0) : bits_(bits), size_(size) {
    if (size < 0 || size > kMaxBits) {
      throw std::invalid_argument("BitVec: length " + std::to_string(size) + " out of range");
    }
    bits_ &= mask(size);
  }

  static BitVec zero(int size) { return BitVec(size); }

  static BitVec unit(int size, int coord) {
    if (coord < 0 || coord >= size) throw std::invalid_argument("BitVec::unit: coordinate out of range");
    return BitVec(size, std::uint64_t{1} << coord);
  }

  /// Parses "x_1 x_2 ... x_n" written left to right, e.g. "110" has x_1 = x_2 = 1.
  static BitVec parse(std::string_view text) {
    BitVec v(static_cast<int>(text.size()));
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '1') {
        v.bits_ |= std::uint64_t{1} << i;
      } else if (text[i] != '0') {
        throw std::invalid_argument("BitVec::parse: invalid character in '" + std::string(text) + "'");
      }
    }
    return v;
  }

  [[nodiscard]] std::string to_string() const {
    std::string s(static_cast<std::size_t>(size_), '0');
    for (int i = 0; i < size_; ++i) {
      if (get(i)) s[static_cast<std::size_t>(i)] = '1';
    }
    return s;
  }

  [[nodiscard]] int size() const { return size_; }
  [[nodiscard]] std::uint64_t bits() const { return bits_; }
  [[nodiscard]] bool get(int i) const { return (bits_ >> i) & 1U; }
  [[nodiscard]] bool is_zero() const { return bits_ == 0; }
  [[nodiscard]] int weight() const { return std::popcount(bits_); }

  void set(int i, bool value) {
    if (i < 0 || i >= size_) throw std::out_of_range("BitVec::set: index out of range");
    bits_ = (bits_ & ~(std::uint64_t{1} << i)) | (std::uint64_t{value} << i);
  }

  BitVec& operator^=(const BitVec& other) {
    check_same(other);
    bits_ ^= other.bits_;
    return *this;
  }
  BitVec& operator&=(const BitVec& other) {
    check_same(other);
    bits_ &= other.bits_;
    return *this;
  }

  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend bool operator==(const BitVec&, const BitVec&) = default;
  friend auto operator<=>(const BitVec&, const BitVec&) = default;

  static constexpr std::uint64_t mask(int size) {
    return size >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1;
  }

 private:
  void check_same(const BitVec& other) const {
    if (size_ != other.size_) throw std::invalid_argument("BitVec: length mismatch");
  }

  std::uint64_t bits_ = 0;
  int size_ = 0;
};

/// Inner product over GF(2).
inline bool dot(const BitVec& a, const BitVec& b) { return (a & b).weight() & 1; }

}  // namespace sparsebool
