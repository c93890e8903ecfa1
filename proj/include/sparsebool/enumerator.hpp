#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sparsebool/fourier.hpp"

namespace sparsebool {

/// A Boolean function packed one bit per point.
class BoolTable {
 public:
  BoolTable() = default;
  explicit BoolTable(int n);
  BoolTable(int n, std::uint64_t packed);  // n <= 6
  /// Throws if f is not Boolean.
  static BoolTable from(const TruthTable& f);
  /// Points where f equals `value` exactly.
  static BoolTable level_set(const TruthTable& f, std::int64_t value);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] std::size_t size() const { return std::size_t{1} << n_; }
  [[nodiscard]] bool get(std::size_t x) const { return (words_[x >> 6] >> (x & 63)) & 1U; }
  void set(std::size_t x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  [[nodiscard]] std::size_t popcount() const;
  [[nodiscard]] TruthTable to_table() const;
  [[nodiscard]] const std::vector<std::uint64_t>& words() const { return words_; }

  friend std::size_t hamming(const BoolTable& a, const BoolTable& b);
  friend std::size_t overlap(const BoolTable& a, const BoolTable& b);  // |a AND b|
  friend bool operator==(const BoolTable&, const BoolTable&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// A finite family of Boolean functions on n variables, each with its sparsity.
class CandidateClass {
 public:
  /// Every Boolean table on n variables with sparsity <= k. n <= 4, or n = 5
  /// when allow_long is set.
  static CandidateClass exhaustive(int n, int k, bool allow_long = false);
  /// Indicators of every affine subspace of codimension `codim`.
  static CandidateClass affine_indicators(int n, int codim);
  /// Throws if a table is not Boolean or dimensions disagree.
  static CandidateClass explicit_list(std::span<const TruthTable> tables);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] const BoolTable& member(std::size_t i) const { return members_[i]; }
  [[nodiscard]] std::size_t sparsity(std::size_t i) const { return sparsity_[i]; }
  [[nodiscard]] const std::string& name() const { return name_; }

 private:
  int n_ = 0;
  std::string name_;
  std::vector<BoolTable> members_;
  std::vector<std::size_t> sparsity_;
};

/// Number of nonzero Fourier coefficients of a small Boolean table (n <= 6).
std::size_t packed_sparsity(int n, std::uint64_t packed);

/// Calls visit(packed_table, sparsity) for every Boolean table on n variables
/// with sparsity <= k, in increasing packed order. n <= 5.
void for_each_sparse_boolean(int n, int k, const std::function<void(std::uint64_t, std::size_t)>& visit);

/// Every k-sparse Boolean function on n variables, in increasing index order.
std::vector<TruthTable> enumerate_sparse_boolean(int n, int k, bool allow_long = false);

/// One indicator per affine subspace of the given codimension.
std::vector<TruthTable> enumerate_affine_indicators(int n, int codim);

struct ListDecodeResult {
  std::size_t count = 0;
  std::vector<std::size_t> members;  // indices into the class
};

/// Members g with sparsity(g) <= k and dist(f, g) <= d.
ListDecodeResult list_decode_count(const TruthTable& f, int k, std::size_t d, const CandidateClass& cls);

/// dist(f, g) against every member, in class order.
std::vector<std::size_t> distances_to(const TruthTable& f, const CandidateClass& cls);

/// Minimum pairwise distance over enumerate_sparse_boolean(n, k); nullopt if
/// fewer than two members.
std::optional<std::size_t> min_distance_report(int n, int k);

struct GrowthPoint {
  std::size_t d = 0;
  std::size_t count = 0;
  double log2_count = 0.0;  // -inf when count is 0
  double exponent_scale = 0.0;  // n d k log2 k / 2^n
};

/// list_decode_count around f over the exhaustive class, for d = 0 .. 2^n.
std::vector<GrowthPoint> growth_curve(int n, int k, const TruthTable& f);

}  // namespace sparsebool
