#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sparsebool/bitvec.hpp"
#include "sparsebool/rng.hpp"

namespace sparsebool {

/// Dense matrix over GF(2), stored by rows. Each row has `cols()` entries.
class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(int cols, std::vector<BitVec> rows);

  static GF2Matrix identity(int n);
  static GF2Matrix zero(int rows, int cols);
  /// Parses rows written as bitstrings, e.g. {"110", "011"}.
  static GF2Matrix from_strings(std::span<const std::string_view> rows);

  [[nodiscard]] int rows() const { return static_cast<int>(rows_.size()); }
  [[nodiscard]] int cols() const { return cols_; }
  [[nodiscard]] const BitVec& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
  [[nodiscard]] const std::vector<BitVec>& row_vectors() const { return rows_; }

  /// m * x, where |x| = cols(); the result has length rows().
  [[nodiscard]] BitVec apply(const BitVec& x) const;

  friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

 private:
  int cols_ = 0;
  std::vector<BitVec> rows_;
};

/// Dimension of the row span.
int rank(const GF2Matrix& m);

/// Some x with m * x = b, or nullopt if the system is inconsistent. Pivots are
/// taken in coordinate order and free variables are set to zero.
std::optional<BitVec> solve(const GF2Matrix& m, const BitVec& b);

/// Basis of {x : m * x = 0}, one vector per free column, in column order.
std::vector<BitVec> nullspace(const GF2Matrix& m);

/// Reduced row-echelon basis of span(vectors). The pivot of a vector is its
/// lowest set coordinate; no other basis vector touches that coordinate.
std::vector<BitVec> echelon_basis(std::span<const BitVec> vectors);

/// offset + span(basis), kept in canonical form: basis in reduced echelon
/// form sorted by pivot, offset zero on every pivot coordinate. Two equal
/// point sets therefore compare equal structurally.
class AffineSubspace {
 public:
  /// Throws if the directions are linearly dependent or lengths disagree.
  AffineSubspace(BitVec offset, std::span<const BitVec> directions);

  static AffineSubspace point(const BitVec& x) { return AffineSubspace(x, {}); }
  static AffineSubspace full(int n);
  static AffineSubspace linear(int n, std::span<const BitVec> directions) {
    return AffineSubspace(BitVec(n), directions);
  }

  [[nodiscard]] int ambient_dim() const { return offset_.size(); }
  [[nodiscard]] int dim() const { return static_cast<int>(basis_.size()); }
  [[nodiscard]] int codim() const { return ambient_dim() - dim(); }
  [[nodiscard]] const BitVec& offset() const { return offset_; }
  [[nodiscard]] const std::vector<BitVec>& basis() const { return basis_; }
  [[nodiscard]] std::size_t size() const { return std::size_t{1} << dim(); }

  [[nodiscard]] bool contains(const BitVec& x) const;

  /// Coordinates y with x = offset + sum y_i basis_i, if x is a member.
  [[nodiscard]] std::optional<BitVec> coordinates(const BitVec& x) const;

  /// Linear constraints (a_i, b_i) with V = {x : <a_i, x> = b_i for all i};
  /// exactly codim() of them, with independent a_i.
  [[nodiscard]] std::vector<std::pair<BitVec, bool>> constraints() const;

  friend bool operator==(const AffineSubspace&, const AffineSubspace&) = default;
  friend auto operator<=>(const AffineSubspace&, const AffineSubspace&) = default;

 private:
  BitVec offset_;
  std::vector<BitVec> basis_;
};

inline bool membership(const AffineSubspace& v, const BitVec& x) { return v.contains(x); }

/// Smallest affine subspace containing every point; nullopt for no points.
std::optional<AffineSubspace> affine_span(std::span<const BitVec> points);

/// Common points of two subspaces of the same ambient space, nullopt if disjoint.
std::optional<AffineSubspace> intersect(const AffineSubspace& v1, const AffineSubspace& v2);

/// All 2^dim members, ordered offset + sum c_i basis_i with c counting in
/// binary (bit i of the counter selects basis_i).
std::vector<BitVec> enumerate_points(const AffineSubspace& v);

/// Uniform r-dimensional linear subspace of F_2^n.
AffineSubspace random_subspace(int n, int r, Rng& rng);

/// Uniform r-dimensional affine subspace of F_2^n.
AffineSubspace random_affine_subspace(int n, int r, Rng& rng);

/// Uniform element of GL(n, 2).
GF2Matrix random_invertible_map(int n, Rng& rng);

/// Uniform pair of n/2-dimensional affine subspaces meeting in exactly one point.
std::pair<AffineSubspace, AffineSubspace> sample_dno_pair(int n, Rng& rng);

/// Number of r-dimensional linear subspaces of F_2^n (Gaussian binomial).
std::uint64_t gaussian_binomial(int n, int r);

/// Every r-dimensional linear subspace of F_2^n, in canonical form.
std::vector<AffineSubspace> enumerate_linear_subspaces(int n, int r);

}  // namespace sparsebool
