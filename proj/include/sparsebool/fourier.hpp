#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "sparsebool/bitvec.hpp"
#include "sparsebool/gf2.hpp"

namespace boost {
// rational<int64_t> == integer recurses forever in C++20 through boost's reversed template.
inline constexpr bool operator==(const rational<std::int64_t>& a, std::int64_t b) { return a.denominator() == 1 && a.numerator() == b; }
inline constexpr bool operator==(std::int64_t b, const rational<std::int64_t>& a) { return a.denominator() == 1 && a.numerator() == b; }
inline constexpr bool operator==(const rational<std::int64_t>& a, int b) { return a == static_cast<std::int64_t>(b); }
inline constexpr bool operator==(int b, const rational<std::int64_t>& a) { return a == static_cast<std::int64_t>(b); }
inline constexpr bool operator!=(const rational<std::int64_t>& a, std::int64_t b) { return !(a == b); }
inline constexpr bool operator!=(std::int64_t b, const rational<std::int64_t>& a) { return !(a == b); }
inline constexpr bool operator!=(const rational<std::int64_t>& a, int b) { return !(a == b); }
inline constexpr bool operator!=(int b, const rational<std::int64_t>& a) { return !(a == b); }
}  // namespace boost

namespace sparsebool {

using Rational = boost::rational<std::int64_t>;

/// Parses "p" or "p/q".
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);

/// Narrows num/den computed in 128-bit arithmetic; throws std::overflow_error
/// if the reduced fraction does not fit in 64 bits.
Rational make_rational(__int128 num, __int128 den);

namespace detail {

/// Shared storage for tables and spectra: 2^n numerators over one positive
/// denominator, kept in lowest terms across the whole array.
class ScaledArray {
 public:
  ScaledArray() = default;
  ScaledArray(int n, std::vector<std::int64_t> numerators, std::int64_t denominator);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] std::size_t size() const { return num_.size(); }
  [[nodiscard]] std::span<const std::int64_t> numerators() const { return num_; }
  [[nodiscard]] std::int64_t denominator() const { return den_; }
  [[nodiscard]] Rational value(std::size_t i) const { return {num_[i], den_}; }

  friend bool operator==(const ScaledArray&, const ScaledArray&) = default;

 protected:
  static std::pair<std::vector<std::int64_t>, std::int64_t> common_denominator(std::span<const Rational> values);

  int n_ = 0;
  std::vector<std::int64_t> num_;
  std::int64_t den_ = 1;
};

}  // namespace detail

/// A function F_2^n -> Q. Index i encodes x with bit j of i equal to x_{j+1}.
class TruthTable : public detail::ScaledArray {
 public:
  TruthTable() = default;
  /// The zero function on n variables.
  explicit TruthTable(int n);
  TruthTable(int n, std::vector<std::int64_t> numerators, std::int64_t denominator = 1);
  TruthTable(int n, std::span<const Rational> values);

  static TruthTable constant(int n, const Rational& c);

  [[nodiscard]] Rational operator()(const BitVec& x) const;
  [[nodiscard]] Rational operator[](std::size_t i) const { return value(i); }

  [[nodiscard]] bool is_boolean_at(std::size_t i) const { return num_[i] == 0 || num_[i] == den_; }
  [[nodiscard]] bool is_zero() const;

  friend TruthTable operator+(const TruthTable& a, const TruthTable& b);
  friend TruthTable operator-(const TruthTable& a, const TruthTable& b);
  friend TruthTable operator*(const Rational& c, const TruthTable& f);
  friend bool operator==(const TruthTable&, const TruthTable&) = default;
};

/// Fourier coefficients scaled by 2^n: entry S holds 2^n * fhat(S), with S
/// encoded by its characteristic vector as an index.
class Spectrum : public detail::ScaledArray {
 public:
  Spectrum() = default;
  Spectrum(int n, std::vector<std::int64_t> numerators, std::int64_t denominator = 1);
  Spectrum(int n, std::span<const Rational> scaled_values);

  [[nodiscard]] Rational scaled(std::size_t s) const { return value(s); }
  /// fhat(S) itself.
  [[nodiscard]] Rational coefficient(std::size_t s) const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

/// chi_S(x) = (-1)^{|S & x|}.
int character(const BitVec& s, const BitVec& x);

/// In-place butterfly over integers; entry S becomes sum_x v[x] chi_S(x).
void walsh_hadamard_inplace(std::span<std::int64_t> values);

Spectrum wht(const TruthTable& f);
TruthTable inverse_wht(const Spectrum& s);

/// Number of nonzero Fourier coefficients.
std::size_t sparsity(const Spectrum& s);
inline std::size_t sparsity(const TruthTable& f) { return sparsity(wht(f)); }
/// |{x : f(x) != 0}|.
std::size_t support_size(const TruthTable& f);
/// sum_S |fhat(S)|.
Rational spectral_norm(const Spectrum& s);
/// sum_S fhat(S)^2.
Rational l2_spectrum(const Spectrum& s);

/// E_x[f(x)^2] - sum_S fhat(S)^2; exactly zero for every f.
Rational parseval_residual(const TruthTable& f);

/// Number of points where the tables differ.
std::size_t dist(const TruthTable& f, const TruthTable& g);

bool is_boolean(const TruthTable& f);
std::size_t non_boolean_count(const TruthTable& f);

/// |supp(f)| * |supp(fhat)|. Throws for the zero function.
std::uint64_t uncertainty_product(const TruthTable& f);

/// g(y) = f(offset + sum_i y_i basis_i), following the basis in the given order.
TruthTable restrict(const TruthTable& f, const BitVec& offset, std::span<const BitVec> basis);
inline TruthTable restrict(const TruthTable& f, const AffineSubspace& v) { return restrict(f, v.offset(), v.basis()); }

/// g(x) = f(map * x + shift). Throws if the map is singular.
TruthTable compose_affine(const TruthTable& f, const GF2Matrix& map, const BitVec& shift);

}  // namespace sparsebool
