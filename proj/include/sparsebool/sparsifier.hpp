#pragma once

#include <optional>
#include <vector>

#include "sparsebool/fourier.hpp"
#include "sparsebool/rng.hpp"

namespace sparsebool {

/// D(S) = |fhat(S)| / ||fhat||_1, held exactly as integer weights over the
/// nonzero coefficients (weight = |scaled numerator|).
class CoefficientDistribution {
 public:
  /// Throws for the zero spectrum.
  explicit CoefficientDistribution(const Spectrum& s);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const std::vector<std::uint64_t>& sets() const { return sets_; }
  [[nodiscard]] const std::vector<int>& signs() const { return signs_; }
  [[nodiscard]] Rational probability(std::size_t i) const;
  [[nodiscard]] Rational probability_of(std::uint64_t set) const;

  /// Index into sets() drawn with probability proportional to its weight.
  std::size_t draw(Rng& rng) const;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> sets_;
  std::vector<int> signs_;
  std::vector<std::uint64_t> cumulative_;
};

inline CoefficientDistribution coefficient_distribution(const Spectrum& s) { return CoefficientDistribution(s); }

struct SignedSet {
  BitVec set;
  int sign = 1;
};

/// (scale / |terms|) * sum sign * chi_S(x). Repeated sets are allowed.
struct SparseApproximant {
  int n = 0;
  Rational scale{0};
  std::vector<SignedSet> terms;

  /// Integer sum_terms sign * chi_S(x) for every x at once.
  [[nodiscard]] std::vector<std::int64_t> character_sums() const;
  [[nodiscard]] Rational evaluate(const BitVec& x) const;
};

/// `size` i.i.d. draws from D with a_S = sign(fhat(S)). The zero spectrum
/// yields the empty approximant with scale 0.
SparseApproximant sample_approximant(const Spectrum& s, int size, Rng& rng);

/// ceil(2 a^2 ln(2/delta) / eps^2).
int chernoff_size(const Rational& a, const Rational& eps, const Rational& delta);

/// Exact fraction of x with |f(x) - approx(x)| >= eps.
Rational measure_bad_fraction(const TruthTable& f, const SparseApproximant& approx, const Rational& eps);

/// Rounds approx(x) to the nearest of {-1, 0, +1}, ties toward 0. Returns
/// nullopt unless f takes values in {-1, 0, +1}.
std::optional<TruthTable> rounding_defines_function(const TruthTable& f, const SparseApproximant& approx);

}  // namespace sparsebool
