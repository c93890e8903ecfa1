#include "sparsebool/sparsifier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sparsebool {

namespace {

double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

}  // namespace

CoefficientDistribution::CoefficientDistribution(const Spectrum& s) : n_(s.n()) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const std::int64_t v = s.numerators()[i];
    if (v == 0) continue;
    sets_.push_back(i);
    signs_.push_back(v > 0 ? 1 : -1);
    total += static_cast<std::uint64_t>(v > 0 ? v : -v);
    cumulative_.push_back(total);
  }
  if (sets_.empty()) throw std::invalid_argument("coefficient_distribution: spectrum is zero");
}

Rational CoefficientDistribution::probability(std::size_t i) const {
  const std::uint64_t w = cumulative_[i] - (i == 0 ? 0 : cumulative_[i - 1]);
  return make_rational(w, cumulative_.back());
}

Rational CoefficientDistribution::probability_of(std::uint64_t set) const {
  const auto it = std::find(sets_.begin(), sets_.end(), set);
  if (it == sets_.end()) return Rational(0);
  return probability(static_cast<std::size_t>(it - sets_.begin()));
}

std::size_t CoefficientDistribution::draw(Rng& rng) const {
  const std::uint64_t u = uniform_below(rng, cumulative_.back());
  return static_cast<std::size_t>(std::upper_bound(cumulative_.begin(), cumulative_.end(), u) - cumulative_.begin());
}

std::vector<std::int64_t> SparseApproximant::character_sums() const {
  std::vector<std::int64_t> sums(std::size_t{1} << n, 0);
  for (const SignedSet& t : terms) sums[static_cast<std::size_t>(t.set.bits())] += t.sign;
  walsh_hadamard_inplace(sums);
  return sums;
}

Rational SparseApproximant::evaluate(const BitVec& x) const {
  if (terms.empty()) return Rational(0);
  std::int64_t sum = 0;
  for (const SignedSet& t : terms) sum += t.sign * character(t.set, x);
  return scale * Rational(sum, static_cast<std::int64_t>(terms.size()));
}

SparseApproximant sample_approximant(const Spectrum& s, int size, Rng& rng) {
  if (size < 1) throw std::invalid_argument("sample_approximant: size must be >= 1");
  SparseApproximant out;
  out.n = s.n();
  if (sparsity(s) == 0) return out;
  const CoefficientDistribution dist(s);
  out.scale = spectral_norm(s);
  out.terms.reserve(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) {
    const std::size_t j = dist.draw(rng);
    out.terms.push_back({BitVec(s.n(), dist.sets()[j]), dist.signs()[j]});
  }
  return out;
}

int chernoff_size(const Rational& a, const Rational& eps, const Rational& delta) {
  if (eps <= 0) throw std::invalid_argument("chernoff_size: eps must be positive");
  if (delta <= 0 || delta > Rational(1, 2)) throw std::invalid_argument("chernoff_size: delta must lie in (0, 1/2]");
  const double av = to_double(a);
  const double ev = to_double(eps);
  return static_cast<int>(std::ceil(2.0 * av * av * std::log(2.0 / to_double(delta)) / (ev * ev)));
}

namespace {

// approx(x) = scale * sums[x] / terms, as an exact fraction per point.
struct ApproxValues {
  std::vector<std::int64_t> sums;
  __int128 mult_num;  // scale numerator
  __int128 den;       // scale denominator * number of terms
};

ApproxValues approx_values(const SparseApproximant& approx, int n) {
  if (approx.n != n) throw std::invalid_argument("approximant dimension mismatch");
  if (approx.terms.empty()) return {std::vector<std::int64_t>(std::size_t{1} << n, 0), 0, 1};
  return {approx.character_sums(), approx.scale.numerator(),
          static_cast<__int128>(approx.scale.denominator()) * static_cast<__int128>(approx.terms.size())};
}

}  // namespace

Rational measure_bad_fraction(const TruthTable& f, const SparseApproximant& approx, const Rational& eps) {
  const ApproxValues a = approx_values(approx, f.n());
  // |fn/fd - m s/ad| >= en/ed  <=>  |fn ad - m s fd| ed >= en fd ad.
  const __int128 fd = f.denominator();
  const __int128 threshold = static_cast<__int128>(eps.numerator()) * fd * a.den;
  std::size_t bad = 0;
  for (std::size_t x = 0; x < f.size(); ++x) {
    __int128 diff = static_cast<__int128>(f.numerators()[x]) * a.den - a.mult_num * a.sums[x] * fd;
    if (diff < 0) diff = -diff;
    bad += diff * eps.denominator() >= threshold;
  }
  return make_rational(static_cast<__int128>(bad), static_cast<__int128>(f.size()));
}

std::optional<TruthTable> rounding_defines_function(const TruthTable& f, const SparseApproximant& approx) {
  for (std::size_t x = 0; x < f.size(); ++x) {
    const std::int64_t v = f.numerators()[x];
    if (v != 0 && v != f.denominator() && v != -f.denominator()) return std::nullopt;
  }
  const ApproxValues a = approx_values(approx, f.n());
  std::vector<std::int64_t> out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    const __int128 twice = 2 * a.mult_num * a.sums[x];  // 2 approx(x) * den
    out[x] = twice > a.den ? 1 : (twice < -a.den ? -1 : 0);
  }
  return TruthTable(f.n(), std::move(out));
}

}  // namespace sparsebool
