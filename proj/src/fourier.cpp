#include "sparsebool/fourier.hpp"

#include <bit>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace sparsebool {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  const std::int64_t g = std::gcd(a, b);
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a / g, b, &out)) throw std::overflow_error("denominator overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("numerator overflow");
  return out;
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) {
    throw std::invalid_argument("invalid integer '" + std::string(text) + "'");
  }
  return v;
}

std::size_t table_size(int n) {
  if (n < 0 || n > kMaxDim) {
    throw std::invalid_argument("table dimension " + std::to_string(n) + " outside [0, " + std::to_string(kMaxDim) + "]");
  }
  return std::size_t{1} << n;
}

template <typename Op>
TruthTable combine(const TruthTable& a, const TruthTable& b, Op op) {
  if (a.n() != b.n()) throw std::invalid_argument("table dimension mismatch");
  const std::int64_t den = checked_lcm(a.denominator(), b.denominator());
  const std::int64_t sa = den / a.denominator();
  const std::int64_t sb = den / b.denominator();
  std::vector<std::int64_t> num(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    num[i] = op(checked_mul(a.numerators()[i], sa), checked_mul(b.numerators()[i], sb));
  }
  return {a.n(), std::move(num), den};
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return {parse_int(text), 1};
  const std::int64_t den = parse_int(text.substr(slash + 1));
  if (den <= 0) throw std::invalid_argument("denominator must be positive in '" + std::string(text) + "'");
  return {parse_int(text.substr(0, slash)), den};
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational make_rational(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr __int128 lo = std::numeric_limits<std::int64_t>::min();
  constexpr __int128 hi = std::numeric_limits<std::int64_t>::max();
  if (num < lo || num > hi || den > hi) throw std::overflow_error("rational result exceeds 64 bits");
  return {static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
}

namespace detail {

ScaledArray::ScaledArray(int n, std::vector<std::int64_t> numerators, std::int64_t denominator)
    : n_(n), num_(std::move(numerators)), den_(denominator) {
  if (num_.size() != table_size(n)) throw std::invalid_argument("value count must be 2^n");
  if (den_ == 0) throw std::invalid_argument("zero denominator");
  if (den_ < 0) {
    den_ = -den_;
    for (auto& v : num_) v = -v;
  }
  std::int64_t g = den_;
  for (std::int64_t v : num_) {
    if (g == 1) break;
    g = std::gcd(g, v);
  }
  if (g > 1) {
    den_ /= g;
    for (auto& v : num_) v /= g;
  }
}

std::pair<std::vector<std::int64_t>, std::int64_t> ScaledArray::common_denominator(std::span<const Rational> values) {
  std::int64_t den = 1;
  for (const Rational& r : values) den = checked_lcm(den, r.denominator());
  std::vector<std::int64_t> num;
  num.reserve(values.size());
  for (const Rational& r : values) num.push_back(checked_mul(r.numerator(), den / r.denominator()));
  return {std::move(num), den};
}

}  // namespace detail

TruthTable::TruthTable(int n) : ScaledArray(n, std::vector<std::int64_t>(table_size(n), 0), 1) {}

TruthTable::TruthTable(int n, std::vector<std::int64_t> numerators, std::int64_t denominator)
    : ScaledArray(n, std::move(numerators), denominator) {}

TruthTable::TruthTable(int n, std::span<const Rational> values) {
  auto [num, den] = common_denominator(values);
  static_cast<ScaledArray&>(*this) = ScaledArray(n, std::move(num), den);
}

TruthTable TruthTable::constant(int n, const Rational& c) {
  return {n, std::vector<std::int64_t>(table_size(n), c.numerator()), c.denominator()};
}

Rational TruthTable::operator()(const BitVec& x) const {
  if (x.size() != n_) throw std::invalid_argument("TruthTable: point dimension mismatch");
  return value(static_cast<std::size_t>(x.bits()));
}

bool TruthTable::is_zero() const {
  for (std::int64_t v : num_) {
    if (v != 0) return false;
  }
  return true;
}

TruthTable operator+(const TruthTable& a, const TruthTable& b) {
  return combine(a, b, [](std::int64_t x, std::int64_t y) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(x, y, &out)) throw std::overflow_error("numerator overflow");
    return out;
  });
}

TruthTable operator-(const TruthTable& a, const TruthTable& b) {
  return combine(a, b, [](std::int64_t x, std::int64_t y) {
    std::int64_t out = 0;
    if (__builtin_sub_overflow(x, y, &out)) throw std::overflow_error("numerator overflow");
    return out;
  });
}

TruthTable operator*(const Rational& c, const TruthTable& f) {
  std::vector<std::int64_t> num(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) num[i] = checked_mul(f.numerators()[i], c.numerator());
  return {f.n(), std::move(num), checked_mul(f.denominator(), c.denominator())};
}

Spectrum::Spectrum(int n, std::vector<std::int64_t> numerators, std::int64_t denominator)
    : ScaledArray(n, std::move(numerators), denominator) {}

Spectrum::Spectrum(int n, std::span<const Rational> scaled_values) {
  auto [num, den] = common_denominator(scaled_values);
  static_cast<ScaledArray&>(*this) = ScaledArray(n, std::move(num), den);
}

Rational Spectrum::coefficient(std::size_t s) const {
  return make_rational(num_[s], static_cast<__int128>(den_) << n_);
}

int character(const BitVec& s, const BitVec& x) { return dot(s, x) ? -1 : 1; }

void walsh_hadamard_inplace(std::span<std::int64_t> values) {
  const std::size_t size = values.size();
  if (!std::has_single_bit(size)) throw std::invalid_argument("walsh_hadamard_inplace: length must be a power of two");
  for (std::size_t h = 1; h < size; h <<= 1) {
    for (std::size_t i = 0; i < size; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int64_t a = values[j];
        const std::int64_t b = values[j + h];
        if (__builtin_add_overflow(a, b, &values[j]) || __builtin_sub_overflow(a, b, &values[j + h])) {
          throw std::overflow_error("walsh_hadamard_inplace: coefficient overflow");
        }
      }
    }
  }
}

Spectrum wht(const TruthTable& f) {
  std::vector<std::int64_t> num(f.numerators().begin(), f.numerators().end());
  walsh_hadamard_inplace(num);
  return {f.n(), std::move(num), f.denominator()};
}

TruthTable inverse_wht(const Spectrum& s) {
  std::vector<std::int64_t> num(s.numerators().begin(), s.numerators().end());
  walsh_hadamard_inplace(num);
  return {s.n(), std::move(num), checked_mul(s.denominator(), std::int64_t{1} << s.n())};
}

std::size_t sparsity(const Spectrum& s) {
  std::size_t count = 0;
  for (std::int64_t v : s.numerators()) count += v != 0;
  return count;
}

std::size_t support_size(const TruthTable& f) {
  std::size_t count = 0;
  for (std::int64_t v : f.numerators()) count += v != 0;
  return count;
}

Rational spectral_norm(const Spectrum& s) {
  __int128 total = 0;
  for (std::int64_t v : s.numerators()) total += v < 0 ? -static_cast<__int128>(v) : v;
  return make_rational(total, static_cast<__int128>(s.denominator()) << s.n());
}

Rational l2_spectrum(const Spectrum& s) {
  __int128 total = 0;
  for (std::int64_t v : s.numerators()) total += static_cast<__int128>(v) * v;
  const __int128 den = static_cast<__int128>(s.denominator()) * s.denominator();
  return make_rational(total, den << (2 * s.n()));
}

Rational parseval_residual(const TruthTable& f) {
  const Spectrum s = wht(f);
  __int128 table_sq = 0;
  for (std::int64_t v : f.numerators()) table_sq += static_cast<__int128>(v) * v;
  __int128 spec_sq = 0;
  for (std::int64_t v : s.numerators()) spec_sq += static_cast<__int128>(v) * v;
  const __int128 fd2 = static_cast<__int128>(f.denominator()) * f.denominator();
  const __int128 sd2 = static_cast<__int128>(s.denominator()) * s.denominator();
  // E[f^2] = table_sq / (fd2 2^n), ||fhat||^2 = spec_sq / (sd2 4^n).
  const __int128 num = ((table_sq * sd2) << f.n()) - spec_sq * fd2;
  return make_rational(num, (fd2 * sd2) << (2 * f.n()));
}

std::size_t dist(const TruthTable& f, const TruthTable& g) {
  if (f.n() != g.n()) throw std::invalid_argument("dist: dimension mismatch");
  std::size_t count = 0;
  const __int128 fd = f.denominator();
  const __int128 gd = g.denominator();
  for (std::size_t i = 0; i < f.size(); ++i) {
    count += static_cast<__int128>(f.numerators()[i]) * gd != static_cast<__int128>(g.numerators()[i]) * fd;
  }
  return count;
}

std::size_t non_boolean_count(const TruthTable& f) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < f.size(); ++i) count += !f.is_boolean_at(i);
  return count;
}

bool is_boolean(const TruthTable& f) { return non_boolean_count(f) == 0; }

std::uint64_t uncertainty_product(const TruthTable& f) {
  if (f.is_zero()) throw std::invalid_argument("uncertainty_product: requires a nonzero function");
  return static_cast<std::uint64_t>(support_size(f)) * sparsity(wht(f));
}

TruthTable restrict(const TruthTable& f, const BitVec& offset, std::span<const BitVec> basis) {
  if (offset.size() != f.n()) throw std::invalid_argument("restrict: subspace lives in a different dimension");
  std::vector<std::uint64_t> index{offset.bits()};
  index.reserve(std::size_t{1} << basis.size());
  for (const BitVec& b : basis) {
    if (b.size() != f.n()) throw std::invalid_argument("restrict: basis vector length mismatch");
    const std::size_t half = index.size();
    for (std::size_t c = 0; c < half; ++c) index.push_back(index[c] ^ b.bits());
  }
  std::vector<std::int64_t> num(index.size());
  for (std::size_t y = 0; y < index.size(); ++y) num[y] = f.numerators()[index[y]];
  return {static_cast<int>(basis.size()), std::move(num), f.denominator()};
}

TruthTable compose_affine(const TruthTable& f, const GF2Matrix& map, const BitVec& shift) {
  const int n = f.n();
  if (map.rows() != n || map.cols() != n || shift.size() != n) {
    throw std::invalid_argument("compose_affine: map and shift must match the table dimension");
  }
  if (rank(map) != n) throw std::invalid_argument("compose_affine: map is singular");
  std::vector<std::uint64_t> column(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (map.row(i).get(j)) column[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
    }
  }
  std::vector<std::uint64_t> image(f.size(), 0);
  for (std::size_t x = 1; x < f.size(); ++x) {
    const int low = std::countr_zero(x);
    image[x] = image[x & (x - 1)] ^ column[static_cast<std::size_t>(low)];
  }
  std::vector<std::int64_t> num(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) num[x] = f.numerators()[image[x] ^ shift.bits()];
  return {n, std::move(num), f.denominator()};
}

}  // namespace sparsebool
