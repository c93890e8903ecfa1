#include "sparsebool/enumerator.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sparsebool/gf2.hpp"
#include "sparsebool/zoo.hpp"

namespace sparsebool {

BoolTable::BoolTable(int n) : n_(n) {
  if (n < 0 || n > kMaxDim) throw std::invalid_argument("BoolTable: dimension out of range");
  words_.assign((size() + 63) / 64, 0);
}

BoolTable::BoolTable(int n, std::uint64_t packed) : BoolTable(n) {
  if (n > 6) throw std::invalid_argument("BoolTable: packed form needs n <= 6");
  words_[0] = packed & BitVec::mask(static_cast<int>(size()));
}

BoolTable BoolTable::from(const TruthTable& f) {
  if (!is_boolean(f)) throw std::invalid_argument("BoolTable: function is not Boolean");
  return level_set(f, 1);
}

BoolTable BoolTable::level_set(const TruthTable& f, std::int64_t value) {
  BoolTable out(f.n());
  const __int128 target = static_cast<__int128>(value) * f.denominator();
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f.numerators()[x] == target) out.set(x);
  }
  return out;
}

std::size_t BoolTable::popcount() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

TruthTable BoolTable::to_table() const {
  std::vector<std::int64_t> num(size());
  for (std::size_t x = 0; x < size(); ++x) num[x] = get(x);
  return {n_, std::move(num)};
}

std::size_t hamming(const BoolTable& a, const BoolTable& b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.words_.size(); ++i) c += static_cast<std::size_t>(std::popcount(a.words_[i] ^ b.words_[i]));
  return c;
}

std::size_t overlap(const BoolTable& a, const BoolTable& b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.words_.size(); ++i) c += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i]));
  return c;
}

std::size_t packed_sparsity(int n, std::uint64_t packed) {
  std::array<std::int64_t, 64> v{};
  const std::size_t size = std::size_t{1} << n;
  for (std::size_t x = 0; x < size; ++x) v[x] = static_cast<std::int64_t>((packed >> x) & 1U);
  walsh_hadamard_inplace(std::span<std::int64_t>(v.data(), size));
  return static_cast<std::size_t>(std::count_if(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(size),
                                                [](std::int64_t c) { return c != 0; }));
}

void for_each_sparse_boolean(int n, int k, const std::function<void(std::uint64_t, std::size_t)>& visit) {
  if (n < 0 || n > 5) throw std::invalid_argument("for_each_sparse_boolean: n must be in [0, 5]");
  const std::uint64_t count = std::uint64_t{1} << (std::size_t{1} << n);
  for (std::uint64_t t = 0; t < count; ++t) {
    const std::size_t s = packed_sparsity(n, t);
    if (s <= static_cast<std::size_t>(std::max(k, 0))) visit(t, s);
  }
}

namespace {

void check_exhaustive_range(int n, bool allow_long) {
  if (n < 0 || n > 5 || (n == 5 && !allow_long)) {
    throw std::invalid_argument("exhaustive enumeration supports n <= 4 (n = 5 needs the long-run flag), got n = " +
                                std::to_string(n));
  }
}

}  // namespace

std::vector<TruthTable> enumerate_sparse_boolean(int n, int k, bool allow_long) {
  check_exhaustive_range(n, allow_long);
  std::vector<TruthTable> out;
  for_each_sparse_boolean(n, k, [&](std::uint64_t t, std::size_t) { out.push_back(BoolTable(n, t).to_table()); });
  return out;
}

std::vector<TruthTable> enumerate_affine_indicators(int n, int codim) {
  const CandidateClass cls = CandidateClass::affine_indicators(n, codim);
  std::vector<TruthTable> out;
  out.reserve(cls.size());
  for (std::size_t i = 0; i < cls.size(); ++i) out.push_back(cls.member(i).to_table());
  return out;
}

CandidateClass CandidateClass::exhaustive(int n, int k, bool allow_long) {
  check_exhaustive_range(n, allow_long);
  CandidateClass cls;
  cls.n_ = n;
  cls.name_ = "exhaustive(" + std::to_string(n) + "," + std::to_string(k) + ")";
  for_each_sparse_boolean(n, k, [&](std::uint64_t t, std::size_t s) {
    cls.members_.emplace_back(n, t);
    cls.sparsity_.push_back(s);
  });
  return cls;
}

CandidateClass CandidateClass::affine_indicators(int n, int codim) {
  if (codim < 0 || codim > n || n > 14) throw std::invalid_argument("affine_indicators: need 0 <= codim <= n <= 14");
  CandidateClass cls;
  cls.n_ = n;
  cls.name_ = "affine(" + std::to_string(n) + "," + std::to_string(codim) + ")";
  const int dim = n - codim;
  const std::uint64_t total = gaussian_binomial(n, dim) << codim;
  if (total > (std::uint64_t{1} << 26)) throw std::invalid_argument("affine_indicators: class too large to materialize");
  const std::size_t sparsity = std::size_t{1} << codim;
  for (const AffineSubspace& lin : enumerate_linear_subspaces(n, dim)) {
    // Coset representatives: offsets vanishing on every pivot coordinate.
    std::uint64_t pivots = 0;
    for (const BitVec& b : lin.basis()) pivots |= std::uint64_t{1} << std::countr_zero(b.bits());
    const std::uint64_t free = BitVec::mask(n) & ~pivots;
    std::uint64_t offset = 0;
    do {
      BoolTable t(n);
      for (const BitVec& p : enumerate_points(AffineSubspace(BitVec(n, offset), lin.basis()))) {
        t.set(static_cast<std::size_t>(p.bits()));
      }
      cls.members_.push_back(std::move(t));
      cls.sparsity_.push_back(sparsity);
      offset = (offset - free) & free;  // next subset of `free`
    } while (offset != 0);
  }
  return cls;
}

CandidateClass CandidateClass::explicit_list(std::span<const TruthTable> tables) {
  CandidateClass cls;
  cls.name_ = "explicit";
  cls.n_ = tables.empty() ? 0 : tables.front().n();
  for (const TruthTable& t : tables) {
    if (t.n() != cls.n_) throw std::invalid_argument("explicit class: dimension mismatch");
    cls.members_.push_back(BoolTable::from(t));
    cls.sparsity_.push_back(sparsebool::sparsity(t));
  }
  return cls;
}

std::vector<std::size_t> distances_to(const TruthTable& f, const CandidateClass& cls) {
  if (cls.size() > 0 && cls.n() != f.n()) throw std::invalid_argument("list decoding: class dimension differs from f");
  const BoolTable zeros = BoolTable::level_set(f, 0);
  const BoolTable ones = BoolTable::level_set(f, 1);
  std::vector<std::size_t> out(cls.size());
  for (std::size_t i = 0; i < cls.size(); ++i) {
    const BoolTable& g = cls.member(i);
    // Agreement: g = 1 where f = 1, or g = 0 where f = 0.
    const std::size_t agree = overlap(g, ones) + zeros.popcount() - overlap(g, zeros);
    out[i] = f.size() - agree;
  }
  return out;
}

ListDecodeResult list_decode_count(const TruthTable& f, int k, std::size_t d, const CandidateClass& cls) {
  ListDecodeResult result;
  const auto distances = distances_to(f, cls);
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (cls.sparsity(i) <= static_cast<std::size_t>(std::max(k, 0)) && distances[i] <= d) result.members.push_back(i);
  }
  result.count = result.members.size();
  return result;
}

std::optional<std::size_t> min_distance_report(int n, int k) {
  const CandidateClass cls = CandidateClass::exhaustive(n, k);
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    for (std::size_t j = i + 1; j < cls.size(); ++j) {
      const std::size_t d = hamming(cls.member(i), cls.member(j));
      if (!best || d < *best) best = d;
    }
  }
  return best;
}

std::vector<GrowthPoint> growth_curve(int n, int k, const TruthTable& f) {
  const CandidateClass cls = CandidateClass::exhaustive(n, k);
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::size_t> at(size + 1, 0);
  for (std::size_t d : distances_to(f, cls)) ++at[d];
  const double log_k = k > 1 ? std::log2(static_cast<double>(k)) : 0.0;
  std::vector<GrowthPoint> curve;
  std::size_t running = 0;
  for (std::size_t d = 0; d <= size; ++d) {
    running += at[d];
    curve.push_back({d, running,
                     running == 0 ? -std::numeric_limits<double>::infinity() : std::log2(static_cast<double>(running)),
                     static_cast<double>(n) * static_cast<double>(d) * k * log_k / static_cast<double>(size)});
  }
  return curve;
}

}  // namespace sparsebool
