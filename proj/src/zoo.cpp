#include "sparsebool/zoo.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace sparsebool {

TruthTable affine_indicator(const AffineSubspace& v) { return scaled_indicator(v, Rational(1)); }

TruthTable scaled_indicator(const AffineSubspace& v, const Rational& c) {
  std::vector<std::int64_t> num(std::size_t{1} << v.ambient_dim(), 0);
  for (const BitVec& p : enumerate_points(v)) num[static_cast<std::size_t>(p.bits())] = c.numerator();
  return {v.ambient_dim(), std::move(num), c.denominator()};
}

TruthTable double_and(int n) {
  if (n < 2 || n % 2 != 0 || n > kMaxDim) throw std::invalid_argument("double_and: n must be even in [2, 24]");
  const std::uint64_t low = (std::uint64_t{1} << (n / 2)) - 1;
  const std::uint64_t high = low << (n / 2);
  std::vector<std::int64_t> num(std::size_t{1} << n);
  for (std::uint64_t x = 0; x < num.size(); ++x) {
    num[x] = static_cast<std::int64_t>((x & low) == low) + static_cast<std::int64_t>((x & high) == high);
  }
  return {n, std::move(num)};
}

DnoSample dno_function(int n, Rng& rng) {
  auto [v1, v2] = sample_dno_pair(n, rng);
  TruthTable table = affine_indicator(v1) + affine_indicator(v2);
  return {std::move(table), std::move(v1), std::move(v2)};
}

int exact_log2(std::uint64_t k) {
  if (!std::has_single_bit(k)) throw std::invalid_argument("k = " + std::to_string(k) + " is not a power of two");
  return std::countr_zero(k);
}

namespace {

std::pair<std::vector<std::int64_t>, std::uint64_t> random_junta(int n, int k, Rng& rng) {
  if (k < 1) throw std::invalid_argument("junta: k must be positive");
  const int vars = exact_log2(static_cast<std::uint64_t>(k));
  if (vars > n || n > kMaxDim) throw std::invalid_argument("junta: need log2(k) <= n <= 24");
  const std::uint64_t mask = static_cast<std::uint64_t>(k) - 1;
  std::vector<std::int64_t> assignment(static_cast<std::size_t>(k));
  for (auto& a : assignment) a = static_cast<std::int64_t>(rng() & 1U);
  std::vector<std::int64_t> num(std::size_t{1} << n);
  for (std::uint64_t x = 0; x < num.size(); ++x) num[x] = assignment[x & mask];
  return {std::move(num), mask};
}

}  // namespace

TruthTable gt_yes(int n, int k, Rng& rng) { return {n, random_junta(n, k, rng).first}; }

TruthTable gt_no(int n, int k, Rng& rng) {
  auto [num, mask] = random_junta(n, k, rng);
  const std::uint64_t marked = uniform_below(rng, static_cast<std::uint64_t>(k));
  for (std::uint64_t x = 0; x < num.size(); ++x) {
    if ((x & mask) == marked) num[x] = 2;
  }
  return {n, std::move(num)};
}

ZooSpec parse_zoo_spec(const std::string& text) {
  ZooSpec spec;
  const auto colon = text.find(':');
  spec.family = text.substr(0, colon);
  if (colon == std::string::npos) return spec;
  std::stringstream rest(text.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("zoo spec: expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (key == "n") {
      spec.n = std::stoi(value);
    } else if (key == "k") {
      spec.k = std::stoi(value);
    } else if (key == "codim") {
      spec.codim = std::stoi(value);
    } else if (key == "c") {
      spec.c = parse_rational(value);
    } else if (key == "seed") {
      spec.seed = std::stoull(value);
    } else {
      throw std::invalid_argument("zoo spec: unknown key '" + key + "'");
    }
  }
  return spec;
}

TruthTable generate(const ZooSpec& spec) {
  Rng rng(spec.seed);
  const std::string& f = spec.family;
  if (f == "const") return TruthTable::constant(spec.n, spec.c);
  if (f == "affine" || f == "scaled-indicator") {
    if (spec.codim < 0 || spec.codim > spec.n) throw std::invalid_argument("zoo: need 0 <= codim <= n");
    const AffineSubspace v = random_affine_subspace(spec.n, spec.n - spec.codim, rng);
    return f == "affine" ? affine_indicator(v) : scaled_indicator(v, spec.c);
  }
  if (f == "double-and") return double_and(spec.n);
  if (f == "dno") return dno_function(spec.n, rng).table;
  if (f == "gt-yes") return gt_yes(spec.n, spec.k, rng);
  if (f == "gt-no") return gt_no(spec.n, spec.k, rng);
  throw std::invalid_argument("zoo: unknown family '" + f + "'");
}

}  // namespace sparsebool
