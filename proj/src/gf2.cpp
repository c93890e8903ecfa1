#include "sparsebool/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace sparsebool {

namespace {

int lowest_bit(std::uint64_t w) { return std::countr_zero(w); }

void check_dim(int n, const char* who) {
  if (n < 0 || n > kMaxDim) {
    throw std::invalid_argument(std::string(who) + ": ambient dimension " + std::to_string(n) +
                                " outside [0, " + std::to_string(kMaxDim) + "]");
  }
}

// Reduced echelon basis over raw words, pivot = lowest set bit.
std::vector<std::uint64_t> echelon_words(std::span<const BitVec> vectors) {
  std::vector<std::uint64_t> basis;
  for (const BitVec& v : vectors) {
    std::uint64_t w = v.bits();
    for (std::uint64_t b : basis) {
      if (w & (std::uint64_t{1} << lowest_bit(b))) w ^= b;
    }
    if (w == 0) continue;
    const std::uint64_t pivot = std::uint64_t{1} << lowest_bit(w);
    for (std::uint64_t& b : basis) {
      if (b & pivot) b ^= w;
    }
    basis.push_back(w);
  }
  std::sort(basis.begin(), basis.end(),
            [](std::uint64_t a, std::uint64_t b) { return lowest_bit(a) < lowest_bit(b); });
  return basis;
}

std::uint64_t reduce(std::uint64_t w, const std::vector<BitVec>& basis) {
  for (const BitVec& b : basis) {
    if (w & (std::uint64_t{1} << lowest_bit(b.bits()))) w ^= b.bits();
  }
  return w;
}

// Row-reduces `rows` (each `cols` wide) with an optional right-hand side kept in
// `rhs`. Returns the pivot column of each leading row; rows past the pivot count
// are zero on the coefficient side.
std::vector<int> row_reduce(std::vector<std::uint64_t>& rows, std::vector<bool>* rhs, int cols) {
  std::vector<int> pivots;
  std::size_t next = 0;
  for (int c = 0; c < cols && next < rows.size(); ++c) {
    const std::uint64_t bit = std::uint64_t{1} << c;
    std::size_t found = next;
    while (found < rows.size() && !(rows[found] & bit)) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[found], rows[next]);
    if (rhs) {
      const bool tmp = (*rhs)[found];
      (*rhs)[found] = (*rhs)[next];
      (*rhs)[next] = tmp;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != next && (rows[i] & bit)) {
        rows[i] ^= rows[next];
        if (rhs) (*rhs)[i] = (*rhs)[i] != (*rhs)[next];
      }
    }
    pivots.push_back(c);
    ++next;
  }
  return pivots;
}

std::vector<std::uint64_t> row_words(const GF2Matrix& m) {
  std::vector<std::uint64_t> rows;
  rows.reserve(static_cast<std::size_t>(m.rows()));
  for (const BitVec& r : m.row_vectors()) rows.push_back(r.bits());
  return rows;
}

}  // namespace

GF2Matrix::GF2Matrix(int cols, std::vector<BitVec> rows) : cols_(cols), rows_(std::move(rows)) {
  if (cols < 0 || cols > kMaxBits) throw std::invalid_argument("GF2Matrix: column count out of range");
  for (const BitVec& r : rows_) {
    if (r.size() != cols) throw std::invalid_argument("GF2Matrix: ragged rows");
  }
}

GF2Matrix GF2Matrix::identity(int n) {
  std::vector<BitVec> rows;
  for (int i = 0; i < n; ++i) rows.push_back(BitVec::unit(n, i));
  return {n, std::move(rows)};
}

GF2Matrix GF2Matrix::zero(int rows, int cols) { return {cols, std::vector<BitVec>(static_cast<std::size_t>(rows), BitVec(cols))}; }

GF2Matrix GF2Matrix::from_strings(std::span<const std::string_view> rows) {
  std::vector<BitVec> parsed;
  for (std::string_view r : rows) parsed.push_back(BitVec::parse(r));
  const int cols = parsed.empty() ? 0 : parsed.front().size();
  return {cols, std::move(parsed)};
}

BitVec GF2Matrix::apply(const BitVec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("GF2Matrix::apply: dimension mismatch");
  BitVec y(rows());
  for (int i = 0; i < rows(); ++i) {
    if (dot(rows_[static_cast<std::size_t>(i)], x)) y.set(i, true);
  }
  return y;
}

int rank(const GF2Matrix& m) {
  auto rows = row_words(m);
  return static_cast<int>(row_reduce(rows, nullptr, m.cols()).size());
}

std::optional<BitVec> solve(const GF2Matrix& m, const BitVec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length must equal row count");
  auto rows = row_words(m);
  std::vector<bool> rhs(rows.size());
  for (int i = 0; i < m.rows(); ++i) rhs[static_cast<std::size_t>(i)] = b.get(i);
  const auto pivots = row_reduce(rows, &rhs, m.cols());
  for (std::size_t i = pivots.size(); i < rows.size(); ++i) {
    if (rhs[i]) return std::nullopt;
  }
  BitVec x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (rhs[i]) x.set(pivots[i], true);
  }
  return x;
}

std::vector<BitVec> nullspace(const GF2Matrix& m) {
  auto rows = row_words(m);
  const auto pivots = row_reduce(rows, nullptr, m.cols());
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<BitVec> out;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    BitVec v = BitVec::unit(m.cols(), f);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (rows[i] & (std::uint64_t{1} << f)) v.set(pivots[i], true);
    }
    out.push_back(v);
  }
  return out;
}

std::vector<BitVec> echelon_basis(std::span<const BitVec> vectors) {
  std::vector<BitVec> out;
  if (vectors.empty()) return out;
  const int n = vectors.front().size();
  for (std::uint64_t w : echelon_words(vectors)) out.emplace_back(n, w);
  return out;
}

AffineSubspace::AffineSubspace(BitVec offset, std::span<const BitVec> directions) : offset_(offset) {
  check_dim(offset.size(), "AffineSubspace");
  for (const BitVec& d : directions) {
    if (d.size() != offset.size()) throw std::invalid_argument("AffineSubspace: direction length mismatch");
  }
  basis_ = echelon_basis(directions);
  if (basis_.size() != directions.size()) {
    throw std::invalid_argument("AffineSubspace: directions are linearly dependent");
  }
  offset_ = BitVec(offset.size(), reduce(offset.bits(), basis_));
}

AffineSubspace AffineSubspace::full(int n) {
  check_dim(n, "AffineSubspace::full");
  std::vector<BitVec> basis;
  for (int i = 0; i < n; ++i) basis.push_back(BitVec::unit(n, i));
  return linear(n, basis);
}

bool AffineSubspace::contains(const BitVec& x) const {
  if (x.size() != ambient_dim()) throw std::invalid_argument("membership: dimension mismatch");
  return reduce((x ^ offset_).bits(), basis_) == 0;
}

std::optional<BitVec> AffineSubspace::coordinates(const BitVec& x) const {
  if (!contains(x)) return std::nullopt;
  const std::uint64_t d = (x ^ offset_).bits();
  BitVec y(dim());
  for (int i = 0; i < dim(); ++i) {
    if (d & (std::uint64_t{1} << lowest_bit(basis_[static_cast<std::size_t>(i)].bits()))) y.set(i, true);
  }
  return y;
}

std::vector<std::pair<BitVec, bool>> AffineSubspace::constraints() const {
  std::vector<std::pair<BitVec, bool>> out;
  for (const BitVec& a : nullspace(GF2Matrix(ambient_dim(), basis_))) out.emplace_back(a, dot(a, offset_));
  return out;
}

std::optional<AffineSubspace> affine_span(std::span<const BitVec> points) {
  if (points.empty()) return std::nullopt;
  const BitVec& base = points.front();
  std::vector<BitVec> diffs;
  diffs.reserve(points.size());
  for (const BitVec& p : points) diffs.push_back(p ^ base);
  return AffineSubspace(base, echelon_basis(diffs));
}

std::optional<AffineSubspace> intersect(const AffineSubspace& v1, const AffineSubspace& v2) {
  const int n = v1.ambient_dim();
  if (v2.ambient_dim() != n) throw std::invalid_argument("intersect: ambient dimension mismatch");

  // Solve B1 a + B2 b = o1 + o2 for one common point.
  const int d1 = v1.dim();
  const int cols = d1 + v2.dim();
  std::vector<BitVec> rows(static_cast<std::size_t>(n), BitVec(cols));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < d1; ++i) rows[static_cast<std::size_t>(j)].set(i, v1.basis()[static_cast<std::size_t>(i)].get(j));
    for (int i = 0; i < v2.dim(); ++i) rows[static_cast<std::size_t>(j)].set(d1 + i, v2.basis()[static_cast<std::size_t>(i)].get(j));
  }
  const auto sol = solve(GF2Matrix(cols, std::move(rows)), v1.offset() ^ v2.offset());
  if (!sol) return std::nullopt;
  BitVec point = v1.offset();
  for (int i = 0; i < d1; ++i) {
    if (sol->get(i)) point ^= v1.basis()[static_cast<std::size_t>(i)];
  }

  // span(B1) ∩ span(B2) is the common kernel of both annihilators.
  auto constraints = nullspace(GF2Matrix(n, v1.basis()));
  for (const BitVec& a : nullspace(GF2Matrix(n, v2.basis()))) constraints.push_back(a);
  return AffineSubspace(point, nullspace(GF2Matrix(n, std::move(constraints))));
}

std::vector<BitVec> enumerate_points(const AffineSubspace& v) {
  if (v.dim() > kMaxDim) throw std::invalid_argument("enumerate_points: dimension exceeds memory guard");
  std::vector<BitVec> points;
  points.reserve(v.size());
  points.push_back(v.offset());
  for (const BitVec& b : v.basis()) {
    const std::size_t half = points.size();
    for (std::size_t c = 0; c < half; ++c) points.push_back(points[c] ^ b);
  }
  return points;
}

AffineSubspace random_subspace(int n, int r, Rng& rng) {
  check_dim(n, "random_subspace");
  if (r < 0 || r > n) throw std::invalid_argument("random_subspace: need 0 <= r <= n");
  std::vector<BitVec> chosen;
  std::vector<BitVec> echelon;
  while (static_cast<int>(chosen.size()) < r) {
    const BitVec v(n, rng());
    if (reduce(v.bits(), echelon) == 0) continue;
    chosen.push_back(v);
    echelon = echelon_basis(chosen);
  }
  return AffineSubspace::linear(n, chosen);
}

AffineSubspace random_affine_subspace(int n, int r, Rng& rng) {
  const AffineSubspace lin = random_subspace(n, r, rng);
  return AffineSubspace(BitVec(n, rng()), lin.basis());
}

GF2Matrix random_invertible_map(int n, Rng& rng) {
  if (n < 1 || n > kMaxBits) throw std::invalid_argument("random_invertible_map: need n >= 1");
  while (true) {
    std::vector<BitVec> rows;
    for (int i = 0; i < n; ++i) rows.emplace_back(n, rng());
    GF2Matrix m(n, std::move(rows));
    if (rank(m) == n) return m;
  }
}

std::pair<AffineSubspace, AffineSubspace> sample_dno_pair(int n, Rng& rng) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("sample_dno_pair: n must be even and >= 2");
  check_dim(n, "sample_dno_pair");
  while (true) {
    AffineSubspace v1 = random_affine_subspace(n, n / 2, rng);
    AffineSubspace v2 = random_affine_subspace(n, n / 2, rng);
    const auto common = intersect(v1, v2);
    if (common && common->dim() == 0) return {std::move(v1), std::move(v2)};
  }
}

std::uint64_t gaussian_binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  // Row-by-row Pascal recursion G(n, r) = G(n-1, r-1) + 2^r G(n-1, r).
  std::vector<std::uint64_t> prev{1};
  for (int m = 1; m <= n; ++m) {
    std::vector<std::uint64_t> cur(static_cast<std::size_t>(m) + 1, 0);
    for (int j = 0; j <= m; ++j) {
      std::uint64_t left = j > 0 ? prev[static_cast<std::size_t>(j - 1)] : 0;
      std::uint64_t right = 0;
      if (j < m) {
        if (j >= 64 || __builtin_mul_overflow(prev[static_cast<std::size_t>(j)], std::uint64_t{1} << j, &right)) {
          throw std::overflow_error("gaussian_binomial: result exceeds 64 bits");
        }
      }
      if (__builtin_add_overflow(left, right, &cur[static_cast<std::size_t>(j)])) {
        throw std::overflow_error("gaussian_binomial: result exceeds 64 bits");
      }
    }
    prev = std::move(cur);
  }
  return prev[static_cast<std::size_t>(r)];
}

std::vector<AffineSubspace> enumerate_linear_subspaces(int n, int r) {
  check_dim(n, "enumerate_linear_subspaces");
  if (r < 0 || r > n) throw std::invalid_argument("enumerate_linear_subspaces: need 0 <= r <= n");
  std::vector<AffineSubspace> out;
  out.reserve(gaussian_binomial(n, r));

  // Walk every pivot set; each basis vector may carry any bits above its pivot
  // that are not themselves pivots.
  for (std::uint64_t pivot_mask = 0; pivot_mask < (std::uint64_t{1} << n); ++pivot_mask) {
    if (std::popcount(pivot_mask) != r) continue;
    std::vector<int> pivots;
    for (int i = 0; i < n; ++i) {
      if (pivot_mask & (std::uint64_t{1} << i)) pivots.push_back(i);
    }
    std::vector<std::vector<int>> free_bits(pivots.size());
    int total_free = 0;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      for (int c = pivots[i] + 1; c < n; ++c) {
        if (!(pivot_mask & (std::uint64_t{1} << c))) free_bits[i].push_back(c);
      }
      total_free += static_cast<int>(free_bits[i].size());
    }
    for (std::uint64_t fill = 0; fill < (std::uint64_t{1} << total_free); ++fill) {
      std::vector<BitVec> basis;
      int used = 0;
      for (std::size_t i = 0; i < pivots.size(); ++i) {
        std::uint64_t w = std::uint64_t{1} << pivots[i];
        for (int c : free_bits[i]) {
          if (fill & (std::uint64_t{1} << used)) w |= std::uint64_t{1} << c;
          ++used;
        }
        basis.emplace_back(n, w);
      }
      out.push_back(AffineSubspace::linear(n, basis));
    }
  }
  return out;
}

}  // namespace sparsebool
