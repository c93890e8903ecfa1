#include "sparsebool/booleanity.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "sparsebool/zoo.hpp"

namespace sparsebool {

std::uint64_t density_parameter(int k) {
  if (k < 1) throw std::invalid_argument("tester: k must be positive");
  const auto kk = static_cast<std::uint64_t>(k);
  return (kk * kk + kk + 2) / 2;
}

std::size_t naive_query_count(int k) {
  return static_cast<std::size_t>(std::ceil(static_cast<double>(density_parameter(k)) * std::log(3.0)));
}

namespace {

std::optional<BitVec> first_non_boolean(const TruthTable& f, std::span<const std::uint64_t> points) {
  for (std::uint64_t x : points) {
    if (!f.is_boolean_at(static_cast<std::size_t>(x))) return BitVec(f.n(), x);
  }
  return std::nullopt;
}

const CandidateClass& cached_exhaustive(int r, int k) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, CandidateClass> cache;
  const std::lock_guard lock(mutex);
  const auto key = std::make_pair(r, k);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, CandidateClass::exhaustive(r, k)).first;
  return it->second;
}

}  // namespace

TesterVerdict naive_tester(const TruthTable& f, int k, Rng& rng) {
  const std::size_t m = naive_query_count(k);
  const std::uint64_t mask = BitVec::mask(f.n());
  std::vector<std::uint64_t> points(m);
  for (auto& x : points) x = rng() & mask;
  TesterVerdict v;
  v.queries_used = m;
  v.certificate = first_non_boolean(f, points);
  v.accept = !v.certificate;
  return v;
}

int subspace_dimension(int n, int k) {
  const std::uint64_t target = 100 * density_parameter(k);
  const int r = static_cast<int>(std::bit_width(target - 1));  // ceil(log2(target))
  return std::min(n, r);
}

std::size_t subspace_query_count(int n, const TesterConfig& cfg) {
  if (cfg.constant_c <= 0) throw std::invalid_argument("tester: constant_c must be positive");
  const int r = subspace_dimension(n, cfg.k);
  const double c = boost::rational_cast<double>(cfg.constant_c);
  const double q = std::ceil(c * r * cfg.k * std::log2(static_cast<double>(cfg.k)));
  return std::max<std::size_t>(1, static_cast<std::size_t>(q));
}

bool consistent_with_sparse_boolean(std::span<const Sample> samples, int r, int k) {
  const int capped = std::min<std::uint64_t>(static_cast<std::uint64_t>(k), std::uint64_t{1} << r);
  return eliminate(samples, cached_exhaustive(r, capped)).kind != LearnOutcome::Kind::inconsistent;
}

TesterVerdict subspace_tester(const TruthTable& f, const TesterConfig& cfg, Rng& rng) {
  const int r = subspace_dimension(f.n(), cfg.k);
  if (cfg.mode == ConsistencyMode::exact && r > 4) {
    throw std::invalid_argument("subspace_tester: exact consistency needs r <= 4, got r = " + std::to_string(r));
  }
  const std::size_t q = subspace_query_count(f.n(), cfg);
  const AffineSubspace v = random_subspace(f.n(), r, rng);
  const std::uint64_t mask = BitVec::mask(r);

  std::vector<std::uint64_t> points(q);
  std::vector<Sample> restricted;
  restricted.reserve(q);
  for (std::size_t i = 0; i < q; ++i) {
    const std::uint64_t y = rng() & mask;
    std::uint64_t x = 0;
    for (int j = 0; j < r; ++j) {
      if ((y >> j) & 1U) x ^= v.basis()[static_cast<std::size_t>(j)].bits();
    }
    points[i] = x;
    restricted.push_back({BitVec(r, y), f.value(static_cast<std::size_t>(x))});
  }

  TesterVerdict verdict;
  verdict.queries_used = q;
  verdict.certificate = first_non_boolean(f, points);
  if (cfg.mode == ConsistencyMode::certificate) {
    verdict.accept = !verdict.certificate;
  } else {
    verdict.accept = consistent_with_sparse_boolean(restricted, r, cfg.k);
  }
  return verdict;
}

RestrictionEstimate restriction_experiment(const TruthTable& f, int r, int trials, std::uint64_t seed) {
  if (is_boolean(f)) throw std::invalid_argument("restriction_experiment: f must be non-Boolean");
  if (r < 0 || r > f.n()) throw std::invalid_argument("restriction_experiment: need 0 <= r <= n");
  RestrictionEstimate est;
  est.trials = static_cast<std::size_t>(trials);
  for (int t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    const AffineSubspace v = random_subspace(f.n(), r, rng);
    est.non_boolean += !is_boolean(restrict(f, v));
  }
  return est;
}

double restriction_bound(int k, int r) {
  return 1.0 - static_cast<double>(density_parameter(k)) / std::ldexp(1.0, r);
}

std::optional<AffineSubspace> span_of_hits(std::span<const BitVec> queries, const AffineSubspace& v) {
  std::vector<BitVec> hits;
  for (const BitVec& a : queries) {
    if (v.contains(a)) hits.push_back(a);
  }
  return affine_span(hits);
}

bool event_e_holds(std::span<const BitVec> queries, const AffineSubspace& v1, const AffineSubspace& v2) {
  const auto w1 = span_of_hits(queries, v1);
  const auto w2 = span_of_hits(queries, v2);
  return !w1 || !w2 || !intersect(*w1, *w2);
}

EventEEstimate event_e_estimator(int n, std::span<const BitVec> queries, int trials, std::uint64_t seed) {
  EventEEstimate est;
  est.trials = static_cast<std::size_t>(trials);
  for (int t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    const auto [v1, v2] = sample_dno_pair(n, rng);
    est.holds += event_e_holds(queries, v1, v2);
  }
  return est;
}

AffineSubspace construct_certificate(const AffineSubspace& v1, const AffineSubspace& v2,
                                     const std::optional<AffineSubspace>& w2) {
  const auto common = intersect(v1, v2);
  if (!common || common->dim() != 0) throw std::invalid_argument("construct_certificate: need |V1 ∩ V2| = 1");
  const BitVec& p = common->offset();
  const int d = v2.dim();
  if (d < 1) throw std::invalid_argument("construct_certificate: V2 must have positive dimension");
  const BitVec yp = *v2.coordinates(p);

  // Work in V2's coordinates y, where V2 = offset + sum y_i basis_i, and cut
  // along {y : <lambda, y> = <lambda, y_w>}.
  BitVec lambda = BitVec::unit(d, 0);
  BitVec yw(d);
  if (w2) {
    if (w2->contains(p)) throw std::invalid_argument("construct_certificate: the common point lies in W2");
    const auto base = v2.coordinates(w2->offset());
    if (!base) throw std::invalid_argument("construct_certificate: W2 is not inside V2");
    yw = *base;
    std::vector<BitVec> directions;
    for (const BitVec& dir : w2->basis()) {
      const auto c = v2.coordinates(w2->offset() ^ dir);
      if (!c) throw std::invalid_argument("construct_certificate: W2 is not inside V2");
      directions.push_back(*c ^ yw);
    }
    // lambda must vanish on W2's directions and separate p from W2.
    bool found = false;
    for (const BitVec& cand : nullspace(GF2Matrix(d, directions))) {
      if (dot(cand, yp ^ yw)) {
        lambda = cand;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("construct_certificate: no separating functional");
  } else if (!yp.get(0)) {
    yw = BitVec::unit(d, 0);
  }

  BitVec offset = v2.offset();
  for (int i = 0; i < d; ++i) {
    if (yw.get(i)) offset ^= v2.basis()[static_cast<std::size_t>(i)];
  }
  std::vector<BitVec> basis;
  for (const BitVec& u : nullspace(GF2Matrix(d, {lambda}))) {
    BitVec dir(v2.ambient_dim());
    for (int i = 0; i < d; ++i) {
      if (u.get(i)) dir ^= v2.basis()[static_cast<std::size_t>(i)];
    }
    basis.push_back(dir);
  }
  return {offset, basis};
}

Certificate certificate_for_queries(std::span<const BitVec> queries, const AffineSubspace& v1, const AffineSubspace& v2) {
  const auto w1 = span_of_hits(queries, v1);
  const auto w2 = span_of_hits(queries, v2);
  if (w1 && w2 && intersect(*w1, *w2)) throw std::invalid_argument("certificate_for_queries: event E does not hold");
  const auto common = intersect(v1, v2);
  if (!common || common->dim() != 0) throw std::invalid_argument("certificate_for_queries: need |V1 ∩ V2| = 1");
  if (!w2 || !w2->contains(common->offset())) {
    AffineSubspace shrunk = construct_certificate(v1, v2, w2);
    return {affine_indicator(v1) + affine_indicator(shrunk), v1, std::move(shrunk)};
  }
  AffineSubspace shrunk = construct_certificate(v2, v1, w1);
  return {affine_indicator(v2) + affine_indicator(shrunk), v2, std::move(shrunk)};
}

std::vector<BitVec> random_points(int n, std::size_t q, Rng& rng) {
  std::vector<BitVec> out;
  out.reserve(q);
  for (std::size_t i = 0; i < q; ++i) out.emplace_back(n, rng());
  return out;
}

}  // namespace sparsebool
