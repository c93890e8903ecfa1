#include <doctest.h>

#include <bit>
#include <cmath>
#include <set>

#include "oracles.hpp"
#include "sparsebool/booleanity.hpp"
#include "sparsebool/zoo.hpp"

using namespace sparsebool;

namespace {

std::vector<TruthTable> boolean_zoo(Rng& rng) {
  std::vector<TruthTable> out;
  for (int n = 1; n <= 8; ++n) {
    out.push_back(TruthTable(n));
    out.push_back(TruthTable::constant(n, Rational(1)));
    out.push_back(affine_indicator(random_affine_subspace(n, n / 2, rng)));
    out.push_back(gt_yes(n, 1 << (n / 2), rng));
  }
  return out;
}

// AND(x1, x2) with the point x3 = 1 (x1 = x2 = 0) raised to 2.
TruthTable exact_mode_fixture() { return {3, {0, 0, 0, 1, 2, 0, 0, 1}}; }

bool is_subset(const AffineSubspace& a, const AffineSubspace& b) {
  if (!b.contains(a.offset())) return false;
  for (const BitVec& d : a.basis()) {
    if (!b.contains(a.offset() ^ d)) return false;
  }
  return true;
}

bool same(const AffineSubspace& a, const AffineSubspace& b) { return a.dim() == b.dim() && is_subset(a, b); }

}  // namespace

TEST_CASE("tester parameters") {
  CHECK(density_parameter(1) == 2);
  CHECK(density_parameter(4) == 11);
  CHECK(density_parameter(16) == 137);
  CHECK(naive_query_count(1) == 3);
  CHECK(naive_query_count(64) == 2287);
  CHECK(subspace_dimension(10, 4) == 10);
  CHECK(subspace_dimension(20, 4) == 11);  // 1100 -> 11 bits
  CHECK(subspace_dimension(6, 16) == 6);
  CHECK(subspace_dimension(3, 2) == 3);
  CHECK(subspace_query_count(6, {16, Rational(2), ConsistencyMode::certificate}) == 768);
  CHECK(subspace_query_count(3, {2, Rational(2), ConsistencyMode::certificate}) == 12);
  CHECK(subspace_query_count(10, {1, Rational(2), ConsistencyMode::certificate}) == 1);
  CHECK(subspace_query_count(6, {16, Rational(1, 2), ConsistencyMode::certificate}) == 192);
  CHECK_THROWS_AS(subspace_query_count(6, {4, Rational(0), ConsistencyMode::certificate}), std::invalid_argument);
  CHECK_THROWS_AS(density_parameter(0), std::invalid_argument);
  CHECK(restriction_bound(4, 7) == doctest::Approx(1.0 - 11.0 / 128));
}

TEST_CASE("testers are one-sided") {
  Rng rng(81);
  for (const TruthTable& f : boolean_zoo(rng)) {
    const int k = static_cast<int>(std::max<std::size_t>(1, sparsity(f)));
    for (std::uint64_t s = 0; s < 100; ++s) {
      Rng a = trial_rng(81, s);
      CHECK(naive_tester(f, k, a).accept);
      Rng b = trial_rng(82, s);
      CHECK(subspace_tester(f, {k, Rational(2), ConsistencyMode::certificate}, b).accept);
      if (subspace_dimension(f.n(), k) <= 4 && s < 20) {
        Rng c = trial_rng(83, s);
        CHECK(subspace_tester(f, {k, Rational(2), ConsistencyMode::exact}, c).accept);
      }
    }
  }
}

TEST_CASE("certificates are genuine") {
  Rng rng(84);
  std::vector<TruthTable> bad{double_and(6), gt_no(8, 4, rng), dno_function(6, rng).table,
                              scaled_indicator(random_affine_subspace(6, 4, rng), Rational(1, 2))};
  for (const TruthTable& f : bad) {
    const int k = static_cast<int>(sparsity(f));
    for (int t = 0; t < 50; ++t) {
      for (const TesterVerdict& v : {naive_tester(f, k, rng), subspace_tester(f, {k, Rational(2), ConsistencyMode::certificate}, rng)}) {
        CHECK(v.accept == !v.certificate.has_value());
        if (v.certificate) CHECK_FALSE(f.is_boolean_at(v.certificate->bits()));
      }
    }
  }
}

TEST_CASE("naive tester matches the binomial closed form") {
  const TruthTable f = double_and(10);
  const int k = 64;
  const std::size_t m = naive_query_count(k);
  const double p = 1.0 - std::pow(1.0 - std::ldexp(1.0, -10), static_cast<double>(m));
  const int trials = 1000;
  int rejected = 0;
  for (int t = 0; t < trials; ++t) {
    Rng rng = trial_rng(85, static_cast<std::uint64_t>(t));
    const TesterVerdict v = naive_tester(f, k, rng);
    CHECK(v.queries_used == m);
    rejected += !v.accept;
  }
  CHECK(oracle::within_sigma(static_cast<double>(rejected) / trials, p, trials));

  Rng rng(86);
  const TruthTable no = gt_no(8, 4, rng);
  int r2 = 0;
  for (int t = 0; t < trials; ++t) r2 += !naive_tester(no, 4, rng).accept;
  CHECK(r2 * 3 >= 2 * trials);
}

TEST_CASE("subspace tester on the hard distribution") {
  const TesterConfig cfg{16, Rational(2), ConsistencyMode::certificate};
  int rejected = 0;
  for (int t = 0; t < 500; ++t) {
    Rng rng = trial_rng(87, static_cast<std::uint64_t>(t));
    const TruthTable f = dno_function(6, rng).table;
    rejected += !subspace_tester(f, cfg, rng).accept;
  }
  // r = n here, so the 768 queries are uniform over 64 points with one bad point.
  const double p = 1.0 - std::pow(63.0 / 64.0, 768.0);
  CHECK(rejected >= 300);
  CHECK(oracle::within_sigma(rejected / 500.0, p, 500, 4.0));
}

TEST_CASE("exact consistency rejects on Boolean samples") {
  const TruthTable f = exact_mode_fixture();
  Rng a(12);
  const TesterVerdict exact = subspace_tester(f, {2, Rational(2), ConsistencyMode::exact}, a);
  Rng b(12);
  const TesterVerdict cert = subspace_tester(f, {2, Rational(2), ConsistencyMode::certificate}, b);
  CHECK(cert.accept);
  CHECK_FALSE(exact.accept);
  CHECK_FALSE(exact.certificate.has_value());
  CHECK(exact.queries_used == 12);

  const TruthTable big = double_and(10);
  Rng c(1);
  CHECK_THROWS_AS(subspace_tester(big, {4, Rational(2), ConsistencyMode::exact}, c), std::invalid_argument);
}

TEST_CASE("consistency with sparse Boolean functions") {
  // x1 XOR x2 observed everywhere: 2-sparse, so consistent.
  std::vector<Sample> parity;
  for (std::uint64_t x = 0; x < 4; ++x) parity.push_back({BitVec(2, x), Rational(std::popcount(x) & 1)});
  CHECK(consistent_with_sparse_boolean(parity, 2, 2));
  std::vector<Sample> conj;
  for (std::uint64_t x = 0; x < 4; ++x) conj.push_back({BitVec(2, x), Rational(x == 3)});
  CHECK_FALSE(consistent_with_sparse_boolean(conj, 2, 2));
  CHECK(consistent_with_sparse_boolean(conj, 2, 4));
  CHECK(consistent_with_sparse_boolean(conj, 2, 100));
}

TEST_CASE("restriction experiment") {
  Rng rng(88);
  CHECK(restriction_experiment(double_and(6), 6, 50, 1).non_boolean == 50);
  CHECK_THROWS_AS(restriction_experiment(TruthTable(4), 2, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(restriction_experiment(double_and(4), 5, 10, 1), std::invalid_argument);

  // V of codimension 2 missing the origin: the restriction to W is non-Boolean
  // iff W meets V, which fails iff W lies in one of the two hyperplanes that
  // contain V - V but avoid V.
  AffineSubspace v = random_affine_subspace(10, 8, rng);
  while (v.contains(BitVec(10))) v = random_affine_subspace(10, 8, rng);
  const TruthTable f = scaled_indicator(v, Rational(2));
  const double miss = static_cast<double>(2 * gaussian_binomial(9, 7) - gaussian_binomial(8, 7)) /
                      static_cast<double>(gaussian_binomial(10, 7));
  const RestrictionEstimate est = restriction_experiment(f, 7, 1000, 89);
  CHECK(oracle::within_sigma(est.estimate(), 1.0 - miss, 1000));
  CHECK(est.estimate() >= restriction_bound(4, 7));

  // Same count at n = 4, r = 2 against brute force over all planes.
  AffineSubspace small = random_affine_subspace(4, 2, rng);
  while (small.contains(BitVec(4))) small = random_affine_subspace(4, 2, rng);
  const auto pts = oracle::point_set(small);
  std::set<std::set<std::uint64_t>> planes;
  for (std::uint64_t a = 1; a < 16; ++a) {
    for (std::uint64_t b = a + 1; b < 16; ++b) planes.insert(oracle::point_set(0, {a, b}));
  }
  std::size_t meet = 0;
  for (const auto& w : planes) {
    bool hit = false;
    for (std::uint64_t x : w) hit = hit || pts.count(x);
    meet += hit;
  }
  CHECK(planes.size() == gaussian_binomial(4, 2));
  const double exact_small = 1.0 - static_cast<double>(2 * gaussian_binomial(3, 2) - gaussian_binomial(2, 2)) / 35.0;
  CHECK(static_cast<double>(meet) / static_cast<double>(planes.size()) == doctest::Approx(exact_small));
}

TEST_CASE("event E") {
  Rng rng(90);
  const std::vector<BitVec> none;
  CHECK(event_e_estimator(10, none, 100, 1).holds == 100);
  const auto [v1, v2] = sample_dno_pair(6, rng);
  const BitVec p = intersect(v1, v2)->offset();
  // Querying the common point puts it in both spans.
  const std::vector<BitVec> at_p{p};
  CHECK_FALSE(event_e_holds(at_p, v1, v2));
  CHECK(span_of_hits(at_p, v1)->dim() == 0);
  const std::vector<BitVec> outside{v1.offset() == p ? v1.offset() ^ v1.basis()[0] : v1.offset()};
  CHECK(event_e_holds(outside, v1, v2));
  CHECK_FALSE(span_of_hits(outside, v2).has_value());

  Rng qrng(91);
  const auto queries = random_points(10, 32, qrng);
  CHECK(event_e_estimator(10, queries, 1000, 92).estimate() >= 0.9);
}

TEST_CASE("certificates from the adversary") {
  const int n = 6;
  int built = 0;
  for (int t = 0; t < 400 && built < 100; ++t) {
    Rng rng = trial_rng(93, static_cast<std::uint64_t>(t));
    const auto [v1, v2] = sample_dno_pair(n, rng);
    const auto queries = random_points(n, 1 + uniform_below(rng, 12), rng);
    if (!event_e_holds(queries, v1, v2)) {
      CHECK_THROWS_AS(certificate_for_queries(queries, v1, v2), std::invalid_argument);
      continue;
    }
    ++built;
    const Certificate c = certificate_for_queries(queries, v1, v2);
    const TruthTable f = affine_indicator(v1) + affine_indicator(v2);
    CHECK(is_boolean(c.g));
    CHECK(sparsity(c.g) <= 3 * 8);
    CHECK(oracle::sparsity(c.g) == sparsity(c.g));
    for (const BitVec& x : queries) CHECK(c.g(x) == f(x));
    CHECK_FALSE(intersect(c.kept, c.shrunk).has_value());
    CHECK(c.shrunk.dim() == n / 2 - 1);
    CHECK(((same(c.kept, v1) && is_subset(c.shrunk, v2)) || (same(c.kept, v2) && is_subset(c.shrunk, v1))));
    // Any tester whose queries are these points sees the same answers, so it accepts g.
    for (const BitVec& x : queries) CHECK(c.g.is_boolean_at(x.bits()));
  }
  CHECK(built == 100);
}

TEST_CASE("construct_certificate") {
  Rng rng(94);
  for (int t = 0; t < 50; ++t) {
    const auto [v1, v2] = sample_dno_pair(6, rng);
    const BitVec p = intersect(v1, v2)->offset();
    const AffineSubspace h = construct_certificate(v1, v2, std::nullopt);
    CHECK(h.dim() == 2);
    CHECK_FALSE(h.contains(p));
    CHECK(is_subset(h, v2));
    CHECK_FALSE(intersect(v1, h).has_value());
    // A point of V2 other than p, as W2.
    BitVec q = v2.offset() == p ? v2.offset() ^ v2.basis()[0] : v2.offset();
    const AffineSubspace w2 = AffineSubspace::point(q);
    const AffineSubspace h2 = construct_certificate(v1, v2, w2);
    CHECK(h2.contains(q));
    CHECK_FALSE(h2.contains(p));
    CHECK_THROWS_AS(construct_certificate(v1, v2, AffineSubspace::point(p)), std::invalid_argument);
  }
  const AffineSubspace a = AffineSubspace::linear(4, std::vector{BitVec::parse("1000"), BitVec::parse("0100")});
  CHECK_THROWS_AS(construct_certificate(a, a, std::nullopt), std::invalid_argument);
}
