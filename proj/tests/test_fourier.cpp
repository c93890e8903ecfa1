#include <doctest.h>

#include <array>

#include "oracles.hpp"
#include "sparsebool/fourier.hpp"
#include "sparsebool/zoo.hpp"

using namespace sparsebool;

namespace {

std::vector<Rational> spectrum_values(const Spectrum& s) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < s.size(); ++i) out.push_back(s.coefficient(i));
  return out;
}

TruthTable eq1(int n) { return double_and(n); }

TruthTable random_rational_table(int n, Rng& rng) {
  std::uniform_int_distribution<std::int64_t> num(-20, 20);
  std::uniform_int_distribution<std::int64_t> den(1, 12);
  std::vector<Rational> v;
  for (std::size_t i = 0; i < (std::size_t{1} << n); ++i) v.emplace_back(num(rng), den(rng));
  return {n, v};
}

}  // namespace

TEST_CASE("rational text") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(format_rational(Rational(-3, 2)) == "-3/2");
  CHECK(format_rational(Rational(4)) == "4");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
  CHECK_THROWS_AS(make_rational(static_cast<__int128>(1) << 70, 1), std::overflow_error);
  CHECK(make_rational(static_cast<__int128>(1) << 70, static_cast<__int128>(1) << 68) == Rational(4));
}

TEST_CASE("table storage normalizes the common denominator") {
  const std::array<Rational, 2> v{Rational(1, 2), Rational(3, 2)};
  const TruthTable f(1, v);
  CHECK(f.denominator() == 2);
  CHECK(f[1] == Rational(3, 2));
  const TruthTable g(1, {2, 6}, 4);
  CHECK(f == g);
  CHECK(TruthTable(2, {0, 0, 0, 0}, 5) == TruthTable(2));
  CHECK_THROWS(TruthTable(2, {1, 2, 3}));
  CHECK_THROWS(TruthTable(1, {1, 2}, 0));
}

TEST_CASE("character") {
  CHECK(character(BitVec(3), BitVec::parse("101")) == 1);
  CHECK(character(BitVec::parse("1"), BitVec::parse("1")) == -1);
  CHECK(character(BitVec::parse("110"), BitVec::parse("011")) == -1);
}

TEST_CASE("wht examples") {
  for (int n = 0; n <= 5; ++n) {
    const Spectrum zero = wht(TruthTable(n));
    CHECK(sparsity(zero) == 0);
    const Spectrum one = wht(TruthTable::constant(n, Rational(1)));
    CHECK(one.scaled(0) == Rational(std::int64_t{1} << n));
    CHECK(sparsity(one) == 1);
  }
  const Spectrum s = wht(TruthTable(1, {0, 1}));
  CHECK(s.scaled(0) == Rational(1));
  CHECK(s.scaled(1) == Rational(-1));
  CHECK(s.coefficient(0) == Rational(1, 2));
  CHECK(s.coefficient(1) == Rational(-1, 2));
}

TEST_CASE("wht agrees with the definition") {
  Rng rng(31);
  for (int n = 0; n <= 7; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      const TruthTable f = n % 2 ? random_rational_table(n, rng) : oracle::random_integer_table(n, -9, 9, rng);
      CHECK(spectrum_values(wht(f)) == oracle::fourier(f));
    }
  }
}

TEST_CASE("inverse_wht") {
  for (int n = 0; n <= 4; ++n) {
    CHECK(inverse_wht(Spectrum(n, std::vector<std::int64_t>(std::size_t{1} << n, 0))) == TruthTable(n));
    std::vector<std::int64_t> delta(std::size_t{1} << n, 0);
    delta[0] = std::int64_t{1} << n;
    CHECK(inverse_wht(Spectrum(n, delta)) == TruthTable::constant(n, Rational(1)));
  }
  Rng rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(uniform_below(rng, 7));
    const TruthTable f = oracle::random_integer_table(n, -50, 50, rng);
    CHECK(inverse_wht(wht(f)) == f);
  }
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(uniform_below(rng, 9));
    const TruthTable f = random_rational_table(n, rng);
    CHECK(inverse_wht(wht(f)) == f);
  }
  // Synthesis from an arbitrary spectrum matches the definition too.
  const TruthTable g = random_rational_table(4, rng);
  const auto coeffs = oracle::fourier(g);
  const auto back = oracle::synthesize(coeffs);
  for (std::size_t x = 0; x < g.size(); ++x) CHECK(back[x] == g[x]);
}

TEST_CASE("butterfly overflow is reported") {
  std::vector<std::int64_t> big(4, std::numeric_limits<std::int64_t>::max() / 2);
  CHECK_THROWS_AS(walsh_hadamard_inplace(big), std::overflow_error);
}

TEST_CASE("sparsity, support and norms") {
  for (int n = 0; n <= 4; ++n) {
    const TruthTable z(n);
    CHECK(sparsity(z) == 0);
    CHECK(support_size(z) == 0);
    CHECK(spectral_norm(wht(z)) == Rational(0));
    CHECK(l2_spectrum(wht(z)) == Rational(0));
  }
  Rng rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    const AffineSubspace v = random_affine_subspace(4, 2, rng);
    const TruthTable f = affine_indicator(v);
    CHECK(sparsity(f) == 4);
    CHECK(support_size(f) == 4);
    CHECK(spectral_norm(wht(f)) == Rational(1));
  }
  const TruthTable e = eq1(2);
  CHECK(e == TruthTable(2, {0, 1, 1, 2}));
  CHECK(sparsity(e) == 3);
  CHECK(support_size(e) == 3);
  CHECK(oracle::sparsity(e) == 3);

  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(uniform_below(rng, 7));
    const TruthTable f = random_rational_table(n, rng);
    const auto c = oracle::fourier(f);
    Rational l1(0);
    Rational l2(0);
    for (const Rational& r : c) {
      l1 += r < 0 ? -r : r;
      l2 += r * r;
    }
    CHECK(spectral_norm(wht(f)) == l1);
    CHECK(l2_spectrum(wht(f)) == l2);
    CHECK(sparsity(f) == oracle::nonzero(c));
  }
}

TEST_CASE("parseval residual is exactly zero") {
  CHECK(parseval_residual(TruthTable(3)) == Rational(0));
  CHECK(parseval_residual(TruthTable::constant(3, Rational(1))) == Rational(0));
  Rng rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(uniform_below(rng, 7));
    const TruthTable f = trial % 2 ? random_rational_table(n, rng) : oracle::random_integer_table(n, -30, 30, rng);
    CHECK(parseval_residual(f) == Rational(0));
    // Both sides by brute force.
    Rational lhs(0);
    for (std::size_t x = 0; x < f.size(); ++x) lhs += f[x] * f[x];
    lhs /= static_cast<std::int64_t>(f.size());
    Rational rhs(0);
    for (const Rational& r : oracle::fourier(f)) rhs += r * r;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("dist") {
  Rng rng(35);
  const TruthTable f = oracle::random_integer_table(5, -3, 3, rng);
  CHECK(dist(f, f) == 0);
  CHECK(dist(TruthTable(4), TruthTable::constant(4, Rational(1))) == 16);
  for (int trial = 0; trial < 10; ++trial) {
    const AffineSubspace v = random_affine_subspace(6, static_cast<int>(uniform_below(rng, 7)), rng);
    CHECK(dist(affine_indicator(v), TruthTable(6)) == v.size());
  }
  const std::array<Rational, 2> a{Rational(1, 2), Rational(1)};
  const std::array<Rational, 2> b{Rational(1, 3), Rational(1)};
  CHECK(dist(TruthTable(1, a), TruthTable(1, b)) == 1);
  CHECK_THROWS(dist(TruthTable(2), TruthTable(3)));
}

TEST_CASE("booleanity predicates") {
  CHECK(non_boolean_count(TruthTable::constant(4, Rational(1))) == 0);
  CHECK(is_boolean(TruthTable::constant(4, Rational(1))));
  CHECK(non_boolean_count(eq1(2)) == 1);
  CHECK(non_boolean_count(eq1(8)) == 1);
  Rng rng(36);
  const AffineSubspace v = random_affine_subspace(6, 4, rng);
  CHECK(non_boolean_count(Rational(2) * affine_indicator(v)) == 16);
  const std::array<Rational, 2> half{Rational(1, 2), Rational(1)};
  CHECK(non_boolean_count(TruthTable(1, half)) == 1);
}

TEST_CASE("uncertainty product") {
  for (int n = 0; n <= 5; ++n) {
    CHECK(uncertainty_product(TruthTable::constant(n, Rational(1))) == (std::uint64_t{1} << n));
    std::vector<std::int64_t> delta(std::size_t{1} << n, 0);
    delta[0] = 1;
    const TruthTable d(n, delta);
    CHECK(uncertainty_product(d) == (std::uint64_t{1} << n));
    const Spectrum s = wht(d);
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(s.coefficient(i) == Rational(1, std::int64_t{1} << n));
  }
  Rng rng(37);
  const AffineSubspace v = random_affine_subspace(4, 2, rng);
  CHECK(uncertainty_product(affine_indicator(v)) == 16);
  CHECK_THROWS_AS(uncertainty_product(TruthTable(3)), std::invalid_argument);

  // Every nonzero Boolean table on 3 variables.
  for (std::int64_t bits = 1; bits < 256; ++bits) {
    std::vector<std::int64_t> v(8);
    for (int x = 0; x < 8; ++x) v[static_cast<std::size_t>(x)] = (bits >> x) & 1;
    const TruthTable f(3, v);
    CHECK(uncertainty_product(f) >= 8);
    CHECK(uncertainty_product(f) == support_size(f) * oracle::sparsity(f));
  }
}

TEST_CASE("restrict") {
  Rng rng(38);
  const TruthTable f = oracle::random_integer_table(5, -4, 4, rng);
  std::vector<BitVec> standard;
  for (int i = 0; i < 5; ++i) standard.push_back(BitVec::unit(5, i));
  CHECK(restrict(f, BitVec(5), standard) == f);

  // Follows the basis in the order given, not a canonical one.
  const std::array swapped{BitVec::unit(2, 1), BitVec::unit(2, 0)};
  const TruthTable g(2, {0, 1, 2, 3});
  CHECK(restrict(g, BitVec(2), swapped) == TruthTable(2, {0, 2, 1, 3}));

  for (int trial = 0; trial < 30; ++trial) {
    const TruthTable b = oracle::random_boolean_table(6, rng);
    const AffineSubspace v = random_affine_subspace(6, static_cast<int>(uniform_below(rng, 7)), rng);
    CHECK(is_boolean(restrict(b, v)));
  }

  const TruthTable e = eq1(4);
  const BitVec all_ones = BitVec::parse("1111");
  for (int trial = 0; trial < 20; ++trial) {
    BitVec other(4, rng());
    if (other.is_zero() || other == all_ones) continue;
    const std::array dirs{all_ones, other};
    const AffineSubspace v = AffineSubspace::linear(4, dirs);
    CHECK(non_boolean_count(restrict(e, v)) >= 1);
  }

  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 8));
    const TruthTable h = oracle::random_integer_table(n, -2, 2, rng);
    const AffineSubspace v = random_affine_subspace(n, static_cast<int>(uniform_below(rng, n + 1)), rng);
    const TruthTable r = restrict(h, v);
    CHECK(sparsity(r) <= sparsity(h));
    const auto pts = enumerate_points(v);
    for (std::size_t y = 0; y < pts.size(); ++y) CHECK(r[y] == h(pts[y]));
  }
}

TEST_CASE("compose_affine") {
  Rng rng(39);
  const TruthTable f = oracle::random_integer_table(4, -3, 3, rng);
  CHECK(compose_affine(f, GF2Matrix::identity(4), BitVec(4)) == f);
  CHECK_THROWS_AS(compose_affine(f, GF2Matrix::zero(4, 4), BitVec(4)), std::invalid_argument);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 6));
    const TruthTable h = oracle::random_integer_table(n, -2, 2, rng);
    const GF2Matrix m = random_invertible_map(n, rng);
    const BitVec shift(n, rng());
    const TruthTable g = compose_affine(h, m, shift);
    CHECK(sparsity(g) == sparsity(h));
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) CHECK(g(BitVec(n, x)) == h(m.apply(BitVec(n, x)) ^ shift));
  }
  for (int trial = 0; trial < 10; ++trial) {
    const GF2Matrix m = random_invertible_map(6, rng);
    CHECK(non_boolean_count(compose_affine(eq1(6), m, BitVec(6, rng()))) == 1);
  }
}

TEST_CASE("table arithmetic") {
  const TruthTable a(2, {1, 2, 3, 4});
  const TruthTable b(2, {1, 1, 1, 1});
  CHECK(a - b == TruthTable(2, {0, 1, 2, 3}));
  CHECK(a + b == TruthTable(2, {2, 3, 4, 5}));
  CHECK(Rational(1, 2) * a == TruthTable(2, {1, 2, 3, 4}, 2));
  CHECK(wht(a + b) == Spectrum(2, std::vector<Rational>{wht(a).scaled(0) + wht(b).scaled(0), wht(a).scaled(1), wht(a).scaled(2), wht(a).scaled(3)}));
}
