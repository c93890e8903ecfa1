#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "sparsebool/learner.hpp"
#include "sparsebool/zoo.hpp"

using namespace sparsebool;

namespace {

// Smallest prefix of the trial's sample stream on which eliminate isolates the
// hidden member, found by rerunning eliminate on every prefix.
std::size_t brute_isolation(const CandidateClass& cls, std::uint64_t seed, int t, std::size_t horizon) {
  Rng rng = trial_rng(seed, static_cast<std::uint64_t>(t));
  const std::size_t hidden = uniform_below(rng, cls.size());
  const TruthTable f = cls.member(hidden).to_table();
  const auto samples = draw_samples(f, static_cast<int>(horizon), rng);
  for (std::size_t q = 0; q <= horizon; ++q) {
    const LearnOutcome o = eliminate(std::span(samples).first(q), cls);
    if (o.kind == LearnOutcome::Kind::unique && *o.learned == f) return q;
  }
  return kNeverIsolated;
}

}  // namespace

TEST_CASE("draw_samples") {
  Rng rng(71);
  CHECK(draw_samples(double_and(4), 0, rng).empty());
  const TruthTable f = double_and(4);
  for (const Sample& s : draw_samples(f, 500, rng)) CHECK(s.y == f(s.x));
  std::vector<std::size_t> counts(8, 0);
  const int draws = 100000;
  for (const Sample& s : draw_samples(TruthTable(3), draws, rng)) ++counts[s.x.bits()];
  CHECK(oracle::chi_squared(counts, draws) < oracle::chi_squared_critical(7));
  CHECK_THROWS_AS(draw_samples(f, -1, rng), std::invalid_argument);
}

TEST_CASE("eliminate") {
  Rng rng(72);
  const TruthTable f = gt_yes(4, 4, rng);
  const std::array single{f};
  const LearnOutcome one = eliminate(draw_samples(f, 3, rng), CandidateClass::explicit_list(single));
  CHECK(one.kind == LearnOutcome::Kind::unique);
  CHECK(*one.learned == f);

  // x1 on two variables, every point observed.
  const TruthTable x1(2, {0, 1, 0, 1});
  std::vector<Sample> all;
  for (std::uint64_t x = 0; x < 4; ++x) all.push_back({BitVec(2, x), x1[x]});
  const LearnOutcome full = eliminate(all, CandidateClass::exhaustive(2, 2));
  CHECK(full.kind == LearnOutcome::Kind::unique);
  CHECK(*full.learned == x1);

  // x1 AND x2 is 4-sparse, so it is missing from the 2-sparse class.
  const TruthTable conj(2, {0, 0, 0, 1});
  std::vector<Sample> cover;
  for (std::uint64_t x = 0; x < 4; ++x) cover.push_back({BitVec(2, x), conj[x]});
  CHECK(eliminate(cover, CandidateClass::exhaustive(2, 2)).kind == LearnOutcome::Kind::inconsistent);

  const std::vector<Sample> none;
  const LearnOutcome empty = eliminate(none, CandidateClass::exhaustive(3, 2));
  CHECK(empty.kind == LearnOutcome::Kind::ambiguous);
  CHECK(empty.count == 16);
  CHECK(empty.members.size() == LearnOutcome::kMaxListed);

  const std::vector<Sample> two{{BitVec(2, 3), Rational(2)}};
  CHECK(eliminate(two, CandidateClass::exhaustive(2, 2)).kind == LearnOutcome::Kind::inconsistent);
  const std::vector<Sample> half{{BitVec(2, 0), Rational(1, 2)}};
  CHECK(eliminate(half, CandidateClass::exhaustive(2, 2)).kind == LearnOutcome::Kind::inconsistent);
}

TEST_CASE("the hidden function always survives") {
  const CandidateClass cls = CandidateClass::exhaustive(3, 4);
  Rng rng(73);
  for (int t = 0; t < 200; ++t) {
    const std::size_t hidden = uniform_below(rng, cls.size());
    const TruthTable f = cls.member(hidden).to_table();
    const LearnOutcome o = eliminate(draw_samples(f, static_cast<int>(uniform_below(rng, 20)), rng), cls);
    CHECK(o.kind != LearnOutcome::Kind::inconsistent);
    if (o.count <= LearnOutcome::kMaxListed) CHECK(std::find(o.members.begin(), o.members.end(), hidden) != o.members.end());
  }
}

TEST_CASE("isolation time agrees with elimination on prefixes") {
  for (const CandidateClass& cls : {CandidateClass::exhaustive(3, 2), CandidateClass::exhaustive(3, 4),
                                    CandidateClass::affine_indicators(4, 2)}) {
    const auto times = isolation_times(cls, 150, 74);
    for (int t = 0; t < 150; ++t) CHECK(times[t] == brute_isolation(cls, 74, t, 80));
  }
  // Duplicate members can never be told apart.
  const std::array dup{TruthTable(2), TruthTable(2)};
  Rng rng(75);
  CHECK(isolation_time(CandidateClass::explicit_list(dup), 0, rng) == kNeverIsolated);
  // A cap cuts the stream short.
  const auto capped = isolation_times(CandidateClass::exhaustive(3, 2), 100, 74, 4);
  const auto free = isolation_times(CandidateClass::exhaustive(3, 2), 100, 74);
  for (std::size_t t = 0; t < 100; ++t) CHECK(capped[t] == (free[t] <= 4 ? free[t] : kNeverIsolated));
}

TEST_CASE("sample complexity curve") {
  const CandidateClass cls = CandidateClass::exhaustive(3, 2);
  const std::vector<int> grid{0, 2, 4, 8, 12, 16, 24, 32, 48};
  const auto curve = sample_complexity_curve(cls, grid, 500, 76);
  REQUIRE(curve.size() == grid.size());
  CHECK(curve[0].successes == 0);
  for (std::size_t i = 1; i < curve.size(); ++i) CHECK(curve[i].successes >= curve[i - 1].successes);
  CHECK(curve.back().rate() >= 0.95);
  CHECK(curve.back().trials == 500);

  // Brute force over the same streams.
  for (std::size_t g = 0; g < grid.size(); g += 3) {
    std::size_t ok = 0;
    for (int t = 0; t < 500; ++t) ok += brute_isolation(cls, 76, t, static_cast<std::size_t>(grid[g])) <= static_cast<std::size_t>(grid[g]);
    CHECK(curve[g].successes == ok);
  }

  // Saturation: 64 samples identify the hidden function every time.
  const std::array q64{64};
  CHECK(sample_complexity_curve(cls, q64, 200, 77).front().successes == 200);
}

TEST_CASE("q50") {
  CHECK(q50({5}) == 5);
  CHECK(q50({1, 2, 3, 4}) == 2);
  CHECK(q50({9, 1, 5}) == 5);
  CHECK(q50({3, kNeverIsolated, kNeverIsolated}) == kNeverIsolated);
  CHECK_THROWS_AS(q50({}), std::invalid_argument);
}

TEST_CASE("lower-bound experiment") {
  const LowerBoundResult r = lower_bound_experiment(4, 4, 400, 2024);
  CHECK(r.class_size == 140);
  CHECK(r.q50 == 13);
  CHECK(r.curve.front().successes == 0);
  for (std::size_t q = 1; q < r.curve.size(); ++q) CHECK(r.curve[q].successes >= r.curve[q - 1].successes);
  CHECK(r.curve.back().successes == 400);
  // The 50% point from the curve itself.
  std::size_t first = 0;
  while (2 * r.curve[first].successes < 400) ++first;
  CHECK(first == r.q50);

  CHECK(lower_bound_experiment(6, 2, 400, 2024).q50 == 8);
  CHECK(lower_bound_experiment(6, 4, 400, 2024).q50 == 18);
  CHECK_THROWS_AS(lower_bound_experiment(4, 3, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(lower_bound_experiment(13, 2, 10, 1), std::invalid_argument);
}

TEST_CASE("band survivors") {
  const CandidateClass cls = CandidateClass::exhaustive(3, 2);
  const std::vector<int> grid{0, 4, 16};
  const auto rows = band_survivors(cls, grid, 300, 78);
  REQUIRE_FALSE(rows.empty());
  double total = 0;
  for (const BandRow& row : rows) {
    CHECK(row.band >= 0);
    CHECK(row.band <= 3);
    if (row.q == 0) {
      CHECK(row.mean_survivors == doctest::Approx(row.mean_members));
      total += row.mean_members;
    }
    CHECK(row.mean_survivors <= row.mean_members);
  }
  // Every other member of the class lands in some band.
  CHECK(total == doctest::Approx(15.0));
}
