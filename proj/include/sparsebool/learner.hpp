#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "sparsebool/enumerator.hpp"
#include "sparsebool/fourier.hpp"
#include "sparsebool/rng.hpp"

namespace sparsebool {

struct Sample {
  BitVec x;
  Rational y;
};

/// q uniform points, with replacement, and their values.
std::vector<Sample> draw_samples(const TruthTable& f, int q, Rng& rng);

struct LearnOutcome {
  enum class Kind { unique, ambiguous, inconsistent };

  Kind kind = Kind::inconsistent;
  std::size_t count = 0;             // surviving members
  std::vector<std::size_t> members;  // up to kMaxListed surviving class indices
  std::optional<TruthTable> learned;  // set iff kind == unique

  static constexpr std::size_t kMaxListed = 8;
};

/// Keeps the class members that agree with every sample.
LearnOutcome eliminate(std::span<const Sample> samples, const CandidateClass& cls);

/// Sentinel for a trial whose hidden function is never isolated.
inline constexpr std::size_t kNeverIsolated = std::numeric_limits<std::size_t>::max();

/// For one hidden member and one stream of uniform samples, the number of
/// samples after which every other member has been contradicted. Elimination
/// over the first q samples returns unique(hidden) exactly when q >= the
/// returned value. Samples are drawn lazily until isolation or `cap`.
std::size_t isolation_time(const CandidateClass& cls, std::size_t hidden, Rng& rng, std::size_t cap = kNeverIsolated);

struct CurvePoint {
  int q = 0;
  std::size_t successes = 0;
  std::size_t trials = 0;
  [[nodiscard]] double rate() const { return trials == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(trials); }
};

/// Per-trial isolation times, trial t seeded with derive_seed(seed, t); the
/// hidden function is uniform over the class.
std::vector<std::size_t> isolation_times(const CandidateClass& cls, int trials, std::uint64_t seed, std::size_t cap = kNeverIsolated);

/// Success rate (unique(hidden)) at each q. All q in one trial share the
/// sample stream, i.e. q samples are the first q of that trial's stream.
std::vector<CurvePoint> sample_complexity_curve(const CandidateClass& cls, std::span<const int> q_grid, int trials,
                                                std::uint64_t seed);

/// Smallest q at which at least half of the trials succeed.
std::size_t q50(std::vector<std::size_t> times);

struct LowerBoundResult {
  int n = 0;
  int k = 0;
  std::size_t class_size = 0;
  std::size_t q50 = 0;
  std::vector<CurvePoint> curve;
};

/// Learning over affine_indicators(n, log2 k). The curve covers q = 0 .. the
/// largest isolation time observed.
LowerBoundResult lower_bound_experiment(int n, int k, int trials, std::uint64_t seed);

struct BandRow {
  int band = 0;  // l with dist in [2^{n-l}, 2^{n-l+1})
  int q = 0;
  double mean_members = 0.0;
  double mean_survivors = 0.0;
  double union_bound = 0.0;  // mean_members * (1 - 2^-l)^q
};

/// Survivors per distance band after q samples, averaged over trials.
std::vector<BandRow> band_survivors(const CandidateClass& cls, std::span<const int> q_grid, int trials, std::uint64_t seed);

}  // namespace sparsebool
