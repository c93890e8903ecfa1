#include "sparsebool/learner.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

#include "sparsebool/zoo.hpp"

namespace sparsebool {

std::vector<Sample> draw_samples(const TruthTable& f, int q, Rng& rng) {
  if (q < 0) throw std::invalid_argument("draw_samples: q must be non-negative");
  std::vector<Sample> out;
  out.reserve(static_cast<std::size_t>(q));
  const std::uint64_t mask = BitVec::mask(f.n());
  for (int i = 0; i < q; ++i) {
    const BitVec x(f.n(), rng() & mask);
    out.push_back({x, f(x)});
  }
  return out;
}

LearnOutcome eliminate(std::span<const Sample> samples, const CandidateClass& cls) {
  LearnOutcome out;
  std::vector<std::pair<std::size_t, bool>> points;
  points.reserve(samples.size());
  for (const Sample& s : samples) {
    if (s.x.size() != cls.n()) throw std::invalid_argument("eliminate: sample dimension differs from class");
    if (s.y != 0 && s.y != 1) return out;  // no Boolean member can agree
    points.emplace_back(static_cast<std::size_t>(s.x.bits()), s.y == 1);
  }
  for (std::size_t i = 0; i < cls.size(); ++i) {
    const BoolTable& g = cls.member(i);
    const bool agrees = std::all_of(points.begin(), points.end(), [&](const auto& p) { return g.get(p.first) == p.second; });
    if (!agrees) continue;
    ++out.count;
    if (out.members.size() < LearnOutcome::kMaxListed) out.members.push_back(i);
  }
  if (out.count == 0) {
    out.kind = LearnOutcome::Kind::inconsistent;
  } else if (out.count == 1) {
    out.kind = LearnOutcome::Kind::unique;
    out.learned = cls.member(out.members.front()).to_table();
  } else {
    out.kind = LearnOutcome::Kind::ambiguous;
  }
  return out;
}

std::size_t isolation_time(const CandidateClass& cls, std::size_t hidden, Rng& rng, std::size_t cap) {
  const BoolTable& h = cls.member(hidden);
  const std::uint64_t mask = BitVec::mask(cls.n());
  std::vector<std::size_t> xs;
  std::size_t worst = 0;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (i == hidden) continue;
    const BoolTable& g = cls.member(i);
    if (hamming(g, h) == 0) return kNeverIsolated;
    std::size_t j = 0;
    while (true) {
      if (j == xs.size()) {
        if (xs.size() >= cap) return kNeverIsolated;
        xs.push_back(static_cast<std::size_t>(rng() & mask));
      }
      if (g.get(xs[j]) != h.get(xs[j])) break;
      ++j;
    }
    worst = std::max(worst, j + 1);
  }
  return worst;
}

std::vector<std::size_t> isolation_times(const CandidateClass& cls, int trials, std::uint64_t seed, std::size_t cap) {
  if (cls.size() == 0) throw std::invalid_argument("isolation_times: empty class");
  std::vector<std::size_t> times;
  times.reserve(static_cast<std::size_t>(std::max(trials, 0)));
  for (int t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    const std::size_t hidden = uniform_below(rng, cls.size());
    times.push_back(isolation_time(cls, hidden, rng, cap));
  }
  return times;
}

std::vector<CurvePoint> sample_complexity_curve(const CandidateClass& cls, std::span<const int> q_grid, int trials,
                                                std::uint64_t seed) {
  int q_max = 0;
  for (int q : q_grid) q_max = std::max(q_max, q);
  const auto times = isolation_times(cls, trials, seed, static_cast<std::size_t>(q_max));
  std::vector<CurvePoint> curve;
  for (int q : q_grid) {
    CurvePoint p{q, 0, times.size()};
    for (std::size_t t : times) p.successes += t <= static_cast<std::size_t>(q);
    curve.push_back(p);
  }
  return curve;
}

std::size_t q50(std::vector<std::size_t> times) {
  if (times.empty()) throw std::invalid_argument("q50: no trials");
  std::sort(times.begin(), times.end());
  // Need 2 * #{t <= q} >= trials.
  return times[(times.size() + 1) / 2 - 1];
}

LowerBoundResult lower_bound_experiment(int n, int k, int trials, std::uint64_t seed) {
  const int codim = exact_log2(static_cast<std::uint64_t>(k));
  if (codim > n || n > 12) throw std::invalid_argument("lower_bound_experiment: need log2(k) <= n <= 12");
  const CandidateClass cls = CandidateClass::affine_indicators(n, codim);
  const auto times = isolation_times(cls, trials, seed);
  LowerBoundResult result{n, k, cls.size(), q50(times), {}};
  std::size_t horizon = 0;
  for (std::size_t t : times) {
    if (t != kNeverIsolated) horizon = std::max(horizon, t);
  }
  for (std::size_t q = 0; q <= horizon; ++q) {
    CurvePoint p{static_cast<int>(q), 0, times.size()};
    for (std::size_t t : times) p.successes += t <= q;
    result.curve.push_back(p);
  }
  return result;
}

std::vector<BandRow> band_survivors(const CandidateClass& cls, std::span<const int> q_grid, int trials, std::uint64_t seed) {
  int q_max = 0;
  for (int q : q_grid) q_max = std::max(q_max, q);
  const int n = cls.n();
  // band -> (member total, survivors per grid point)
  std::map<int, std::pair<double, std::vector<double>>> acc;
  const std::uint64_t mask = BitVec::mask(n);
  for (int t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    const std::size_t hidden = uniform_below(rng, cls.size());
    std::vector<std::size_t> xs(static_cast<std::size_t>(q_max));
    for (auto& x : xs) x = static_cast<std::size_t>(rng() & mask);
    const BoolTable& h = cls.member(hidden);
    for (std::size_t i = 0; i < cls.size(); ++i) {
      const std::size_t d = hamming(cls.member(i), h);
      if (d == 0) continue;
      const int band = n - (static_cast<int>(std::bit_width(d)) - 1);
      auto& [members, survivors] = acc[band];
      if (survivors.empty()) survivors.assign(q_grid.size(), 0.0);
      members += 1;
      std::size_t first = 0;
      while (first < xs.size() && cls.member(i).get(xs[first]) == h.get(xs[first])) ++first;
      for (std::size_t g = 0; g < q_grid.size(); ++g) {
        if (first >= static_cast<std::size_t>(q_grid[g])) survivors[g] += 1;
      }
    }
  }
  std::vector<BandRow> rows;
  for (const auto& [band, data] : acc) {
    const double mean_members = data.first / trials;
    for (std::size_t g = 0; g < q_grid.size(); ++g) {
      rows.push_back({band, q_grid[g], mean_members, data.second[g] / trials,
                      mean_members * std::pow(1.0 - std::ldexp(1.0, -band), q_grid[g])});
    }
  }
  return rows;
}

}  // namespace sparsebool
