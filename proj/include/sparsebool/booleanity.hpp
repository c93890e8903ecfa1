#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sparsebool/enumerator.hpp"
#include "sparsebool/fourier.hpp"
#include "sparsebool/gf2.hpp"
#include "sparsebool/learner.hpp"
#include "sparsebool/rng.hpp"

namespace sparsebool {

/// Outcome of one tester run. A certificate, when present, is a queried point
/// where f is not in {0, 1}.
struct TesterVerdict {
  bool accept = true;
  std::optional<BitVec> certificate;
  std::size_t queries_used = 0;
};

enum class ConsistencyMode { exact, certificate };

struct TesterConfig {
  int k = 1;
  Rational constant_c{2};
  ConsistencyMode mode = ConsistencyMode::certificate;
};

/// (k^2 + k + 2) / 2.
std::uint64_t density_parameter(int k);

/// ceil(L ln 3) for L = density_parameter(k).
std::size_t naive_query_count(int k);

/// Queries f on naive_query_count(k) uniform points; rejects on any value
/// outside {0, 1}.
TesterVerdict naive_tester(const TruthTable& f, int k, Rng& rng);

/// min(n, ceil(log2(100 L))).
int subspace_dimension(int n, int k);

/// max(1, ceil(c r k log2 k)) with r = subspace_dimension(n, k).
std::size_t subspace_query_count(int n, const TesterConfig& cfg);

/// Restricts f to a uniform random linear subspace V of dimension
/// subspace_dimension(n, k), parameterised by V's basis, and queries the
/// restriction at uniform points. Certificate mode rejects iff a sampled value
/// is outside {0, 1}. Exact mode (r <= 4 only) rejects iff no k-sparse Boolean
/// function on r variables agrees with the samples.
TesterVerdict subspace_tester(const TruthTable& f, const TesterConfig& cfg, Rng& rng);

/// True iff some member of exhaustive(r, min(k, 2^r)) agrees with every sample.
bool consistent_with_sparse_boolean(std::span<const Sample> samples, int r, int k);

struct RestrictionEstimate {
  std::size_t non_boolean = 0;
  std::size_t trials = 0;
  [[nodiscard]] double estimate() const {
    return trials == 0 ? 0.0 : static_cast<double>(non_boolean) / static_cast<double>(trials);
  }
};

/// Fraction of trials in which f restricted to random_subspace(n, r) is still
/// non-Boolean. Throws for Boolean f.
RestrictionEstimate restriction_experiment(const TruthTable& f, int r, int trials, std::uint64_t seed);

/// 1 - L / 2^r.
double restriction_bound(int k, int r);

struct EventEEstimate {
  std::size_t holds = 0;
  std::size_t trials = 0;
  [[nodiscard]] double estimate() const {
    return trials == 0 ? 0.0 : static_cast<double>(holds) / static_cast<double>(trials);
  }
};

/// W_i = affine span of the query points inside V_i; nullopt if none.
std::optional<AffineSubspace> span_of_hits(std::span<const BitVec> queries, const AffineSubspace& v);

/// Whether the spans of the query points inside V1 and V2 are disjoint
/// (an absent span counts as disjoint).
bool event_e_holds(std::span<const BitVec> queries, const AffineSubspace& v1, const AffineSubspace& v2);

/// Fraction of D_no draws for which event E holds on the fixed query points.
EventEEstimate event_e_estimator(int n, std::span<const BitVec> queries, int trials, std::uint64_t seed);

/// An affine hyperplane V2' of v2 containing w2 and missing the single point
/// of v1 ∩ v2, so that 1_{v1} + 1_{V2'} is Boolean and matches
/// 1_{v1} + 1_{v2} on w2. Throws if |v1 ∩ v2| != 1 or that point lies in w2.
AffineSubspace construct_certificate(const AffineSubspace& v1, const AffineSubspace& v2,
                                     const std::optional<AffineSubspace>& w2);

struct Certificate {
  TruthTable g;
  AffineSubspace kept;    // the subspace left whole
  AffineSubspace shrunk;  // the hyperplane that replaced the other one
};

/// Given event E for the queries, builds the Boolean look-alike g. Shrinks
/// V2 when the common point is outside W2, otherwise V1 (E rules out the
/// point lying in both spans). Throws if E does not hold.
Certificate certificate_for_queries(std::span<const BitVec> queries, const AffineSubspace& v1, const AffineSubspace& v2);

/// q uniform points of F_2^n.
std::vector<BitVec> random_points(int n, std::size_t q, Rng& rng);

}  // namespace sparsebool
