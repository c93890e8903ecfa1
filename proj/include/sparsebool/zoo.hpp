#pragma once

#include <optional>
#include <string>

#include "sparsebool/fourier.hpp"
#include "sparsebool/gf2.hpp"
#include "sparsebool/rng.hpp"

namespace sparsebool {

/// 1_V.
TruthTable affine_indicator(const AffineSubspace& v);

/// c * 1_V.
TruthTable scaled_indicator(const AffineSubspace& v, const Rational& c);

/// AND(x_1..x_{n/2}) + AND(x_{n/2+1}..x_n). Non-Boolean only at the all-ones point.
TruthTable double_and(int n);

/// Exact sparsity of double_and(n): two AND spectra sharing the empty set.
inline std::size_t double_and_sparsity(int n) { return (std::size_t{2} << (n / 2)) - 1; }

struct DnoSample {
  TruthTable table;
  AffineSubspace v1;
  AffineSubspace v2;
};

/// 1_{V1} + 1_{V2} for a pair from sample_dno_pair, returned with its witnesses.
DnoSample dno_function(int n, Rng& rng);

/// Uniform Boolean junta on the first log2(k) coordinates.
TruthTable gt_yes(int n, int k, Rng& rng);

/// gt_yes with one uniformly chosen junta assignment overridden to 2.
TruthTable gt_no(int n, int k, Rng& rng);

/// log2 of a power of two; throws otherwise.
int exact_log2(std::uint64_t k);

/// A generator call as named on the command line.
struct ZooSpec {
  std::string family;  // const, affine, scaled-indicator, double-and, dno, gt-yes, gt-no
  int n = 0;
  int k = 0;
  int codim = 0;
  Rational c{1};
  std::uint64_t seed = 0;
};

/// Parses "family:key=value,key=value", e.g. "double-and:n=6" or
/// "affine:n=8,codim=2,seed=3".
ZooSpec parse_zoo_spec(const std::string& text);

/// Families drawing randomness take it from Rng(spec.seed).
TruthTable generate(const ZooSpec& spec);

}  // namespace sparsebool
