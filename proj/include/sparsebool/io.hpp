#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "sparsebool/fourier.hpp"
#include "sparsebool/gf2.hpp"

namespace sparsebool {

// Truth table:  "n=<int>" then 2^n lines, one value "p" or "p/q" each, in index order.
// Spectrum:     "n=<int> scaled=2^n" then the 2^n scaled coefficients 2^n fhat(S).
// Subspace:     "n=<int> dim=<int>", "offset=<bits>", then one basis bitstring per line.
// Bitstrings put x_1 leftmost.

void write_truth_table(std::ostream& out, const TruthTable& f);
TruthTable read_truth_table(std::istream& in);

void write_spectrum(std::ostream& out, const Spectrum& s);
Spectrum read_spectrum(std::istream& in);

void write_subspace(std::ostream& out, const AffineSubspace& v);
AffineSubspace read_subspace(std::istream& in);

/// Reads a whole file; throws std::runtime_error if it cannot be opened.
std::string read_file(const std::filesystem::path& path);

/// Writes to a sibling temporary file, then renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace sparsebool
