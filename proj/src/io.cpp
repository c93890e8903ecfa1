#include "sparsebool/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sparsebool {

namespace {

std::string next_line(std::istream& in, const char* what) {
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return line;
  }
  throw std::invalid_argument(std::string("unexpected end of input while reading ") + what);
}

int parse_field(const std::string& token, const std::string& key) {
  if (token.rfind(key + "=", 0) != 0) throw std::invalid_argument("expected '" + key + "=<int>', got '" + token + "'");
  return std::stoi(token.substr(key.size() + 1));
}

std::vector<Rational> read_values(std::istream& in, int n, const char* what) {
  if (n < 0 || n > kMaxDim) throw std::invalid_argument("dimension out of range in header");
  std::vector<Rational> values;
  values.reserve(std::size_t{1} << n);
  for (std::size_t i = 0; i < (std::size_t{1} << n); ++i) values.push_back(parse_rational(next_line(in, what)));
  std::string extra;
  while (std::getline(in, extra)) {
    if (!extra.empty() && extra != "\r") throw std::invalid_argument(std::string("trailing data after ") + what);
  }
  return values;
}

void write_values(std::ostream& out, const detail::ScaledArray& a) {
  for (std::size_t i = 0; i < a.size(); ++i) out << format_rational(a.value(i)) << '\n';
}

}  // namespace

void write_truth_table(std::ostream& out, const TruthTable& f) {
  out << "n=" << f.n() << '\n';
  write_values(out, f);
}

TruthTable read_truth_table(std::istream& in) {
  std::istringstream header(next_line(in, "truth table header"));
  std::string token;
  header >> token;
  const int n = parse_field(token, "n");
  if (header >> token) throw std::invalid_argument("unexpected header field '" + token + "' in truth table");
  const auto values = read_values(in, n, "truth table");
  return {n, values};
}

void write_spectrum(std::ostream& out, const Spectrum& s) {
  out << "n=" << s.n() << " scaled=2^n\n";
  write_values(out, s);
}

Spectrum read_spectrum(std::istream& in) {
  std::istringstream header(next_line(in, "spectrum header"));
  std::string n_token;
  std::string scaled_token;
  header >> n_token >> scaled_token;
  const int n = parse_field(n_token, "n");
  if (scaled_token != "scaled=2^n") throw std::invalid_argument("spectrum header must carry 'scaled=2^n'");
  const auto values = read_values(in, n, "spectrum");
  return {n, values};
}

void write_subspace(std::ostream& out, const AffineSubspace& v) {
  out << "n=" << v.ambient_dim() << " dim=" << v.dim() << '\n';
  out << "offset=" << v.offset().to_string() << '\n';
  for (const BitVec& b : v.basis()) out << b.to_string() << '\n';
}

AffineSubspace read_subspace(std::istream& in) {
  std::istringstream header(next_line(in, "subspace header"));
  std::string n_token;
  std::string dim_token;
  header >> n_token >> dim_token;
  const int n = parse_field(n_token, "n");
  const int dim = parse_field(dim_token, "dim");
  const std::string offset_line = next_line(in, "subspace offset");
  if (offset_line.rfind("offset=", 0) != 0) throw std::invalid_argument("expected 'offset=<bits>'");
  const BitVec offset = BitVec::parse(offset_line.substr(7));
  if (offset.size() != n) throw std::invalid_argument("offset length differs from n");
  std::vector<BitVec> basis;
  for (int i = 0; i < dim; ++i) basis.push_back(BitVec::parse(next_line(in, "subspace basis")));
  return {offset, basis};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << contents;
    if (!out.flush()) throw std::runtime_error("write failed for '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace sparsebool
