#include "sparsebool/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <set>
#include <sstream>

#include "sparsebool/booleanity.hpp"
#include "sparsebool/enumerator.hpp"
#include "sparsebool/io.hpp"
#include "sparsebool/learner.hpp"
#include "sparsebool/rng.hpp"
#include "sparsebool/sparsifier.hpp"
#include "sparsebool/zoo.hpp"

namespace sparsebool {

using nlohmann::json;

namespace {

struct KindSpec {
  std::set<std::string> required;
  std::set<std::string> optional;
  bool randomized = true;
};

const std::map<std::string, KindSpec>& kinds() {
  static const std::map<std::string, KindSpec> table = {
      {"sparsify", {{"input", "eps", "delta", "trials"}, {"size"}, true}},
      {"listdecode", {{"n", "k", "d"}, {"center", "class", "long"}, false}},
      {"learn", {{"n", "k", "q_grid", "trials"}, {"class"}, true}},
      {"test", {{"input", "k", "trials"}, {"mode", "consistency", "c"}, true}},
      {"restriction", {{"input", "k", "r_grid", "trials"}, {"batches"}, true}},
      {"lower-bound", {{"grid", "trials"}, {}, true}},
      {"event-e", {{"n", "q_grid", "trials"}, {}, true}},
      {"tester-budget", {{"input", "k", "c_grid", "trials"}, {"mode", "consistency"}, true}},
      {"bands", {{"n", "k", "q_grid", "trials"}, {"class"}, true}},
  };
  return table;
}

const json& field(const json& cfg, const std::string& key) {
  if (!cfg.contains(key)) throw UsageError("config: missing '" + key + "'");
  return cfg.at(key);
}

int get_int(const json& cfg, const std::string& key) {
  const json& v = field(cfg, key);
  if (!v.is_number_integer()) throw UsageError("config: '" + key + "' must be an integer");
  return v.get<int>();
}

std::uint64_t get_seed(const json& cfg) {
  const json& v = field(cfg, "seed");
  if (!v.is_number_integer()) throw UsageError("config: 'seed' must be an unsigned integer");
  return v.get<std::uint64_t>();
}

std::string get_string(const json& cfg, const std::string& key, const std::string& fallback) {
  if (!cfg.contains(key)) return fallback;
  const json& v = cfg.at(key);
  if (!v.is_string()) throw UsageError("config: '" + key + "' must be a string");
  return v.get<std::string>();
}

Rational to_rational(const json& v, const std::string& key) {
  try {
    if (v.is_number_integer()) return {v.get<std::int64_t>()};
    if (v.is_string()) return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw UsageError("config: '" + key + "': " + e.what());
  }
  throw UsageError("config: '" + key + "' must be an integer or a \"p/q\" string");
}

Rational get_rational(const json& cfg, const std::string& key, std::optional<Rational> fallback = std::nullopt) {
  if (!cfg.contains(key)) {
    if (fallback) return *fallback;
    throw UsageError("config: missing '" + key + "'");
  }
  return to_rational(cfg.at(key), key);
}

std::vector<int> get_grid(const json& cfg, const std::string& key) {
  const json& v = field(cfg, key);
  if (v.is_string()) return parse_grid(v.get<std::string>());
  if (v.is_array()) {
    std::vector<int> out;
    for (const json& e : v) {
      if (!e.is_number_integer()) throw UsageError("config: '" + key + "' entries must be integers");
      out.push_back(e.get<int>());
    }
    return out;
  }
  throw UsageError("config: '" + key + "' must be \"a:b:step\" or an integer array");
}

std::string fmt(double v) {
  if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

double as_double(const Rational& r) { return boost::rational_cast<double>(r); }

CandidateClass make_class(const std::string& spec, int n, int k, bool allow_long = false) {
  if (spec == "exhaustive") return CandidateClass::exhaustive(n, k, allow_long);
  if (spec.rfind("affine:", 0) == 0) return CandidateClass::affine_indicators(n, std::stoi(spec.substr(7)));
  throw UsageError("class must be 'exhaustive' or 'affine:CODIM', got '" + spec + "'");
}

TesterConfig tester_config(const json& cfg, int k, const Rational& c) {
  TesterConfig tc;
  tc.k = k;
  tc.constant_c = c;
  const std::string consistency = get_string(cfg, "consistency", "certificate");
  if (consistency == "exact") {
    tc.mode = ConsistencyMode::exact;
  } else if (consistency != "certificate") {
    throw UsageError("consistency must be 'exact' or 'certificate'");
  }
  return tc;
}

bool use_naive(const json& cfg) {
  const std::string mode = get_string(cfg, "mode", "subspace");
  if (mode != "naive" && mode != "subspace") throw UsageError("mode must be 'naive' or 'subspace'");
  return mode == "naive";
}

class Csv {
 public:
  Csv(std::string header, std::string hash) : hash_(std::move(hash)) { out_ << header << ",config_hash\n"; }

  template <typename... Cells>
  void row(const Cells&... cells) {
    bool first = true;
    ((out_ << (first ? "" : ",") << cells, first = false), ...);
    out_ << ',' << hash_ << '\n';
  }

  [[nodiscard]] std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
  std::string hash_;
};

std::string run_sparsify(const json& cfg, Csv csv) {
  const TruthTable f = load_function(get_string(cfg, "input", ""));
  const Rational eps = get_rational(cfg, "eps");
  const Rational delta = get_rational(cfg, "delta");
  const Spectrum s = wht(f);
  const int size = cfg.contains("size") ? get_int(cfg, "size") : chernoff_size(spectral_norm(s), eps, delta);
  const std::uint64_t seed = get_seed(cfg);
  for (int t = 0; t < get_int(cfg, "trials"); ++t) {
    Rng rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    const SparseApproximant approx = sample_approximant(s, size, rng);
    csv.row(t, size, fmt(as_double(measure_bad_fraction(f, approx, eps))));
  }
  return csv.str();
}

std::string run_listdecode(const json& cfg, Csv csv) {
  const int n = get_int(cfg, "n");
  const int k = get_int(cfg, "k");
  const int d = get_int(cfg, "d");
  if (d < 0) throw UsageError("d must be non-negative");
  const std::string center = get_string(cfg, "center", "zero");
  const TruthTable f = center == "zero" ? TruthTable(n) : load_function(center);
  if (f.n() != n) throw std::invalid_argument("listdecode: center has " + std::to_string(f.n()) + " variables, expected " + std::to_string(n));
  const bool allow_long = cfg.contains("long") && cfg.at("long").get<bool>();
  const CandidateClass cls = make_class(get_string(cfg, "class", "exhaustive"), n, k, allow_long);
  std::vector<std::size_t> at(f.size() + 1, 0);
  const auto distances = distances_to(f, cls);
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (cls.sparsity(i) <= static_cast<std::size_t>(k)) ++at[distances[i]];
  }
  const double log_k = k > 1 ? std::log2(static_cast<double>(k)) : 0.0;
  std::size_t running = 0;
  for (std::size_t dd = 0; dd <= static_cast<std::size_t>(d) && dd < at.size(); ++dd) {
    running += at[dd];
    const double log_count = running == 0 ? -INFINITY : std::log2(static_cast<double>(running));
    csv.row(dd, running, fmt(log_count), fmt(n * static_cast<double>(dd) * k * log_k / static_cast<double>(f.size())));
  }
  return csv.str();
}

std::string run_learn(const json& cfg, Csv csv) {
  const int n = get_int(cfg, "n");
  const int k = get_int(cfg, "k");
  const CandidateClass cls = make_class(get_string(cfg, "class", "exhaustive"), n, k);
  const auto grid = get_grid(cfg, "q_grid");
  for (const CurvePoint& p : sample_complexity_curve(cls, grid, get_int(cfg, "trials"), get_seed(cfg))) {
    csv.row(p.q, p.successes, p.trials, fmt(p.rate()));
  }
  return csv.str();
}

std::string run_test(const json& cfg, Csv csv) {
  const TruthTable f = load_function(get_string(cfg, "input", ""));
  const int k = get_int(cfg, "k");
  const bool naive = use_naive(cfg);
  const TesterConfig tc = tester_config(cfg, k, get_rational(cfg, "c", Rational(2)));
  const std::uint64_t seed = get_seed(cfg);
  for (int t = 0; t < get_int(cfg, "trials"); ++t) {
    Rng rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    const TesterVerdict v = naive ? naive_tester(f, k, rng) : subspace_tester(f, tc, rng);
    csv.row(t, v.accept ? "accept" : "reject", v.queries_used, v.certificate ? v.certificate->to_string() : "");
  }
  return csv.str();
}

std::string run_restriction(const json& cfg, Csv csv) {
  const TruthTable f = load_function(get_string(cfg, "input", ""));
  const int k = get_int(cfg, "k");
  const int trials = get_int(cfg, "trials");
  const int batches = cfg.contains("batches") ? get_int(cfg, "batches") : 1;
  const std::uint64_t seed = get_seed(cfg);
  for (int r : get_grid(cfg, "r_grid")) {
    for (int b = 0; b < batches; ++b) {
      const RestrictionEstimate est = restriction_experiment(f, r, trials, derive_seed(seed, static_cast<std::uint64_t>(b)));
      csv.row(r, b, est.trials, est.non_boolean, fmt(est.estimate()), fmt(restriction_bound(k, r)));
    }
  }
  return csv.str();
}

std::string run_lower_bound(const json& cfg, Csv csv) {
  const json& grid = field(cfg, "grid");
  if (!grid.is_array()) throw UsageError("config: 'grid' must be an array of [n, k] pairs");
  const int trials = get_int(cfg, "trials");
  const std::uint64_t seed = get_seed(cfg);
  for (const json& cell : grid) {
    if (!cell.is_array() || cell.size() != 2) throw UsageError("config: 'grid' entries must be [n, k]");
    const LowerBoundResult r = lower_bound_experiment(cell[0].get<int>(), cell[1].get<int>(), trials, seed);
    for (const CurvePoint& p : r.curve) csv.row(r.n, r.k, r.class_size, p.q, p.successes, p.trials, fmt(p.rate()), r.q50);
  }
  return csv.str();
}

std::string run_event_e(const json& cfg, Csv csv) {
  const int n = get_int(cfg, "n");
  const int trials = get_int(cfg, "trials");
  const std::uint64_t seed = get_seed(cfg);
  for (int q : get_grid(cfg, "q_grid")) {
    Rng rng(derive_seed(mix64(seed), static_cast<std::uint64_t>(q)));
    const auto queries = random_points(n, static_cast<std::size_t>(q), rng);
    const EventEEstimate est = event_e_estimator(n, queries, trials, seed);
    csv.row(n, q, est.trials, est.holds, fmt(est.estimate()));
  }
  return csv.str();
}

std::string run_tester_budget(const json& cfg, Csv csv) {
  const TruthTable f = load_function(get_string(cfg, "input", ""));
  const int k = get_int(cfg, "k");
  const bool naive = use_naive(cfg);
  const int trials = get_int(cfg, "trials");
  const std::uint64_t seed = get_seed(cfg);
  const json& cs = field(cfg, "c_grid");
  if (!cs.is_array()) throw UsageError("config: 'c_grid' must be an array");
  for (const json& cj : cs) {
    const Rational c = to_rational(cj, "c_grid");
    const TesterConfig tc = tester_config(cfg, k, c);
    std::size_t rejections = 0;
    std::size_t queries = 0;
    for (int t = 0; t < trials; ++t) {
      Rng rng = trial_rng(seed, static_cast<std::uint64_t>(t));
      const TesterVerdict v = naive ? naive_tester(f, k, rng) : subspace_tester(f, tc, rng);
      rejections += !v.accept;
      queries = v.queries_used;
    }
    csv.row(format_rational(c), queries, trials, rejections,
            fmt(trials == 0 ? 0.0 : static_cast<double>(rejections) / trials));
  }
  return csv.str();
}

std::string run_bands(const json& cfg, Csv csv) {
  const int n = get_int(cfg, "n");
  const int k = get_int(cfg, "k");
  const CandidateClass cls = make_class(get_string(cfg, "class", "exhaustive"), n, k);
  const auto grid = get_grid(cfg, "q_grid");
  for (const BandRow& r : band_survivors(cls, grid, get_int(cfg, "trials"), get_seed(cfg))) {
    csv.row(r.band, r.q, fmt(r.mean_members), fmt(r.mean_survivors), fmt(r.union_bound));
  }
  return csv.str();
}

}  // namespace

std::vector<int> parse_grid(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  try {
    while (std::getline(ss, item, ':')) parts.push_back(std::stoi(item));
  } catch (const std::exception&) {
    throw UsageError("grid must be 'a:b:step', got '" + text + "'");
  }
  if (parts.size() == 1) return parts;
  if (parts.size() != 3 || parts[2] <= 0 || parts[1] < parts[0]) {
    throw UsageError("grid must be 'a:b:step' with step > 0 and a <= b, got '" + text + "'");
  }
  std::vector<int> out;
  for (int v = parts[0]; v <= parts[1]; v += parts[2]) out.push_back(v);
  return out;
}

TruthTable load_function(const std::string& input) {
  if (input.empty()) throw UsageError("missing input function");
  if (std::filesystem::exists(input)) {
    std::istringstream in(read_file(input));
    return read_truth_table(in);
  }
  return generate(parse_zoo_spec(input));
}

void validate_config(const json& config) {
  if (!config.is_object()) throw UsageError("config must be a JSON object");
  const std::string kind = get_string(config, "experiment", "");
  const auto it = kinds().find(kind);
  if (it == kinds().end()) throw UsageError("config: unknown or missing 'experiment' kind '" + kind + "'");
  const KindSpec& spec = it->second;
  for (const auto& [key, value] : config.items()) {
    if (key == "experiment" || key == "out" || (key == "seed" && spec.randomized)) continue;
    if (!spec.required.count(key) && !spec.optional.count(key)) {
      throw UsageError("config: unknown field '" + key + "' for experiment '" + kind + "'");
    }
  }
  for (const std::string& key : spec.required) {
    if (!config.contains(key)) throw UsageError("config: missing '" + key + "' for experiment '" + kind + "'");
  }
  if (spec.randomized && !config.contains("seed")) throw UsageError("config: 'seed' is mandatory for '" + kind + "'");
}

std::string config_hash(const json& config) {
  json copy = config;
  copy.erase("out");
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : copy.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string run_experiment(const json& config) {
  validate_config(config);
  const std::string kind = config.at("experiment").get<std::string>();
  const std::string hash = config_hash(config);
  if (kind == "sparsify") return run_sparsify(config, Csv("trial,size,bad_fraction", hash));
  if (kind == "listdecode") return run_listdecode(config, Csv("d,count,log2_count,exponent_scale", hash));
  if (kind == "learn") return run_learn(config, Csv("q,successes,trials,success_rate", hash));
  if (kind == "test") return run_test(config, Csv("trial,verdict,queries_used,certificate_point", hash));
  if (kind == "restriction") return run_restriction(config, Csv("r,batch,trials,non_boolean,estimate,bound", hash));
  if (kind == "lower-bound") {
    return run_lower_bound(config, Csv("n,k,class_size,q,successes,trials,success_rate,q50", hash));
  }
  if (kind == "event-e") return run_event_e(config, Csv("n,q,trials,holds,estimate", hash));
  if (kind == "tester-budget") return run_tester_budget(config, Csv("c,queries,trials,rejections,rejection_rate", hash));
  return run_bands(config, Csv("band,q,mean_members,mean_survivors,union_bound", hash));
}

}  // namespace sparsebool
