#include "cli.hpp"

#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sparsebool/experiment.hpp"
#include "sparsebool/io.hpp"
#include "sparsebool/zoo.hpp"

namespace sparsebool::cli {

namespace {

using nlohmann::json;

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file_atomic(path, text);
  }
}

// Options that land in an experiment config only when given on the command line.
struct ConfigBuilder {
  CLI::App* app;
  std::map<std::string, std::string> string_values;
  std::map<std::string, long long> int_values;
  std::map<std::string, std::uint64_t> seed_value;
  std::map<std::string, bool> flag_values;

  void string_option(const std::string& flag, const std::string& key, const std::string& help, bool required = false) {
    auto* opt = app->add_option(flag, string_values[key], help);
    if (required) opt->required();
  }
  void int_option(const std::string& flag, const std::string& key, const std::string& help, bool required = false) {
    auto* opt = app->add_option(flag, int_values[key], help);
    if (required) opt->required();
  }
  void flag_option(const std::string& flag, const std::string& key, const std::string& help) {
    app->add_flag(flag, flag_values[key], help);
  }
  void seed_option() { app->add_option("--seed", seed_value["seed"], "master seed (u64)")->required(); }

  json build(const std::string& kind) const {
    json cfg;
    cfg["experiment"] = kind;
    for (const auto& [key, value] : string_values) {
      if (app->count(flag_of(key)) > 0) cfg[key] = value;
    }
    for (const auto& [key, value] : int_values) {
      if (app->count(flag_of(key)) > 0) cfg[key] = value;
    }
    for (const auto& [key, value] : seed_value) cfg[key] = value;
    for (const auto& [key, value] : flag_values) {
      if (value) cfg[key] = true;
    }
    return cfg;
  }

  static std::string flag_of(const std::string& key) {
    std::string flag = "--" + key;
    for (char& c : flag) {
      if (c == '_') c = '-';
    }
    return flag;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fourier analysis of Boolean functions: transforms, sparsification, list decoding, learning, testing"};
  app.require_subcommand(1);
  std::string out_path;

  // wht
  auto* wht_cmd = app.add_subcommand("wht", "Walsh-Hadamard transform of a truth table (or inverse of a spectrum)");
  std::string wht_input;
  bool inverse = false;
  wht_cmd->add_option("--input", wht_input, "truth table file, zoo spec, or spectrum file with --inverse")->required();
  wht_cmd->add_flag("--inverse", inverse, "read a spectrum and write its truth table");
  wht_cmd->add_option("--out", out_path, "output file (stdout if omitted)");

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "Write a zoo function as a truth table");
  ZooSpec zoo;
  std::string zoo_c = "1";
  gen_cmd->add_option("--family", zoo.family, "const, affine, scaled-indicator, double-and, dno, gt-yes, gt-no")->required();
  gen_cmd->add_option("--n", zoo.n, "number of variables")->required();
  gen_cmd->add_option("--k", zoo.k, "sparsity parameter (gt-yes, gt-no)");
  gen_cmd->add_option("--codim", zoo.codim, "codimension (affine, scaled-indicator)");
  gen_cmd->add_option("--c", zoo_c, "value (const, scaled-indicator), rational");
  gen_cmd->add_option("--seed", zoo.seed, "seed for randomized families");
  gen_cmd->add_option("--out", out_path, "output file (stdout if omitted)");

  auto* sparsify_cmd = app.add_subcommand("sparsify", "Sample sparse approximants and measure bad fractions");
  ConfigBuilder sparsify{sparsify_cmd};
  sparsify.string_option("--input", "input", "truth table file or zoo spec", true);
  sparsify.string_option("--eps", "eps", "accuracy, rational", true);
  sparsify.string_option("--delta", "delta", "failure fraction, rational", true);
  sparsify.int_option("--size", "size", "approximant size (default: Chernoff size)");
  sparsify.int_option("--trials", "trials", "number of trials", true);
  sparsify.seed_option();
  sparsify_cmd->add_option("--out", out_path, "CSV output (stdout if omitted)");

  auto* listdecode_cmd = app.add_subcommand("listdecode", "Count k-sparse Boolean functions near a center");
  ConfigBuilder listdecode{listdecode_cmd};
  listdecode.int_option("--n", "n", "number of variables", true);
  listdecode.int_option("--k", "k", "sparsity", true);
  listdecode.int_option("--d", "d", "largest distance", true);
  listdecode.string_option("--center", "center", "truth table file, zoo spec, or 'zero'");
  listdecode.string_option("--class", "class", "exhaustive or affine:CODIM");
  listdecode.flag_option("--long", "long", "allow the exhaustive class at n = 5");
  listdecode_cmd->add_option("--out", out_path, "CSV output (stdout if omitted)");

  auto* learn_cmd = app.add_subcommand("learn", "Success rate of exact learning from q samples");
  ConfigBuilder learn{learn_cmd};
  learn.int_option("--n", "n", "number of variables", true);
  learn.int_option("--k", "k", "sparsity", true);
  learn.string_option("--class", "class", "exhaustive or affine:CODIM");
  learn.string_option("--q-grid", "q_grid", "a:b:step", true);
  learn.int_option("--trials", "trials", "number of trials", true);
  learn.seed_option();
  learn_cmd->add_option("--out", out_path, "CSV output (stdout if omitted)");

  auto* test_cmd = app.add_subcommand("test", "Run a Booleanity tester");
  ConfigBuilder tester{test_cmd};
  tester.string_option("--input", "input", "truth table file or zoo spec", true);
  tester.int_option("--k", "k", "sparsity", true);
  tester.string_option("--mode", "mode", "naive or subspace");
  tester.string_option("--consistency", "consistency", "exact or certificate");
  tester.string_option("--c", "c", "query budget constant, rational");
  tester.int_option("--trials", "trials", "number of trials", true);
  tester.seed_option();
  test_cmd->add_option("--out", out_path, "CSV output (stdout if omitted)");

  auto* experiment_cmd = app.add_subcommand("experiment", "Run a JSON experiment config");
  std::string config_path;
  experiment_cmd->add_option("--config", config_path, "JSON config file")->required();
  experiment_cmd->add_option("--out", out_path, "CSV output (overrides the config's \"out\")");

  std::vector<const char*> argv{"sparsebool"};
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (wht_cmd->parsed()) {
      // The summary line goes to stderr when the payload itself goes to stdout.
      std::ostream& summary = out_path.empty() ? err : out;
      std::ostringstream text;
      if (inverse) {
        std::istringstream in(read_file(wht_input));
        const TruthTable f = inverse_wht(read_spectrum(in));
        write_truth_table(text, f);
        summary << "support=" << support_size(f) << '\n';
      } else {
        const Spectrum s = wht(load_function(wht_input));
        write_spectrum(text, s);
        summary << "sparsity=" << sparsity(s) << '\n';
      }
      emit(out_path, text.str(), out);
    } else if (gen_cmd->parsed()) {
      try {
        zoo.c = parse_rational(zoo_c);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--c: ") + e.what());
      }
      std::ostringstream text;
      write_truth_table(text, generate(zoo));
      emit(out_path, text.str(), out);
    } else if (experiment_cmd->parsed()) {
      json cfg;
      try {
        cfg = json::parse(read_file(config_path));
      } catch (const json::parse_error& e) {
        throw UsageError("--config: " + std::string(e.what()));
      }
      if (out_path.empty() && cfg.is_object() && cfg.contains("out")) out_path = cfg.at("out").get<std::string>();
      emit(out_path, run_experiment(cfg), out);
    } else {
      const std::pair<CLI::App*, const ConfigBuilder*> builders[] = {
          {sparsify_cmd, &sparsify}, {listdecode_cmd, &listdecode}, {learn_cmd, &learn}, {test_cmd, &tester}};
      for (const auto& [cmd, builder] : builders) {
        if (cmd->parsed()) emit(out_path, run_experiment(builder->build(cmd->get_name())), out);
      }
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace sparsebool::cli
