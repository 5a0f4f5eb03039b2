#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "submax/bench.hpp"
#include "submax/pipeline.hpp"

namespace {

using namespace submax;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw SchemaError("cannot open output file '" + out_path + "'");
  out << text;
}

Rat parse_eps(const std::string& text) {
  Rat eps;
  try {
    eps = rat_from_string(text);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("--epsilon: ") + e.what());
  }
  if (!(eps > 0 && eps <= 1)) throw SchemaError("--epsilon must be in (0, 1]");
  return eps;
}

std::vector<std::string> fixture_files(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir))
    throw SchemaError("fixtures directory '" + dir + "' does not exist");
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw SchemaError("no .json fixtures under '" + dir + "'");
  return files;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic submodular maximization under a matroid constraint"};
  app.require_subcommand(1);

  std::string instance_path, out_path, eps_text = "1/2", mode_text = "deterministic";
  std::string suite, fixtures_dir = "fixtures";
  uint64_t seed = 0;
  bool paranoid = false, with_opt = false;
  int ff_cap = ExtensionEvaluator::kDefaultFfCap;
  long samples = 100000;

  auto* solve = app.add_subcommand("solve", "Solve an instance end to end");
  solve->add_option("instance", instance_path, "instance JSON file")->required();
  solve->add_option("--epsilon", eps_text, "error parameter, a fraction like 1/2");
  solve->add_option("--mode", mode_text)
      ->check(CLI::IsMember({"deterministic", "sampled-rounding"}));
  solve->add_option("--seed", seed);
  solve->add_flag("--paranoid", paranoid, "recheck invariants after every mutation");
  solve->add_flag("--with-opt", with_opt, "include the brute-force ratio (n <= 14)");
  solve->add_option("--ff-cap", ff_cap, "fractional-coordinate enumeration cap");
  solve->add_option("--samples", samples, "sample count for sampled-rounding");
  solve->add_option("--out", out_path);

  auto* estimate = app.add_subcommand("estimate", "Deterministic value estimate, no rounding");
  estimate->add_option("instance", instance_path)->required();
  estimate->add_option("--epsilon", eps_text);
  estimate->add_flag("--with-opt", with_opt);
  estimate->add_option("--ff-cap", ff_cap);
  estimate->add_option("--out", out_path);

  auto* verify = app.add_subcommand("verify", "Run the invariant checkers (JSONL report)");
  verify->add_option("instance", instance_path, "instance JSON file");
  verify->add_option("--suite", suite)->check(CLI::IsMember({"fixtures"}));
  verify->add_option("--fixtures-dir", fixtures_dir);
  verify->add_option("--seed", seed);
  verify->add_option("--out", out_path);

  std::vector<std::string> families{"coverage-uniform", "cut-partition"};
  std::string n_list_text = "8,16,32,64";
  int trials = 1;
  auto* bench = app.add_subcommand("bench", "Query-count sweep, CSV output");
  bench->add_option("--family", families, "coverage-uniform and/or cut-partition");
  bench->add_option("--n-list", n_list_text, "comma-separated sizes");
  bench->add_option("--epsilon", eps_text);
  bench->add_option("--trials", trials);
  bench->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    SolveOptions opts;
    opts.epsilon = parse_eps(eps_text);
    opts.seed = seed;
    opts.paranoid = paranoid;
    opts.with_opt = with_opt;
    opts.ff_cap = ff_cap;
    opts.sample_count = samples;
    opts.mode =
        mode_text == "deterministic" ? SolveMode::Deterministic : SolveMode::SampledRounding;

    if (solve->parsed()) {
      write_output(run_solve(Instance::from_file(instance_path), opts).dump(2), out_path);
    } else if (estimate->parsed()) {
      write_output(run_estimate(Instance::from_file(instance_path), opts).dump(2), out_path);
    } else if (verify->parsed()) {
      std::vector<std::string> paths;
      if (!suite.empty())
        paths = fixture_files(fixtures_dir);
      else if (!instance_path.empty())
        paths.push_back(instance_path);
      else
        throw SchemaError("verify needs an instance file or --suite fixtures");
      std::string jsonl;
      bool ok = true;
      for (const std::string& p : paths) {
        auto records = run_verify(Instance::from_file(p), seed);
        ok = ok && all_pass(records);
        jsonl += records_to_jsonl(records);
      }
      write_output(jsonl, out_path);
      return ok ? 0 : 1;
    } else if (bench->parsed()) {
      BenchOptions bopts;
      bopts.families = families;
      bopts.epsilon = opts.epsilon;
      bopts.trials = trials;
      if (!n_list_text.empty()) {
        std::stringstream ss(n_list_text);
        std::string tok;
        while (std::getline(ss, tok, ','))
          if (!tok.empty()) bopts.n_list.push_back(std::stoi(tok));
      }
      write_output(run_bench(bopts), out_path);
    }
  } catch (const ToolError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
