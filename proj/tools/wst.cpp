// Command-line front end: solve instances, verify against the brute-force
// oracle, recognize graph classes, generate instances, and benchmark.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wst/graph_core.hpp"
#include "wst/io.hpp"
#include "wst/oracle.hpp"
#include "wst/reduction.hpp"
#include "wst/solvers.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitMismatch = 4;

wst::Instance load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return wst::parse_instance(buf.str());
}

wst::Problem parse_problem(const std::string& name) {
  if (name == "oct") return wst::Problem::OCT;
  if (name == "fvs") return wst::Problem::FVS;
  throw CLI::ValidationError("--problem must be oct or fvs");
}

std::vector<std::string> collect_inputs(std::vector<std::string> files,
                                        const std::string& dir) {
  if (!dir.empty()) {
    for (const auto& entry : std::filesystem::directory_iterator(dir))
      if (entry.is_regular_file()) files.push_back(entry.path().string());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw CLI::ValidationError("no input files");
  return files;
}

int run_solve(const std::string& file, const std::string& problem_name, int cap) {
  wst::Problem problem = parse_problem(problem_name);
  wst::SolveResult result = wst::solve(load(file), problem, cap);
  std::cout << wst::solve_report(result, problem);
  return kExitOk;
}

int run_verify(const std::vector<std::string>& files,
               const std::string& problem_name, int cap) {
  wst::Problem problem = parse_problem(problem_name);
  bool mismatch = false;
  for (const std::string& file : files) {
    wst::Instance g = load(file);
    wst::SolveResult result = wst::solve(g, problem, cap);
    if (g.n() > cap) {
      std::cout << file << " skipped oracle-cap\n";
      continue;
    }
    wst::Solution truth = wst::oracle_transversal(g, problem, cap);
    if (truth.weight == result.solution.weight &&
        wst::solution_ok(g, result.solution)) {
      std::cout << file << " ok weight " << truth.weight << "\n";
    } else {
      std::cout << file << " mismatch solver " << result.solution.weight
                << " oracle " << truth.weight << "\n";
      mismatch = true;
    }
  }
  return mismatch ? kExitMismatch : kExitOk;
}

int run_recognize(const std::string& file) {
  std::cout << wst::recognize_report(load(file));
  return kExitOk;
}

void write_instance(const wst::Instance& g, const std::string& out_path) {
  std::string text = wst::serialize_instance(g);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
  std::cout << "wrote " << out_path << "\n";
}

std::array<wst::VertexSet, 3> parse_partition(const std::string& spec, int n) {
  // Three ';'-separated lists of 1-indexed vertex ids; parts may be empty.
  std::vector<std::string> chunks{""};
  for (char c : spec) {
    if (c == ';')
      chunks.emplace_back();
    else
      chunks.back() += c;
  }
  if (chunks.size() != 3)
    throw CLI::ValidationError("--partition needs exactly 3 ';'-separated parts");
  std::array<wst::VertexSet, 3> parts;
  for (std::size_t idx = 0; idx < 3; ++idx) {
    std::istringstream ps(chunks[idx]);
    int v;
    while (ps >> v) {
      if (v < 1 || v > n) throw CLI::ValidationError("partition vertex out of range");
      parts[idx].set(v - 1);
    }
    if (!ps.eof()) throw CLI::ValidationError("--partition must list vertex ids");
  }
  return parts;
}

int run_bench(const std::vector<std::string>& files,
              const std::string& problem_name, int cap) {
  wst::Problem problem = parse_problem(problem_name);
  std::cout << "file n m class weight ms\n";
  for (const std::string& file : files) {
    wst::Instance g = load(file);
    auto start = std::chrono::steady_clock::now();
    std::string label, weight;
    try {
      wst::SolveResult result = wst::solve(g, problem, cap);
      label = result.label.name();
      weight = std::to_string(result.solution.weight);
    } catch (const wst::UnsupportedInstance&) {
      label = "Unsupported";
      weight = "-";
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << file << " " << g.n() << " " << g.m() << " " << label << " "
              << weight << " " << ms << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solvers for weighted subset odd cycle transversal / "
               "feedback vertex set on hereditary graph classes"};
  app.require_subcommand(1);

  std::string file, dir, out_path, problem_name = "oct", class_name = "P4free";
  std::string partition_spec;
  std::vector<std::string> files;
  int cap = wst::kOracleCap;
  int gen_n = 10;
  std::uint64_t seed = 0;
  wst::GeneratorOptions gen_options;

  CLI::App* solve = app.add_subcommand("solve", "solve one instance file");
  solve->add_option("file", file)->required();
  solve->add_option("--problem", problem_name, "oct or fvs");
  solve->add_option("--oracle-cap", cap, "max n for the oracle fallback");

  CLI::App* verify = app.add_subcommand("verify", "solve and check against the oracle");
  verify->add_option("files", files);
  verify->add_option("--dir", dir, "verify every file in a directory");
  verify->add_option("--problem", problem_name, "oct or fvs");
  verify->add_option("--oracle-cap", cap, "max n for the oracle");

  CLI::App* recognize = app.add_subcommand("recognize", "print the class label");
  recognize->add_option("file", file)->required();

  CLI::App* generate = app.add_subcommand("generate", "write an instance file");
  CLI::App* gen_random = generate->add_subcommand("random", "seeded in-class instance");
  gen_random->add_option("--class", class_name, "P4free, P1P3free, ThreeP1P2free, sP2free(s)");
  gen_random->add_option("--n", gen_n)->check(CLI::Range(0, 40));
  gen_random->add_option("--seed", seed);
  gen_random->add_option("--weight-max", gen_options.weight_max);
  gen_random->add_option("--terminal-density", gen_options.terminal_density);
  gen_random->add_option("--edge-prob", gen_options.edge_probability);
  gen_random->add_option("--budget", gen_options.attempt_budget);
  gen_random->add_option("--out", out_path, "output path ('-' for stdout)");
  CLI::App* gen_reduction =
      generate->add_subcommand("reduction", "vertex-cover-to-transversal instance");
  gen_reduction->add_option("--in", file, "3-partite input instance")->required();
  gen_reduction->add_option("--partition", partition_spec,
                            "three ';'-separated lists of 1-indexed vertices")
      ->required();
  gen_reduction->add_option("--out", out_path, "output path ('-' for stdout)");
  generate->require_subcommand(1);

  CLI::App* bench = app.add_subcommand("bench", "timing table over instance files");
  bench->add_option("files", files);
  bench->add_option("--dir", dir);
  bench->add_option("--problem", problem_name, "oct or fvs");
  bench->add_option("--oracle-cap", cap);

  try {
    app.parse(argc, argv);

    if (solve->parsed()) return run_solve(file, problem_name, cap);
    if (verify->parsed()) return run_verify(collect_inputs(files, dir), problem_name, cap);
    if (recognize->parsed()) return run_recognize(file);
    if (generate->parsed()) {
      if (gen_random->parsed()) {
        auto label = wst::class_from_string(class_name);
        if (!label || label->kind == wst::ClassLabel::Kind::Unsupported)
          throw CLI::ValidationError("unknown class " + class_name);
        write_instance(wst::random_hfree(gen_n, *label, seed, gen_options), out_path);
      } else {
        wst::Instance g = load(file);
        wst::ReductionOutput red =
            wst::vc3_to_wsoct(g, parse_partition(partition_spec, g.n()));
        write_instance(red.instance, out_path);
      }
      return kExitOk;
    }
    if (bench->parsed()) return run_bench(collect_inputs(files, dir), problem_name, cap);
    return kExitUsage;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const wst::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const wst::UnsupportedInstance& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const wst::ClassViolation& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
