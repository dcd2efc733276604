#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "afcount/errors.hpp"
#include "afcount/io.hpp"
#include "afcount/reductions.hpp"
#include "afcount/solver.hpp"

namespace {

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

int run_reduce(const std::string& cnf_path, const std::string& mode, int x_vars,
               const std::string& output) {
  std::ifstream in(cnf_path);
  if (!in) throw afc::usage_error("cannot open CNF file: " + cnf_path);
  std::stringstream buf;
  buf << in.rdbuf();
  afc::CnfFormula cnf = afc::parse_dimacs(buf.str());

  afc::ReductionResult red = [&] {
    if (mode == "stable") return afc::cnf_to_af_stable(cnf);
    if (mode == "admissible") return afc::cnf_to_af_admissible(cnf);
    if (mode == "sigma1") return afc::sigma1_to_projected(cnf, x_vars);
    throw afc::usage_error("unknown reduce mode: " + mode);
  }();

  std::ostringstream os;
  os << "% target: " << red.framework.name(red.target) << "\n";
  if (red.projection.any()) {
    os << "% projection:";
    red.projection.for_each([&](int i) { os << " " << red.framework.name(i); });
    os << "\n";
  }
  os << afc::to_apx(red.framework);

  if (output.empty() || output == "-") {
    std::cout << os.str();
  } else {
    std::ofstream f(output);
    if (!f) throw afc::usage_error("cannot open output file: " + output);
    f << os.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counts extensions of abstract argumentation frameworks by dynamic "
               "programming over tree decompositions"};
  app.require_subcommand(0, 1);

  afc::RunConfig cfg;
  std::string semantics = "stable", task = "count", projection;
  bool projection_given = false;

  app.add_option("--input", cfg.input_path, "AF input file");
  app.add_option("--format", cfg.format, "input format: apx or tgf (default: by extension)");
  app.add_option("--semantics", semantics,
                 "conflict-free | admissible | complete | preferred | semi-stable | stable | stage");
  app.add_option("--task", task, "count | cred-count | pcount | cred | skep | enumerate-oracle");
  app.add_option("--arg", cfg.arg, "credulous argument");
  app.add_option("--projection", projection, "comma-separated projection argument names")
      ->expected(0, 1);
  app.add_option("--seed", cfg.seed, "tree decomposition seed");
  app.add_option("--td-passes", cfg.td_passes, "min-fill restarts");
  app.add_flag("--oracle-verify", cfg.oracle_verify, "cross-check against the brute-force oracle");
  app.add_flag("--trace", cfg.trace, "dump per-node tables to stderr");
  app.add_flag("--stats", cfg.stats, "print a stats record after the result");
  app.add_option("--threads", cfg.threads, "worker threads for the DP pass");

  auto* reduce = app.add_subcommand("reduce", "translate a DIMACS CNF into an AF instance");
  std::string cnf_path, mode = "stable", output;
  int x_vars = 0;
  reduce->add_option("--cnf", cnf_path, "DIMACS CNF input")->required();
  reduce->add_option("--mode", mode, "stable | admissible | sigma1");
  reduce->add_option("--x-vars", x_vars, "sigma1: the first N variables are the projected X block");
  reduce->add_option("--output", output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
    if (reduce->parsed()) return run_reduce(cnf_path, mode, x_vars, output);

    if (cfg.input_path.empty()) throw afc::usage_error("--input is required");
    cfg.semantics = afc::semantics_from_string(semantics);
    cfg.task = afc::task_from_string(task);
    projection_given = app.count("--projection") > 0;
    if (projection_given) cfg.projection = split_csv(projection);
    afc::run(cfg, std::cout, std::cerr);
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const afc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return int(e.kind);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
