#include <iostream>

#include "CLI11.hpp"

#include "maxplus/cli.hpp"

int main(int argc, char** argv) {
  using namespace maxplus;
  CLI::App app{"Extremality of max-plus supereigenvectors (solutions of A*x >= x)"};
  app.require_subcommand(1);

  cli::CheckOptions check_opt;
  bool json_flag = false;
  auto* check_cmd = app.add_subcommand("check", "decide whether x is an extremal; prints a JSON verdict");
  check_cmd->add_option("instance", check_opt.matrix_path, "instance file (matrix, optionally followed by x)")->required();
  check_cmd->add_option("vector", check_opt.vector_path, "vector file, when x is not in the instance file");
  check_cmd->add_flag("--witness", check_opt.witness, "attach a verified decomposition x = x1 + x2");
  check_cmd->add_flag("--json", json_flag, "JSON output (always on for check)");

  cli::CheckOptions witness_opt;
  auto* witness_cmd = app.add_subcommand("witness", "same as check --witness");
  witness_cmd->add_option("instance", witness_opt.matrix_path)->required();
  witness_cmd->add_option("vector", witness_opt.vector_path);
  witness_cmd->add_flag("--json", json_flag);

  std::string cls_matrix, cls_vector;
  bool dot = false;
  auto* classify_cmd = app.add_subcommand("classify", "list support nodes with their class and degrees");
  classify_cmd->add_option("instance", cls_matrix)->required();
  classify_cmd->add_option("vector", cls_vector);
  classify_cmd->add_flag("--dot", dot, "emit the tangent digraph in DOT format");
  classify_cmd->add_flag("--json", json_flag);

  std::string or_matrix, or_vector;
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force extremality for small supports (<= 12)");
  oracle_cmd->add_option("instance", or_matrix)->required();
  oracle_cmd->add_option("vector", or_vector);
  oracle_cmd->add_flag("--json", json_flag);

  GenParams gen;
  auto* gen_cmd = app.add_subcommand("gen", "print a random instance with x in the solution set");
  gen_cmd->add_option("-n,--size", gen.n, "dimension")->required();
  gen_cmd->add_option("--density", gen.density, "probability that an entry of A is finite");
  gen_cmd->add_option("--min", gen.lo, "smallest entry");
  gen_cmd->add_option("--max", gen.hi, "largest entry");
  gen_cmd->add_option("--seed", gen.seed, "64-bit seed");

  std::vector<std::size_t> sizes{100, 200, 400, 800};
  std::uint64_t bench_seed = 1;
  std::size_t reps = 7;
  auto* bench_cmd = app.add_subcommand("bench", "time check on dense instances and report log-log slopes");
  bench_cmd->add_option("--sizes", sizes, "comma-separated sizes")->delimiter(',');
  bench_cmd->add_option("--seed", bench_seed);
  bench_cmd->add_option("--reps", reps, "repetitions per size (>= 5)");
  bench_cmd->add_flag("--json", json_flag);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kInputError;
  }

  if (*check_cmd) return cli::cmd_check(check_opt, std::cout, std::cerr);
  if (*witness_cmd) {
    witness_opt.witness = true;
    return cli::cmd_check(witness_opt, std::cout, std::cerr);
  }
  if (*classify_cmd) return cli::cmd_classify(cls_matrix, cls_vector, dot, json_flag, std::cout, std::cerr);
  if (*oracle_cmd) return cli::cmd_oracle(or_matrix, or_vector, std::cout, std::cerr);
  if (*gen_cmd) return cli::cmd_gen(gen, std::cout, std::cerr);
  if (*bench_cmd) return cli::cmd_bench(sizes, bench_seed, reps, json_flag, std::cout, std::cerr);
  return cli::kInputError;
}
