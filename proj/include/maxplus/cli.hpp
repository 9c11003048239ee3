#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "maxplus/extremality.hpp"
#include "maxplus/generate.hpp"
#include "maxplus/io.hpp"
#include "maxplus/oracle.hpp"
#include "maxplus/tangent_digraph.hpp"
#include "maxplus/witness.hpp"

namespace maxplus::cli {

// Exit statuses. The verdict itself lives in the JSON output.
inline constexpr int kDecided = 0;
inline constexpr int kInputError = 2;
inline constexpr int kInternalError = 3;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Reads A and x. The vector comes from `vector_path` when given, otherwise
/// from the instance file itself.
inline std::pair<Matrix, Vector> load(const std::string& matrix_path, const std::string& vector_path) {
  Instance inst = parse_instance(read_file(matrix_path));
  if (!vector_path.empty()) inst.x = parse_vector(read_file(vector_path), inst.a.dim());
  if (!inst.x) throw InputError("no vector given: append it to the instance file or pass a vector file");
  return {std::move(inst.a), std::move(*inst.x)};
}

/// Runs `body`, mapping library exceptions onto exit statuses.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const NotASolution& e) {
    err << "error: not a solution: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const WitnessError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

struct CheckOptions {
  std::string matrix_path;
  std::string vector_path;
  bool witness = false;
};

inline int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto [a, x] = load(opt.matrix_path, opt.vector_path);
    const Verdict v = check(a, x);
    std::optional<WitnessPair> w;
    if (opt.witness && !v.extremal) w = find_witness(a, x, v);
    out << to_json(v, w).dump(2) << '\n';
    return kDecided;
  });
}

inline int cmd_classify(const std::string& matrix_path, const std::string& vector_path, bool dot, bool json,
                        std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto [a, x] = load(matrix_path, vector_path);
    const TangentDigraph g = TangentDigraph::build(a, x);
    if (dot) {
      out << to_dot(g);
      return kDecided;
    }
    if (json) {
      auto rows = nlohmann::json::array();
      for (Index v : g.nodes())
        rows.push_back({{"node", v + 1},
                        {"class", std::string(to_string(classify_node(g, v)))},
                        {"in_degree", g.in_degree(v)},
                        {"out_degree", g.out_degree(v)},
                        {"loop", g.has_loop(v)}});
      out << nlohmann::json{{"nodes", rows}, {"components", weak_components(g).size()}}.dump(2) << '\n';
      return kDecided;
    }
    out << std::left << std::setw(6) << "node" << std::setw(13) << "class" << std::setw(4) << "in" << std::setw(5)
        << "out" << "loop\n";
    for (Index v : g.nodes())
      out << std::setw(6) << v + 1 << std::setw(13) << to_string(classify_node(g, v)) << std::setw(4) << g.in_degree(v)
          << std::setw(5) << g.out_degree(v) << (g.has_loop(v) ? "yes" : "no") << '\n';
    out << "components: " << weak_components(g).size() << '\n';
    return kDecided;
  });
}

/// Brute-force verdict, compared against the fast checker. Disagreement is
/// reported in the JSON and as an internal error.
inline int cmd_oracle(const std::string& matrix_path, const std::string& vector_path, std::ostream& out,
                      std::ostream& err) {
  return guarded(err, [&] {
    const auto [a, x] = load(matrix_path, vector_path);
    const OracleVerdict o = extremal_bruteforce(a, x);
    const Verdict fast = check(a, x);
    const bool agree = o.extremal == fast.extremal;
    nlohmann::json j;
    j["extremal"] = o.extremal;
    j["witness"] = o.witness ? to_json(*o.witness) : nlohmann::json(nullptr);
    j["witness_verified"] = o.witness ? nlohmann::json(verify_decomposition(a, x, *o.witness)) : nlohmann::json(nullptr);
    j["subsets_examined"] = o.subsets_examined;
    j["check"] = to_json(fast);
    j["agreement"] = agree;
    out << j.dump(2) << '\n';
    if (!agree) {
      err << "internal error: oracle and checker disagree\n";
      return kInternalError;
    }
    return kDecided;
  });
}

inline int cmd_gen(const GenParams& p, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Instance inst = generate_instance(p);
    out << write_instance(inst.a, inst.x);
    return kDecided;
  });
}

struct BenchRow {
  std::size_t n = 0;
  double median_ms = 0;
  std::size_t arcs = 0;
  bool extremal = false;
  Branch branch = Branch::SingleSupport;
  std::uint32_t max_arc_touches = 0;  // jet and cover phases
  std::optional<double> slope;  // log-log slope against the previous row
};

/// Median wall time of check() per size, on dense instances with a planted
/// extremal fountain so that every phase of the procedure runs (n = 2 has no
/// fountain and uses a plain dense draw).
inline std::vector<BenchRow> run_bench(std::vector<std::size_t> sizes, std::uint64_t seed, std::size_t reps) {
  if (sizes.empty()) throw InputError("no sizes given");
  if (reps < 5) throw InputError("at least 5 repetitions are required");
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  if (sizes.front() < 2) throw InputError("sizes must be at least 2");

  std::vector<Instance> instances;
  std::vector<BenchRow> rows;
  for (std::size_t n : sizes) {
    Instance inst = n >= 3 ? generate_planted_fountain(n, seed + n) : generate_instance({n, 1.0, -100, 100, seed + n});
    BenchRow row;
    row.n = n;
    row.arcs = TangentDigraph::build(inst.a, *inst.x).arc_count();
    const Verdict warm = check(inst.a, *inst.x);
    row.extremal = warm.extremal;
    row.branch = warm.branch;
    if (warm.fountain)
      for (auto t : warm.fountain->arc_touches) row.max_arc_touches = std::max(row.max_arc_touches, t);
    instances.push_back(std::move(inst));
    rows.push_back(row);
  }

  // Repetitions go round-robin over the sizes so that a burst of outside load
  // spreads over every size instead of skewing one median.
  std::vector<std::vector<double>> ms(sizes.size());
  for (std::size_t r = 0; r < reps; ++r)
    for (std::size_t k = 0; k < sizes.size(); ++k) {
      const auto t0 = std::chrono::steady_clock::now();
      const Verdict v = check(instances[k].a, *instances[k].x);
      const auto t1 = std::chrono::steady_clock::now();
      if (v.extremal != rows[k].extremal) throw InvariantViolation("check is not deterministic");
      ms[k].push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    std::sort(ms[k].begin(), ms[k].end());
    rows[k].median_ms = ms[k][ms[k].size() / 2];
    if (k > 0)
      rows[k].slope = std::log(rows[k].median_ms / rows[k - 1].median_ms) /
                      std::log(double(rows[k].n) / double(rows[k - 1].n));
  }
  return rows;
}

inline int cmd_bench(const std::vector<std::size_t>& sizes, std::uint64_t seed, std::size_t reps, bool json,
                     std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto rows = run_bench(sizes, seed, reps);
    if (json) {
      auto arr = nlohmann::json::array();
      for (const auto& r : rows)
        arr.push_back({{"n", r.n},
                       {"median_ms", r.median_ms},
                       {"arcs", r.arcs},
                       {"extremal", r.extremal},
                       {"branch", std::string(to_string(r.branch))},
                       {"max_arc_touches", r.max_arc_touches},
                       {"slope", r.slope ? nlohmann::json(*r.slope) : nlohmann::json(nullptr)}});
      out << arr.dump(2) << '\n';
      return kDecided;
    }
    out << std::left << std::setw(8) << "n" << std::setw(14) << "median_ms" << std::setw(10) << "arcs" << std::setw(10)
        << "branch" << std::setw(9) << "touches" << "slope\n";
    for (const auto& r : rows) {
      out << std::setw(8) << r.n << std::setw(14) << std::fixed << std::setprecision(3) << r.median_ms << std::setw(10)
          << r.arcs << std::setw(10) << to_string(r.branch) << std::setw(9) << r.max_arc_touches;
      if (r.slope) out << std::setprecision(2) << *r.slope;
      else out << '-';
      out << '\n';
    }
    return kDecided;
  });
}

}  // namespace maxplus::cli
