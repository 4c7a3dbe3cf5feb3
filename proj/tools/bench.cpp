#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ltsyn/libanalysis.hpp"
#include "ltsyn/synthesizer.hpp"

/* Times the serial reference search against the OpenMP shape-partitioned
 * search on a fixed set of workloads and checks that both produce the same
 * circuit.  Returns nonzero if any pair of results disagrees. */

using namespace ltsyn;

namespace {

using clock_type = std::chrono::steady_clock;

double run_ms(const std::function<void()>& fn)
{
  const auto start = clock_type::now();
  fn();
  return std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
}

std::string synth_signature(const std::string& text, const std::string& library, int threads)
{
  synth_options opt;
  opt.threads = threads;
  opt.max_gates = 9;
  const circuit c = synthesize_formula(text, make_library(library), opt);
  return to_string(c.expr) + "/" + std::to_string(c.gates);
}

std::string expressiveness_signature(const std::string& library, int threads)
{
  analysis_options opt;
  opt.threads = threads;
  const auto report = expressiveness(make_library(library), opt);
  std::string sig;
  for (const auto& op : report.ops) sig += std::to_string(op.gates) + ",";
  return sig + (report.total ? std::to_string(*report.total) : "-");
}

struct workload {
  std::string name;
  std::function<std::string(int)> run; // threads -> result signature
};

} // namespace

int main(int argc, char** argv)
{
  int threads = 2;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  if (argc > 1) threads = std::max(1, std::atoi(argv[1]));

  const std::vector<workload> workloads = {
    {"synth maj3 under less,1",
     [](int t) { return synth_signature("A*B+B*C+A*C", "less,1", t); }},
    {"synth or3 under nand",
     [](int t) { return synth_signature("A+B+C", "nand", t); }},
    {"synth ite under less,1",
     [](int t) { return synth_signature("ite(A,B,C)", "less,1", t); }},
    {"synth xor under nand",
     [](int t) { return synth_signature("A^B", "nand", t); }},
    {"expressiveness of nand",
     [](int t) { return expressiveness_signature("nand", t); }},
    {"expressiveness of less,eq,1",
     [](int t) { return expressiveness_signature("less,eq,1", t); }},
  };

  std::printf("comparing serial reference vs %d OpenMP workers\n\n", threads);
  std::printf("%-28s %12s %12s %9s  %s\n", "workload", "serial ms", "parallel ms", "speedup",
              "results");
  bool all_equal = true;
  double serial_total = 0, parallel_total = 0;

  for (const auto& w : workloads) {
    std::string serial_result, parallel_result;
    const double serial_ms = run_ms([&] { serial_result = w.run(1); });
    const double parallel_ms = run_ms([&] { parallel_result = w.run(threads); });
    serial_total += serial_ms;
    parallel_total += parallel_ms;
    const bool equal = serial_result == parallel_result;
    all_equal = all_equal && equal;
    std::printf("%-28s %12.1f %12.1f %8.2fx  %s\n", w.name.c_str(), serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, equal ? "equal" : "DIFFER");
  }

  std::printf("\n%-28s %12.1f %12.1f %8.2fx\n", "total", serial_total, parallel_total,
              parallel_total > 0 ? serial_total / parallel_total : 0.0);
  if (!all_equal) {
    std::printf("FAILURE: parallel results differ from the serial reference\n");
    return 1;
  }
  return 0;
}
