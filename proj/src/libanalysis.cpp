#include "ltsyn/libanalysis.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ltsyn {

const char* two_input_function_name(uint8_t table)
{
  static const char* names[16] = {
    "0",    "A*B",  "A>B", "A",   "A<B",  "B",   "A^B",  "A+B",
    "nor(A,B)", "A=B", "~B",  "A<=B", "~A",  "A=>B", "nand(A,B)", "1",
  };
  return names[table & 0xF];
}

uint16_t reachable_closure(const gate_library& lib)
{
  uint16_t reached = 0;
  const auto add = [&](uint8_t t) { reached = static_cast<uint16_t>(reached | (1u << t)); };
  add(truth_table::var(2, 0).bits()); // A
  add(truth_table::var(2, 1).bits()); // B
  if (lib.has_const0) add(0x0);
  if (lib.has_const1) add(0xF);

  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& g : lib.gates) {
      for (uint8_t x = 0; x < 16; ++x) {
        if (!(reached & (1u << x))) continue;
        for (uint8_t y = 0; y < 16; ++y) {
          if (!(reached & (1u << y))) continue;
          const auto r = static_cast<uint8_t>(apply_table4_bits(g.table, x, y, 0xF));
          if (!(reached & (1u << r))) {
            add(r);
            changed = true;
          }
        }
      }
    }
  }
  return reached;
}

namespace {

/* No candidate strictly below `gates` may match; used for self-checking the
 * reported counts. */
void verify_no_smaller_match(const gate_library& lib, const truth_table& spec, int gates)
{
  for (int m = 1; m < gates; ++m) {
    enumerate_leaf_dags(lib, spec.num_vars(), m, [&](const leaf_dag_candidate& cand) {
      if (cand.bits == spec.bits())
        throw std::logic_error("found a smaller circuit than the reported minimum");
      return true;
    });
  }
}

} // namespace

expressiveness_report expressiveness(const gate_library& lib, const analysis_options& opt)
{
  expressiveness_report report;
  report.library = lib.name;
  const uint16_t reached = reachable_closure(lib);

  std::exception_ptr failure;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(opt.threads) if (opt.threads > 1)
#endif
  for (int v = 0; v < 16; ++v) {
    operator_result& r = report.ops[v];
    r.table = static_cast<uint8_t>(v);
    r.reachable = (reached >> v) & 1;
    if (!r.reachable) continue;
    try {
      synth_request req;
      req.spec = truth_table(2, static_cast<uint64_t>(v));
      req.library = lib;
      req.cost = cost_model{cost_mode::gate_count};
      req.max_gates = opt.max_gates;
      const circuit c = synthesize(req);
      r.gates = c.gates;
      r.expr = to_string(c.expr);
      if (opt.verify_minimal && c.gates > 0) verify_no_smaller_match(lib, req.spec, c.gates);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  int total = 0;
  for (const auto& r : report.ops) {
    if (!r.reachable)
      report.unreachable.push_back(r.table);
    else
      total += r.gates;
  }
  if (report.unreachable.empty()) report.total = total;
  report.non_redundant = non_redundant(lib);

  for (const auto& row : classic_libraries()) {
    if (row.name == lib.name) {
      report.reference_total = row.reference_total;
      report.reference_non_redundant = row.reference_non_redundant;
    }
  }
  return report;
}

bool non_redundant(const gate_library& lib, int bound)
{
  struct member {
    gate_library residual;
    truth_table target;
  };
  std::vector<member> members;

  for (size_t i = 0; i < lib.gates.size(); ++i) {
    gate_library residual = lib;
    residual.gates.erase(residual.gates.begin() + i);
    members.push_back({std::move(residual), truth_table(2, lib.gates[i].table)});
  }
  if (lib.has_const0) {
    gate_library residual = lib;
    residual.has_const0 = false;
    members.push_back({std::move(residual), truth_table::zeros(2)});
  }
  if (lib.has_const1) {
    gate_library residual = lib;
    residual.has_const1 = false;
    members.push_back({std::move(residual), truth_table::ones(2)});
  }

  for (const auto& m : members) {
    try {
      synth_request req;
      req.spec = m.target;
      req.library = m.residual;
      req.max_gates = bound;
      synthesize(req);
      return false; // member expressible without itself
    } catch (const not_found_error&) {
      // this member is essential; try the next one
    }
  }
  return true;
}

const std::vector<cost_row_spec>& default_cost_rows()
{
  static const std::vector<cost_row_spec> rows = {
    {"A=B", {"A=B"}, ""},
    {"A^B", {"A^B"}, ""},
    {"A*B", {"A*B"}, "nand: 8 transistors if internal sharing were allowed"},
    {"(A*B)=>C", {"(A*B)=>C"}, ""},
    {"A*B*C", {"A*B*C"}, ""},
    {"A+B+C", {"A+B+C"}, ""},
    {"ite(A,B,C)", {"ite(A,B,C)"}, ""},
    {"(A=>B)*(B=>C)", {"(A=>B)*(B=>C)"}, ""},
    {"nand(A,B)", {"nand(A,B)"}, ""},
    {"A<B", {"A<B"}, "nand: 16 transistors if internal sharing were allowed"},
    {"2x2 half-adder", {"A^B", "A*B"}, "sum and carry synthesized independently"},
  };
  return rows;
}

transistor_report transistor_table(const std::vector<cost_row_spec>& rows, int threads)
{
  const gate_library less_lib = make_library("less,1");
  const gate_library nand_lib = make_library("nand");
  constexpr int transistors_per_gate = 4;

  transistor_report report;
  report.rows.resize(rows.size());

  std::exception_ptr failure;
  const int count = static_cast<int>(rows.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (threads > 1)
#endif
  for (int i = 0; i < count; ++i) {
    try {
      cost_row out;
      out.name = rows[i].name;
      out.note = rows[i].note;
      for (const std::string& text : rows[i].formulas) {
        out.less_gates += synthesize_formula(text, less_lib).gates;
        out.nand_gates += synthesize_formula(text, nand_lib).gates;
      }
      out.less_transistors = out.less_gates * transistors_per_gate;
      out.nand_transistors = out.nand_gates * transistors_per_gate;
      report.rows[i] = std::move(out);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return report;
}

transistor_report transistor_table(int threads)
{
  return transistor_table(default_cost_rows(), threads);
}

} // namespace ltsyn
