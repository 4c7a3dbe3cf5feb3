#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ltsyn/libanalysis.hpp"
#include "ltsyn/pla.hpp"
#include "ltsyn/rewriter.hpp"
#include "ltsyn/synthesizer.hpp"

using json = nlohmann::json;
using namespace ltsyn;

namespace {

struct common_flags {
  bool as_json = false;
  bool quiet = false;
  int threads = 1;
};

struct input_source {
  std::string spec;
  std::string formula;
  std::string pla;

  void add_options(CLI::App* cmd, bool with_spec)
  {
    if (with_spec) cmd->add_option("--spec", spec, "truth table, e.g. n=2:0x6 or 0b0110");
    cmd->add_option("--formula", formula, "boolean formula, e.g. \"(A<1)<B\"");
    cmd->add_option("--pla", pla, "PLA file: one '<input bits> <output bit>' line per row");
  }

  int count() const
  {
    return int(!spec.empty()) + int(!formula.empty()) + int(!pla.empty());
  }

  void require_one() const
  {
    if (count() != 1) throw usage_error("exactly one of --spec, --formula, --pla is required");
  }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int run_synth(const input_source& in, const std::string& library, const std::string& cost_name,
              int max_gates, std::optional<int> max_depth, std::optional<double> timeout_s,
              const common_flags& flags)
{
  in.require_one();
  const gate_library lib = resolve_library(library);

  cost_model cost;
  if (cost_name == "transistors")
    cost.mode = cost_mode::transistor_count;
  else if (cost_name != "gates")
    throw usage_error("--cost must be 'gates' or 'transistors'");

  synth_options opt;
  opt.cost = cost;
  opt.max_gates = max_gates;
  opt.max_depth = max_depth;
  opt.threads = flags.threads;
  if (timeout_s)
    opt.timeout = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
        std::chrono::duration<double>(*timeout_s));

  circuit result;
  std::vector<std::string> names;
  if (!in.formula.empty()) {
    const parsed_formula parsed = parse_formula(in.formula);
    names = parsed.inputs;
    result = synthesize_parsed(parsed, lib, opt);
  } else {
    synth_request req;
    req.spec = in.spec.empty() ? read_pla_file(in.pla).to_table() : parse_table(in.spec);
    req.library = lib;
    req.cost = opt.cost;
    req.max_gates = opt.max_gates;
    req.max_depth = opt.max_depth;
    req.timeout = opt.timeout;
    req.threads = opt.threads;
    result = synthesize(req);
  }

  const std::string formula_text = to_string(result.expr, names.empty() ? nullptr : &names);
  if (flags.as_json) {
    json out = {
      {"formula", formula_text}, {"gates", result.gates}, {"cost", result.cost},
      {"depth", result.depth},   {"exact", result.exact}, {"truth", to_string(result.truth)},
    };
    std::cout << out.dump() << "\n";
  } else if (flags.quiet) {
    std::cout << formula_text << "\n";
  } else {
    std::cout << "formula: " << formula_text << "\n";
    std::cout << "gates:   " << result.gates << "\n";
    std::cout << "cost:    " << result.cost << "\n";
    std::cout << "depth:   " << result.depth << "\n";
    std::cout << "exact:   " << yes_no(result.exact) << "\n";
    std::cout << "truth:   " << to_string(result.truth) << "\n";
  }
  return 0;
}

std::vector<std::vector<literal>> pla_terms(const pla_file& pla, bool dnf)
{
  std::vector<std::vector<literal>> terms;
  for (uint32_t a : dnf ? pla.on_assignments() : pla.off_assignments()) {
    std::vector<literal> term;
    for (int k = 0; k < pla.num_inputs; ++k) {
      const bool bit = (a >> (pla.num_inputs - k - 1)) & 1u;
      // DNF products take each variable at its row polarity; CNF sums negate it.
      term.push_back(literal{k, dnf ? !bit : bit});
    }
    terms.push_back(std::move(term));
  }
  if (terms.empty())
    throw usage_error(dnf ? "PLA has no on-set rows; the constant 0 needs no clauses"
                          : "PLA has no off-set rows; the constant 1 needs no clauses");
  return terms;
}

int run_rewrite(const input_source& in, const std::string& form, bool trace,
                const common_flags& flags)
{
  in.require_one();

  formula input_expr;
  formula output;
  std::vector<std::string> names;
  std::vector<rewrite_step> steps;
  int num_vars = 0;

  if (!in.formula.empty()) {
    if (!form.empty()) throw usage_error("--form applies only to --pla input");
    const parsed_formula parsed = parse_formula(in.formula);
    names = parsed.inputs;
    num_vars = parsed.num_inputs();
    rewrite_trace tr = to_less_form(parsed.expr);
    input_expr = tr.input;
    output = tr.output;
    steps = std::move(tr.steps);
  } else {
    const pla_file pla = read_pla_file(in.pla);
    num_vars = pla.num_inputs;
    const bool dnf = form.empty() || form == "dnf";
    if (!dnf && form != "cnf") throw usage_error("--form must be 'dnf' or 'cnf'");
    output = dnf ? encode_dnf(pla_terms(pla, true)) : encode_cnf(pla_terms(pla, false));
    input_expr = output;
  }

  const formula circuit_form = as_less_circuit(output);
  const formula_stats_t stats = formula_stats(circuit_form);
  const truth_table truth = table_of_formula(circuit_form, num_vars);
  const auto* name_ptr = names.empty() ? nullptr : &names;

  if (flags.as_json) {
    json out = {
      {"output", to_string(circuit_form, name_ptr)},
      {"gates", stats.gates},
      {"depth", stats.depth},
      {"truth", to_string(truth)},
    };
    if (!in.formula.empty()) out["input"] = to_string(input_expr, name_ptr);
    if (trace) {
      out["steps"] = json::array();
      for (const auto& s : steps)
        out["steps"].push_back({{"rule", s.rule},
                                {"before", to_string(s.before, name_ptr)},
                                {"after", to_string(s.after, name_ptr)}});
    }
    std::cout << out.dump() << "\n";
    return 0;
  }

  if (flags.quiet) {
    std::cout << to_string(circuit_form, name_ptr) << "\n";
    return 0;
  }
  if (!in.formula.empty()) std::cout << "input:  " << to_string(input_expr, name_ptr) << "\n";
  std::cout << "output: " << to_string(circuit_form, name_ptr) << "\n";
  std::cout << "gates:  " << stats.gates << "\n";
  std::cout << "depth:  " << stats.depth << "\n";
  std::cout << "truth:  " << to_string(truth) << "\n";
  if (trace) {
    std::cout << "steps:\n";
    for (const auto& s : steps)
      std::cout << "  " << s.rule << ": " << to_string(s.before, name_ptr) << " -> "
                << to_string(s.after, name_ptr) << "\n";
  }
  return 0;
}

int run_eval(const input_source& in, const common_flags& flags)
{
  in.require_one();

  truth_table truth;
  std::vector<std::string> names;
  if (!in.formula.empty()) {
    const parsed_formula parsed = parse_formula(in.formula);
    names = parsed.inputs;
    truth = table_of_formula(parsed.expr, parsed.num_inputs());
  } else {
    const pla_file pla = read_pla_file(in.pla);
    truth = pla.to_table();
    for (int k = 0; k < pla.num_inputs; ++k)
      names.push_back(std::string(1, static_cast<char>('A' + k)));
  }

  if (flags.as_json) {
    json out = {
      {"inputs", names}, {"truth", to_string(truth)}, {"binary", to_binary_string(truth)},
    };
    std::cout << out.dump() << "\n";
  } else if (flags.quiet) {
    std::cout << to_string(truth) << "\n";
  } else {
    std::cout << "inputs: ";
    for (size_t i = 0; i < names.size(); ++i) std::cout << (i ? " " : "") << names[i];
    std::cout << "\n";
    std::cout << "truth:  " << to_string(truth) << "  (" << to_binary_string(truth) << ")\n";
  }
  return 0;
}

std::string convention_note(const expressiveness_report& r)
{
  if (!r.total) {
    std::string ops;
    for (uint8_t t : r.unreachable) {
      if (!ops.empty()) ops += ", ";
      ops += two_input_function_name(t);
    }
    return "not universal; unreachable: " + ops;
  }
  if (r.reference_total && *r.total != *r.reference_total)
    return "reference total " + std::to_string(*r.reference_total) +
           "; this tool counts operator nodes only (constants and bare inputs are free)";
  return "";
}

int run_compare_libs(const std::vector<std::string>& libraries, int max_gates, bool markdown,
                     const common_flags& flags)
{
  std::vector<std::string> names = libraries;
  if (names.empty())
    for (const auto& row : classic_libraries()) names.push_back(row.name);

  analysis_options opt;
  opt.max_gates = max_gates;
  opt.threads = flags.threads;

  std::vector<expressiveness_report> reports;
  for (const auto& name : names) reports.push_back(expressiveness(resolve_library(name), opt));

  if (flags.as_json) {
    json out = json::array();
    for (const auto& r : reports) {
      json entry = {
        {"library", r.library},
        {"non_redundant", r.non_redundant},
      };
      if (r.total) entry["total"] = *r.total;
      if (r.reference_total) entry["reference_total"] = *r.reference_total;
      if (r.reference_non_redundant) entry["reference_non_redundant"] = *r.reference_non_redundant;
      const std::string note = convention_note(r);
      if (!note.empty()) entry["note"] = note;
      entry["operators"] = json::array();
      for (const auto& op : r.ops) {
        json op_entry = {{"function", two_input_function_name(op.table)},
                         {"reachable", op.reachable}};
        if (op.reachable) {
          op_entry["gates"] = op.gates;
          op_entry["formula"] = op.expr;
        }
        entry["operators"].push_back(op_entry);
      }
      out.push_back(entry);
    }
    std::cout << out.dump() << "\n";
    return 0;
  }

  if (markdown) {
    std::cout << "| Library | total for 16 operators | non-redundant |\n";
    std::cout << "|---|---|---|\n";
    for (const auto& r : reports)
      std::cout << "| " << r.library << " | " << (r.total ? std::to_string(*r.total) : "-")
                << " | " << yes_no(r.non_redundant) << " |\n";
    return 0;
  }

  std::printf("%-14s %8s %14s  %s\n", "library", "total", "non-redundant", "note");
  for (const auto& r : reports) {
    const std::string total = r.total ? std::to_string(*r.total) : "-";
    std::printf("%-14s %8s %14s  %s\n", r.library.c_str(), total.c_str(),
                yes_no(r.non_redundant).c_str(), convention_note(r).c_str());
  }
  return 0;
}

int run_cost_table(bool markdown, const common_flags& flags)
{
  const transistor_report report = transistor_table(flags.threads);

  if (flags.as_json) {
    json out = json::array();
    for (const auto& row : report.rows) {
      json entry = {
        {"function", row.name},
        {"less_gates", row.less_gates},
        {"less_transistors", row.less_transistors},
        {"nand_gates", row.nand_gates},
        {"nand_transistors", row.nand_transistors},
      };
      if (!row.note.empty()) entry["note"] = row.note;
      out.push_back(entry);
    }
    std::cout << out.dump() << "\n";
    return 0;
  }

  if (markdown) {
    std::cout << "| Function | <-cost | NAND-cost |\n|---|---|---|\n";
    for (const auto& row : report.rows)
      std::cout << "| " << row.name << " | " << row.less_gates << "*4=" << row.less_transistors
                << " | " << row.nand_gates << "*4=" << row.nand_transistors << " |\n";
    return 0;
  }

  std::printf("%-16s %10s %10s  %s\n", "function", "<-cost", "nand-cost", "note");
  for (const auto& row : report.rows)
    std::printf("%-16s %10d %10d  %s\n", row.name.c_str(), row.less_transistors,
                row.nand_transistors, row.note.c_str());
  return 0;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"exact Leaf-DAG circuit synthesis over boolean gate libraries"};
  app.require_subcommand(1);
  app.fallthrough(); // global flags may follow the subcommand

  common_flags flags;
  int seed = 0; // reserved; the search is deterministic
  app.add_flag("--json", flags.as_json, "machine-readable output");
  app.add_flag("--quiet", flags.quiet, "print only the main result");
  app.add_option("--threads", flags.threads, "parallel workers for the search (default 1)");
  app.add_option("--seed", seed, "reserved; accepted for compatibility")->group("");

  auto* synth = app.add_subcommand("synth", "find a minimal circuit for a specification");
  input_source synth_in;
  synth_in.add_options(synth, true);
  std::string library = "less,1";
  std::string cost_name = "gates";
  int max_gates = 10;
  std::optional<int> max_depth;
  std::optional<double> timeout_s;
  synth->add_option("--library", library, "gate library name or config file (default less,1)");
  synth->add_option("--cost", cost_name, "cost model: gates | transistors");
  synth->add_option("--max-gates", max_gates, "search bound on operator nodes (default 10)");
  synth->add_option("--max-depth", max_depth, "bound on the longest input-to-output path");
  synth->add_option("--timeout", timeout_s, "seconds before falling back or giving up");

  auto* rewrite = app.add_subcommand("rewrite", "translate into `<` gates and constant 1");
  input_source rewrite_in;
  rewrite_in.add_options(rewrite, false);
  std::string form;
  bool trace = false;
  rewrite->add_option("--form", form, "PLA encoding: dnf | cnf (default dnf)");
  rewrite->add_flag("--trace", trace, "list the rewrite steps");

  auto* eval = app.add_subcommand("eval", "print the truth table of a formula");
  input_source eval_in;
  eval_in.add_options(eval, false);

  auto* compare = app.add_subcommand("compare-libs", "gate totals over all 16 2-input operators");
  std::vector<std::string> libraries;
  int compare_max_gates = 10;
  bool compare_markdown = false;
  compare->add_option("--library", libraries, "libraries to compare (default: the classic 15)");
  compare->add_option("--max-gates", compare_max_gates, "per-operator search bound");
  compare->add_flag("--markdown", compare_markdown, "emit a markdown table");

  auto* cost = app.add_subcommand("cost-table", "transistor counts: (<,1) versus nand-only");
  bool cost_markdown = false;
  cost->add_flag("--markdown", cost_markdown, "emit a markdown table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*synth)
      return run_synth(synth_in, library, cost_name, max_gates, max_depth, timeout_s, flags);
    if (*rewrite) return run_rewrite(rewrite_in, form, trace, flags);
    if (*eval) return run_eval(eval_in, flags);
    if (*compare) return run_compare_libs(libraries, compare_max_gates, compare_markdown, flags);
    if (*cost) return run_cost_table(cost_markdown, flags);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const not_found_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const timeout_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const capacity_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 1;
}
