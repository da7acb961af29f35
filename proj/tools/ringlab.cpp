// ringlab: command-line front end for the finite ring laboratory.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "ringlab/classify.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/decompose.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/groupring.hpp"
#include "ringlab/harness/report.hpp"
#include "ringlab/harness/suites.hpp"
#include "ringlab/matrix_tfine.hpp"

using namespace ringlab;
using nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kCap = 3 };

struct Common {
  std::size_t max_order = kDefaultMaxOrder;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  bool stable = false;
  bool markdown = false;
  bool json = false;
  std::string out;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void add_common(CLI::App* cmd, Common& c, bool formats) {
  cmd->add_option("--max-order", c.max_order, "Largest ring order to realize")->capture_default_str();
  cmd->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_flag("--stable", c.stable, "Omit timing so repeated runs are byte-identical");
  cmd->add_option("--out", c.out, "Write output to this file instead of stdout");
  if (formats) {
    auto* md = cmd->add_flag("--md", c.markdown, "Markdown output");
    cmd->add_flag("--json", c.json, "JSON output (default)")->excludes(md);
  }
}

std::optional<ordered_json> cache_lookup(const std::string& path, const std::string& key) {
  std::ifstream in(path);
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    auto j = ordered_json::parse(line, nullptr, false);
    if (!j.is_discarded() && j.value("key", "") == key) return j["report"];
  }
  return std::nullopt;
}

int cmd_classify(const std::string& spec_text, const Common& c, const std::string& cache) {
  const std::string key = parse_ring_spec(spec_text).to_string() + "|" + kRinglabVersion;
  std::optional<ordered_json> report;
  if (!cache.empty()) report = cache_lookup(cache, key);
  if (!report) {
    const auto ring = realize(spec_text, c.max_order);
    ReportOptions o;
    o.jobs = c.jobs;
    o.stable = c.stable || !cache.empty();
    report = classification_report(ring, o);
    if (!cache.empty()) {
      std::ofstream append(cache, std::ios::app);
      append << ordered_json{{"key", key}, {"report", *report}}.dump() << "\n";
    }
  }
  Output out(c.out);
  if (c.markdown)
    out.stream() << report_markdown(*report);
  else
    out.stream() << report->dump(2) << "\n";
  return kOk;
}

int cmd_decompose(const std::string& spec_text, const std::string& element, const std::string& kind_name,
                  const Common& c) {
  const auto kind = decomposition_kind_from_string(kind_name);
  if (!kind) throw ParseError("unknown decomposition kind '" + kind_name + "'");
  const auto ring = realize(spec_text, c.max_order);
  const auto report = decomposition_report(ring, ring.parse_element(element), *kind);
  Output out(c.out);
  out.stream() << report.dump(2) << "\n";
  return kOk;
}

std::vector<RingPredicate> parse_predicates(const std::vector<std::string>& names) {
  std::vector<RingPredicate> out;
  if (names.empty()) return {std::begin(kAllRingPredicates), std::end(kAllRingPredicates)};
  for (const auto& n : names) {
    auto p = ring_predicate_from_string(n);
    if (!p) throw ParseError("unknown predicate '" + n + "'");
    out.push_back(*p);
  }
  return out;
}

ordered_json scan_line(const std::string& line, const std::vector<RingPredicate>& preds, std::size_t max_order) {
  const auto parts = split_top_level(line, ';');
  try {
    if (parts.size() == 2) {
      const auto rec = groupring_scan_pair(parse_ring_spec(parts[0]), parse_group_spec(parts[1]), preds, max_order);
      return to_json(rec);
    }
    if (parts.size() != 1) throw ParseError("expected '<ring>' or '<ring> ; <group>'");
    const auto ring = realize(parts[0], max_order);
    ordered_json j;
    j["spec"] = ring.spec().to_string();
    j["order"] = ring.order();
    ordered_json p = ordered_json::object();
    for (auto pred : preds) p[std::string(to_string(pred))] = to_json(ring_predicate(ring, pred), ring);
    j["predicates"] = p;
    return j;
  } catch (const Error& e) {
    return ordered_json{{"input", line}, {"error", e.what()}};
  }
}

int cmd_scan(const std::string& path, const std::vector<std::string>& pred_names, const Common& c) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "ringlab: cannot read " << path << "\n";
    return kFailure;
  }
  const auto preds = parse_predicates(pred_names);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line.erase(0, line.find_first_not_of(" \t\r"));
    line.erase(line.find_last_not_of(" \t\r") + 1);
    if (!line.empty()) lines.push_back(line);
  }

  std::vector<std::string> records(lines.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < lines.size();) records[i] = scan_line(lines[i], preds, c.max_order).dump();
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(c.jobs, static_cast<unsigned>(lines.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }

  Output out(c.out);
  for (const auto& r : records) out.stream() << r << "\n";
  if (!out.stream()) return kFailure;
  return kOk;
}

int cmd_verify(const std::string& suite, const Common& c, const SearchBudget& budget) {
  SuiteOptions o;
  o.jobs = c.jobs;
  o.budget = budget;
  if (c.max_order != kDefaultMaxOrder) o.max_order = c.max_order;
  const auto result = run_suite(suite, o);
  if (!result) {
    std::cerr << "ringlab: unknown suite '" << suite << "' (expected acceptance, paper or invariants)\n";
    return kUsage;
  }
  Output out(c.out);
  if (c.json)
    out.stream() << to_json(*result).dump(2) << "\n";
  else
    out.stream() << format_table(*result);
  return result->all_pass() ? kOk : kFailure;
}

ordered_json matrix_json(const MatrixAlgebra& alg, const SquareMatrix& m, const MatrixDecomposition& d) {
  ordered_json trace = ordered_json::array();
  for (const auto& s : d.trace) {
    ordered_json step{{"level", s.level}, {"method", s.method}};
    if (!s.similarity.empty()) step["similarity"] = s.similarity;
    if (s.one_split)
      step["one_as_two_units"] = {alg.ring().format(s.one_split->u), alg.ring().format(s.one_split->v)};
    if (s.base_certificate) step["base_certificate"] = to_json(*s.base_certificate);
    if (s.diagonal_exponent) step["diagonal_exponent"] = s.diagonal_exponent;
    if (s.probes) step["probes"] = s.probes;
    trace.push_back(step);
  }
  return ordered_json{{"matrix", alg.format(m)},
                      {"unit", alg.format(d.unit)},
                      {"nilpotent", alg.format(d.nilpotent)},
                      {"unit_order", d.unit_order},
                      {"nilpotency_index", d.nilpotency_index},
                      {"verified", verify_matrix_decomposition(alg, m, d).ok},
                      {"trace", trace}};
}

int cmd_tfine_matrix(const std::string& spec_text, std::size_t n, const std::string& element, std::uint64_t limit,
                     const SearchBudget& budget, const Common& c) {
  const auto ring = realize(spec_text, c.max_order);
  const MatrixAlgebra alg(ring, n);
  Output out(c.out);

  if (!element.empty()) {
    const auto m = alg.parse(element);
    const auto d = tfine_decompose_matrix(alg, m, budget, c.jobs);
    out.stream() << matrix_json(alg, m, d).dump(2) << "\n";
    return kOk;
  }

  const std::uint64_t total = alg.count();
  if (total - 1 > limit)
    throw OrderCapExceeded("M_" + std::to_string(n) + "(" + ring.spec().to_string() + ") has more than " +
                           std::to_string(limit) + " non-zero matrices (raise --limit)");
  std::uint64_t verified = 0, max_order = 0, max_index = 0;
  std::map<std::string, std::uint64_t> methods, errors;
  std::optional<std::string> first_error;
  for (std::uint64_t i = 1; i < total; ++i) {
    const auto m = alg.decode(i);
    try {
      const auto d = tfine_decompose_matrix(alg, m, budget, c.jobs);
      if (verify_matrix_decomposition(alg, m, d).ok) ++verified;
      max_order = std::max(max_order, d.unit_order);
      max_index = std::max(max_index, d.nilpotency_index);
      ++methods[d.trace.front().method];
    } catch (const Error& e) {
      ++errors[e.what()];
      if (!first_error) first_error = alg.format(m);
    }
  }
  ordered_json j{{"schema", kReportSchema},
                 {"ring", ring.spec().to_string()},
                 {"n", n},
                 {"matrices", total - 1},
                 {"verified", verified},
                 {"max_unit_order", max_order},
                 {"max_nilpotency_index", max_index},
                 {"top_level_methods", methods}};
  if (!errors.empty()) {
    j["errors"] = errors;
    j["first_failing_matrix"] = *first_error;
  }
  out.stream() << j.dump(2) << "\n";
  return verified == total - 1 ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ringlab: classification and decomposition of finite rings"};
  app.require_subcommand(1);
  Common common;
  SearchBudget budget;

  auto* classify = app.add_subcommand("classify", "Classification report for one ring");
  std::string spec, cache;
  classify->add_option("spec", spec, "Ring spec, e.g. 'M(2,GF(2))'")->required();
  classify->add_option("--cache", cache, "JSONL cache file keyed by spec and version");
  add_common(classify, common, true);

  auto* decomp = app.add_subcommand("decompose", "Decompose one element");
  std::string element, kind = "TFine";
  decomp->add_option("spec", spec, "Ring spec")->required();
  decomp->add_option("element", element, "Element expression, e.g. 2, '[[1,0],[0,0]]', '1+3*g'")->required();
  decomp->add_option("--kind", kind, "SemiNilClean, StronglySemiNilClean, WeaklyPeriodic, Clean, NilClean, "
                                     "StronglyNilClean, SemiClean, Fine, TFine")
      ->capture_default_str();
  add_common(decomp, common, true);

  auto* scan = app.add_subcommand("scan", "Evaluate predicates for every line of a catalog file");
  std::string catalog;
  std::vector<std::string> predicates;
  scan->add_option("catalog", catalog, "File with one '<ring>' or '<ring> ; <group>' per line")->required();
  scan->add_option("--predicates,--predicate", predicates, "Predicates to evaluate (default: all)")->delimiter(',');
  add_common(scan, common, false);

  auto* verify = app.add_subcommand("verify", "Run a check suite");
  std::string suite = "acceptance";
  verify->add_option("--suite", suite, "acceptance (alias paper) or invariants")->capture_default_str();
  verify->add_option("--budget-similarity", budget.similarity, "Conjugator candidates per similarity search");
  verify->add_option("--budget-fallback", budget.fallback, "Candidates for exhaustive fallback searches");
  add_common(verify, common, true);

  auto* tfine = app.add_subcommand("tfine-matrix", "Torsion unit + nilpotent decompositions in M_n(R)");
  std::size_t n = 2;
  std::uint64_t limit = 1'000'000;
  tfine->add_option("spec", spec, "Base ring R")->required();
  tfine->add_option("n", n, "Matrix size")->required()->check(CLI::PositiveNumber);
  tfine->add_option("--element", element, "Decompose only this matrix, e.g. '[[1,0],[0,0]]'");
  tfine->add_option("--limit", limit, "Largest number of matrices to decompose in summary mode")->capture_default_str();
  tfine->add_option("--budget-similarity", budget.similarity, "Conjugator candidates per similarity search")
      ->capture_default_str();
  tfine->add_option("--budget-fallback", budget.fallback, "Candidates for exhaustive fallback searches")
      ->capture_default_str();
  add_common(tfine, common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*classify) return cmd_classify(spec, common, cache);
    if (*decomp) return cmd_decompose(spec, element, kind, common);
    if (*scan) return cmd_scan(catalog, predicates, common);
    if (*verify) return cmd_verify(suite, common, budget);
    if (*tfine) return cmd_tfine_matrix(spec, n, element, limit, budget, common);
  } catch (const OrderCapExceeded& e) {
    std::cerr << "ringlab: " << e.what() << "\n";
    return kCap;
  } catch (const CapExceeded& e) {
    std::cerr << "ringlab: " << e.what() << "\n";
    return kCap;
  } catch (const BudgetExhausted& e) {
    std::cerr << "ringlab: " << e.what() << "\n";
    return kCap;
  } catch (const Error& e) {
    std::cerr << "ringlab: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "ringlab: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
