#include "ringlab/harness/report.hpp"

#include <chrono>
#include <sstream>

#include "ringlab/classify.hpp"
#include "ringlab/errors.hpp"

namespace ringlab {

namespace {

nlohmann::ordered_json element_json(const FiniteRing& ring, Handle x) {
  return {{"handle", x}, {"value", ring.format(x)}};
}

nlohmann::ordered_json handle_list(const FiniteRing& ring, const std::vector<Handle>& xs) {
  auto out = nlohmann::ordered_json::array();
  for (Handle x : xs) out.push_back(ring.format(x));
  return out;
}

}  // namespace

nlohmann::ordered_json classification_report(const FiniteRing& ring, const ReportOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["version"] = kRinglabVersion;
  j["spec"] = ring.spec().to_string();
  j["order"] = ring.order();
  j["characteristic"] = ring.characteristic();
  j["commutative"] = ring.is_commutative();

  const auto subsets = structural_subsets(ring);
  j["subsets"] = {
      {"units", subsets.units.size()},         {"nilpotents", subsets.nilpotents.size()},
      {"idempotents", subsets.idempotents.size()}, {"potents", subsets.potents.size()},
      {"torsion_units", subsets.torsion_units.size()}, {"unipotents", subsets.unipotents.size()},
      {"center", subsets.center.size()},       {"jacobson", subsets.jacobson.size()},
  };
  // Small subsets are listed in full.
  constexpr std::size_t kListLimit = 16;
  nlohmann::ordered_json listed = nlohmann::ordered_json::object();
  for (const auto& [name, set] : {std::pair{"nilpotents", &subsets.nilpotents}, std::pair{"idempotents", &subsets.idempotents},
                                  std::pair{"jacobson", &subsets.jacobson}})
    if (set->size() <= kListLimit) listed[name] = handle_list(ring, *set);
  j["elements"] = listed;

  nlohmann::ordered_json preds = nlohmann::ordered_json::object();
  for (auto p : kAllRingPredicates) preds[std::string(to_string(p))] = to_json(ring_predicate(ring, p, options.jobs), ring);
  j["predicates"] = preds;

  nlohmann::ordered_json structure;
  structure["NI"] = is_NI(ring);
  structure["nil_additively_closed"] = nil_additively_closed(ring);
  structure["weakly_2_primal"] = is_weakly_2_primal(ring);
  structure["nilpotence_index_bound"] = nilpotence_index_bound(ring);
  try {
    auto ug = unit_group_is_nilpotent(ring, options.unit_group_cap);
    structure["unit_group"] = {{"order", ug.unit_group_order},
                               {"nilpotent", ug.nilpotent},
                               {"lower_central_series", ug.series}};
    if (ug.nilpotent) structure["unit_group"]["class"] = ug.nilpotency_class;
  } catch (const CapExceeded& e) {
    structure["unit_group"] = {{"error", e.what()}};
  }
  j["structure"] = structure;

  if (!options.stable)
    j["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
  return j;
}

std::string report_markdown(const nlohmann::ordered_json& r) {
  std::ostringstream out;
  out << "# " << r["spec"].get<std::string>() << "\n\n";
  out << "| property | value |\n|---|---|\n";
  out << "| order | " << r["order"] << " |\n";
  out << "| characteristic | " << r["characteristic"] << " |\n";
  out << "| commutative | " << r["commutative"] << " |\n";
  for (const auto& [k, v] : r["subsets"].items()) out << "| \\|" << k << "\\| | " << v << " |\n";
  for (const auto& [k, v] : r["structure"].items())
    if (!v.is_object()) out << "| " << k << " | " << v << " |\n";
  const auto& ug = r["structure"]["unit_group"];
  if (ug.contains("error"))
    out << "| unit group | " << ug["error"].get<std::string>() << " |\n";
  else
    out << "| unit group nilpotent | " << ug["nilpotent"] << (ug.contains("class") ? " (class " + ug["class"].dump() + ")" : "")
        << " |\n";

  out << "\n| predicate | holds | counterexample |\n|---|---|---|\n";
  for (const auto& [k, v] : r["predicates"].items()) {
    out << "| " << k << " | " << v["holds"] << " | ";
    if (v.contains("counterexample")) out << "`" << v["counterexample"]["value"].get<std::string>() << "`";
    out << " |\n";
  }
  if (r.contains("timing")) out << "\ncomputed in " << r["timing"]["seconds"].get<double>() << " s\n";
  return out.str();
}

nlohmann::ordered_json decomposition_report(const FiniteRing& ring, Handle x, DecompositionKind kind) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["spec"] = ring.spec().to_string();
  j["element"] = element_json(ring, x);
  const auto result = decompose(ring, x, kind);
  if (const auto* c = std::get_if<Certificate>(&result)) {
    j["result"] = "certificate";
    j["certificate"] = to_json(*c);
    j["parts"] = {{"part_a", ring.format(c->part_a)}, {"part_b", ring.format(c->part_b)}};
    j["verified"] = verify_certificate(ring, *c).ok;
  } else {
    j["result"] = "exhaustive_failure";
    j["failure"] = to_json(std::get<ExhaustiveFailure>(result));
  }
  return j;
}

}  // namespace ringlab
