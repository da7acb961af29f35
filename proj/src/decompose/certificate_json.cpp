#include <json.hpp>

#include "ringlab/decompose.hpp"
#include "ringlab/errors.hpp"

namespace ringlab {

namespace {

nlohmann::ordered_json witness_json(const Witness& w) {
  nlohmann::ordered_json j;
  j["role"] = std::string(to_string(w.role));
  switch (w.role) {
    case Role::Periodic:
      j["m"] = w.first;
      j["n"] = w.second;
      break;
    case Role::Potent:
      j["n"] = w.first;
      break;
    case Role::Nilpotent:
      j["index"] = w.first;
      break;
    case Role::Unit:
    case Role::TorsionUnit:
      j["order"] = w.first;
      break;
    case Role::Idempotent:
      break;
  }
  return j;
}

Witness witness_from(const nlohmann::json& j) {
  auto role = role_from_string(j.at("role").get<std::string>());
  if (!role) throw ParseError("unknown witness role " + j.at("role").dump());
  Witness w{*role, 0, 0};
  switch (*role) {
    case Role::Periodic:
      w.first = j.at("m").get<std::uint64_t>();
      w.second = j.at("n").get<std::uint64_t>();
      break;
    case Role::Potent:
      w.first = j.at("n").get<std::uint64_t>();
      break;
    case Role::Nilpotent:
      w.first = j.at("index").get<std::uint64_t>();
      break;
    case Role::Unit:
    case Role::TorsionUnit:
      w.first = j.at("order").get<std::uint64_t>();
      break;
    case Role::Idempotent:
      break;
  }
  return w;
}

DecompositionKind kind_from(const nlohmann::json& j) {
  auto kind = decomposition_kind_from_string(j.at("kind").get<std::string>());
  if (!kind) throw ParseError("unknown decomposition kind " + j.at("kind").dump());
  return *kind;
}

}  // namespace

nlohmann::ordered_json to_json(const Certificate& c) {
  nlohmann::ordered_json j;
  j["kind"] = std::string(to_string(c.kind));
  j["target"] = c.target;
  j["part_a"] = c.part_a;
  j["part_b"] = c.part_b;
  j["witnesses"] = {{"part_a", witness_json(c.witness_a)}, {"part_b", witness_json(c.witness_b)}};
  j["commuting"] = c.commuting;
  return j;
}

nlohmann::ordered_json to_json(const ExhaustiveFailure& f) {
  nlohmann::ordered_json j;
  j["kind"] = std::string(to_string(f.kind));
  j["target"] = f.target;
  j["search_space_size"] = f.search_space_size;
  j["enumerated"] = f.enumerated;
  return j;
}

nlohmann::ordered_json to_json(const PredicateResult& r, const FiniteRing& ring) {
  nlohmann::ordered_json j;
  j["holds"] = r.holds;
  j["checked"] = r.checked;
  if (r.counterexample)
    j["counterexample"] = {{"handle", *r.counterexample}, {"value", ring.format(*r.counterexample)}};
  if (r.failure) j["failure"] = to_json(*r.failure);
  return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
  try {
    Certificate c;
    c.kind = kind_from(j);
    c.target = j.at("target").get<Handle>();
    c.part_a = j.at("part_a").get<Handle>();
    c.part_b = j.at("part_b").get<Handle>();
    c.witness_a = witness_from(j.at("witnesses").at("part_a"));
    c.witness_b = witness_from(j.at("witnesses").at("part_b"));
    c.commuting = j.at("commuting").get<bool>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
}

ExhaustiveFailure failure_from_json(const nlohmann::json& j) {
  try {
    ExhaustiveFailure f;
    f.kind = kind_from(j);
    f.target = j.at("target").get<Handle>();
    f.search_space_size = j.at("search_space_size").get<std::uint64_t>();
    f.enumerated = j.at("enumerated").get<std::uint64_t>();
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed failure record: ") + e.what());
  }
}

}  // namespace ringlab
