#include "ringlab/spec.hpp"

#include <cctype>
#include <charconv>

#include "ringlab/errors.hpp"

namespace ringlab {

GroupSpec GroupSpec::cyclic(std::uint64_t n) {
  GroupSpec g;
  g.kind = Kind::Cyclic;
  g.n = n;
  return g;
}

GroupSpec GroupSpec::dihedral(std::uint64_t n) {
  GroupSpec g;
  g.kind = Kind::Dihedral;
  g.n = n;
  return g;
}

GroupSpec GroupSpec::product(std::vector<GroupSpec> factors) {
  GroupSpec g;
  g.kind = Kind::DirectProduct;
  g.factors = std::move(factors);
  return g;
}

GroupSpec GroupSpec::table(std::string path) {
  GroupSpec g;
  g.kind = Kind::ExplicitTable;
  g.path = std::move(path);
  return g;
}

std::string GroupSpec::to_string() const {
  switch (kind) {
    case Kind::Cyclic:
      return "C" + std::to_string(n);
    case Kind::Dihedral:
      return "D" + std::to_string(n);
    case Kind::ExplicitTable:
      return "Table(" + path + ")";
    case Kind::DirectProduct: {
      std::string out;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += "x";
        out += factors[i].to_string();
      }
      return out;
    }
  }
  return {};
}

RingSpec RingSpec::zmod(std::uint64_t n) {
  RingSpec r;
  r.kind = Kind::ZMod;
  r.n = n;
  return r;
}

RingSpec RingSpec::galois_field(std::uint64_t p, std::uint64_t k) {
  RingSpec r;
  r.kind = Kind::GaloisField;
  r.p = p;
  r.k = k;
  return r;
}

RingSpec RingSpec::matrix(std::uint64_t n, RingSpec inner) {
  RingSpec r;
  r.kind = Kind::Matrix;
  r.n = n;
  r.operands.push_back(std::move(inner));
  return r;
}

RingSpec RingSpec::upper_triangular(std::uint64_t n, RingSpec inner) {
  RingSpec r;
  r.kind = Kind::UpperTriangular;
  r.n = n;
  r.operands.push_back(std::move(inner));
  return r;
}

RingSpec RingSpec::product(RingSpec left, RingSpec right) {
  RingSpec r;
  r.kind = Kind::Product;
  r.operands.push_back(std::move(left));
  r.operands.push_back(std::move(right));
  return r;
}

RingSpec RingSpec::group_ring(RingSpec coeff, GroupSpec group) {
  RingSpec r;
  r.kind = Kind::GroupRing;
  r.operands.push_back(std::move(coeff));
  r.group = std::move(group);
  return r;
}

RingSpec RingSpec::quotient(RingSpec inner, std::vector<std::string> generators) {
  RingSpec r;
  r.kind = Kind::Quotient;
  r.operands.push_back(std::move(inner));
  r.generators = std::move(generators);
  return r;
}

RingSpec RingSpec::end_abelian(std::vector<std::uint64_t> invariants) {
  RingSpec r;
  r.kind = Kind::EndAbelian;
  r.invariants = std::move(invariants);
  return r;
}

std::string RingSpec::to_string() const {
  switch (kind) {
    case Kind::ZMod:
      return "Z/" + std::to_string(n);
    case Kind::GaloisField:
      if (k == 1) return "GF(" + std::to_string(p) + ")";
      return "GF(" + std::to_string(p) + "," + std::to_string(k) + ")";
    case Kind::Matrix:
      return "M(" + std::to_string(n) + "," + operands.at(0).to_string() + ")";
    case Kind::UpperTriangular:
      return "UT(" + std::to_string(n) + "," + operands.at(0).to_string() + ")";
    case Kind::Product:
      return "Prod(" + operands.at(0).to_string() + "," + operands.at(1).to_string() + ")";
    case Kind::GroupRing:
      return "GR(" + operands.at(0).to_string() + "," + group->to_string() + ")";
    case Kind::Quotient: {
      std::string out = "Quot(" + operands.at(0).to_string() + ",[";
      for (std::size_t i = 0; i < generators.size(); ++i) {
        if (i) out += ",";
        out += generators[i];
      }
      return out + "])";
    }
    case Kind::EndAbelian: {
      std::string out = "End(Ab[";
      for (std::size_t i = 0; i < invariants.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(invariants[i]);
      }
      return out + "])";
    }
  }
  return {};
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string current;
  for (char c : text) {
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(std::move(current));
  return parts;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
  s = trim(s);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError("expected a non-negative integer for " + std::string(what) + ", got '" +
                     std::string(s) + "'");
  return value;
}

/// If `s` is `<head>(<body>)`, returns body.
std::optional<std::string_view> call_body(std::string_view s, std::string_view head) {
  if (s.size() < head.size() + 2 || s.substr(0, head.size()) != head) return std::nullopt;
  auto rest = trim(s.substr(head.size()));
  if (rest.empty() || rest.front() != '(' || rest.back() != ')') return std::nullopt;
  // the opening paren must close at the very end
  int depth = 0;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    if (rest[i] == '(') ++depth;
    if (rest[i] == ')') --depth;
    if (depth == 0 && i + 1 != rest.size()) return std::nullopt;
  }
  return rest.substr(1, rest.size() - 2);
}

std::vector<std::string> args_of(std::string_view body, std::size_t expected, std::string_view head) {
  auto args = split_top_level(body);
  if (args.size() != expected)
    throw ParseError(std::string(head) + " expects " + std::to_string(expected) + " arguments");
  return args;
}

std::string_view bracket_body(std::string_view s) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ParseError("expected a bracketed list, got '" + std::string(s) + "'");
  return s.substr(1, s.size() - 2);
}

GroupSpec parse_group_factor(std::string_view s) {
  s = trim(s);
  if (auto body = call_body(s, "Table")) return GroupSpec::table(std::string(trim(*body)));
  if (s.size() >= 2 && (s.front() == 'C' || s.front() == 'D')) {
    auto n = parse_uint(s.substr(1), "group order");
    if (n == 0) throw ParseError("group parameter must be positive");
    return s.front() == 'C' ? GroupSpec::cyclic(n) : GroupSpec::dihedral(n);
  }
  throw ParseError("unrecognized group '" + std::string(s) + "'");
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty group spec");
  auto factors = split_top_level(text, 'x');
  if (factors.size() == 1) return parse_group_factor(factors[0]);
  std::vector<GroupSpec> parsed;
  for (const auto& f : factors) parsed.push_back(parse_group_factor(f));
  return GroupSpec::product(std::move(parsed));
}

RingSpec parse_ring_spec(std::string_view text) {
  auto s = trim(text);
  if (s.empty()) throw ParseError("empty ring spec");

  if (s.substr(0, 2) == "Z/") return RingSpec::zmod(parse_uint(s.substr(2), "Z/n modulus"));

  if (auto body = call_body(s, "GF")) {
    auto args = split_top_level(*body);
    if (args.size() == 1) {
      // GF(q) with q = p^k a prime power is shorthand for GF(p,k).
      const std::uint64_t q = parse_uint(args[0], "GF order");
      for (std::uint64_t p = 2; p * p <= q; ++p) {
        if (q % p) continue;
        std::uint64_t k = 0, r = q;
        while (r % p == 0) r /= p, ++k;
        return RingSpec::galois_field(r == 1 ? p : q, r == 1 ? k : 1);
      }
      return RingSpec::galois_field(q, 1);
    }
    if (args.size() == 2)
      return RingSpec::galois_field(parse_uint(args[0], "GF prime"), parse_uint(args[1], "GF degree"));
    throw ParseError("GF expects 1 or 2 arguments");
  }
  if (auto body = call_body(s, "UT")) {
    auto args = args_of(*body, 2, "UT");
    return RingSpec::upper_triangular(parse_uint(args[0], "UT size"), parse_ring_spec(args[1]));
  }
  if (auto body = call_body(s, "M")) {
    auto args = args_of(*body, 2, "M");
    return RingSpec::matrix(parse_uint(args[0], "matrix size"), parse_ring_spec(args[1]));
  }
  if (auto body = call_body(s, "Prod")) {
    auto args = split_top_level(*body);
    if (args.size() < 2) throw ParseError("Prod expects at least 2 arguments");
    RingSpec acc = parse_ring_spec(args[0]);
    for (std::size_t i = 1; i < args.size(); ++i) acc = RingSpec::product(std::move(acc), parse_ring_spec(args[i]));
    return acc;
  }
  if (auto body = call_body(s, "GR")) {
    auto args = args_of(*body, 2, "GR");
    return RingSpec::group_ring(parse_ring_spec(args[0]), parse_group_spec(args[1]));
  }
  if (auto body = call_body(s, "Quot")) {
    auto args = args_of(*body, 2, "Quot");
    std::vector<std::string> gens;
    auto inside = trim(bracket_body(args[1]));
    if (!inside.empty())
      for (auto& g : split_top_level(inside)) gens.emplace_back(trim(g));
    return RingSpec::quotient(parse_ring_spec(args[0]), std::move(gens));
  }
  if (auto body = call_body(s, "End")) {
    auto inner = trim(*body);
    if (inner.substr(0, 2) != "Ab") throw ParseError("End expects Ab[...]");
    std::vector<std::uint64_t> inv;
    auto list = trim(bracket_body(inner.substr(2)));
    if (!list.empty())
      for (auto& q : split_top_level(list)) inv.push_back(parse_uint(q, "abelian invariant"));
    return RingSpec::end_abelian(std::move(inv));
  }
  throw ParseError("unrecognized ring spec '" + std::string(s) + "'");
}

}  // namespace ringlab
