#include "ringlab/group.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "ringlab/errors.hpp"

namespace ringlab {

namespace {

std::size_t isqrt_exact(std::size_t n) {
  std::size_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n ? r : 0;
}

std::vector<std::uint32_t> product_table(const GroupTable& a, const GroupTable& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::uint32_t> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto l = a.mul(static_cast<std::uint32_t>(x / nb), static_cast<std::uint32_t>(y / nb));
      auto r = b.mul(static_cast<std::uint32_t>(x % nb), static_cast<std::uint32_t>(y % nb));
      t[x * n + y] = static_cast<std::uint32_t>(l * nb + r);
    }
  return t;
}

}  // namespace

GroupTable::GroupTable(std::vector<std::uint32_t> table, bool check_associativity) {
  const std::size_t n = isqrt_exact(table.size());
  if (n == 0) throw InvalidSpec("group table must be a non-empty square");
  for (auto v : table)
    if (v >= n) throw InvalidSpec("group table entry out of range");

  std::size_t e = n;
  for (std::size_t a = 0; a < n && e == n; ++a) {
    bool is_identity = true;
    for (std::size_t b = 0; b < n && is_identity; ++b)
      is_identity = table[a * n + b] == b && table[b * n + a] == b;
    if (is_identity) e = a;
  }
  if (e == n) throw InvalidSpec("group table has no identity");

  // relabel: identity first, remaining elements in original order
  std::vector<std::uint32_t> to_new(n), to_old;
  to_old.push_back(static_cast<std::uint32_t>(e));
  for (std::size_t a = 0; a < n; ++a)
    if (a != e) to_old.push_back(static_cast<std::uint32_t>(a));
  for (std::size_t i = 0; i < n; ++i) to_new[to_old[i]] = static_cast<std::uint32_t>(i);

  order_ = n;
  table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table_[a * n + b] = to_new[table[to_old[a] * n + to_old[b]]];

  if (check_associativity)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw InvalidSpec("group table is not associative");

  inverse_.assign(n, static_cast<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      if (mul(a, b) == 0 && mul(b, a) == 0) {
        inverse_[a] = b;
        break;
      }
  for (auto inv : inverse_)
    if (inv == n) throw InvalidSpec("group table has an element without inverse");
}

std::uint32_t GroupTable::pow(std::uint32_t a, std::uint64_t k) const {
  std::uint32_t result = 0, base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::uint64_t GroupTable::element_order(std::uint32_t a) const {
  std::uint64_t k = 1;
  for (std::uint32_t x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

bool GroupTable::is_abelian() const {
  for (std::uint32_t a = 0; a < order_; ++a)
    for (std::uint32_t b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

GroupTable read_group_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group table '" + path + "'");
  std::vector<std::uint32_t> flat;
  std::size_t rows = 0, width = 0;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::uint32_t> row;
    long long v;
    while (ls >> v) {
      if (v < 0) throw ParseError("negative index in group table");
      row.push_back(static_cast<std::uint32_t>(v));
    }
    if (!ls.eof()) throw ParseError("non-integer token in group table '" + path + "'");
    if (row.empty()) continue;
    if (rows == 0) width = row.size();
    if (row.size() != width) throw ParseError("ragged group table '" + path + "'");
    flat.insert(flat.end(), row.begin(), row.end());
    ++rows;
  }
  if (rows != width) throw ParseError("group table '" + path + "' is not square");
  return GroupTable(std::move(flat));
}

std::size_t group_order(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic:
      return spec.n;
    case GroupSpec::Kind::Dihedral:
      return 2 * spec.n;
    case GroupSpec::Kind::DirectProduct: {
      std::size_t n = 1;
      for (const auto& f : spec.factors) {
        auto m = group_order(f);
        if (m != 0 && n > static_cast<std::size_t>(-1) / m) return static_cast<std::size_t>(-1);
        n *= m;
      }
      return n;
    }
    case GroupSpec::Kind::ExplicitTable:
      return read_group_table(spec.path).order();
  }
  return 0;
}

GroupTable realize_group(const GroupSpec& spec, std::size_t max_order) {
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic: {
      if (spec.n == 0) throw InvalidSpec("cyclic group order must be positive");
      if (spec.n > max_order) throw OrderCapExceeded("group C" + std::to_string(spec.n) + " exceeds cap");
      const std::size_t n = spec.n;
      std::vector<std::uint32_t> t(n * n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<std::uint32_t>((a + b) % n);
      return GroupTable(std::move(t), false);
    }
    case GroupSpec::Kind::Dihedral: {
      if (spec.n == 0) throw InvalidSpec("dihedral parameter must be positive");
      if (2 * spec.n > max_order) throw OrderCapExceeded("group D" + std::to_string(spec.n) + " exceeds cap");
      // r^i s^j with s r s = r^-1: (r^i s^j)(r^k s^l) = r^(i + (-1)^j k) s^(j+l)
      const std::size_t n = spec.n, order = 2 * n;
      std::vector<std::uint32_t> t(order * order);
      for (std::size_t x = 0; x < order; ++x)
        for (std::size_t y = 0; y < order; ++y) {
          std::size_t i = x % n, j = x / n, k = y % n, l = y / n;
          std::size_t rot = j == 0 ? (i + k) % n : (i + n - k) % n;
          t[x * order + y] = static_cast<std::uint32_t>(rot + n * ((j + l) % 2));
        }
      return GroupTable(std::move(t), false);
    }
    case GroupSpec::Kind::DirectProduct: {
      if (spec.factors.empty()) throw InvalidSpec("empty direct product");
      GroupTable acc = realize_group(spec.factors[0], max_order);
      for (std::size_t i = 1; i < spec.factors.size(); ++i) {
        GroupTable next = realize_group(spec.factors[i], max_order);
        if (acc.order() * next.order() > max_order) throw OrderCapExceeded("group product exceeds cap");
        acc = GroupTable(product_table(acc, next), false);
      }
      return acc;
    }
    case GroupSpec::Kind::ExplicitTable: {
      GroupTable g = read_group_table(spec.path);
      if (g.order() > max_order) throw OrderCapExceeded("group table exceeds cap");
      return g;
    }
  }
  throw InvalidSpec("unknown group kind");
}

GroupOps group_ops(const GroupTable& g) {
  const GroupTable* table = &g;
  return GroupOps{g.order(), 0, [table](std::uint32_t a, std::uint32_t b) { return table->mul(a, b); },
                  [table](std::uint32_t a) { return table->inverse(a); }};
}

std::vector<char> subgroup_closure(const GroupOps& g, const std::vector<std::uint32_t>& gens) {
  std::vector<char> member(g.size, 0);
  std::vector<std::uint32_t> frontier{g.identity};
  member[g.identity] = 1;
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    for (auto s : gens) {
      auto y = g.mul(frontier[i], s);
      if (!member[y]) {
        member[y] = 1;
        frontier.push_back(y);
      }
    }
  }
  return member;
}

std::vector<std::uint32_t> generating_set(const GroupOps& g) {
  std::vector<std::uint32_t> gens;
  std::vector<char> member(g.size, 0);
  member[g.identity] = 1;
  std::size_t covered = 1;
  for (std::uint32_t x = 0; x < g.size && covered < g.size; ++x) {
    if (member[x]) continue;
    gens.push_back(x);
    member = subgroup_closure(g, gens);
    covered = static_cast<std::size_t>(std::count(member.begin(), member.end(), 1));
  }
  return gens;
}

namespace {

std::uint32_t commutator(const GroupOps& g, std::uint32_t a, std::uint32_t b) {
  return g.mul(g.mul(g.inverse(a), g.inverse(b)), g.mul(a, b));
}

/// Generators of the normal closure of `gens` under conjugation by `conj`.
std::vector<std::uint32_t> normal_closure(const GroupOps& g, std::vector<std::uint32_t> gens,
                                          const std::vector<std::uint32_t>& conj, std::vector<char>& member) {
  member = subgroup_closure(g, gens);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (auto y : conj) {
        auto c = g.mul(g.mul(g.inverse(y), gens[i]), y);
        if (!member[c]) {
          gens.push_back(c);
          member = subgroup_closure(g, gens);
          grew = true;
        }
      }
  }
  return gens;
}

}  // namespace

LowerCentralSeries lower_central_series(const GroupOps& g) {
  LowerCentralSeries out;
  auto whole = generating_set(g);
  std::vector<std::uint32_t> current = whole;
  std::size_t size = g.size;
  out.sizes.push_back(size);
  while (size > 1) {
    std::vector<std::uint32_t> comms;
    for (auto a : current)
      for (auto b : whole) {
        auto c = commutator(g, a, b);
        if (c != g.identity) comms.push_back(c);
      }
    std::vector<char> member;
    auto next = normal_closure(g, comms, whole, member);
    std::size_t next_size = static_cast<std::size_t>(std::count(member.begin(), member.end(), 1));
    if (next_size == size) break;
    out.sizes.push_back(next_size);
    size = next_size;
    current = std::move(next);
  }
  out.nilpotent = size == 1;
  out.nilpotency_class = out.nilpotent ? out.sizes.size() - 1 : 0;
  return out;
}

bool is_p_group(std::size_t order, std::uint64_t* prime) {
  if (order == 1) {
    if (prime) *prime = 1;
    return true;
  }
  std::uint64_t p = 2;
  while (order % p != 0) ++p;
  std::size_t rest = order;
  while (rest % p == 0) rest /= p;
  if (prime) *prime = p;
  return rest == 1;
}

}  // namespace ringlab
