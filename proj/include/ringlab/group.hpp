#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ringlab/spec.hpp"

namespace ringlab {

/// A finite group given by its Cayley table on indices 0..order-1. Index 0 is the identity.
class GroupTable {
 public:
  /// `table` is row-major, table[a * order + b] = a*b. Validates the group axioms exhaustively
  /// and relabels so the identity has index 0 (other elements keep their relative order).
  /// `check_associativity` may be cleared for tables built by trusted constructions.
  explicit GroupTable(std::vector<std::uint32_t> table, bool check_associativity = true);

  std::size_t order() const { return order_; }
  std::uint32_t identity() const { return 0; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a * order_ + b]; }
  std::uint32_t inverse(std::uint32_t a) const { return inverse_[a]; }
  std::uint32_t pow(std::uint32_t a, std::uint64_t k) const;
  std::uint64_t element_order(std::uint32_t a) const;
  bool is_abelian() const;

  const std::vector<std::uint32_t>& table() const { return table_; }

  friend bool operator==(const GroupTable&, const GroupTable&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
};

/// Builds the group for a spec. Cyclic(n): index k is g^k. Dihedral(n) (order 2n): index i + n*j
/// is r^i s^j. Direct products: lexicographic tuples, first factor most significant.
/// ExplicitTable: one row per line of space-separated 0-based indices.
GroupTable realize_group(const GroupSpec& spec, std::size_t max_order = 65536);

GroupTable read_group_table(const std::string& path);

/// Order of the group a spec describes, without building it (tables are read for ExplicitTable).
std::size_t group_order(const GroupSpec& spec);

/// Abstract finite group on local indices 0..size-1; used for unit groups that are not tabulated.
struct GroupOps {
  std::size_t size = 0;
  std::uint32_t identity = 0;
  std::function<std::uint32_t(std::uint32_t, std::uint32_t)> mul;
  std::function<std::uint32_t(std::uint32_t)> inverse;
};

GroupOps group_ops(const GroupTable& g);

/// Membership mask of the subgroup generated by `gens`.
std::vector<char> subgroup_closure(const GroupOps& g, const std::vector<std::uint32_t>& gens);

/// A small generating set, chosen greedily in index order.
std::vector<std::uint32_t> generating_set(const GroupOps& g);

struct LowerCentralSeries {
  std::vector<std::size_t> sizes;  // |gamma_1| = |G|, |gamma_2|, ... until it stabilizes
  bool nilpotent = false;
  std::size_t nilpotency_class = 0;  // meaningful when nilpotent; 0 for the trivial group
};

/// gamma_{i+1} = [gamma_i, G], computed as the normal closure of commutators of generators.
LowerCentralSeries lower_central_series(const GroupOps& g);

/// True when |G| is a power of a prime p (p returned through `prime`); the trivial group counts.
bool is_p_group(std::size_t order, std::uint64_t* prime = nullptr);

}  // namespace ringlab
