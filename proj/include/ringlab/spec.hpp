#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ringlab {

/// Compositional description of a finite group.
struct GroupSpec {
  enum class Kind { Cyclic, DirectProduct, Dihedral, ExplicitTable };

  Kind kind = Kind::Cyclic;
  std::uint64_t n = 1;              // Cyclic order, or number of polygon vertices for Dihedral
  std::vector<GroupSpec> factors;   // DirectProduct
  std::string path;                 // ExplicitTable

  static GroupSpec cyclic(std::uint64_t n);
  static GroupSpec dihedral(std::uint64_t n);
  static GroupSpec product(std::vector<GroupSpec> factors);
  static GroupSpec table(std::string path);

  /// Canonical text form, e.g. `C2xC2`, `D3`, `Table(g.txt)`.
  std::string to_string() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Compositional description of a finite ring (abstract syntax; realize() builds it).
struct RingSpec {
  enum class Kind { ZMod, GaloisField, Matrix, UpperTriangular, Product, GroupRing, Quotient, EndAbelian };

  Kind kind = Kind::ZMod;
  std::uint64_t n = 0;                      // ZMod modulus, Matrix / UpperTriangular size
  std::uint64_t p = 0;                      // GaloisField characteristic
  std::uint64_t k = 0;                      // GaloisField degree
  std::vector<RingSpec> operands;           // inner ring(s)
  std::optional<GroupSpec> group;           // GroupRing
  std::vector<std::string> generators;      // Quotient, as element expressions over the inner ring
  std::vector<std::uint64_t> invariants;    // EndAbelian cyclic factor orders

  static RingSpec zmod(std::uint64_t n);
  static RingSpec galois_field(std::uint64_t p, std::uint64_t k = 1);
  static RingSpec matrix(std::uint64_t n, RingSpec inner);
  static RingSpec upper_triangular(std::uint64_t n, RingSpec inner);
  static RingSpec product(RingSpec left, RingSpec right);
  static RingSpec group_ring(RingSpec coeff, GroupSpec group);
  static RingSpec quotient(RingSpec inner, std::vector<std::string> generators);
  static RingSpec end_abelian(std::vector<std::uint64_t> invariants);

  /// Canonical text form accepted back by parse_ring_spec.
  std::string to_string() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/// Parses the ring grammar: `Z/4`, `GF(2,2)`, `M(2,GF(2))`, `UT(2,Z/4)`, `Prod(Z/2,Z/3)`,
/// `GR(Z/4,C2)`, `Quot(Z/8,[4])`, `End(Ab[2,2])`. Throws ParseError.
RingSpec parse_ring_spec(std::string_view text);

/// Parses `C<n>`, `D<n>`, `Table(<path>)` and `x`-separated direct products.
GroupSpec parse_group_spec(std::string_view text);

/// Splits on top-level commas (ignores commas nested in (), [], {}).
std::vector<std::string> split_top_level(std::string_view text, char sep = ',');

}  // namespace ringlab
