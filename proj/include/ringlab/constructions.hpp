#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/finite_ring.hpp"
#include "ringlab/group.hpp"
#include "ringlab/spec.hpp"

namespace ringlab {

inline constexpr std::size_t kDefaultMaxOrder = 65536;

/// Builds a ring from its spec. Throws OrderCapExceeded, InvalidSpec, ParseError.
FiniteRing realize(const RingSpec& spec, std::size_t max_order = kDefaultMaxOrder);
FiniteRing realize(std::string_view spec_text, std::size_t max_order = kDefaultMaxOrder);

/// Quotient by the two-sided ideal generated by `generators`; coset representatives are the
/// smallest handles of their cosets, numbered in increasing order.
FiniteRing quotient(const FiniteRing& ring, const std::vector<Handle>& generators);

/// End(Z_{q1} + ... + Z_{qk}) for prime powers q_i.
FiniteRing end_abelian(const std::vector<std::uint64_t>& invariants, std::size_t max_order = kDefaultMaxOrder);

/// Lexicographically smallest (low degree first) monic irreducible of degree k over Z/p,
/// returned as k+1 coefficients c0..ck with ck = 1.
std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, std::uint64_t k);

bool is_prime(std::uint64_t n);

// Concrete constructions. Handles are mixed-radix numerals, least significant digit first,
// unless stated otherwise.

class ZModRing final : public RingImpl {
 public:
  explicit ZModRing(std::uint64_t n);
  std::size_t order() const override { return n_; }
  Handle one() const override { return 1 % n_; }
  Handle add(Handle a, Handle b) const override;
  Handle neg(Handle a) const override;
  Handle mul(Handle a, Handle b) const override;
  std::string format(Handle a) const override;

 private:
  std::uint64_t n_;
};

/// GF(p^k) as Z/p[a]/(f); handle = sum c_i p^i.
class GaloisFieldRing final : public RingImpl {
 public:
  GaloisFieldRing(std::uint64_t p, std::uint64_t k);
  std::size_t order() const override { return order_; }
  Handle one() const override { return 1; }
  Handle add(Handle a, Handle b) const override;
  Handle neg(Handle a) const override;
  Handle mul(Handle a, Handle b) const override;
  std::string format(Handle a) const override;
  std::optional<Handle> from_symbol(std::string_view name) const override;

  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  std::vector<std::uint64_t> coefficients(Handle a) const;
  Handle from_coefficients(const std::vector<std::uint64_t>& c) const;

 private:
  std::uint64_t p_, k_;
  std::size_t order_;
  std::vector<std::uint64_t> modulus_;
};

/// Dense n x n matrices over `inner`; entries row-major, entry (0,0) least significant.
class MatrixRing final : public RingImpl {
 public:
  MatrixRing(std::size_t n, FiniteRing inner);
  std::size_t order() const override { return order_; }
  Handle one() const override { return one_; }
  Handle add(Handle a, Handle b) const override;
  Handle neg(Handle a) const override;
  Handle mul(Handle a, Handle b) const override;
  std::string format(Handle a) const override;
  std::optional<Handle> from_symbol(std::string_view name) const override;
  std::optional<Handle> from_brackets(const std::vector<std::vector<std::string>>& rows) const override;

  std::size_t size() const { return n_; }
  const FiniteRing& inner() const { return inner_; }
  std::vector<Handle> entries(Handle a) const;
  Handle encode(const std::vector<Handle>& entries) const;

 private:
  std::size_t n_;
  FiniteRing inner_;
  std::size_t order_;
  Handle one_;
};

/// Upper triangular n x n matrices; digits are the upper-triangle entries in row-major order.
class UpperTriangularRing final : public RingImpl {
 public:
  UpperTriangularRing(std::size_t n, FiniteRing inner);
  std::size_t order() const override { return order_; }
  Handle one() const override { return one_; }
  Handle add(Handle a, Handle b) const override;
  Handle neg(Handle a) const override;
  Handle mul(Handle a, Handle b) const override;
  std::string format(Handle a) const override;
  std::optional<Handle> from_symbol(std::string_view name) const override;
  std::optional<Handle> from_brackets(const std::vector<std::vector<std::string>>& rows) const override;

  std::size_t size() const { return n_; }
  const FiniteRing& inner() const { return inner_; }
  /// Full n x n entry list (zeros below the diagonal).
  std::vector<Handle> entries(Handle a) const;
  Handle encode(const std::vector<Handle>& entries) const;

 private:
  std::size_t n_;
  FiniteRing inner_;
  std::size_t order_;
  Handle one_;
};

/// R x S; handle = r * |S| + s (lexicographic, first component most significant).
class ProductRing final : public RingImpl {
 public:
  ProductRing(FiniteRing left, FiniteRing right);
  std::size_t order() const override { return left_.order() * right_.order(); }
  Handle one() const override { return pair(left_.one(), right_.one()); }
  Handle add(Handle a, Handle b) const override;
  Handle neg(Handle a) const override;
  Handle mul(Handle a, Handle b) const override;
  std::string format(Handle a) const override;
  std::optional<Handle> from_tuple(const std::vector<std::string>& parts) const override;

  const FiniteRing& left() const { return left_; }
  const FiniteRing& right() const { return right_; }
  Handle pair(Handle l, Handle r) const { return static_cast<Handle>(std::size_t(l) * right_.order() + r); }
  Handle left_of(Handle a) const { return static_cast<Handle>(a / right_.order()); }
  Handle right_of(Handle a) const { return static_cast<Handle>(a % right_.order()); }

 private:
  FiniteRing left_, right_;
};

/// RG with coefficient vectors indexed by the group's element order; multiplication is
/// convolution over the group table.
class GroupRingRing final : public RingImpl {
 public:
  GroupRingRing(FiniteRing coeff, GroupTable group);
  std::size_t order() const override { return order_; }
  Handle one() const override { return embed_scalar(coeff_.one()); }
  Handle add(Handle a, Handle b) const override;
  Handle neg(Handle a) const override;
  Handle mul(Handle a, Handle b) const override;
  std::string format(Handle a) const override;
  /// `g` is group element 1, `g<i>` is group element i; other names resolve in the
  /// coefficient ring and embed as scalars.
  std::optional<Handle> from_symbol(std::string_view name) const override;

  const FiniteRing& coefficients() const { return coeff_; }
  const GroupTable& group() const { return group_; }
  std::vector<Handle> coefficient_vector(Handle a) const;
  Handle encode(const std::vector<Handle>& coeffs) const;
  Handle coefficient(Handle a, std::uint32_t g) const;
  Handle embed_scalar(Handle c) const;
  Handle embed_group_element(std::uint32_t g) const;

 private:
  FiniteRing coeff_;
  GroupTable group_;
  std::size_t order_;
};

/// R / I on smallest coset representatives.
class QuotientRing final : public RingImpl {
 public:
  QuotientRing(FiniteRing inner, Ideal ideal);
  std::size_t order() const override { return representatives_.size(); }
  Handle one() const override { return project(inner_.one()); }
  Handle add(Handle a, Handle b) const override;
  Handle neg(Handle a) const override;
  Handle mul(Handle a, Handle b) const override;
  std::string format(Handle a) const override;
  std::optional<Handle> from_symbol(std::string_view name) const override;
  std::optional<Handle> from_brackets(const std::vector<std::vector<std::string>>& rows) const override;
  std::optional<Handle> from_tuple(const std::vector<std::string>& parts) const override;

  const FiniteRing& inner() const { return inner_; }
  const Ideal& ideal() const { return ideal_; }
  Handle project(Handle inner_element) const { return coset_of_[inner_element]; }
  Handle representative(Handle a) const { return representatives_[a]; }

 private:
  FiniteRing inner_;
  Ideal ideal_;
  std::vector<Handle> coset_of_;
  std::vector<Handle> representatives_;
};

/// End(G), G = Z_{q_1} + ... + Z_{q_k}. An endomorphism is its image matrix a[j][i] (component j
/// of the image of generator i), with a[j][i] a multiple of q_j / gcd(q_i, q_j). Digit (j,i) is
/// a[j][i] / (q_j / gcd), row-major, least significant first. Multiplication is composition.
class EndomorphismRing final : public RingImpl {
 public:
  explicit EndomorphismRing(std::vector<std::uint64_t> invariants);
  std::size_t order() const override { return order_; }
  Handle one() const override { return one_; }
  Handle add(Handle a, Handle b) const override;
  Handle neg(Handle a) const override;
  Handle mul(Handle a, Handle b) const override;
  std::string format(Handle a) const override;
  std::optional<Handle> from_brackets(const std::vector<std::vector<std::string>>& rows) const override;

  const std::vector<std::uint64_t>& invariants() const { return q_; }
  /// Image matrix a[j][i], row-major.
  std::vector<std::uint64_t> image_matrix(Handle a) const;
  Handle encode(const std::vector<std::uint64_t>& image) const;

 private:
  std::vector<std::uint64_t> q_;
  std::vector<std::uint64_t> step_, radix_;  // per (j,i)
  std::size_t order_;
  Handle one_;
};

}  // namespace ringlab
