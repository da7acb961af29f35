#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/decompose.hpp"
#include "ringlab/finite_ring.hpp"

namespace ringlab {

/// n x n matrix over a base ring, entries row-major. The numeral sum entries[k] * |R|^k is the
/// matrix's handle in realize(M(n, R)).
struct SquareMatrix {
  std::size_t n = 0;
  std::vector<Handle> entries;

  Handle& at(std::size_t i, std::size_t j) { return entries[i * n + j]; }
  Handle at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;
};

/// Arithmetic in M_n(R) without materializing the matrix ring.
class MatrixAlgebra {
 public:
  MatrixAlgebra(const FiniteRing& ring, std::size_t n);

  const FiniteRing& ring() const { return ring_; }
  std::size_t size() const { return n_; }

  SquareMatrix zero() const;
  SquareMatrix identity() const;
  /// I + c E_ij.
  SquareMatrix transvection(std::size_t i, std::size_t j, Handle c) const;
  SquareMatrix add(const SquareMatrix& a, const SquareMatrix& b) const;
  SquareMatrix sub(const SquareMatrix& a, const SquareMatrix& b) const;
  SquareMatrix mul(const SquareMatrix& a, const SquareMatrix& b) const;
  SquareMatrix pow(const SquareMatrix& a, std::uint64_t k) const;
  bool is_zero(const SquareMatrix& a) const;

  /// Nilpotency index, or nullopt. Exact: an index never exceeds n^2 * log2|R| + 1.
  std::optional<std::uint64_t> nilpotency_index(const SquareMatrix& a) const;
  /// Multiplicative order if `a` is a unit. Walks at most `step_cap` powers; nullopt when `a` is
  /// not a unit or the cap is hit.
  std::optional<std::uint64_t> unit_order(const SquareMatrix& a, std::uint64_t step_cap = 10'000'000) const;

  /// Number of matrices, saturating at UINT64_MAX.
  std::uint64_t count() const;
  SquareMatrix decode(std::uint64_t index) const;
  std::uint64_t encode(const SquareMatrix& a) const;

  std::string format(const SquareMatrix& a) const;
  /// Parses sums, products and powers of `[[..],[..]]` literals, `I`, `E<ij>` and scalars c (read
  /// as c*I), e.g. `I+E12`, `2*I`, `(E12+E21)^2`. Throws ParseError.
  SquareMatrix parse(std::string_view text) const;

 private:
  const FiniteRing& ring_;
  std::size_t n_;
};

struct UnitPair {
  Handle u = 0;
  Handle v = 0;
};

/// Writes 1 = u + v with u, v units, smallest u first. Throws NoSolution.
UnitPair one_as_two_units(const FiniteRing& ring);

struct Similarity {
  SquareMatrix P, P_inv;
  SquareMatrix conjugated;  // P * M * P_inv
  std::string description;  // "identity", "permutation(...)", "transvection(...)", ...
  std::uint64_t tried = 0;  // conjugator candidates examined
};

struct SearchBudget {
  std::uint64_t similarity = 1'000'000;
  std::uint64_t fallback = 10'000'000;
};

/// First conjugator (identity, permutations, transvections I + cE_ij, then products of two
/// transvections) giving a non-zero leading (n-1) block and a non-zero (n,n) entry.
/// Requires n >= 2 and M != 0. Throws BudgetExhausted.
Similarity similarity_normalize(const MatrixAlgebra& alg, const SquareMatrix& m, std::uint64_t budget);

struct TraceStep {
  std::size_t level = 0;
  std::string method;      // "scalar", "exhaustive", "block", "fallback"
  std::string similarity;  // conjugator description for "block"
  std::optional<UnitPair> one_split;
  std::optional<Certificate> base_certificate;  // the (n,n) entry, or the n = 1 element
  std::uint64_t diagonal_exponent = 0;          // k * m for "block"
  std::uint64_t probes = 0;                     // candidates examined for exhaustive searches
};

struct MatrixDecomposition {
  SquareMatrix unit, nilpotent;
  std::uint64_t unit_order = 0;
  std::uint64_t nilpotency_index = 0;
  std::vector<TraceStep> trace;
};

/// Torsion unit + nilpotent decomposition of a non-zero matrix over a t-fine ring, by block
/// induction on n. |R| = 2 uses an exhaustive search over nilpotent parts; so does the fallback
/// when no conjugator is found within budget. `jobs` > 1 splits exhaustive searches across
/// threads without changing the result. Throws ZeroMatrix, BudgetExhausted, NotTFineBase.
MatrixDecomposition tfine_decompose_matrix(const MatrixAlgebra& alg, const SquareMatrix& m,
                                           const SearchBudget& budget = {}, unsigned jobs = 1);

/// Exhaustive search for N nilpotent with M - N a unit, smallest N first. nullopt when none
/// exists among the first `budget` candidates (`exhausted` reports whether all were examined).
std::optional<MatrixDecomposition> exhaustive_matrix_decomposition(const MatrixAlgebra& alg, const SquareMatrix& m,
                                                                   std::uint64_t budget, unsigned jobs = 1,
                                                                   bool* exhausted = nullptr);

/// Checks sum, torsion of the unit part and nilpotency of the nilpotent part by direct powering.
VerifyResult verify_matrix_decomposition(const MatrixAlgebra& alg, const SquareMatrix& m,
                                         const MatrixDecomposition& d);

}  // namespace ringlab
