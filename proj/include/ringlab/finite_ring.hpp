#pragma once

#include <any>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <typeindex>
#include <unordered_map>
#include <vector>

#include "ringlab/spec.hpp"

namespace ringlab {

/// Canonical index of a ring element under the ring's fixed enumeration. 0 is the zero element.
using Handle = std::uint32_t;

/// Arithmetic of one concrete ring construction on handles 0..order()-1.
///
/// The element-expression hooks let the generic parser (see FiniteRing::parse_element) handle
/// structure-specific atoms: named symbols (`a`, `g2`), bracketed matrix literals and tuples.
class RingImpl {
 public:
  virtual ~RingImpl() = default;

  virtual std::size_t order() const = 0;
  virtual Handle one() const = 0;
  virtual Handle add(Handle a, Handle b) const = 0;
  virtual Handle neg(Handle a) const = 0;
  virtual Handle mul(Handle a, Handle b) const = 0;
  virtual std::string format(Handle a) const = 0;

  virtual std::optional<Handle> from_symbol(std::string_view name) const;
  virtual std::optional<Handle> from_brackets(const std::vector<std::vector<std::string>>& rows) const;
  virtual std::optional<Handle> from_tuple(const std::vector<std::string>& parts) const;
};

/// Type-keyed write-once cache attached to a ring; shared by copies of the same FiniteRing.
class AttachmentCache {
 public:
  /// Returns the cached value for `Tag`, computing it with `compute()` on first use. Concurrent
  /// first calls may both compute; the first stored result wins (computations are deterministic).
  template <class Tag, class F>
  const typename Tag::value_type& get(F&& compute) const {
    using T = typename Tag::value_type;
    {
      std::lock_guard lock(mutex_);
      auto it = slots_.find(typeid(Tag));
      if (it != slots_.end()) return *std::static_pointer_cast<const T>(it->second);
    }
    auto value = std::make_shared<const T>(compute());
    std::lock_guard lock(mutex_);
    auto [it, inserted] = slots_.emplace(typeid(Tag), value);
    return *std::static_pointer_cast<const T>(it->second);
  }

 private:
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::type_index, std::shared_ptr<const void>> slots_;
};

/// A realized finite ring: exact arithmetic on handles, characteristic and provenance spec.
///
/// Immutable after construction and cheap to copy. Operation tables are materialized when
/// order() <= kEagerTableLimit; above that every operation is delegated to the construction.
class FiniteRing {
 public:
  static constexpr std::size_t kEagerTableLimit = 4096;

  FiniteRing(std::shared_ptr<const RingImpl> impl, RingSpec spec);

  std::size_t order() const { return order_; }
  Handle zero() const { return 0; }
  Handle one() const { return one_; }
  std::uint64_t characteristic() const { return characteristic_; }
  const RingSpec& spec() const { return spec_; }
  bool tabulated() const { return tables_ != nullptr; }

  Handle add(Handle a, Handle b) const {
    return tables_ ? tables_->add[std::size_t(a) * order_ + b] : impl_->add(a, b);
  }
  Handle mul(Handle a, Handle b) const {
    return tables_ ? tables_->mul[std::size_t(a) * order_ + b] : impl_->mul(a, b);
  }
  Handle neg(Handle a) const { return tables_ ? tables_->neg[a] : impl_->neg(a); }
  Handle sub(Handle a, Handle b) const { return add(a, neg(b)); }

  /// Square-and-multiply; pow(x, 0) is one.
  Handle pow(Handle x, std::uint64_t k) const;
  /// k * 1 for any integer k (negative allowed).
  Handle from_integer(long long k) const;
  bool contains(Handle a) const { return a < order_; }
  bool is_commutative() const;

  std::string format(Handle a) const { return impl_->format(a); }

  /// Parses an element expression: sums/differences/products/powers of integer literals
  /// (meaning k*1), `#<handle>`, structure symbols, `[[..],[..]]` matrix literals and
  /// `(x,y)` tuples. Throws ParseError.
  Handle parse_element(std::string_view text) const;

  const RingImpl& impl() const { return *impl_; }
  /// The construction behind this ring, if it has concrete type T.
  template <class T>
  const T* structure() const {
    return dynamic_cast<const T*>(impl_.get());
  }

  const AttachmentCache& cache() const { return *cache_; }

  /// Element-wise equality of all operation tables.
  bool same_tables(const FiniteRing& other) const;

 private:
  struct Tables {
    std::vector<std::uint16_t> add, mul, neg;
  };

  std::shared_ptr<const RingImpl> impl_;
  RingSpec spec_;
  std::size_t order_ = 0;
  Handle one_ = 0;
  std::uint64_t characteristic_ = 0;
  std::shared_ptr<const Tables> tables_;
  std::shared_ptr<AttachmentCache> cache_;
};

/// Two-sided ideal as a sorted handle list.
struct Ideal {
  std::vector<Handle> elements;

  std::size_t size() const { return elements.size(); }
  bool contains(Handle x) const;
  friend bool operator==(const Ideal&, const Ideal&) = default;
};

/// Smallest two-sided ideal containing `generators` (fixed-point closure under +, -, and
/// left/right multiplication by every ring element).
Ideal ideal_closure(const FiniteRing& ring, const std::vector<Handle>& generators);

bool is_two_sided_ideal(const FiniteRing& ring, const std::vector<Handle>& subset);

struct AxiomCheck {
  bool ok = true;
  bool exhaustive = true;
  std::uint64_t triples_checked = 0;
  std::string failure;
};

/// Ring axioms on all triples for order <= exhaustive_limit, else on `samples` random triples.
AxiomCheck check_ring_axioms(const FiniteRing& ring, std::size_t exhaustive_limit = 64,
                             std::size_t samples = 10000, std::uint64_t seed = 1);

}  // namespace ringlab
