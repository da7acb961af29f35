#include "ringlab/harness/oracles.hpp"

#include <algorithm>
#include <numeric>

#include "ringlab/errors.hpp"

namespace ringlab::oracle {

std::vector<Handle> nilpotents(const FiniteRing& ring) {
  std::vector<Handle> out;
  for (Handle x = 0; x < ring.order(); ++x) {
    Handle y = x;
    for (std::size_t k = 1; k <= ring.order() && y != 0; ++k) y = ring.mul(y, x);
    if (y == 0) out.push_back(x);
  }
  return out;
}

std::vector<Handle> units(const FiniteRing& ring) {
  std::vector<Handle> out;
  for (Handle x = 0; x < ring.order(); ++x)
    for (Handle y = 0; y < ring.order(); ++y)
      if (ring.mul(x, y) == ring.one() && ring.mul(y, x) == ring.one()) {
        out.push_back(x);
        break;
      }
  return out;
}

std::vector<Handle> idempotents(const FiniteRing& ring) {
  std::vector<Handle> out;
  for (Handle x = 0; x < ring.order(); ++x)
    if (ring.mul(x, x) == x) out.push_back(x);
  return out;
}

namespace {

std::optional<Handle> sum_counterexample(const FiniteRing& ring, const std::vector<Handle>& first, Handle start) {
  const auto nil = nilpotents(ring);
  std::vector<char> is_nil(ring.order(), 0);
  for (Handle x : nil) is_nil[x] = 1;
  for (Handle x = start; x < ring.order(); ++x) {
    const bool ok = std::any_of(first.begin(), first.end(), [&](Handle a) { return is_nil[ring.sub(x, a)] != 0; });
    if (!ok) return x;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Handle> tfine_counterexample(const FiniteRing& ring) { return sum_counterexample(ring, units(ring), 1); }

std::optional<Handle> nil_clean_counterexample(const FiniteRing& ring) {
  return sum_counterexample(ring, idempotents(ring), 0);
}

bool is_field(const FiniteRing& ring) {
  for (Handle a = 0; a < ring.order(); ++a)
    for (Handle b = 0; b < ring.order(); ++b)
      if (ring.mul(a, b) != ring.mul(b, a)) return false;
  return units(ring).size() + 1 == ring.order();
}

std::vector<Handle> jacobson_by_maximal_left_ideals(const FiniteRing& ring) {
  const std::size_t n = ring.order();
  if (n > 16) throw CapExceeded("maximal left ideal enumeration is limited to order 16");
  using Mask = std::uint32_t;
  const Mask full = (Mask{1} << n) - 1;
  auto is_left_ideal = [&](Mask s) {
    if (!(s & 1)) return false;
    for (Handle x = 0; x < n; ++x) {
      if (!(s >> x & 1)) continue;
      for (Handle y = 0; y < n; ++y) {
        if ((s >> y & 1) && !(s >> ring.add(x, y) & 1)) return false;
        if (!(s >> ring.mul(y, x) & 1)) return false;
      }
    }
    return true;
  };
  std::vector<Mask> proper;
  for (Mask s = 1; s < full; ++s)
    if (is_left_ideal(s)) proper.push_back(s);
  Mask meet = full;
  for (Mask s : proper) {
    const bool maximal = std::none_of(proper.begin(), proper.end(), [&](Mask t) { return t != s && (t & s) == s; });
    if (maximal) meet &= s;
  }
  std::vector<Handle> out;
  for (Handle x = 0; x < n; ++x)
    if (meet >> x & 1) out.push_back(x);
  return out;
}

std::uint64_t count_additive_endomorphisms(const std::vector<std::uint64_t>& q) {
  const std::size_t k = q.size();
  const std::uint64_t size = std::accumulate(q.begin(), q.end(), std::uint64_t{1}, std::multiplies<>());
  auto coords = [&](std::uint64_t x) {
    std::vector<std::uint64_t> c(k);
    for (std::size_t i = 0; i < k; ++i) {
      c[i] = x % q[i];
      x /= q[i];
    }
    return c;
  };
  auto index = [&](const std::vector<std::uint64_t>& c) {
    std::uint64_t x = 0;
    for (std::size_t i = k; i-- > 0;) x = x * q[i] + c[i] % q[i];
    return x;
  };
  auto plus = [&](std::uint64_t a, std::uint64_t b) {
    auto ca = coords(a), cb = coords(b);
    for (std::size_t i = 0; i < k; ++i) ca[i] += cb[i];
    return index(ca);
  };

  std::uint64_t tuples = 1;
  for (std::size_t i = 0; i < k; ++i) tuples *= size;
  std::uint64_t count = 0;
  for (std::uint64_t t = 0; t < tuples; ++t) {
    std::vector<std::uint64_t> image(k);
    for (std::uint64_t r = t, i = 0; i < k; ++i, r /= size) image[i] = r % size;
    // f(sum a_i e_i) = sum a_i f(e_i) with representatives 0 <= a_i < q_i.
    std::vector<std::uint64_t> f(size);
    for (std::uint64_t x = 0; x < size; ++x) {
      const auto c = coords(x);
      std::uint64_t y = 0;
      for (std::size_t i = 0; i < k; ++i)
        for (std::uint64_t rep = 0; rep < c[i]; ++rep) y = plus(y, image[i]);
      f[x] = y;
    }
    bool additive = true;
    for (std::uint64_t x = 0; x < size && additive; ++x)
      for (std::uint64_t y = 0; y < size && additive; ++y) additive = f[plus(x, y)] == plus(f[x], f[y]);
    count += additive;
  }
  return count;
}

namespace {

struct IsoState {
  std::vector<long> phi;
  std::vector<char> used;
  std::vector<Handle> assigned;
};

bool extend(const FiniteRing& a, const FiniteRing& b, IsoState& st, Handle x0, Handle y0) {
  std::vector<std::pair<Handle, Handle>> queue{{x0, y0}};
  while (!queue.empty()) {
    auto [x, y] = queue.back();
    queue.pop_back();
    if (st.phi[x] >= 0) {
      if (st.phi[x] != static_cast<long>(y)) return false;
      continue;
    }
    if (st.used[y]) return false;
    st.phi[x] = y;
    st.used[y] = 1;
    st.assigned.push_back(x);
    for (Handle z : st.assigned) {
      const Handle w = static_cast<Handle>(st.phi[z]);
      queue.emplace_back(a.add(x, z), b.add(y, w));
      queue.emplace_back(a.mul(x, z), b.mul(y, w));
      queue.emplace_back(a.mul(z, x), b.mul(w, y));
    }
  }
  return true;
}

bool search(const FiniteRing& a, const FiniteRing& b, IsoState& st) {
  if (st.assigned.size() == a.order()) return true;
  Handle x = 0;
  while (st.phi[x] >= 0) ++x;
  for (Handle y = 0; y < b.order(); ++y) {
    if (st.used[y]) continue;
    IsoState next = st;
    if (extend(a, b, next, x, y) && search(a, b, next)) {
      st = std::move(next);
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<Handle>> find_isomorphism(const FiniteRing& a, const FiniteRing& b) {
  if (a.order() != b.order()) return std::nullopt;
  IsoState st{std::vector<long>(a.order(), -1), std::vector<char>(b.order(), 0), {}};
  if (!extend(a, b, st, a.zero(), b.zero()) || !extend(a, b, st, a.one(), b.one())) return std::nullopt;
  if (!search(a, b, st)) return std::nullopt;
  std::vector<Handle> out(a.order());
  for (Handle x = 0; x < a.order(); ++x) out[x] = static_cast<Handle>(st.phi[x]);
  return out;
}

}  // namespace ringlab::oracle
