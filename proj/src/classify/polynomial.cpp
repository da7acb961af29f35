#include <algorithm>

#include "ringlab/classify.hpp"
#include "ringlab/errors.hpp"

namespace ringlab {

namespace {

using Poly = std::vector<Handle>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const FiniteRing& ring, const Poly& f, const Poly& g) {
  if (f.empty() || g.empty()) return {};
  Poly out(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] = ring.add(out[i + j], ring.mul(f[i], g[j]));
  trim(out);
  return out;
}

}  // namespace

PolyVerdict poly_element_periodic(const FiniteRing& ring, const std::vector<Handle>& coefficients,
                                  std::uint64_t exponent_bound) {
  if (!ring.is_commutative()) throw NotCommutative("poly_element_periodic needs a commutative coefficient ring");
  for (auto c : coefficients)
    if (!ring.contains(c)) throw InvalidSpec("polynomial coefficient out of range");
  Poly f = coefficients;
  trim(f);

  if (f.size() >= 2 && is_unit(ring, f.back()))
    return NotPeriodic{"leading coefficient " + ring.format(f.back()) +
                       " is a unit, so deg(f^k) = k deg(f) strictly increases"};

  const auto& nil = nilpotent_mask(ring);
  if (std::all_of(f.begin(), f.end(), [&](Handle c) { return nil[c] != 0; })) {
    // Nilpotent in R[t]: powers reach zero.
    Poly power = f;
    std::uint64_t k = 1;
    while (!power.empty()) {
      power = poly_mul(ring, power, f);
      ++k;
    }
    return Periodic{k, k + 1};
  }

  std::vector<Poly> powers{f};
  for (std::uint64_t n = 2; n <= exponent_bound; ++n) {
    powers.push_back(poly_mul(ring, powers.back(), f));
    for (std::uint64_t m = 1; m < n; ++m)
      if (powers[m - 1] == powers.back()) return Periodic{m, n};
  }
  return UnknownUpToBound{exponent_bound};
}

}  // namespace ringlab
