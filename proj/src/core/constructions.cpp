#include "ringlab/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "ringlab/errors.hpp"

namespace ringlab {

namespace {

using Poly = std::vector<std::uint64_t>;  // low degree first

std::size_t checked_pow(std::size_t base, std::size_t exp, std::size_t cap, const std::string& what) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (result > cap / base) throw OrderCapExceeded(what + " exceeds order cap " + std::to_string(cap));
    result *= base;
  }
  return result;
}

std::string trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

/// Remainder of f modulo monic g over Z/p.
Poly poly_mod(Poly f, const Poly& g, std::uint64_t p) {
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::uint64_t lead = f.back() % p;
    const std::size_t shift = f.size() - 1 - dg;
    if (lead)
      for (std::size_t i = 0; i <= dg; ++i) f[shift + i] = (f[shift + i] + (p - lead) * g[i]) % p;
    f.pop_back();
  }
  return f;
}

bool divides_monic(const Poly& g, const Poly& f, std::uint64_t p) {
  auto r = poly_mod(f, g, p);
  return std::all_of(r.begin(), r.end(), [](std::uint64_t c) { return c == 0; });
}

bool is_irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t k = f.size() - 1;
  for (std::size_t d = 1; d <= k / 2; ++d) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::size_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      g[d] = 1;
      std::size_t c = code;
      for (std::size_t i = 0; i < d; ++i, c /= p) g[i] = c % p;
      if (divides_monic(g, f, p)) return false;
    }
  }
  return true;
}

std::vector<Handle> parse_entries_in(const FiniteRing& ring, const std::vector<std::string>& items) {
  std::vector<Handle> out;
  out.reserve(items.size());
  for (const auto& s : items) out.push_back(ring.parse_element(s));
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, std::uint64_t k) {
  if (!is_prime(p)) throw InvalidSpec("GF characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw InvalidSpec("GF degree must be positive");
  std::size_t count = 1;
  for (std::uint64_t i = 0; i < k; ++i) count *= p;
  // c0 is the most significant position of the comparison, so it varies slowest.
  for (std::size_t code = 0; code < count; ++code) {
    Poly f(k + 1, 0);
    f[k] = 1;
    std::size_t c = code;
    for (std::uint64_t i = k; i-- > 0; c /= p) f[i] = c % p;
    if (is_irreducible(f, p)) return f;
  }
  throw InvalidSpec("no irreducible polynomial found");  // unreachable for prime p
}

// ---------------------------------------------------------------- Z/n

ZModRing::ZModRing(std::uint64_t n) : n_(n) {}

Handle ZModRing::add(Handle a, Handle b) const { return static_cast<Handle>((std::uint64_t(a) + b) % n_); }
Handle ZModRing::neg(Handle a) const { return static_cast<Handle>((n_ - a) % n_); }
Handle ZModRing::mul(Handle a, Handle b) const { return static_cast<Handle>((std::uint64_t(a) * b) % n_); }
std::string ZModRing::format(Handle a) const { return std::to_string(a); }

// ---------------------------------------------------------------- GF(p^k)

GaloisFieldRing::GaloisFieldRing(std::uint64_t p, std::uint64_t k)
    : p_(p), k_(k), modulus_(smallest_irreducible(p, k)) {
  order_ = 1;
  for (std::uint64_t i = 0; i < k; ++i) order_ *= p;
}

std::vector<std::uint64_t> GaloisFieldRing::coefficients(Handle a) const {
  std::vector<std::uint64_t> c(k_);
  for (std::uint64_t i = 0; i < k_; ++i, a = static_cast<Handle>(a / p_)) c[i] = a % p_;
  return c;
}

Handle GaloisFieldRing::from_coefficients(const std::vector<std::uint64_t>& c) const {
  std::uint64_t h = 0;
  for (std::size_t i = c.size(); i-- > 0;) h = h * p_ + c[i] % p_;
  return static_cast<Handle>(h);
}

Handle GaloisFieldRing::add(Handle a, Handle b) const {
  auto x = coefficients(a), y = coefficients(b);
  for (std::uint64_t i = 0; i < k_; ++i) x[i] = (x[i] + y[i]) % p_;
  return from_coefficients(x);
}

Handle GaloisFieldRing::neg(Handle a) const {
  auto x = coefficients(a);
  for (auto& c : x) c = (p_ - c) % p_;
  return from_coefficients(x);
}

Handle GaloisFieldRing::mul(Handle a, Handle b) const {
  auto x = coefficients(a), y = coefficients(b);
  Poly prod(2 * k_ - 1, 0);
  for (std::uint64_t i = 0; i < k_; ++i)
    for (std::uint64_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
  return from_coefficients(poly_mod(std::move(prod), modulus_, p_));
}

std::string GaloisFieldRing::format(Handle a) const {
  auto c = coefficients(a);
  std::string out;
  for (std::uint64_t d = k_; d-- > 0;) {
    if (c[d] == 0) continue;
    if (!out.empty()) out += "+";
    if (d == 0) {
      out += std::to_string(c[d]);
      continue;
    }
    if (c[d] != 1) out += std::to_string(c[d]) + "*";
    out += d == 1 ? std::string("a") : "a^" + std::to_string(d);
  }
  return out.empty() ? "0" : out;
}

std::optional<Handle> GaloisFieldRing::from_symbol(std::string_view name) const {
  if (name != "a") return std::nullopt;
  Poly x(k_, 0);
  if (k_ >= 2) {
    x[1] = 1;
  } else {
    x[0] = (p_ - modulus_[0]) % p_;  // root of the linear modulus
  }
  return from_coefficients(x);
}

// ---------------------------------------------------------------- M_n(R)

namespace {

std::string format_rows(const FiniteRing& inner, const std::vector<Handle>& e, std::size_t n) {
  std::string out = "[";
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out += ",";
    out += "[";
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out += ",";
      out += inner.format(e[i * n + j]);
    }
    out += "]";
  }
  return out + "]";
}

/// `E<i><j>` (1-based) or `I`, for n <= 9.
std::optional<std::pair<std::size_t, std::size_t>> matrix_unit_name(std::string_view name, std::size_t n) {
  if (name.size() == 3 && name[0] == 'E' && std::isdigit(static_cast<unsigned char>(name[1])) &&
      std::isdigit(static_cast<unsigned char>(name[2]))) {
    std::size_t i = static_cast<std::size_t>(name[1] - '1'), j = static_cast<std::size_t>(name[2] - '1');
    if (i < n && j < n) return std::pair{i, j};
  }
  return std::nullopt;
}

}  // namespace

MatrixRing::MatrixRing(std::size_t n, FiniteRing inner) : n_(n), inner_(std::move(inner)) {
  order_ = 1;
  for (std::size_t i = 0; i < n_ * n_; ++i) order_ *= inner_.order();
  std::vector<Handle> id(n_ * n_, 0);
  for (std::size_t i = 0; i < n_; ++i) id[i * n_ + i] = inner_.one();
  one_ = encode(id);
}

std::vector<Handle> MatrixRing::entries(Handle a) const {
  std::vector<Handle> e(n_ * n_);
  const std::size_t q = inner_.order();
  for (auto& x : e) {
    x = static_cast<Handle>(a % q);
    a = static_cast<Handle>(a / q);
  }
  return e;
}

Handle MatrixRing::encode(const std::vector<Handle>& e) const {
  std::uint64_t h = 0;
  for (std::size_t i = e.size(); i-- > 0;) h = h * inner_.order() + e[i];
  return static_cast<Handle>(h);
}

Handle MatrixRing::add(Handle a, Handle b) const {
  auto x = entries(a), y = entries(b);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = inner_.add(x[i], y[i]);
  return encode(x);
}

Handle MatrixRing::neg(Handle a) const {
  auto x = entries(a);
  for (auto& v : x) v = inner_.neg(v);
  return encode(x);
}

Handle MatrixRing::mul(Handle a, Handle b) const {
  auto x = entries(a), y = entries(b);
  std::vector<Handle> z(n_ * n_, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const Handle xik = x[i * n_ + k];
      if (xik == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) z[i * n_ + j] = inner_.add(z[i * n_ + j], inner_.mul(xik, y[k * n_ + j]));
    }
  return encode(z);
}

std::string MatrixRing::format(Handle a) const { return format_rows(inner_, entries(a), n_); }

std::optional<Handle> MatrixRing::from_symbol(std::string_view name) const {
  std::vector<Handle> e(n_ * n_, 0);
  if (auto ij = matrix_unit_name(name, n_)) {
    e[ij->first * n_ + ij->second] = inner_.one();
    return encode(e);
  }
  if (name == "I") return one_;
  auto scalar = inner_.impl().from_symbol(name);
  if (!scalar) return std::nullopt;
  for (std::size_t i = 0; i < n_; ++i) e[i * n_ + i] = *scalar;
  return encode(e);
}

std::optional<Handle> MatrixRing::from_brackets(const std::vector<std::vector<std::string>>& rows) const {
  if (rows.size() != n_) return std::nullopt;
  std::vector<Handle> e;
  for (const auto& row : rows) {
    if (row.size() != n_) return std::nullopt;
    auto parsed = parse_entries_in(inner_, row);
    e.insert(e.end(), parsed.begin(), parsed.end());
  }
  return encode(e);
}

// ---------------------------------------------------------------- UT_n(R)

UpperTriangularRing::UpperTriangularRing(std::size_t n, FiniteRing inner) : n_(n), inner_(std::move(inner)) {
  order_ = 1;
  for (std::size_t i = 0; i < n_ * (n_ + 1) / 2; ++i) order_ *= inner_.order();
  std::vector<Handle> id(n_ * n_, 0);
  for (std::size_t i = 0; i < n_; ++i) id[i * n_ + i] = inner_.one();
  one_ = encode(id);
}

std::vector<Handle> UpperTriangularRing::entries(Handle a) const {
  std::vector<Handle> e(n_ * n_, 0);
  const std::size_t q = inner_.order();
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j) {
      e[i * n_ + j] = static_cast<Handle>(a % q);
      a = static_cast<Handle>(a / q);
    }
  return e;
}

Handle UpperTriangularRing::encode(const std::vector<Handle>& e) const {
  std::vector<Handle> digits;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j) digits.push_back(e[i * n_ + j]);
  std::uint64_t h = 0;
  for (std::size_t i = digits.size(); i-- > 0;) h = h * inner_.order() + digits[i];
  return static_cast<Handle>(h);
}

Handle UpperTriangularRing::add(Handle a, Handle b) const {
  auto x = entries(a), y = entries(b);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = inner_.add(x[i], y[i]);
  return encode(x);
}

Handle UpperTriangularRing::neg(Handle a) const {
  auto x = entries(a);
  for (auto& v : x) v = inner_.neg(v);
  return encode(x);
}

Handle UpperTriangularRing::mul(Handle a, Handle b) const {
  auto x = entries(a), y = entries(b);
  std::vector<Handle> z(n_ * n_, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = i; k < n_; ++k)
      for (std::size_t j = k; j < n_; ++j)
        z[i * n_ + j] = inner_.add(z[i * n_ + j], inner_.mul(x[i * n_ + k], y[k * n_ + j]));
  return encode(z);
}

std::string UpperTriangularRing::format(Handle a) const { return format_rows(inner_, entries(a), n_); }

std::optional<Handle> UpperTriangularRing::from_symbol(std::string_view name) const {
  std::vector<Handle> e(n_ * n_, 0);
  if (auto ij = matrix_unit_name(name, n_)) {
    if (ij->first > ij->second) return std::nullopt;
    e[ij->first * n_ + ij->second] = inner_.one();
    return encode(e);
  }
  if (name == "I") return one_;
  auto scalar = inner_.impl().from_symbol(name);
  if (!scalar) return std::nullopt;
  for (std::size_t i = 0; i < n_; ++i) e[i * n_ + i] = *scalar;
  return encode(e);
}

std::optional<Handle> UpperTriangularRing::from_brackets(const std::vector<std::vector<std::string>>& rows) const {
  if (rows.size() != n_) return std::nullopt;
  std::vector<Handle> e;
  for (const auto& row : rows) {
    if (row.size() != n_) return std::nullopt;
    auto parsed = parse_entries_in(inner_, row);
    e.insert(e.end(), parsed.begin(), parsed.end());
  }
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (e[i * n_ + j] != 0) return std::nullopt;
  return encode(e);
}

// ---------------------------------------------------------------- R x S

ProductRing::ProductRing(FiniteRing left, FiniteRing right) : left_(std::move(left)), right_(std::move(right)) {}

Handle ProductRing::add(Handle a, Handle b) const {
  return pair(left_.add(left_of(a), left_of(b)), right_.add(right_of(a), right_of(b)));
}
Handle ProductRing::neg(Handle a) const { return pair(left_.neg(left_of(a)), right_.neg(right_of(a))); }
Handle ProductRing::mul(Handle a, Handle b) const {
  return pair(left_.mul(left_of(a), left_of(b)), right_.mul(right_of(a), right_of(b)));
}
std::string ProductRing::format(Handle a) const {
  return "(" + left_.format(left_of(a)) + "," + right_.format(right_of(a)) + ")";
}
std::optional<Handle> ProductRing::from_tuple(const std::vector<std::string>& parts) const {
  if (parts.size() != 2) return std::nullopt;
  return pair(left_.parse_element(parts[0]), right_.parse_element(parts[1]));
}

// ---------------------------------------------------------------- RG

GroupRingRing::GroupRingRing(FiniteRing coeff, GroupTable group) : coeff_(std::move(coeff)), group_(std::move(group)) {
  order_ = 1;
  for (std::size_t i = 0; i < group_.order(); ++i) order_ *= coeff_.order();
}

std::vector<Handle> GroupRingRing::coefficient_vector(Handle a) const {
  std::vector<Handle> c(group_.order());
  const std::size_t q = coeff_.order();
  for (auto& x : c) {
    x = static_cast<Handle>(a % q);
    a = static_cast<Handle>(a / q);
  }
  return c;
}

Handle GroupRingRing::encode(const std::vector<Handle>& c) const {
  std::uint64_t h = 0;
  for (std::size_t i = c.size(); i-- > 0;) h = h * coeff_.order() + c[i];
  return static_cast<Handle>(h);
}

Handle GroupRingRing::coefficient(Handle a, std::uint32_t g) const { return coefficient_vector(a).at(g); }

Handle GroupRingRing::embed_scalar(Handle c) const {
  std::vector<Handle> v(group_.order(), 0);
  v[0] = c;
  return encode(v);
}

Handle GroupRingRing::embed_group_element(std::uint32_t g) const {
  std::vector<Handle> v(group_.order(), 0);
  v.at(g) = coeff_.one();
  return encode(v);
}

Handle GroupRingRing::add(Handle a, Handle b) const {
  auto x = coefficient_vector(a), y = coefficient_vector(b);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = coeff_.add(x[i], y[i]);
  return encode(x);
}

Handle GroupRingRing::neg(Handle a) const {
  auto x = coefficient_vector(a);
  for (auto& v : x) v = coeff_.neg(v);
  return encode(x);
}

Handle GroupRingRing::mul(Handle a, Handle b) const {
  auto x = coefficient_vector(a), y = coefficient_vector(b);
  std::vector<Handle> z(x.size(), 0);
  for (std::uint32_t g = 0; g < x.size(); ++g) {
    if (x[g] == 0) continue;
    for (std::uint32_t h = 0; h < y.size(); ++h) {
      const auto gh = group_.mul(g, h);
      z[gh] = coeff_.add(z[gh], coeff_.mul(x[g], y[h]));
    }
  }
  return encode(z);
}

std::string GroupRingRing::format(Handle a) const {
  auto c = coefficient_vector(a);
  std::string out;
  for (std::size_t g = 0; g < c.size(); ++g) {
    if (c[g] == 0) continue;
    if (!out.empty()) out += "+";
    std::string coeff = coeff_.format(c[g]);
    if (g == 0) {
      out += coeff;
      continue;
    }
    if (c[g] != coeff_.one()) {
      bool compound = coeff.find_first_of("+-") != std::string::npos;
      out += (compound ? "(" + coeff + ")" : coeff) + "*";
    }
    out += "g" + std::to_string(g);
  }
  return out.empty() ? "0" : out;
}

std::optional<Handle> GroupRingRing::from_symbol(std::string_view name) const {
  if (name == "g" && group_.order() >= 2) return embed_group_element(1);
  if (name.size() >= 2 && name[0] == 'g' &&
      std::all_of(name.begin() + 1, name.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
    std::size_t idx = std::stoul(std::string(name.substr(1)));
    if (idx < group_.order()) return embed_group_element(static_cast<std::uint32_t>(idx));
    return std::nullopt;
  }
  if (auto c = coeff_.impl().from_symbol(name)) return embed_scalar(*c);
  return std::nullopt;
}

// ---------------------------------------------------------------- R / I

QuotientRing::QuotientRing(FiniteRing inner, Ideal ideal) : inner_(std::move(inner)), ideal_(std::move(ideal)) {
  const std::size_t n = inner_.order();
  std::vector<Handle> rep_of(n, static_cast<Handle>(n));
  for (Handle x = 0; x < n; ++x) {
    if (rep_of[x] != n) continue;
    // x is the smallest member of its coset
    for (auto i : ideal_.elements) rep_of[inner_.add(x, i)] = x;
  }
  coset_of_.assign(n, 0);
  for (Handle x = 0; x < n; ++x)
    if (rep_of[x] == x) {
      coset_of_[x] = static_cast<Handle>(representatives_.size());
      representatives_.push_back(x);
    }
  for (Handle x = 0; x < n; ++x) coset_of_[x] = coset_of_[rep_of[x]];
}

Handle QuotientRing::add(Handle a, Handle b) const {
  return project(inner_.add(representatives_[a], representatives_[b]));
}
Handle QuotientRing::neg(Handle a) const { return project(inner_.neg(representatives_[a])); }
Handle QuotientRing::mul(Handle a, Handle b) const {
  return project(inner_.mul(representatives_[a], representatives_[b]));
}
std::string QuotientRing::format(Handle a) const { return inner_.format(representatives_[a]); }
std::optional<Handle> QuotientRing::from_symbol(std::string_view name) const {
  if (auto h = inner_.impl().from_symbol(name)) return project(*h);
  return std::nullopt;
}
std::optional<Handle> QuotientRing::from_brackets(const std::vector<std::vector<std::string>>& rows) const {
  if (auto h = inner_.impl().from_brackets(rows)) return project(*h);
  return std::nullopt;
}
std::optional<Handle> QuotientRing::from_tuple(const std::vector<std::string>& parts) const {
  if (auto h = inner_.impl().from_tuple(parts)) return project(*h);
  return std::nullopt;
}

// ---------------------------------------------------------------- End(G)

namespace {

bool is_prime_power(std::uint64_t q) {
  if (q < 2) return false;
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  while (q % p == 0) q /= p;
  return q == 1;
}

std::size_t end_order(const std::vector<std::uint64_t>& q, std::size_t cap) {
  std::size_t order = 1;
  for (auto qi : q)
    for (auto qj : q) {
      auto g = std::gcd(qi, qj);
      if (order > cap / g) throw OrderCapExceeded("End(Ab[...]) exceeds order cap " + std::to_string(cap));
      order *= g;
    }
  return order;
}

}  // namespace

EndomorphismRing::EndomorphismRing(std::vector<std::uint64_t> invariants) : q_(std::move(invariants)) {
  const std::size_t k = q_.size();
  step_.resize(k * k);
  radix_.resize(k * k);
  order_ = 1;
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < k; ++i) {
      auto g = std::gcd(q_[i], q_[j]);
      radix_[j * k + i] = g;
      step_[j * k + i] = q_[j] / g;
      order_ *= g;
    }
  std::vector<std::uint64_t> id(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) id[i * k + i] = 1;
  one_ = encode(id);
}

std::vector<std::uint64_t> EndomorphismRing::image_matrix(Handle a) const {
  std::vector<std::uint64_t> m(radix_.size());
  for (std::size_t d = 0; d < m.size(); ++d) {
    m[d] = (a % radix_[d]) * step_[d];
    a = static_cast<Handle>(a / radix_[d]);
  }
  return m;
}

Handle EndomorphismRing::encode(const std::vector<std::uint64_t>& image) const {
  std::uint64_t h = 0;
  for (std::size_t d = image.size(); d-- > 0;) h = h * radix_[d] + image[d] / step_[d];
  return static_cast<Handle>(h);
}

Handle EndomorphismRing::add(Handle a, Handle b) const {
  const std::size_t k = q_.size();
  auto x = image_matrix(a), y = image_matrix(b);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < k; ++i) x[j * k + i] = (x[j * k + i] + y[j * k + i]) % q_[j];
  return encode(x);
}

Handle EndomorphismRing::neg(Handle a) const {
  const std::size_t k = q_.size();
  auto x = image_matrix(a);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < k; ++i) x[j * k + i] = (q_[j] - x[j * k + i]) % q_[j];
  return encode(x);
}

Handle EndomorphismRing::mul(Handle a, Handle b) const {
  // (a∘b)(e_i)_j = sum_m b[m][i] * a[j][m]  (mod q_j)
  const std::size_t k = q_.size();
  auto x = image_matrix(a), y = image_matrix(b);
  std::vector<std::uint64_t> z(k * k, 0);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < k; ++i) {
      std::uint64_t s = 0;
      for (std::size_t m = 0; m < k; ++m) s = (s + x[j * k + m] * y[m * k + i]) % q_[j];
      z[j * k + i] = s;
    }
  return encode(z);
}

std::string EndomorphismRing::format(Handle a) const {
  const std::size_t k = q_.size();
  auto x = image_matrix(a);
  std::string out = "[";
  for (std::size_t j = 0; j < k; ++j) {
    if (j) out += ",";
    out += "[";
    for (std::size_t i = 0; i < k; ++i) {
      if (i) out += ",";
      out += std::to_string(x[j * k + i]);
    }
    out += "]";
  }
  return out + "]";
}

std::optional<Handle> EndomorphismRing::from_brackets(const std::vector<std::vector<std::string>>& rows) const {
  const std::size_t k = q_.size();
  if (rows.size() != k) return std::nullopt;
  std::vector<std::uint64_t> m(k * k);
  for (std::size_t j = 0; j < k; ++j) {
    if (rows[j].size() != k) return std::nullopt;
    for (std::size_t i = 0; i < k; ++i) {
      long long v = 0;
      try {
        v = std::stoll(trimmed(rows[j][i]));
      } catch (const std::exception&) {
        return std::nullopt;
      }
      auto qj = static_cast<long long>(q_[j]);
      auto r = static_cast<std::uint64_t>(((v % qj) + qj) % qj);
      if (r % step_[j * k + i] != 0) return std::nullopt;  // not a valid homomorphism image
      m[j * k + i] = r;
    }
  }
  return encode(m);
}

// ---------------------------------------------------------------- realize

FiniteRing quotient(const FiniteRing& ring, const std::vector<Handle>& generators) {
  for (auto g : generators)
    if (!ring.contains(g)) throw InvalidSpec("quotient generator out of range");
  auto ideal = ideal_closure(ring, generators);
  auto spec = ring.spec();
  std::vector<std::string> gens;
  for (auto g : generators) gens.push_back(ring.format(g));
  return FiniteRing(std::make_shared<QuotientRing>(ring, std::move(ideal)), RingSpec::quotient(spec, std::move(gens)));
}

FiniteRing end_abelian(const std::vector<std::uint64_t>& invariants, std::size_t max_order) {
  if (invariants.empty()) throw InvalidSpec("End(Ab[...]) needs at least one invariant");
  for (auto q : invariants)
    if (!is_prime_power(q)) throw InvalidSpec("abelian invariant " + std::to_string(q) + " is not a prime power");
  end_order(invariants, max_order);
  return FiniteRing(std::make_shared<EndomorphismRing>(invariants), RingSpec::end_abelian(invariants));
}

FiniteRing realize(const RingSpec& spec, std::size_t max_order) {
  using K = RingSpec::Kind;
  switch (spec.kind) {
    case K::ZMod:
      if (spec.n < 2) throw InvalidSpec("Z/n requires n >= 2 (the zero ring is not supported)");
      if (spec.n > max_order) throw OrderCapExceeded(spec.to_string() + " exceeds order cap " + std::to_string(max_order));
      return FiniteRing(std::make_shared<ZModRing>(spec.n), spec);
    case K::GaloisField: {
      if (!is_prime(spec.p)) throw InvalidSpec("GF characteristic " + std::to_string(spec.p) + " is not prime");
      if (spec.k == 0) throw InvalidSpec("GF degree must be positive");
      checked_pow(spec.p, spec.k, max_order, spec.to_string());
      return FiniteRing(std::make_shared<GaloisFieldRing>(spec.p, spec.k), spec);
    }
    case K::Matrix: {
      if (spec.n == 0) throw InvalidSpec("matrix size must be positive");
      auto inner = realize(spec.operands.at(0), max_order);
      checked_pow(inner.order(), spec.n * spec.n, max_order, spec.to_string());
      return FiniteRing(std::make_shared<MatrixRing>(spec.n, std::move(inner)), spec);
    }
    case K::UpperTriangular: {
      if (spec.n < 2) throw InvalidSpec("UT(n, R) requires n >= 2");
      auto inner = realize(spec.operands.at(0), max_order);
      checked_pow(inner.order(), spec.n * (spec.n + 1) / 2, max_order, spec.to_string());
      return FiniteRing(std::make_shared<UpperTriangularRing>(spec.n, std::move(inner)), spec);
    }
    case K::Product: {
      auto left = realize(spec.operands.at(0), max_order);
      auto right = realize(spec.operands.at(1), max_order);
      if (left.order() > max_order / right.order())
        throw OrderCapExceeded(spec.to_string() + " exceeds order cap " + std::to_string(max_order));
      return FiniteRing(std::make_shared<ProductRing>(std::move(left), std::move(right)), spec);
    }
    case K::GroupRing: {
      auto coeff = realize(spec.operands.at(0), max_order);
      auto gorder = group_order(*spec.group);
      if (gorder == 0) throw InvalidSpec("group order must be positive");
      checked_pow(coeff.order(), gorder, max_order, spec.to_string());
      auto group = realize_group(*spec.group, max_order);
      return FiniteRing(std::make_shared<GroupRingRing>(std::move(coeff), std::move(group)), spec);
    }
    case K::Quotient: {
      auto inner = realize(spec.operands.at(0), max_order);
      std::vector<Handle> gens;
      for (const auto& g : spec.generators) gens.push_back(inner.parse_element(g));
      auto ideal = ideal_closure(inner, gens);
      return FiniteRing(std::make_shared<QuotientRing>(std::move(inner), std::move(ideal)), spec);
    }
    case K::EndAbelian: {
      auto ring = end_abelian(spec.invariants, max_order);
      return ring;
    }
  }
  throw InvalidSpec("unknown ring kind");
}

FiniteRing realize(std::string_view spec_text, std::size_t max_order) {
  return realize(parse_ring_spec(spec_text), max_order);
}

}  // namespace ringlab
