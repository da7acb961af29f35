#include "ringlab/matrix_tfine.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cctype>
#include <limits>
#include <numeric>
#include <thread>

#include "ringlab/classify.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/spec.hpp"

namespace ringlab {

MatrixAlgebra::MatrixAlgebra(const FiniteRing& ring, std::size_t n) : ring_(ring), n_(n) {
  if (n == 0) throw InvalidSpec("matrix size must be positive");
}

SquareMatrix MatrixAlgebra::zero() const { return SquareMatrix{n_, std::vector<Handle>(n_ * n_, ring_.zero())}; }

SquareMatrix MatrixAlgebra::identity() const {
  auto m = zero();
  for (std::size_t i = 0; i < n_; ++i) m.at(i, i) = ring_.one();
  return m;
}

SquareMatrix MatrixAlgebra::transvection(std::size_t i, std::size_t j, Handle c) const {
  auto m = identity();
  m.at(i, j) = ring_.add(m.at(i, j), c);
  return m;
}

SquareMatrix MatrixAlgebra::add(const SquareMatrix& a, const SquareMatrix& b) const {
  SquareMatrix out = a;
  for (std::size_t k = 0; k < out.entries.size(); ++k) out.entries[k] = ring_.add(a.entries[k], b.entries[k]);
  return out;
}

SquareMatrix MatrixAlgebra::sub(const SquareMatrix& a, const SquareMatrix& b) const {
  SquareMatrix out = a;
  for (std::size_t k = 0; k < out.entries.size(); ++k) out.entries[k] = ring_.sub(a.entries[k], b.entries[k]);
  return out;
}

SquareMatrix MatrixAlgebra::mul(const SquareMatrix& a, const SquareMatrix& b) const {
  auto out = zero();
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const Handle aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) out.at(i, j) = ring_.add(out.at(i, j), ring_.mul(aik, b.at(k, j)));
    }
  return out;
}

SquareMatrix MatrixAlgebra::pow(const SquareMatrix& a, std::uint64_t k) const {
  SquareMatrix result = identity(), base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k) base = mul(base, base);
  }
  return result;
}

bool MatrixAlgebra::is_zero(const SquareMatrix& a) const {
  return std::all_of(a.entries.begin(), a.entries.end(), [](Handle h) { return h == 0; });
}

std::optional<std::uint64_t> MatrixAlgebra::nilpotency_index(const SquareMatrix& a) const {
  // Right ideals N^k S strictly decrease until zero, and a chain of them in S = M_n(R) has
  // length at most log2|S|.
  const std::uint64_t bound = n_ * n_ * std::bit_width(ring_.order()) + 1;
  if (!is_zero(pow(a, bound))) return std::nullopt;
  std::uint64_t k = 1;
  for (SquareMatrix p = a; !is_zero(p); p = mul(p, a)) ++k;
  return k;
}

std::optional<std::uint64_t> MatrixAlgebra::unit_order(const SquareMatrix& a, std::uint64_t step_cap) const {
  // Brent's cycle detection on a, a^2, ...; a is a unit exactly when the cycle starts at a.
  std::uint64_t power = 1, period = 1, steps = 0;
  SquareMatrix tortoise = a, hare = mul(a, a);
  while (tortoise != hare) {
    if (++steps > step_cap) return std::nullopt;
    if (power == period) {
      tortoise = hare;
      power *= 2;
      period = 0;
    }
    hare = mul(hare, a);
    ++period;
  }
  if (pow(a, period) != identity()) return std::nullopt;
  return period;
}

std::uint64_t MatrixAlgebra::count() const {
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < n_ * n_; ++k) {
    if (total > std::numeric_limits<std::uint64_t>::max() / ring_.order()) return std::numeric_limits<std::uint64_t>::max();
    total *= ring_.order();
  }
  return total;
}

SquareMatrix MatrixAlgebra::decode(std::uint64_t index) const {
  auto m = zero();
  for (auto& e : m.entries) {
    e = static_cast<Handle>(index % ring_.order());
    index /= ring_.order();
  }
  return m;
}

std::uint64_t MatrixAlgebra::encode(const SquareMatrix& a) const {
  std::uint64_t index = 0;
  for (std::size_t k = a.entries.size(); k-- > 0;) index = index * ring_.order() + a.entries[k];
  return index;
}

std::string MatrixAlgebra::format(const SquareMatrix& a) const {
  std::string out = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) out += ",";
      out += ring_.format(a.at(i, j));
    }
    out += "]";
  }
  return out + "]";
}

namespace {

/// Recursive descent over sums, differences, products and powers of matrix atoms.
class MatrixExpr {
 public:
  MatrixExpr(const MatrixAlgebra& alg, std::string text) : alg_(alg), s_(std::move(text)) {}

  SquareMatrix parse() {
    auto m = expr();
    if (pos_ != s_.size()) fail("unexpected '" + s_.substr(pos_, 1) + "'");
    return m;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("matrix expression '" + s_ + "': " + why + " at offset " + std::to_string(pos_));
  }
  bool eat(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  SquareMatrix expr() {
    auto m = term();
    for (;;) {
      if (eat('+'))
        m = alg_.add(m, term());
      else if (eat('-'))
        m = alg_.sub(m, term());
      else
        return m;
    }
  }
  SquareMatrix term() {
    auto m = factor();
    while (eat('*')) m = alg_.mul(m, factor());
    return m;
  }
  SquareMatrix factor() {
    if (eat('-')) return alg_.sub(alg_.zero(), factor());
    auto m = atom();
    if (eat('^')) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an exponent");
      m = alg_.pow(m, std::stoull(s_.substr(start, pos_ - start)));
    }
    return m;
  }
  SquareMatrix atom() {
    if (eat('(')) {
      auto m = expr();
      if (!eat(')')) fail("expected ')'");
      return m;
    }
    if (pos_ < s_.size() && s_[pos_] == '[') return literal();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a matrix term");
    const std::string word = s_.substr(start, pos_ - start);
    const std::size_t n = alg_.size();
    if (word == "I") return alg_.identity();
    if (word.size() == 3 && word[0] == 'E' && std::isdigit(static_cast<unsigned char>(word[1])) &&
        std::isdigit(static_cast<unsigned char>(word[2]))) {
      const auto i = static_cast<std::size_t>(word[1] - '1'), j = static_cast<std::size_t>(word[2] - '1');
      if (i >= n || j >= n) fail("matrix unit " + word + " out of range");
      auto m = alg_.zero();
      m.at(i, j) = alg_.ring().one();
      return m;
    }
    // Anything else is a scalar of the base ring, embedded as c * I.
    const Handle c = alg_.ring().parse_element(word);
    auto m = alg_.zero();
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = c;
    return m;
  }
  SquareMatrix literal() {
    const std::size_t start = pos_;
    int depth = 0;
    do {
      if (pos_ >= s_.size()) fail("unbalanced '['");
      if (s_[pos_] == '[') ++depth;
      if (s_[pos_] == ']') --depth;
      ++pos_;
    } while (depth > 0);
    const std::string text = s_.substr(start, pos_ - start);
    const std::size_t n = alg_.size();
    auto rows = split_top_level(std::string_view(text).substr(1, text.size() - 2));
    if (rows.size() != n) fail("matrix literal needs " + std::to_string(n) + " rows");
    auto m = alg_.zero();
    for (std::size_t i = 0; i < n; ++i) {
      const auto& row = rows[i];
      if (row.size() < 2 || row.front() != '[' || row.back() != ']') fail("malformed matrix row '" + row + "'");
      auto cells = split_top_level(std::string_view(row).substr(1, row.size() - 2));
      if (cells.size() != n) fail("matrix row needs " + std::to_string(n) + " entries");
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = alg_.ring().parse_element(cells[j]);
    }
    return m;
  }

  const MatrixAlgebra& alg_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

SquareMatrix MatrixAlgebra::parse(std::string_view text) const {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  return MatrixExpr(*this, std::move(s)).parse();
}

UnitPair one_as_two_units(const FiniteRing& ring) {
  const auto& unit = unit_mask(ring);
  for (Handle u : units(ring)) {
    const Handle v = ring.sub(ring.one(), u);
    if (unit[v]) return UnitPair{u, v};
  }
  throw NoSolution("1 is not a sum of two units in " + ring.spec().to_string());
}

namespace {

bool normalized(const MatrixAlgebra& alg, const SquareMatrix& m) {
  const std::size_t n = alg.size();
  if (m.at(n - 1, n - 1) == 0) return false;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j)
      if (m.at(i, j) != 0) return true;
  return false;
}

struct Transvection {
  std::size_t i, j;
  Handle c;
};

std::string describe(const Transvection& t, const FiniteRing& ring) {
  return "I+" + ring.format(t.c) + "*E" + std::to_string(t.i + 1) + std::to_string(t.j + 1);
}

SquareMatrix sub_block(const SquareMatrix& m) {
  const std::size_t n = m.n - 1;
  SquareMatrix a{n, std::vector<Handle>(n * n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.at(i, j) = m.at(i, j);
  return a;
}

}  // namespace

Similarity similarity_normalize(const MatrixAlgebra& alg, const SquareMatrix& m, std::uint64_t budget) {
  const std::size_t n = alg.size();
  const FiniteRing& ring = alg.ring();
  if (n < 2) throw InvalidSpec("similarity normalization needs n >= 2");
  if (alg.is_zero(m)) throw ZeroMatrix("cannot normalize the zero matrix");

  std::uint64_t tried = 0;
  auto attempt = [&](const SquareMatrix& p, const SquareMatrix& p_inv, std::string description) -> std::optional<Similarity> {
    if (tried >= budget)
      throw BudgetExhausted("similarity search exceeded " + std::to_string(budget) + " conjugators");
    ++tried;
    auto conj = alg.mul(alg.mul(p, m), p_inv);
    if (!normalized(alg, conj)) return std::nullopt;
    return Similarity{p, p_inv, std::move(conj), std::move(description), tried};
  };

  if (auto s = attempt(alg.identity(), alg.identity(), "identity")) return *s;

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin(), perm.end())) {
    auto p = alg.zero(), p_inv = alg.zero();
    std::string description = "permutation(";
    for (std::size_t i = 0; i < n; ++i) {
      p.at(i, perm[i]) = ring.one();
      p_inv.at(perm[i], i) = ring.one();
      description += (i ? "," : "") + std::to_string(perm[i] + 1);
    }
    if (auto s = attempt(p, p_inv, description + ")")) return *s;
  }

  std::vector<Transvection> ts;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j)
        for (Handle c = 1; c < ring.order(); ++c) ts.push_back({i, j, c});

  for (const auto& t : ts)
    if (auto s = attempt(alg.transvection(t.i, t.j, t.c), alg.transvection(t.i, t.j, ring.neg(t.c)), describe(t, ring)))
      return *s;

  for (const auto& t1 : ts)
    for (const auto& t2 : ts) {
      auto p = alg.mul(alg.transvection(t1.i, t1.j, t1.c), alg.transvection(t2.i, t2.j, t2.c));
      auto p_inv = alg.mul(alg.transvection(t2.i, t2.j, ring.neg(t2.c)), alg.transvection(t1.i, t1.j, ring.neg(t1.c)));
      if (auto s = attempt(p, p_inv, "(" + describe(t1, ring) + ")(" + describe(t2, ring) + ")")) return *s;
    }

  throw BudgetExhausted("no conjugator of transvection length <= 2 normalizes the matrix");
}

std::optional<MatrixDecomposition> exhaustive_matrix_decomposition(const MatrixAlgebra& alg, const SquareMatrix& m,
                                                                   std::uint64_t budget, unsigned jobs,
                                                                   bool* exhausted) {
  const std::uint64_t total = alg.count();
  const std::uint64_t limit = std::min(total, budget);
  if (exhausted) *exhausted = limit == total;

  auto found_at = [&](std::uint64_t index) {
    const auto nil = alg.decode(index);
    if (!alg.nilpotency_index(nil)) return false;
    return alg.unit_order(alg.sub(m, nil)).has_value();
  };

  std::atomic<std::uint64_t> best{limit};
  auto scan = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end && i < best.load(std::memory_order_relaxed); ++i)
      if (found_at(i)) {
        std::uint64_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        return;
      }
  };
  jobs = static_cast<unsigned>(std::clamp<std::uint64_t>(limit / 256, 1, std::max(1u, jobs)));
  if (jobs == 1) {
    scan(0, limit);
  } else {
    std::vector<std::jthread> workers;
    const std::uint64_t chunk = (limit + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w)
      workers.emplace_back(scan, std::min(limit, w * chunk), std::min(limit, (w + 1) * chunk));
  }

  const std::uint64_t pos = best.load();
  if (pos == limit) return std::nullopt;
  MatrixDecomposition d;
  d.nilpotent = alg.decode(pos);
  d.unit = alg.sub(m, d.nilpotent);
  d.unit_order = *alg.unit_order(d.unit);
  d.nilpotency_index = *alg.nilpotency_index(d.nilpotent);
  TraceStep step;
  step.level = alg.size();
  step.method = "exhaustive";
  step.probes = pos + 1;
  d.trace.push_back(step);
  return d;
}

namespace {

struct Parts {
  SquareMatrix unit, nilpotent;
};

Parts decompose_rec(const MatrixAlgebra& alg, const SquareMatrix& m, const SearchBudget& budget, unsigned jobs,
                    std::vector<TraceStep>& trace) {
  const FiniteRing& ring = alg.ring();
  const std::size_t n = alg.size();

  if (n == 1) {
    auto result = decompose(ring, m.entries[0], DecompositionKind::TFine);
    const auto* cert = std::get_if<Certificate>(&result);
    if (!cert) throw NotTFineBase(ring.format(m.entries[0]) + " is not t-fine in " + ring.spec().to_string());
    TraceStep step;
    step.level = 1;
    step.method = "scalar";
    step.base_certificate = *cert;
    trace.push_back(step);
    return {SquareMatrix{1, {cert->part_a}}, SquareMatrix{1, {cert->part_b}}};
  }

  auto exhaustive = [&](const char* method) -> Parts {
    bool complete = false;
    auto d = exhaustive_matrix_decomposition(alg, m, budget.fallback, jobs, &complete);
    if (!d) {
      if (complete) throw NotTFineBase(alg.format(m) + " has no torsion unit + nilpotent decomposition");
      throw BudgetExhausted("exhaustive search exceeded " + std::to_string(budget.fallback) + " candidates");
    }
    d->trace.front().method = method;
    trace.push_back(d->trace.front());
    return {d->unit, d->nilpotent};
  };

  if (ring.order() == 2) return exhaustive("exhaustive");

  TraceStep step;
  step.level = n;
  step.method = "block";
  try {
    step.one_split = one_as_two_units(ring);
  } catch (const NoSolution&) {
  }

  Similarity sim;
  try {
    sim = similarity_normalize(alg, m, budget.similarity);
  } catch (const BudgetExhausted&) {
    return exhaustive("fallback");
  }
  step.similarity = sim.description;

  const SquareMatrix& c = sim.conjugated;
  const Handle d = c.at(n - 1, n - 1);
  auto base = decompose(ring, d, DecompositionKind::TFine);
  const auto* cert = std::get_if<Certificate>(&base);
  if (!cert) throw NotTFineBase(ring.format(d) + " is not t-fine in " + ring.spec().to_string());
  step.base_certificate = *cert;
  const std::size_t slot = trace.size();
  trace.push_back(step);

  const MatrixAlgebra block(ring, n - 1);
  const Parts inner = decompose_rec(block, sub_block(c), budget, jobs, trace);

  // X = [[U, 0], [gamma, v]] and Y = [[N, beta], [0, t]].
  SquareMatrix x = alg.zero(), y = alg.zero();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) {
      x.at(i, j) = inner.unit.at(i, j);
      y.at(i, j) = inner.nilpotent.at(i, j);
    }
  for (std::size_t j = 0; j + 1 < n; ++j) x.at(n - 1, j) = c.at(n - 1, j);
  for (std::size_t i = 0; i + 1 < n; ++i) y.at(i, n - 1) = c.at(i, n - 1);
  x.at(n - 1, n - 1) = cert->part_a;
  y.at(n - 1, n - 1) = cert->part_b;

  // U^k = 1 and v^m = 1 give X^(km) identity diagonal entries.
  const auto k = block.unit_order(inner.unit);
  if (!k) throw std::logic_error("inner unit part is not a unit");
  const std::uint64_t km = *k * cert->witness_a.first;
  const auto xkm = alg.pow(x, km);
  for (std::size_t i = 0; i < n; ++i)
    if (xkm.at(i, i) != ring.one()) throw std::logic_error("X^(km) has a non-identity diagonal entry");
  trace[slot].diagonal_exponent = km;

  return {alg.mul(alg.mul(sim.P_inv, x), sim.P), alg.mul(alg.mul(sim.P_inv, y), sim.P)};
}

}  // namespace

MatrixDecomposition tfine_decompose_matrix(const MatrixAlgebra& alg, const SquareMatrix& m, const SearchBudget& budget,
                                           unsigned jobs) {
  if (m.n != alg.size()) throw InvalidSpec("matrix size does not match the algebra");
  if (alg.is_zero(m)) throw ZeroMatrix("t-fine decompositions are defined for non-zero matrices only");

  MatrixDecomposition d;
  auto parts = decompose_rec(alg, m, budget, jobs, d.trace);
  d.unit = std::move(parts.unit);
  d.nilpotent = std::move(parts.nilpotent);
  const auto order = alg.unit_order(d.unit);
  const auto index = alg.nilpotency_index(d.nilpotent);
  if (!order || !index) throw std::logic_error("assembled decomposition failed its own checks");
  d.unit_order = *order;
  d.nilpotency_index = *index;
  return d;
}

VerifyResult verify_matrix_decomposition(const MatrixAlgebra& alg, const SquareMatrix& m,
                                         const MatrixDecomposition& d) {
  auto fail = [](VerifyReason r) { return VerifyResult{false, r}; };
  const std::size_t cells = alg.size() * alg.size();
  for (const auto* a : {&m, &d.unit, &d.nilpotent}) {
    if (a->n != alg.size() || a->entries.size() != cells) return fail(VerifyReason::HandleOutOfRange);
    for (Handle h : a->entries)
      if (!alg.ring().contains(h)) return fail(VerifyReason::HandleOutOfRange);
  }
  if (alg.is_zero(m)) return fail(VerifyReason::ZeroTarget);
  if (d.nilpotency_index == 0 || !alg.is_zero(alg.pow(d.nilpotent, d.nilpotency_index)))
    return fail(VerifyReason::PartBNotNilpotent);
  if (d.unit_order == 0 || alg.pow(d.unit, d.unit_order) != alg.identity()) return fail(VerifyReason::PartANotTorsionUnit);
  if (alg.add(d.unit, d.nilpotent) != m) return fail(VerifyReason::SumMismatch);
  return VerifyResult{true, VerifyReason::Ok};
}

}  // namespace ringlab
