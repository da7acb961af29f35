#include "ringlab/finite_ring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <random>

#include "ringlab/errors.hpp"

namespace ringlab {

std::optional<Handle> RingImpl::from_symbol(std::string_view) const { return std::nullopt; }

std::optional<Handle> RingImpl::from_brackets(const std::vector<std::vector<std::string>>&) const {
  return std::nullopt;
}

std::optional<Handle> RingImpl::from_tuple(const std::vector<std::string>&) const { return std::nullopt; }

FiniteRing::FiniteRing(std::shared_ptr<const RingImpl> impl, RingSpec spec)
    : impl_(std::move(impl)), spec_(std::move(spec)), cache_(std::make_shared<AttachmentCache>()) {
  order_ = impl_->order();
  if (order_ < 2) throw InvalidSpec("the zero ring (order 1) is not supported: " + spec_.to_string());
  one_ = impl_->one();

  if (order_ <= kEagerTableLimit) {
    auto t = std::make_shared<Tables>();
    t->add.resize(order_ * order_);
    t->mul.resize(order_ * order_);
    t->neg.resize(order_);
    for (Handle a = 0; a < order_; ++a) {
      t->neg[a] = static_cast<std::uint16_t>(impl_->neg(a));
      for (Handle b = 0; b < order_; ++b) {
        t->add[std::size_t(a) * order_ + b] = static_cast<std::uint16_t>(impl_->add(a, b));
        t->mul[std::size_t(a) * order_ + b] = static_cast<std::uint16_t>(impl_->mul(a, b));
      }
    }
    tables_ = std::move(t);
  }

  characteristic_ = 1;
  for (Handle x = one_; x != 0; x = add(x, one_)) ++characteristic_;
}

Handle FiniteRing::pow(Handle x, std::uint64_t k) const {
  Handle result = one_, base = x;
  while (k) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k) base = mul(base, base);
  }
  return result;
}

Handle FiniteRing::from_integer(long long k) const {
  const auto c = static_cast<long long>(characteristic_);
  long long r = k % c;
  if (r < 0) r += c;
  Handle result = 0, base = one_;
  auto e = static_cast<unsigned long long>(r);
  while (e) {
    if (e & 1) result = add(result, base);
    base = add(base, base);
    e >>= 1;
  }
  return result;
}

bool FiniteRing::is_commutative() const {
  for (Handle a = 0; a < order_; ++a)
    for (Handle b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool FiniteRing::same_tables(const FiniteRing& other) const {
  if (order_ != other.order_ || one_ != other.one_) return false;
  for (Handle a = 0; a < order_; ++a) {
    if (neg(a) != other.neg(a)) return false;
    for (Handle b = 0; b < order_; ++b)
      if (add(a, b) != other.add(a, b) || mul(a, b) != other.mul(a, b)) return false;
  }
  return true;
}

namespace {

/// Recursive-descent evaluator for element expressions.
class ElementParser {
 public:
  ElementParser(const FiniteRing& ring, std::string_view text) : ring_(ring), text_(text) {}

  Handle parse() {
    Handle value = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return value;
  }

 private:
  const FiniteRing& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("element expression '" + std::string(text_) + "': " + why + " at offset " +
                     std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Handle expression() {
    Handle value = 0;
    bool negate = false;
    if (peek('-')) {
      ++pos_;
      negate = true;
    } else if (peek('+')) {
      ++pos_;
    }
    value = term();
    if (negate) value = ring_.neg(value);
    while (true) {
      if (peek('+')) {
        ++pos_;
        value = ring_.add(value, term());
      } else if (peek('-')) {
        ++pos_;
        value = ring_.sub(value, term());
      } else {
        return value;
      }
    }
  }

  Handle term() {
    Handle value = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        value = ring_.mul(value, factor());
        continue;
      }
      // implicit multiplication: `2a`, `3g2`, `2(a+1)`
      skip_ws();
      if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '(')) {
        value = ring_.mul(value, factor());
        continue;
      }
      return value;
    }
  }

  Handle factor() {
    Handle base = atom();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      base = ring_.pow(base, unsigned_literal());
    }
    return base;
  }

  std::uint64_t unsigned_literal() {
    skip_ws();
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (ec != std::errc{}) fail("expected integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }

  std::string_view balanced(char open, char close) {
    const std::size_t start = pos_;
    int depth = 0;
    for (; pos_ < text_.size(); ++pos_) {
      if (text_[pos_] == open) ++depth;
      if (text_[pos_] == close && --depth == 0) {
        ++pos_;
        return text_.substr(start + 1, pos_ - start - 2);
      }
    }
    fail(std::string("unbalanced '") + open + "'");
  }

  Handle atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto v = unsigned_literal();
      return ring_.from_integer(static_cast<long long>(v % (ring_.characteristic() ? ring_.characteristic() : 1)));
    }
    if (c == '#') {
      ++pos_;
      auto h = unsigned_literal();
      if (h >= ring_.order()) fail("handle out of range");
      return static_cast<Handle>(h);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      auto name = text_.substr(start, pos_ - start);
      if (auto h = ring_.impl().from_symbol(name)) return *h;
      fail("unknown symbol '" + std::string(name) + "'");
    }
    if (c == '(') {
      auto body = balanced('(', ')');
      auto parts = split_top_level(body);
      if (parts.size() == 1) return ElementParser(ring_, body).parse();
      if (auto h = ring_.impl().from_tuple(parts)) return *h;
      fail("tuple literal not supported by this ring");
    }
    if (c == '[') {
      auto body = balanced('[', ']');
      std::vector<std::vector<std::string>> rows;
      auto items = split_top_level(body);
      bool nested = true;
      for (auto& it : items) {
        auto s = std::string_view(it);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
          nested = false;
          break;
        }
        rows.push_back(split_top_level(s.substr(1, s.size() - 2)));
      }
      if (!nested) rows = {items};
      if (auto h = ring_.impl().from_brackets(rows)) return *h;
      fail("bracket literal not accepted by this ring");
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

Handle FiniteRing::parse_element(std::string_view text) const { return ElementParser(*this, text).parse(); }

bool Ideal::contains(Handle x) const { return std::binary_search(elements.begin(), elements.end(), x); }

Ideal ideal_closure(const FiniteRing& ring, const std::vector<Handle>& generators) {
  const std::size_t n = ring.order();
  std::vector<char> member(n, 0);
  std::vector<Handle> items{0};
  member[0] = 1;
  auto insert = [&](Handle x) {
    if (!member[x]) {
      member[x] = 1;
      items.push_back(x);
    }
  };
  for (auto g : generators) insert(g);
  // Every new element is combined with everything already present and with all ring elements.
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Handle x = items[i];
    insert(ring.neg(x));
    for (std::size_t j = 0; j <= i; ++j) insert(ring.add(x, items[j]));
    for (Handle r = 0; r < n; ++r) {
      insert(ring.mul(r, x));
      insert(ring.mul(x, r));
    }
  }
  Ideal ideal{std::move(items)};
  std::sort(ideal.elements.begin(), ideal.elements.end());
  return ideal;
}

bool is_two_sided_ideal(const FiniteRing& ring, const std::vector<Handle>& subset) {
  std::vector<char> member(ring.order(), 0);
  for (auto x : subset) member[x] = 1;
  if (!member[0]) return false;
  for (auto x : subset) {
    if (!member[ring.neg(x)]) return false;
    for (auto y : subset)
      if (!member[ring.add(x, y)]) return false;
    for (Handle r = 0; r < ring.order(); ++r)
      if (!member[ring.mul(r, x)] || !member[ring.mul(x, r)]) return false;
  }
  return true;
}

AxiomCheck check_ring_axioms(const FiniteRing& ring, std::size_t exhaustive_limit, std::size_t samples,
                             std::uint64_t seed) {
  AxiomCheck out;
  const Handle one = ring.one();
  auto check = [&](Handle a, Handle b, Handle c) {
    ++out.triples_checked;
    if (ring.add(ring.add(a, b), c) != ring.add(a, ring.add(b, c))) return std::string("additive associativity");
    if (ring.add(a, b) != ring.add(b, a)) return std::string("additive commutativity");
    if (ring.add(a, 0) != a || ring.add(a, ring.neg(a)) != 0) return std::string("additive identity/inverse");
    if (ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c))) return std::string("multiplicative associativity");
    if (ring.mul(a, one) != a || ring.mul(one, a) != a) return std::string("multiplicative identity");
    if (ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ring.mul(a, c))) return std::string("left distributivity");
    if (ring.mul(ring.add(a, b), c) != ring.add(ring.mul(a, c), ring.mul(b, c))) return std::string("right distributivity");
    return std::string();
  };
  auto record = [&](Handle a, Handle b, Handle c, const std::string& what) {
    out.ok = false;
    out.failure = what + " fails at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
  };

  const std::size_t n = ring.order();
  if (n <= exhaustive_limit) {
    out.exhaustive = true;
    for (Handle a = 0; a < n; ++a)
      for (Handle b = 0; b < n; ++b)
        for (Handle c = 0; c < n; ++c)
          if (auto what = check(a, b, c); !what.empty()) {
            record(a, b, c, what);
            return out;
          }
    return out;
  }
  out.exhaustive = false;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Handle> pick(0, static_cast<Handle>(n - 1));
  for (std::size_t i = 0; i < samples; ++i) {
    Handle a = pick(rng), b = pick(rng), c = pick(rng);
    if (auto what = check(a, b, c); !what.empty()) {
      record(a, b, c, what);
      return out;
    }
  }
  return out;
}

}  // namespace ringlab
