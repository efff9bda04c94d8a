#include "localdeg/tower.hpp"

#include <cctype>
#include <limits>

#include "localdeg/error.hpp"

namespace localdeg {

struct TowerExpr::Node {
  Kind kind;
  BigInt value;
  std::vector<TowerExpr> kids;  // Power: {base, exponent}
};

TowerExpr::TowerExpr() : TowerExpr(literal(0)) {}

TowerExpr TowerExpr::literal(BigInt value) {
  if (value < 0) throw Error(Errc::InvalidArgument, "tower literals are non-negative");
  return TowerExpr(std::make_shared<const Node>(Node{Kind::Literal, std::move(value), {}}));
}

TowerExpr TowerExpr::power(TowerExpr base, TowerExpr exponent) {
  return TowerExpr(std::make_shared<const Node>(
      Node{Kind::Power, 0, {std::move(base), std::move(exponent)}}));
}

TowerExpr TowerExpr::product(std::vector<TowerExpr> factors) {
  if (factors.size() < 2) throw Error(Errc::InvalidArgument, "a product needs two factors");
  return TowerExpr(std::make_shared<const Node>(Node{Kind::Product, 0, std::move(factors)}));
}

TowerExpr TowerExpr::sum(std::vector<TowerExpr> terms) {
  if (terms.size() < 2) throw Error(Errc::InvalidArgument, "a sum needs two terms");
  return TowerExpr(std::make_shared<const Node>(Node{Kind::Sum, 0, std::move(terms)}));
}

TowerExpr::Kind TowerExpr::kind() const noexcept { return node_->kind; }

const BigInt& TowerExpr::value() const {
  if (kind() != Kind::Literal) throw Error(Errc::InvalidArgument, "not a literal");
  return node_->value;
}

const TowerExpr& TowerExpr::base() const {
  if (kind() != Kind::Power) throw Error(Errc::InvalidArgument, "not a power");
  return node_->kids[0];
}

const TowerExpr& TowerExpr::exponent() const {
  if (kind() != Kind::Power) throw Error(Errc::InvalidArgument, "not a power");
  return node_->kids[1];
}

const std::vector<TowerExpr>& TowerExpr::children() const {
  if (kind() != Kind::Product && kind() != Kind::Sum) {
    throw Error(Errc::InvalidArgument, "not a product or sum");
  }
  return node_->kids;
}

bool operator==(const TowerExpr& a, const TowerExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == TowerExpr::Kind::Literal) return a.node_->value == b.node_->value;
  return a.node_->kids == b.node_->kids;
}

// ---------------------------------------------------------------------------
// Printing and parsing

namespace {

int precedence(TowerExpr::Kind k) {
  switch (k) {
    case TowerExpr::Kind::Sum: return 1;
    case TowerExpr::Kind::Product: return 2;
    case TowerExpr::Kind::Power: return 3;
    case TowerExpr::Kind::Literal: return 4;
  }
  return 4;
}

std::string wrap(const TowerExpr& e, int min_prec) {
  std::string s = e.to_string();
  return precedence(e.kind()) < min_prec ? "(" + s + ")" : s;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  TowerExpr run() {
    TowerExpr e = parse_sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw Error(Errc::ParseError, what + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  TowerExpr parse_sum() {
    std::vector<TowerExpr> terms{parse_product()};
    while (eat('+')) terms.push_back(parse_product());
    return terms.size() == 1 ? terms.front() : TowerExpr::sum(std::move(terms));
  }
  TowerExpr parse_product() {
    std::vector<TowerExpr> factors{parse_power()};
    while (eat('*')) factors.push_back(parse_power());
    return factors.size() == 1 ? factors.front() : TowerExpr::product(std::move(factors));
  }
  TowerExpr parse_power() {
    TowerExpr base = parse_atom();
    if (eat('^')) return TowerExpr::power(std::move(base), parse_power());
    return base;
  }
  TowerExpr parse_atom() {
    if (eat('(')) {
      TowerExpr e = parse_sum();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail(pos_ == s_.size() ? "unexpected end of input" : "expected integer");
    return TowerExpr::literal(BigInt(std::string(s_.substr(start, pos_ - start))));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string TowerExpr::to_string() const {
  switch (kind()) {
    case Kind::Literal:
      return node_->value.str();
    case Kind::Power:
      return wrap(base(), 4) + "^" + wrap(exponent(), 3);
    case Kind::Product:
    case Kind::Sum: {
      const bool prod = kind() == Kind::Product;
      std::string s;
      for (std::size_t i = 0; i < node_->kids.size(); ++i) {
        if (i) s += prod ? '*' : '+';
        s += wrap(node_->kids[i], prod ? 3 : 2);
      }
      return s;
    }
  }
  return {};
}

TowerExpr TowerExpr::parse(std::string_view text) { return Parser(text).run(); }

// ---------------------------------------------------------------------------
// Evaluation

namespace {

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

std::uint64_t bit_length(const BigInt& v) {
  return v == 0 ? 1 : static_cast<std::uint64_t>(boost::multiprecision::msb(v)) + 1;
}

std::optional<std::uint64_t> small_value(const TowerExpr& e) {
  auto v = evaluate_within(e, 64);
  if (!v || *v > kMax) return std::nullopt;
  return static_cast<std::uint64_t>(*v);
}

bool is_literal(const TowerExpr& e, unsigned v) {
  return e.kind() == TowerExpr::Kind::Literal && e.value() == v;
}

// Value known to be zero. Exponents too large to evaluate are nonzero.
bool is_zero(const TowerExpr& e) {
  const auto v = evaluate_within(e, 64);
  return v && *v == 0;
}

BigInt eval_unchecked(const TowerExpr& e) {
  switch (e.kind()) {
    case TowerExpr::Kind::Literal:
      return e.value();
    case TowerExpr::Kind::Sum: {
      BigInt s = 0;
      for (const auto& c : e.children()) s += eval_unchecked(c);
      return s;
    }
    case TowerExpr::Kind::Product: {
      BigInt s = 1;
      for (const auto& c : e.children()) s *= eval_unchecked(c);
      return s;
    }
    case TowerExpr::Kind::Power: {
      if (is_zero(e.exponent())) return 1;
      const BigInt b = eval_unchecked(e.base());
      if (b <= 1) return b;
      return big_pow(b, *small_value(e.exponent()));
    }
  }
  return 0;
}

}  // namespace

std::optional<std::uint64_t> predicted_bits(const TowerExpr& e) {
  switch (e.kind()) {
    case TowerExpr::Kind::Literal:
      return bit_length(e.value());
    case TowerExpr::Kind::Sum: {
      std::uint64_t best = 0;
      for (const auto& c : e.children()) {
        auto b = predicted_bits(c);
        if (!b) return std::nullopt;
        best = std::max(best, *b);
      }
      std::uint64_t extra = 0;
      while ((std::uint64_t{1} << extra) < e.children().size()) ++extra;
      return best > kMax - extra ? std::nullopt : std::optional(best + extra);
    }
    case TowerExpr::Kind::Product: {
      std::uint64_t total = 0;
      for (const auto& c : e.children()) {
        auto b = predicted_bits(c);
        if (!b || *b > kMax - total) return std::nullopt;
        total += *b;
      }
      return total;
    }
    case TowerExpr::Kind::Power: {
      if (is_zero(e.exponent())) return 1;
      const auto bb = predicted_bits(e.base());
      if (!bb) return std::nullopt;
      if (*bb == 1) return 1;  // base 0 or 1
      const auto x = small_value(e.exponent());
      if (!x || (*x != 0 && *bb > kMax / *x)) return std::nullopt;
      return *bb * *x;
    }
  }
  return std::nullopt;
}

std::optional<BigInt> evaluate_within(const TowerExpr& e, std::uint64_t cap_bits) {
  const auto bits = predicted_bits(e);
  if (!bits || *bits > cap_bits) return std::nullopt;
  return eval_unchecked(e);
}

// ---------------------------------------------------------------------------
// Simplification

namespace {

void flatten_into(const TowerExpr& e, TowerExpr::Kind k, std::vector<TowerExpr>& out) {
  if (e.kind() == k) {
    for (const auto& c : e.children()) flatten_into(c, k, out);
  } else {
    out.push_back(e);
  }
}

TowerExpr make_sum(std::vector<TowerExpr> terms) {
  if (terms.empty()) return TowerExpr::literal(0);
  if (terms.size() == 1) return terms.front();
  return TowerExpr::sum(std::move(terms));
}

TowerExpr make_product(std::vector<TowerExpr> factors) {
  if (factors.empty()) return TowerExpr::literal(1);
  if (factors.size() == 1) return factors.front();
  return TowerExpr::product(std::move(factors));
}

TowerExpr simplify_exponent(const TowerExpr& x) {
  TowerExpr s = simplify(x);
  if (auto v = evaluate_within(s, 64)) return TowerExpr::literal(*v);
  return s;
}

TowerExpr simplify_power(const TowerExpr& e) {
  TowerExpr b = simplify(e.base());
  TowerExpr x = simplify_exponent(e.exponent());
  if (is_literal(x, 0)) return TowerExpr::literal(1);
  if (is_literal(x, 1)) return b;
  if (is_literal(b, 0) || is_literal(b, 1)) return b;
  if (b.kind() == TowerExpr::Kind::Power) {
    return simplify(TowerExpr::power(b.base(), TowerExpr::product({b.exponent(), x})));
  }
  return TowerExpr::power(std::move(b), std::move(x));
}

TowerExpr simplify_sum(const TowerExpr& e) {
  std::vector<TowerExpr> flat;
  for (const auto& c : e.children()) flatten_into(simplify(c), TowerExpr::Kind::Sum, flat);
  BigInt lit = 0;
  std::vector<TowerExpr> rest;
  for (auto& t : flat) {
    if (t.kind() == TowerExpr::Kind::Literal) {
      lit += t.value();
    } else {
      rest.push_back(std::move(t));
    }
  }
  if (lit != 0 || rest.empty()) rest.push_back(TowerExpr::literal(lit));
  return make_sum(std::move(rest));
}

TowerExpr simplify_product(const TowerExpr& e) {
  std::vector<TowerExpr> flat;
  for (const auto& c : e.children()) flatten_into(simplify(c), TowerExpr::Kind::Product, flat);
  BigInt lit = 1;
  std::vector<BigInt> bases;
  std::vector<std::vector<TowerExpr>> exps;
  std::vector<TowerExpr> other;
  for (auto& f : flat) {
    if (f.kind() == TowerExpr::Kind::Literal) {
      lit *= f.value();
    } else if (f.kind() == TowerExpr::Kind::Power && f.base().kind() == TowerExpr::Kind::Literal) {
      const BigInt& b = f.base().value();
      auto it = std::find(bases.begin(), bases.end(), b);
      if (it == bases.end()) {
        bases.push_back(b);
        exps.push_back({f.exponent()});
      } else {
        exps[static_cast<std::size_t>(it - bases.begin())].push_back(f.exponent());
      }
    } else {
      other.push_back(std::move(f));
    }
  }
  if (lit == 0) return TowerExpr::literal(0);
  // Pull powers of the collected bases out of the literal factor.
  for (std::size_t i = 0; i < bases.size(); ++i) {
    std::uint64_t k = 0;
    while (lit % bases[i] == 0) {
      lit /= bases[i];
      ++k;
    }
    if (k) exps[i].push_back(TowerExpr::literal(k));
  }
  std::vector<TowerExpr> out;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    TowerExpr x = exps[i].size() == 1 ? exps[i].front() : TowerExpr::sum(exps[i]);
    out.push_back(simplify_power(TowerExpr::power(TowerExpr::literal(bases[i]), x)));
  }
  for (auto& o : other) out.push_back(std::move(o));
  if (lit != 1 || out.empty()) out.push_back(TowerExpr::literal(lit));
  return make_product(std::move(out));
}

}  // namespace

TowerExpr simplify(const TowerExpr& e) {
  switch (e.kind()) {
    case TowerExpr::Kind::Literal: return e;
    case TowerExpr::Kind::Power: return simplify_power(e);
    case TowerExpr::Kind::Sum: return simplify_sum(e);
    case TowerExpr::Kind::Product: return simplify_product(e);
  }
  return e;
}

std::optional<int> compare(const TowerExpr& a, const TowerExpr& b, std::uint64_t cap_bits) {
  const auto va = evaluate_within(a, cap_bits);
  const auto vb = evaluate_within(b, cap_bits);
  if (va && vb) return *va < *vb ? -1 : (*va > *vb ? 1 : 0);
  const TowerExpr sa = simplify(a);
  const TowerExpr sb = simplify(b);
  if (sa.kind() == TowerExpr::Kind::Power && sb.kind() == TowerExpr::Kind::Power &&
      sa.base().kind() == TowerExpr::Kind::Literal && sa.base() == sb.base() &&
      sa.base().value() >= 2) {
    return compare(sa.exponent(), sb.exponent(), cap_bits);
  }
  return std::nullopt;
}

}  // namespace localdeg
