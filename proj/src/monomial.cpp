#include "hankel/monomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "hankel/errors.hpp"

namespace hankel {

namespace {

void check_size(std::size_t num_vars) {
  if (num_vars == 0 || num_vars > kMaxVariables) {
    throw std::invalid_argument("number of variables must be in [1, " +
                                std::to_string(kMaxVariables) + "]");
  }
}

std::uint16_t checked_exponent(unsigned e) {
  if (e > std::numeric_limits<std::uint16_t>::max()) throw std::overflow_error("exponent overflow");
  return static_cast<std::uint16_t>(e);
}

void check_ring(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) {
    throw RingMismatch("monomials in " + std::to_string(a.num_vars()) + " and " +
                       std::to_string(b.num_vars()) + " variables");
  }
}

std::strong_ordering compare_range(OrderKind kind, std::span<const std::uint16_t> u,
                                   std::span<const std::uint16_t> v) {
  if (kind == OrderKind::degrevlex) {
    unsigned du = 0, dv = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      du += u[i];
      dv += v[i];
    }
    if (du != dv) return du <=> dv;
    for (std::size_t i = u.size(); i-- > 0;) {
      if (u[i] != v[i]) return u[i] < v[i] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != v[i]) return u[i] <=> v[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

Monomial::Monomial(std::size_t num_vars) : nvars_(static_cast<std::uint16_t>(num_vars)) {
  check_size(num_vars);
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t var, unsigned power) {
  Monomial m(num_vars);
  if (var < 1 || var > num_vars) {
    throw IndexOutOfRange("variable x" + std::to_string(var) + " outside ring of " +
                          std::to_string(num_vars) + " variables");
  }
  m.exp_[var - 1] = checked_exponent(power);
  m.degree_ = power;
  return m;
}

Monomial Monomial::from_exponents(std::span<const unsigned> exponents) {
  Monomial m(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    m.exp_[i] = checked_exponent(exponents[i]);
    m.degree_ += exponents[i];
  }
  return m;
}

std::vector<unsigned> Monomial::exponents() const {
  return {exp_.begin(), exp_.begin() + nvars_};
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_ || nvars_ != other.nvars_) return false;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exp_[i] && other.exp_[i]) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  check_ring(*this, other);
  Monomial out(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    out.exp_[i] = std::max(exp_[i], other.exp_[i]);
    out.degree_ += out.exp_[i];
  }
  return out;
}

Monomial Monomial::quotient(const Monomial& other) const {
  if (!other.divides(*this)) throw std::invalid_argument("quotient of non-dividing monomials");
  Monomial out(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) out.exp_[i] = exp_[i] - other.exp_[i];
  out.degree_ = degree_ - other.degree_;
  return out;
}

std::uint32_t Monomial::support() const noexcept {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exp_[i]) mask |= (1u << i);
  }
  return mask;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = nvars_;
  for (std::size_t i = 0; i < nvars_; ++i) h = h * 1000003u ^ exp_[i];
  return h;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (!exp_[i]) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (exp_[i] > 1) out += '^' + std::to_string(exp_[i]);
  }
  return out.empty() ? "1" : out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  check_ring(a, b);
  Monomial out(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    out.exp_[i] = checked_exponent(unsigned{a.exp_[i]} + b.exp_[i]);
  }
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

MonomialOrder MonomialOrder::block(std::size_t split, OrderKind first, OrderKind second) {
  if (first == OrderKind::block || second == OrderKind::block) {
    throw std::invalid_argument("block orders cannot nest");
  }
  MonomialOrder o(OrderKind::block);
  o.split_ = split;
  o.first_ = first;
  o.second_ = second;
  return o;
}

std::strong_ordering MonomialOrder::compare(const Monomial& u, const Monomial& v) const {
  check_ring(u, v);
  const auto a = u.raw();
  const auto b = v.raw();
  if (kind_ != OrderKind::block) return compare_range(kind_, a, b);
  const std::size_t k = std::min(split_, a.size());
  if (auto c = compare_range(first_, a.first(k), b.first(k)); c != 0) return c;
  return compare_range(second_, a.subspan(k), b.subspan(k));
}

std::string MonomialOrder::name() const {
  auto inner = [](OrderKind k) { return k == OrderKind::lex ? "lex" : "degrevlex"; };
  switch (kind_) {
    case OrderKind::degrevlex:
      return "degrevlex";
    case OrderKind::lex:
      return "lex";
    case OrderKind::block:
      return "block(" + std::to_string(split_) + "," + inner(first_) + "," + inner(second_) + ")";
  }
  return "unknown";
}

}  // namespace hankel
