#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hankel {

inline constexpr std::size_t kMaxVariables = 32;

/// A monomial x_1^{e_1} ... x_N^{e_N}. Variables are 1-based in the public
/// interface; the exponent vector is stored inline.
class Monomial {
 public:
  /// The unit monomial in `num_vars` variables.
  explicit Monomial(std::size_t num_vars);

  static Monomial variable(std::size_t num_vars, std::size_t var, unsigned power = 1);
  static Monomial from_exponents(std::span<const unsigned> exponents);

  std::size_t num_vars() const noexcept { return nvars_; }
  unsigned exponent(std::size_t var) const { return exp_.at(var - 1); }
  unsigned degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  /// 0-based view used by the order comparators and hot loops.
  std::span<const std::uint16_t> raw() const noexcept { return {exp_.data(), nvars_}; }
  std::vector<unsigned> exponents() const;

  bool divides(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;
  Monomial lcm(const Monomial& other) const;
  /// this / other; requires other | this.
  Monomial quotient(const Monomial& other) const;

  /// Bitmask of variables with positive exponent (bit v-1 for x_v).
  std::uint32_t support() const noexcept;

  std::size_t hash() const noexcept;
  std::string to_string() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.nvars_ == b.nvars_ && a.exp_ == b.exp_;
  }

 private:
  std::array<std::uint16_t, kMaxVariables> exp_{};
  std::uint16_t nvars_ = 0;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

enum class OrderKind : std::uint8_t { degrevlex, lex, block };

/// A monomial order with fixed variable precedence x_1 > x_2 > ... > x_N.
///
/// degrevlex: larger total degree wins; on ties u > v iff the last nonzero
/// entry of u - v is negative. lex: u > v iff the first nonzero entry of
/// u - v is positive. block(k, A, B): compare x_1..x_k by A, then the
/// remaining variables by B.
class MonomialOrder {
 public:
  static MonomialOrder degrevlex() noexcept { return MonomialOrder(OrderKind::degrevlex); }
  static MonomialOrder lex() noexcept { return MonomialOrder(OrderKind::lex); }
  /// Elimination order for the first `split` variables. Inner kinds must be
  /// degrevlex or lex.
  static MonomialOrder block(std::size_t split, OrderKind first = OrderKind::degrevlex,
                             OrderKind second = OrderKind::degrevlex);

  OrderKind kind() const noexcept { return kind_; }
  std::size_t split() const noexcept { return split_; }

  /// Throws RingMismatch if the monomials live in different rings.
  std::strong_ordering compare(const Monomial& u, const Monomial& v) const;
  bool greater(const Monomial& u, const Monomial& v) const { return compare(u, v) > 0; }

  std::string name() const;

  friend auto operator<=>(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  explicit MonomialOrder(OrderKind kind) noexcept : kind_(kind) {}

  OrderKind kind_;
  OrderKind first_ = OrderKind::degrevlex;
  OrderKind second_ = OrderKind::degrevlex;
  std::size_t split_ = 0;
};

/// Strict "greater first" comparator for ordered containers.
struct OrderGreater {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->greater(a, b); }
};

}  // namespace hankel
