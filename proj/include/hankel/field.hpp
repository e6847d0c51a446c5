#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace hankel {

/// Coefficients are arbitrary-precision rationals; prime-field elements are
/// stored as their canonical representative in [0, p).
using Coeff = mpq_class;

/// The coefficient field: the rationals, or Z/p for an odd prime p.
class Field {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  static Field rationals() noexcept { return Field(0); }
  /// Throws std::invalid_argument unless p is an odd prime below 2^31.
  static Field prime(std::uint32_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint32_t characteristic() const noexcept { return p_; }

  /// Canonical representative of c (identity over the rationals).
  Coeff reduce(const Coeff& c) const;

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  /// Throws std::domain_error on division by zero.
  Coeff div(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;

  /// Rationals as "p/q"; prime-field elements in the symmetric range
  /// (-p/2, p/2] so that small integers print the same in both fields.
  std::string format(const Coeff& c) const;

  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) noexcept : p_(p) {}

  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace hankel
