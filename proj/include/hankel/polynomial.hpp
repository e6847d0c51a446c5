#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hankel/field.hpp"
#include "hankel/monomial.hpp"

namespace hankel {

/// Polynomial ring K[x_1, ..., x_N].
struct RingSpec {
  std::size_t num_vars = 1;
  Field field = Field::rationals();

  RingSpec() = default;
  RingSpec(std::size_t n, Field f = Field::rationals());

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

struct Term {
  Monomial monomial;
  Coeff coeff;
};

/// Sparse polynomial with nonzero coefficients. Terms are kept sorted in
/// decreasing degrevlex order regardless of the order used for division;
/// leading terms for other orders are found by scanning.
class Polynomial {
 public:
  explicit Polynomial(RingSpec ring);

  static Polynomial constant(const RingSpec& ring, const Coeff& c);
  static Polynomial monomial(const RingSpec& ring, const Monomial& m, const Coeff& c = 1);
  static Polynomial variable(const RingSpec& ring, std::size_t var);
  /// Combines like terms and drops zeros.
  static Polynomial from_terms(const RingSpec& ring, std::vector<Term> terms);

  const RingSpec& ring() const noexcept { return ring_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  std::size_t size() const noexcept { return terms_.size(); }
  std::span<const Term> terms() const noexcept { return terms_; }

  /// Maximum total degree; -1 for the zero polynomial.
  int degree() const noexcept;
  bool is_homogeneous() const noexcept;
  /// Homogeneous with respect to deg(x_v) = weights[v-1].
  bool is_homogeneous(std::span<const int> weights) const noexcept;

  /// Requires a nonzero polynomial.
  const Term& leading_term(const MonomialOrder& order) const;
  const Monomial& leading_monomial(const MonomialOrder& order) const {
    return leading_term(order).monomial;
  }
  const Coeff& leading_coeff(const MonomialOrder& order) const { return leading_term(order).coeff; }

  Polynomial monic(const MonomialOrder& order) const;
  Polynomial scaled(const Coeff& c) const;
  Polynomial times(const Monomial& m, const Coeff& c = 1) const;

  /// Terms in decreasing `order` with the stored coefficients.
  std::string to_string(const MonomialOrder& order = MonomialOrder::degrevlex()) const;
  /// Scaled so coefficients are coprime integers with positive leading
  /// coefficient over the rationals, or monic with symmetric representatives
  /// over a prime field. Terms in decreasing `order`.
  std::string canonical_string(const MonomialOrder& order = MonomialOrder::degrevlex()) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const { return scaled(-1); }

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_ring(const Polynomial& other) const;
  void add_scaled(const Polynomial& other, const Coeff& factor);

  RingSpec ring_;
  std::vector<Term> terms_;
};

/// Parses `poly := term (('+'|'-') term)*`, `term := [coeff '*'] var ('*' var)*`,
/// `var := 'x' INT ['^' INT]`. A bare coefficient and a leading sign are also
/// accepted. Throws ParseError with the failing position.
Polynomial parse_polynomial(std::string_view text, const RingSpec& ring);

/// Multivariate division against a fixed list of divisors.
class Reducer {
 public:
  Reducer(std::span<const Polynomial> basis, const MonomialOrder& order);

  /// Remainder with no term divisible by any divisor's leading monomial.
  /// The largest reducible term is always reduced by the first divisor whose
  /// leading monomial divides it.
  Polynomial reduce(const Polynomial& f) const;

  /// Index of the first divisor whose leading monomial divides m, or -1.
  int find_divisor(const Monomial& m) const noexcept;

  void add(const Polynomial& divisor);
  std::size_t size() const noexcept { return basis_.size(); }

  const MonomialOrder& order() const noexcept { return order_; }

 private:
  std::vector<Polynomial> basis_;
  std::vector<Monomial> leads_;
  std::vector<Coeff> lead_coeffs_;
  MonomialOrder order_;
};

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& order);

/// lcm/lt(f) * f - lcm/lt(g) * g with monic leading terms.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

}  // namespace hankel
