#include "hankel/field.hpp"

#include <stdexcept>

namespace hankel {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p == 2 || !is_prime(p) || p >= (1u << 31)) {
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not an odd prime below 2^31");
  }
  return Field(p);
}

Coeff Field::reduce(const Coeff& c) const {
  if (is_rational()) return c;
  const mpz_class p = p_;
  mpz_class num = c.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = c.get_den() % p;
  if (den == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(p_));
  if (den != 1) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    num = (num * inv) % p;
  }
  return Coeff(num);
}

Coeff Field::add(const Coeff& a, const Coeff& b) const { return reduce(a + b); }
Coeff Field::sub(const Coeff& a, const Coeff& b) const { return reduce(a - b); }
Coeff Field::mul(const Coeff& a, const Coeff& b) const { return reduce(a * b); }
Coeff Field::neg(const Coeff& a) const { return reduce(-a); }

Coeff Field::div(const Coeff& a, const Coeff& b) const {
  if (b == 0) throw std::domain_error("division by zero");
  if (is_rational()) return a / b;
  mpz_class inv;
  const mpz_class p = p_;
  mpz_invert(inv.get_mpz_t(), b.get_num().get_mpz_t(), p.get_mpz_t());
  return reduce(a * Coeff(inv));
}

std::string Field::format(const Coeff& c) const {
  if (is_rational()) return c.get_str();
  mpz_class v = reduce(c).get_num();
  if (v > p_ / 2) v -= p_;
  return v.get_str();
}

std::string Field::name() const {
  return is_rational() ? "rational" : "prime:" + std::to_string(p_);
}

}  // namespace hankel
