#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "hankel/polynomial.hpp"

namespace hankel {

/// A reduced, monic Gröbner basis sorted by decreasing leading monomial.
/// Reduced bases are unique, so two ideals are equal iff their bases under
/// the same order compare equal.
class GroebnerBasis {
 public:
  GroebnerBasis(RingSpec ring, MonomialOrder order, std::vector<Polynomial> elements);

  const RingSpec& ring() const noexcept { return ring_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  const std::vector<Monomial>& leading_monomials() const noexcept { return leads_; }

  bool is_unit() const noexcept;
  Polynomial reduce(const Polynomial& f) const { return reducer_.reduce(f); }

  /// Canonical strings of the elements, in basis order.
  std::vector<std::string> serialize() const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b);

 private:
  RingSpec ring_;
  MonomialOrder order_;
  std::vector<Polynomial> elements_;
  std::vector<Monomial> leads_;
  Reducer reducer_;
};

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// degree, ties broken by pair index) and the coprime and chain criteria.
/// The result is reduced and monic, and each input generator is checked to
/// reduce to zero against it.
GroebnerBasis buchberger(std::span<const Polynomial> generators, const MonomialOrder& order,
                         const RingSpec& ring);

/// An ideal given by generators, caching one reduced Gröbner basis per order.
/// Copies share the cache.
class Ideal {
 public:
  Ideal(RingSpec ring, std::vector<Polynomial> generators);

  const RingSpec& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  bool is_zero() const noexcept { return generators_.empty(); }

  const GroebnerBasis& groebner_basis(const MonomialOrder& order = MonomialOrder::degrevlex()) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<MonomialOrder, std::unique_ptr<const GroebnerBasis>> bases;
  };

  RingSpec ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

/// Monomial ideal given by its minimal generators.
class MonomialIdeal {
 public:
  /// Removes redundant generators.
  MonomialIdeal(std::size_t num_vars, std::vector<Monomial> generators);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const std::vector<Monomial>& minimal_generators() const noexcept { return gens_; }
  bool contains(const Monomial& m) const noexcept;

 private:
  std::size_t num_vars_;
  std::vector<Monomial> gens_;
};

bool contains(const Ideal& ideal, const Polynomial& f,
              const MonomialOrder& order = MonomialOrder::degrevlex());

/// Throws RingMismatch for ideals in different rings.
bool ideal_equal(const Ideal& a, const Ideal& b,
                 const MonomialOrder& order = MonomialOrder::degrevlex());

/// I ∩ J as the t-free part of t*I + (1-t)*J under an order eliminating t.
Ideal intersect(const Ideal& a, const Ideal& b);

/// f ∈ √I, decided by 1 ∈ I + (t*f - 1) in K[t, x].
bool radical_membership(const Ideal& ideal, const Polynomial& f);

MonomialIdeal initial_ideal(const GroebnerBasis& gb);

/// dim S/I = N - (smallest set of variables meeting every generator of in(I)).
/// Throws ZeroIdeal for the zero ideal and std::domain_error for the unit ideal.
int krull_dimension(const Ideal& ideal, const MonomialOrder& order = MonomialOrder::degrevlex());
int krull_dimension(const MonomialIdeal& ideal);

/// Polynomial in `target` obtained by shifting every variable index by `offset`.
/// Variables whose shifted index falls outside `target` must not occur.
Polynomial shift_variables(const Polynomial& f, const RingSpec& target, int offset);

}  // namespace hankel
