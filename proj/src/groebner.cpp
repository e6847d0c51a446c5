#include "hankel/groebner.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <tuple>

#include "hankel/errors.hpp"

namespace hankel {

GroebnerBasis::GroebnerBasis(RingSpec ring, MonomialOrder order, std::vector<Polynomial> elements)
    : ring_(ring), order_(order), elements_(std::move(elements)), reducer_(elements_, order_) {
  for (const auto& g : elements_) leads_.push_back(g.leading_monomial(order_));
}

bool GroebnerBasis::is_unit() const noexcept {
  return elements_.size() == 1 && elements_.front().is_constant() && !elements_.front().is_zero();
}

std::vector<std::string> GroebnerBasis::serialize() const {
  std::vector<std::string> out;
  for (const auto& g : elements_) out.push_back(g.canonical_string(order_));
  return out;
}

bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
  return a.ring_ == b.ring_ && a.order_ == b.order_ && a.elements_ == b.elements_;
}

namespace {

// Inter-reduces a Gröbner basis into the unique reduced one, sorted by
// decreasing leading monomial.
std::vector<Polynomial> reduce_basis(const std::vector<Polynomial>& basis, const MonomialOrder& order) {
  std::vector<Polynomial> minimal;
  std::vector<Monomial> leads;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Monomial& li = basis[i].leading_monomial(order);
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& lj = basis[j].leading_monomial(order);
      if (lj.divides(li) && (!(lj == li) || j < i)) redundant = true;
    }
    if (!redundant) {
      minimal.push_back(basis[i]);
      leads.push_back(li);
    }
  }
  if (std::any_of(minimal.begin(), minimal.end(), [](const Polynomial& p) { return p.is_constant(); })) {
    return {Polynomial::constant(basis.front().ring(), 1)};
  }
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    const Term& lt = minimal[i].leading_term(order);
    Polynomial tail = minimal[i] - Polynomial::monomial(minimal[i].ring(), lt.monomial, lt.coeff);
    Polynomial r = Polynomial::monomial(minimal[i].ring(), lt.monomial, lt.coeff) +
                   Reducer(others, order).reduce(tail);
    reduced.push_back(r.monic(order));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.greater(a.leading_monomial(order), b.leading_monomial(order));
  });
  return reduced;
}

}  // namespace

GroebnerBasis buchberger(std::span<const Polynomial> generators, const MonomialOrder& order,
                         const RingSpec& ring) {
  std::vector<Polynomial> basis;
  std::vector<Monomial> leads;
  Reducer reducer({}, order);
  // Pending pairs, selected by (lcm degree, i, j).
  std::set<std::tuple<unsigned, std::size_t, std::size_t>> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto append = [&](Polynomial p) {
    p = p.monic(order);
    const std::size_t k = basis.size();
    const Monomial lead = p.leading_monomial(order);
    for (std::size_t i = 0; i < k; ++i) {
      queue.emplace(leads[i].lcm(lead).degree(), i, k);
      pending.emplace(i, k);
    }
    reducer.add(p);
    basis.push_back(std::move(p));
    leads.push_back(lead);
  };
  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.contains({std::min(a, b), std::max(a, b)});
  };

  for (const auto& g : generators) {
    if (!(g.ring() == ring)) throw RingMismatch("generator outside the ring");
    if (g.is_zero()) continue;
    Polynomial r = reducer.reduce(g);
    if (!r.is_zero()) append(std::move(r));
  }

  while (!queue.empty()) {
    const auto [deg, i, j] = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({i, j});
    if (leads[i].coprime(leads[j])) continue;
    const Monomial l = leads[i].lcm(leads[j]);
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      chain = leads[k].divides(l) && !is_pending(i, k) && !is_pending(j, k);
    }
    if (chain) continue;
    Polynomial r = reducer.reduce(s_polynomial(basis[i], basis[j], order));
    if (!r.is_zero()) {
      if (r.is_constant()) {
        basis = {Polynomial::constant(ring, 1)};
        break;
      }
      append(std::move(r));
    }
  }

  GroebnerBasis gb(ring, order, basis.empty() ? basis : reduce_basis(basis, order));
  for (const auto& g : generators) {
    if (!gb.reduce(g).is_zero()) {
      throw std::logic_error("Gröbner basis does not contain generator " + g.to_string());
    }
  }
  return gb;
}

Ideal::Ideal(RingSpec ring, std::vector<Polynomial> generators)
    : ring_(ring), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (!(g.ring() == ring_)) throw RingMismatch("generator outside the ring");
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

const GroebnerBasis& Ideal::groebner_basis(const MonomialOrder& order) const {
  std::lock_guard lock(cache_->mutex);
  auto it = cache_->bases.find(order);
  if (it == cache_->bases.end()) {
    auto gb = std::make_unique<const GroebnerBasis>(buchberger(generators_, order, ring_));
    it = cache_->bases.emplace(order, std::move(gb)).first;
  }
  return *it->second;
}

MonomialIdeal::MonomialIdeal(std::size_t num_vars, std::vector<Monomial> generators)
    : num_vars_(num_vars) {
  std::sort(generators.begin(), generators.end(), [](const Monomial& a, const Monomial& b) {
    return MonomialOrder::degrevlex().greater(b, a);
  });
  for (auto& g : generators) {
    if (g.num_vars() != num_vars) throw RingMismatch("monomial outside the ring");
    if (std::none_of(gens_.begin(), gens_.end(), [&](const Monomial& h) { return h.divides(g); })) {
      gens_.push_back(std::move(g));
    }
  }
  std::sort(gens_.begin(), gens_.end(), [](const Monomial& a, const Monomial& b) {
    return MonomialOrder::degrevlex().greater(a, b);
  });
}

bool MonomialIdeal::contains(const Monomial& m) const noexcept {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool contains(const Ideal& ideal, const Polynomial& f, const MonomialOrder& order) {
  if (!(f.ring() == ideal.ring())) throw RingMismatch("polynomial outside the ring of the ideal");
  return ideal.groebner_basis(order).reduce(f).is_zero();
}

bool ideal_equal(const Ideal& a, const Ideal& b, const MonomialOrder& order) {
  if (!(a.ring() == b.ring())) throw RingMismatch("ideals in different rings");
  return a.groebner_basis(order) == b.groebner_basis(order);
}

Polynomial shift_variables(const Polynomial& f, const RingSpec& target, int offset) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    std::vector<unsigned> e(target.num_vars, 0);
    const auto raw = t.monomial.raw();
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (!raw[i]) continue;
      const long to = static_cast<long>(i) + offset;
      if (to < 0 || to >= static_cast<long>(target.num_vars)) {
        throw IndexOutOfRange("variable x" + std::to_string(i + 1) + " has no image");
      }
      e[static_cast<std::size_t>(to)] = raw[i];
    }
    terms.push_back({Monomial::from_exponents(e), t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring())) throw RingMismatch("ideals in different rings");
  const RingSpec& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal(ring, {});
  // t is x_1 of the extended ring; x_v becomes x_{v+1}.
  const RingSpec ext(ring.num_vars + 1, ring.field);
  const Polynomial t = Polynomial::variable(ext, 1);
  const Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(t * shift_variables(g, ext, 1));
  for (const auto& h : b.generators()) gens.push_back(one_minus_t * shift_variables(h, ext, 1));
  const GroebnerBasis gb = buchberger(gens, MonomialOrder::block(1), ext);
  std::vector<Polynomial> kept;
  for (const auto& g : gb.elements()) {
    const bool t_free = std::all_of(g.terms().begin(), g.terms().end(),
                                    [](const Term& term) { return term.monomial.exponent(1) == 0; });
    if (t_free) kept.push_back(shift_variables(g, ring, -1));
  }
  return Ideal(ring, std::move(kept));
}

bool radical_membership(const Ideal& ideal, const Polynomial& f) {
  if (!(f.ring() == ideal.ring())) throw RingMismatch("polynomial outside the ring of the ideal");
  if (f.is_zero()) return true;
  const RingSpec& ring = ideal.ring();
  const RingSpec ext(ring.num_vars + 1, ring.field);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(shift_variables(g, ext, 0));
  const Polynomial t = Polynomial::variable(ext, ext.num_vars);
  gens.push_back(t * shift_variables(f, ext, 0) - Polynomial::constant(ext, 1));
  return buchberger(gens, MonomialOrder::degrevlex(), ext).is_unit();
}

MonomialIdeal initial_ideal(const GroebnerBasis& gb) {
  return MonomialIdeal(gb.ring().num_vars, gb.leading_monomials());
}

namespace {

// Smallest variable set meeting every support mask.
int min_cover(std::span<const std::uint32_t> supports, std::uint32_t chosen, int size, int best) {
  if (size >= best) return best;
  for (const auto s : supports) {
    if (s & chosen) continue;
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      const std::uint32_t bit = rest & (~rest + 1);
      best = min_cover(supports, chosen | bit, size + 1, best);
    }
    return best;
  }
  return size;
}

}  // namespace

int krull_dimension(const MonomialIdeal& ideal) {
  std::vector<std::uint32_t> supports;
  for (const auto& g : ideal.minimal_generators()) {
    if (g.is_one()) throw std::domain_error("the unit ideal has no dimension");
    supports.push_back(g.support());
  }
  const int n = static_cast<int>(ideal.num_vars());
  return n - min_cover(supports, 0, 0, n + 1);
}

int krull_dimension(const Ideal& ideal, const MonomialOrder& order) {
  if (ideal.is_zero()) throw ZeroIdeal("dimension of the zero ideal is not computed");
  return krull_dimension(initial_ideal(ideal.groebner_basis(order)));
}

}  // namespace hankel
