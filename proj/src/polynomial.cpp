#include "hankel/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "hankel/errors.hpp"

namespace hankel {

namespace {

const MonomialOrder kStorageOrder = MonomialOrder::degrevlex();

bool storage_greater(const Term& a, const Term& b) {
  return kStorageOrder.greater(a.monomial, b.monomial);
}

}  // namespace

RingSpec::RingSpec(std::size_t n, Field f) : num_vars(n), field(f) {
  if (n == 0 || n > kMaxVariables) {
    throw std::invalid_argument("ring size " + std::to_string(n) + " outside [1, " +
                                std::to_string(kMaxVariables) + "]");
  }
}

Polynomial::Polynomial(RingSpec ring) : ring_(ring) {}

Polynomial Polynomial::constant(const RingSpec& ring, const Coeff& c) {
  return monomial(ring, Monomial(ring.num_vars), c);
}

Polynomial Polynomial::monomial(const RingSpec& ring, const Monomial& m, const Coeff& c) {
  Polynomial p(ring);
  if (m.num_vars() != ring.num_vars) throw RingMismatch("monomial outside the ring");
  Coeff r = ring.field.reduce(c);
  if (r != 0) p.terms_.push_back({m, std::move(r)});
  return p;
}

Polynomial Polynomial::variable(const RingSpec& ring, std::size_t var) {
  return monomial(ring, Monomial::variable(ring.num_vars, var));
}

Polynomial Polynomial::from_terms(const RingSpec& ring, std::vector<Term> terms) {
  Polynomial p(ring);
  for (auto& t : terms) {
    if (t.monomial.num_vars() != ring.num_vars) throw RingMismatch("term outside the ring");
  }
  std::sort(terms.begin(), terms.end(), storage_greater);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff = ring.field.add(p.terms_.back().coeff, t.coeff);
    } else {
      t.coeff = ring.field.reduce(t.coeff);
      p.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.coeff == 0; });
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

int Polynomial::degree() const noexcept {
  // Storage order is degree-compatible.
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().monomial.degree());
}

bool Polynomial::is_homogeneous() const noexcept {
  return terms_.empty() || terms_.front().monomial.degree() == terms_.back().monomial.degree();
}

bool Polynomial::is_homogeneous(std::span<const int> weights) const noexcept {
  long first = 0;
  for (std::size_t t = 0; t < terms_.size(); ++t) {
    long w = 0;
    const auto e = terms_[t].monomial.raw();
    for (std::size_t i = 0; i < e.size() && i < weights.size(); ++i) w += long{e[i]} * weights[i];
    if (t == 0) {
      first = w;
    } else if (w != first) {
      return false;
    }
  }
  return true;
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  if (order.kind() == OrderKind::degrevlex) return terms_.front();
  const Term* best = &terms_.front();
  for (const auto& t : terms_) {
    if (order.greater(t.monomial, best->monomial)) best = &t;
  }
  return *best;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (is_zero()) return *this;
  return scaled(ring_.field.div(Coeff(1), leading_coeff(order)));
}

Polynomial Polynomial::scaled(const Coeff& c) const {
  Polynomial out(ring_);
  const Coeff r = ring_.field.reduce(c);
  if (r == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.monomial, ring_.field.mul(t.coeff, r)});
  return out;
}

Polynomial Polynomial::times(const Monomial& m, const Coeff& c) const {
  Polynomial out(ring_);
  const Coeff r = ring_.field.reduce(c);
  if (r == 0) return out;
  out.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves degrevlex order.
  for (const auto& t : terms_) out.terms_.push_back({t.monomial * m, ring_.field.mul(t.coeff, r)});
  return out;
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (!(ring_ == other.ring_)) throw RingMismatch("polynomials from different rings");
}

void Polynomial::add_scaled(const Polynomial& other, const Coeff& factor) {
  check_ring(other);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  const Field& k = ring_.field;
  while (i < terms_.size() || j < other.terms_.size()) {
    if (j == other.terms_.size() ||
        (i < terms_.size() && kStorageOrder.greater(terms_[i].monomial, other.terms_[j].monomial))) {
      merged.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() ||
               kStorageOrder.greater(other.terms_[j].monomial, terms_[i].monomial)) {
      merged.push_back({other.terms_[j].monomial, k.mul(other.terms_[j].coeff, factor)});
      ++j;
    } else {
      Coeff c = k.add(terms_[i].coeff, k.mul(other.terms_[j].coeff, factor));
      if (c != 0) merged.push_back({terms_[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  add_scaled(other, Coeff(1));
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  add_scaled(other, ring_.field.neg(Coeff(1)));
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) terms.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
  }
  return Polynomial::from_terms(a.ring_, std::move(terms));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(a.ring_ == b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

namespace {

std::string render(const std::vector<std::pair<Monomial, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    std::string c = terms[t].second;
    const bool negative = !c.empty() && c.front() == '-';
    if (negative) c.erase(0, 1);
    if (t == 0) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Monomial& m = terms[t].first;
    if (m.is_one()) {
      out += c;
    } else {
      if (c != "1") out += c + '*';
      out += m.to_string();
    }
  }
  return out;
}

std::vector<Term> sorted_terms(std::span<const Term> terms, const MonomialOrder& order) {
  std::vector<Term> out(terms.begin(), terms.end());
  std::sort(out.begin(), out.end(),
            [&](const Term& a, const Term& b) { return order.greater(a.monomial, b.monomial); });
  return out;
}

}  // namespace

std::string Polynomial::to_string(const MonomialOrder& order) const {
  std::vector<std::pair<Monomial, std::string>> rendered;
  for (const auto& t : sorted_terms(terms_, order)) {
    rendered.emplace_back(t.monomial, ring_.field.format(t.coeff));
  }
  return render(rendered);
}

std::string Polynomial::canonical_string(const MonomialOrder& order) const {
  auto terms = sorted_terms(terms_, order);
  if (ring_.field.is_rational() && !terms.empty()) {
    mpz_class den = 1, num = 0;
    for (const auto& t : terms) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
    }
    Coeff scale(den, num);
    if (terms.front().coeff < 0) scale = -scale;
    for (auto& t : terms) t.coeff *= scale;
  } else if (!terms.empty()) {
    const Coeff inverse = ring_.field.div(1, terms.front().coeff);
    for (auto& t : terms) t.coeff = ring_.field.mul(t.coeff, inverse);
  }
  std::vector<std::pair<Monomial, std::string>> rendered;
  for (const auto& t : terms) rendered.emplace_back(t.monomial, ring_.field.format(t.coeff));
  return render(rendered);
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const RingSpec& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = get() == '-';
      skip_ws();
    }
    terms.push_back(parse_term(negative));
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      get();
      skip_ws();
      terms.push_back(parse_term(op == '-'));
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return text_[pos_++]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Term parse_term(bool negative) {
    Coeff c = 1;
    Monomial m(ring_.num_vars);
    bool need_var = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num = integer();
      mpz_class den = 1;
      skip_ws();
      if (peek() == '/') {
        get();
        skip_ws();
        den = integer();
        if (den == 0) fail("zero denominator");
      }
      c = Coeff(num, den);
      c.canonicalize();
      skip_ws();
      if (peek() == '*') {
        get();
        skip_ws();
      } else {
        need_var = false;
      }
    }
    if (need_var) {
      m = m * parse_var();
      for (;;) {
        skip_ws();
        if (peek() != '*') break;
        get();
        skip_ws();
        m = m * parse_var();
      }
    }
    return {m, negative ? Coeff(-c) : c};
  }

  Monomial parse_var() {
    if (peek() != 'x') fail("expected a variable 'x<index>'");
    get();
    const std::size_t at = pos_;
    const mpz_class idx = integer();
    if (idx < 1 || idx > static_cast<long>(ring_.num_vars)) {
      throw ParseError("variable index outside the ring", at);
    }
    unsigned power = 1;
    if (peek() == '^') {
      get();
      const mpz_class e = integer();
      if (e > 65535) fail("exponent too large");
      power = static_cast<unsigned>(e.get_ui());
    }
    return Monomial::variable(ring_.num_vars, idx.get_ui(), power);
  }

  std::string_view text_;
  const RingSpec& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingSpec& ring) {
  return PolyParser(text, ring).parse();
}

Reducer::Reducer(std::span<const Polynomial> basis, const MonomialOrder& order) : order_(order) {
  for (const auto& g : basis) add(g);
}

void Reducer::add(const Polynomial& divisor) {
  if (divisor.is_zero()) throw std::invalid_argument("zero polynomial among divisors");
  if (!basis_.empty() && !(basis_.front().ring() == divisor.ring())) {
    throw RingMismatch("divisors from different rings");
  }
  const Term& lt = divisor.leading_term(order_);
  leads_.push_back(lt.monomial);
  lead_coeffs_.push_back(lt.coeff);
  basis_.push_back(divisor);
}

int Reducer::find_divisor(const Monomial& m) const noexcept {
  for (std::size_t i = 0; i < leads_.size(); ++i) {
    if (leads_[i].divides(m)) return static_cast<int>(i);
  }
  return -1;
}

Polynomial Reducer::reduce(const Polynomial& f) const {
  if (!basis_.empty() && !(basis_.front().ring() == f.ring())) {
    throw RingMismatch("dividend and divisors from different rings");
  }
  const Field& k = f.ring().field;
  std::map<Monomial, Coeff, OrderGreater> work(OrderGreater{&order_});
  for (const auto& t : f.terms()) work.emplace(t.monomial, t.coeff);
  std::vector<Term> remainder;
  while (!work.empty()) {
    auto it = work.begin();
    const int idx = find_divisor(it->first);
    if (idx < 0) {
      remainder.push_back({it->first, std::move(it->second)});
      work.erase(it);
      continue;
    }
    const Monomial shift = it->first.quotient(leads_[idx]);
    const Coeff factor = k.div(it->second, lead_coeffs_[idx]);
    work.erase(it);
    const Monomial& lead = leads_[idx];
    for (const auto& t : basis_[idx].terms()) {
      if (t.monomial == lead) continue;
      const Coeff delta = k.mul(factor, t.coeff);
      auto [pos, inserted] = work.try_emplace(t.monomial * shift, k.neg(delta));
      if (!inserted) {
        pos->second = k.sub(pos->second, delta);
        if (pos->second == 0) work.erase(pos);
      }
    }
  }
  return Polynomial::from_terms(f.ring(), std::move(remainder));
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& order) {
  return Reducer(basis, order).reduce(f);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  const Term& lf = f.leading_term(order);
  const Term& lg = g.leading_term(order);
  const Monomial l = lf.monomial.lcm(lg.monomial);
  const Field& k = f.ring().field;
  Polynomial a = f.times(l.quotient(lf.monomial), k.div(Coeff(1), lf.coeff));
  a -= g.times(l.quotient(lg.monomial), k.div(Coeff(1), lg.coeff));
  return a;
}

}  // namespace hankel
