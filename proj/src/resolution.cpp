#include "hankel/resolution.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <memory>
#include <sstream>
#include <unordered_map>

#include "hankel/errors.hpp"
#include "hankel/sparse_rank.hpp"

namespace hankel {

BettiTable::BettiTable(std::size_t num_vars, Entries entries, int complete_up_to, bool complete)
    : num_vars_(num_vars), complete_up_to_(complete_up_to), complete_(complete) {
  for (auto& [key, value] : entries) {
    if (value) entries_.emplace(key, value);
  }
}

std::uint64_t BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::require_complete() const {
  if (!complete_) {
    throw IncompleteTable("Betti table only computed up to degree " + std::to_string(complete_up_to_));
  }
}

int BettiTable::regularity() const {
  require_complete();
  int reg = 0;
  for (const auto& [key, value] : entries_) reg = std::max(reg, key.second - key.first);
  return reg;
}

int BettiTable::projective_dimension() const {
  require_complete();
  int pd = 0;
  for (const auto& [key, value] : entries_) pd = std::max(pd, key.first);
  return pd;
}

int BettiTable::depth() const { return static_cast<int>(num_vars_) - projective_dimension(); }

bool BettiTable::is_cohen_macaulay(int dimension) const { return depth() == dimension; }

bool BettiTable::has_linear_resolution() const {
  require_complete();
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) {
    return e.first.first == 0 || e.first.second == e.first.first + 1;
  });
}

std::string BettiTable::to_text() const {
  int pd = 0, reg = 0;
  for (const auto& [key, value] : entries_) {
    pd = std::max(pd, key.first);
    reg = std::max(reg, key.second - key.first);
  }
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{""}, totals{"total:"};
  for (int i = 0; i <= pd; ++i) {
    header.push_back(std::to_string(i));
    std::uint64_t sum = 0;
    for (const auto& [key, value] : entries_) {
      if (key.first == i) sum += value;
    }
    totals.push_back(std::to_string(sum));
  }
  rows.push_back(header);
  rows.push_back(totals);
  for (int r = 0; r <= reg; ++r) {
    std::vector<std::string> row{std::to_string(r) + ":"};
    for (int i = 0; i <= pd; ++i) {
      const auto v = at(i, i + r);
      row.push_back(v ? std::to_string(v) : ".");
    }
    rows.push_back(row);
  }
  std::vector<std::size_t> width(static_cast<std::size_t>(pd) + 2, 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += ' ';
      line += std::string(width[c] - row[c].size(), ' ') + row[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

nlohmann::json BettiTable::to_json() const {
  nlohmann::json betti = nlohmann::json::array();
  for (const auto& [key, value] : entries_) betti.push_back({key.first, key.second, value});
  nlohmann::json out{{"betti", betti}, {"complete_up_to", complete_up_to_}};
  if (complete_) {
    out["reg"] = regularity();
    out["pd"] = projective_dimension();
    out["depth"] = depth();
  }
  return out;
}

std::size_t default_betti_cap() {
  if (const char* env = std::getenv("HANKEL_MAX_BETTI_VARS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 9;
}

std::vector<Monomial> standard_monomials(const MonomialIdeal& init, unsigned degree) {
  const std::size_t n = init.num_vars();
  std::vector<Monomial> out;
  std::vector<unsigned> e(n, 0);
  // Enumerate exponent vectors of the given degree in lex-decreasing order.
  auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
    if (var + 1 == n) {
      e[var] = left;
      Monomial m = Monomial::from_exponents(e);
      if (!init.contains(m)) out.push_back(std::move(m));
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[var] = k;
      self(self, var + 1, left - k);
    }
    e[var] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

namespace {

// Standard monomials of one degree with their positions.
struct DegreeBasis {
  std::vector<Monomial> monomials;
  std::vector<long> weights;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
};

// Coefficients of NF(x_v * m) on the next degree's basis, as integers
// (over Q the row is scaled to a primitive integer vector; over Z/p the
// canonical representatives are used).
using IntRow = SparseVector<mpz_class>;

class KoszulBuilder {
 public:
  KoszulBuilder(const Ideal& ideal, const BettiOptions& options)
      : ring_(ideal.ring()), gb_(ideal.groebner_basis(MonomialOrder::degrevlex())),
        init_(initial_ideal(gb_)), n_(ring_.num_vars) {
    if (n_ > options.max_vars || n_ > 20) {
      throw CapExceeded("Betti computation capped at " + std::to_string(options.max_vars) +
                        " variables, ring has " + std::to_string(n_));
    }
    if (gb_.is_unit()) throw std::domain_error("Betti numbers of the unit ideal are not defined");
    for (const auto& g : gb_.elements()) {
      if (!g.is_homogeneous()) throw std::domain_error("Betti numbers need a homogeneous ideal");
    }
    weights_.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) weights_[v] = static_cast<int>(v + 1);
    const bool fine = std::all_of(gb_.elements().begin(), gb_.elements().end(),
                                  [&](const Polynomial& g) { return g.is_homogeneous(weights_); });
    if (!fine) std::fill(weights_.begin(), weights_.end(), 0);

    Monomial lcm(n_);
    for (const auto& g : init_.minimal_generators()) lcm = lcm.lcm(g);
    taylor_ = static_cast<int>(lcm.degree());
    bound_ = options.degree_bound.value_or(taylor_);
  }

  KoszulHomology run() {
    build_bases();
    BettiTable::Entries entries;
    std::map<std::pair<int, int>, std::uint64_t> chain_dims;
    const int n = static_cast<int>(n_);
    for (int j = 0; j <= bound_; ++j) {
      std::vector<std::uint64_t> dims(n + 2, 0), ranks(n + 2, 0);
      for (int i = 0; i <= std::min(n, j); ++i) {
        dims[i] = binom(n, i) * bases_[static_cast<std::size_t>(j - i)].monomials.size();
        chain_dims[{i, j}] = dims[i];
      }
      for (int i = 1; i <= std::min(n, j); ++i) ranks[i] = differential_rank(i, j);
      for (int i = 0; i <= std::min(n, j); ++i) {
        const std::uint64_t beta = dims[i] - ranks[i] - ranks[i + 1];
        if (beta) entries[{i, j}] = beta;
      }
    }
    return {BettiTable(n_, std::move(entries), bound_, bound_ >= taylor_), std::move(chain_dims),
            taylor_};
  }

 private:
  static std::uint64_t binom(int n, int k) {
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
  }

  long weight_of(const Monomial& m) const {
    long w = 0;
    const auto e = m.raw();
    for (std::size_t v = 0; v < n_; ++v) w += long{e[v]} * weights_[v];
    return w;
  }

  void build_bases() {
    bases_.assign(static_cast<std::size_t>(bound_) + 1, {});
    auto add = [&](DegreeBasis& b, Monomial m) {
      if (init_.contains(m) || b.index.contains(m)) return;
      b.index.emplace(m, b.monomials.size());
      b.weights.push_back(weight_of(m));
      b.monomials.push_back(std::move(m));
    };
    add(bases_[0], Monomial(n_));
    // Standard monomials are closed under division, so degree d+1 comes from
    // multiplying degree d by variables.
    for (int d = 0; d < bound_; ++d) {
      for (const auto& m : bases_[static_cast<std::size_t>(d)].monomials) {
        for (std::size_t v = 1; v <= n_; ++v) add(bases_[static_cast<std::size_t>(d) + 1], m * Monomial::variable(n_, v));
      }
    }
    // Canonical order inside each degree keeps the computation deterministic.
    for (auto& b : bases_) {
      std::vector<Monomial> sorted = b.monomials;
      std::sort(sorted.begin(), sorted.end(), [](const Monomial& a, const Monomial& c) {
        return MonomialOrder::degrevlex().greater(a, c);
      });
      b = {};
      for (auto& m : sorted) {
        b.index.emplace(m, b.monomials.size());
        b.weights.push_back(weight_of(m));
        b.monomials.push_back(std::move(m));
      }
    }
    products_.resize(bases_.size());
  }

  // NF(x_v * m) for m = bases_[d].monomials[idx], as a row over bases_[d+1].
  const IntRow& product(std::size_t d, std::size_t idx, std::size_t v) {
    auto& table = products_[d];
    if (table.empty()) table.resize(bases_[d].monomials.size() * n_);
    auto& slot = table[idx * n_ + v];
    if (slot) return *slot;
    const Monomial prod = bases_[d].monomials[idx] * Monomial::variable(n_, v + 1);
    const Polynomial nf = gb_.reduce(Polynomial::monomial(ring_, prod));
    IntRow row;
    mpz_class den = 1;
    for (const auto& t : nf.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    for (const auto& t : nf.terms()) {
      const Coeff scaled = t.coeff * den;
      row.emplace_back(bases_[d + 1].index.at(t.monomial), scaled.get_num());
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    slot = std::make_unique<IntRow>(std::move(row));
    return *slot;
  }

  // Rank of K_{i,j} -> K_{i-1,j}; sources e_S (x) m with |S| = i, deg m = j - i.
  std::uint64_t differential_rank(int i, int j) {
    const auto src_deg = static_cast<std::size_t>(j - i);
    const auto dst_deg = src_deg + 1;
    const DegreeBasis& src = bases_[src_deg];
    const DegreeBasis& dst = bases_[dst_deg];
    if (src.monomials.empty() || dst.monomials.empty()) return 0;

    // Target coordinates grouped by weight; key = (subset, monomial index).
    std::map<long, std::unordered_map<std::uint64_t, std::size_t>> target_index;
    for (std::uint32_t mask = 0; mask < (1u << n_); ++mask) {
      if (std::popcount(mask) != i - 1) continue;
      const long ws = subset_weight(mask);
      for (std::size_t k = 0; k < dst.monomials.size(); ++k) {
        auto& group = target_index[ws + dst.weights[k]];
        group.emplace(key(mask, k), group.size());
      }
    }
    std::map<long, std::vector<std::pair<std::uint32_t, std::size_t>>> sources;
    for (std::uint32_t mask = 0; mask < (1u << n_); ++mask) {
      if (std::popcount(mask) != i) continue;
      const long ws = subset_weight(mask);
      for (std::size_t k = 0; k < src.monomials.size(); ++k) sources[ws + src.weights[k]].emplace_back(mask, k);
    }

    std::uint64_t rank = 0;
    for (const auto& [weight, group] : sources) {
      auto tgt = target_index.find(weight);
      if (tgt == target_index.end()) continue;
      if (ring_.field.is_rational()) {
        IntegerEchelon echelon;
        for (const auto& [mask, k] : group) echelon.insert(image(mask, k, src_deg, tgt->second));
        rank += echelon.rank();
      } else {
        const std::uint64_t p = ring_.field.characteristic();
        ModularEchelon echelon(static_cast<std::uint32_t>(p));
        for (const auto& [mask, k] : group) {
          SparseVector<std::uint64_t> row;
          for (auto& [idx, v] : image(mask, k, src_deg, tgt->second)) {
            mpz_class r = v % p;
            if (r < 0) r += p;
            row.emplace_back(idx, r.get_ui());
          }
          echelon.insert(std::move(row));
        }
        rank += echelon.rank();
      }
    }
    return rank;
  }

  // d(e_S (x) m) = sum_t (-1)^t e_{S \ s_t} (x) NF(x_{s_t} m).
  IntRow image(std::uint32_t mask, std::size_t k, std::size_t src_deg,
               const std::unordered_map<std::uint64_t, std::size_t>& targets) {
    std::map<std::size_t, mpz_class> acc;
    int t = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      if (!(mask & (1u << v))) continue;
      const std::uint32_t rest = mask & ~(1u << v);
      const bool negative = (t++ % 2) == 1;
      for (const auto& [col, c] : product(src_deg, k, v)) {
        const std::size_t idx = targets.at(key(rest, col));
        if (negative) {
          acc[idx] -= c;
        } else {
          acc[idx] += c;
        }
      }
    }
    IntRow row;
    for (auto& [idx, c] : acc) {
      if (c != 0) row.emplace_back(idx, std::move(c));
    }
    return row;
  }

  long subset_weight(std::uint32_t mask) const {
    long w = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      if (mask & (1u << v)) w += weights_[v];
    }
    return w;
  }

  static std::uint64_t key(std::uint32_t mask, std::size_t k) {
    return (static_cast<std::uint64_t>(k) << 32) | mask;
  }

  const RingSpec& ring_;
  const GroebnerBasis& gb_;
  MonomialIdeal init_;
  std::size_t n_;
  std::vector<int> weights_;
  int taylor_ = 0;
  int bound_ = 0;
  std::vector<DegreeBasis> bases_;
  std::vector<std::vector<std::unique_ptr<IntRow>>> products_;
};

}  // namespace

KoszulHomology koszul_homology(const Ideal& ideal, const BettiOptions& options) {
  return KoszulBuilder(ideal, options).run();
}

BettiTable graded_betti(const Ideal& ideal, const BettiOptions& options) {
  return koszul_homology(ideal, options).table;
}

}  // namespace hankel
