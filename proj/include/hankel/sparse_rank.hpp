#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hankel {

/// Sparse vector as (index, value) pairs with strictly increasing indices.
template <class T>
using SparseVector = std::vector<std::pair<std::size_t, T>>;

/// Incremental row echelon form over Z/p.
class ModularEchelon {
 public:
  explicit ModularEchelon(std::uint32_t p) : p_(p) {}

  /// Reduces `row` against the stored pivots and keeps it if it survives.
  /// Returns true when the rank grew.
  bool insert(SparseVector<std::uint64_t> row) {
    for (auto& [idx, v] : row) v %= p_;
    std::erase_if(row, [](const auto& e) { return e.second == 0; });
    while (!row.empty()) {
      auto it = pivots_.find(row.front().first);
      if (it == pivots_.end()) {
        const std::uint64_t inv = inverse(row.front().second);
        for (auto& [idx, v] : row) v = v * inv % p_;
        pivots_.emplace(row.front().first, std::move(row));
        return true;
      }
      const std::uint64_t factor = row.front().second;
      row = axpy(row, it->second, p_ - factor);
    }
    return false;
  }

  std::size_t rank() const noexcept { return pivots_.size(); }

 private:
  std::uint64_t inverse(std::uint64_t a) const {
    std::uint64_t result = 1, base = a % p_, e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return result;
  }

  // row + c * pivot
  SparseVector<std::uint64_t> axpy(const SparseVector<std::uint64_t>& row,
                                   const SparseVector<std::uint64_t>& pivot, std::uint64_t c) const {
    SparseVector<std::uint64_t> out;
    out.reserve(row.size() + pivot.size());
    std::size_t a = 0, b = 0;
    while (a < row.size() || b < pivot.size()) {
      if (b == pivot.size() || (a < row.size() && row[a].first < pivot[b].first)) {
        out.push_back(row[a++]);
      } else if (a == row.size() || pivot[b].first < row[a].first) {
        out.emplace_back(pivot[b].first, pivot[b].second * c % p_);
        ++b;
      } else {
        const std::uint64_t v = (row[a].second + pivot[b].second * c) % p_;
        if (v) out.emplace_back(row[a].first, v);
        ++a;
        ++b;
      }
    }
    return out;
  }

  std::uint64_t p_;
  std::map<std::size_t, SparseVector<std::uint64_t>> pivots_;
};

/// Incremental fraction-free row echelon form over Z (rank over Q).
/// Each elimination step forms lead(p) * row - lead(row) * p and divides
/// the result by its content, so entries stay integral and small.
class IntegerEchelon {
 public:
  bool insert(SparseVector<mpz_class> row) {
    std::erase_if(row, [](const auto& e) { return e.second == 0; });
    while (!row.empty()) {
      auto it = pivots_.find(row.front().first);
      if (it == pivots_.end()) {
        normalize(row);
        pivots_.emplace(row.front().first, std::move(row));
        return true;
      }
      row = combine(row, it->second);
      normalize(row);
    }
    return false;
  }

  std::size_t rank() const noexcept { return pivots_.size(); }

 private:
  static void normalize(SparseVector<mpz_class>& row) {
    if (row.empty()) return;
    mpz_class g = 0;
    for (const auto& e : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
    if (row.front().second < 0) g = -g;
    if (g != 1) {
      for (auto& e : row) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
    }
  }

  // lead(pivot) * row - lead(row) * pivot; the leading entry cancels.
  static SparseVector<mpz_class> combine(const SparseVector<mpz_class>& row,
                                         const SparseVector<mpz_class>& pivot) {
    const mpz_class a = pivot.front().second;
    const mpz_class b = row.front().second;
    SparseVector<mpz_class> out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 1, j = 1;
    while (i < row.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
        out.emplace_back(row[i].first, a * row[i].second);
        ++i;
      } else if (i == row.size() || pivot[j].first < row[i].first) {
        out.emplace_back(pivot[j].first, -b * pivot[j].second);
        ++j;
      } else {
        mpz_class v = a * row[i].second - b * pivot[j].second;
        if (v != 0) out.emplace_back(row[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::map<std::size_t, SparseVector<mpz_class>> pivots_;
};

}  // namespace hankel
