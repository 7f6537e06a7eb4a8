#include "richsf/bounds.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace richsf {

const std::map<unsigned, BigNat>& known_exact() {
  static const std::map<unsigned, BigNat> values{
      {1, 1}, {2, 3}, {3, 7}, {4, 15}, {5, 33}, {6, 67}, {7, 145},
  };
  return values;
}

std::optional<BigNat> exact_value(unsigned n) {
  const auto& values = known_exact();
  if (const auto it = values.find(n); it != values.end()) return it->second;
  return std::nullopt;
}

BigNat lower_basic(unsigned n) {
  if (n == 0) throw std::invalid_argument("lower_basic needs n >= 1");
  return (BigNat{1} << n) - 1;
}

BigNat conjecture_value(unsigned n, const std::map<unsigned, BigNat>& wn_lengths) {
  if (n == 0) throw std::invalid_argument("conjecture needs n >= 1");
  const auto cur = wn_lengths.find(n);
  if (cur == wn_lengths.end()) throw std::invalid_argument("|w_" + std::to_string(n) + "| not available");
  BigNat prev = 0;
  if (n > 1) {
    const auto it = wn_lengths.find(n - 1);
    if (it == wn_lengths.end()) throw std::invalid_argument("|w_" + std::to_string(n - 1) + "| not available");
    prev = it->second;
  }
  return std::max(cur->second, BigNat(2 * prev + 1));
}

BigNat cor2_chain(unsigned n, unsigned k, const BigNat& at_k_minus_1, const BigNat& at_k) {
  if (n < k || k < 2) throw std::invalid_argument("cor2_chain needs n >= k >= 2");
  BigNat prev2 = at_k_minus_1;
  BigNat prev = at_k;
  for (unsigned m = k + 1; m <= n; ++m) {
    BigNat next = cor2_step(prev, prev2);
    prev2 = std::move(prev);
    prev = std::move(next);
  }
  return prev;
}

BigNat prop2_chain(unsigned n, unsigned k, const BigNat& at_k) {
  if (n < k || (n - k) % 2 != 0) throw std::invalid_argument("prop2_chain needs n >= k with n = k mod 2");
  BigNat value = at_k;
  for (unsigned m = k + 2; m <= n; m += 2) value = prop2_step(value);
  return value;
}

BigNat upper_cor2(unsigned n) {
  if (n == 0) throw std::invalid_argument("upper_cor2 needs n >= 1");
  if (auto exact = exact_value(n)) return *exact;
  return cor2_chain(n, 7, *exact_value(6), *exact_value(7));
}

BigNat upper_prop2(unsigned n) {
  if (n < 7) throw std::invalid_argument("upper_prop2 needs n >= 7");
  const unsigned seed = n % 2 == 1 ? 5 : 6;
  return prop2_chain(n, seed, *exact_value(seed));
}

Rational rational_pow(const Rational& base, unsigned n) {
  Rational out{1};
  for (unsigned i = 0; i < n; ++i) out *= base;
  return out;
}

bool above_growth(const BigNat& value, const Rational& base, unsigned n) {
  return rational_pow(base, n) < Rational(value);
}

bool below_growth(const BigNat& value, const Rational& base, unsigned n) {
  return Rational(value) < rational_pow(base, n);
}

BigNat BoundsRow::best_lower() const {
  BigNat best = lower_basic;
  if (lower_wn) best = std::max(best, *lower_wn);
  if (exact) best = std::max(best, *exact);
  return best;
}

BigNat BoundsRow::best_upper() const {
  if (exact) return *exact;
  BigNat best = upper_cor2;
  if (upper_prop2) best = std::min(best, *upper_prop2);
  return best;
}

std::vector<BoundsRow> bounds_table(unsigned n_max, const std::map<unsigned, BigNat>& wn_lengths) {
  if (n_max == 0) throw std::invalid_argument("bounds_table needs n_max >= 1");
  std::vector<BoundsRow> rows;
  for (unsigned n = 1; n <= n_max; ++n) {
    BoundsRow row;
    row.n = n;
    row.exact = exact_value(n);
    row.lower_basic = lower_basic(n);
    if (const auto it = wn_lengths.find(n); it != wn_lengths.end()) row.lower_wn = it->second;
    if (wn_lengths.count(n) && (n == 1 || wn_lengths.count(n - 1))) row.conjecture = conjecture_value(n, wn_lengths);
    row.upper_cor2 = upper_cor2(n);
    if (n >= 7) row.upper_prop2 = upper_prop2(n);
    if (n >= 5) {
      row.lower_growth_ok = above_growth(row.best_lower(), kLowerGrowth, n);
      row.upper_growth_ok = below_growth(row.best_upper(), kUpperGrowth, n);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace richsf
