#pragma once

#include <map>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace richsf {

using BigNat = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// r(1..7); nothing larger is known exactly.
const std::map<unsigned, BigNat>& known_exact();
std::optional<BigNat> exact_value(unsigned n);

// 2^n - 1, from r(n) >= 2 r(n-1) + 1.
BigNat lower_basic(unsigned n);

// max(|w_n|, 2|w_{n-1}| + 1), with |w_0| = 0.
BigNat conjecture_value(unsigned n, const std::map<unsigned, BigNat>& wn_lengths);

// One application of each upper-bound recursion.
inline BigNat cor2_step(const BigNat& r_prev, const BigNat& r_prev2) { return 2 * r_prev + r_prev2 + 2; }
inline BigNat prop2_step(const BigNat& r_prev2) { return 5 * r_prev2 + 4; }

// r(n) <= 2 r(n-1) + r(n-2) + 2 iterated from values at k-1 and k (n >= k).
BigNat cor2_chain(unsigned n, unsigned k, const BigNat& at_k_minus_1, const BigNat& at_k);
// r(n) <= 5 r(n-2) + 4 iterated from the value at k (n >= k, n = k mod 2).
BigNat prop2_chain(unsigned n, unsigned k, const BigNat& at_k);

// Exact r(n) up to 7, then the recursion seeded with r(6), r(7).
BigNat upper_cor2(unsigned n);
// n >= 7; seeded with r(5) for odd n and r(6) for even n.
BigNat upper_prop2(unsigned n);

inline const Rational kLowerGrowth{2008, 1000};
inline const Rational kUpperGrowth{2237, 1000};
inline const Rational kCoarseUpperGrowth{247, 100};

Rational rational_pow(const Rational& base, unsigned n);
bool above_growth(const BigNat& value, const Rational& base, unsigned n);  // base^n < value
bool below_growth(const BigNat& value, const Rational& base, unsigned n);  // value < base^n

struct BoundsRow {
  unsigned n = 0;
  std::optional<BigNat> exact;
  BigNat lower_basic;
  std::optional<BigNat> lower_wn;
  std::optional<BigNat> conjecture;
  BigNat upper_cor2;
  std::optional<BigNat> upper_prop2;
  // n >= 5 only
  std::optional<bool> lower_growth_ok;
  std::optional<bool> upper_growth_ok;

  BigNat best_lower() const;
  BigNat best_upper() const;
};

std::vector<BoundsRow> bounds_table(unsigned n_max, const std::map<unsigned, BigNat>& wn_lengths);

}  // namespace richsf
