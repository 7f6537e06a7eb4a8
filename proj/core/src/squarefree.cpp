#include "richsf/squarefree.hpp"

#include <algorithm>
#include <vector>

namespace richsf {

namespace {

constexpr std::size_t kIncrementalLimit = 512;
constexpr int kSeparator = -1;

std::vector<int> z_function(const std::vector<int>& s) {
  const int n = static_cast<int>(s.size());
  std::vector<int> z(s.size(), 0);
  for (int i = 1, l = 0, r = 0; i < n; ++i) {
    if (i < r) z[static_cast<std::size_t>(i)] = std::min(r - i, z[static_cast<std::size_t>(i - l)]);
    while (i + z[static_cast<std::size_t>(i)] < n &&
           s[static_cast<std::size_t>(z[static_cast<std::size_t>(i)])] ==
               s[static_cast<std::size_t>(i + z[static_cast<std::size_t>(i)])]) {
      ++z[static_cast<std::size_t>(i)];
    }
    if (i + z[static_cast<std::size_t>(i)] > r) {
      l = i;
      r = i + z[static_cast<std::size_t>(i)];
    }
  }
  return z;
}

int z_at(const std::vector<int>& z, int i) {
  return i >= 0 && i < static_cast<int>(z.size()) ? z[static_cast<std::size_t>(i)] : 0;
}

std::vector<int> joined(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size() + 1);
  out.insert(out.end(), a.begin(), a.end());
  out.push_back(kSeparator);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Main-Lorentz divide and conquer: a square lies in the left half, in the
// right half, or crosses the cut. Crossing squares are found per centre with
// four Z-arrays, O(n log n) overall.
bool has_square(const std::vector<int>& s, std::size_t leaf) {
  const int n = static_cast<int>(s.size());
  if (n < 2) return false;
  if (static_cast<std::size_t>(n) <= leaf) {
    std::vector<Letter> small(s.begin(), s.end());
    for (std::size_t end = 2; end <= small.size(); ++end) {
      if (square_ending_at_end(std::span<const Letter>(small).first(end))) return true;
    }
    return false;
  }
  const int nu = n / 2;
  const int nv = n - nu;
  const std::vector<int> u(s.begin(), s.begin() + nu);
  const std::vector<int> v(s.begin() + nu, s.end());
  if (has_square(u, leaf) || has_square(v, leaf)) return true;

  const std::vector<int> ru(u.rbegin(), u.rend());
  const std::vector<int> rv(v.rbegin(), v.rend());
  const auto z1 = z_function(ru);
  const auto z2 = z_function(joined(v, u));
  const auto z3 = z_function(joined(ru, rv));
  const auto z4 = z_function(v);

  for (int centre = 0; centre < n; ++centre) {
    int half = 0;
    int k1 = 0;
    int k2 = 0;
    const bool left = centre < nu;
    if (left) {
      half = nu - centre;
      k1 = z_at(z1, nu - centre);
      k2 = z_at(z2, nv + 1 + centre);
    } else {
      half = centre - nu + 1;
      k1 = z_at(z3, nu + 1 + nv - 1 - (centre - nu));
      k2 = z_at(z4, centre - nu + 1);
    }
    const int lo = std::max(1, half - k2);
    int hi = std::min(half, k1);
    if (left && hi == half) --hi;
    if (lo <= hi) return true;
  }
  return false;
}

}  // namespace

bool is_square_free(const Word& w) {
  const auto letters = w.span();
  if (letters.size() <= kIncrementalLimit) {
    for (std::size_t end = 2; end <= letters.size(); ++end) {
      if (square_ending_at_end(letters.first(end))) return false;
    }
    return true;
  }
  return is_square_free_divide_conquer(w);
}

bool is_square_free_divide_conquer(const Word& w, std::size_t leaf) {
  return !has_square(std::vector<int>(w.begin(), w.end()), std::max<std::size_t>(leaf, 1));
}

bool is_square_free_naive(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t start = 0; start < n; ++start) {
    for (std::size_t half = 1; start + 2 * half <= n; ++half) {
      const auto first = w.begin() + static_cast<std::ptrdiff_t>(start);
      const auto second = first + static_cast<std::ptrdiff_t>(half);
      if (std::equal(first, second, second)) return false;
    }
  }
  return true;
}

}  // namespace richsf
