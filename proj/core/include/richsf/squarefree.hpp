#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "richsf/word.hpp"

namespace richsf {

// w[end - 2h, end - h) == w[end - h, end)
struct SquareWitness {
  std::size_t half_length = 0;
  std::size_t end_position = 0;  // one past the last letter of the square

  friend bool operator==(const SquareWitness&, const SquareWitness&) = default;
};

// Shortest square that is a suffix of w, if any. This is the search hot path:
// each half length is tried in increasing order with an early mismatch exit.
inline std::optional<SquareWitness> square_ending_at_end(std::span<const Letter> w) {
  const std::size_t n = w.size();
  for (std::size_t h = 1; 2 * h <= n; ++h) {
    const Letter* right = w.data() + (n - h);
    const Letter* left = right - h;
    std::size_t k = h;
    while (k > 0 && left[k - 1] == right[k - 1]) --k;
    if (k == 0) return SquareWitness{h, n};
  }
  return std::nullopt;
}

inline std::optional<SquareWitness> square_ending_at_end(const Word& w) {
  return square_ending_at_end(w.span());
}

// Incremental suffix checks for short words, Main-Lorentz above 512 letters.
bool is_square_free(const Word& w);

// Main-Lorentz divide and conquer; pieces of at most `leaf` letters are
// checked incrementally.
bool is_square_free_divide_conquer(const Word& w, std::size_t leaf = 64);

// Direct comparison of every factor pair; oracle for is_square_free.
bool is_square_free_naive(const Word& w);

}  // namespace richsf
