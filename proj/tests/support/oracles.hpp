#pragma once

// Brute-force reference implementations. They share nothing with the library
// beyond the Word type and are deliberately slow and obvious.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "richsf/word.hpp"

namespace oracle {

using richsf::Letter;
using richsf::Word;

inline std::string key(const Word& w) { return std::string(w.begin(), w.end()); }

inline bool palindrome(const std::string& s) { return std::equal(s.begin(), s.end(), s.rbegin()); }

// Distinct palindromic factors, empty word included.
inline std::set<std::string> palindromes(const Word& w) {
  const std::string s = key(w);
  std::set<std::string> out{""};
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j <= s.size(); ++j)
      if (palindrome(s.substr(i, j - i))) out.insert(s.substr(i, j - i));
  return out;
}

inline bool rich(const Word& w) { return palindromes(w).size() == w.size() + 1; }

inline bool has_square(const Word& w) {
  const std::string s = key(w);
  for (std::size_t h = 1; 2 * h <= s.size(); ++h)
    for (std::size_t i = 0; i + 2 * h <= s.size(); ++i)
      if (s.compare(i, h, s, i + h, h) == 0) return true;
  return false;
}

// All words of the given length over {0..k-1}.
inline std::vector<Word> all_words(unsigned k, std::size_t length) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<Word> next;
    next.reserve(out.size() * k);
    for (const Word& w : out)
      for (unsigned a = 0; a < k; ++a) next.push_back(w + static_cast<Letter>(a));
    out = std::move(next);
  }
  return out;
}

inline Word random_word(std::mt19937_64& rng, unsigned k, std::size_t length) {
  std::uniform_int_distribution<unsigned> letter(0, k - 1);
  std::vector<Letter> v(length);
  for (auto& a : v) a = static_cast<Letter>(letter(rng));
  return Word(std::move(v));
}

inline Word relabel(const Word& w, const std::vector<Letter>& perm) {
  std::vector<Letter> v;
  for (Letter a : w) v.push_back(perm[a]);
  return Word(std::move(v));
}

inline Word reversed(const Word& w) { return Word(std::vector<Letter>(w.letters().rbegin(), w.letters().rend())); }

// Lexicographic minimum over every relabelling of w and of its reversal.
inline Word canonical(const Word& w) {
  if (w.empty()) return w;
  std::vector<Letter> perm(std::size_t{w.max_letter()} + 1);
  std::iota(perm.begin(), perm.end(), Letter{0});
  Word best = w;
  const Word r = reversed(w);
  do {
    best = std::min({best, relabel(w, perm), relabel(r, perm)});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline std::set<Letter> alph(const Word& w, std::size_t from, std::size_t to) {
  return std::set<Letter>(w.begin() + static_cast<std::ptrdiff_t>(from), w.begin() + static_cast<std::ptrdiff_t>(to));
}

// Every (letter, position) that qualifies as right special / left special.
inline std::vector<std::pair<Letter, std::size_t>> right_specials(const Word& w) {
  std::vector<std::pair<Letter, std::size_t>> out;
  const auto all = alph(w, 0, w.size());
  for (Letter a : all) {
    std::size_t p = w.size();
    while (w[--p] != a) {}
    auto rest = alph(w, p + 1, w.size());
    rest.insert(a);
    if (rest == all) out.emplace_back(a, p);
  }
  return out;
}

inline std::vector<std::pair<Letter, std::size_t>> left_specials(const Word& w) {
  std::vector<std::pair<Letter, std::size_t>> out;
  const auto all = alph(w, 0, w.size());
  for (Letter a : all) {
    std::size_t p = 0;
    while (w[p] != a) ++p;
    auto rest = alph(w, 0, p);
    rest.insert(a);
    if (rest == all) out.emplace_back(a, p);
  }
  return out;
}

}  // namespace oracle
