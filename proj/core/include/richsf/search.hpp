#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "richsf/construction.hpp"
#include "richsf/pal_index.hpp"
#include "richsf/word.hpp"

namespace richsf {

struct SearchProgress {
  std::uint64_t nodes_visited = 0;
  std::size_t depth = 0;
  std::size_t best_length = 0;
};

struct SearchConfig {
  unsigned n = 1;
  std::optional<std::uint64_t> max_nodes;
  std::optional<std::chrono::duration<double>> max_seconds;
  unsigned workers = 1;
  bool collect_all_longest = false;
  // Subtrees rooted at this depth are the unit of work handed to workers.
  unsigned split_depth = 6;
  std::uint64_t progress_interval = std::uint64_t{1} << 24;
  std::function<void(const SearchProgress&)> on_progress;
};

struct SearchResult {
  std::size_t best_length = 0;
  // Canonical forms, sorted. With collect_all_longest off this holds the
  // smallest class only.
  std::vector<Word> longest_classes;
  std::uint64_t nodes_visited = 0;
  bool exhausted = false;
};

// Longest rich square-free words using exactly cfg.n letters. The tree walked
// is the set of rich square-free words in restricted-growth form (letter k+1
// first appears after letter k), which is closed under prefixes; a child
// survives only if its last letter added a new palindrome and closed no square.
SearchResult compute_r(const SearchConfig& cfg);

struct EnumerationStats {
  std::uint64_t nodes_visited = 0;
  std::size_t max_depth = 0;
  bool exhausted = false;
};

using WordVisitor = std::function<void(std::span<const Letter>)>;

// Single-threaded depth-first walk of the same tree, calling visitor on every
// non-empty word, parents before children.
EnumerationStats enumerate(const SearchConfig& cfg, const WordVisitor& visitor);

// ---------------------------------------------------------------------------
// Special letters

struct SpecialLetter {
  Letter letter = 0;
  std::size_t position = 0;

  friend bool operator==(const SpecialLetter&, const SpecialLetter&) = default;
};

// The letter whose rightmost occurrence is followed by every other letter of w.
SpecialLetter right_special(const Word& w);
// The letter whose leftmost occurrence is preceded by every other letter of w.
SpecialLetter left_special(const Word& w);

// ---------------------------------------------------------------------------
// Executable forms of the structural lemmas on rich square-free words

enum class LemmaOutcome { pass, fail, not_applicable };

std::string_view to_string(LemmaOutcome outcome);

// The middle letter of a rich square-free palindrome occurs once.
// Throws std::invalid_argument unless w is a rich square-free palindrome.
LemmaOutcome check_lemma_middle(const Word& w);

// Split w on its left special letter a: w = u_1 a u_2 a ... a u_k. For
// 2 <= i < k each u_i is an odd palindrome with middle letter m_i and
// Alph(u_{i+1}) must avoid m_i and stay inside Alph(u_i).
// Not applicable when k < 3 or w has fewer than 3 letters.
LemmaOutcome check_lemma_alph_chain(const Word& w);

// When the left special letter B comes before the right special letter A,
// w = x B y A z with Alph(y) = Alph(w) \ {A, B} and A != B.
LemmaOutcome check_lemma_l3(const Word& w);

struct LemmaReport {
  LemmaOutcome middle = LemmaOutcome::not_applicable;
  LemmaOutcome alph_chain = LemmaOutcome::not_applicable;
  LemmaOutcome l3 = LemmaOutcome::not_applicable;

  bool ok() const noexcept {
    return middle != LemmaOutcome::fail && alph_chain != LemmaOutcome::fail && l3 != LemmaOutcome::fail;
  }
};

// Runs every lemma that applies to a rich square-free word.
LemmaReport check_lemmas(const Word& w);

struct LemmaSweep {
  std::uint64_t words = 0;
  std::uint64_t middle_applied = 0;
  std::uint64_t alph_chain_applied = 0;
  std::uint64_t l3_applied = 0;
  std::vector<std::string> failures;
};

// check_lemmas on every enumerated word over at most max_letters letters.
LemmaSweep sweep_lemmas(unsigned max_letters);

// For w_n with n >= 3: the rightmost A_n is the right special letter and the
// leftmost B_n the left special letter. Returns violations.
std::vector<std::string> check_construction_specials(const ConstructionRecord& rec);

}  // namespace richsf
