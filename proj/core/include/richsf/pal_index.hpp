#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "richsf/word.hpp"

namespace richsf {

using NodeId = std::int32_t;

struct PalNode {
  std::int32_t length = 0;
  NodeId suffix_link = 0;
  // Node whose transition created this one; lets pop() unlink it.
  NodeId parent = 0;
  Letter letter = 0;

  friend bool operator==(const PalNode&, const PalNode&) = default;
};

struct PushRecord {
  bool created_node = false;
  NodeId previous_last = 0;
  std::optional<NodeId> created_node_id;

  friend bool operator==(const PushRecord&, const PushRecord&) = default;
};

class StateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Palindromic tree (eertree) over a growing word, with an undo log so that a
// depth-first search can retract the last letter in O(1).
//
// Node 0 is the imaginary root of length -1, node 1 the empty palindrome.
// Every other node is one distinct non-empty palindromic factor.
class PalIndex {
 public:
  static constexpr NodeId kImaginaryRoot = 0;
  static constexpr NodeId kEmptyRoot = 1;

  explicit PalIndex(std::size_t alphabet_size = kDefaultAlphabetCapacity);

  PushRecord push(Letter a);
  void pop();
  void clear();

  std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  std::size_t length() const noexcept { return word_.size(); }
  std::span<const Letter> letters() const noexcept { return word_; }
  Word word() const { return Word(std::span<const Letter>(word_)); }

  std::size_t node_count() const noexcept { return nodes_.size(); }
  // Distinct palindromic factors of the current word, counting the empty word.
  std::size_t palindrome_count() const noexcept { return nodes_.size() - 1; }
  std::size_t defect() const noexcept { return word_.size() + 1 - palindrome_count(); }
  bool rich() const noexcept { return defect() == 0; }

  NodeId last() const noexcept { return last_; }
  const PalNode& node(NodeId id) const { return nodes_.at(static_cast<std::size_t>(id)); }
  NodeId transition(NodeId from, Letter a) const {
    return next_[static_cast<std::size_t>(from) * alphabet_size_ + a];
  }
  std::size_t longest_palindromic_suffix() const noexcept {
    return static_cast<std::size_t>(nodes_[static_cast<std::size_t>(last_)].length);
  }
  const std::vector<PushRecord>& undo_log() const noexcept { return undo_; }

  friend bool operator==(const PalIndex&, const PalIndex&) = default;

 private:
  NodeId find_extendable(NodeId v, Letter a) const;

  std::size_t alphabet_size_;
  std::vector<PalNode> nodes_;
  std::vector<NodeId> next_;  // node-major, alphabet_size_ slots per node; 0 = absent
  std::vector<Letter> word_;
  std::vector<PushRecord> undo_;
  NodeId last_ = kEmptyRoot;
};

PalIndex build_index(const Word& w);

// Naive enumeration of every palindromic factor, empty word included.
std::set<Word> distinct_palindromes(const Word& w);

bool is_rich(const Word& w);
std::size_t defect(const Word& w);

// Richness through complete returns: every complete return to every
// palindromic factor must itself be a palindrome. Quadratic-plus; oracle use.
bool rich_via_returns(const Word& w);

Word longest_palindromic_suffix(const Word& w, bool proper);
Word longest_palindromic_prefix(const Word& w, bool proper);

enum class ClosureKind { plus, proper_suffix, proper_prefix };

// plus:          shortest palindrome having w as prefix
// proper_suffix: v u ~v where u is the longest proper palindromic suffix
// proper_prefix: mirror image, keeps w as a suffix
Word closure(const Word& w, ClosureKind kind);

}  // namespace richsf
