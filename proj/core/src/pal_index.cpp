#include "richsf/pal_index.hpp"

#include <algorithm>

namespace richsf {

PalIndex::PalIndex(std::size_t alphabet_size) : alphabet_size_(alphabet_size) {
  if (alphabet_size == 0 || alphabet_size > kMaxAlphabetCapacity) {
    throw std::invalid_argument("alphabet size out of range");
  }
  clear();
}

void PalIndex::clear() {
  nodes_.clear();
  nodes_.push_back(PalNode{-1, kImaginaryRoot, kImaginaryRoot, 0});
  nodes_.push_back(PalNode{0, kImaginaryRoot, kImaginaryRoot, 0});
  next_.assign(2 * alphabet_size_, 0);
  word_.clear();
  undo_.clear();
  last_ = kEmptyRoot;
}

NodeId PalIndex::find_extendable(NodeId v, Letter a) const {
  const auto i = static_cast<std::ptrdiff_t>(word_.size()) - 1;  // position of a
  while (true) {
    const std::ptrdiff_t j = i - nodes_[static_cast<std::size_t>(v)].length - 1;
    if (j >= 0 && word_[static_cast<std::size_t>(j)] == a) return v;
    v = nodes_[static_cast<std::size_t>(v)].suffix_link;
  }
}

PushRecord PalIndex::push(Letter a) {
  if (a >= alphabet_size_) throw RangeError("letter id exceeds index alphabet");
  word_.push_back(a);
  PushRecord rec;
  rec.previous_last = last_;

  const NodeId parent = find_extendable(last_, a);
  const std::size_t slot = static_cast<std::size_t>(parent) * alphabet_size_ + a;
  if (next_[slot] != 0) {
    last_ = next_[slot];
    undo_.push_back(rec);
    return rec;
  }

  PalNode fresh;
  fresh.length = nodes_[static_cast<std::size_t>(parent)].length + 2;
  fresh.parent = parent;
  fresh.letter = a;
  if (fresh.length == 1) {
    fresh.suffix_link = kEmptyRoot;
  } else {
    const NodeId via = find_extendable(nodes_[static_cast<std::size_t>(parent)].suffix_link, a);
    fresh.suffix_link = next_[static_cast<std::size_t>(via) * alphabet_size_ + a];
  }
  const auto id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(fresh);
  next_.resize(next_.size() + alphabet_size_, 0);
  next_[slot] = id;
  last_ = id;

  rec.created_node = true;
  rec.created_node_id = id;
  undo_.push_back(rec);
  return rec;
}

void PalIndex::pop() {
  if (undo_.empty()) throw StateError("pop on an index with no pushes");
  const PushRecord rec = undo_.back();
  undo_.pop_back();
  if (rec.created_node) {
    const PalNode& gone = nodes_.back();
    next_[static_cast<std::size_t>(gone.parent) * alphabet_size_ + gone.letter] = 0;
    nodes_.pop_back();
    next_.resize(next_.size() - alphabet_size_);
  }
  word_.pop_back();
  last_ = rec.previous_last;
}

PalIndex build_index(const Word& w) {
  PalIndex idx(w.empty() ? 1 : static_cast<std::size_t>(w.max_letter()) + 1);
  for (Letter a : w) idx.push(a);
  return idx;
}

std::set<Word> distinct_palindromes(const Word& w) {
  std::set<Word> out{Word{}};
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t len = 1; i + len <= w.size(); ++len) {
      if (is_palindrome(w.span().subspan(i, len))) out.insert(w.factor(i, len));
    }
  }
  return out;
}

bool is_rich(const Word& w) { return build_index(w).rich(); }

std::size_t defect(const Word& w) { return build_index(w).defect(); }

bool rich_via_returns(const Word& w) {
  for (const Word& p : distinct_palindromes(w)) {
    if (p.empty()) continue;
    for (const Word& r : complete_returns(w, p)) {
      if (!is_palindrome(r)) return false;
    }
  }
  return true;
}

Word longest_palindromic_suffix(const Word& w, bool proper) {
  if (proper && w.empty()) throw std::invalid_argument("empty word has no proper palindromic suffix");
  const PalIndex idx = build_index(w);
  std::size_t len = idx.longest_palindromic_suffix();
  if (proper && len == w.size()) {
    len = static_cast<std::size_t>(idx.node(idx.node(idx.last()).suffix_link).length);
  }
  return w.factor(w.size() - len, len);
}

Word longest_palindromic_prefix(const Word& w, bool proper) {
  return reverse(longest_palindromic_suffix(reverse(w), proper));
}

namespace {

Word close_on_suffix(const Word& w, bool proper) {
  const Word u = longest_palindromic_suffix(w, proper);
  const Word v = w.factor(0, w.size() - u.size());
  return w + reverse(v);
}

}  // namespace

Word closure(const Word& w, ClosureKind kind) {
  switch (kind) {
    case ClosureKind::plus: return close_on_suffix(w, false);
    case ClosureKind::proper_suffix: return close_on_suffix(w, true);
    case ClosureKind::proper_prefix: return reverse(close_on_suffix(reverse(w), true));
  }
  throw std::invalid_argument("unknown closure kind");
}

}  // namespace richsf
