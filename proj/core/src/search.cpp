#include "richsf/search.hpp"

#include <algorithm>
#include <atomic>
#include <bitset>
#include <mutex>
#include <set>
#include <thread>

#include "richsf/squarefree.hpp"

namespace richsf {

namespace {

using Clock = std::chrono::steady_clock;
using LetterSet = std::bitset<kMaxAlphabetCapacity>;

constexpr std::uint64_t kFlushEvery = 4096;

LetterSet alphabet_of(std::span<const Letter> w) {
  LetterSet s;
  for (Letter a : w) s.set(a);
  return s;
}

// Shared between workers: node budget, deadline, progress reporting.
class Budget {
 public:
  explicit Budget(const SearchConfig& cfg) : cfg_(cfg), next_report_(cfg.progress_interval) {
    if (cfg.max_seconds) {
      deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(*cfg.max_seconds);
    }
  }

  bool stopped() const noexcept { return stop_.load(std::memory_order_relaxed); }
  std::uint64_t nodes() const noexcept { return nodes_.load(); }

  // Returns false once the search has to stop.
  bool account(std::uint64_t batch, std::size_t depth) {
    const std::uint64_t total = nodes_.fetch_add(batch) + batch;
    if (cfg_.max_nodes && total >= *cfg_.max_nodes) stop_ = true;
    if (deadline_ && Clock::now() >= *deadline_) stop_ = true;
    if (cfg_.on_progress && cfg_.progress_interval > 0 && total >= next_report_.load()) {
      std::lock_guard lock(progress_mu_);
      if (total >= next_report_.load()) {
        next_report_ = (total / cfg_.progress_interval + 1) * cfg_.progress_interval;
        cfg_.on_progress(SearchProgress{total, depth, best_.load()});
      }
    }
    return !stopped();
  }

  void offer_best(std::size_t len) {
    std::size_t cur = best_.load();
    while (len > cur && !best_.compare_exchange_weak(cur, len)) {
    }
  }

 private:
  const SearchConfig& cfg_;
  std::optional<Clock::time_point> deadline_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> stop_{false};
  std::atomic<std::uint64_t> next_report_;
  std::atomic<std::size_t> best_{0};
  std::mutex progress_mu_;
};

// One depth-first walker with its own palindromic tree.
class Explorer {
 public:
  Explorer(const SearchConfig& cfg, Budget& budget, const WordVisitor* visitor = nullptr)
      : n_(cfg.n), collect_all_(cfg.collect_all_longest), budget_(budget), visitor_(visitor), idx_(cfg.n) {}

  ~Explorer() { flush(); }

  void explore_from(std::span<const Letter> prefix) {
    reset_to(prefix);
    dfs();
    flush();
  }

  // Visits words shorter than split and hands back the words of length split.
  void collect_frontier(std::size_t split, std::vector<std::vector<Letter>>& tasks) {
    reset_to({});
    frontier(split, tasks);
    flush();
  }

  std::size_t best() const noexcept { return best_; }
  const std::set<Word>& classes() const noexcept { return classes_; }
  std::size_t max_depth() const noexcept { return max_depth_; }

 private:
  void reset_to(std::span<const Letter> prefix) {
    idx_.clear();
    used_ = 0;
    for (Letter a : prefix) {
      idx_.push(a);
      used_ = std::max<unsigned>(used_, a + 1u);
    }
  }

  template <typename Body>
  void for_each_child(Body&& body) {
    const unsigned limit = std::min(used_ + 1, n_);
    for (unsigned a = 0; a < limit; ++a) {
      const PushRecord rec = idx_.push(static_cast<Letter>(a));
      if (rec.created_node && !square_ending_at_end(idx_.letters())) {
        const unsigned saved = used_;
        if (a == used_) ++used_;
        body();
        used_ = saved;
      }
      idx_.pop();
      if (stopped_) return;
    }
  }

  void dfs() {
    if (idx_.length() > 0) visit();
    if (stopped_) return;
    for_each_child([this] { dfs(); });
  }

  void frontier(std::size_t split, std::vector<std::vector<Letter>>& tasks) {
    if (idx_.length() == split) {
      tasks.emplace_back(idx_.letters().begin(), idx_.letters().end());
      return;
    }
    if (idx_.length() > 0) visit();
    if (stopped_) return;
    for_each_child([&] { frontier(split, tasks); });
  }

  void visit() {
    const std::size_t len = idx_.length();
    max_depth_ = std::max(max_depth_, len);
    if (visitor_) (*visitor_)(idx_.letters());
    if (used_ == n_ && len >= best_) record(len);
    if (++unflushed_ >= kFlushEvery) flush();
  }

  void record(std::size_t len) {
    if (len > best_) {
      best_ = len;
      classes_.clear();
      budget_.offer_best(len);
    }
    Word canon = canonical_class(Word(idx_.letters()));
    if (collect_all_) {
      classes_.insert(std::move(canon));
    } else if (classes_.empty() || canon < *classes_.begin()) {
      classes_.clear();
      classes_.insert(std::move(canon));
    }
  }

  void flush() {
    if (unflushed_ == 0) return;
    if (!budget_.account(unflushed_, idx_.length())) stopped_ = true;
    unflushed_ = 0;
  }

  unsigned n_;
  bool collect_all_;
  Budget& budget_;
  const WordVisitor* visitor_;
  PalIndex idx_;
  unsigned used_ = 0;
  std::uint64_t unflushed_ = 0;
  bool stopped_ = false;
  std::size_t best_ = 0;
  std::size_t max_depth_ = 0;
  std::set<Word> classes_;
};

void merge_into(SearchResult& out, std::set<Word>& classes, std::size_t best, const std::set<Word>& more,
                bool collect_all) {
  if (best < out.best_length) return;
  if (best > out.best_length) {
    out.best_length = best;
    classes.clear();
  }
  classes.insert(more.begin(), more.end());
  if (!collect_all && classes.size() > 1) classes.erase(std::next(classes.begin()), classes.end());
}

}  // namespace

SearchResult compute_r(const SearchConfig& cfg) {
  if (cfg.n == 0 || cfg.n > kMaxAlphabetCapacity) throw std::invalid_argument("alphabet size out of range");
  Budget budget(cfg);
  SearchResult result;
  std::set<Word> classes;

  const unsigned workers = std::max(1u, cfg.workers);
  if (workers == 1) {
    Explorer explorer(cfg, budget);
    explorer.explore_from({});
    merge_into(result, classes, explorer.best(), explorer.classes(), cfg.collect_all_longest);
  } else {
    std::vector<std::vector<Letter>> tasks;
    Explorer head(cfg, budget);
    head.collect_frontier(cfg.split_depth, tasks);
    merge_into(result, classes, head.best(), head.classes(), cfg.collect_all_longest);

    std::atomic<std::size_t> next{0};
    std::vector<std::unique_ptr<Explorer>> explorers;
    for (unsigned i = 0; i < workers; ++i) explorers.push_back(std::make_unique<Explorer>(cfg, budget));
    {
      std::vector<std::jthread> threads;
      for (unsigned i = 0; i < workers; ++i) {
        threads.emplace_back([&, i] {
          Explorer& ex = *explorers[i];
          for (std::size_t t = next++; t < tasks.size() && !budget.stopped(); t = next++) {
            ex.explore_from(tasks[t]);
          }
        });
      }
    }
    for (const auto& ex : explorers) {
      merge_into(result, classes, ex->best(), ex->classes(), cfg.collect_all_longest);
    }
  }

  result.longest_classes.assign(classes.begin(), classes.end());
  result.nodes_visited = budget.nodes();
  result.exhausted = !budget.stopped();
  return result;
}

EnumerationStats enumerate(const SearchConfig& cfg, const WordVisitor& visitor) {
  if (cfg.n == 0 || cfg.n > kMaxAlphabetCapacity) throw std::invalid_argument("alphabet size out of range");
  SearchConfig local = cfg;
  local.collect_all_longest = false;
  Budget budget(local);
  EnumerationStats stats;
  {
    Explorer explorer(local, budget, &visitor);
    explorer.explore_from({});
    stats.max_depth = explorer.max_depth();
  }
  stats.nodes_visited = budget.nodes();
  stats.exhausted = !budget.stopped();
  return stats;
}

// ---------------------------------------------------------------------------

SpecialLetter right_special(const Word& w) {
  if (w.empty()) throw std::invalid_argument("the empty word has no special letter");
  std::bitset<kMaxAlphabetCapacity> seen;
  std::size_t pos = w.size() - 1;
  for (std::size_t i = w.size(); i-- > 0;) {
    if (!seen.test(w[i])) {
      seen.set(w[i]);
      pos = i;
    }
  }
  return {w[pos], pos};
}

SpecialLetter left_special(const Word& w) {
  if (w.empty()) throw std::invalid_argument("the empty word has no special letter");
  std::bitset<kMaxAlphabetCapacity> seen;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!seen.test(w[i])) {
      seen.set(w[i]);
      pos = i;
    }
  }
  return {w[pos], pos};
}

std::string_view to_string(LemmaOutcome outcome) {
  switch (outcome) {
    case LemmaOutcome::pass: return "pass";
    case LemmaOutcome::fail: return "fail";
    case LemmaOutcome::not_applicable: return "not_applicable";
  }
  return "?";
}

namespace {

bool rich_and_square_free(const Word& w) { return is_square_free(w) && is_rich(w); }

}  // namespace

LemmaOutcome check_lemma_middle(const Word& w) {
  if (w.empty() || !is_palindrome(w) || !rich_and_square_free(w)) {
    throw std::invalid_argument("middle-letter lemma needs a non-empty rich square-free palindrome");
  }
  return w.count(w[w.size() / 2]) == 1 ? LemmaOutcome::pass : LemmaOutcome::fail;
}

LemmaOutcome check_lemma_alph_chain(const Word& w) {
  if (!rich_and_square_free(w)) throw std::invalid_argument("alphabet-chain lemma needs a rich square-free word");
  if (w.alphabet_size() < 3) return LemmaOutcome::not_applicable;
  const Letter split = left_special(w).letter;

  std::vector<std::span<const Letter>> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= w.size(); ++i) {
    if (i == w.size() || w[i] == split) {
      parts.push_back(w.span().subspan(start, i - start));
      start = i + 1;
    }
  }
  if (parts.size() < 3) return LemmaOutcome::not_applicable;

  for (std::size_t i = 1; i + 1 < parts.size(); ++i) {
    const auto ui = parts[i];
    if (ui.empty() || ui.size() % 2 == 0 || !is_palindrome(ui)) return LemmaOutcome::fail;
    LetterSet allowed = alphabet_of(ui);
    allowed.reset(ui[ui.size() / 2]);
    const LetterSet next = alphabet_of(parts[i + 1]);
    if ((next & ~allowed).any()) return LemmaOutcome::fail;
  }
  return LemmaOutcome::pass;
}

LemmaOutcome check_lemma_l3(const Word& w) {
  if (w.alphabet_size() < 3 || !rich_and_square_free(w)) return LemmaOutcome::not_applicable;
  const SpecialLetter left = left_special(w);
  const SpecialLetter right = right_special(w);
  if (left.position >= right.position) return LemmaOutcome::not_applicable;
  if (left.letter == right.letter) return LemmaOutcome::fail;
  LetterSet expected = alphabet_of(w.span());
  expected.reset(left.letter);
  expected.reset(right.letter);
  const auto y = w.span().subspan(left.position + 1, right.position - left.position - 1);
  return alphabet_of(y) == expected ? LemmaOutcome::pass : LemmaOutcome::fail;
}

LemmaReport check_lemmas(const Word& w) {
  LemmaReport report;
  if (!w.empty() && is_palindrome(w)) report.middle = check_lemma_middle(w);
  report.alph_chain = check_lemma_alph_chain(w);
  report.l3 = check_lemma_l3(w);
  return report;
}

LemmaSweep sweep_lemmas(unsigned max_letters) {
  LemmaSweep sweep;
  SearchConfig cfg;
  cfg.n = max_letters;
  enumerate(cfg, [&](std::span<const Letter> letters) {
    const Word w(letters);
    ++sweep.words;
    const LemmaReport report = check_lemmas(w);
    sweep.middle_applied += report.middle != LemmaOutcome::not_applicable;
    sweep.alph_chain_applied += report.alph_chain != LemmaOutcome::not_applicable;
    sweep.l3_applied += report.l3 != LemmaOutcome::not_applicable;
    if (!report.ok()) sweep.failures.push_back(format_word(w, WordFormat::ids));
  });
  return sweep;
}

std::vector<std::string> check_construction_specials(const ConstructionRecord& rec) {
  std::vector<std::string> out;
  if (rec.n < 3) return out;
  const Word& w = rec.w;
  const Letter an = letter_id(A(rec.n));
  const Letter bn = letter_id(B(rec.n));
  const auto last_a = std::find(w.letters().rbegin(), w.letters().rend(), an);
  const auto first_b = std::find(w.begin(), w.end(), bn);
  if (last_a == w.letters().rend() || first_b == w.end()) {
    out.push_back("w_" + std::to_string(rec.n) + " lacks A_n or B_n");
    return out;
  }
  const std::size_t a_pos = static_cast<std::size_t>(w.letters().rend() - last_a) - 1;
  const std::size_t b_pos = static_cast<std::size_t>(first_b - w.begin());
  if (right_special(w) != SpecialLetter{an, a_pos}) {
    out.push_back("w_" + std::to_string(rec.n) + ": rightmost A_n is not the right special letter");
  }
  if (left_special(w) != SpecialLetter{bn, b_pos}) {
    out.push_back("w_" + std::to_string(rec.n) + ": leftmost B_n is not the left special letter");
  }
  return out;
}

}  // namespace richsf
