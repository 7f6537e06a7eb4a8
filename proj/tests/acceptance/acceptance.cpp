// One PASS/FAIL line per acceptance criterion. Exit status is non-zero when
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "listed_words.hpp"
#include "oracles.hpp"
#include "richsf/bounds.hpp"
#include "richsf/cli.hpp"
#include "richsf/construction.hpp"
#include "richsf/pal_index.hpp"
#include "richsf/search.hpp"
#include "richsf/squarefree.hpp"

using namespace richsf;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;  // keep the first failure as the headline
    pass = false;
  }
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << title << " (" << fmt_seconds(seconds_since(t0))
            << ")" << (o.detail.empty() ? "" : " -- " + o.detail) << std::endl;
}

SearchResult search(unsigned n) {
  SearchConfig cfg;
  cfg.n = n;
  cfg.collect_all_longest = true;
  return compute_r(cfg);
}

std::set<Word> listed_classes(unsigned n) {
  std::set<Word> out;
  for (const auto& s : fixtures::longest_words().at(n)) out.insert(canonical_class(digits(s)));
  return out;
}

// Criterion 1: r(1..5) within 10 s total, r(6) within 10 min, r(7) unbounded.
Outcome exact_values() {
  Outcome o;
  const std::vector<std::size_t> expected{1, 3, 7, 15, 33, 67, 145};
  std::ostringstream d;
  auto t0 = Clock::now();
  for (unsigned n = 1; n <= 5; ++n) {
    const SearchResult r = search(n);
    if (!r.exhausted || r.best_length != expected[n - 1])
      o.fail("r(" + std::to_string(n) + ") = " + std::to_string(r.best_length));
  }
  const double small = seconds_since(t0);
  if (small >= 10.0) o.fail("n <= 5 took " + fmt_seconds(small));
  t0 = Clock::now();
  const SearchResult r6 = search(6);
  const double six = seconds_since(t0);
  if (!r6.exhausted || r6.best_length != 67) o.fail("r(6) = " + std::to_string(r6.best_length));
  if (six >= 600.0) o.fail("n = 6 took " + fmt_seconds(six));
  t0 = Clock::now();
  const SearchResult r7 = search(7);
  const double seven = seconds_since(t0);
  if (!r7.exhausted || r7.best_length != 145) o.fail("r(7) = " + std::to_string(r7.best_length));
  d << "r(1..7) = 1,3,7,15,33," << r6.best_length << "," << r7.best_length << "; n<=5 " << fmt_seconds(small)
    << ", n=6 " << fmt_seconds(six) << ", n=7 " << fmt_seconds(seven) << " (" << r7.nodes_visited << " nodes)";
  if (o.pass) o.detail = d.str();
  return o;
}

// Criterion 2: class counts 2, 4, 2 and equality with the listed words.
Outcome longest_classes() {
  Outcome o;
  const std::map<unsigned, std::size_t> counts{{3, 2}, {4, 4}, {5, 2}};
  for (const auto& [n, count] : counts) {
    const SearchResult r = search(n);
    const std::set<Word> found(r.longest_classes.begin(), r.longest_classes.end());
    if (found.size() != count) o.fail("n=" + std::to_string(n) + ": " + std::to_string(found.size()) + " classes");
    if (found != listed_classes(n)) o.fail("n=" + std::to_string(n) + ": classes differ from the listed words");
  }
  if (o.pass) o.detail = "class counts 2,4,2; sets equal (second 4-letter word taken in its factorized form)";
  return o;
}

// Criterion 3: |w_1..w_10| against the published lengths, < 1 s.
Outcome construction_lengths() {
  Outcome o;
  const std::vector<std::size_t> expected{1, 3, 7, 15, 33, 67, 145, 291, 629, 1255};
  const auto t0 = Clock::now();
  Construction c;
  std::string got;
  for (unsigned n = 1; n <= expected.size(); ++n) {
    const ConstructionRecord& rec = c.record(n);
    got += (n > 1 ? "," : "") + std::to_string(rec.w.size());
    if (rec.w.size() != expected[n - 1])
      o.fail("|w_" + std::to_string(n) + "| = " + std::to_string(rec.w.size()) + ", expected " +
             std::to_string(expected[n - 1]));
    if (n <= 6 && !listed_classes(n).count(canonical_class(rec.w)))
      o.fail("w_" + std::to_string(n) + " is not isomorphic to a listed longest word");
  }
  const double t = seconds_since(t0);
  if (t >= 1.0) o.fail("took " + fmt_seconds(t));
  o.detail += (o.pass ? "lengths " : "; lengths ") + got;
  return o;
}

// Criterion 4: verify_record for n <= 16 within 30 s.
Outcome construction_validity() {
  Outcome o;
  const auto t0 = Clock::now();
  Construction c;
  std::size_t checks = 0;
  for (unsigned n = 1; n <= 16; ++n) {
    const VerificationReport r = verify_record(c.record(n), c);
    checks += r.checks.size();
    for (const auto& v : r.violations) o.fail("n=" + std::to_string(n) + ": " + v);
  }
  const double t = seconds_since(t0);
  if (t >= 30.0) o.fail("took " + fmt_seconds(t));
  if (o.pass) o.detail = std::to_string(checks) + " checks over n=1..16, |w_16| = " + std::to_string(c.record(16).w.size());
  return o;
}

// Criterion 5: growth brackets with exact rationals and the anchor inequalities.
Outcome growth_brackets() {
  Outcome o;
  Construction c;
  for (unsigned n = 5; n <= 16; ++n)
    if (!above_growth(c.record(n).w.size(), kLowerGrowth, n)) o.fail("2.008^" + std::to_string(n) + " >= |w_n|");
  for (unsigned n = 5; n <= 7; ++n)
    if (!below_growth(*exact_value(n), kUpperGrowth, n)) o.fail("r(" + std::to_string(n) + ") >= 2.237^n");
  // 33 > 31: r(5) beats the doubling bound
  if (!(*exact_value(5) > lower_basic(5))) o.fail("r(5) <= 2^5 - 1");
  // 629 > 583: |w_9| beats 2|w_8| + 1
  const BigNat w8 = c.record(8).w.size(), w9 = c.record(9).w.size();
  if (!(w9 > 2 * w8 + 1) || 2 * w8 + 1 != 583) o.fail("|w_9| = " + w9.str() + " vs 2|w_8|+1 = " + BigNat(2 * w8 + 1).str());
  // 1255 < 1259: the published |w_10| against 2|w_9| + 1
  const BigNat published_w10 = 1255;
  if (!(published_w10 < 2 * w9 + 1) || 2 * w9 + 1 != 1259) o.fail("1255 < 2|w_9|+1 does not hold");
  if (o.pass) {
    o.detail = "2.008^n < |w_n| for n=5..16; r(n) < 2.237^n for n=5..7; 33 > 31, 629 > 583, 1255 < 1259";
    const std::size_t w10 = c.record(10).w.size();
    if (w10 != 1255) o.detail += " (note: computed |w_10| = " + std::to_string(w10) + ", see [3])";
  }
  return o;
}

// Criterion 6: the upper-bound recursions dominate every known exact value.
Outcome bound_recursions() {
  Outcome o;
  std::size_t comparisons = 0;
  for (unsigned n = 3; n <= 7; ++n) {
    const BigNat r = *exact_value(n);
    const BigNat cor2 = cor2_chain(n, n - 1, *exact_value(n - 2), *exact_value(n - 1));
    const BigNat prop2 = prop2_chain(n, n - 2, *exact_value(n - 2));
    if (r > cor2) o.fail("r(" + std::to_string(n) + ") > " + cor2.str());
    if (r > prop2) o.fail("r(" + std::to_string(n) + ") > " + prop2.str());
    comparisons += 2;
  }
  for (unsigned n = 1; n <= 7; ++n, ++comparisons)
    if (*exact_value(n) > upper_cor2(n)) o.fail("upper_cor2(" + std::to_string(n) + ") below r(n)");
  if (*exact_value(7) > upper_prop2(7) || upper_prop2(7) != 169) o.fail("r(7) vs upper_prop2(7)");
  if (cor2_chain(3, 2, 1, 3) != 9) o.fail("cor2 bound for n=3 is not 9");
  ++comparisons;
  // constructed words are lower bounds, so they must sit under both upper bounds
  Construction c;
  for (unsigned n = 8; n <= 16; ++n, comparisons += 2) {
    const BigNat w = c.record(n).w.size();
    if (w > upper_cor2(n) || w > upper_prop2(n)) o.fail("|w_" + std::to_string(n) + "| exceeds an upper bound");
  }
  if (o.pass) o.detail = std::to_string(comparisons) + " comparisons; r(3)=7<=9, r(7)=145<=169";
  return o;
}

// Criterion 7: oracle equivalences over exhaustive ternary words and random words.
Outcome oracle_equivalences() {
  Outcome o;
  std::size_t words = 0;
  const auto check = [&](const Word& w) {
    ++words;
    const auto pals = oracle::palindromes(w);
    const PalIndex idx = build_index(w);
    if (idx.palindrome_count() != pals.size()) o.fail("palindrome count on a word of length " + std::to_string(w.size()));
    if (is_rich(w) != rich_via_returns(w)) o.fail("is_rich vs rich_via_returns");
    if (is_rich(w) != (pals.size() == w.size() + 1)) o.fail("is_rich vs count");
    if (pals.size() > w.size() + 1) o.fail("negative defect");
    if (is_square_free(w) != !oracle::has_square(w)) o.fail("is_square_free vs oracle");
    if (is_square_free_naive(w) != !oracle::has_square(w)) o.fail("is_square_free_naive vs oracle");
  };
  for (std::size_t len = 0; len <= 10; ++len)
    for (const Word& w : oracle::all_words(3, len)) check(w);
  std::mt19937_64 rng(20240917);
  for (int i = 0; i < 10000; ++i) check(oracle::random_word(rng, 1 + static_cast<unsigned>(rng() % 6), rng() % 61));
  if (o.pass) o.detail = std::to_string(words) + " words, 0 failures";
  return o;
}

// Criterion 8: closures preserve richness; lemma checkers never fail.
Outcome closures_and_lemmas() {
  Outcome o;
  std::mt19937_64 rng(42);
  std::size_t rich_words = 0;
  while (rich_words < 1000) {
    Word w{static_cast<Letter>(rng() % 3)};
    for (int step = 0; step < 4 && w.size() < 60; ++step) {
      const Letter a = static_cast<Letter>(rng() % 4);
      if (is_rich(w + a)) w = w + a;
      w = closure(w, static_cast<ClosureKind>(rng() % 3));
    }
    if (!is_rich(w)) {
      o.fail("generator produced a non-rich word");
      break;
    }
    for (auto kind : {ClosureKind::plus, ClosureKind::proper_suffix, ClosureKind::proper_prefix})
      if (!is_rich(closure(w, kind))) o.fail("closure lost richness");
    ++rich_words;
  }
  const LemmaSweep sweep = sweep_lemmas(4);
  for (const auto& f : sweep.failures) o.fail(f);
  Construction c;
  for (unsigned n = 1; n <= 16; ++n) {
    const ConstructionRecord& rec = c.record(n);
    if (!check_lemmas(rec.w).ok()) o.fail("lemma failure on w_" + std::to_string(n));
    for (const auto& v : check_construction_specials(rec)) o.fail(v);
  }
  if (o.pass) {
    o.detail = std::to_string(rich_words) + " rich words x 3 closures; sweep " + std::to_string(sweep.words) +
               " words (middle " + std::to_string(sweep.middle_applied) + ", chain " +
               std::to_string(sweep.alph_chain_applied) + ", l3 " + std::to_string(sweep.l3_applied) +
               " applied); w_1..w_16 clean";
  }
  return o;
}

// Criterion 9: records output independent of the worker count.
Outcome determinism() {
  Outcome o;
  const auto records = [](const std::string& workers) {
    std::ostringstream out, err;
    const std::vector<std::string> args{"--output", "records", "search", "5", "--workers", workers};
    const int code = cli::run(args, out, err);
    return std::make_pair(code, out.str());
  };
  const auto one = records("1");
  const auto eight = records("8");
  if (one.first != 0 || eight.first != 0) o.fail("non-zero exit");
  if (one.second != eight.second) o.fail("outputs differ");
  if (one.second.empty()) o.fail("no output");
  if (o.pass) o.detail = std::to_string(one.second.size()) + " bytes identical";
  return o;
}

}  // namespace

int main() {
  report(1, "exact values r(1..7)", exact_values);
  report(2, "longest-word classes for n=3,4,5", longest_classes);
  report(3, "construction lengths |w_1..w_10|", construction_lengths);
  report(4, "construction validity n<=16", construction_validity);
  report(5, "growth brackets and anchors", growth_brackets);
  report(6, "bound recursions dominate exact values", bound_recursions);
  report(7, "oracle equivalences", oracle_equivalences);
  report(8, "closure and lemma suites", closures_and_lemmas);
  report(9, "search determinism across worker counts", determinism);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion(s) failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
