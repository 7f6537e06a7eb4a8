#include "richsf/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <new>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "richsf/bounds.hpp"
#include "richsf/construction.hpp"
#include "richsf/pal_index.hpp"
#include "richsf/search.hpp"
#include "richsf/squarefree.hpp"
#include "richsf/word.hpp"

namespace richsf::cli {
namespace {

using Json = nlohmann::ordered_json;

enum class OutputMode { text, records };

// Input the user can fix; reported with kUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Every result goes through here so that both output modes stay in step.
// The --out file always receives records.
class Emitter {
 public:
  Emitter(std::ostream& out, OutputMode mode, std::ostream* file) : out_(out), mode_(mode), file_(file) {}

  void result(const Json& record, const std::string& text) {
    if (mode_ == OutputMode::records) {
      out_ << record.dump() << '\n';
    } else {
      out_ << text << '\n';
    }
    if (file_) *file_ << record.dump() << '\n';
  }

  // Headers and other decoration that only make sense in text mode.
  void text_only(const std::string& text) {
    if (mode_ == OutputMode::text) out_ << text << '\n';
  }

 private:
  std::ostream& out_;
  OutputMode mode_;
  std::ostream* file_;
};

const std::map<std::string, WordFormat> kFormats{
    {"digits", WordFormat::digits}, {"ids", WordFormat::ids}, {"tokens", WordFormat::tokens}};

const std::map<std::string, ClosureKind> kClosureKinds{
    {"plus", ClosureKind::plus}, {"pps", ClosureKind::proper_suffix}, {"ppp", ClosureKind::proper_prefix}};

struct InputWord {
  Word word;
  WordFormat format = WordFormat::digits;
  Parity parity = Parity::odd;
};

InputWord read_word(const std::string& text, WordFormat format) {
  InputWord in{parse_word(text, format), format, Parity::odd};
  if (format == WordFormat::tokens) {
    const auto begin = text.find_first_not_of(" \t\r\n");
    if (begin != std::string::npos) {
      const auto end = text.find_first_of(" \t\r\n", begin);
      if (const auto name = parse_paper_name(std::string_view(text).substr(begin, end - begin))) {
        in.parity = family(*name);
      }
    }
  }
  return in;
}

std::string show(const Word& w, WordFormat format, Parity parity) {
  if (format == WordFormat::digits && !w.empty() && w.max_letter() > 8) {
    throw UsageError("word uses more than 9 letters; digits cannot show it, use --format ids or tokens");
  }
  return format_word(w, format, parity);
}

std::string show_letter(Letter a, const InputWord& in) { return show(Word{a}, in.format, in.parity); }

std::string yes_no(bool b) { return b ? "true" : "false"; }

Json big(const BigNat& v) { return v.str(); }

template <class T>
Json big_or_null(const std::optional<T>& v) {
  if (!v) return nullptr;
  return big(*v);
}

Json bool_or_null(const std::optional<bool>& v) {
  if (!v) return nullptr;
  return *v;
}

// Large enough for w_22; w_24 no longer fits in a few GB once verified.
constexpr std::size_t kCliMaxLength = std::size_t{1} << 24;

unsigned cap_workers(unsigned requested) {
  const char* env = std::getenv(kMaxWorkersEnv);
  if (!env) return requested;
  const std::string_view text(env);
  unsigned cap = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
  if (ec != std::errc{} || ptr != text.data() + text.size() || cap == 0) return requested;
  return std::min(requested, cap);
}

// ---------------------------------------------------------------------------

int cmd_check(Emitter& em, const InputWord& in) {
  const Word& w = in.word;
  const PalIndex idx = build_index(w);
  const bool square_free = is_square_free(w);

  Json rec;
  rec["command"] = "check";
  rec["word"] = show(w, in.format, in.parity);
  rec["length"] = w.size();
  rec["alphabet_size"] = w.alphabet_size();
  rec["rich"] = idx.rich();
  rec["square_free"] = square_free;
  rec["defect"] = idx.defect();
  rec["palindrome_count"] = idx.palindrome_count();

  std::string text = "word: " + rec["word"].get<std::string>() + "\nlength: " + std::to_string(w.size()) +
                     "\nalphabet_size: " + std::to_string(w.alphabet_size()) + "\nrich: " + yes_no(idx.rich()) +
                     "\nsquare_free: " + yes_no(square_free) + "\ndefect: " + std::to_string(idx.defect()) +
                     "\npalindrome_count: " + std::to_string(idx.palindrome_count());
  if (w.empty()) {
    rec["right_special"] = nullptr;
    rec["left_special"] = nullptr;
    text += "\nright_special: none\nleft_special: none";
  } else {
    const SpecialLetter right = right_special(w);
    const SpecialLetter left = left_special(w);
    rec["right_special"] = Json{{"letter", show_letter(right.letter, in)}, {"position", right.position}};
    rec["left_special"] = Json{{"letter", show_letter(left.letter, in)}, {"position", left.position}};
    text += "\nright_special: " + show_letter(right.letter, in) + " at " + std::to_string(right.position);
    text += "\nleft_special: " + show_letter(left.letter, in) + " at " + std::to_string(left.position);
  }
  em.result(rec, text);
  return kOk;
}

int cmd_palindromes(Emitter& em, const InputWord& in) {
  const Word& w = in.word;
  PalIndex idx(w.empty() ? 1 : std::size_t{w.max_letter()} + 1);
  std::size_t index = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const PushRecord r = idx.push(w[i]);
    if (!r.created_node) continue;
    const auto len = static_cast<std::size_t>(idx.node(*r.created_node_id).length);
    const std::string p = show(w.factor(i + 1 - len, len), in.format, in.parity);
    em.result(Json{{"command", "palindromes"}, {"index", index++}, {"end", i + 1}, {"length", len}, {"palindrome", p}},
              p);
  }
  em.result(Json{{"command", "palindromes"}, {"palindrome_count", idx.palindrome_count()}, {"defect", idx.defect()}},
            "palindrome_count: " + std::to_string(idx.palindrome_count()) + " (with the empty word)");
  return kOk;
}

int cmd_closure(Emitter& em, const InputWord& in, const std::string& kind_name) {
  const Word closed = closure(in.word, kClosureKinds.at(kind_name));
  const std::string shown = show(closed, in.format, in.parity);
  em.result(Json{{"command", "closure"},
                 {"kind", kind_name},
                 {"word", show(in.word, in.format, in.parity)},
                 {"closure", shown},
                 {"length", closed.size()},
                 {"rich", is_rich(closed)}},
            shown);
  return kOk;
}

int cmd_construct(Emitter& em, const std::string& which, unsigned n, bool length_only, WordFormat format,
                  LengthCap cap) {
  if (n == 0) throw UsageError("n must be at least 1");
  Json rec;
  rec["command"] = "construct";
  rec["family"] = which;
  rec["n"] = n;
  std::string text;
  if (which == "w") {
    Construction builder(cap);
    const ConstructionRecord& r = builder.record(n);
    rec["length"] = r.w.size();
    rec["v_length"] = r.v.size();
    rec["u_length"] = r.u.size();
    if (length_only) {
      text = std::to_string(r.w.size());
    } else {
      text = show(r.w, format, r.parity());
      rec["word"] = text;
    }
  } else {
    if (format == WordFormat::tokens && !length_only) throw UsageError("b_n has no token names; use digits or ids");
    const Word b = construct_b(n, cap);
    rec["length"] = b.size();
    if (length_only) {
      text = std::to_string(b.size());
    } else {
      text = show(b, format, Parity::odd);
      rec["word"] = text;
    }
  }
  em.result(rec, text);
  return kOk;
}

struct SearchOptions {
  unsigned n = 0;
  std::optional<std::uint64_t> max_nodes;
  std::optional<double> max_seconds;
  unsigned workers = 1;
  unsigned split_depth = 6;
  bool all_longest = false;
  bool progress = false;
  WordFormat format = WordFormat::digits;
};

int cmd_search(Emitter& em, const SearchOptions& opt, std::ostream& err) {
  if (opt.n == 0) throw UsageError("n must be at least 1");
  if (opt.n > kDefaultAlphabetCapacity) throw UsageError("n is limited to 64 letters");
  SearchConfig cfg;
  cfg.n = opt.n;
  cfg.max_nodes = opt.max_nodes;
  if (opt.max_seconds) cfg.max_seconds = std::chrono::duration<double>(*opt.max_seconds);
  cfg.workers = cap_workers(std::max(1u, opt.workers));
  cfg.split_depth = opt.split_depth;
  cfg.collect_all_longest = true;
  if (opt.progress) {
    cfg.progress_interval = std::uint64_t{1} << 22;
    cfg.on_progress = [&err](const SearchProgress& p) {
      err << "progress: nodes=" << p.nodes_visited << " depth=" << p.depth << " best=" << p.best_length << std::endl;
    };
  }
  const SearchResult res = compute_r(cfg);

  const std::string n_str = std::to_string(opt.n);
  std::string text = (res.exhausted ? "r(" + n_str + ") = " : "r(" + n_str + ") >= ") +
                     std::to_string(res.best_length) + (res.exhausted ? "" : "  (budget exhausted first)") +
                     "\nnodes_visited: " + std::to_string(res.nodes_visited) +
                     "\nlongest_classes: " + std::to_string(res.longest_classes.size());
  em.result(Json{{"command", "search"},
                 {"n", opt.n},
                 {"best_length", res.best_length},
                 {"exhausted", res.exhausted},
                 {"nodes_visited", res.nodes_visited},
                 {"class_count", res.longest_classes.size()}},
            text);

  const std::size_t shown = opt.all_longest ? res.longest_classes.size() : std::min<std::size_t>(1, res.longest_classes.size());
  for (std::size_t i = 0; i < shown; ++i) {
    const std::string word = show(res.longest_classes[i], opt.format, parity_of(opt.n));
    em.result(Json{{"command", "search"}, {"n", opt.n}, {"class_index", i}, {"word", word}},
              (opt.all_longest ? "class " + std::to_string(i) + ": " : "smallest class: ") + word);
  }
  return kOk;
}

int cmd_bounds(Emitter& em, unsigned n_max, unsigned wn_max, LengthCap cap) {
  if (n_max == 0) throw UsageError("n_max must be at least 1");
  std::map<unsigned, BigNat> lengths;
  Construction builder(cap);
  for (unsigned n = 1; n <= std::min(n_max, wn_max); ++n) {
    try {
      lengths[n] = builder.record(n).w.size();
    } catch (const CapExceeded&) {
      break;
    }
  }
  const auto rows = bounds_table(n_max, lengths);

  const std::vector<std::string> header{"n", "exact", "2^n-1", "|w_n|", "conjecture", "cor2", "prop2", "lo_growth", "hi_growth"};
  std::vector<std::vector<std::string>> cells;
  const auto opt_str = [](const std::optional<BigNat>& v) { return v ? v->str() : std::string("-"); };
  const auto opt_bool = [](const std::optional<bool>& v) { return v ? yes_no(*v) : std::string("-"); };
  for (const auto& row : rows) {
    cells.push_back({std::to_string(row.n), opt_str(row.exact), row.lower_basic.str(), opt_str(row.lower_wn),
                     opt_str(row.conjecture), row.upper_cor2.str(), opt_str(row.upper_prop2),
                     opt_bool(row.lower_growth_ok), opt_bool(row.upper_growth_ok)});
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& line : cells) width[c] = std::max(width[c], line[c].size());
  }
  const auto join = [&](const std::vector<std::string>& line) {
    std::string s;
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) s += "  ";
      s += std::string(width[c] - line[c].size(), ' ') + line[c];
    }
    return s;
  };

  em.text_only(join(header));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const BoundsRow& row = rows[i];
    Json rec;
    rec["command"] = "bounds";
    rec["n"] = row.n;
    rec["exact"] = big_or_null(row.exact);
    rec["lower_basic"] = big(row.lower_basic);
    rec["lower_wn"] = big_or_null(row.lower_wn);
    rec["conjecture"] = big_or_null(row.conjecture);
    rec["upper_cor2"] = big(row.upper_cor2);
    rec["upper_prop2"] = big_or_null(row.upper_prop2);
    rec["best_lower"] = big(row.best_lower());
    rec["best_upper"] = big(row.best_upper());
    rec["lower_growth_ok"] = bool_or_null(row.lower_growth_ok);
    rec["upper_growth_ok"] = bool_or_null(row.upper_growth_ok);
    em.result(rec, join(cells[i]));
  }
  return kOk;
}

int cmd_verify(Emitter& em, unsigned n_max, unsigned sweep_letters, LengthCap cap) {
  if (n_max == 0) throw UsageError("n_max must be at least 1");
  Construction builder(cap);
  // Refuse oversized requests before spending time on the smaller records.
  builder.record(n_max);
  if (n_max > 1) builder.record(n_max - 1);
  bool all_ok = true;
  for (unsigned n = 1; n <= n_max; ++n) {
    const ConstructionRecord& rec = builder.record(n);
    VerificationReport report = verify_record(rec, builder);
    for (auto& v : check_construction_specials(rec)) report.violations.push_back(std::move(v));
    const LemmaReport lemmas = check_lemmas(rec.w);
    if (!lemmas.ok()) report.violations.push_back("a structural lemma fails on w_" + std::to_string(n));
    all_ok = all_ok && report.ok();

    std::string text = "w_" + std::to_string(n) + ": " + (report.ok() ? "ok" : "FAILED") + "  length=" +
                       std::to_string(rec.w.size()) + " checks=" + std::to_string(report.checks.size()) +
                       " lemmas(middle=" + std::string(to_string(lemmas.middle)) +
                       " alph_chain=" + std::string(to_string(lemmas.alph_chain)) +
                       " l3=" + std::string(to_string(lemmas.l3)) + ")";
    for (const auto& v : report.violations) text += "\n  violation: " + v;
    em.result(Json{{"command", "verify"},
                   {"n", n},
                   {"length", rec.w.size()},
                   {"ok", report.ok()},
                   {"checks", report.checks.size()},
                   {"lemma_middle", to_string(lemmas.middle)},
                   {"lemma_alph_chain", to_string(lemmas.alph_chain)},
                   {"lemma_l3", to_string(lemmas.l3)},
                   {"violations", report.violations}},
              text);
  }

  if (sweep_letters > 0) {
    const LemmaSweep sweep = sweep_lemmas(sweep_letters);
    all_ok = all_ok && sweep.failures.empty();
    std::string text = "lemma sweep over <= " + std::to_string(sweep_letters) + " letters: " +
                       std::to_string(sweep.words) + " words, " + std::to_string(sweep.failures.size()) + " failures";
    for (const auto& f : sweep.failures) text += "\n  failure: " + f;
    em.result(Json{{"command", "verify"},
                   {"sweep_letters", sweep_letters},
                   {"words", sweep.words},
                   {"middle_applied", sweep.middle_applied},
                   {"alph_chain_applied", sweep.alph_chain_applied},
                   {"l3_applied", sweep.l3_applied},
                   {"ok", sweep.failures.empty()},
                   {"failures", sweep.failures}},
              text);
  }
  return all_ok ? kOk : kFailure;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rich square-free words: checks, closures, constructions, bounds and exhaustive search.", "richsf"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string mode_name = "text";
  std::string out_path;
  app.add_option("--output", mode_name, "text or records (one JSON object per line)")
      ->check(CLI::IsMember({"text", "records"}));
  app.add_option("--out", out_path, "also write records to this file");

  std::string word_text;
  std::string format_name = "digits";
  const auto add_word = [&](CLI::App* sub) {
    sub->add_option("word", word_text, "the word")->required();
    sub->add_option("--format", format_name, "digits (1-9), ids (0-based, comma separated) or tokens (A3 B3 ...)")
        ->check(CLI::IsMember({"digits", "ids", "tokens"}));
  };

  auto* check = app.add_subcommand("check", "richness, square-freeness, defect, special letters");
  add_word(check);
  auto* pals = app.add_subcommand("palindromes", "distinct palindromic factors in order of first ending");
  add_word(pals);
  auto* clos = app.add_subcommand("closure", "palindromic closures");
  add_word(clos);
  std::string kind_name = "plus";
  clos->add_option("--kind", kind_name, "plus, pps or ppp")->check(CLI::IsMember({"plus", "pps", "ppp"}));

  std::size_t max_length = kCliMaxLength;
  const auto add_max_length = [&](CLI::App* sub) {
    sub->add_option("--max-length", max_length, "refuse to build words longer than this")->check(CLI::PositiveNumber);
  };

  auto* cons = app.add_subcommand("construct", "the w_n family or the doubling chain b_n");
  add_max_length(cons);
  std::string which;
  unsigned n = 0;
  bool length_only = false;
  cons->add_option("family", which, "w or b")->required()->check(CLI::IsMember({"w", "b"}));
  cons->add_option("n", n, "number of letters")->required();
  cons->add_flag("--length-only", length_only, "print the length only");
  cons->add_option("--format", format_name, "digits, ids or tokens")->check(CLI::IsMember({"digits", "ids", "tokens"}));

  auto* search = app.add_subcommand("search", "longest rich square-free words on exactly n letters");
  SearchOptions sopt;
  std::uint64_t max_nodes = 0;
  double max_seconds = 0;
  search->add_option("n", sopt.n, "number of letters")->required();
  auto* max_nodes_opt = search->add_option("--max-nodes", max_nodes, "stop after this many tree nodes");
  auto* max_seconds_opt = search->add_option("--max-seconds", max_seconds, "stop after this much wall time")
                              ->check(CLI::NonNegativeNumber);
  search->add_option("--workers", sopt.workers, "worker threads")->check(CLI::PositiveNumber);
  search->add_option("--split-depth", sopt.split_depth, "depth at which work is split between workers");
  search->add_flag("--all-longest", sopt.all_longest, "print every longest class, not just the smallest");
  search->add_flag("--progress", sopt.progress, "report progress on the error stream");
  search->add_option("--format", format_name, "digits, ids or tokens")->check(CLI::IsMember({"digits", "ids", "tokens"}));

  auto* bounds = app.add_subcommand("bounds", "lower and upper bounds on r(n)");
  unsigned n_max = 0;
  unsigned wn_max = 20;
  bounds->add_option("n_max", n_max, "largest n")->required();
  add_max_length(bounds);
  bounds->add_option("--wn-max", wn_max, "largest n for which w_n is materialized");

  auto* verify = app.add_subcommand("verify", "construction identities and lemma checks");
  unsigned sweep_letters = 4;
  verify->add_option("n_max", n_max, "largest n")->required();
  add_max_length(verify);
  verify->add_option("--sweep-letters", sweep_letters, "exhaustive lemma sweep alphabet size (0 to skip)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    std::ofstream file;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file) throw UsageError("cannot open " + out_path + " for writing");
    }
    Emitter em(out, mode_name == "records" ? OutputMode::records : OutputMode::text, file.is_open() ? &file : nullptr);
    const WordFormat format = kFormats.at(format_name);

    if (check->parsed()) return cmd_check(em, read_word(word_text, format));
    if (pals->parsed()) return cmd_palindromes(em, read_word(word_text, format));
    if (clos->parsed()) return cmd_closure(em, read_word(word_text, format), kind_name);
    if (cons->parsed()) return cmd_construct(em, which, n, length_only, format, LengthCap{max_length});
    if (search->parsed()) {
      if (max_nodes_opt->count()) sopt.max_nodes = max_nodes;
      if (max_seconds_opt->count()) sopt.max_seconds = max_seconds;
      sopt.format = format;
      return cmd_search(em, sopt, err);
    }
    if (bounds->parsed()) return cmd_bounds(em, n_max, wn_max, LengthCap{max_length});
    if (verify->parsed()) return cmd_verify(em, n_max, sweep_letters, LengthCap{max_length});
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {  // includes ParseError
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {  // includes RangeError
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory; try a smaller n or --max-length\n";
    return kFailure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kFailure;
  }
  err << app.help();
  return kUsage;
}

}  // namespace richsf::cli
