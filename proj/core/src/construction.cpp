#include "richsf/construction.hpp"

#include <algorithm>

#include "richsf/pal_index.hpp"
#include "richsf/squarefree.hpp"

namespace richsf {

Letter LetterTable::id(PaperLetterName name) const {
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw std::invalid_argument(to_string(name) + " is not a letter of w_" + std::to_string(n));
  return static_cast<Letter>(it - names.begin());
}

LetterTable paper_alphabet(unsigned n) {
  if (n == 0) throw std::invalid_argument("alphabet size must be at least 1");
  if (n > kMaxAlphabetCapacity) throw RangeError("alphabet size exceeds letter capacity");
  LetterTable table;
  table.n = n;
  table.parity = parity_of(n);
  for (unsigned id = 0; id < n; ++id) table.names.push_back(paper_name(static_cast<Letter>(id), table.parity));
  return table;
}

CapExceeded::CapExceeded(unsigned n, std::size_t length, std::size_t cap)
    : std::length_error("w_" + std::to_string(n) + " has length " + std::to_string(length) +
                        ", above the materialization cap " + std::to_string(cap)),
      n_(n),
      length_(length) {}

namespace {

Letter id_of(PaperLetterName name) { return letter_id(name); }

Word word_of(std::initializer_list<PaperLetterName> names) {
  Word w;
  for (const auto& name : names) w.push_back(id_of(name));
  return w;
}

Word drop_prefix(const Word& w, std::size_t k) { return w.factor(k, w.size() - k); }
Word drop_suffix(const Word& w, std::size_t k) { return w.factor(0, w.size() - k); }

std::size_t common_prefix(const Word& a, const Word& b) {
  const auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
  return static_cast<std::size_t>(ia - a.begin());
}

// A_n x B_n ~x A_n x B_n
Word middle_block(unsigned n, const Word& x) {
  const Letter a = id_of(A(n));
  const Letter b = id_of(B(n));
  Word e;
  e.reserve(3 * x.size() + 4);
  e.push_back(a);
  e.append(x);
  e.push_back(b);
  e.append(reverse(x));
  e.push_back(a);
  e.append(x);
  e.push_back(b);
  return e;
}

}  // namespace

const ConstructionRecord& Construction::record(unsigned n) {
  if (n == 0) throw std::invalid_argument("w_n is defined for n >= 1");
  if (const auto it = records_.find(n); it != records_.end()) return it->second;
  ConstructionRecord rec = build(n);
  return records_.emplace(n, std::move(rec)).first->second;
}

ConstructionRecord Construction::build(unsigned n) { return n <= 6 ? build_base(n) : build_step(n); }

ConstructionRecord Construction::build_base(unsigned n) {
  ConstructionRecord rec;
  rec.n = n;
  if (n == 1) {
    rec.w = word_of({A(1)});
    return rec;
  }
  if (n == 2) {
    rec.w = word_of({A(0), A(2), A(0)});
    return rec;
  }
  switch (n) {
    case 3: break;
    case 4:
      rec.v = word_of({A(0)});
      rec.u = word_of({A(0)});
      break;
    case 5:
      rec.v = word_of({A(5), A(3), A(1), A(3)});
      rec.u = word_of({B(3), A(1), A(3), A(1)});
      break;
    case 6:
      rec.v = word_of({A(0), A(6), A(0), A(4), A(0), A(2), A(0), A(4), A(0)});
      rec.u = word_of({A(0), B(4), A(0), A(2), A(0), A(4), A(0), A(2), A(0)});
      break;
  }
  const Word& inner = record(n - 2).w;
  const std::size_t length = rec.v.size() + 3 * inner.size() + 4 + rec.u.size();
  if (length > cap_.max_length) throw CapExceeded(n, length, cap_.max_length);
  rec.w = rec.v + middle_block(n, inner) + rec.u;
  return rec;
}

ConstructionRecord Construction::build_step(unsigned n) {
  const ConstructionRecord& r2 = record(n - 2);
  const ConstructionRecord& r4 = record(n - 4);
  const ConstructionRecord& r6 = record(n - 6);
  const Word& w2 = r2.w;
  const Word& w4 = r4.w;
  const Word& w6 = r6.w;

  const Letter an = id_of(A(n));
  const Letter an2 = id_of(A(n - 2));
  const Letter bn2 = id_of(B(n - 2));
  const Letter an4 = id_of(A(n - 4));
  const Letter bn4 = id_of(B(n - 4));

  const Word rv2 = reverse(r2.v);
  const Word rv4 = reverse(r4.v);
  const Word rw6 = reverse(w6);

  Decomposition parts;
  const std::size_t p = common_prefix(w6, rv4);
  if (p >= w6.size()) throw std::logic_error("w_{n-6} is a prefix of ~v_{n-4}; the step is undefined");
  parts.P = w6.factor(0, p);
  parts.c = p < rv4.size() ? rv4[p] : an2;
  parts.d = w6[p];

  const std::size_t v_len = 3 * r4.v.size() + 3 * r2.v.size() + 2 * w6.size() + 6 - p;
  const std::size_t u_len = r2.u.size() + 2 * w4.size() + r4.u.size() + w6.size() + 3 - p;
  const std::size_t length = v_len + 3 * w2.size() + 4 + u_len;
  if (length > cap_.max_length) throw CapExceeded(n, length, cap_.max_length);

  // ~v_{n-4} A_{n-2} ~v_{n-2} with P_n c_n removed from the front
  const Word head = drop_prefix(rv4 + an2 + rv2, p + 1);
  parts.F = head;
  parts.G = rw6 + an4 + rv4 + an2 + rv2;

  Word v = head;
  v.reserve(v_len);
  v.push_back(an);
  v.append(r2.v);
  v.push_back(an2);
  v.append(r4.v);
  v.push_back(an4);
  v.append(w6);
  v.push_back(bn4);
  v.append(parts.G);

  Word full_u = reverse(r2.u);
  full_u.push_back(bn2);
  full_u.append(reverse(w4));
  full_u.push_back(an2);
  full_u.append(w4);
  full_u.push_back(bn2);
  full_u.append(reverse(r4.u));
  full_u.push_back(bn4);
  full_u.append(rw6);
  Word u = drop_suffix(full_u, p + 1);

  parts.E = middle_block(n, w2);
  parts.H = reverse(parts.P) + an4 + w6 + bn4 + parts.G;

  ConstructionRecord rec;
  rec.n = n;
  rec.w = v + parts.E + u;
  rec.v = std::move(v);
  rec.u = std::move(u);
  rec.parts = std::move(parts);
  return rec;
}

ConstructionRecord construct_w(unsigned n, LengthCap cap) {
  Construction c(cap);
  return c.record(n);
}

Word construct_b(unsigned n, LengthCap cap) {
  if (n == 0) throw std::invalid_argument("b_n is defined for n >= 1");
  if (n > 63 || ((std::size_t{1} << n) - 1) > cap.max_length) {
    const std::size_t length = n > 63 ? SIZE_MAX : (std::size_t{1} << n) - 1;
    throw CapExceeded(n, length, cap.max_length);
  }
  Word b{0};
  for (unsigned k = 2; k <= n; ++k) b = b + static_cast<Letter>(k - 1) + reverse(b);
  return b;
}

// ---------------------------------------------------------------------------

namespace {

class Checker {
 public:
  explicit Checker(VerificationReport& report) : report_(report) {}
  void expect(bool ok, const std::string& name, const std::string& detail = {}) {
    report_.checks.push_back(name);
    if (!ok) report_.violations.push_back(detail.empty() ? name : name + ": " + detail);
  }

 private:
  VerificationReport& report_;
};

}  // namespace

VerificationReport verify_record(const ConstructionRecord& rec, Construction& source) {
  VerificationReport report;
  report.n = rec.n;
  Checker check(report);
  const unsigned n = rec.n;
  const Word& w = rec.w;

  const LetterTable table = paper_alphabet(n);
  check.expect(w.alphabet_size() == n, "alphabet size", std::to_string(w.alphabet_size()) + " letters");
  check.expect(w.max_letter() < table.size(), "letter ids inside table");

  const PalIndex idx = build_index(w);
  check.expect(idx.rich(), "rich", "defect " + std::to_string(idx.defect()));
  check.expect(is_square_free(w), "square-free");

  if (n >= 3) {
    const Word& w2 = source.record(n - 2).w;
    check.expect(w == rec.v + [&] {
      Word e{id_of(A(n))};
      e.append(w2).push_back(id_of(B(n)));
      e.append(reverse(w2)).push_back(id_of(A(n)));
      e.append(w2).push_back(id_of(B(n)));
      return e;
    }() + rec.u, "w = v A w' B ~w' A w' B u");
  }

  if (n < 7) return report;
  if (!rec.parts) {
    check.expect(false, "decomposition present");
    return report;
  }
  const Decomposition& parts = *rec.parts;
  const ConstructionRecord& r2 = source.record(n - 2);
  const ConstructionRecord& r4 = source.record(n - 4);
  const ConstructionRecord& r6 = source.record(n - 6);
  const Letter an = id_of(A(n));
  const Letter bn4 = id_of(B(n - 4));

  check.expect(w == rec.v + parts.E + rec.u, "w = vEu");
  check.expect(rec.v == parts.F + an + reverse(parts.G) + bn4 + parts.G, "v = F A ~G B' G");
  check.expect(r2.w == reverse(parts.H) + parts.d + reverse(rec.u), "w_{n-2} = ~H d ~u");
  check.expect(rec.v.ends_with(parts.H), "H suffix of v");
  check.expect(parts.G.ends_with(parts.F), "F suffix of G");
  check.expect(parts.c != parts.d, "c != d");
  check.expect(reverse(r2.w).starts_with(rec.u), "u prefix of ~w_{n-2}");
  check.expect(r6.w.starts_with(parts.P) && reverse(r4.v).starts_with(parts.P), "P common prefix");

  const std::size_t v_bound = 3 * r2.v.size() + 2 * r6.w.size() + 2 * r4.v.size() + 6;
  check.expect(rec.v.size() >= v_bound, "|v_n| lower estimate",
               std::to_string(rec.v.size()) + " < " + std::to_string(v_bound));

  if (n >= 11) {
    const std::size_t predicted = 4 * r2.w.size() + 2 * (r4.v.size() - parts.P.size()) + 2 * r2.v.size() + 5;
    check.expect(w.size() == predicted, "length recursion",
                 std::to_string(w.size()) + " vs " + std::to_string(predicted));
  }
  return report;
}

VerificationReport verify_record(const ConstructionRecord& rec) {
  Construction source;
  return verify_record(rec, source);
}

}  // namespace richsf
