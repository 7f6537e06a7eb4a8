#include "richsf/word.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cctype>

namespace richsf {

Word Word::factor(std::size_t pos, std::size_t len) const {
  if (pos > size() || len > size() - pos) throw std::out_of_range("factor out of range");
  return Word(std::span<const Letter>(letters_).subspan(pos, len));
}

bool Word::starts_with(std::span<const Letter> prefix) const {
  return prefix.size() <= size() && std::equal(prefix.begin(), prefix.end(), letters_.begin());
}

bool Word::ends_with(std::span<const Letter> suffix) const {
  return suffix.size() <= size() &&
         std::equal(suffix.begin(), suffix.end(), letters_.end() - static_cast<std::ptrdiff_t>(suffix.size()));
}

std::uint64_t Word::alphabet_mask() const {
  std::uint64_t mask = 0;
  for (Letter a : letters_) {
    if (a >= 64) throw RangeError("alphabet mask needs letter ids below 64");
    mask |= std::uint64_t{1} << a;
  }
  return mask;
}

std::size_t Word::alphabet_size() const {
  std::array<bool, kMaxAlphabetCapacity> seen{};
  std::size_t count = 0;
  for (Letter a : letters_) {
    if (!seen[a]) {
      seen[a] = true;
      ++count;
    }
  }
  return count;
}

std::size_t Word::count(Letter a) const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), a));
}

Letter Word::max_letter() const {
  return letters_.empty() ? Letter{0} : *std::max_element(letters_.begin(), letters_.end());
}

Word operator+(const Word& lhs, const Word& rhs) {
  Word out;
  out.reserve(lhs.size() + rhs.size());
  out.append(lhs).append(rhs);
  return out;
}

Word operator+(const Word& lhs, Letter rhs) {
  Word out = lhs;
  out.push_back(rhs);
  return out;
}

Word operator+(Letter lhs, const Word& rhs) {
  std::vector<Letter> out(rhs.size() + 1);
  out[0] = lhs;
  std::copy(rhs.begin(), rhs.end(), out.begin() + 1);
  return Word(std::move(out));
}

// ---------------------------------------------------------------------------
// A/B letter names
// ---------------------------------------------------------------------------
//
// Ids within a family follow the listing order:
//   even: A0 A2 A4 B4 A6 B6 ...  ->  0 1 2 3 4 5 ...
//   odd:  A1 A3 B3 A5 B5 ...     ->  0 1 2 3 4 ...
// For k >= 3 this is A_k -> k-2 and B_k -> k-1 in both families.

PaperLetterName B(unsigned k) {
  if (k < 3) throw std::invalid_argument("B letters start at index 3");
  return {PaperLetterName::Kind::B, k};
}

Parity family(PaperLetterName name) { return parity_of(name.index); }

Letter letter_id(PaperLetterName name) {
  unsigned id = 0;
  if (name.kind == PaperLetterName::Kind::B) {
    if (name.index < 3) throw std::invalid_argument("B letters start at index 3");
    id = name.index - 1;
  } else if (name.index <= 1) {
    id = 0;
  } else if (name.index == 2) {
    id = 1;
  } else {
    id = name.index - 2;
  }
  if (id >= kMaxAlphabetCapacity) throw RangeError("letter index too large");
  return static_cast<Letter>(id);
}

PaperLetterName paper_name(Letter id, Parity parity) {
  const unsigned p = static_cast<unsigned>(parity);
  if (id == 0) return A(p);
  if (parity == Parity::even && id == 1) return A(2);
  const unsigned as_a = id + 2u;
  if (as_a % 2 == p) return A(as_a);
  return B(id + 1u);
}

std::string to_string(PaperLetterName name) {
  return (name.kind == PaperLetterName::Kind::A ? "A" : "B") + std::to_string(name.index);
}

std::optional<PaperLetterName> parse_paper_name(std::string_view token) {
  if (token.size() < 2 || (token[0] != 'A' && token[0] != 'B')) return std::nullopt;
  unsigned index = 0;
  const char* first = token.data() + 1;
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, index);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  if (token[0] == 'B') {
    if (index < 3) return std::nullopt;
    return PaperLetterName{PaperLetterName::Kind::B, index};
  }
  return A(index);
}

// ---------------------------------------------------------------------------
// Text formats
// ---------------------------------------------------------------------------

std::optional<WordFormat> parse_format(std::string_view name) {
  if (name == "digits") return WordFormat::digits;
  if (name == "ids") return WordFormat::ids;
  if (name == "tokens") return WordFormat::tokens;
  return std::nullopt;
}

std::string_view to_string(WordFormat format) {
  switch (format) {
    case WordFormat::digits: return "digits";
    case WordFormat::ids: return "ids";
    case WordFormat::tokens: return "tokens";
  }
  return "?";
}

ParseError::ParseError(std::size_t position, const std::string& what)
    : std::invalid_argument("position " + std::to_string(position) + ": " + what), position_(position) {}

namespace {

Word parse_digits(std::string_view text) {
  std::vector<Letter> out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '1' || c > '9') throw ParseError(i, std::string("expected digit 1-9, got '") + c + "'");
    out.push_back(static_cast<Letter>(c - '1'));
  }
  return Word(std::move(out));
}

Word parse_ids(std::string_view text, std::size_t capacity) {
  std::vector<Letter> out;
  std::size_t i = 0;
  auto skip_spaces = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_spaces();
  if (i == text.size()) return Word{};
  while (true) {
    skip_spaces();
    const std::size_t start = i;
    unsigned long value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc{} || ptr == text.data() + i) throw ParseError(start, "expected a natural number");
    i = static_cast<std::size_t>(ptr - text.data());
    if (value >= capacity) throw ParseError(start, "letter id " + std::to_string(value) + " exceeds alphabet capacity");
    out.push_back(static_cast<Letter>(value));
    skip_spaces();
    if (i == text.size()) break;
    if (text[i] != ',') throw ParseError(i, "expected ','");
    ++i;
  }
  return Word(std::move(out));
}

Word parse_tokens(std::string_view text, std::optional<Parity> parity, std::size_t capacity) {
  std::vector<Letter> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::string_view token = text.substr(start, i - start);
    const auto name = parse_paper_name(token);
    if (!name) throw ParseError(start, "unknown letter token '" + std::string(token) + "'");
    if (!parity) parity = family(*name);
    if (family(*name) != *parity) throw ParseError(start, "token '" + std::string(token) + "' is from the other letter family");
    const Letter id = letter_id(*name);
    if (id >= capacity) throw ParseError(start, "token '" + std::string(token) + "' exceeds alphabet capacity");
    out.push_back(id);
  }
  return Word(std::move(out));
}

}  // namespace

Word parse_word(std::string_view text, WordFormat format, std::optional<Parity> token_parity, std::size_t capacity) {
  if (capacity == 0 || capacity > kMaxAlphabetCapacity) throw std::invalid_argument("alphabet capacity out of range");
  switch (format) {
    case WordFormat::digits: return parse_digits(text);
    case WordFormat::ids: return parse_ids(text, capacity);
    case WordFormat::tokens: return parse_tokens(text, token_parity, capacity);
  }
  throw std::invalid_argument("unknown word format");
}

std::string format_word(const Word& w, WordFormat format, Parity token_parity) {
  std::string out;
  switch (format) {
    case WordFormat::digits:
      out.reserve(w.size());
      for (Letter a : w) {
        if (a > 8) throw RangeError("letter id " + std::to_string(a) + " has no digit form");
        out.push_back(static_cast<char>('1' + a));
      }
      break;
    case WordFormat::ids:
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(w[i]);
      }
      break;
    case WordFormat::tokens:
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out.push_back(' ');
        out += to_string(paper_name(w[i], token_parity));
      }
      break;
  }
  return out;
}

// ---------------------------------------------------------------------------

Word reverse(const Word& w) {
  std::vector<Letter> out(w.begin(), w.end());
  std::reverse(out.begin(), out.end());
  return Word(std::move(out));
}

bool is_palindrome(std::span<const Letter> w) {
  return std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(w.size() / 2), w.rbegin());
}

Word normalize(const Word& w) {
  std::array<int, kMaxAlphabetCapacity> rename;
  rename.fill(-1);
  int next = 0;
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter a : w) {
    if (rename[a] < 0) rename[a] = next++;
    out.push_back(static_cast<Letter>(rename[a]));
  }
  return Word(std::move(out));
}

Word canonical_class(const Word& w) {
  Word forward = normalize(w);
  Word backward = normalize(reverse(w));
  return backward < forward ? backward : forward;
}

std::vector<std::size_t> occurrences(const Word& w, const Word& u) {
  std::vector<std::size_t> out;
  if (u.empty() || u.size() > w.size()) return out;
  auto it = w.begin();
  while (true) {
    it = std::search(it, w.end(), u.begin(), u.end());
    if (it == w.end()) break;
    out.push_back(static_cast<std::size_t>(it - w.begin()));
    ++it;
  }
  return out;
}

std::vector<Word> complete_returns(const Word& w, const Word& u) {
  if (u.empty()) throw std::invalid_argument("complete returns need a non-empty factor");
  const auto occ = occurrences(w, u);
  std::vector<Word> out;
  for (std::size_t k = 1; k < occ.size(); ++k) {
    out.push_back(w.factor(occ[k - 1], occ[k] - occ[k - 1] + u.size()));
  }
  return out;
}

}  // namespace richsf
