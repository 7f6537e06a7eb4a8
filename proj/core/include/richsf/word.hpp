#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace richsf {

// Letters are 0-based ids. Digit text shows id+1, so "121" is [0,1,0].
using Letter = std::uint8_t;

inline constexpr std::size_t kDefaultAlphabetCapacity = 64;
inline constexpr std::size_t kMaxAlphabetCapacity = 256;

class Word {
 public:
  using value_type = Letter;
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  explicit Word(std::span<const Letter> letters) : letters_(letters.begin(), letters.end()) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  const_iterator begin() const noexcept { return letters_.begin(); }
  const_iterator end() const noexcept { return letters_.end(); }
  const Letter* data() const noexcept { return letters_.data(); }
  std::span<const Letter> span() const noexcept { return letters_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  void push_back(Letter a) { letters_.push_back(a); }
  void reserve(std::size_t n) { letters_.reserve(n); }
  Word& append(std::span<const Letter> tail) {
    letters_.insert(letters_.end(), tail.begin(), tail.end());
    return *this;
  }
  Word& append(const Word& tail) { return append(tail.span()); }

  Word factor(std::size_t pos, std::size_t len) const;
  bool starts_with(std::span<const Letter> prefix) const;
  bool ends_with(std::span<const Letter> suffix) const;
  bool starts_with(const Word& w) const { return starts_with(w.span()); }
  bool ends_with(const Word& w) const { return ends_with(w.span()); }

  // Alph(w) as a bit set; every id must be < 64.
  std::uint64_t alphabet_mask() const;
  std::size_t alphabet_size() const;
  std::size_t count(Letter a) const;
  Letter max_letter() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

Word operator+(const Word& lhs, const Word& rhs);
Word operator+(const Word& lhs, Letter rhs);
Word operator+(Letter lhs, const Word& rhs);

// Names of the letters used by the recursive construction: A_0, A_1, A_2,
// A_3, B_3, A_4, B_4, ...  Words of even and odd length-class use disjoint
// families, so an id only becomes a name once the family parity is known.
struct PaperLetterName {
  enum class Kind : std::uint8_t { A, B };
  Kind kind = Kind::A;
  unsigned index = 0;

  friend bool operator==(const PaperLetterName&, const PaperLetterName&) = default;
};

enum class Parity : std::uint8_t { even = 0, odd = 1 };

constexpr Parity parity_of(unsigned n) { return n % 2 == 0 ? Parity::even : Parity::odd; }

inline PaperLetterName A(unsigned k) { return {PaperLetterName::Kind::A, k}; }
PaperLetterName B(unsigned k);

Parity family(PaperLetterName name);
Letter letter_id(PaperLetterName name);
PaperLetterName paper_name(Letter id, Parity parity);
std::string to_string(PaperLetterName name);
std::optional<PaperLetterName> parse_paper_name(std::string_view token);

enum class WordFormat { digits, ids, tokens };

std::optional<WordFormat> parse_format(std::string_view name);
std::string_view to_string(WordFormat format);

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& what);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// tokens: when no parity is given it is inferred from the first token and
// every later token must belong to the same family.
Word parse_word(std::string_view text, WordFormat format,
                std::optional<Parity> token_parity = std::nullopt,
                std::size_t capacity = kDefaultAlphabetCapacity);
std::string format_word(const Word& w, WordFormat format, Parity token_parity = Parity::odd);

// Shorthand for digit-form literals in tests and tools.
inline Word digits(std::string_view text) { return parse_word(text, WordFormat::digits); }

Word reverse(const Word& w);
bool is_palindrome(std::span<const Letter> w);
inline bool is_palindrome(const Word& w) { return is_palindrome(w.span()); }

// Renames letters so first occurrences read 0,1,2,...
Word normalize(const Word& w);
// min(normalize(w), normalize(reverse(w))): one representative per orbit of
// letter permutations combined with optional reversal.
Word canonical_class(const Word& w);

std::vector<std::size_t> occurrences(const Word& w, const Word& u);
std::vector<Word> complete_returns(const Word& w, const Word& u);

}  // namespace richsf
