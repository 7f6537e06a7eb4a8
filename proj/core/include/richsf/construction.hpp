#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "richsf/word.hpp"

namespace richsf {

// The n letters of w_n in listing order; position in the list is the letter id.
//   even n: A0 A2 A4 B4 ... An Bn
//   odd n:  A1 A3 B3 ... An Bn
struct LetterTable {
  unsigned n = 0;
  Parity parity = Parity::odd;
  std::vector<PaperLetterName> names;

  Letter id(PaperLetterName name) const;
  const PaperLetterName& name(Letter id) const { return names.at(id); }
  std::size_t size() const noexcept { return names.size(); }
};

LetterTable paper_alphabet(unsigned n);

struct LengthCap {
  static constexpr std::size_t kDefaultMaxLength = std::size_t{1} << 27;
  std::size_t max_length = kDefaultMaxLength;
};

class CapExceeded : public std::length_error {
 public:
  CapExceeded(unsigned n, std::size_t length, std::size_t cap);
  unsigned n() const noexcept { return n_; }
  std::size_t refused_length() const noexcept { return length_; }

 private:
  unsigned n_;
  std::size_t length_;
};

// Auxiliary words of the n >= 7 step. With
//   E = A_n w_{n-2} B_n ~w_{n-2} A_n w_{n-2} B_n
// the identities w = vEu, v = F A_n ~G B_{n-4} G and w_{n-2} = ~H d ~u hold.
struct Decomposition {
  Word P;
  Letter c = 0;
  Letter d = 0;
  Word E, F, G, H;
};

struct ConstructionRecord {
  unsigned n = 0;
  Word w;
  Word v;  // empty for n <= 2
  Word u;  // empty for n <= 2
  std::optional<Decomposition> parts;  // n >= 7 only

  Parity parity() const { return parity_of(n); }
};

// Memoized builder for the w_n family. Records are built bottom-up along the
// parity chain n, n-2, n-4, ...
class Construction {
 public:
  explicit Construction(LengthCap cap = {}) : cap_(cap) {}

  const ConstructionRecord& record(unsigned n);
  const LengthCap& cap() const noexcept { return cap_; }

 private:
  ConstructionRecord build(unsigned n);
  ConstructionRecord build_base(unsigned n);
  ConstructionRecord build_step(unsigned n);

  LengthCap cap_;
  std::map<unsigned, ConstructionRecord> records_;
};

// The basic doubling chain b_1 = a_1, b_n = b_{n-1} a_n ~b_{n-1}.
Word construct_b(unsigned n, LengthCap cap = {});

ConstructionRecord construct_w(unsigned n, LengthCap cap = {});

struct VerificationReport {
  unsigned n = 0;
  std::vector<std::string> checks;      // names of checks that ran
  std::vector<std::string> violations;  // empty when everything holds

  bool ok() const noexcept { return violations.empty(); }
};

// Checks a record against the decomposition identities, richness,
// square-freeness, the alphabet, the |v_n| lower estimate and (n >= 11) the
// exact length recursion. Earlier records are taken from `source`.
VerificationReport verify_record(const ConstructionRecord& rec, Construction& source);
VerificationReport verify_record(const ConstructionRecord& rec);

}  // namespace richsf
