#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace brauer {

// The three-cell normal form: delta^d times one of
//   group : a group element u,
//   e1    : u e1 v w        (u in D1, v in C1, w^-1 in D1),
//   e1e3  : u e1e3 w        (u in D2, w^-1 in D2).
// Components are canonical representatives, so equality is structural.
enum class CellKind : uint8_t { group, e1, e1e3 };

struct NormalForm {
  int64_t delta = 0;
  CellKind cell = CellKind::group;
  int32_t u = 0;
  int32_t v = 0;
  int32_t w = 0;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

// One generator letter of a monomial word.
struct Letter {
  enum Kind : uint8_t { R, E } kind;
  uint8_t index;  // 0-based generator index

  friend bool operator==(const Letter&, const Letter&) = default;
};

// A monomial: delta^d times a product of r/e letters.
struct Word {
  int64_t delta = 0;
  std::vector<Letter> letters;
};

struct WordParseError : std::invalid_argument {
  WordParseError(const std::string& msg, size_t offset)
      : std::invalid_argument(msg), offset(offset) {}
  size_t offset;
};

// Tokens: r1..rk, e1..ek, d (delta), d- (delta inverse), whitespace-separated.
Word parse_word(const std::string& text, int rank);
std::string format_word(const Word& w);

}  // namespace brauer
