#pragma once

// Reduced words in the free group on two generators a, b.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace homlen {

enum class Generator : std::uint8_t { alpha = 0, beta = 1 };

// One of a, b, A = a^-1, B = b^-1. The code order a < b < A < B is the
// lexicographic order used for canonical forms.
class Letter {
public:
  constexpr Letter() = default;
  constexpr Letter(Generator g, bool inverted)
      : code_(static_cast<std::uint8_t>(static_cast<std::uint8_t>(g) | (inverted ? 2U : 0U))) {}

  static constexpr Letter from_code(std::uint8_t code) {
    Letter l;
    l.code_ = static_cast<std::uint8_t>(code & 3U);
    return l;
  }

  constexpr Generator generator() const { return static_cast<Generator>(code_ & 1U); }
  constexpr bool inverted() const { return (code_ & 2U) != 0; }
  constexpr Letter inverse() const { return from_code(code_ ^ 2U); }
  constexpr std::uint8_t code() const { return code_; }

  char to_char() const;

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter, Letter) = default;

private:
  std::uint8_t code_ = 0;
};

inline constexpr Letter kAlpha{Generator::alpha, false};
inline constexpr Letter kBeta{Generator::beta, false};
inline constexpr Letter kAlphaInv{Generator::alpha, true};
inline constexpr Letter kBetaInv{Generator::beta, true};

class WordParseError : public std::runtime_error {
public:
  WordParseError(std::string_view text, std::size_t position);
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// A freely reduced word. Every constructor reduces, so two Words compare
// equal iff they represent the same group element.
class Word {
public:
  Word() = default;
  explicit Word(std::span<const Letter> letters);
  Word(std::initializer_list<Letter> letters);

  // Parses the ASCII grammar (a|b|A|B)*; reduces the result.
  static Word parse(std::string_view text);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  std::span<const Letter> letters() const { return letters_; }

  // Contiguous subwords of a reduced word are reduced.
  Word subword(std::size_t pos, std::size_t count) const;

  std::string str() const;
  std::size_t hash() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

private:
  struct Trusted {};
  Word(Trusted, std::vector<Letter> letters) : letters_(std::move(letters)) {}

  friend Word invert(const Word& g);
  friend Word concat(const Word& u, const Word& v);
  friend Word cyclically_reduce(const Word& g);
  friend Word rotate(const Word& g, std::size_t shift);

  std::vector<Letter> letters_;
};

Word reduce(std::span<const Letter> raw);
Word concat(const Word& u, const Word& v);
Word invert(const Word& g);
Word power(const Word& g, std::size_t n);
// by * g * by^-1
Word conjugate(const Word& g, const Word& by);
Word cyclically_reduce(const Word& g);
bool is_cyclically_reduced(const Word& g);
// Cyclic left shift of the letter sequence; g should be cyclically reduced
// for the result to stay reduced, otherwise the result is re-reduced.
Word rotate(const Word& g, std::size_t shift);

inline Word parse_word(std::string_view text) { return Word::parse(text); }
inline std::string format_word(const Word& g) { return g.str(); }

} // namespace homlen

template <>
struct std::hash<homlen::Word> {
  std::size_t operator()(const homlen::Word& w) const noexcept { return w.hash(); }
};
