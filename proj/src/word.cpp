#include "homlen/word.hpp"

#include <algorithm>

namespace homlen {

namespace {

constexpr char kLetterChars[4] = {'a', 'b', 'A', 'B'};

int letter_code(char c) {
  switch (c) {
  case 'a': return 0;
  case 'b': return 1;
  case 'A': return 2;
  case 'B': return 3;
  default: return -1;
  }
}

// Single left-to-right stack pass.
std::vector<Letter> reduce_letters(std::span<const Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (!out.empty() && out.back() == l.inverse())
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

} // namespace

char Letter::to_char() const { return kLetterChars[code_]; }

WordParseError::WordParseError(std::string_view text, std::size_t position)
    : std::runtime_error("invalid character '" + std::string(1, text[position]) +
                         "' at index " + std::to_string(position) + " in word \"" +
                         std::string(text) + "\""),
      position_(position) {}

Word::Word(std::span<const Letter> letters) : letters_(reduce_letters(letters)) {}

Word::Word(std::initializer_list<Letter> letters)
    : Word(std::span<const Letter>(letters.begin(), letters.size())) {}

Word Word::parse(std::string_view text) {
  std::vector<Letter> raw;
  raw.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    int code = letter_code(text[i]);
    if (code < 0)
      throw WordParseError(text, i);
    raw.push_back(Letter::from_code(static_cast<std::uint8_t>(code)));
  }
  return Word(raw);
}

Word Word::subword(std::size_t pos, std::size_t count) const {
  auto first = letters_.begin() + static_cast<std::ptrdiff_t>(pos);
  return Word(Trusted{}, std::vector<Letter>(first, first + static_cast<std::ptrdiff_t>(count)));
}

std::string Word::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_)
    s.push_back(l.to_char());
  return s;
}

std::size_t Word::hash() const {
  // FNV-1a over letter codes
  std::uint64_t h = 1469598103934665603ULL;
  for (Letter l : letters_) {
    h ^= l.code();
    h *= 1099511628211ULL;
  }
  h ^= letters_.size();
  return static_cast<std::size_t>(h);
}

Word reduce(std::span<const Letter> raw) { return Word(raw); }

Word concat(const Word& u, const Word& v) {
  // Cancellation only happens at the seam.
  std::size_t cancel = 0;
  while (cancel < u.size() && cancel < v.size() &&
         u.letters_[u.size() - 1 - cancel] == v.letters_[cancel].inverse())
    ++cancel;
  std::vector<Letter> out;
  out.reserve(u.size() + v.size() - 2 * cancel);
  out.insert(out.end(), u.letters_.begin(), u.letters_.end() - static_cast<std::ptrdiff_t>(cancel));
  out.insert(out.end(), v.letters_.begin() + static_cast<std::ptrdiff_t>(cancel), v.letters_.end());
  return Word(Word::Trusted{}, std::move(out));
}

Word invert(const Word& g) {
  std::vector<Letter> out;
  out.reserve(g.size());
  for (auto it = g.letters_.rbegin(); it != g.letters_.rend(); ++it)
    out.push_back(it->inverse());
  return Word(Word::Trusted{}, std::move(out));
}

Word power(const Word& g, std::size_t n) {
  Word result;
  for (std::size_t i = 0; i < n; ++i)
    result = concat(result, g);
  return result;
}

Word conjugate(const Word& g, const Word& by) { return concat(concat(by, g), invert(by)); }

bool is_cyclically_reduced(const Word& g) {
  return g.size() < 2 || g.front() != g.back().inverse();
}

Word cyclically_reduce(const Word& g) {
  std::size_t lo = 0;
  std::size_t hi = g.size();
  while (hi - lo >= 2 && g.letters_[lo] == g.letters_[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return g.subword(lo, hi - lo);
}

Word rotate(const Word& g, std::size_t shift) {
  if (g.empty())
    return g;
  shift %= g.size();
  std::vector<Letter> out;
  out.reserve(g.size());
  out.insert(out.end(), g.letters_.begin() + static_cast<std::ptrdiff_t>(shift), g.letters_.end());
  out.insert(out.end(), g.letters_.begin(), g.letters_.begin() + static_cast<std::ptrdiff_t>(shift));
  if (is_cyclically_reduced(g))
    return Word(Word::Trusted{}, std::move(out));
  return Word(out);
}

} // namespace homlen
