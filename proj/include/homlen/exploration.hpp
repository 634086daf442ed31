#pragma once

// Scoring homogeneity pairs without expert guidance: words up to the
// symmetries of the problem, and the usefulness ratio
//
//   rho(g, n) = L(g) / (L(g^n) / n)
//
// computed with fresh, assumption-free contexts.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "homlen/word.hpp"

namespace homlen {

// Letter permutations generated by a<->b, a<->A and b<->B (eight in total).
struct LetterSymmetry {
  bool swap_generators = false;
  bool invert_alpha = false;
  bool invert_beta = false;

  Letter apply(Letter l) const;
  Word apply(const Word& g) const;
};

std::span<const LetterSymmetry> letter_symmetries();

// Lexicographically least word (a < b < A < B) among all rotations of all
// letter-symmetric images of the cyclic reduction of g.
Word canonicalize(const Word& g);

struct SymmetryClass {
  Word representative;
  std::optional<std::size_t> size; // cyclically reduced words in the class

  friend bool operator==(const SymmetryClass&, const SymmetryClass&) = default;
};

inline constexpr std::size_t kDefaultEnumerationCap = 12;

// One class per orbit of cyclically reduced words of exactly this length,
// sorted by representative.
std::vector<SymmetryClass> enumerate_classes(std::size_t length,
                                             std::size_t cap = kDefaultEnumerationCap);

double usefulness_ratio(const Word& g, std::uint32_t n);

struct Family {
  Word a;
  Word b;
};

struct FamilyScore {
  Family family;
  double max_rho = 0;
  std::uint32_t k = 0;
  std::uint32_t n = 0;
};

// rho(a b^k, n) over the grid, families ranked by their maximum (stable for
// ties). Grid points where a b^k is trivial are skipped.
std::vector<FamilyScore> family_scan(std::span<const Family> families,
                                     std::span<const std::uint32_t> k_samples,
                                     std::span<const std::uint32_t> n_samples);

std::string format_report_line(const FamilyScore& s);

} // namespace homlen
