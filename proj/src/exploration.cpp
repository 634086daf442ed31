#include "homlen/exploration.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "homlen/bounds.hpp"
#include "homlen/numeric.hpp"

namespace homlen {

Letter LetterSymmetry::apply(Letter l) const {
  Generator g = l.generator();
  bool inv = l.inverted();
  if (g == Generator::alpha ? invert_alpha : invert_beta)
    inv = !inv;
  if (swap_generators)
    g = g == Generator::alpha ? Generator::beta : Generator::alpha;
  return Letter(g, inv);
}

Word LetterSymmetry::apply(const Word& g) const {
  std::vector<Letter> out;
  out.reserve(g.size());
  for (Letter l : g.letters())
    out.push_back(apply(l));
  return Word(out);
}

std::span<const LetterSymmetry> letter_symmetries() {
  static const std::array<LetterSymmetry, 8> all = [] {
    std::array<LetterSymmetry, 8> a{};
    for (int i = 0; i < 8; ++i)
      a[static_cast<std::size_t>(i)] = {(i & 1) != 0, (i & 2) != 0, (i & 4) != 0};
    return a;
  }();
  return all;
}

Word canonicalize(const Word& g) {
  Word h = cyclically_reduce(g);
  if (h.empty())
    return h;
  std::optional<Word> best;
  for (const auto& sigma : letter_symmetries()) {
    Word image = sigma.apply(h);
    for (std::size_t r = 0; r < image.size(); ++r) {
      Word candidate = rotate(image, r);
      if (!best || candidate < *best)
        best = std::move(candidate);
    }
  }
  return *best;
}

std::vector<SymmetryClass> enumerate_classes(std::size_t length, std::size_t cap) {
  if (length > cap)
    throw std::invalid_argument("length " + std::to_string(length) + " exceeds enumeration cap " +
                                std::to_string(cap));
  std::map<Word, std::size_t> counts;
  if (length == 0) {
    counts[Word{}] = 1;
  } else {
    std::vector<Letter> letters(length);
    // depth-first over reduced words
    auto extend = [&](auto&& self, std::size_t pos) -> void {
      if (pos == length) {
        Word w(letters);
        if (is_cyclically_reduced(w))
          ++counts[canonicalize(w)];
        return;
      }
      for (std::uint8_t c = 0; c < 4; ++c) {
        Letter l = Letter::from_code(c);
        if (pos > 0 && letters[pos - 1] == l.inverse())
          continue;
        letters[pos] = l;
        self(self, pos + 1);
      }
    };
    extend(extend, 0);
  }
  std::vector<SymmetryClass> out;
  out.reserve(counts.size());
  for (auto& [rep, n] : counts)
    out.push_back({rep, n});
  return out;
}

double usefulness_ratio(const Word& g, std::uint32_t n) {
  if (g.empty())
    throw std::invalid_argument("usefulness ratio of the identity is undefined");
  if (n == 0)
    throw std::invalid_argument("exponent must be positive");
  BoundContext single;
  double base = bound(g, single).value;
  BoundContext powered;
  double per_power = bound(power(g, n), powered).value / static_cast<double>(n);
  return base / per_power;
}

std::vector<FamilyScore> family_scan(std::span<const Family> families,
                                     std::span<const std::uint32_t> k_samples,
                                     std::span<const std::uint32_t> n_samples) {
  std::vector<FamilyScore> scores;
  scores.reserve(families.size());
  for (const auto& f : families) {
    FamilyScore s{f, 0.0, 0, 0};
    bool any = false;
    for (auto k : k_samples) {
      Word g = concat(f.a, power(f.b, k));
      if (g.empty())
        continue;
      for (auto n : n_samples) {
        if (n == 0)
          continue;
        double rho = usefulness_ratio(g, n);
        if (!any || rho > s.max_rho) {
          s.max_rho = rho;
          s.k = k;
          s.n = n;
          any = true;
        }
      }
    }
    scores.push_back(s);
  }
  std::stable_sort(scores.begin(), scores.end(),
                   [](const FamilyScore& x, const FamilyScore& y) { return x.max_rho > y.max_rho; });
  return scores;
}

std::string format_report_line(const FamilyScore& s) {
  return "a=" + s.family.a.str() + " b=" + s.family.b.str() + " max_rho=" + format_double(s.max_rho) +
         " at k=" + std::to_string(s.k) + " n=" + std::to_string(s.n);
}

} // namespace homlen
