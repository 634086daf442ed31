#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "homlen/bounds.hpp"
#include "homlen/exploration.hpp"
#include "test_support.hpp"

using namespace homlen;

namespace {

// String-level reference for the symmetry classes.
namespace ref {

char inverse(char c) { return c == 'a' ? 'A' : c == 'A' ? 'a' : c == 'b' ? 'B' : 'b'; }

bool cyclically_reduced(const std::string& s) {
  return s.size() < 2 || s.front() != inverse(s.back());
}

int rank(char c) { return c == 'a' ? 0 : c == 'b' ? 1 : c == 'A' ? 2 : 3; }

bool less(const std::string& x, const std::string& y) {
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                      [](char p, char q) { return rank(p) < rank(q); });
}

std::string canonical(const std::string& s) {
  std::string best = s;
  for (int swap = 0; swap < 2; ++swap)
    for (int ia = 0; ia < 2; ++ia)
      for (int ib = 0; ib < 2; ++ib) {
        std::string img = s;
        for (char& c : img) {
          bool up = c == 'A' || c == 'B';
          bool is_a = c == 'a' || c == 'A';
          if ((is_a && ia) || (!is_a && ib))
            up = !up;
          if (swap)
            is_a = !is_a;
          c = is_a ? (up ? 'A' : 'a') : (up ? 'B' : 'b');
        }
        for (std::size_t r = 0; r < img.size(); ++r) {
          std::string rot = img.substr(r) + img.substr(0, r);
          if (less(rot, best))
            best = rot;
        }
      }
  return best;
}

std::vector<std::pair<std::string, std::size_t>> classes(std::size_t length) {
  std::map<std::string, std::size_t> count;
  for (const auto& s : all_reduced_words(length))
    if (cyclically_reduced(s))
      ++count[canonical(s)];
  std::vector<std::pair<std::string, std::size_t>> out(count.begin(), count.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return less(x.first, y.first); });
  return out;
}

} // namespace ref

} // namespace

TEST_CASE("letter symmetries") {
  auto syms = letter_symmetries();
  REQUIRE(syms.size() == 8);
  std::set<std::string> images;
  for (const auto& s : syms) {
    images.insert(s.apply(w("ab")).str());
    CHECK(s.apply(w("aA")).empty());
    CHECK(s.apply(kAlpha).inverse() == s.apply(kAlphaInv));
  }
  CHECK(images.size() == 8);
}

TEST_CASE("canonicalize") {
  CHECK(canonicalize(w("bABa")).str() == "abAB");
  CHECK(canonicalize(w("BAba")).str() == "abAB");
  CHECK(canonicalize(w("BBA")).str() == "aab");
  CHECK(canonicalize(w("abA")).str() == "a");
  CHECK(canonicalize(w("")).empty());
  CHECK(canonicalize(w("aabAB")).str() == "aabAB");
}

TEST_CASE("property: canonicalize is a class invariant") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 500; ++trial) {
    Word g = random_word(rng, 0, 14);
    Word c = canonicalize(g);
    CHECK(canonicalize(c) == c);
    CHECK(canonicalize(rotate(cyclically_reduce(g), rng() % 20)) == c);
    CHECK(canonicalize(conjugate(g, random_word(rng, 0, 5))) == c);
    const auto& s = letter_symmetries()[rng() % 8];
    CHECK(canonicalize(s.apply(g)) == c);
    CHECK(c.str() == ref::canonical(cyclically_reduce(g).str()));
  }
}

TEST_CASE("enumerate_classes") {
  CHECK(enumerate_classes(0).size() == 1);
  CHECK(enumerate_classes(0)[0].representative.empty());
  CHECK(enumerate_classes(1).size() == 1);
  CHECK(enumerate_classes(2).size() == 2);
  CHECK(enumerate_classes(3).size() == 2);
  CHECK(enumerate_classes(4).size() == 6);

  auto four = enumerate_classes(4);
  CHECK(std::find_if(four.begin(), four.end(), [](const SymmetryClass& c) {
          return c.representative == w("abAB") && c.size == 8;
        }) != four.end());

  for (std::size_t len = 1; len <= 8; ++len) {
    auto got = enumerate_classes(len);
    auto expected = ref::classes(len);
    REQUIRE(got.size() == expected.size());
    std::size_t total = 0;
    std::size_t i = 0;
    for (const auto& [rep, size] : expected) {
      CHECK(got[i].representative.str() == rep);
      CHECK(got[i].size.value_or(0) == size);
      total += size;
      ++i;
    }
    // cyclically reduced words of length n in a free group of rank 2
    std::size_t p = 1;
    for (std::size_t k = 0; k < len; ++k)
      p *= 3;
    CHECK(total == p + 1 + (len % 2 == 0 ? 2 : 0));
  }

  CHECK_THROWS_AS(enumerate_classes(kDefaultEnumerationCap + 1), std::invalid_argument);
  CHECK(enumerate_classes(5, 5).size() == 7);
  CHECK_THROWS_AS(enumerate_classes(6, 5), std::invalid_argument);
}

TEST_CASE("usefulness_ratio") {
  CHECK(usefulness_ratio(w("abAB"), 1) == 1);
  CHECK(usefulness_ratio(w("aab"), 1) == 1);
  CHECK(usefulness_ratio(w("abAB"), 17) > 1);
  CHECK_THROWS_AS(usefulness_ratio(Word{}, 2), std::invalid_argument);
  CHECK_THROWS_AS(usefulness_ratio(w("ab"), 0), std::invalid_argument);

  // no gain from powers of a b^k
  for (std::uint32_t k : {5u, 10u})
    for (std::uint32_t n : {5u, 10u}) {
      Word g = concat(w("a"), power(w("b"), k));
      CHECK_MESSAGE(std::fabs(usefulness_ratio(g, n) - 1) <= 0.05, k, " ", n);
    }

  // matches the definition with fresh contexts
  BoundContext x;
  BoundContext y;
  double expected = bound(w("abAB"), x).value / (bound(power(w("abAB"), 5), y).value / 5);
  CHECK(usefulness_ratio(w("abAB"), 5) == expected);
}

TEST_CASE("property: powers never look worse for cyclically reduced words") {
  std::mt19937 rng(8675309);
  int tested = 0;
  while (tested < 200) {
    Word g = random_word(rng, 1, 10);
    if (!is_cyclically_reduced(g))
      continue;
    ++tested;
    auto n = static_cast<std::uint32_t>(1 + rng() % 6);
    CHECK_MESSAGE(usefulness_ratio(g, n) >= 1 - 1e-12, g.str(), " ^ ", n);
  }
}

TEST_CASE("family_scan") {
  std::array<std::uint32_t, 3> grid{2, 4, 6};
  std::vector<Family> fams{{w("a"), w("b")}, {w("a"), w("abAB")}};
  auto scores = family_scan(fams, grid, grid);
  REQUIRE(scores.size() == 2);
  CHECK(scores[0].family.b == w("abAB"));
  CHECK(scores[0].max_rho > scores[1].max_rho);
  CHECK(scores[1].max_rho == doctest::Approx(1).epsilon(0.05));
  CHECK(format_report_line(scores[0]).rfind("a=a b=abAB max_rho=", 0) == 0);

  std::vector<Family> one{{w("a"), w("b")}};
  CHECK(family_scan(one, grid, grid).size() == 1);
  CHECK(family_scan(std::span<const Family>{}, grid, grid).empty());

  // a b^k trivial everywhere: no grid points, ratio stays at zero
  std::vector<Family> trivial{{w(""), w("")}};
  auto t = family_scan(trivial, grid, grid);
  REQUIRE(t.size() == 1);
  CHECK(t[0].max_rho == 0);
}
