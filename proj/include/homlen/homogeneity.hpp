#pragma once

// Homogeneity pair sequences: each pair (g, n) licenses l(g) <= l(g^n) / n.
// Pairs are processed in order, each derived bound becoming an elementary
// bound for the computations that follow.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "homlen/bounds.hpp"

namespace homlen {

struct HomogeneityPair {
  Word element;
  std::uint32_t exponent = 1;

  friend bool operator==(const HomogeneityPair&, const HomogeneityPair&) = default;
};

enum class MemoMode {
  // One context for the whole run; memo entries survive between pairs.
  shared,
  // Before each pair the context is reset to the derived bounds so far.
  fresh,
};

struct HomogeneitySchedule {
  std::vector<HomogeneityPair> pairs;
  MemoMode mode = MemoMode::shared;
};

// Which representative of the conjugacy class of a * t^k the schedule uses.
// The engine memoizes by exact word, so only representatives that occur as
// subwords of target powers are ever looked up there.
enum class GammaForm {
  trailing, // t^k a
  leading,  // a t^k
};

struct ScheduleConfig {
  std::uint32_t max_power = 20;
  std::vector<std::uint32_t> ks{1, 2, 6};
  Word target = Word::parse("abAB");
  MemoMode mode = MemoMode::shared;
  GammaForm gamma = GammaForm::trailing;
};

void validate(const ScheduleConfig& cfg);

// key=value lines: max_power, ks, target, mode, gamma. '#' starts a comment.
ScheduleConfig parse_config(std::string_view text);

Word gamma_word(const Word& target, std::uint32_t k, GammaForm form);

HomogeneitySchedule build_schedule(const ScheduleConfig& cfg);

struct DerivedBound {
  HomogeneityPair pair;
  double value = 0; // L(g^n) / n at the time the pair was processed
  Proof proof;      // homogeneity node for g
};

struct ScheduleRun {
  BoundContext context;
  std::vector<DerivedBound> derived;
};

ScheduleRun apply_schedule(const HomogeneitySchedule& schedule);

struct CommutatorBound {
  double value = 0;
  Proof proof;
  std::uint32_t exponent = 1;     // the n attaining the minimum (smallest on ties)
  std::vector<double> per_power;  // L(target^n) / n for n = 1..N
};

CommutatorBound commutator_bound(const ScheduleConfig& cfg);

std::string_view to_string(MemoMode m);
std::string_view to_string(GammaForm f);

} // namespace homlen
