#include "homlen/homogeneity.hpp"

#include <charconv>
#include <stdexcept>

namespace homlen {

std::string_view to_string(MemoMode m) { return m == MemoMode::shared ? "shared" : "fresh"; }

std::string_view to_string(GammaForm f) { return f == GammaForm::trailing ? "trailing" : "leading"; }

void validate(const ScheduleConfig& cfg) {
  if (cfg.max_power < 1)
    throw std::invalid_argument("max_power must be at least 1");
  if (cfg.ks.empty())
    throw std::invalid_argument("ks must not be empty");
  for (auto k : cfg.ks)
    if (k < 1)
      throw std::invalid_argument("every k must be positive");
  if (cfg.target.empty())
    throw std::invalid_argument("target must not be the identity");
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::uint32_t parse_positive(std::string_view s, std::string_view what) {
  s = trim(s);
  std::uint32_t v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size() || v == 0)
    throw std::invalid_argument(std::string(what) + ": expected a positive integer, got '" +
                                std::string(s) + "'");
  return v;
}

} // namespace

ScheduleConfig parse_config(std::string_view text) {
  ScheduleConfig cfg;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty())
      continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key=value");
    std::string_view key = trim(line.substr(0, eq));
    std::string_view value = trim(line.substr(eq + 1));
    if (key == "max_power") {
      cfg.max_power = parse_positive(value, "max_power");
    } else if (key == "ks") {
      cfg.ks.clear();
      while (!value.empty()) {
        auto comma = value.find(',');
        cfg.ks.push_back(parse_positive(value.substr(0, comma), "ks"));
        value = comma == std::string_view::npos ? std::string_view{} : value.substr(comma + 1);
      }
    } else if (key == "target") {
      cfg.target = Word::parse(value);
    } else if (key == "mode") {
      if (value == "shared")
        cfg.mode = MemoMode::shared;
      else if (value == "fresh")
        cfg.mode = MemoMode::fresh;
      else
        throw std::invalid_argument("mode must be shared or fresh");
    } else if (key == "gamma") {
      if (value == "trailing")
        cfg.gamma = GammaForm::trailing;
      else if (value == "leading")
        cfg.gamma = GammaForm::leading;
      else
        throw std::invalid_argument("gamma must be trailing or leading");
    } else {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": unknown key '" +
                                  std::string(key) + "'");
    }
  }
  validate(cfg);
  return cfg;
}

Word gamma_word(const Word& target, std::uint32_t k, GammaForm form) {
  Word a{kAlpha};
  Word tk = power(target, k);
  return form == GammaForm::trailing ? concat(tk, a) : concat(a, tk);
}

HomogeneitySchedule build_schedule(const ScheduleConfig& cfg) {
  validate(cfg);
  HomogeneitySchedule s;
  s.mode = cfg.mode;
  for (auto k : cfg.ks) {
    Word g = gamma_word(cfg.target, k, cfg.gamma);
    for (std::uint32_t n = 1; n <= cfg.max_power; ++n)
      s.pairs.push_back({g, n});
  }
  for (std::uint32_t n = 1; n <= cfg.max_power; ++n)
    s.pairs.push_back({cfg.target, n});
  return s;
}

ScheduleRun apply_schedule(const HomogeneitySchedule& schedule) {
  ScheduleRun run;
  // best derived bound per element, used to rebuild the context in fresh mode
  BoundContext derived_only;
  for (const auto& pair : schedule.pairs) {
    if (pair.exponent == 0)
      throw std::invalid_argument("homogeneity exponent must be positive");
    if (schedule.mode == MemoMode::fresh)
      run.context = derived_only;
    BoundEntry powered = bound(power(pair.element, pair.exponent), run.context);
    Proof proof = make_homogeneity(pair.element, pair.exponent, powered.proof);
    BoundEntry entry{proof->value, proof};
    run.derived.push_back({pair, entry.value, proof});
    run.context.offer(pair.element, entry);
    derived_only.offer(pair.element, entry);
  }
  if (schedule.mode == MemoMode::fresh)
    run.context = derived_only;
  return run;
}

CommutatorBound commutator_bound(const ScheduleConfig& cfg) {
  ScheduleRun run = apply_schedule(build_schedule(cfg));
  CommutatorBound best;
  Proof best_power_proof;
  for (std::uint32_t n = 1; n <= cfg.max_power; ++n) {
    BoundEntry e = bound(power(cfg.target, n), run.context);
    double ratio = e.value / static_cast<double>(n);
    best.per_power.push_back(ratio);
    if (!best_power_proof || ratio < best.value) {
      best.value = ratio;
      best.exponent = n;
      best_power_proof = e.proof;
    }
  }
  // n = 1 needs no homogeneity step of its own
  best.proof = best.exponent == 1 ? best_power_proof
                                  : make_homogeneity(cfg.target, best.exponent, best_power_proof);
  return best;
}

} // namespace homlen
