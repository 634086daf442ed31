#pragma once

// Independent certificate checker. Shares only the word algebra with the
// bound engine: it recomputes every subject and every value in exact
// rational arithmetic and compares them with what each node claims.

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "homlen/proof.hpp"

namespace homlen {

enum class VerifyReason { bad_subject, bad_arithmetic, unjustified_assumption, malformed };

std::string_view reason_code(VerifyReason r);

struct VerifyFailure {
  const ProofNode* node = nullptr;
  VerifyReason reason = VerifyReason::malformed;
  std::string detail;
};

struct VerifyResult {
  // Exact bound established by the root when the check succeeds.
  std::optional<Rational> certified;
  std::optional<VerifyFailure> failure;

  bool ok() const { return !failure.has_value(); }
};

// Claimed node values may differ from the exact recomputation by this
// relative amount (double rounding along the search).
inline constexpr double kValueTolerance = 1e-9;

VerifyResult verify(const Proof& tree, std::span<const ElementaryBound> assumptions = {});

} // namespace homlen
