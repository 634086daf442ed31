#pragma once

// Memoized recursive upper bound L(g) on every normalized, conjugacy-invariant
// pseudo-length l satisfying the context's elementary bounds. For
// g = x_1 x_2 ... x_n:
//
//   (a) l(g) <= 1 + l(x_2 ... x_n)
//   (b) l(g) <= l(x_2 ... x_{k-1}) + l(x_{k+1} ... x_n)   whenever x_k = x_1^-1
//
// The table is consulted before anything else, so elementary entries can
// undercut the axioms. Every computed value is stored back into the table.

#include <cstddef>
#include <span>
#include <unordered_map>

#include "homlen/proof.hpp"
#include "homlen/word.hpp"

namespace homlen {

struct BoundEntry {
  double value = 0;
  Proof proof;
};

class BoundContext {
public:
  BoundContext() = default;

  const BoundEntry* find(const Word& g) const;
  void store(const Word& g, BoundEntry entry);
  // Stores only when g is absent or the new value is strictly smaller.
  bool offer(const Word& g, BoundEntry entry);

  std::size_t size() const { return table_.size(); }
  void clear() { table_.clear(); }

private:
  std::unordered_map<Word, BoundEntry> table_;
};

// Fresh context holding exactly the given assumptions; later duplicates win.
BoundContext with_elementary_bounds(std::span<const ElementaryBound> bounds);

BoundEntry bound(const Word& g, BoundContext& ctx);

} // namespace homlen
