#include "homlen/bounds.hpp"

#include <stdexcept>

namespace homlen {

const BoundEntry* BoundContext::find(const Word& g) const {
  auto it = table_.find(g);
  return it == table_.end() ? nullptr : &it->second;
}

void BoundContext::store(const Word& g, BoundEntry entry) { table_.insert_or_assign(g, std::move(entry)); }

bool BoundContext::offer(const Word& g, BoundEntry entry) {
  auto it = table_.find(g);
  if (it != table_.end() && !(entry.value < it->second.value))
    return false;
  store(g, std::move(entry));
  return true;
}

BoundContext with_elementary_bounds(std::span<const ElementaryBound> bounds) {
  BoundContext ctx;
  for (const auto& b : bounds) {
    if (!(b.bound >= 0))
      throw std::invalid_argument("elementary bound for " + b.element.str() + " is negative");
    ctx.store(b.element, BoundEntry{b.bound, make_elementary(b.element, b.bound)});
  }
  return ctx;
}

namespace {

// Proof that x_1 (inner) x_1^-1 rest is bounded by the two parts. With an
// empty tail the conjugacy step alone carries the bound.
Proof split_proof(Letter first, const BoundEntry& inner, const BoundEntry& tail) {
  Proof conj = make_conjugacy(Word{first}, inner.proof);
  if (tail.proof->subject.empty())
    return conj;
  return make_triangle(std::move(conj), tail.proof);
}

} // namespace

BoundEntry bound(const Word& g, BoundContext& ctx) {
  if (const BoundEntry* hit = ctx.find(g))
    return *hit;
  if (g.empty())
    return {0.0, make_empty_word()};
  if (g.size() == 1)
    return {1.0, make_normalized(g.front())};

  const std::size_t n = g.size();
  const Letter first = g.front();

  // peel off the first letter; ties keep the earlier candidate
  BoundEntry rest = bound(g.subword(1, n - 1), ctx);
  double best = 1.0 + rest.value;
  BoundEntry best_rest = rest;
  std::size_t best_split = 0;
  BoundEntry best_inner;

  // split where the first letter comes back inverted, k is its 0-based index
  for (std::size_t k = 2; k < n; ++k) {
    if (g[k] != first.inverse())
      continue;
    BoundEntry inner = bound(g.subword(1, k - 1), ctx);
    BoundEntry tail = bound(g.subword(k + 1, n - k - 1), ctx);
    double lambda = inner.value + tail.value;
    if (lambda < best) {
      best = lambda;
      best_split = k;
      best_inner = std::move(inner);
      best_rest = std::move(tail);
    }
  }

  Proof proof = best_split == 0 ? make_triangle(make_normalized(first), best_rest.proof)
                                : split_proof(first, best_inner, best_rest);
  BoundEntry result{best, std::move(proof)};
  ctx.store(g, result);
  return result;
}

} // namespace homlen
