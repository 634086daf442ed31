#include "homlen/verify.hpp"

#include <cmath>
#include <unordered_map>

namespace homlen {

std::string_view reason_code(VerifyReason r) {
  switch (r) {
  case VerifyReason::bad_subject: return "bad-subject";
  case VerifyReason::bad_arithmetic: return "bad-arithmetic";
  case VerifyReason::unjustified_assumption: return "unjustified-assumption";
  case VerifyReason::malformed: return "malformed";
  }
  return "unknown";
}

namespace {

struct Failed {
  VerifyFailure failure;
};

class Checker {
public:
  explicit Checker(std::span<const ElementaryBound> assumptions) : assumptions_(assumptions) {}

  // Returns the exact value certified by p; throws Failed on the first
  // inconsistency (children before parents, first before second).
  const Rational& check(const Proof& p, const ProofNode* parent) {
    if (!p)
      fail(parent, VerifyReason::malformed, "missing child proof");
    const ProofNode& node = *p;
    if (auto it = certified_.find(&node); it != certified_.end())
      return it->second;

    Rational exact;
    Word expected;
    if (std::holds_alternative<step::EmptyWord>(node.step)) {
      exact = 0;
    } else if (const auto* n = std::get_if<step::Normalized>(&node.step)) {
      expected = Word{n->letter};
      exact = 1;
    } else if (const auto* e = std::get_if<step::Elementary>(&node.step)) {
      if (e->origin) {
        const PowerJustification& pj = *e->origin;
        if (pj.exponent == 0)
          fail(&node, VerifyReason::malformed, "zero exponent");
        const Rational& powered = check(pj.power_proof, &node);
        if (pj.power_proof->subject != power(pj.base, pj.exponent))
          fail(&node, VerifyReason::bad_subject, "power proof does not bound base^exponent");
        expected = pj.base;
        exact = powered / pj.exponent;
      } else {
        const ElementaryBound* match = find_assumption(node);
        if (match == nullptr)
          fail(&node, VerifyReason::unjustified_assumption,
               "no assumption |" + node.subject.str() + "| <= " + format_double(node.value));
        expected = match->element;
        exact = to_rational(match->bound);
      }
    } else if (const auto* t = std::get_if<step::Triangle>(&node.step)) {
      const Rational& first = check(t->first, &node);
      const Rational& second = check(t->second, &node);
      // u v, reduced
      std::vector<Letter> raw(t->first->subject.letters().begin(), t->first->subject.letters().end());
      raw.insert(raw.end(), t->second->subject.letters().begin(), t->second->subject.letters().end());
      expected = reduce(raw);
      exact = first + second;
    } else if (const auto* c = std::get_if<step::Conjugacy>(&node.step)) {
      exact = check(c->inner, &node);
      // g h g^-1 built letter by letter
      std::vector<Letter> raw(c->conjugator.letters().begin(), c->conjugator.letters().end());
      raw.insert(raw.end(), c->inner->subject.letters().begin(), c->inner->subject.letters().end());
      for (auto it = c->conjugator.letters().rbegin(); it != c->conjugator.letters().rend(); ++it)
        raw.push_back(it->inverse());
      expected = reduce(raw);
    }

    if (node.subject != expected)
      fail(&node, VerifyReason::bad_subject,
           "subject " + node.subject.str() + " but premises give " + expected.str());
    if (!close_enough(node.value, exact))
      fail(&node, VerifyReason::bad_arithmetic,
           "claims " + format_double(node.value) + " but premises give " + format_rational(exact));
    return certified_.emplace(&node, std::move(exact)).first->second;
  }

private:
  [[noreturn]] static void fail(const ProofNode* node, VerifyReason reason, std::string detail) {
    throw Failed{VerifyFailure{node, reason, std::move(detail)}};
  }

  static bool close_enough(double claimed, const Rational& exact) {
    if (!std::isfinite(claimed))
      return false;
    Rational diff = abs(to_rational(claimed) - exact);
    Rational scale = abs(exact) > 1 ? Rational(abs(exact)) : Rational(1);
    return diff <= scale * to_rational(kValueTolerance);
  }

  const ElementaryBound* find_assumption(const ProofNode& node) const {
    for (const auto& a : assumptions_)
      if (a.element == node.subject && a.bound == node.value)
        return &a;
    return nullptr;
  }

  std::span<const ElementaryBound> assumptions_;
  std::unordered_map<const ProofNode*, Rational> certified_;
};

} // namespace

VerifyResult verify(const Proof& tree, std::span<const ElementaryBound> assumptions) {
  VerifyResult result;
  try {
    Checker checker(assumptions);
    result.certified = checker.check(tree, nullptr);
  } catch (const Failed& f) {
    result.failure = f.failure;
  }
  return result;
}

} // namespace homlen
