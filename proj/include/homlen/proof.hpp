#pragma once

// Proof certificates for upper bounds |g| <= x on normalized,
// conjugacy-invariant pseudo-lengths.
//
// A proof is an immutable DAG of ProofNode. Each node caches the word it
// bounds (its subject) and the claimed bound as a double; the exact value it
// certifies is recovered by evaluate(..., Arithmetic::exact) or verify().

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "homlen/numeric.hpp"
#include "homlen/word.hpp"

namespace homlen {

struct ProofNode;
using Proof = std::shared_ptr<const ProofNode>;

// |base| <= |base^exponent| / exponent, by homogeneity.
struct PowerJustification {
  Word base;
  std::uint32_t exponent = 1;
  Proof power_proof;
};

namespace step {
struct EmptyWord {};
struct Normalized {
  Letter letter;
};
// An assumed bound, or one derived by homogeneity when origin is set.
struct Elementary {
  std::optional<PowerJustification> origin;
};
struct Triangle {
  Proof first;
  Proof second;
};
struct Conjugacy {
  Word conjugator;
  Proof inner;
};
} // namespace step

using Step = std::variant<step::EmptyWord, step::Normalized, step::Elementary, step::Triangle,
                          step::Conjugacy>;

struct ProofNode {
  Word subject;
  double value = 0;
  Step step;
};

// An assumption l(element) <= bound.
struct ElementaryBound {
  Word element;
  double bound = 0;
};

class ProofError : public std::runtime_error {
public:
  ProofError(const ProofNode* node, const std::string& what)
      : std::runtime_error(what), node_(node) {}
  const ProofNode* node() const { return node_; }

private:
  const ProofNode* node_;
};

// Smart constructors. Subject and value follow from the step.
Proof make_empty_word();
Proof make_normalized(Letter letter);
Proof make_elementary(const Word& element, double bound);
Proof make_homogeneity(const Word& base, std::uint32_t exponent, Proof power_proof);
Proof make_triangle(Proof first, Proof second);
Proof make_conjugacy(const Word& conjugator, Proof inner);
// No consistency checks; for deserialization and mutation tests.
Proof make_node(Word subject, double value, Step step);

enum class Arithmetic { floating, exact };

class BoundValue {
public:
  BoundValue(double x) : value_(x) {}
  BoundValue(Rational q) : value_(std::move(q)) {}

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  double to_double() const;
  const Rational& exact() const { return std::get<Rational>(value_); }
  double floating() const { return std::get<double>(value_); }
  std::string str() const;

private:
  std::variant<double, Rational> value_;
};

double evaluate_floating(const Proof& tree);
Rational evaluate_exact(const Proof& tree);
BoundValue evaluate(const Proof& tree, Arithmetic mode);

std::vector<std::string> render_text(const Proof& tree, Arithmetic mode);

// Number of distinct nodes reachable from the root.
std::size_t dag_size(const Proof& tree);
// Node count of the fully expanded tree (shared nodes counted per use).
double expanded_size(const Proof& tree);

// Indentation-based tree format.
std::string serialize(const Proof& tree);
Proof deserialize(std::string_view text);

class ProofParseError : public std::runtime_error {
public:
  ProofParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

// "|w| <= x"
std::string format_statement(const Word& subject, const BoundValue& value);

} // namespace homlen
