#include "homlen/proof.hpp"

#include <unordered_map>
#include <unordered_set>

namespace homlen {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

const ProofNode& checked(const Proof& p, const ProofNode* parent) {
  if (!p)
    throw ProofError(parent, "missing child proof");
  return *p;
}

// Bottom-up evaluation memoized per node; T is double or Rational.
template <class T>
class Evaluator {
public:
  const T& operator()(const Proof& p, const ProofNode* parent = nullptr) {
    const ProofNode& node = checked(p, parent);
    if (auto it = memo_.find(&node); it != memo_.end())
      return it->second;
    T v = std::visit(
        overloaded{
            [](const step::EmptyWord&) { return T(0); },
            [](const step::Normalized&) { return T(1); },
            [&](const step::Elementary& e) -> T {
              if (!e.origin) {
                if constexpr (std::is_same_v<T, Rational>)
                  return to_rational(node.value);
                else
                  return node.value;
              }
              if (e.origin->exponent == 0)
                throw ProofError(&node, "zero exponent in power justification");
              return T((*this)(e.origin->power_proof, &node) / T(e.origin->exponent));
            },
            [&](const step::Triangle& t) -> T {
              T first = (*this)(t.first, &node);
              return T(first + (*this)(t.second, &node));
            },
            [&](const step::Conjugacy& c) -> T { return (*this)(c.inner, &node); },
        },
        node.step);
    return memo_.emplace(&node, std::move(v)).first->second;
  }

private:
  std::unordered_map<const ProofNode*, T> memo_;
};

std::string kind_name(const Step& s) {
  return std::visit(overloaded{
                        [](const step::EmptyWord&) { return "empty-word"; },
                        [](const step::Normalized&) { return "length-is-normalized"; },
                        [](const step::Elementary& e) {
                          return e.origin ? "homogeneity" : "elementary";
                        },
                        [](const step::Triangle&) { return "triangle-inequality"; },
                        [](const step::Conjugacy&) { return "conjugacy-invariance"; },
                    },
                    s);
}

} // namespace

Proof make_node(Word subject, double value, Step step) {
  return std::make_shared<const ProofNode>(ProofNode{std::move(subject), value, std::move(step)});
}

Proof make_empty_word() {
  static const Proof empty = make_node(Word{}, 0.0, step::EmptyWord{});
  return empty;
}

Proof make_normalized(Letter letter) {
  static const Proof letters[4] = {
      make_node(Word{Letter::from_code(0)}, 1.0, step::Normalized{Letter::from_code(0)}),
      make_node(Word{Letter::from_code(1)}, 1.0, step::Normalized{Letter::from_code(1)}),
      make_node(Word{Letter::from_code(2)}, 1.0, step::Normalized{Letter::from_code(2)}),
      make_node(Word{Letter::from_code(3)}, 1.0, step::Normalized{Letter::from_code(3)}),
  };
  return letters[letter.code()];
}

Proof make_elementary(const Word& element, double bound) {
  return make_node(element, bound, step::Elementary{});
}

Proof make_homogeneity(const Word& base, std::uint32_t exponent, Proof power_proof) {
  if (exponent == 0)
    throw std::invalid_argument("homogeneity exponent must be positive");
  double value = power_proof->value / static_cast<double>(exponent);
  return make_node(base, value,
                   step::Elementary{PowerJustification{base, exponent, std::move(power_proof)}});
}

Proof make_triangle(Proof first, Proof second) {
  Word subject = concat(first->subject, second->subject);
  double value = first->value + second->value;
  return make_node(std::move(subject), value, step::Triangle{std::move(first), std::move(second)});
}

Proof make_conjugacy(const Word& conjugator, Proof inner) {
  Word subject = conjugate(inner->subject, conjugator);
  double value = inner->value;
  return make_node(std::move(subject), value, step::Conjugacy{conjugator, std::move(inner)});
}

double BoundValue::to_double() const {
  if (is_exact())
    return exact().convert_to<double>();
  return floating();
}

std::string BoundValue::str() const {
  return is_exact() ? format_rational(exact()) : format_double(floating());
}

double evaluate_floating(const Proof& tree) { return Evaluator<double>{}(tree); }

Rational evaluate_exact(const Proof& tree) { return Evaluator<Rational>{}(tree); }

BoundValue evaluate(const Proof& tree, Arithmetic mode) {
  if (mode == Arithmetic::exact)
    return evaluate_exact(tree);
  return evaluate_floating(tree);
}

std::string format_statement(const Word& subject, const BoundValue& value) {
  return "|" + subject.str() + "| <= " + value.str();
}

namespace {

class Renderer {
public:
  explicit Renderer(Arithmetic mode) : mode_(mode) {}

  void visit(const Proof& p) {
    const ProofNode& node = checked(p, nullptr);
    if (!seen_nodes_.insert(&node).second)
      return;
    std::string stmt = statement(p);
    if (emitted_.contains(stmt))
      return;
    std::string line = stmt;
    std::visit(overloaded{
                   [](const step::EmptyWord&) {},
                   [](const step::Normalized&) {},
                   [&](const step::Elementary& e) {
                     if (!e.origin)
                       return;
                     visit(e.origin->power_proof);
                     line += " using " + statement(e.origin->power_proof) + " by taking " +
                             std::to_string(e.origin->exponent) + "th power";
                   },
                   [&](const step::Triangle& t) {
                     visit(t.first);
                     visit(t.second);
                     line += " using " + statement(t.first) + " and " + statement(t.second);
                   },
                   [&](const step::Conjugacy& c) {
                     visit(c.inner);
                     line += " using " + statement(c.inner);
                   },
               },
               node.step);
    // a child may have produced the same statement
    if (emitted_.insert(stmt).second)
      lines_.push_back(std::move(line));
  }

  std::vector<std::string> take() { return std::move(lines_); }

private:
  std::string statement(const Proof& p) {
    if (mode_ == Arithmetic::exact)
      return format_statement(p->subject, exact_(p));
    return format_statement(p->subject, floating_(p));
  }

  Arithmetic mode_;
  Evaluator<double> floating_;
  Evaluator<Rational> exact_;
  std::unordered_set<const ProofNode*> seen_nodes_;
  std::unordered_set<std::string> emitted_;
  std::vector<std::string> lines_;
};

template <class F>
void for_each_child(const ProofNode& node, F&& f) {
  std::visit(overloaded{
                 [](const step::EmptyWord&) {},
                 [](const step::Normalized&) {},
                 [&](const step::Elementary& e) {
                   if (e.origin)
                     f(e.origin->power_proof);
                 },
                 [&](const step::Triangle& t) {
                   f(t.first);
                   f(t.second);
                 },
                 [&](const step::Conjugacy& c) { f(c.inner); },
             },
             node.step);
}

} // namespace

std::vector<std::string> render_text(const Proof& tree, Arithmetic mode) {
  Renderer r(mode);
  r.visit(tree);
  return r.take();
}

std::size_t dag_size(const Proof& tree) {
  std::unordered_set<const ProofNode*> seen;
  std::vector<const ProofNode*> stack{tree.get()};
  while (!stack.empty()) {
    const ProofNode* n = stack.back();
    stack.pop_back();
    if (n == nullptr || !seen.insert(n).second)
      continue;
    for_each_child(*n, [&](const Proof& c) { stack.push_back(c.get()); });
  }
  return seen.size();
}

double expanded_size(const Proof& tree) {
  std::unordered_map<const ProofNode*, double> memo;
  auto go = [&](auto&& self, const Proof& p) -> double {
    if (!p)
      return 0;
    if (auto it = memo.find(p.get()); it != memo.end())
      return it->second;
    double total = 1;
    for_each_child(*p, [&](const Proof& c) { total += self(self, c); });
    memo.emplace(p.get(), total);
    return total;
  };
  return go(go, tree);
}

// Serialization ------------------------------------------------------------

namespace {

void write_node(std::string& out, const ProofNode& node, int depth) {
  const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
  out += indent + "bound: " + format_statement(node.subject, node.value) + "\n";
  out += indent + "proof: " + kind_name(node.step) + "\n";
  auto child = [&](const char* key, const Proof& p) {
    out += indent + key + ":\n";
    write_node(out, checked(p, &node), depth + 1);
  };
  std::visit(overloaded{
                 [](const step::EmptyWord&) {},
                 [](const step::Normalized&) {},
                 [&](const step::Elementary& e) {
                   if (!e.origin)
                     return;
                   out += indent + "base: " + e.origin->base.str() + "\n";
                   out += indent + "exponent: " + std::to_string(e.origin->exponent) + "\n";
                   child("power-proof", e.origin->power_proof);
                 },
                 [&](const step::Triangle& t) {
                   child("first", t.first);
                   child("second", t.second);
                 },
                 [&](const step::Conjugacy& c) {
                   out += indent + "conjugated-by: " + c.conjugator.str() + "\n";
                   child("first", c.inner);
                 },
             },
             node.step);
}

struct Line {
  std::size_t number;
  int depth;
  std::string key;
  std::string value; // empty for nested keys
  bool nested;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    std::size_t eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!raw.empty() && raw.back() == '\r')
      raw.remove_suffix(1);
    if (raw.find_first_not_of(' ') == std::string_view::npos)
      continue;
    std::size_t spaces = raw.find_first_not_of(' ');
    if (spaces % 2 != 0)
      throw ProofParseError(number, "indentation must be a multiple of two spaces");
    raw.remove_prefix(spaces);
    std::size_t colon = raw.find(':');
    if (colon == std::string_view::npos)
      throw ProofParseError(number, "expected 'key: value'");
    Line line{number, static_cast<int>(spaces / 2), std::string(raw.substr(0, colon)), {}, false};
    std::string_view rest = raw.substr(colon + 1);
    if (rest.empty()) {
      line.nested = true;
    } else {
      if (rest.front() != ' ')
        throw ProofParseError(number, "expected a space after ':'");
      line.value = std::string(rest.substr(1));
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

class Parser {
public:
  explicit Parser(std::vector<Line> lines) : lines_(std::move(lines)) {}

  Proof parse_root() {
    if (lines_.empty())
      throw ProofParseError(1, "empty proof");
    Proof p = parse_node(0);
    if (pos_ != lines_.size())
      throw ProofParseError(lines_[pos_].number, "unexpected trailing content");
    return p;
  }

private:
  const Line& expect(int depth, const char* key, bool nested) {
    if (pos_ >= lines_.size())
      throw ProofParseError(lines_.empty() ? 1 : lines_.back().number + 1,
                            std::string("missing '") + key + "'");
    const Line& l = lines_[pos_];
    if (l.depth != depth)
      throw ProofParseError(l.number, "bad indentation: expected depth " + std::to_string(depth) +
                                          ", found " + std::to_string(l.depth));
    if (l.key != key)
      throw ProofParseError(l.number, "expected key '" + std::string(key) + "', found '" + l.key +
                                          "'");
    if (l.nested != nested)
      throw ProofParseError(l.number, nested ? "expected a nested block" : "expected a value");
    ++pos_;
    return l;
  }

  Word parse_word_at(const Line& l, std::string_view text) {
    try {
      return Word::parse(text);
    } catch (const WordParseError& e) {
      throw ProofParseError(l.number, e.what());
    }
  }

  Proof parse_node(int depth) {
    const Line& bl = expect(depth, "bound", false);
    // |word| <= number
    std::string_view b = bl.value;
    std::size_t close = b.find('|', 1);
    if (b.empty() || b.front() != '|' || close == std::string_view::npos ||
        b.substr(close, 5) != "| <= ")
      throw ProofParseError(bl.number, "expected '|word| <= number'");
    Word subject = parse_word_at(bl, b.substr(1, close - 1));
    auto value = parse_double(b.substr(close + 5));
    if (!value)
      throw ProofParseError(bl.number, "invalid number '" + std::string(b.substr(close + 5)) + "'");
    std::size_t line_no = bl.number;

    const Line& pl = expect(depth, "proof", false);
    const std::string kind = pl.value;
    if (kind == "empty-word")
      return make_node(std::move(subject), *value, step::EmptyWord{});
    if (kind == "length-is-normalized") {
      if (subject.size() != 1)
        throw ProofParseError(line_no, "length-is-normalized needs a one-letter subject");
      return make_node(subject, *value, step::Normalized{subject.front()});
    }
    if (kind == "elementary")
      return make_node(std::move(subject), *value, step::Elementary{});
    if (kind == "homogeneity") {
      const Line& base_line = expect(depth, "base", false);
      Word base = parse_word_at(base_line, base_line.value);
      const Line& el = expect(depth, "exponent", false);
      std::uint32_t exponent = 0;
      try {
        std::size_t used = 0;
        unsigned long e = std::stoul(el.value, &used);
        if (used != el.value.size() || e == 0 || e > 0xffffffffUL)
          throw std::invalid_argument("range");
        exponent = static_cast<std::uint32_t>(e);
      } catch (const std::exception&) {
        throw ProofParseError(el.number, "exponent must be a positive integer");
      }
      expect(depth, "power-proof", true);
      Proof pp = parse_node(depth + 1);
      return make_node(std::move(subject), *value,
                       step::Elementary{PowerJustification{std::move(base), exponent, std::move(pp)}});
    }
    if (kind == "triangle-inequality") {
      expect(depth, "first", true);
      Proof first = parse_node(depth + 1);
      expect(depth, "second", true);
      Proof second = parse_node(depth + 1);
      return make_node(std::move(subject), *value, step::Triangle{std::move(first), std::move(second)});
    }
    if (kind == "conjugacy-invariance") {
      const Line& cl = expect(depth, "conjugated-by", false);
      Word conjugator = parse_word_at(cl, cl.value);
      expect(depth, "first", true);
      Proof inner = parse_node(depth + 1);
      return make_node(std::move(subject), *value,
                       step::Conjugacy{std::move(conjugator), std::move(inner)});
    }
    throw ProofParseError(pl.number, "unknown proof kind '" + kind + "'");
  }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

} // namespace

std::string serialize(const Proof& tree) {
  std::string out;
  write_node(out, checked(tree, nullptr), 0);
  return out;
}

Proof deserialize(std::string_view text) { return Parser(tokenize(text)).parse_root(); }

} // namespace homlen
