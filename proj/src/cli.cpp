#include "homlen/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "homlen/bounds.hpp"
#include "homlen/exploration.hpp"
#include "homlen/homogeneity.hpp"
#include "homlen/proof.hpp"
#include "homlen/verify.hpp"

namespace homlen {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw UsageError("cannot write " + path);
  out << contents;
}

std::vector<std::uint32_t> parse_csv(const std::string& text, const char* what) {
  std::vector<std::uint32_t> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long v = std::stol(item, &used);
      if (used != item.size() || v <= 0 || v > 0xffffffffL)
        throw std::invalid_argument(item);
      values.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw UsageError(std::string(what) + ": expected positive integers, got '" + item + "'");
    }
  }
  if (values.empty())
    throw UsageError(std::string(what) + ": empty list");
  return values;
}

struct BoundOptions {
  std::uint32_t max_power = 20;
  std::string ks = "1,2,6";
  std::string target = "abAB";
  std::string mode = "shared";
  std::string gamma = "trailing";
  std::string config;
  std::string word;
  std::string output;
  std::string proof;
  std::string tree;
  bool exact = false;
};

std::string join_lines(const std::vector<std::string>& lines) {
  std::string s;
  for (const auto& l : lines)
    s += l + "\n";
  return s;
}

int run_bound(const BoundOptions& opt, const CLI::App& sub, std::ostream& out) {
  Proof proof;
  double value = 0;
  if (sub.count("--word") > 0) {
    BoundContext ctx;
    BoundEntry e = bound(Word::parse(opt.word), ctx);
    value = e.value;
    proof = e.proof;
  } else {
    ScheduleConfig cfg;
    if (!opt.config.empty())
      cfg = parse_config(read_file(opt.config));
    if (sub.count("--max-power") > 0 || opt.config.empty())
      cfg.max_power = opt.max_power;
    if (sub.count("--ks") > 0 || opt.config.empty())
      cfg.ks = parse_csv(opt.ks, "--ks");
    if (sub.count("--target") > 0 || opt.config.empty())
      cfg.target = Word::parse(opt.target);
    if (sub.count("--mode") > 0 || opt.config.empty())
      cfg.mode = opt.mode == "fresh" ? MemoMode::fresh : MemoMode::shared;
    if (sub.count("--gamma") > 0 || opt.config.empty())
      cfg.gamma = opt.gamma == "leading" ? GammaForm::leading : GammaForm::trailing;
    validate(cfg);
    CommutatorBound cb = commutator_bound(cfg);
    value = cb.value;
    proof = cb.proof;
  }

  out << format_double(value) << "\n";
  Arithmetic mode = Arithmetic::floating;
  if (opt.exact) {
    out << format_rational(evaluate_exact(proof)) << "\n";
    mode = Arithmetic::exact;
  }

  std::string text_path = !opt.proof.empty() ? opt.proof : opt.output;
  std::string rendered = join_lines(render_text(proof, mode));
  if (text_path.empty())
    out << rendered;
  else
    write_file(text_path, rendered);

  std::string tree_path = opt.tree;
  if (tree_path.empty() && !text_path.empty())
    tree_path = std::filesystem::path(text_path).replace_extension(".tree").string();
  if (!tree_path.empty()) {
    if (tree_path == text_path)
      throw UsageError("tree and proof paths coincide: " + tree_path);
    write_file(tree_path, serialize(proof));
  }
  return kExitOk;
}

int run_verify(const std::string& path, std::ostream& out, std::ostream& err) {
  Proof tree = deserialize(read_file(path));
  VerifyResult r = verify(tree);
  if (r.ok()) {
    out << "ok " << format_statement(tree->subject, *r.certified) << "\n";
    return kExitOk;
  }
  const VerifyFailure& f = *r.failure;
  err << "verification failed: " << reason_code(f.reason);
  if (f.node != nullptr)
    err << " at " << format_statement(f.node->subject, f.node->value);
  err << ": " << f.detail << "\n";
  return kExitVerifyFailed;
}

int run_enumerate(std::size_t length, std::ostream& out) {
  auto classes = enumerate_classes(length);
  out << classes.size() << "\n";
  for (const auto& c : classes)
    out << (c.representative.empty() ? std::string("e") : c.representative.str()) << " "
        << c.size.value_or(0) << "\n";
  return kExitOk;
}

std::vector<Family> parse_families(const std::string& text) {
  std::vector<Family> families;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream fields(line);
    std::string a;
    std::string b;
    std::string extra;
    if (!(fields >> a))
      continue;
    if (!(fields >> b) || (fields >> extra))
      throw UsageError("families line " + std::to_string(line_no) + ": expected '<a> <b>'");
    families.push_back({Word::parse(a), Word::parse(b)});
  }
  return families;
}

int run_scan(const std::string& path, const std::string& ks, const std::string& ns, std::ostream& out) {
  auto families = parse_families(read_file(path));
  auto k_samples = parse_csv(ks, "--k-samples");
  auto n_samples = parse_csv(ns, "--n-samples");
  for (const auto& s : family_scan(families, k_samples, n_samples))
    out << format_report_line(s) << "\n";
  return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified upper bounds for conjugacy-invariant lengths on the free group F(a, b)",
               "homlen"};
  app.require_subcommand(1);

  BoundOptions bopt;
  auto* bound_cmd = app.add_subcommand("bound", "bound a word, or the commutator via homogeneity");
  bound_cmd->add_option("--max-power", bopt.max_power, "largest exponent N")->check(CLI::PositiveNumber);
  bound_cmd->add_option("--ks", bopt.ks, "comma-separated k values for the family t^k a");
  bound_cmd->add_option("--target", bopt.target, "target word");
  bound_cmd->add_option("--mode", bopt.mode, "memo sharing between pairs")
      ->check(CLI::IsMember({"shared", "fresh"}));
  bound_cmd->add_option("--gamma", bopt.gamma, "family representative: trailing (t^k a) or leading (a t^k)")
      ->check(CLI::IsMember({"trailing", "leading"}));
  bound_cmd->add_option("--config", bopt.config, "key=value configuration file");
  bound_cmd->add_flag("--exact", bopt.exact, "also print the exact rational bound");
  auto* word_opt = bound_cmd->add_option("--word", bopt.word, "bound this word with no homogeneity");
  bound_cmd->add_option("--output", bopt.output, "write the rendered proof here");
  bound_cmd->add_option("--proof", bopt.proof, "write the rendered proof here (tree goes alongside)");
  bound_cmd->add_option("--tree", bopt.tree, "write the serialized proof tree here");
  for (const char* name : {"--max-power", "--ks", "--target", "--mode", "--gamma", "--config"})
    word_opt->excludes(bound_cmd->get_option(name));

  std::string verify_path;
  auto* verify_cmd = app.add_subcommand("verify", "check a serialized proof tree");
  auto* verify_pos = verify_cmd->add_option("file", verify_path, "proof tree file");
  auto* verify_tree = verify_cmd->add_option("--tree", verify_path, "proof tree file");
  verify_pos->excludes(verify_tree);
  verify_cmd->require_option(1);

  std::size_t length = 0;
  auto* enum_cmd = app.add_subcommand("enumerate", "count words of a length up to symmetry");
  enum_cmd->add_option("--length", length, "word length")->required();

  std::string families_path;
  std::string k_samples = "2,4,6";
  std::string n_samples = "2,4,6";
  auto* scan_cmd = app.add_subcommand("scan", "rank families a b^k by usefulness ratio");
  scan_cmd->add_option("--families", families_path, "file with one '<a> <b>' per line")->required();
  scan_cmd->add_option("--k-samples", k_samples, "comma-separated k grid");
  scan_cmd->add_option("--n-samples", n_samples, "comma-separated n grid");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (bound_cmd->parsed())
      return run_bound(bopt, *bound_cmd, out);
    if (verify_cmd->parsed())
      return run_verify(verify_path, out, err);
    if (enum_cmd->parsed())
      return run_enumerate(length, out);
    if (scan_cmd->parsed())
      return run_scan(families_path, k_samples, n_samples, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

} // namespace homlen
