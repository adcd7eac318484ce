#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wcent/report.hpp"

namespace {

constexpr int kUsageError = 2;

struct Options {
  std::vector<std::string> partitions;
  std::string mode = "full";
  std::optional<std::uint64_t> seed;
  std::string format = "text";
  int max_n = 0;
  int max_total = 0;
  int trials = 100;
  std::string input;
  bool timings = false;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("-p,--partition", o.partitions, "Jordan type, e.g. 1,2,2 (repeatable)");
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
  sub->add_option("--max-N", o.max_total, "Sweep every partition with at most this total size");
  sub->add_option("--max-n", o.max_n, "Limit the number of parts in a sweep");
  sub->add_flag("--timings", o.timings, "Include per-partition timings");
}

std::uint64_t seed_from_env() {
  const char* env = std::getenv("WCENT_SEED");
  if (env == nullptr || *env == '\0') return wcent::kDefaultSeed;
  std::size_t used = 0;
  const std::string text(env);
  const unsigned long long v = std::stoull(text, &used);
  if (used != text.size() || text.front() == '-') throw std::invalid_argument("WCENT_SEED must be a natural number");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of W-algebra generators for centralizers in gl_N"};
  app.require_subcommand(1);
  Options o;

  std::map<CLI::App*, wcent::Command> commands;
  auto sub = [&](wcent::Command c, const std::string& help) {
    CLI::App* s = app.add_subcommand(std::string(wcent::command_name(c)), help);
    add_common(s, o);
    commands[s] = c;
    return s;
  };
  sub(wcent::Command::Basis, "List the basis of the centralizer");
  sub(wcent::Command::Generators, "Compute the generator table w[k][r]");
  auto* membership = sub(wcent::Command::CheckMembership, "Check generators (or --input) lie in the W-algebra");
  membership->add_option("--mode", o.mode, "Probe set")->check(CLI::IsMember({"generators", "full"}));
  membership->add_option("--input", o.input, "JSON file holding a polynomial to test");
  sub(wcent::Command::Miura, "Compare Miura images with the diagonal factorization");
  sub(wcent::Command::Jacobian, "Jacobian independence at a seeded point")->add_option("--seed", o.seed, "Point seed");
  sub(wcent::Command::SsVectors, "Compute Segal-Sugawara vectors phi[k][r]");
  sub(wcent::Command::VerifyCenter, "Check phi[k][r] are annihilated by a[t]");
  sub(wcent::Command::VerifyIso, "Check the Harish-Chandra correspondence");
  auto* axioms = sub(wcent::Command::PvaAxioms, "Random checks of the lambda-bracket axioms");
  axioms->add_option("--seed", o.seed, "RNG seed");
  axioms->add_option("--trials", o.trials, "Trials per axiom")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  wcent::RunConfig cfg;
  try {
    for (auto* s : app.get_subcommands()) cfg.command = commands.at(s);
    for (const auto& text : o.partitions) cfg.partitions.push_back(wcent::Partition::parse(text));
    if (o.max_total > 0) {
      auto sweep = wcent::partitions_up_to(o.max_total, o.max_n > 0 ? o.max_n : 1 << 20);
      cfg.partitions.insert(cfg.partitions.end(), sweep.begin(), sweep.end());
    }
    if (cfg.partitions.empty()) throw std::invalid_argument("give -p/--partition or --max-N");
    cfg.mode = o.mode == "generators" ? wcent::MembershipMode::Generators : wcent::MembershipMode::FullBasis;
    cfg.seed = o.seed ? *o.seed : seed_from_env();
    cfg.format = o.format == "json" ? wcent::Format::Json : o.format == "latex" ? wcent::Format::Latex : wcent::Format::Text;
    cfg.trials = o.trials;
    cfg.timings = o.timings;
    if (!o.input.empty()) {
      std::ifstream in(o.input);
      if (!in) throw std::invalid_argument("cannot open " + o.input);
      cfg.input = wcent::Json::parse(in);
    }
  } catch (const std::exception& e) {
    std::cerr << "wcent: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    const wcent::Report report = wcent::dispatch(cfg);
    std::cout << report.render(cfg.format);
    return report.exit_code();
  } catch (const std::invalid_argument& e) {
    // Bad input polynomial and similar.
    std::cerr << "wcent: " << e.what() << '\n';
    return kUsageError;
  }
}
