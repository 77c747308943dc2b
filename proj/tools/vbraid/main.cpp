#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"
#include "reproduce.hpp"
#include "vbraid/errors.hpp"

namespace {

using vbraid::cli::OutputFormat;
using vbraid::cli::RunConfig;

struct Flags {
  std::string config_file;
  std::string group;
  int strands = 0;
  std::string base;
  std::uint64_t seed = 0;
  int max_n = 0;
  std::size_t max_len = 0;
  bool json = false;
  bool plain = false;
  bool symbolic = false;
  bool y = false;
};

/// Shared options; values given on the command line override --config.
void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config_file, "JSON run configuration");
  cmd->add_option("--group", f.group, "b, fb, vb or fvb");
  cmd->add_option("-n,--strands", f.strands, "number of strands");
  cmd->add_option("--seed", f.seed, "seed for randomized choices");
  cmd->add_option("--max-symbolic-n", f.max_n, "strand limit for symbolic checks (default 6)");
  cmd->add_option("--max-symbolic-len", f.max_len, "combined length limit for symbolic comparison (default 12)");
  cmd->add_flag("--json", f.json, "JSON output");
  cmd->add_flag("--plain", f.plain, "plain text output");
}

RunConfig resolve(const CLI::App* cmd, const Flags& f, OutputFormat default_format) {
  RunConfig c;
  c.format = default_format;
  if (!f.config_file.empty()) c = vbraid::cli::load_config(f.config_file);
  const auto given = [cmd](const char* name) {
    const auto* opt = cmd->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  if (given("--group")) c.group = vbraid::parse_group_kind(f.group);
  if (given("--strands")) c.strands = f.strands;
  if (given("--base")) c.base = f.base;
  if (given("--seed")) c.seed = f.seed;
  if (given("--max-symbolic-n")) c.limits.max_strands = f.max_n;
  if (given("--max-symbolic-len")) c.limits.max_length = f.max_len;
  if (f.json) c.format = OutputFormat::json;
  if (f.plain) c.format = OutputFormat::plain;
  if (f.symbolic) c.symbolic = true;
  if (f.y) c.y_variables = true;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact braid-group representations through cluster mutations"};
  app.require_subcommand(1);
  Flags f;
  std::string word;
  std::string word2;
  std::string corpus;
  std::string seed_file;
  std::string script;

  auto* inv = app.add_subcommand("invariant", "image of a base point under a word");
  add_common(inv, f);
  inv->add_option("--word", word, "word, e.g. \"s1 r1 S2\"");
  inv->add_option("--base", f.base, "base point, e.g. \"1,2,2,1\"");
  inv->add_option("--corpus", corpus, "word file (one per line) or corpus JSON");

  auto* dis = app.add_subcommand("distinguish", "compare two words at a common base point");
  add_common(dis, f);
  dis->add_option("word1", word, "first word")->required();
  dis->add_option("word2", word2, "second word")->required();
  dis->add_option("--base", f.base, "base point");
  dis->add_flag("--symbolic", f.symbolic, "compare as birational maps when the invariants agree");

  auto* ver = app.add_subcommand("verify", "check the defining and forbidden relations");
  add_common(ver, f);

  auto* mut = app.add_subcommand("mutate", "apply a mutation script to a seed");
  add_common(mut, f);
  mut->add_option("--seed-file", seed_file, "seed JSON (default: quiver seed on 3n+1 variables)");
  mut->add_option("--script", script, "vertices, e.g. \"7,4,2\"")->required();
  mut->add_flag("--y", f.y, "mutate y-variables");

  auto* rep = app.add_subcommand("reproduce", "run the regression table");
  add_common(rep, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // usage errors share the invalid-input code; --help stays 0
    return app.exit(e) == 0 ? 0 : static_cast<int>(vbraid::cli::ExitCode::kInvalidInput);
  }

  try {
    if (inv->parsed()) {
      const auto c = resolve(inv, f, OutputFormat::json);
      if (!corpus.empty()) return vbraid::cli::cmd_invariant_corpus(corpus, c, std::cout, std::cerr);
      if (inv->count("--word") == 0) {
        std::cerr << "error: --word or --corpus is required\n";
        return vbraid::cli::kInvalidInput;
      }
      return vbraid::cli::cmd_invariant(word, c, std::cout, std::cerr);
    }
    if (dis->parsed()) return vbraid::cli::cmd_distinguish(word, word2, resolve(dis, f, OutputFormat::json), std::cout, std::cerr);
    if (ver->parsed()) return vbraid::cli::cmd_verify(resolve(ver, f, OutputFormat::json), std::cout, std::cerr);
    if (mut->parsed()) {
      const std::optional<std::string> file = seed_file.empty() ? std::nullopt : std::optional(seed_file);
      return vbraid::cli::cmd_mutate(file, script, resolve(mut, f, OutputFormat::json), std::cout, std::cerr);
    }
    return vbraid::cli::cmd_reproduce(resolve(rep, f, OutputFormat::plain), std::cout, std::cerr);
  } catch (const vbraid::Error& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << '\n';
    return vbraid::cli::kInvalidInput;
  }
}
