#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "vbraid/cluster.hpp"
#include "vbraid/errors.hpp"
#include "vbraid/relations.hpp"
#include "vbraid/representation.hpp"

namespace vbraid::cli {

namespace {

using nlohmann::json;

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

/// Seed JSON as one variable per line, then the exchange matrix.
void emit_seed_plain(std::ostream& out, const json& seed, const char* key) {
  const auto& vars = seed.at(key);
  for (std::size_t k = 0; k < vars.size(); ++k) out << key << k + 1 << " = " << vars[k].get<std::string>() << '\n';
  out << "B =\n";
  for (const auto& row : seed.at("B")) {
    for (const auto& b : row) out << std::setw(3) << b.get<int>();
    out << '\n';
  }
}

/// Runs `body`, turning library errors into exit codes and diagnostics.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const SingularPoint& e) {
    err << "error: SingularPoint: " << e.what() << '\n';
    return kSingular;
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << '\n';
    return kInvalidInput;
  } catch (const json::exception& e) {
    err << "error: malformed JSON: " << e.what() << '\n';
    return kInvalidInput;
  }
}

GroupKind require_group(const RunConfig& config) {
  if (!config.group) throw SyntaxError("--group is required");
  return *config.group;
}

BraidWord word_from_config(const std::string& text, const RunConfig& config) {
  return parse_word(text, config.strands, require_group(config));
}

std::optional<Point> base_from_config(const RunConfig& config) {
  if (!config.base) return std::nullopt;
  return parse_point(*config.base);
}

void print_invariant_plain(std::ostream& out, const InvariantReport& r) {
  const char prefix = variable_prefix(r.word.group());
  out << "word:  " << format_word(r.word) << '\n'
      << "group: " << to_string(r.word.group()) << r.word.strands() << '\n'
      << "base:  " << format_point(r.base, prefix) << '\n'
      << "image: " << format_point(r.image, prefix) << '\n';
  if (r.base_retries > 0) out << "base retries: " << r.base_retries << '\n';
}

bool looks_like_json(const std::string& text) {
  const auto first = std::find_if_not(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); });
  return first != text.end() && (*first == '[' || *first == '{');
}

struct CorpusResult {
  int code = kOk;
  json report;
  std::string error;
};

/// Evaluates `tasks` on a fixed pool; results keep input order.
std::vector<CorpusResult> run_parallel(const std::vector<std::function<CorpusResult()>>& tasks) {
  std::vector<CorpusResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) results[k] = tasks[k]();
  };
  const std::size_t n_threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, tasks.size() + 1);
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  return results;
}

CorpusResult evaluate_entry(const std::string& name, const std::function<BraidWord()>& make_word,
                            const RunConfig& config) {
  CorpusResult r;
  std::ostringstream diag;
  r.code = guarded(diag, [&] {
    const BraidWord word = make_word();
    r.report = to_json(invariant(word, base_from_config(config), config.seed));
    return kOk;
  });
  r.error = diag.str();
  if (r.code != kOk) {
    if (!r.error.empty() && r.error.back() == '\n') r.error.pop_back();
    r.report = {{"error", r.error}, {"exit", r.code}};
  }
  r.report["name"] = name;
  return r;
}

/// A base at which both words evaluate; retries like `invariant`.
std::pair<InvariantReport, InvariantReport> common_base(const BraidWord& w1, const BraidWord& w2,
                                                        const RunConfig& config) {
  Point base = config.base ? parse_point(*config.base) : default_base(w1.group(), w1.strands());
  std::mt19937_64 rng(config.seed);
  for (int attempt = 0; attempt <= kMaxBaseRetries; ++attempt) {
    if (attempt > 0) base = random_base(w1.group(), w1.strands(), rng);
    try {
      auto r1 = invariant(w1, base);
      if (r1.base_retries > 0) continue;
      auto r2 = invariant(w2, base);
      if (r2.base_retries > 0) continue;
      r1.base_retries = r2.base_retries = attempt;
      return {std::move(r1), std::move(r2)};
    } catch (const SingularPoint&) {
    }
  }
  throw SingularPoint("no common nonsingular base point found");
}

}  // namespace

int cmd_invariant(const std::string& word_text, const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto report = invariant(word_from_config(word_text, config), base_from_config(config), config.seed);
    if (config.format == OutputFormat::plain) {
      print_invariant_plain(out, report);
    } else {
      emit(out, to_json(report));
    }
    return kOk;
  });
}

int cmd_invariant_corpus(const std::string& path, const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<std::function<CorpusResult()>> tasks;
  const int parse_code = guarded(err, [&] {
    std::ifstream in(path);
    if (!in) throw SyntaxError("cannot open corpus file '" + path + "'");
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (looks_like_json(text)) {
      for (auto& entry : corpus_from_json(json::parse(text))) {
        tasks.emplace_back([entry, &config] {
          return evaluate_entry(entry.name, [&entry] { return entry.word; }, config);
        });
      }
    } else {
      std::istringstream lines(text);
      std::size_t k = 0;
      for (auto& line : read_word_lines(lines)) {
        tasks.emplace_back([line, &config, name = "line-" + std::to_string(++k)] {
          return evaluate_entry(name, [&] { return word_from_config(line, config); }, config);
        });
      }
    }
    return kOk;
  });
  if (parse_code != kOk) return parse_code;

  const auto results = run_parallel(tasks);
  int code = kOk;
  json reports = json::array();
  for (const auto& r : results) {
    code = std::max(code, r.code);
    if (r.code != kOk) err << r.report["name"].get<std::string>() << ": " << r.error << '\n';
    reports.push_back(r.report);
  }
  if (config.format == OutputFormat::plain) {
    for (const auto& r : reports) {
      out << r["name"].get<std::string>() << '\t';
      if (r.contains("image")) {
        std::string image;
        for (const auto& v : r["image"]) image += (image.empty() ? "" : ",") + v.get<std::string>();
        out << image << '\n';
      } else {
        out << "error (exit " << r["exit"].get<int>() << ")\n";
      }
    }
  } else {
    emit(out, reports);
  }
  return code;
}

int cmd_distinguish(const std::string& word1, const std::string& word2, const RunConfig& config, std::ostream& out,
                    std::ostream& err) {
  return guarded(err, [&] {
    const BraidWord w1 = word_from_config(word1, config);
    const BraidWord w2 = word_from_config(word2, config);
    const auto [r1, r2] = common_base(w1, w2, config);
    const bool differ = !(r1.image == r2.image);

    std::string verdict = differ ? "distinct" : "inconclusive-at-base";
    std::optional<RelationVerdict> symbolic;
    if (!differ && config.symbolic) {
      symbolic = compare_operators(w1, w2, config.limits);
      verdict = symbolic->holds ? "equal-in-image" : "distinct";
    }
    const int code = verdict == "distinct" ? kOk : kInconclusive;

    const char prefix = variable_prefix(w1.group());
    if (config.format == OutputFormat::plain) {
      out << "verdict: " << verdict << '\n'
          << "base:    " << format_point(r1.base, prefix) << '\n'
          << "image 1: " << format_point(r1.image, prefix) << '\n'
          << "image 2: " << format_point(r2.image, prefix) << '\n';
      if (symbolic && symbolic->witness) out << "witness: coordinate " << symbolic->witness->coordinate << '\n';
    } else {
      json j = {{"verdict", verdict},
                {"group", std::string(to_string(w1.group()))},
                {"n", w1.strands()},
                {"words", {format_word(w1), format_word(w2)}},
                {"base", point_to_json(r1.base, prefix)},
                {"images", {point_to_json(r1.image, prefix), point_to_json(r2.image, prefix)}},
                {"base_retries", r1.base_retries}};
      if (symbolic) j["symbolic"] = to_json(*symbolic);
      emit(out, j);
    }
    return code;
  });
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const GroupKind group = require_group(config);
    const int n = config.strands;
    bool pass = true;
    std::vector<std::string> failures;

    json relations = json::array();
    for (const auto& v : verify_presentation(group, n, config.limits)) {
      if (!v.holds) failures.push_back(v.tag + " does not hold");
      relations.push_back(to_json(v));
    }

    json forbidden = json::array();
    json factorization = json::array();
    if (has_virtual(group)) {
      for (int i = 1; i <= n - 2; ++i) {
        for (const auto variant : {ForbiddenVariant::a, ForbiddenVariant::b}) {
          auto v = check_forbidden(n, i, variant, config.limits);
          json j = to_json(v);
          j["i"] = i;
          j["confirmed"] = forbidden_confirmed(v);
          if (!forbidden_confirmed(v)) failures.push_back(v.tag + " at i=" + std::to_string(i) + " not confirmed");
          if (group == GroupKind::FVB) {
            // The same words read in the flat virtual group.
            const auto [lhs, rhs] = forbidden_words(n, i, variant);
            const auto flat = verify_relation(BraidWord(n, group, lhs.letters()), BraidWord(n, group, rhs.letters()),
                                              v.tag, config.limits);
            j["flat"] = to_json(flat);
            if (flat.holds) failures.push_back(v.tag + " at i=" + std::to_string(i) + " holds in the flat image");
          }
          forbidden.push_back(std::move(j));
        }
      }
      for (const auto variant : {ForbiddenVariant::a, ForbiddenVariant::b}) {
        const bool ok = check_factorization(variant);
        const std::string name = variant == ForbiddenVariant::a ? "a" : "b";
        if (!ok) failures.push_back("factorization " + name + " fails");
        factorization.push_back({{"variant", name}, {"holds", ok}});
      }
    }
    pass = failures.empty();

    if (config.format == OutputFormat::plain) {
      out << to_string(group) << n << ": " << relations.size() << " defining relations, " << forbidden.size()
          << " forbidden checks, " << factorization.size() << " factorization identities\n";
      for (const auto& f : failures) out << "FAIL " << f << '\n';
      out << (pass ? "all pass" : "deviations found") << '\n';
    } else {
      emit(out, {{"group", std::string(to_string(group))},
                 {"n", n},
                 {"pass", pass},
                 {"relations", relations},
                 {"forbidden", forbidden},
                 {"factorization", factorization}});
    }
    for (const auto& f : failures) err << "deviation: " << f << '\n';
    return pass ? kOk : kDeviation;
  });
}

int cmd_mutate(const std::optional<std::string>& seed_file, const std::string& script, const RunConfig& config,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    json seed_json;
    if (seed_file) {
      std::ifstream in(*seed_file);
      if (!in) throw SyntaxError("cannot open seed file '" + *seed_file + "'");
      seed_json = json::parse(in);
    } else {
      const ExchangeMatrix B = build_quiver(config.strands);
      std::vector<FieldValue> vars;
      for (std::size_t v = 1; v <= B.size(); ++v) vars.emplace_back(RationalFunction::variable(static_cast<Var>(v)));
      seed_json = config.y_variables ? yseed_to_json(YSeed{vars, B}) : seed_to_json(Seed{vars, B});
    }
    const auto steps = parse_mutation_script(script);

    if (config.y_variables) {
      YSeed seed = yseed_from_json(seed_json);
      seed.validate();
      try {
        for (const auto k : steps) seed = mutate_y(seed, k);
      } catch (const DivisionByZero& e) {
        throw SingularPoint(e.what());
      }
      if (config.format == OutputFormat::plain) {
        emit_seed_plain(out, yseed_to_json(seed), "y");
      } else {
        emit(out, yseed_to_json(seed));
      }
    } else {
      Seed seed = seed_from_json(seed_json);
      seed.validate();
      try {
        for (const auto k : steps) seed = mutate_x(seed, k);
      } catch (const DivisionByZero& e) {
        throw SingularPoint(e.what());
      }
      if (config.format == OutputFormat::plain) {
        emit_seed_plain(out, seed_to_json(seed), "x");
      } else {
        emit(out, seed_to_json(seed));
      }
    }
    return kOk;
  });
}

}  // namespace vbraid::cli
