#include "reproduce.hpp"

#include <array>
#include <iomanip>
#include <random>

#include "commands.hpp"
#include "vbraid/cluster.hpp"
#include "vbraid/errors.hpp"
#include "vbraid/operators.hpp"
#include "vbraid/relations.hpp"

namespace vbraid::cli {

namespace {

using RF = RationalFunction;
using Row = ReproduceRow;

RF var(Var v) { return RF::variable(v); }

Point point_of(std::initializer_list<const char*> values) {
  Point p;
  for (const char* v : values) p.emplace_back(Rational::parse(v));
  return p;
}

struct Example {
  const char* name;
  GroupKind group;
  int strands;
  const char* word;
  unsigned power;
  Point base;
  Point expected;
};

std::vector<Example> examples() {
  const char* w2 = "s1 s1 r1 S1 r1 S1 r1";
  return {
      {"VB2 s1 r1 s1", GroupKind::VB, 2, "s1 r1 s1", 1, point_of({"1", "2", "2", "1"}),
       point_of({"-6/5", "-5/3", "-5/3", "-6/5"})},
      {"VB2 (s1 s1 r1 S1 r1 S1 r1)^2", GroupKind::VB, 2, w2, 2, point_of({"1", "2", "2", "1"}),
       point_of({"-44/19", "-19/22", "-19/22", "-44/19"})},
      {"VB3 20-letter word", GroupKind::VB, 3, "s1 r2 s1 S2 s1 s2 S1 r1 s2 r1 s1 r2 S1 r2 S2 S1 s2 S1 r2 S1", 1,
       point_of({"1", "2", "2", "1", "1", "2"}),
       point_of({"2488285076682521504/1290542656863845663", "1290542656863845663/1244142538341260752",
                 "1290542656863845663/563568067426145589", "1127136134852291178/1290542656863845663",
                 "574648281/1268603408", "2537206816/574648281"})},
      {"FB3 (s1 s2)^2", GroupKind::FB, 3, "s1 s2", 2, point_of({"1", "2", "2"}), point_of({"-2/5", "-10/7", "7"})},
      {"FVB3 s2 r1 s1 r2", GroupKind::FVB, 3, "s2 r1 s1 r2", 1, point_of({"1", "2", "2"}), point_of({"-5", "4/11", "-11/5"})},
  };
}

Row example_row(const Example& ex, const Evaluator& evaluate) {
  const BraidWord word = parse_word(ex.word, ex.strands, ex.group).pow(ex.power);
  const char prefix = variable_prefix(ex.group);
  try {
    const Point image = evaluate(word, ex.base);
    if (image == ex.expected) return {ex.name, true, format_point(image, prefix)};
    return {ex.name, false, "got " + format_point(image, prefix) + ", expected " + format_point(ex.expected, prefix)};
  } catch (const Error& e) {
    return {ex.name, false, std::string(e.kind()) + ": " + e.what()};
  }
}

std::array<RF, 7> symbolic7() { return {var(1), var(2), var(3), var(4), var(5), var(6), var(7)}; }

template <class F>
Row check(const std::string& name, F&& body) {
  try {
    const auto [pass, detail] = body();
    return {name, pass, detail};
  } catch (const Error& e) {
    return {name, false, std::string(e.kind()) + ": " + e.what()};
  }
}

using Outcome = std::pair<bool, std::string>;

std::vector<Row> cluster_rows() {
  std::vector<Row> rows;
  rows.push_back(check("quiver n=2 matrix", []() -> Outcome {
    const ExchangeMatrix printed({{0, 1, -1, 0, 0, 0, 0},
                                  {-1, 0, 0, 1, 0, 0, 0},
                                  {1, 0, 0, -1, 0, 0, 0},
                                  {0, -1, 1, 0, 1, -1, 0},
                                  {0, 0, 0, -1, 0, 0, 1},
                                  {0, 0, 0, 1, 0, 0, -1},
                                  {0, 0, 0, 0, -1, 1, 0}});
    return {build_quiver(2) == printed, "49 entries"};
  }));
  rows.push_back(check("Psi o Phi = id", []() -> Outcome {
    const auto x = symbolic7();
    return {psi_n2(phi_n2(x)) == x, "7 symbolic variables"};
  }));
  rows.push_back(check("Phi o Psi = id", []() -> Outcome {
    const auto x = symbolic7();
    return {phi_n2(psi_n2(x)) == x, "7 symbolic variables"};
  }));
  rows.push_back(check("psi o phi = id", []() -> Outcome {
    const auto y = symbolic7();
    return {psi_y_n2(phi_y_n2(y)) == y, "7 symbolic variables"};
  }));
  rows.push_back(check("phi o psi = id", []() -> Outcome {
    const auto y = symbolic7();
    return {phi_y_n2(psi_y_n2(y)) == y, "7 symbolic variables"};
  }));
  rows.push_back(check("phi matches Phi through y(x)", []() -> Outcome {
    const auto x = symbolic7();
    const ExchangeMatrix B = build_quiver(2);
    const auto to_y = [&](const std::array<RF, 7>& v) {
      const auto ys = y_from_x(Seed{std::vector<FieldValue>(v.begin(), v.end()), B});
      std::array<RF, 7> out;
      for (std::size_t k = 0; k < 7; ++k) out[k] = ys[k].function();
      return out;
    };
    return {phi_y_n2(to_y(x)) == to_y(phi_n2(x)), "y_j = prod_k x_k^b_kj"};
  }));
  rows.push_back(check("y1=y4=y7=-1 slice fixes 1, 4, 7", []() -> Outcome {
    auto y = symbolic7();
    y[0] = y[3] = y[6] = RF(Rational(-1));
    const auto p = phi_y_n2(y);
    const auto q = psi_y_n2(y);
    const RF m1(Rational(-1));
    bool ok = true;
    for (std::size_t k : {0, 3, 6}) ok = ok && p[k] == m1 && q[k] == m1;
    return {ok, "phi and psi"};
  }));
  rows.push_back(check("phi on the slice is S", []() -> Outcome {
    auto y = symbolic7();
    y[0] = y[3] = y[6] = RF(Rational(-1));
    const auto p = phi_y_n2(y);
    const auto q = psi_y_n2(y);
    const std::array<RF, 4> w{var(2), var(3), var(5), var(6)};
    const auto s = apply_S(w);
    const auto si = apply_S_inv(w);
    const bool phi_ok = p[1] == s[0] && p[2] == s[1] && p[4] == s[2] && p[5] == s[3];
    const bool psi_ok = q[1] == si[0] && q[2] == si[1] && q[4] == si[2] && q[5] == si[3];
    return {phi_ok && psi_ok, "phi -> S, psi -> S^-1 on (y2, y3, y5, y6)"};
  }));
  rows.push_back(check("flat slice: S gives R, S^2 = id", []() -> Outcome {
    const RF one(Rational(1));
    const std::array<RF, 4> z{var(1), one / var(1), var(3), one / var(3)};
    const auto s = apply_S(z);
    const auto r = apply_R(std::array<RF, 2>{var(1), var(3)});
    const bool shape = s[0] == r[0] && s[1] == one / r[0] && s[2] == r[1] && s[3] == one / r[1];
    return {shape && apply_S(s) == z, "(z1, 1/z1, z3, 1/z3)"};
  }));
  rows.push_back(check("mutate_x involution at every vertex", []() -> Outcome {
    const ExchangeMatrix B = build_quiver(2);
    const auto x = symbolic7();
    const Seed seed{std::vector<FieldValue>(x.begin(), x.end()), B};
    for (std::size_t k = 1; k <= 7; ++k) {
      if (!(mutate_x(mutate_x(seed, k), k) == seed)) return {false, "vertex " + std::to_string(k)};
    }
    return {true, "vertices 1..7"};
  }));
  rows.push_back(check("mutate_y involution at every vertex", []() -> Outcome {
    const ExchangeMatrix B = build_quiver(2);
    const auto y = symbolic7();
    const YSeed seed{std::vector<FieldValue>(y.begin(), y.end()), B};
    for (std::size_t k = 1; k <= 7; ++k) {
      if (!(mutate_y(mutate_y(seed, k), k) == seed)) return {false, "vertex " + std::to_string(k)};
    }
    return {true, "vertices 1..7"};
  }));
  return rows;
}

std::vector<Row> relation_rows() {
  std::vector<Row> rows;
  for (const auto group : {GroupKind::B, GroupKind::FB, GroupKind::VB, GroupKind::FVB}) {
    for (const int n : {2, 3}) {
      rows.push_back(check("presentation " + std::string(to_string(group)) + std::to_string(n), [&]() -> Outcome {
        const auto verdicts = verify_presentation(group, n);
        for (const auto& v : verdicts) {
          if (!v.holds) return {false, v.tag + " fails at coordinate " + std::to_string(v.witness->coordinate)};
        }
        return {true, std::to_string(verdicts.size()) + " relations"};
      }));
    }
  }
  for (const auto variant : {ForbiddenVariant::a, ForbiddenVariant::b}) {
    const std::string name = variant == ForbiddenVariant::a ? "a" : "b";
    rows.push_back(check("forbidden " + name + " refuted, slices agree", [&]() -> Outcome {
      const auto v = check_forbidden(3, 1, variant);
      std::string detail = v.witness ? "differs at coordinate " + std::to_string(v.witness->coordinate) : "no witness";
      for (const auto& s : v.slices) detail += ", z" + std::to_string(s.variable) + (s.equal ? " ok" : " differs");
      return {forbidden_confirmed(v), detail};
    }));
    rows.push_back(check("forbidden " + name + " refuted in FVB3", [&]() -> Outcome {
      const auto [lhs, rhs] = forbidden_words(3, 1, variant);
      const auto v = verify_relation(BraidWord(3, GroupKind::FVB, lhs.letters()),
                                     BraidWord(3, GroupKind::FVB, rhs.letters()), "forbidden-" + name);
      return {!v.holds, v.witness ? "differs at coordinate " + std::to_string(v.witness->coordinate) : "equal"};
    }));
    rows.push_back(check("factorization " + name, [&]() -> Outcome {
      return {check_factorization(variant), "polynomial identity"};
    }));
  }
  return rows;
}

Row fixed_point_row(std::uint64_t seed) {
  return check("fixed point (-1, ..., -1)", [seed]() -> Outcome {
    std::mt19937_64 rng(seed);
    const GroupKind kinds[] = {GroupKind::B, GroupKind::FB, GroupKind::VB, GroupKind::FVB};
    for (int k = 0; k < 200; ++k) {
      const GroupKind group = kinds[k % 4];
      const int n = 2 + static_cast<int>(rng() % 4);
      const auto word = random_word(group, n, rng() % 31, rng);
      const Point p = fixed_point(group, n);
      if (!(apply_word(word, p) == p)) return {false, "moved by " + format_word(word)};
    }
    return {true, "200 random words"};
  });
}

}  // namespace

Evaluator standard_evaluator() {
  return [](const BraidWord& w, const Point& p) { return apply_word(w, p); };
}

std::vector<ReproduceRow> run_reproduction(const Evaluator& evaluate, std::uint64_t seed) {
  std::vector<Row> rows;
  for (const auto& ex : examples()) rows.push_back(example_row(ex, evaluate));
  for (auto& r : cluster_rows()) rows.push_back(std::move(r));
  for (auto& r : relation_rows()) rows.push_back(std::move(r));
  rows.push_back(fixed_point_row(seed));
  return rows;
}

int cmd_reproduce(const RunConfig& config, std::ostream& out, std::ostream& err, const Evaluator& evaluate) {
  const auto rows = run_reproduction(evaluate, config.seed);

  int failed = 0;
  for (const auto& r : rows) {
    if (!r.pass) {
      ++failed;
      err << "FAIL " << r.name << ": " << r.detail << '\n';
    }
  }
  if (config.format == OutputFormat::json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) arr.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    out << arr.dump(2) << '\n';
  } else {
    std::size_t width = 0;
    for (const auto& r : rows) width = std::max(width, r.name.size());
    for (const auto& r : rows) {
      out << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width) + 2) << r.name << r.detail
          << '\n';
    }
    out << rows.size() - failed << "/" << rows.size() << " rows pass\n";
  }
  return failed == 0 ? kOk : kDeviation;
}

}  // namespace vbraid::cli
