#include "vbraid/representation.hpp"

#include <sstream>

namespace vbraid {

Point apply_generator(const Point& point, const GeneratorAction& action) {
  Point out = point;
  act(out, action);
  return out;
}

Point apply_word(const BraidWord& word, const Point& point) { return apply_word<StandardKernels>(word, point); }

Point default_base(GroupKind group, int strands) {
  if (strands < 2) throw InvalidStrandCount("strand count must be >= 2, got " + std::to_string(strands));
  Point p;
  if (is_flat(group)) {
    p.emplace_back(Rational(1));
    for (int i = 1; i < strands; ++i) p.emplace_back(Rational(2));
    return p;
  }
  for (int k = 1; k <= strands; ++k) {
    const bool odd = k % 2 == 1;
    p.emplace_back(Rational(odd ? 1 : 2));
    p.emplace_back(Rational(odd ? 2 : 1));
  }
  return p;
}

Point fixed_point(GroupKind group, int strands) {
  if (strands < 2) throw InvalidStrandCount("strand count must be >= 2, got " + std::to_string(strands));
  return Point(point_arity(group, strands), FieldValue(Rational(-1)));
}

std::vector<RationalFunction> symbolic_point(GroupKind group, int strands) {
  if (strands < 2) throw InvalidStrandCount("strand count must be >= 2, got " + std::to_string(strands));
  const std::size_t arity = point_arity(group, strands);
  std::vector<RationalFunction> p;
  p.reserve(arity);
  for (std::size_t v = 1; v <= arity; ++v) p.push_back(RationalFunction::variable(static_cast<Var>(v)));
  return p;
}

Point random_base(GroupKind group, int strands, std::mt19937_64& rng) {
  Point p;
  const std::size_t arity = point_arity(group, strands);
  for (std::size_t i = 0; i < arity; ++i) {
    const auto bits = rng();
    long num = static_cast<long>(bits % 9) + 1;
    const long den = static_cast<long>((bits >> 8) % 7) + 1;
    if ((bits >> 16) & 1u) num = -num;
    if (num == -den) num = -2 * den - 1;
    p.emplace_back(Rational(num, den));
  }
  return p;
}

InvariantReport invariant(const BraidWord& word, const std::optional<Point>& base, std::uint64_t seed) {
  InvariantReport report{word, base ? *base : default_base(word.group(), word.strands()), {}, 0};
  try {
    report.image = apply_word(word, report.base);
    return report;
  } catch (const SingularPoint&) {
  }
  std::mt19937_64 rng(seed);
  for (int attempt = 1; attempt <= kMaxBaseRetries; ++attempt) {
    Point candidate = random_base(word.group(), word.strands(), rng);
    try {
      report.image = apply_word(word, candidate);
      report.base = std::move(candidate);
      report.base_retries = attempt;
      return report;
    } catch (const SingularPoint&) {
    }
  }
  throw SingularPoint("every base point tried is singular for '" + format_word(word) + "'");
}

Point parse_point(std::string_view text) {
  Point p;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t comma = text.find(',', pos);
    std::string item(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw SyntaxError("empty coordinate in point '" + std::string(text) + "'");
    p.push_back(FieldValue::parse(item.substr(first, last - first + 1)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  bool symbolic = false;
  for (const auto& v : p) symbolic = symbolic || v.is_function();
  if (symbolic) {
    for (auto& v : p) v = FieldValue::promote(v);
  }
  return p;
}

std::string format_point(const Point& point, char prefix) {
  std::string out;
  for (const auto& v : point) {
    if (!out.empty()) out += ',';
    out += v.str(prefix);
  }
  return out;
}

nlohmann::json point_to_json(const Point& point, char prefix) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : point) arr.push_back(v.str(prefix));
  return arr;
}

nlohmann::json to_json(const InvariantReport& report) {
  const char prefix = variable_prefix(report.word.group());
  return {{"word", format_word(report.word)},
          {"group", std::string(to_string(report.word.group()))},
          {"n", report.word.strands()},
          {"base", point_to_json(report.base, prefix)},
          {"image", point_to_json(report.image, prefix)},
          {"base_retries", report.base_retries}};
}

}  // namespace vbraid
