#include "vbraid/relations.hpp"

#include <algorithm>
#include <random>

#include "vbraid/errors.hpp"
#include "vbraid/operators.hpp"
#include "vbraid/representation.hpp"

namespace vbraid {

namespace {

void check_strands(int strands, const SymbolicLimits& limits) {
  if (strands > limits.max_strands) {
    throw StrandLimitExceeded("symbolic check on " + std::to_string(strands) + " strands exceeds the limit of " +
                              std::to_string(limits.max_strands));
  }
}

RelationVerdict compare_images(const std::vector<RationalFunction>& lhs, const std::vector<RationalFunction>& rhs,
                               std::string tag, char prefix) {
  RelationVerdict verdict;
  verdict.tag = std::move(tag);
  verdict.prefix = prefix;
  verdict.holds = true;
  for (std::size_t k = 0; k < lhs.size(); ++k) {
    if (!(lhs[k] == rhs[k])) {
      verdict.holds = false;
      verdict.witness = Witness{k + 1, lhs[k], rhs[k]};
      break;
    }
  }
  return verdict;
}

}  // namespace

RelationVerdict verify_relation(const BraidWord& lhs, const BraidWord& rhs, std::string tag, const SymbolicLimits& limits) {
  if (lhs.group() != rhs.group() || lhs.strands() != rhs.strands()) {
    throw KindMismatch("relation sides belong to different groups");
  }
  check_strands(lhs.strands(), limits);
  const auto z = symbolic_point(lhs.group(), lhs.strands());
  return compare_images(apply_word(lhs, z), apply_word(rhs, z), std::move(tag), variable_prefix(lhs.group()));
}

RelationVerdict verify_relation(const Relation& relation, const SymbolicLimits& limits) {
  return verify_relation(relation.lhs, relation.rhs, std::string(to_string(relation.tag)), limits);
}

std::vector<RelationVerdict> verify_presentation(GroupKind group, int strands, const SymbolicLimits& limits) {
  check_strands(strands, limits);
  std::vector<RelationVerdict> out;
  for (const auto& relation : relation_table(group, strands)) out.push_back(verify_relation(relation, limits));
  return out;
}

std::pair<BraidWord, BraidWord> forbidden_words(int strands, int i, ForbiddenVariant variant) {
  if (i < 1 || i > strands - 2) {
    throw IndexOutOfRange("forbidden relation index " + std::to_string(i) + " outside 1.." + std::to_string(strands - 2));
  }
  using G = Generator;
  const auto word = [strands](std::vector<Generator> letters) { return BraidWord(strands, GroupKind::VB, std::move(letters)); };
  if (variant == ForbiddenVariant::a) {
    return {word({G::rho(i), G::sigma(i + 1), G::sigma(i)}), word({G::sigma(i + 1), G::sigma(i), G::rho(i + 1)})};
  }
  return {word({G::rho(i + 1), G::sigma(i), G::sigma(i + 1)}), word({G::sigma(i), G::sigma(i + 1), G::rho(i)})};
}

std::array<Var, 3> forbidden_slice_variables(int i, ForbiddenVariant variant) {
  const auto base = static_cast<Var>(2 * i);
  if (variant == ForbiddenVariant::a) return {base - 1, base + 2, base + 4};
  return {base - 1, base + 1, base + 4};
}

RelationVerdict check_forbidden(int strands, int i, ForbiddenVariant variant, const SymbolicLimits& limits) {
  check_strands(strands, limits);
  const auto [lhs, rhs] = forbidden_words(strands, i, variant);
  const std::string tag = variant == ForbiddenVariant::a ? "forbidden-a" : "forbidden-b";
  RelationVerdict verdict = verify_relation(lhs, rhs, tag, limits);

  for (const Var v : forbidden_slice_variables(i, variant)) {
    auto z = symbolic_point(GroupKind::VB, strands);
    z[v - 1] = RationalFunction(Rational(-1));
    const RelationVerdict sliced = compare_images(apply_word(lhs, z), apply_word(rhs, z), tag, 'z');
    verdict.slices.push_back(SliceResult{v, Rational(-1), sliced.holds});
  }
  return verdict;
}

bool forbidden_confirmed(const RelationVerdict& verdict) {
  return !verdict.holds && verdict.slices.size() == 3 &&
         std::all_of(verdict.slices.begin(), verdict.slices.end(), [](const SliceResult& s) { return s.equal; });
}

FactorizationIdentity factorization_identity(ForbiddenVariant variant) {
  const auto z = [](Var v) { return Polynomial::variable(v); };
  const Polynomial one(1);
  if (variant == ForbiddenVariant::a) {
    return {(one + z(1) + z(4)) * (one + z(1) + z(6)) - z(1) * (one + z(1) - z(4) * z(6)),
            (one + z(1)) * (one + z(4)) * (one + z(6))};
  }
  return {(one + z(3) + z(6)) * (one + z(1) + z(6)) - z(6) * (one - z(1) * z(3) + z(6)),
          (one + z(1)) * (one + z(3)) * (one + z(6))};
}

bool check_factorization(const FactorizationIdentity& identity) { return identity.expanded == identity.factored; }

bool check_factorization(ForbiddenVariant variant) { return check_factorization(factorization_identity(variant)); }

RelationVerdict compare_operators(const BraidWord& w1, const BraidWord& w2, const SymbolicLimits& limits) {
  if (w1.group() != w2.group() || w1.strands() != w2.strands()) {
    throw KindMismatch("words belong to different groups");
  }
  if (w1.length() + w2.length() > limits.max_length) {
    throw LengthLimitExceeded("combined length " + std::to_string(w1.length() + w2.length()) + " exceeds the limit of " +
                              std::to_string(limits.max_length));
  }
  return verify_relation(w1, w2, "compare", limits);
}

bool image_is_nondegenerate(const BraidWord& word, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kMaxBaseRetries; ++attempt) {
    try {
      const Point image = apply_word(word, random_base(word.group(), word.strands(), rng));
      if (std::none_of(image.begin(), image.end(), [](const FieldValue& v) { return v.is_zero(); })) return true;
    } catch (const SingularPoint&) {
    }
  }
  const auto image = apply_word(word, symbolic_point(word.group(), word.strands()));
  return std::all_of(image.begin(), image.end(), [](const RationalFunction& f) { return !f.num().is_zero() && !f.den().is_zero(); });
}

GridCheck check_forbidden_grid(ForbiddenVariant variant, const std::vector<Rational>& axis, const std::array<Rational, 3>& others) {
  const auto [lhs, rhs] = forbidden_words(3, 1, variant);
  const auto sliced = forbidden_slice_variables(1, variant);
  std::vector<std::size_t> free_coords;
  for (std::size_t k = 0; k < 6; ++k) {
    if (std::find(sliced.begin(), sliced.end(), static_cast<Var>(k + 1)) == sliced.end()) free_coords.push_back(k);
  }

  GridCheck report;
  for (const auto& a : axis) {
    for (const auto& b : axis) {
      for (const auto& c : axis) {
        std::vector<Rational> p(6);
        p[sliced[0] - 1] = a;
        p[sliced[1] - 1] = b;
        p[sliced[2] - 1] = c;
        for (std::size_t k = 0; k < 3; ++k) p[free_coords[k]] = others[k];
        ++report.points;
        std::vector<Rational> left;
        std::vector<Rational> right;
        try {
          left = apply_word(lhs, p);
          right = apply_word(rhs, p);
        } catch (const SingularPoint&) {
          ++report.skipped;
          continue;
        }
        const bool agree = left == right;
        const bool on_slice = (a + 1) * (b + 1) * (c + 1) == Rational(0);
        if (agree) ++report.agreeing;
        if (agree != on_slice) ++report.violations;
      }
    }
  }
  return report;
}

nlohmann::json to_json(const RelationVerdict& verdict) {
  nlohmann::json j = {{"tag", verdict.tag}, {"holds", verdict.holds}};
  if (verdict.witness) {
    j["witness"] = {{"coordinate", verdict.witness->coordinate},
                    {"lhs", verdict.witness->lhs.str(verdict.prefix)},
                    {"rhs", verdict.witness->rhs.str(verdict.prefix)}};
  }
  if (!verdict.slices.empty()) {
    nlohmann::json slices = nlohmann::json::array();
    for (const auto& s : verdict.slices) {
      slices.push_back({{"var", std::string(1, verdict.prefix) + std::to_string(s.variable)},
                        {"value", s.value.str()},
                        {"equal", s.equal}});
    }
    j["slices"] = std::move(slices);
  }
  return j;
}

}  // namespace vbraid
