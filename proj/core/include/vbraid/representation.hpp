#ifndef VBRAID_REPRESENTATION_HPP
#define VBRAID_REPRESENTATION_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "vbraid/braid_word.hpp"
#include "vbraid/field_value.hpp"
#include "vbraid/operators.hpp"

namespace vbraid {

/// Coordinates the operators act on: z = (z1..z2n) for B/VB, t = (t1..tn)
/// for FB/FVB.
using Point = std::vector<FieldValue>;

/// 'z' for B/VB, 't' for the flat kinds.
constexpr char variable_prefix(GroupKind group) { return is_flat(group) ? 't' : 'z'; }

Point apply_generator(const Point& point, const GeneratorAction& action);
Point apply_word(const BraidWord& word, const Point& point);

/// B/VB: pairs (1,2), (2,1), (1,2), ... so (1,2,2,1) for n = 2 and
/// (1,2,2,1,1,2) for n = 3. FB/FVB: (1,2,2,...,2).
Point default_base(GroupKind group, int strands);

/// (-1, ..., -1), fixed by every generator.
Point fixed_point(GroupKind group, int strands);

/// Independent variables 1..arity.
std::vector<RationalFunction> symbolic_point(GroupKind group, int strands);

/// Point with small nonzero rationals (never -1), drawn from `rng`'s raw
/// output so a seed gives the same point on every platform.
Point random_base(GroupKind group, int strands, std::mt19937_64& rng);

struct InvariantReport {
  BraidWord word;
  Point base;
  Point image;
  int base_retries = 0;
};

/// Image of a base point (default_base when none is given). If the base is
/// singular for the word, retries up to kMaxBaseRetries random bases drawn
/// from `seed`; throws SingularPoint if all of them fail.
InvariantReport invariant(const BraidWord& word, const std::optional<Point>& base = std::nullopt, std::uint64_t seed = 0);

inline constexpr int kMaxBaseRetries = 16;

/// "1,2,-3/4" (whitespace tolerated). Entries may also be expressions.
Point parse_point(std::string_view text);
std::string format_point(const Point& point, char prefix = 'z');
nlohmann::json point_to_json(const Point& point, char prefix = 'z');

/// {word, group, n, base, image, base_retries}
nlohmann::json to_json(const InvariantReport& report);

}  // namespace vbraid

#endif  // VBRAID_REPRESENTATION_HPP
