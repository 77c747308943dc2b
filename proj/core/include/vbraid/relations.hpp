#ifndef VBRAID_RELATIONS_HPP
#define VBRAID_RELATIONS_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "vbraid/braid_word.hpp"
#include "vbraid/polynomial.hpp"
#include "vbraid/rational_function.hpp"

namespace vbraid {

/// First coordinate (1-based) where two symbolic images differ.
struct Witness {
  std::size_t coordinate = 0;
  RationalFunction lhs;
  RationalFunction rhs;
};

/// Outcome of specializing one variable before comparing.
struct SliceResult {
  Var variable = 0;
  Rational value;
  bool equal = false;
};

struct RelationVerdict {
  std::string tag;
  bool holds = false;
  std::optional<Witness> witness;  // present iff !holds
  std::vector<SliceResult> slices;
  char prefix = 'z';
};

/// Guards on symbolic cost; overridable from the command line.
struct SymbolicLimits {
  int max_strands = 6;
  std::size_t max_length = 12;
};

/// Applies both words to independent variables and compares componentwise.
/// StrandLimitExceeded beyond limits.max_strands.
RelationVerdict verify_relation(const BraidWord& lhs, const BraidWord& rhs, std::string tag,
                                const SymbolicLimits& limits = {});
RelationVerdict verify_relation(const Relation& relation, const SymbolicLimits& limits = {});

/// verify_relation over relation_table(group, strands).
std::vector<RelationVerdict> verify_presentation(GroupKind group, int strands, const SymbolicLimits& limits = {});

enum class ForbiddenVariant { a, b };

/// VB words for the forbidden relations at index i:
///   a: rho_i sigma_{i+1} sigma_i  vs  sigma_{i+1} sigma_i rho_{i+1}
///   b: rho_{i+1} sigma_i sigma_{i+1}  vs  sigma_i sigma_{i+1} rho_i
/// IndexOutOfRange unless 1 <= i <= n-2.
std::pair<BraidWord, BraidWord> forbidden_words(int strands, int i, ForbiddenVariant variant);

/// Variables whose specialization to -1 makes the two sides agree:
/// a: z_{2i-1}, z_{2i+2}, z_{2i+4};  b: z_{2i-1}, z_{2i+1}, z_{2i+4}.
std::array<Var, 3> forbidden_slice_variables(int i, ForbiddenVariant variant);

/// Generic refutation (holds = false with a witness) plus the three
/// slice comparisons at z_j = -1.
RelationVerdict check_forbidden(int strands, int i, ForbiddenVariant variant, const SymbolicLimits& limits = {});

/// Refuted generically and equal on every slice.
bool forbidden_confirmed(const RelationVerdict& verdict);

/// Both sides of the polynomial identity behind the forbidden-relation
/// slices:
///   a: (1+z1+z4)(1+z1+z6) - z1(1+z1-z4z6)  =  (1+z1)(1+z4)(1+z6)
///   b: (1+z3+z6)(1+z1+z6) - z6(1-z1z3+z6)  =  (1+z1)(1+z3)(1+z6)
struct FactorizationIdentity {
  Polynomial expanded;
  Polynomial factored;
};

FactorizationIdentity factorization_identity(ForbiddenVariant variant);
bool check_factorization(ForbiddenVariant variant);
bool check_factorization(const FactorizationIdentity& identity);

/// Decides whether two words give the same birational map.
/// KindMismatch for different groups, LengthLimitExceeded when the combined
/// length is above limits.max_length.
RelationVerdict compare_operators(const BraidWord& w1, const BraidWord& w2, const SymbolicLimits& limits = {});

/// Every coordinate of the symbolic image has nonzero numerator and
/// denominator.
///
/// Decided exactly without building the image when possible: if the word
/// evaluates at some seeded random point with all coordinates nonzero, no
/// numerator or denominator can be the zero polynomial. Only when every
/// such point is singular or hits a zero is the symbolic image computed.
bool image_is_nondegenerate(const BraidWord& word, std::uint64_t seed = 0);

/// Numeric scan for the forbidden relations at n = 3, i = 1: the sliced
/// variables range over `axis`, the other three coordinates are fixed to
/// `others` (in index order). At each point the two sides must agree
/// exactly when one sliced variable is -1.
struct GridCheck {
  int points = 0;
  int agreeing = 0;
  int skipped = 0;
  int violations = 0;
};

GridCheck check_forbidden_grid(ForbiddenVariant variant, const std::vector<Rational>& axis,
                               const std::array<Rational, 3>& others);

/// {tag, holds, witness: {coordinate, lhs, rhs}?, slices: [{var, value, equal}]?}
nlohmann::json to_json(const RelationVerdict& verdict);

}  // namespace vbraid

#endif  // VBRAID_RELATIONS_HPP
