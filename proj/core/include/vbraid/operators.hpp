#ifndef VBRAID_OPERATORS_HPP
#define VBRAID_OPERATORS_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "vbraid/braid_word.hpp"
#include "vbraid/errors.hpp"
#include "vbraid/field_value.hpp"

namespace vbraid {

/// The local birational kernels behind the braid representations.
///
/// On 4-windows (z1, z2, z3, z4):
///   S     = (-z1 z3 z4 / d, -d / z1, -d / z4, -z1 z2 z4 / d),  d = 1 + z1 + z4
///   S^-1  = (-z3 / e, -e z4, -z1 e, -z2 / e),                 e = z2 + z3 + z2 z3
///   T     = (z3, z4, z1, z2)
/// On 2-windows (t1, t2):
///   R     = (-t1 t2 / d, -d),                                 d = 1 + t2 + t1 t2
///   V     = (t2, t1)
///
/// Every kernel fixes (-1, ..., -1). Throws SingularPoint when a denominator
/// vanishes (numerically, or identically for rational functions).
struct StandardKernels {
  template <FieldElement F>
  static std::array<F, 4> s(const std::array<F, 4>& z) {
    const auto& [z1, z2, z3, z4] = z;
    const F d = constant_like(z1, Rational(1)) + z1 + z4;
    if (is_zero(d) || is_zero(z1) || is_zero(z4)) throw SingularPoint("S: vanishing denominator");
    return {-(z1 * z3 * z4) / d, -d / z1, -d / z4, -(z1 * z2 * z4) / d};
  }

  template <FieldElement F>
  static std::array<F, 4> s_inv(const std::array<F, 4>& z) {
    const auto& [z1, z2, z3, z4] = z;
    const F e = z2 + z3 + z2 * z3;
    if (is_zero(e)) throw SingularPoint("S^-1: vanishing denominator");
    return {-z3 / e, -(e * z4), -(z1 * e), -z2 / e};
  }

  template <FieldElement F>
  static std::array<F, 4> t(const std::array<F, 4>& z) {
    return {z[2], z[3], z[0], z[1]};
  }

  template <FieldElement F>
  static std::array<F, 2> r(const std::array<F, 2>& p) {
    const auto& [t1, t2] = p;
    const F d = constant_like(t1, Rational(1)) + t2 + t1 * t2;
    if (is_zero(d)) throw SingularPoint("R: vanishing denominator");
    return {-(t1 * t2) / d, -d};
  }

  template <FieldElement F>
  static std::array<F, 2> v(const std::array<F, 2>& p) {
    return {p[1], p[0]};
  }
};

template <FieldElement F>
std::array<F, 4> apply_S(const std::array<F, 4>& z) { return StandardKernels::s(z); }
template <FieldElement F>
std::array<F, 4> apply_S_inv(const std::array<F, 4>& z) { return StandardKernels::s_inv(z); }
template <FieldElement F>
std::array<F, 4> apply_T(const std::array<F, 4>& z) { return StandardKernels::t(z); }
template <FieldElement F>
std::array<F, 2> apply_R(const std::array<F, 2>& t) { return StandardKernels::r(t); }
template <FieldElement F>
std::array<F, 2> apply_V(const std::array<F, 2>& t) { return StandardKernels::v(t); }

/// Coordinates a point has for words of this kind: 2n for B/VB, n for FB/FVB.
constexpr std::size_t point_arity(GroupKind group, int strands) {
  return is_flat(group) ? static_cast<std::size_t>(strands) : 2 * static_cast<std::size_t>(strands);
}

/// Which coordinates a generator touches: (2i-1 .. 2i+2) for B/VB,
/// (i, i+1) for FB/FVB. `first` is 0-based.
struct GeneratorAction {
  GroupKind group;
  Generator generator;

  std::size_t first() const { return is_flat(group) ? generator.index - 1 : 2 * (generator.index - 1); }
  std::size_t width() const { return is_flat(group) ? 2 : 4; }
};

/// Applies one generator in place. Coordinates outside its window are not
/// touched. sigma_i^{-1} uses S^-1 in B/VB; flat kinds have no inverses.
template <class Kernels = StandardKernels, FieldElement F>
void act(std::vector<F>& p, const GeneratorAction& action) {
  const std::size_t first = action.first();
  const std::size_t width = action.width();
  if (first + width > p.size()) {
    throw ArityMismatch("generator window [" + std::to_string(first + 1) + ", " + std::to_string(first + width) +
                        "] exceeds a point of " + std::to_string(p.size()) + " coordinates");
  }
  const Generator& g = action.generator;
  if (width == 2) {
    const std::array<F, 2> in{p[first], p[first + 1]};
    const std::array<F, 2> out = g.is_virtual() ? Kernels::v(in) : Kernels::r(in);
    p[first] = out[0];
    p[first + 1] = out[1];
    return;
  }
  const std::array<F, 4> in{p[first], p[first + 1], p[first + 2], p[first + 3]};
  const std::array<F, 4> out = g.is_virtual() ? Kernels::t(in) : (g.power < 0 ? Kernels::s_inv(in) : Kernels::s(in));
  for (std::size_t k = 0; k < 4; ++k) p[first + k] = out[k];
}

/// Image of `p` under the operator of `word`, composing as functions: for
/// w = g1 g2 ... gk the rightmost letter gk acts first. SingularPoint
/// carries the 1-based position of the letter that failed.
template <class Kernels = StandardKernels, FieldElement F>
std::vector<F> apply_word(const BraidWord& word, std::vector<F> p) {
  const std::size_t arity = point_arity(word.group(), word.strands());
  if (p.size() != arity) {
    throw ArityMismatch(std::string(to_string(word.group())) + std::to_string(word.strands()) + " acts on " +
                        std::to_string(arity) + " coordinates, got " + std::to_string(p.size()));
  }
  const auto& letters = word.letters();
  for (std::size_t pos = letters.size(); pos-- > 0;) {
    try {
      act<Kernels>(p, GeneratorAction{word.group(), letters[pos]});
    } catch (const SingularPoint& e) {
      throw SingularPoint(e.what(), pos + 1);
    }
  }
  return p;
}

}  // namespace vbraid

#endif  // VBRAID_OPERATORS_HPP
