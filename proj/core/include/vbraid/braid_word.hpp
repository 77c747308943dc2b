#ifndef VBRAID_BRAID_WORD_HPP
#define VBRAID_BRAID_WORD_HPP

#include <cstddef>
#include <iosfwd>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace vbraid {

/// B_n, flat FB_n, virtual VB_n, flat virtual FVB_n.
enum class GroupKind { B, FB, VB, FVB };

constexpr bool is_flat(GroupKind g) { return g == GroupKind::FB || g == GroupKind::FVB; }
constexpr bool has_virtual(GroupKind g) { return g == GroupKind::VB || g == GroupKind::FVB; }

std::string_view to_string(GroupKind g);
/// Case-insensitive "b", "fb", "vb", "fvb". Throws SyntaxError.
GroupKind parse_group_kind(std::string_view text);

enum class GeneratorKind { classical, virtual_ };

/// sigma_i^{power} (classical) or rho_i (virtual).
struct Generator {
  GeneratorKind kind = GeneratorKind::classical;
  int index = 1;
  int power = 1;

  static Generator sigma(int i, int power = 1) { return {GeneratorKind::classical, i, power}; }
  static Generator rho(int i) { return {GeneratorKind::virtual_, i, 1}; }

  bool is_virtual() const { return kind == GeneratorKind::virtual_; }
  Generator inverse() const { return {kind, index, is_virtual() ? 1 : -power}; }

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// A word in the generators of a fixed group kind and strand count.
///
/// Letters are normalized on construction: rho_i always has power +1, and in
/// the flat kinds sigma_i^{-1} is stored as sigma_i. The same letters in
/// different kinds are different words.
class BraidWord {
 public:
  /// Throws InvalidStrandCount, IndexOutOfRange or KindMismatch.
  BraidWord(int strands, GroupKind group, std::vector<Generator> letters = {});

  int strands() const { return strands_; }
  GroupKind group() const { return group_; }
  const std::vector<Generator>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  BraidWord inverse() const;
  BraidWord operator*(const BraidWord& rhs) const;
  BraidWord pow(unsigned k) const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  GroupKind group_;
  std::vector<Generator> letters_;
};

/// Whitespace-separated tokens: "s3" = sigma_3, "s3'" / "S3" / "s3^-1" =
/// sigma_3^{-1}, "r2" = rho_2; "σ3", "σ3^-1", "ρ2" are accepted too.
/// Throws SyntaxError, IndexOutOfRange, KindMismatch.
BraidWord parse_word(std::string_view text, int strands, GroupKind group);

/// Canonical ASCII form, e.g. "s1 S2 r1"; the empty word is "".
std::string format_word(const BraidWord& word);

std::ostream& operator<<(std::ostream& os, const BraidWord& word);

/// Repeatedly cancels adjacent s s^-1, s^-1 s, r r and (flat kinds) s s.
BraidWord free_reduce(const BraidWord& word);

/// Uniformly chosen letters of the group (sigma_i, sigma_i^-1 where it
/// exists, rho_i for the virtual kinds), drawn from the raw engine output so
/// a seed gives the same word everywhere.
BraidWord random_word(GroupKind group, int strands, std::size_t length, std::mt19937_64& rng);

enum class RelationTag {
  braid,
  far_commute,
  virtual_braid,
  virtual_far_commute,
  virtual_involution,
  mixed_commute,
  mixed_braid,
  flat_involution,
  forbidden_a,
  forbidden_b,
};

std::string_view to_string(RelationTag tag);

struct Relation {
  BraidWord lhs;
  BraidWord rhs;
  RelationTag tag;
};

using RelationTable = std::vector<Relation>;

enum class RelationSet { defining, forbidden, all };

/// Every instance of the defining relations of the group (and/or, for the
/// virtual kinds, of the two forbidden relations) over valid indices.
///
///   B:   braid, far-commute
///   FB:  B + flat-involution
///   VB:  B + virtual-braid, virtual-far-commute, virtual-involution,
///        mixed-commute, mixed-braid
///   FVB: VB + flat-involution
RelationTable relation_table(GroupKind group, int strands, RelationSet set = RelationSet::defining);

/// Reads one word per line; blank lines and '#' comments are skipped.
std::vector<std::string> read_word_lines(std::istream& in);

struct CorpusEntry {
  std::string name;
  BraidWord word;
};

/// [{"name": "...", "n": 2, "group": "VB", "word": "s1 r1 s1"}, ...]
std::vector<CorpusEntry> corpus_from_json(const nlohmann::json& j);
nlohmann::json corpus_to_json(const std::vector<CorpusEntry>& corpus);

}  // namespace vbraid

#endif  // VBRAID_BRAID_WORD_HPP
