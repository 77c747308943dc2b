#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "vbraid/braid_word.hpp"
#include "vbraid/errors.hpp"

namespace vbraid {
namespace {

TEST(ParseWord, TokenForms) {
  const auto w = parse_word("s1 S2 s3' s1^-1 s2^{-1} r1 σ3 σ2^-1 ρ2 s_1", 4, GroupKind::VB);
  EXPECT_EQ(format_word(w), "s1 S2 S3 S1 S2 r1 s3 S2 r2 s1");
  EXPECT_EQ(w.length(), 10u);
  EXPECT_TRUE(parse_word("", 2, GroupKind::B).empty());
  EXPECT_TRUE(parse_word("  \t", 2, GroupKind::B).empty());
}

TEST(ParseWord, Errors) {
  EXPECT_THROW(parse_word("r1", 2, GroupKind::B), KindMismatch);
  EXPECT_THROW(parse_word("r1", 3, GroupKind::FB), KindMismatch);
  EXPECT_THROW(parse_word("s3", 3, GroupKind::VB), IndexOutOfRange);
  EXPECT_THROW(parse_word("s0", 3, GroupKind::VB), IndexOutOfRange);
  EXPECT_THROW(parse_word("x1", 3, GroupKind::VB), SyntaxError);
  EXPECT_THROW(parse_word("s", 3, GroupKind::VB), SyntaxError);
  EXPECT_THROW(parse_word("S1'", 3, GroupKind::VB), SyntaxError);
  EXPECT_THROW(parse_word("s1", 1, GroupKind::VB), InvalidStrandCount);
}

TEST(ParseWord, FlatInversesNormalize) {
  EXPECT_EQ(parse_word("S1 s2'", 3, GroupKind::FB), parse_word("s1 s2", 3, GroupKind::FB));
  EXPECT_EQ(format_word(parse_word("S1", 3, GroupKind::FVB)), "s1");
  // rho is an involution
  EXPECT_EQ(parse_word("r1^-1", 3, GroupKind::VB), parse_word("r1", 3, GroupKind::VB));
}

TEST(GroupKindText, ParseAndPrint) {
  EXPECT_EQ(parse_group_kind("fvb"), GroupKind::FVB);
  EXPECT_EQ(parse_group_kind("VB"), GroupKind::VB);
  EXPECT_EQ(to_string(GroupKind::FB), "FB");
  EXPECT_THROW(parse_group_kind("xb"), SyntaxError);
}

TEST(BraidWord, InverseProductPower) {
  const auto w = parse_word("s1 r1 S2", 3, GroupKind::VB);
  EXPECT_EQ(format_word(w.inverse()), "s2 r1 S1");
  EXPECT_EQ(format_word(w * w.inverse()), "s1 r1 S2 s2 r1 S1");
  EXPECT_TRUE(free_reduce(w * w.inverse()).empty());
  EXPECT_EQ(w.pow(0), BraidWord(3, GroupKind::VB));
  EXPECT_EQ(w.pow(2).length(), 6u);
  EXPECT_THROW(w * parse_word("s1", 3, GroupKind::B), KindMismatch);
  EXPECT_THROW(w * parse_word("s1", 4, GroupKind::VB), KindMismatch);
}

TEST(BraidWord, FreeReduce) {
  EXPECT_EQ(format_word(free_reduce(parse_word("s1 s2 S2 r1 r1 s1", 3, GroupKind::VB))), "s1 s1");
  EXPECT_TRUE(free_reduce(parse_word("s1 s1", 3, GroupKind::FB)).empty());
  EXPECT_EQ(format_word(free_reduce(parse_word("s1 s1", 3, GroupKind::B))), "s1 s1");
}

TEST(BraidWord, GroupAndTextAreDistinct) {
  EXPECT_NE(parse_word("s1", 3, GroupKind::B), parse_word("s1", 3, GroupKind::FB));
  std::ostringstream os;
  os << parse_word("s2 r1", 3, GroupKind::VB);
  EXPECT_EQ(os.str(), "s2 r1");
}

std::size_t count(GroupKind g, int n, RelationTag tag, RelationSet set = RelationSet::defining) {
  std::size_t c = 0;
  for (const auto& r : relation_table(g, n, set)) c += r.tag == tag;
  return c;
}

TEST(RelationTable, CountsPerFamily) {
  for (int n = 2; n <= 6; ++n) {
    const std::size_t braid = n - 2;
    const std::size_t far = (n - 2) * (n - 3) / 2;
    const std::size_t involutions = n - 1;
    const std::size_t mixed_commute = (n - 2) * (n - 3);
    EXPECT_EQ(relation_table(GroupKind::B, n).size(), braid + far) << n;
    EXPECT_EQ(relation_table(GroupKind::FB, n).size(), braid + far + involutions) << n;
    EXPECT_EQ(relation_table(GroupKind::VB, n).size(), 2 * (braid + far) + involutions + mixed_commute + braid) << n;
    EXPECT_EQ(relation_table(GroupKind::FVB, n).size(),
              2 * (braid + far) + 2 * involutions + mixed_commute + braid)
        << n;
    EXPECT_EQ(count(GroupKind::VB, n, RelationTag::mixed_braid), braid);
    EXPECT_EQ(count(GroupKind::VB, n, RelationTag::forbidden_a, RelationSet::forbidden), braid);
    EXPECT_EQ(count(GroupKind::VB, n, RelationTag::forbidden_b, RelationSet::all), braid);
  }
  EXPECT_EQ(relation_table(GroupKind::VB, 3).size(), 5u);
  EXPECT_TRUE(relation_table(GroupKind::B, 2).empty());
  EXPECT_EQ(relation_table(GroupKind::FB, 2).size(), 1u);
  EXPECT_TRUE(relation_table(GroupKind::B, 4, RelationSet::forbidden).empty());
}

TEST(RelationTable, ShapeOfEntries) {
  const auto table = relation_table(GroupKind::VB, 3);
  for (const auto& r : table) {
    EXPECT_EQ(r.lhs.strands(), 3);
    EXPECT_EQ(r.rhs.group(), GroupKind::VB);
  }
  const auto fb = relation_table(GroupKind::FB, 4);
  bool far = false;
  for (const auto& r : fb) {
    if (r.tag == RelationTag::far_commute) {
      far = true;
      EXPECT_EQ(format_word(r.lhs), "s1 s3");
      EXPECT_EQ(format_word(r.rhs), "s3 s1");
    }
  }
  EXPECT_TRUE(far);
  EXPECT_EQ(to_string(RelationTag::far_commute), "far-commute");
}

TEST(Corpus, WordLines) {
  std::istringstream in("# header\ns1 r1 s1\n\n  s2  \n# done\n");
  EXPECT_EQ(read_word_lines(in), (std::vector<std::string>{"s1 r1 s1", "s2"}));
}

TEST(Corpus, RejectsBadEntries) {
  EXPECT_THROW(corpus_from_json(nlohmann::json::parse(R"([{"name":"a","n":2,"group":"B","word":"r1"}])")),
               KindMismatch);
  EXPECT_THROW(corpus_from_json(nlohmann::json::parse(R"({"name":"a"})")), SyntaxError);
}

TEST(RandomWord, DeterministicPerSeed) {
  std::mt19937_64 a(42);
  std::mt19937_64 b(42);
  for (int k = 0; k < 20; ++k) EXPECT_EQ(random_word(GroupKind::VB, 4, 12, a), random_word(GroupKind::VB, 4, 12, b));
  std::mt19937_64 c(1);
  const auto flat = random_word(GroupKind::FB, 5, 50, c);
  for (const auto& g : flat.letters()) {
    EXPECT_FALSE(g.is_virtual());
    EXPECT_EQ(g.power, 1);
  }
}

}  // namespace
}  // namespace vbraid
