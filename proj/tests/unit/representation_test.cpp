#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "vbraid/errors.hpp"
#include "vbraid/operators.hpp"
#include "vbraid/relations.hpp"
#include "vbraid/representation.hpp"

namespace vbraid {
namespace {

using testing::point;
using testing::q;
using testing::rf;
using RF = RationalFunction;

constexpr const char* kW3 = "s1 r2 s1 S2 s1 s2 S1 r1 s2 r1 s1 r2 S1 r2 S2 S1 s2 S1 r2 S1";

TEST(Examples, One) {
  const auto r = invariant(parse_word("s1 r1 s1", 2, GroupKind::VB));
  EXPECT_EQ(r.base, point({"1", "2", "2", "1"}));
  EXPECT_EQ(r.image, point({"-6/5", "-5/3", "-5/3", "-6/5"}));
  EXPECT_EQ(r.base_retries, 0);
}

TEST(Examples, Two) {
  const auto w = parse_word("s1 s1 r1 S1 r1 S1 r1", 2, GroupKind::VB).pow(2);
  EXPECT_EQ(invariant(w).image, point({"-44/19", "-19/22", "-19/22", "-44/19"}));
}

TEST(Examples, Three) {
  const auto w = parse_word(kW3, 3, GroupKind::VB);
  ASSERT_EQ(w.length(), 20u);
  EXPECT_EQ(invariant(w).image,
            point({"2488285076682521504/1290542656863845663", "1290542656863845663/1244142538341260752",
                   "1290542656863845663/563568067426145589", "1127136134852291178/1290542656863845663",
                   "574648281/1268603408", "2537206816/574648281"}));
}

TEST(Examples, Four) {
  EXPECT_EQ(invariant(parse_word("s1 s2 s1 s2", 3, GroupKind::FB)).image, point({"-2/5", "-10/7", "7"}));
}

TEST(Examples, Five) {
  EXPECT_EQ(invariant(parse_word("s2 r1 s1 r2", 3, GroupKind::FVB)).image, point({"-5", "4/11", "-11/5"}));
}

TEST(Examples, LeftmostFirstCompositionFailsFive) {
  const auto w = parse_word("s2 r1 s1 r2", 3, GroupKind::FVB);
  Point p = default_base(GroupKind::FVB, 3);
  for (const auto& g : w.letters()) p = apply_generator(p, GeneratorAction{GroupKind::FVB, g});
  EXPECT_EQ(p, point({"2/5", "-7", "-10/7"}));
  EXPECT_NE(p, invariant(w).image);
}

TEST(Examples, HandComputedS) {
  // S(1,2,2,1): d = 3, (-2/3, -3, -3, -2/3)
  EXPECT_EQ(apply_S(std::array<Rational, 4>{1, 2, 2, 1}), (std::array<Rational, 4>{q("-2/3"), -3, -3, q("-2/3")}));
}

TEST(DefaultBase, Patterns) {
  EXPECT_EQ(default_base(GroupKind::VB, 2), point({"1", "2", "2", "1"}));
  EXPECT_EQ(default_base(GroupKind::VB, 3), point({"1", "2", "2", "1", "1", "2"}));
  EXPECT_EQ(default_base(GroupKind::FVB, 3), point({"1", "2", "2"}));
  EXPECT_EQ(default_base(GroupKind::B, 4).size(), 8u);
  EXPECT_THROW(default_base(GroupKind::B, 1), InvalidStrandCount);
}

TEST(Invariant, EmptyWordIsIdentity) {
  const Point base = point({"3", "-1/2", "7/3", "5"});
  EXPECT_EQ(invariant(BraidWord(2, GroupKind::VB), base).image, base);
}

TEST(Invariant, SingularBaseRetriesDeterministically) {
  const auto w = parse_word("r1 s1", 2, GroupKind::VB);
  const Point singular = point({"1", "1", "1", "-2"});  // 1 + z1 + z4 = 0
  try {
    apply_word(w, singular);
    FAIL() << "expected SingularPoint";
  } catch (const SingularPoint& e) {
    EXPECT_EQ(e.letter(), 2u);
  }
  const auto a = invariant(w, singular, 7);
  const auto b = invariant(w, singular, 7);
  EXPECT_GT(a.base_retries, 0);
  EXPECT_NE(a.base, singular);
  EXPECT_EQ(a.base, b.base);
  EXPECT_EQ(a.image, apply_word(w, a.base));
}

TEST(Invariant, ArityAndKindErrors) {
  EXPECT_THROW(apply_word(parse_word("s1", 2, GroupKind::VB), point({"1", "2"})), ArityMismatch);
  Point mixed = point({"1", "2", "2", "1"});
  mixed[0] = FieldValue(rf("z1"));
  EXPECT_THROW(apply_word(parse_word("s1", 2, GroupKind::VB), mixed), KindMismatch);
}

TEST(ParsePoint, TextForms) {
  EXPECT_EQ(parse_point("1, 2,-3/4"), point({"1", "2", "-3/4"}));
  const Point p = parse_point("z1, 2");
  EXPECT_TRUE(p[1].is_function());
  EXPECT_THROW(parse_point("1,,2"), SyntaxError);
  EXPECT_EQ(format_point(point({"-6/5", "7"})), "-6/5,7");
}

TEST(Invariant, ReportJson) {
  const auto j = to_json(invariant(parse_word("s2 r1 s1 r2", 3, GroupKind::FVB)));
  EXPECT_EQ(j.dump(),
            R"({"base":["1","2","2"],"base_retries":0,"group":"FVB","image":["-5","4/11","-11/5"],"n":3,"word":"s2 r1 s1 r2"})");
}

TEST(Kernels, InversePairsSymbolically) {
  const std::array<RF, 4> z{RF::variable(1), RF::variable(2), RF::variable(3), RF::variable(4)};
  EXPECT_EQ(apply_S_inv(apply_S(z)), z);
  EXPECT_EQ(apply_S(apply_S_inv(z)), z);
  EXPECT_EQ(apply_T(apply_T(z)), z);
  const std::array<RF, 2> t{RF::variable(1), RF::variable(2)};
  EXPECT_EQ(apply_R(apply_R(t)), t);
  EXPECT_EQ(apply_V(apply_V(t)), t);
}

TEST(Kernels, FormulasAsTranscribed) {
  const std::array<RF, 4> z{RF::variable(1), RF::variable(2), RF::variable(3), RF::variable(4)};
  const auto s = apply_S(z);
  EXPECT_EQ(s[0], rf("-z1*z3*z4/(1+z1+z4)"));
  EXPECT_EQ(s[1], rf("-(1+z1+z4)/z1"));
  EXPECT_EQ(s[2], rf("-(1+z1+z4)/z4"));
  EXPECT_EQ(s[3], rf("-z1*z2*z4/(1+z1+z4)"));
  const auto r = apply_R(std::array<RF, 2>{RF::variable(1), RF::variable(2)});
  EXPECT_EQ(r[0], rf("-t1*t2/(1+t2+t1*t2)"));
  EXPECT_EQ(r[1], rf("-(1+t2+t1*t2)"));
}

TEST(Kernels, FlatSlice) {
  const RF one(1);
  const RF z1 = RF::variable(1);
  const RF z3 = RF::variable(3);
  const std::array<RF, 4> z{z1, one / z1, z3, one / z3};
  const auto s = apply_S(z);
  const RF zeta1 = rf("-z1*z3/(1+z3+z1*z3)");
  const RF zeta3 = rf("-(1+z3+z1*z3)");
  EXPECT_EQ(s, (std::array<RF, 4>{zeta1, one / zeta1, zeta3, one / zeta3}));
  EXPECT_EQ(apply_S(s), z);
  EXPECT_EQ(apply_R(std::array<RF, 2>{z1, z3}), (std::array<RF, 2>{zeta1, zeta3}));
}

TEST(Kernels, SingularWindows) {
  EXPECT_THROW(apply_S(std::array<Rational, 4>{1, 1, 1, -2}), SingularPoint);
  EXPECT_THROW(apply_S(std::array<Rational, 4>{0, 1, 1, 3}), SingularPoint);
  EXPECT_THROW(apply_S_inv(std::array<Rational, 4>{1, 1, q("-1/2"), 1}), SingularPoint);
  EXPECT_THROW(apply_R(std::array<Rational, 2>{-2, 1}), SingularPoint);
}

TEST(RepresentationProperty, FixedPointForRandomWords) {
  std::mt19937_64 rng(2024);
  const GroupKind kinds[] = {GroupKind::B, GroupKind::FB, GroupKind::VB, GroupKind::FVB};
  for (int k = 0; k < 200; ++k) {
    const GroupKind g = kinds[k % 4];
    const int n = 2 + static_cast<int>(rng() % 4);
    const auto w = random_word(g, n, rng() % 31, rng);
    const Point p = fixed_point(g, n);
    EXPECT_EQ(apply_word(w, p), p) << format_word(w);
  }
}

TEST(RepresentationProperty, Locality) {
  std::mt19937_64 rng(8);
  for (const GroupKind g : {GroupKind::VB, GroupKind::FVB}) {
    for (int k = 0; k < 100; ++k) {
      const int n = 3 + static_cast<int>(rng() % 3);
      Point p;
      for (std::size_t c = 0; c < point_arity(g, n); ++c) p.emplace_back(testing::small_rational(rng));
      const auto letter = random_word(g, n, 1, rng).letters().front();
      const GeneratorAction action{g, letter};
      Point out;
      try {
        out = apply_generator(p, action);
      } catch (const SingularPoint&) {
        continue;
      }
      for (std::size_t c = 0; c < p.size(); ++c) {
        if (c < action.first() || c >= action.first() + action.width()) EXPECT_EQ(out[c], p[c]);
      }
    }
  }
}

TEST(RepresentationProperty, WordInverseUndoesWord) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 50; ++k) {
    const auto w = random_word(GroupKind::VB, 3, 1 + rng() % 8, rng);
    Point p;
    for (int c = 0; c < 6; ++c) p.emplace_back(testing::small_rational(rng));
    try {
      EXPECT_EQ(apply_word(w.inverse(), apply_word(w, p)), p);
    } catch (const SingularPoint&) {
    }
  }
}

TEST(RepresentationProperty, HomomorphismSpotCheck) {
  std::mt19937_64 rng(25);
  for (const GroupKind g : {GroupKind::B, GroupKind::FB, GroupKind::VB, GroupKind::FVB}) {
    for (int n = 2; n <= 4; ++n) {
      for (const auto& rel : relation_table(g, n)) {
        int agreeing = 0;
        for (int attempt = 0; agreeing < 25 && attempt < 200; ++attempt) {
          Point p;
          for (std::size_t c = 0; c < point_arity(g, n); ++c) p.emplace_back(testing::small_rational(rng));
          try {
            const Point lhs = apply_word(rel.lhs, p);
            const Point rhs = apply_word(rel.rhs, p);
            EXPECT_EQ(lhs, rhs) << to_string(rel.tag) << " " << format_word(rel.lhs);
            ++agreeing;
          } catch (const SingularPoint&) {
          }
        }
        EXPECT_EQ(agreeing, 25) << to_string(rel.tag);
      }
    }
  }
}

TEST(Nondegeneracy, AllShortWordsSymbolically) {
  // every word of length <= 3 over VB3, and random words up to length 6
  std::vector<Generator> alphabet;
  for (int i = 1; i <= 2; ++i) {
    alphabet.push_back(Generator::sigma(i));
    alphabet.push_back(Generator::sigma(i, -1));
    alphabet.push_back(Generator::rho(i));
  }
  std::vector<std::vector<Generator>> words{{}};
  for (int len = 1; len <= 3; ++len) {
    std::vector<std::vector<Generator>> next;
    for (const auto& w : words) {
      if (static_cast<int>(w.size()) != len - 1) continue;
      for (const auto& g : alphabet) {
        auto longer = w;
        longer.push_back(g);
        next.push_back(longer);
      }
    }
    words.insert(words.end(), next.begin(), next.end());
  }
  EXPECT_EQ(words.size(), 1u + 6u + 36u + 216u);
  for (const auto& letters : words) {
    for (const auto& f : apply_word(BraidWord(3, GroupKind::VB, letters), symbolic_point(GroupKind::VB, 3))) {
      EXPECT_FALSE(f.num().is_zero());
      EXPECT_FALSE(f.den().is_zero());
    }
  }

  std::mt19937_64 rng(6);
  for (const GroupKind g : {GroupKind::B, GroupKind::FB, GroupKind::VB, GroupKind::FVB}) {
    for (int k = 0; k < 50; ++k) EXPECT_TRUE(image_is_nondegenerate(random_word(g, 3, 1 + rng() % 6, rng)));
  }
  EXPECT_TRUE(image_is_nondegenerate(parse_word("s1 s1 s1 s1 s1 s1", 2, GroupKind::B)));
}

TEST(RandomBase, NeverMinusOneOrZero) {
  std::mt19937_64 rng(0);
  for (int k = 0; k < 200; ++k) {
    for (const auto& v : random_base(GroupKind::VB, 3, rng)) {
      EXPECT_FALSE(v.rational().is_zero());
      EXPECT_NE(v.rational(), Rational(-1));
    }
  }
}

}  // namespace
}  // namespace vbraid
