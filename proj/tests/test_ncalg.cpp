#include <gtest/gtest.h>

#include "test_support.hpp"
#include "yangian/parser.hpp"
#include "yangian/rootdata.hpp"

using namespace yangian;
using yangian::testing::random_poly;

namespace {

using QP = NCPoly<Rational>;

QP g(const Gen& x) { return QP::gen(x); }

}  // namespace

TEST(NcArith, CommutatorOfLetterWithItselfVanishes) {
  EXPECT_TRUE(commutator(g(E(1, 1)), g(E(1, 1))).is_zero());
}

TEST(NcArith, Distributivity) {
  QP lhs = (g(E(1, 1)) + g(F(1, 1))) * g(H(1, 2));
  QP rhs = g(E(1, 1)) * g(H(1, 2)) + g(F(1, 1)) * g(H(1, 2));
  EXPECT_EQ(lhs, rhs);
  EXPECT_EQ(lhs.size(), 2u);
}

TEST(NcArith, TensorMulIsSlotwise) {
  QP a = tensor<Rational>({g(E(1, 1)), QP::one()});
  QP b = tensor<Rational>({QP::one(), g(F(1, 1))});
  QP ab = tensor_mul(a, b);
  EXPECT_EQ(ab, tensor<Rational>({g(E(1, 1)), g(F(1, 1))}));
  // slotwise product (a1 x a2)(b1 x b2) = a1 b1 x a2 b2
  QP c = tensor<Rational>({g(F(1, 2)), g(H(1, 1))});
  QP d = tensor<Rational>({g(E(1, 1)), g(E(1, 3))});
  EXPECT_EQ(tensor_mul(c, d), tensor<Rational>({g(F(1, 2)) * g(E(1, 1)), g(H(1, 1)) * g(E(1, 3))}));
}

TEST(NcArith, ArityMismatchIsAnError) {
  QP a = tensor<Rational>({g(E(1, 1)), QP::one()});
  QP b = tensor<Rational>({g(E(1, 1)), QP::one(), QP::one()});
  EXPECT_THROW(a * b, Error);
  EXPECT_THROW(a + b, Error);
}

TEST(NcArith, AssociativityAndDistributivityRandomized) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 150; ++k) {
    auto a = random_poly<Rational>(rng), b = random_poly<Rational>(rng), c = random_poly<Rational>(rng);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a + b) * c, a * c + b * c);
  }
}

TEST(NcArith, CommutatorBilinearAndJacobiRandomized) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 150; ++k) {
    auto a = random_poly<HPoly>(rng), b = random_poly<HPoly>(rng), c = random_poly<HPoly>(rng);
    HPoly s = yangian::testing::random_coeff<HPoly>(rng);
    ASSERT_EQ(commutator(a + s * b, c), commutator(a, c) + s * commutator(b, c));
    auto j = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b));
    ASSERT_TRUE(j.is_zero());
  }
}

TEST(Parser, TwoTermExpression) {
  auto p = parse_expr<HPoly>("E[1,1]*F[1,2] - hbar*H[1,2]");
  NCPoly<HPoly> want = NCPoly<HPoly>::gen(E(1, 1)) * NCPoly<HPoly>::gen(F(1, 2)) -
                       HPoly::hbar_pow(1) * NCPoly<HPoly>::gen(H(1, 2));
  EXPECT_EQ(p, want);
  EXPECT_EQ(p.size(), 2u);
}

TEST(Parser, PrimitiveTensor) {
  auto p = parse_expr<Rational>("ox(E[1,1], 1) + ox(1, E[1,1])");
  EXPECT_EQ(p.arity(), 2);
  EXPECT_EQ(p, tensor<Rational>({g(E(1, 1)), QP::one()}) + tensor<Rational>({QP::one(), g(E(1, 1))}));
}

TEST(Parser, Errors) {
  auto kind = [](const char* s) {
    try {
      parse_expr<Rational>(s);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(kind("E[1,0]").find("E level must be >= 1"), std::string::npos);
  EXPECT_NE(kind("X[1,1]").find("unknown generator family"), std::string::npos);
  EXPECT_NE(kind("E[1,1] +").find("line 1, column"), std::string::npos);
  EXPECT_NE(kind("a*E[1,1]").find("undeclared symbol"), std::string::npos);
  EXPECT_NE(kind("ox(ox(E[1,1],1),1)").find("nested"), std::string::npos);
}

TEST(Parser, RingMismatch) {
  EXPECT_THROW(parse_expr<Rational>("hbar*E[1,1]"), Error);
  EXPECT_NO_THROW(parse_expr<HPoly>("hbar*E[1,1]"));
  EXPECT_THROW(parse_expr<HPoly>("eps*E[1,1]"), Error);
  EXPECT_NO_THROW(parse_expr<MPoly>("eps*E[1,1]"));
}

TEST(Parser, DeclaredSymbols) {
  auto p = parse_expr<MPoly>("a*E[1,1] - a^2", {"a"});
  EXPECT_EQ(p.size(), 2u);
}

TEST(Parser, RoundTripRandomized) {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 200; ++k) {
    auto p = random_poly<HPoly>(rng, 4, 4, 5);
    ASSERT_EQ(parse_expr<HPoly>(to_string(p)), p) << to_string(p);
  }
  for (int k = 0; k < 50; ++k) {
    auto p = tensor<Rational>({random_poly<Rational>(rng), random_poly<Rational>(rng)});
    ASSERT_EQ(parse_expr<Rational>(to_string(p)), p) << to_string(p);
  }
}

TEST(RootData, Counts) {
  EXPECT_EQ(build_cartan('A', 1).positive_roots().size(), 1u);
  EXPECT_EQ(build_cartan('A', 2).positive_roots().size(), 3u);
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(build_cartan('A', n).positive_roots().size(), size_t(n * (n + 1) / 2));
  // |roots| = rank * Coxeter number
  EXPECT_EQ(build_cartan('D', 4).positive_roots().size(), 12u);
  EXPECT_EQ(build_cartan('D', 5).positive_roots().size(), 20u);
  EXPECT_EQ(build_cartan('E', 6).positive_roots().size(), 36u);
  EXPECT_EQ(build_cartan('E', 7).positive_roots().size(), 63u);
  EXPECT_EQ(build_cartan('E', 8).positive_roots().size(), 120u);
  EXPECT_THROW(build_cartan('B', 3), Error);
  EXPECT_THROW(build_cartan('E', 9), Error);
}

TEST(RootData, A2Order) {
  auto d = build_cartan('A', 2);
  std::vector<RootVec> want{{1, 0}, {0, 1}, {1, 1}};
  EXPECT_EQ(d.positive_roots(), want);
}

TEST(RootData, SymmetricAndPositiveDefinite) {
  for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 4}, {'D', 4}, {'D', 6}, {'E', 6}, {'E', 7}, {'E', 8}}) {
    auto d = build_cartan(t, n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) EXPECT_EQ(d.pairing(i, j), d.pairing(j, i));
    for (auto& m : d.leading_minors()) EXPECT_GT(m, 0);
    for (auto& b : d.positive_roots()) EXPECT_EQ(d.pairing(b, b), 2);
  }
}

TEST(RootData, PbwChoice) {
  auto d = build_cartan('A', 2);
  RootVectorChoice ch(d);
  EXPECT_EQ(ch.sequence({1, 1}), (std::vector<int>{1, 2}));
  EXPECT_EQ(ch.level_split({1, 1}, 3), (std::vector<int>{1, 3}));
  EXPECT_EQ(ch.root_vector<Rational>(Family::E, {1, 1}, 1), commutator(g(E(1, 1)), g(E(2, 1))));
  RootVectorChoice c1(build_cartan('A', 1));
  EXPECT_EQ(c1.root_vector<Rational>(Family::E, {1}, 5), g(E(1, 5)));
}

TEST(RootData, PbwChoiceInvariants) {
  for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'D', 4}, {'E', 6}, {'E', 8}}) {
    auto d = build_cartan(t, n);
    RootVectorChoice ch(d);
    for (auto& beta : d.positive_roots()) {
      auto& seq = ch.sequence(beta);
      // each partial tail is a root, so every bracket is nonzero
      RootVec acc(n, 0);
      for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
        acc[*it - 1] += 1;
        EXPECT_TRUE(d.is_root(acc));
      }
      EXPECT_EQ(acc, beta);
      for (int q = 1; q <= 4; ++q) {
        auto s = ch.level_split(beta, q);
        int sum = 0;
        for (int x : s) {
          EXPECT_GE(x, 1);
          sum += x;
        }
        EXPECT_EQ(sum, q + static_cast<int>(seq.size()) - 1);
      }
    }
  }
}
