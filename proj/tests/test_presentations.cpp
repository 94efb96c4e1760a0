#include <gtest/gtest.h>

#include <set>

#include "test_support.hpp"
#include "yangian/parser.hpp"
#include "yangian/pbw.hpp"
#include "yangian/presentations.hpp"

using namespace yangian;

namespace {

using QP = NCPoly<Rational>;
QP g(const Gen& x) { return QP::gen(x); }

template <class C>
const Relation<C>* find(const std::vector<Relation<C>>& rels, const std::string& fam, std::vector<int> idx) {
  for (auto& r : rels)
    if (r.family == fam && r.indices == idx) return &r;
  return nullptr;
}

const CartanDatum A1 = build_cartan('A', 1);

}  // namespace

TEST(Relations, YinfEF) {
  auto rels = relations_for<Rational>(Presentation::yinf(A1, 3));
  auto* r = find(rels, "EF", {1, 1, 1, 1});
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(r->poly, g(E(1, 1)) * g(F(1, 1)) - g(F(1, 1)) * g(E(1, 1)) - g(H(1, 1)));
}

TEST(Relations, YmuTruncatedEF) {
  auto rels = relations_for<Rational>(Presentation::ymu(A1, Coweight::rank1(-2), 3));
  auto* r = find(rels, "EF", {1, 1, 1, 1});
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(r->poly, g(E(1, 1)) * g(F(1, 1)) - g(F(1, 1)) * g(E(1, 1)));
}

TEST(Relations, Mu1Mu2EFTable) {
  auto m = Coweight::rank1(-1);
  auto rels = relations_for<Rational>(Presentation::ymu1mu2(A1, m, m));
  auto* r = find(rels, "EF", {1, 1, 1, 1});
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(r->poly, commutator(g(E(1, 1)), g(F(1, 1))));
  // r + s = -m + 1 gives 1
  auto* r2 = find(rels, "EF", {1, 1, 1, 2});
  ASSERT_NE(r2, nullptr);
  EXPECT_EQ(r2->poly, commutator(g(E(1, 1)), g(F(1, 2))) - QP::one());
  // r + s = -m + 4 is not imposed
  EXPECT_EQ(find(rels, "EF", {1, 1, 3, 3}), nullptr);
}

TEST(Relations, Mu1Mu2RequiresAntidominant) {
  EXPECT_THROW(Presentation::ymu1mu2(A1, Coweight::rank1(1), Coweight::rank1(-1)), Error);
}

TEST(Relations, GradedHbarFactors) {
  auto rels = relations_for<HPoly>(Presentation::ymu(A1, Coweight::rank1(0), 3));
  auto* r = find(rels, "EF", {1, 1, 1, 1});
  ASSERT_NE(r, nullptr);
  using HP = NCPoly<HPoly>;
  EXPECT_EQ(r->poly, commutator(HP::gen(E(1, 1)), HP::gen(F(1, 1))) - HPoly::hbar_pow(1) * HP::gen(H(1, 1)));
  auto* he = find(rels, "HE", {1, 1, 0, 1});
  ASSERT_NE(he, nullptr);
  // [H1, E1] - [1, E2] = hbar (1 E1 + E1 1)
  EXPECT_EQ(he->poly, commutator(HP::gen(H(1, 1)), HP::gen(E(1, 1))) - HPoly::hbar_pow(1, 2) * HP::gen(E(1, 1)));
}

TEST(Relations, DuplicateFreeAndHomogeneous) {
  for (auto pres : {Presentation::yinf(build_cartan('A', 2), 3), Presentation::ymu(build_cartan('A', 3), Coweight({-1, 0, 2}), 3),
                    Presentation::ytilde(build_cartan('D', 4), 2),
                    Presentation::ymu1mu2(build_cartan('A', 2), Coweight({-1, 0}), Coweight({0, -2}))}) {
    auto rels = relations_for<HPoly>(pres);
    std::set<std::pair<std::string, std::vector<int>>> keys;
    std::set<std::string> fams;
    auto [nu1, nu2] = pres.splitting();
    for (auto& r : rels) {
      EXPECT_TRUE(keys.insert({r.family, r.indices}).second) << r.family;
      fams.insert(r.family);
      std::set<int> degs;
      for (auto& [w, c] : r.poly.terms()) {
        int d = 0;
        for (Letter l : w) d += letter_degree(l, nu1, nu2);
        for (int k = 0; k <= c.degree(); ++k)
          if (c.coeff(k) != 0) degs.insert(d + k);
      }
      EXPECT_EQ(degs.size(), 1u) << r.family << " " << to_string(r.poly);
    }
    if (pres.kind == PresentationKind::Ymu1mu2) {
      for (auto f : {"SS", "S1E", "S1F", "S2E", "S2F", "EF", "EE", "FF", "Eserre", "Fserre", "FSE"}) EXPECT_TRUE(fams.count(f)) << f;
    } else {
      for (auto f : {"HH", "EF", "HE", "HF", "EE", "FF", "SerreE", "SerreF"}) EXPECT_TRUE(fams.count(f)) << f;
    }
  }
}

TEST(Relations, SerreSymmetrized) {
  auto rels = relations_for<Rational>(Presentation::yinf(build_cartan('A', 2), 2));
  auto* r = find(rels, "SerreE", {1, 2, 1, 2, 1});
  ASSERT_NE(r, nullptr);
  QP a = g(E(1, 1)), b = g(E(1, 2)), c = g(E(2, 1));
  EXPECT_EQ(r->poly, commutator(a, commutator(b, c)) + commutator(b, commutator(a, c)));
  // orthogonal nodes commute
  auto d4 = relations_for<Rational>(Presentation::yinf(build_cartan('D', 4), 1));
  auto* o = find(d4, "SerreE", {1, 3, 1, 1});
  ASSERT_NE(o, nullptr);
  EXPECT_EQ(o->poly, commutator(g(E(1, 1)), g(E(3, 1))));
}

// Y_{mu1,mu2} relations hold in Y_mu(sl2) once S is rewritten through H
TEST(Relations, Mu1Mu2HoldInYmu) {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 0}, {-1, 0}, {0, -1}, {-1, -1}, {-2, -1}, {-3, -2}}) {
    auto mu1 = Coweight::rank1(a), mu2 = Coweight::rank1(b);
    auto pres = Presentation::ymu1mu2(A1, mu1, mu2);
    PbwEngine<HPoly> eng(a + b);
    for (auto& r : relations_for<HPoly>(pres))
      ASSERT_TRUE(eng.normal_form(s_to_h(r.poly, pres.mu)).is_zero()) << r.family << " " << to_string(r.poly);
  }
}

TEST(ShiftMaps, Examples) {
  auto z = Coweight::rank1(0), m1 = Coweight::rank1(-1);
  EXPECT_EQ(shift_hom(g(E(1, 1)), m1, z), g(E(1, 2)));
  EXPECT_EQ(shift_hom(g(H(1, 1)), m1, m1), g(H(1, 3)));
  auto x = g(E(1, 2)) * g(F(1, 1)) - g(H(1, 4));
  EXPECT_EQ(shift_hom(x, z, z), x);
  EXPECT_EQ(shift_preimage(g(E(1, 2)), z, m1, z), g(E(1, 1)));
  try {
    shift_preimage(g(E(1, 1)), z, m1, z);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), Error::Kind::NotInImage);
    EXPECT_NE(std::string(e.what()).find("E[1,1]"), std::string::npos);
  }
  EXPECT_EQ(shift_preimage(g(H(1, 3)) * g(F(1, 2)), z, m1, m1), g(H(1, 1)) * g(F(1, 1)));
  EXPECT_THROW(shift_hom(g(E(1, 1)), Coweight::rank1(1), z), Error);
}

TEST(ShiftMaps, FunctorialityAndInverse) {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 100; ++k) {
    auto x = yangian::testing::random_poly<Rational>(rng, 3, 3, 4);
    int a = -(k % 3), b = -(k % 2), c = -((k / 3) % 2), d = -((k / 2) % 3);
    auto e1 = Coweight::rank1(a), e2 = Coweight::rank1(b), f1 = Coweight::rank1(c), f2 = Coweight::rank1(d);
    ASSERT_EQ(shift_hom(shift_hom(x, e1, e2), f1, f2), shift_hom(x, e1 + f1, e2 + f2));
    // H letters at or below -m are not PBW letters of the source
    PbwEngine<Rational> eng(0);
    auto pbw = eng.normal_form(x);
    ASSERT_EQ(shift_preimage(shift_hom(pbw, e1, e2), Coweight::rank1(0), e1, e2), pbw);
  }
}

TEST(SHConvert, Examples) {
  auto mu = Coweight::rank1(0);
  EXPECT_EQ(s_to_h(g(S(1, 1)), mu), g(H(1, 1)));
  EXPECT_EQ(s_to_h(g(S(1, 2)), mu), g(H(1, 2)) - Rational(1, 2) * g(H(1, 1)) * g(H(1, 1)));
  auto mu3 = Coweight::rank1(-3);
  EXPECT_EQ(s_to_h(g(S(1, 4)), mu3), g(H(1, 4)));
  EXPECT_THROW(s_to_h(g(S(1, 3)), mu), Error);
  std::mt19937_64 rng(32);
  for (int k = 0; k < 50; ++k) {
    auto x = yangian::testing::random_poly<Rational>(rng, 3, 3, 2);
    ASSERT_EQ(s_to_h(h_to_s(x, mu), mu), x);
  }
}

TEST(Twist, Examples) {
  using MP = NCPoly<MPoly>;
  MPoly eps = MPoly::variable(Variables::kEps);
  EXPECT_EQ(twist(MP::gen(E(1, 1)), 0, eps), MP::gen(E(1, 1)));
  EXPECT_EQ(twist(MP::gen(E(1, 2)), 0, eps), MP::gen(E(1, 2)) + eps * MP::gen(E(1, 1)));
  for (int n = 1; n <= 3; ++n)
    EXPECT_EQ(twist(MP::gen(H(1, 2 * n + 1)), -2 * n, eps), MP::gen(H(1, 2 * n + 1)) + MP::scalar(MPoly(2 * n) * eps));
  EXPECT_THROW(twist(MP::gen(E(2, 1)), 0, eps), Error);
}

TEST(Twist, GeneratorCoefficientsMatchBinomialSeries) {
  // T(E^(q)) = sum_p C(q-1, q-p) eps^(q-p) E^(p)
  using MP = NCPoly<MPoly>;
  MPoly eps = MPoly::variable(Variables::kEps);
  for (int q = 1; q <= 6; ++q) {
    MP want;
    Rational b = 1;
    for (int p = q; p >= 1; --p) {
      int k = q - p;
      if (k > 0) b = b * Rational(q - 1 - (k - 1)) / Rational(k);
      want += (eps.pow(k).scaled(b)) * MP::gen(E(1, p));
    }
    EXPECT_EQ(twist(MP::gen(E(1, q)), 0, eps), want) << q;
  }
}

TEST(Twist, Composition) {
  using MP = NCPoly<MPoly>;
  MPoly eps = MPoly::variable(Variables::kEps), del = MPoly::variable("delta");
  for (int m : {-2, 0, 1})
    for (int q = 1; q <= 5; ++q)
      for (auto gen : {E(1, q), F(1, q), H(1, q)}) {
        if (gen.family == Family::H && q <= -m) continue;
        MP x = MP::gen(gen);
        ASSERT_EQ(twist(twist(x, m, del), m, eps), twist(x, m, eps + del));
      }
}

TEST(Twist, AlgebraMapOnRelations) {
  MPoly eps = MPoly::variable(Variables::kEps);
  for (int m : {-3, -1, 0, 2}) {
    PbwEngine<MPoly> eng(m);
    auto rels = relations_for<MPoly>(Presentation::ymu(A1, Coweight::rank1(m), 4));
    for (auto& r : rels) ASSERT_TRUE(eng.normal_form(twist(r.poly, m, eps)).is_zero()) << r.family << " m=" << m;
  }
}
