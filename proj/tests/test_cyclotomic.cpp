#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "pslekr/cyclotomic.hpp"

using namespace pslekr;

namespace {

// Phi_m as the product of (x - zeta^k) over units k, rounded.
std::vector<long> phi_numeric(int m) {
  std::vector<oracle::cd> poly{1.0};
  for (int k = 1; k <= m; ++k) {
    if (gcd_long(k, m) != 1) continue;
    std::vector<oracle::cd> next(poly.size() + 1, 0.0);
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * oracle::zeta(m, k);
    }
    poly = std::move(next);
  }
  std::vector<long> out;
  for (const auto& c : poly) out.push_back(std::lround(c.real()));
  return out;
}

CycNum random_cyc(std::mt19937& rng, int m) {
  std::uniform_int_distribution<int> coef(-5, 5), den(1, 4), k(0, m - 1);
  CycNum x = CycNum::from_int(0, m);
  for (int t = 0; t < 4; ++t) x += CycNum::root_of_unity(m, k(rng)) * (Rational(coef(rng)) / den(rng));
  return x;
}

}  // namespace

TEST(Cyclotomic, PolynomialsMatchNumericProduct) {
  for (int m : {1, 2, 3, 4, 5, 6, 8, 12, 15, 24, 36, 60, 105}) {
    EXPECT_EQ(cyclotomic_polynomial(m), phi_numeric(m)) << "m = " << m;
    EXPECT_EQ(static_cast<long>(cyclotomic_polynomial(m).size()) - 1, euler_phi(m));
  }
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<long>{1, 0, -1, 0, 1}));
}

TEST(Cyclotomic, RootSumsVanish) {
  for (int m : {3, 8, 12, 24, 60}) {
    CycNum s;
    for (int k = 0; k < m; ++k) s += CycNum::root_of_unity(m, k);
    EXPECT_TRUE(s.is_zero()) << m;
    CycAccumulator acc(m);
    for (int k = 0; k < m; ++k) acc.add_root(k);
    EXPECT_TRUE(acc.value().is_zero());
  }
  EXPECT_EQ(CycNum::root_of_unity(12, 6), CycNum::from_int(-1));
  EXPECT_EQ(CycNum::root_of_unity(12, 4) * CycNum::root_of_unity(12, 8), CycNum::from_int(1));
}

TEST(Cyclotomic, FieldAxiomsAndEmbedding) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = std::vector<int>{12, 24, 20, 60}[trial % 4];
    const CycNum a = random_cyc(rng, m), b = random_cyc(rng, m), c = random_cyc(rng, 15);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    const CycNum n = a * a.conj();
    EXPECT_TRUE(n.is_real());
    EXPECT_NEAR(n.to_complex().imag(), 0.0, 1e-9);
    const bool exact_equal = a == b;
    EXPECT_EQ(exact_equal, oracle::close(a.to_complex(), b.to_complex()));
    EXPECT_TRUE(oracle::close((a * b).to_complex(), a.to_complex() * b.to_complex()));
    EXPECT_TRUE(oracle::close(a.conj().to_complex(), std::conj(a.to_complex())));
    EXPECT_LE(std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()),
              1e-9 + (a * b).embedding_error_bound());
  }
}

TEST(Cyclotomic, LiftingAcrossConductors) {
  const CycNum i4 = CycNum::root_of_unity(4, 1);
  const CycNum i12 = CycNum::root_of_unity(12, 3);
  EXPECT_EQ(i4, i12);
  EXPECT_EQ(i4.lifted(12), i12);
  const CycNum w3 = CycNum::root_of_unity(3, 1);
  const CycNum prod = i4 * w3;
  EXPECT_EQ(prod.conductor(), 12);
  EXPECT_EQ(prod, CycNum::root_of_unity(12, 7));
  EXPECT_TRUE((CycNum::from_rational(Rational(1, 2), 5) - Rational(1, 2) * CycNum::from_int(1)).is_zero());
}

TEST(Cyclotomic, RationalAndRealTests) {
  const CycNum s3 = CycNum::root_of_unity(12, 1) + CycNum::root_of_unity(12, 11);  // sqrt(3)
  EXPECT_TRUE(s3.is_real());
  EXPECT_FALSE(s3.is_rational());
  EXPECT_EQ(s3 * s3, CycNum::from_int(3));
  EXPECT_TRUE((s3 * s3).is_rational());
  EXPECT_EQ((s3 * s3).rational_value(), Rational(3));
  EXPECT_NEAR(s3.to_complex().real(), std::sqrt(3.0), 1e-12);
  EXPECT_FALSE(CycNum::root_of_unity(4, 1).is_real());
}

TEST(Cyclotomic, ExactString) {
  EXPECT_EQ(CycNum::from_rational(Rational(-1, 3), 4).exact_string(), "[-1/3,0]/4");
  EXPECT_EQ(CycNum::root_of_unity(4, 1).exact_string(), "[0,1]/4");
}
