#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "pslekr/charsums.hpp"
#include "util.hpp"

using namespace pslekr;

namespace {

struct Env {
  std::shared_ptr<const FieldCtx> ctx;
  oracle::Field of;
  oracle::Field2 of2;
  oracle::Sums os;

  explicit Env(int q)
      : ctx(make_field_ctx_for_q(q)),
        of(ctx->p(), ctx->modulus()),
        of2(of, ctx->modulus2().first.v, ctx->modulus2().second.v),
        os(of, static_cast<int>(ctx->generator_q().v)) {}

  const FieldCtx& F() const { return *ctx; }
  FqElem el(int x) const { return FqElem(static_cast<uint32_t>(x)); }
};

bool matches(const CycNum& exact, oracle::cd approx) { return oracle::close(exact.to_complex(), approx, 1e-7); }

CycNum rat(long num, long den = 1) { return CycNum::from_rational(Rational(num) / den); }

class SumsQ : public ::testing::TestWithParam<int> {};

}  // namespace

TEST_P(SumsQ, LegendreSumsAgainstOracle) {
  const Env env(GetParam());
  const int q = env.F().q();
  for (int k = 0; k < q - 1; ++k) {
    const MultCharFq g = char_fq(env.F(), k);
    for (int a = 0; a < q; ++a) {
      const CycNum v = legendre_sum(env.F(), g, env.el(a));
      ASSERT_TRUE(matches(v, env.os.legendre_sum(k, a))) << "k=" << k << " a=" << a;
      EXPECT_TRUE(v.is_real());
      EXPECT_EQ(v, legendre_sum(env.F(), g.inverse(), env.el(a)));
    }
  }
}

TEST_P(SumsQ, SotoAndradeSumsAgainstOracle) {
  const Env env(GetParam());
  const int q = env.F().q();
  const int g2 = static_cast<int>(env.F().generator_q2().v);
  for (const MultCharB& b : enumerate_beta_set(env.F())) {
    for (int a = 0; a < q; ++a) {
      const CycNum v = soto_andrade_sum(env.F(), b, env.el(a));
      EXPECT_NEAR(v.to_complex().real(), oracle::soto_andrade(env.of, env.of2, g2, b.exponent, a), 1e-9);
      EXPECT_TRUE(v.is_real());
      EXPECT_EQ(v, soto_andrade_sum(env.F(), b.inverse(), env.el(a)));
    }
  }
}

TEST_P(SumsQ, SpecialValues) {
  const Env env(GetParam());
  const FieldCtx& F = env.F();
  const int q = F.q();
  const FqElem one = F.one(), minus_one = F.neg(F.one());
  for (const FqElem a : F.elements()) {
    if (a == one || a == minus_one) continue;
    EXPECT_EQ(legendre_sum(F, trivial_char(F), a), rat(-2, q));
  }
  for (const MultCharFq& g : enumerate_gamma_set(F)) EXPECT_EQ(legendre_sum(F, g, one), rat(-1, q));
  for (const MultCharB& b : enumerate_beta_set(F)) {
    EXPECT_EQ(soto_andrade_sum(F, b, one), rat(1, q));
    // beta(i) = (-1)^exponent.
    EXPECT_EQ(soto_andrade_sum(F, b, minus_one), rat(b.exponent % 2 ? 1 : -1, q));
  }
}

TEST_P(SumsQ, GramMatrixOfBasis) {
  const Env env(GetParam());
  const FieldCtx& F = env.F();
  const long q = F.q();
  const auto basis = orthogonal_basis(F);
  ASSERT_EQ(static_cast<long>(basis.size()), q);
  std::vector<Rational> expected{Rational(q * q - 1) / q, Rational(q * q - 1) / (q * q)};
  for (long i = 0; i < (q - 3) / 2; ++i) expected.push_back(Rational(q - 1) / q);
  for (long i = 0; i < (q - 1) / 2; ++i) expected.push_back(Rational(q + 1) / q);
  for (size_t i = 0; i < basis.size(); ++i) {
    EXPECT_EQ(basis[i].norm2, expected[i]) << basis[i].name;
    for (size_t j = 0; j < basis.size(); ++j) {
      const CycNum ip = l2_inner(F, basis[i].values, basis[j].values);
      EXPECT_EQ(ip, i == j ? CycNum::from_rational(expected[i]) : CycNum()) << basis[i].name << " " << basis[j].name;
    }
  }
}

TEST_P(SumsQ, GreeneFunctionsAgainstOracle) {
  const Env env(GetParam());
  const FieldCtx& F = env.F();
  const int q = F.q();
  std::mt19937 rng(q);
  std::uniform_int_distribution<int> ch(0, q - 2), pt(0, q - 1);
  for (int s = 0; s < 20; ++s) {
    const int k0 = ch(rng), k1 = ch(rng), k2 = ch(rng), x = pt(rng);
    const CycNum v = greene_2f1(F, char_fq(F, k0), char_fq(F, k1), char_fq(F, k2), env.el(x));
    EXPECT_TRUE(matches(v, env.os.greene_2f1(k0, k1, k2, x)));
    EXPECT_EQ(greene_nfn(F, {char_fq(F, k0), char_fq(F, k1)}, {char_fq(F, k2)}, env.el(x)), v);
  }
  for (int s = 0; s < 4; ++s) {
    const std::vector<long> as{ch(rng), ch(rng), ch(rng)}, bs{ch(rng), ch(rng)};
    const int x = pt(rng);
    const CycNum v = greene_nfn(F, {char_fq(F, as[0]), char_fq(F, as[1]), char_fq(F, as[2])},
                                {char_fq(F, bs[0]), char_fq(F, bs[1])}, env.el(x));
    EXPECT_TRUE(matches(v, env.os.greene_nfn(as, bs, x)));
  }
  EXPECT_TRUE(greene_2f1(F, quadratic_char(F), quadratic_char(F), trivial_char(F), F.zero()).is_zero());
}

TEST_P(SumsQ, HypergeometricIdentities) {
  const Env env(GetParam());
  const FieldCtx& F = env.F();
  const int q = F.q();
  const MultCharFq phi = quadratic_char(F), eps = trivial_char(F);
  const FqElem one = F.one(), minus_one = F.neg(one);
  // Inversion for 2F1(phi, phi; eps).
  for (const FqElem x : F.elements()) {
    if (x == F.zero()) continue;
    EXPECT_EQ(greene_2f1(F, phi, phi, eps, x),
              greene_2f1(F, phi, phi, eps, F.inv(x)) * Rational(legendre_symbol(F, x)));
  }
  const FqElem half = F.inv(F.from_int(2));
  for (int k = 1; k < q - 1; ++k) {
    const MultCharFq g = char_fq(F, k);
    // Legendre sums as 2F1 at (1 - a)/2.
    for (const FqElem a : F.elements()) {
      if (a == one || a == minus_one) continue;
      EXPECT_EQ(greene_2f1(F, g, g.inverse(), eps, F.mul(F.sub(one, a), half)), legendre_sum(F, g, a));
    }
    // q 4F3(g, g^-1, phi, phi; eps, eps, eps | 1) = sum_z phi(z) 2F1(phi, phi; eps | z) 2F1(g, g^-1; eps | z).
    const auto t43 = greene_nfn_table(F, {g, g.inverse(), phi, phi}, {eps, eps, eps});
    CycNum rhs;
    for (const FqElem z : F.elements())
      rhs += greene_2f1(F, phi, phi, eps, z) * greene_2f1(F, g, g.inverse(), eps, z) *
             Rational(legendre_symbol(F, z));
    EXPECT_EQ(t43[one.v] * Rational(q), rhs) << "k=" << k;
  }
}

TEST_P(SumsQ, FunctionFNormAndExpansion) {
  const Env env(GetParam());
  const FieldCtx& F = env.F();
  const long q = F.q();
  const L2Function f = f_function(F);
  EXPECT_TRUE(f[F.one().v].is_zero());
  const CycNum norm2 = l2_inner(F, f, f);
  EXPECT_EQ(norm2, CycNum::from_rational(Rational(q * q - q - 2) / (q * q)));
  CycNum total;
  for (const auto& b : orthogonal_basis(F)) {
    const CycNum c = l2_inner(F, f, b.values);
    total += c * c.conj() / b.norm2;
  }
  EXPECT_EQ(total, norm2);
}

TEST_P(SumsQ, FInnerProductWithLegendreSums) {
  const Env env(GetParam());
  const FieldCtx& F = env.F();
  for (int k = 1; k < F.q() - 1; ++k) {
    const auto [lhs, rhs] = f_pgamma_identity(F, char_fq(F, k));
    EXPECT_EQ(lhs, rhs) << "k=" << k;
  }
}

TEST_P(SumsQ, QuadraticSumViaLegendre) {
  const Env env(GetParam());
  const FieldCtx& F = env.F();
  const int q = F.q();
  const auto& of = env.of;
  for (int d = 2; d < q; ++d) {
    long lhs = 0;
    for (int x = 1; x < q; ++x) {
      const int s = of.add(x, of.inv(x));
      lhs += of.legendre(of.sub(of.mul(s, s), of.mul(of.from_int(4), d)));
    }
    const FqElem arg = F.sub(F.add(env.el(d), env.el(d)), F.one());
    EXPECT_EQ(rat(lhs), rat(-2) + legendre_sum(F, quadratic_char(F), arg) * Rational(q)) << "d=" << d;
  }
}

INSTANTIATE_TEST_SUITE_P(Small, SumsQ, ::testing::Values(5, 7, 9, 11, 13));

TEST(CharSums, ExamplesAtFive) {
  const Env env(5);
  const FieldCtx& F = env.F();
  EXPECT_EQ(legendre_sum(F, quadratic_char(F), F.zero()), rat(-2, 5));
  EXPECT_EQ(l2_inner(F, f_function(F), f_function(F)), rat(18, 25));
  const auto betas = enumerate_beta_set(F);
  const MultCharB b3 = betas[1];
  ASSERT_EQ(b3.order(), 3);
  const double brute = oracle::soto_andrade(env.of, env.of2, static_cast<int>(F.generator_q2().v), b3.exponent, 0);
  EXPECT_NEAR(soto_andrade_sum(F, b3, F.zero()).to_complex().real(), brute, 1e-12);
  const auto [lhs, rhs] = f_pgamma_identity(F, quadratic_char(F));
  EXPECT_EQ(lhs, rhs);
}

TEST(CharSums, FInnerProductExamples) {
  const auto c7 = make_field_ctx_for_q(7);
  const MultCharFq g3 = char_fq(*c7, 2);
  ASSERT_EQ(g3.order(), 3);
  auto [l7, r7] = f_pgamma_identity(*c7, g3);
  EXPECT_EQ(l7, r7);
  const auto c9 = make_field_ctx_for_q(9);
  const MultCharFq g4 = char_fq(*c9, 2);
  ASSERT_EQ(g4.order(), 4);
  auto [l9, r9] = f_pgamma_identity(*c9, g4);
  EXPECT_EQ(l9, r9);
}

TEST(CharSums, BoundAtThirteen) {
  const Env env(13);
  const FieldCtx& F = env.F();
  for (const int k : {3, 9}) {
    const MultCharFq g = char_fq(F, k);
    ASSERT_EQ(g.order(), 4);
    const QuarticBoundCheck c = quartic_bound_check(F, g);
    EXPECT_TRUE(c.holds);
    EXPECT_EQ(c.bound2, Rational(4 * 13 * 13 * 13));
    EXPECT_LE(c.abs2, c.bound2);
    EXPECT_LE(std::abs(c.value.to_complex()), 2 * std::pow(13.0, 1.5));
    EXPECT_EQ(CycNum::from_rational(c.abs2), c.value * c.value.conj());
  }
}

TEST(CharSums, KatzConversion) {
  for (const auto [q, n] : {std::pair{13, 4}, std::pair{7, 3}, std::pair{5, 2}, std::pair{13, 3}, std::pair{7, 6}}) {
    const Env env(q);
    const FieldCtx& F = env.F();
    const std::vector<Rational> alpha{Rational(1, n), Rational(n - 1) / n, Rational(1, 2), Rational(1, 2)};
    const std::vector<Rational> beta(4, Rational(1));
    const CycNum h = katz_hq(F, alpha, beta, F.one());
    const std::vector<long> a_int{(q - 1) / n, (q - 1) * (n - 1) / n, (q - 1) / 2, (q - 1) / 2};
    const std::vector<long> b_int(4, q - 1);
    EXPECT_TRUE(matches(h, env.os.katz(a_int, b_int, 1))) << q << " " << n;
    for (const MultCharFq g : {char_fq(F, (q - 1) / n), char_fq(F, (q - 1) / n).inverse()}) {
      const CycNum f43 = greene_nfn(F, {g, g.inverse(), quadratic_char(F), quadratic_char(F)},
                                    {trivial_char(F), trivial_char(F), trivial_char(F)}, F.one());
      EXPECT_EQ(h, f43 * Rational(-q * q * q)) << q << " " << n;
    }
  }
}

TEST(CharSums, KatzGeneratorIndependence) {
  const auto ctx = make_field_ctx_for_q(13);
  const std::vector<Rational> alpha{Rational(1, 4), Rational(3, 4), Rational(1, 2), Rational(1, 2)};
  const std::vector<Rational> beta(4, Rational(1));
  const CycNum h1 = katz_hq(*ctx, alpha, beta, ctx->one(), 1);
  for (long s : {5, 7, 11}) EXPECT_EQ(katz_hq(*ctx, alpha, beta, ctx->one(), s), h1);
}

TEST(CharSums, Errors) {
  const auto c7 = make_field_ctx_for_q(7);
  const MultCharFq phi = quadratic_char(*c7);
  expect_error(ErrorKind::NotIntegralParameters, [&] {
    katz_hq(*c7, {Rational(1, 5), Rational(4, 5)}, {Rational(1), Rational(1)}, c7->one());
  });
  expect_error(ErrorKind::ArityMismatch, [&] { greene_nfn(*c7, {phi, phi}, {phi, phi}, c7->one()); });
  expect_error(ErrorKind::ArityMismatch, [&] { greene_nfn(*c7, {phi}, {}, c7->one()); });
  expect_error(ErrorKind::TrivialCharacter, [&] { f_pgamma_identity(*c7, trivial_char(*c7)); });
  const auto c5 = make_field_ctx_for_q(5);
  expect_error(ErrorKind::DomainMismatch, [&] { l2_inner(*c5, f_function(*c5), f_function(*c7)); });
}
