#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "oracle.hpp"
#include "pslekr/group.hpp"
#include "util.hpp"

using namespace pslekr;

namespace {

ProjectiveGroup make_group(int q) { return ProjectiveGroup(make_field_ctx_for_q(q)); }

oracle::Mat to_mat(const GroupElement& g) {
  return {static_cast<int>(g.a().v), static_cast<int>(g.b().v), static_cast<int>(g.c().v), static_cast<int>(g.d().v)};
}

ProjPoint fin(int a) { return ProjPoint::finite(FqElem{static_cast<uint32_t>(a)}); }

class GroupQ : public ::testing::TestWithParam<int> {};
class PrimeGroupQ : public ::testing::TestWithParam<int> {};

}  // namespace

TEST_P(GroupQ, OrdersAndClassSizes) {
  const auto G = make_group(GetParam());
  const long q = G.q();
  EXPECT_EQ(static_cast<long>(G.pgl().size()), q * q * q - q);
  EXPECT_EQ(static_cast<long>(G.psl_indices().size()), (q * q * q - q) / 2);
  EXPECT_EQ(G.elements(Which::PSL).size(), G.psl_indices().size());
  EXPECT_EQ(static_cast<long>(G.class_labels().size()), q + 2);

  std::map<ClassLabel, long> census;
  for (const auto& g : G.pgl()) ++census[G.classify(g)];
  long total = 0;
  for (const auto& l : G.class_labels()) {
    EXPECT_EQ(census[l], G.class_size(l)) << to_string(l);
    EXPECT_EQ(G.classify(G.class_representative(l)), l);
    long expected = 0;
    switch (l.kind) {
      case ClassKind::Identity: expected = 1; break;
      case ClassKind::Unipotent: expected = q * q - 1; break;
      case ClassKind::Split: expected = q * (q + 1); break;
      case ClassKind::SplitMinusOne: expected = q * (q + 1) / 2; break;
      case ClassKind::NonSplit: expected = q * (q - 1); break;
      case ClassKind::NonSplitI: expected = q * (q - 1) / 2; break;
    }
    EXPECT_EQ(G.class_size(l), expected) << to_string(l);
    total += G.class_size(l);
  }
  EXPECT_EQ(total, q * q * q - q);
}

TEST_P(GroupQ, DerangementCount) {
  const auto G = make_group(GetParam());
  const long q = G.q();
  long count = 0;
  for (const auto& g : G.elements(Which::PSL)) count += G.is_derangement(g);
  EXPECT_EQ(count, q * (q - 1) * (q - 1) / 4);
  EXPECT_FALSE(G.is_derangement(G.identity()));
}

TEST_P(GroupQ, ConjugationInvarianceAndNormality) {
  const auto G = make_group(GetParam());
  std::mt19937 rng(3);
  std::uniform_int_distribution<size_t> pick(0, G.pgl().size() - 1);
  std::uniform_int_distribution<size_t> pick_psl(0, G.psl_indices().size() - 1);
  for (int s = 0; s < 200; ++s) {
    const GroupElement& g = G.pgl()[pick(rng)];
    const GroupElement& k = G.pgl()[pick(rng)];
    EXPECT_EQ(G.classify(G.mul(G.mul(G.inverse(k), g), k)), G.classify(g));
    const GroupElement& h = G.pgl()[G.psl_indices()[pick_psl(rng)]];
    EXPECT_TRUE(G.mul(G.mul(G.inverse(g), h), g).in_psl);
  }
}

TEST_P(GroupQ, PermutationsAgreeWithAction) {
  const auto G = make_group(GetParam());
  for (size_t i = 0; i < G.pgl().size(); i += 7) {
    const auto perm = G.permutation(static_cast<int>(i));
    for (int x = 0; x < G.num_points(); ++x)
      EXPECT_EQ(perm[x], G.point_index(G.act(G.point_at(x), G.pgl()[i])));
    EXPECT_EQ(G.index_of(G.pgl()[i]), static_cast<int>(i));
  }
}

TEST_P(GroupQ, ElementH) {
  const auto G = make_group(GetParam());
  const FieldCtx& F = G.field();
  const GroupElement h = G.element_h();
  EXPECT_EQ(G.act(fin(0), h), fin(0));
  EXPECT_EQ(G.act(fin(1), h), ProjPoint::infinity());
  EXPECT_EQ(G.act(ProjPoint::infinity(), h), fin(1));
  for (const FqElem b : F.elements()) {
    if (b.v <= 1) continue;
    const ProjPoint bh = G.act(ProjPoint::finite(b), h);
    EXPECT_EQ(bh, ProjPoint::finite(F.div(b, F.sub(b, F.one()))));
    EXPECT_EQ(G.act(bh, h), ProjPoint::finite(b));
  }
}

TEST_P(GroupQ, PslIsTwoTransitive) {
  const auto G = make_group(GetParam());
  if (G.q() > 7) GTEST_SKIP() << "exhaustive check kept to small q";
  const int n = G.num_points();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (a == b || c == d) continue;
          const std::pair<ProjPoint, ProjPoint> pairs[] = {{G.point_at(a), G.point_at(c)}, {G.point_at(b), G.point_at(d)}};
          EXPECT_EQ(static_cast<long>(G.elements_with_constraints(pairs, Which::PSL).size()), (G.q() - 1) / 2);
        }
}

INSTANTIATE_TEST_SUITE_P(Small, GroupQ, ::testing::Values(3, 5, 7, 9, 11, 13));

TEST_P(PrimeGroupQ, MatchesNaiveMatrices) {
  const int p = GetParam();
  const auto G = make_group(p);
  const auto naive = oracle::pgl(p);
  std::set<oracle::Mat> lib;
  for (const auto& g : G.pgl()) lib.insert(to_mat(g));
  ASSERT_EQ(lib, std::set<oracle::Mat>(naive.begin(), naive.end()));

  for (const auto& g : G.pgl()) {
    const auto m = to_mat(g);
    EXPECT_EQ(g.in_psl, oracle::is_square_mod(oracle::mat_det(m, p), p));
    for (int x = 0; x <= p; ++x) EXPECT_EQ(G.point_index(G.act(G.point_at(x), g)), oracle::act(x, m, p));
  }
  std::mt19937 rng(5);
  std::uniform_int_distribution<size_t> pick(0, G.pgl().size() - 1);
  for (int s = 0; s < 100; ++s) {
    const auto& g = G.pgl()[pick(rng)];
    const auto& h = G.pgl()[pick(rng)];
    EXPECT_EQ(to_mat(G.mul(g, h)), oracle::mat_mul(to_mat(g), to_mat(h), p));
    EXPECT_EQ(to_mat(G.inverse(g)), oracle::mat_inv(to_mat(g), p));
  }

  // Conjugacy classes as orbits of naive conjugation.
  std::map<oracle::Mat, int> orbit_of;
  int orbits = 0;
  for (const auto& m : naive) {
    if (orbit_of.count(m)) continue;
    for (const auto& k : naive) orbit_of[oracle::mat_mul(oracle::mat_mul(oracle::mat_inv(k, p), m, p), k, p)] = orbits;
    ++orbits;
  }
  EXPECT_EQ(orbits, static_cast<int>(G.class_labels().size()));
  std::map<ClassLabel, std::set<int>> seen;
  for (const auto& g : G.pgl()) seen[G.classify(g)].insert(orbit_of.at(to_mat(g)));
  for (const auto& [label, ids] : seen) EXPECT_EQ(ids.size(), 1u) << to_string(label);
  EXPECT_EQ(static_cast<int>(seen.size()), orbits);
}

INSTANTIATE_TEST_SUITE_P(Primes, PrimeGroupQ, ::testing::Values(3, 5, 7));

TEST(Group, ActionExamples) {
  const auto G = make_group(5);
  const FieldCtx& F = G.field();
  const GroupElement u = G.make(F.one(), F.one(), F.zero(), F.one());
  EXPECT_EQ(G.act(fin(0), u), fin(1));
  EXPECT_EQ(G.act(ProjPoint::infinity(), u), ProjPoint::infinity());
  EXPECT_EQ(G.classify(u).kind, ClassKind::Unipotent);
  EXPECT_EQ(G.classify(G.identity()).kind, ClassKind::Identity);
  for (int lambda = 1; lambda < 5; ++lambda) {
    const GroupElement g = G.make(F.zero(), F.from_int(lambda), F.one(), F.zero());
    EXPECT_EQ(G.act(fin(0), g), ProjPoint::infinity());
    EXPECT_EQ(G.act(ProjPoint::infinity(), g), fin(0));
  }
}

TEST(Group, ClassCensusQ5) {
  const auto G = make_group(5);
  std::map<long, int> by_size;
  for (const auto& l : G.class_labels()) ++by_size[G.class_size(l)];
  EXPECT_EQ(by_size, (std::map<long, int>{{1, 1}, {24, 1}, {15, 1}, {30, 1}, {10, 1}, {20, 2}}));
}

TEST(Group, DerangementCountsQ5Q7) {
  for (auto [q, expected] : {std::pair{5, 20}, std::pair{7, 63}}) {
    const auto G = make_group(q);
    int count = 0;
    for (const auto& g : G.elements(Which::PSL)) count += G.is_derangement(g);
    EXPECT_EQ(count, expected);
  }
}

TEST(Group, ElementHAtFive) {
  const auto G = make_group(5);
  EXPECT_EQ(G.act(fin(3), G.element_h()), fin(4));
  const std::pair<ProjPoint, ProjPoint> pairs[] = {{fin(0), fin(0)}, {fin(1), ProjPoint::infinity()},
                                                   {ProjPoint::infinity(), fin(1)}};
  const auto found = G.elements_with_constraints(pairs, Which::PGL);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0], G.element_h());
}

TEST(Group, ConstrainedElements) {
  const auto G5 = make_group(5);
  const std::pair<ProjPoint, ProjPoint> swap[] = {{fin(0), ProjPoint::infinity()}, {ProjPoint::infinity(), fin(0)}};
  EXPECT_EQ(G5.elements_with_constraints(swap, Which::PGL).size(), 4u);
  const auto G7 = make_group(7);
  const std::pair<ProjPoint, ProjPoint> to3[] = {{fin(0), ProjPoint::infinity()}, {fin(1), fin(3)}};
  EXPECT_EQ(G7.elements_with_constraints(to3, Which::PSL).size(), 3u);
  EXPECT_EQ(G7.elements_with_constraints(to3, Which::PGL).size(), 6u);

  const std::pair<ProjPoint, ProjPoint> clash[] = {{fin(0), fin(1)}, {fin(2), fin(1)}};
  expect_error(ErrorKind::InvalidConstraint, [&] { G7.elements_with_constraints(clash, Which::PGL); });
  expect_error(ErrorKind::InvalidConstraint,
               [&] { G7.elements_with_constraints(std::span<const std::pair<ProjPoint, ProjPoint>>{}, Which::PGL); });
  expect_error(ErrorKind::InvalidConstraint, [&] { G7.element_by_triple(fin(0), fin(0), fin(1)); });
  const FieldCtx& F = G7.field();
  expect_error(ErrorKind::InvalidArgument, [&] { G7.make(F.one(), F.one(), F.one(), F.one()); });
}
