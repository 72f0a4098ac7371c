#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracle.hpp"
#include "pslekr/ekr.hpp"
#include "util.hpp"

using namespace pslekr;

namespace {

ProjectiveGroup make_group(int q) { return ProjectiveGroup(make_field_ctx_for_q(q)); }

oracle::Mat to_mat(const GroupElement& g) {
  return {static_cast<int>(g.a().v), static_cast<int>(g.b().v), static_cast<int>(g.c().v), static_cast<int>(g.d().v)};
}

using MatSet = std::set<oracle::Mat>;

MatSet as_matrices(const IntersectionGraph& graph, const std::vector<int>& members) {
  MatSet out;
  for (int v : members) out.insert(to_mat(graph.group().pgl()[graph.element(v)]));
  return out;
}

std::vector<oracle::Mat> naive_psl(int p) {
  std::vector<oracle::Mat> out;
  for (const auto& m : oracle::pgl(p))
    if (oracle::is_square_mod(oracle::mat_det(m, p), p)) out.push_back(m);
  return out;
}

bool naive_fixes_point(const oracle::Mat& m, int p) {
  for (int x = 0; x <= p; ++x)
    if (oracle::act(x, m, p) == x) return true;
  return false;
}

// All cosets {g : x^g = y} of PSL(2,p) built from naive matrices.
std::set<MatSet> naive_cosets(int p) {
  std::set<MatSet> out;
  const auto psl = naive_psl(p);
  for (int x = 0; x <= p; ++x)
    for (int y = 0; y <= p; ++y) {
      MatSet s;
      for (const auto& m : psl)
        if (oracle::act(x, m, p) == y) s.insert(m);
      out.insert(s);
    }
  return out;
}

}  // namespace

TEST(Ekr, GraphAtFive) {
  const auto G = make_group(5);
  const IntersectionGraph graph(G);
  EXPECT_EQ(graph.size(), 60);
  const int id = graph.vertex_of(G.index_of(G.identity()));
  EXPECT_EQ(graph.degree(id) + 1, 40);
  for (int v = 0; v < graph.size(); ++v) EXPECT_EQ(graph.vertex_of(graph.element(v)), v);
}

TEST(Ekr, AdjacencyMatchesNaiveDefinition) {
  const int p = 5;
  const auto G = make_group(p);
  const IntersectionGraph graph(G);
  for (int u = 0; u < graph.size(); ++u)
    for (int v = 0; v < graph.size(); ++v) {
      if (u == v) continue;
      const auto a = to_mat(G.pgl()[graph.element(u)]);
      const auto b = to_mat(G.pgl()[graph.element(v)]);
      ASSERT_EQ(graph.adjacent(u, v), naive_fixes_point(oracle::mat_mul(a, oracle::mat_inv(b, p), p), p));
    }
}

TEST(Ekr, RightTranslationInvariance) {
  const auto G = make_group(7);
  const IntersectionGraph graph(G);
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> pick(0, graph.size() - 1);
  for (int s = 0; s < 100; ++s) {
    const int u = pick(rng), v = pick(rng), w = pick(rng);
    const auto& k = G.pgl()[graph.element(w)];
    const int u2 = graph.vertex_of(G.index_of(G.mul(G.pgl()[graph.element(u)], k)));
    const int v2 = graph.vertex_of(G.index_of(G.mul(G.pgl()[graph.element(v)], k)));
    EXPECT_EQ(graph.adjacent(u, v), graph.adjacent(u2, v2));
  }
}

TEST(Ekr, MaximumFamiliesAreCosets) {
  for (const int q : {5, 7}) {
    const auto G = make_group(q);
    const EkrResult r = max_intersecting_families(G);
    EXPECT_EQ(r.max_size, q * (q - 1) / 2);
    EXPECT_EQ(r.expected_max_size, q * (q - 1) / 2);
    EXPECT_TRUE(r.all_cosets);
    EXPECT_TRUE(r.counterexamples.empty());
    EXPECT_EQ(static_cast<int>(r.families.size()), (q + 1) * (q + 1));
    const IntersectionGraph graph(G);
    std::set<MatSet> found;
    for (const auto& f : r.families) {
      ASSERT_TRUE(f.coset.has_value());
      EXPECT_EQ(f.members, stabilizer_coset(graph, f.coset->first, f.coset->second));
      found.insert(as_matrices(graph, f.members));
    }
    if (q == 5) EXPECT_EQ(found, naive_cosets(5));
  }
}

TEST(Ekr, StabilizerOfZeroAtFive) {
  const auto G = make_group(5);
  const IntersectionGraph graph(G);
  const auto stab = stabilizer_coset(graph, 0, 0);
  EXPECT_EQ(stab.size(), 10u);
  EXPECT_EQ(classify_family(graph, stab), (std::optional<std::pair<int, int>>{{0, 0}}));
}

TEST(Ekr, SubsetsOfCosetsAreIntersecting) {
  const auto G = make_group(7);
  const IntersectionGraph graph(G);
  std::mt19937 rng(23);
  for (int s = 0; s < 20; ++s) {
    auto coset = stabilizer_coset(graph, static_cast<int>(rng() % 8), static_cast<int>(rng() % 8));
    std::shuffle(coset.begin(), coset.end(), rng);
    coset.resize(1 + rng() % (coset.size() - 1));
    std::sort(coset.begin(), coset.end());
    EXPECT_NO_THROW(classify_family(graph, coset));
    EXPECT_FALSE(classify_family(graph, coset).has_value());
  }
}

// PSL(2,3) is small enough to check every 3- and 4-subset.
TEST(Ekr, NonCosetFamilyAtThree) {
  const int p = 3;
  const auto psl = naive_psl(p);
  ASSERT_EQ(psl.size(), 12u);
  auto intersecting = [&](const std::vector<oracle::Mat>& s) {
    for (size_t i = 0; i < s.size(); ++i)
      for (size_t j = i + 1; j < s.size(); ++j)
        if (!naive_fixes_point(oracle::mat_mul(s[i], oracle::mat_inv(s[j], p), p), p)) return false;
    return true;
  };
  const auto cosets = naive_cosets(p);
  std::set<MatSet> non_coset;
  bool any_four = false;
  const int n = static_cast<int>(psl.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        if (intersecting({psl[a], psl[b], psl[c]})) {
          const MatSet s{psl[a], psl[b], psl[c]};
          if (!cosets.count(s)) non_coset.insert(s);
        }
        for (int d = c + 1; d < n; ++d) any_four = any_four || intersecting({psl[a], psl[b], psl[c], psl[d]});
      }
  EXPECT_FALSE(any_four);
  ASSERT_FALSE(non_coset.empty());

  const auto G = make_group(3);
  const EkrResult r = max_intersecting_families(G);
  EXPECT_EQ(r.max_size, 3);
  EXPECT_FALSE(r.all_cosets);
  const IntersectionGraph graph(G);
  std::set<MatSet> lib;
  for (const auto& f : r.counterexamples) {
    EXPECT_FALSE(f.coset.has_value());
    EXPECT_FALSE(classify_family(graph, f.members).has_value());
    lib.insert(as_matrices(graph, f.members));
  }
  EXPECT_EQ(lib, non_coset);
}

TEST(Ekr, Errors) {
  const auto G = make_group(5);
  const IntersectionGraph graph(G);
  int far = 1;
  while (graph.adjacent(0, far)) ++far;
  expect_error(ErrorKind::NotIntersecting, [&] { classify_family(graph, {0, far}); });
  expect_error(ErrorKind::BudgetExceeded, [] { IntersectionGraph g(make_group(11)); });
  expect_error(ErrorKind::BudgetExceeded, [] { max_intersecting_families(make_group(9)); });
}
