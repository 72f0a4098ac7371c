#pragma once

// Intersecting families in PSL(2,q) acting on PG(1,q): the intersection
// graph, exhaustive maximum-clique enumeration and coset classification.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pslekr/group.hpp"

namespace pslekr {

inline constexpr int kMaxGraphQ = 9;
inline constexpr int kDefaultEkrQ = 7;

/// Vertices are the PSL(2,q) elements in psl_indices() order; g1 ~ g2 when
/// g1 g2^-1 fixes a point.
class IntersectionGraph {
 public:
  /// Throws BudgetExceeded for q > max_q.
  explicit IntersectionGraph(const ProjectiveGroup& group, int max_q = kMaxGraphQ);

  const ProjectiveGroup& group() const { return group_; }
  int size() const { return n_; }
  /// pgl() index of a vertex.
  int element(int v) const { return group_.psl_indices()[v]; }
  int vertex_of(int pgl_index) const { return vertex_[pgl_index]; }
  bool adjacent(int u, int v) const { return (adj_[u][v >> 6] >> (v & 63)) & 1u; }
  int degree(int v) const;
  const std::vector<uint64_t>& neighbors(int v) const { return adj_[v]; }

 private:
  const ProjectiveGroup& group_;
  int n_;
  std::vector<int> vertex_;
  std::vector<std::vector<uint64_t>> adj_;
};

struct IntersectingFamily {
  /// Sorted vertex ids.
  std::vector<int> members;
  /// (x, y) when members = {g in PSL : x^g = y}, point indices.
  std::optional<std::pair<int, int>> coset;
};

/// Coset (x, y) or nullopt. Throws NotIntersecting unless the members form
/// an intersecting family.
std::optional<std::pair<int, int>> classify_family(const IntersectionGraph& graph, const std::vector<int>& members);

/// Vertices of {g in PSL : x^g = y}, sorted.
std::vector<int> stabilizer_coset(const IntersectionGraph& graph, int x, int y);

struct EkrResult {
  int q = 0;
  int max_size = 0;
  int expected_max_size = 0;
  std::vector<IntersectingFamily> families;
  bool all_cosets = false;
  std::vector<IntersectingFamily> counterexamples;
};

/// All maximum intersecting families. q = 9 requires allow_q9.
/// Throws BudgetExceeded outside {3, 5, 7} (plus 9 when allowed).
EkrResult max_intersecting_families(const ProjectiveGroup& group, bool allow_q9 = false);

}  // namespace pslekr
