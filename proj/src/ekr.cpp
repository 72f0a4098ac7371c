#include "pslekr/ekr.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "pslekr/error.hpp"

namespace pslekr {

IntersectionGraph::IntersectionGraph(const ProjectiveGroup& group, int max_q)
    : group_(group), n_(static_cast<int>(group.psl_indices().size())) {
  if (group.q() > max_q)
    throw Error(ErrorKind::BudgetExceeded, "intersection graph limited to q <= " + std::to_string(max_q));
  vertex_.assign(group.pgl().size(), -1);
  for (int v = 0; v < n_; ++v) vertex_[element(v)] = v;
  const int words = (n_ + 63) / 64;
  const int pts = group.num_points();
  adj_.assign(n_, std::vector<uint64_t>(words, 0));
  for (int u = 0; u < n_; ++u) {
    const auto pu = group.permutation(element(u));
    for (int v = u + 1; v < n_; ++v) {
      const auto pv = group.permutation(element(v));
      bool meet = false;
      for (int x = 0; x < pts && !meet; ++x) meet = pu[x] == pv[x];
      if (!meet) continue;
      adj_[u][v >> 6] |= uint64_t{1} << (v & 63);
      adj_[v][u >> 6] |= uint64_t{1} << (u & 63);
    }
  }
}

int IntersectionGraph::degree(int v) const {
  int d = 0;
  for (uint64_t w : adj_[v]) d += std::popcount(w);
  return d;
}

std::vector<int> stabilizer_coset(const IntersectionGraph& graph, int x, int y) {
  std::vector<int> out;
  for (int v = 0; v < graph.size(); ++v) {
    if (graph.group().permutation(graph.element(v))[x] == y) out.push_back(v);
  }
  return out;
}

std::optional<std::pair<int, int>> classify_family(const IntersectionGraph& graph, const std::vector<int>& members) {
  for (size_t i = 0; i < members.size(); ++i) {
    for (size_t j = i + 1; j < members.size(); ++j) {
      if (!graph.adjacent(members[i], members[j])) throw Error(ErrorKind::NotIntersecting, "family is not intersecting");
    }
  }
  if (members.empty()) return std::nullopt;
  const ProjectiveGroup& G = graph.group();
  const long q = G.q();
  if (static_cast<long>(members.size()) != q * (q - 1) / 2) return std::nullopt;
  const auto first = G.permutation(graph.element(members[0]));
  for (int x = 0; x < G.num_points(); ++x) {
    const int y = first[x];
    bool all = true;
    for (int v : members) {
      if (G.permutation(graph.element(v))[x] != y) {
        all = false;
        break;
      }
    }
    if (all) return std::make_pair(x, y);
  }
  return std::nullopt;
}

namespace {

// Branch and bound over cliques containing vertex 0, greedy coloring bound.
class CliqueSearch {
 public:
  explicit CliqueSearch(const IntersectionGraph& g) : g_(g), words_((g.size() + 63) / 64) {}

  int maximum() {
    enumerate_ = false;
    best_ = 1;
    run();
    return best_;
  }

  std::vector<std::vector<int>> all_of_size(int target) {
    enumerate_ = true;
    target_ = target;
    found_.clear();
    run();
    return found_;
  }

 private:
  using Bits = std::vector<uint64_t>;

  void run() {
    r_ = {0};
    expand(g_.neighbors(0));
  }

  void expand(Bits p) {
    std::vector<int> order, color;
    {
      Bits rest = p;
      int k = 0;
      while (any(rest)) {
        ++k;
        Bits cls = rest;
        while (any(cls)) {
          const int v = first(cls);
          clear(rest, v);
          clear(cls, v);
          const Bits& nv = g_.neighbors(v);
          for (int w = 0; w < words_; ++w) cls[w] &= ~nv[w];
          order.push_back(v);
          color.push_back(k);
        }
      }
    }
    for (size_t i = order.size(); i-- > 0;) {
      const int bound = static_cast<int>(r_.size()) + color[i];
      if (enumerate_ ? bound < target_ : bound <= best_) return;
      const int v = order[i];
      r_.push_back(v);
      Bits np(words_);
      const Bits& nv = g_.neighbors(v);
      for (int w = 0; w < words_; ++w) np[w] = p[w] & nv[w];
      const int size = static_cast<int>(r_.size());
      if (enumerate_ && size == target_) {
        std::vector<int> clique = r_;
        std::sort(clique.begin(), clique.end());
        found_.push_back(std::move(clique));
      } else if (!any(np)) {
        if (!enumerate_ && size > best_) best_ = size;
      } else {
        expand(std::move(np));
      }
      r_.pop_back();
      clear(p, v);
    }
  }

  static bool any(const Bits& b) {
    for (uint64_t w : b) {
      if (w) return true;
    }
    return false;
  }
  static int first(const Bits& b) {
    for (size_t w = 0; w < b.size(); ++w) {
      if (b[w]) return static_cast<int>(w * 64) + std::countr_zero(b[w]);
    }
    return -1;
  }
  static void clear(Bits& b, int v) { b[v >> 6] &= ~(uint64_t{1} << (v & 63)); }

  const IntersectionGraph& g_;
  int words_;
  bool enumerate_ = false;
  int best_ = 0;
  int target_ = 0;
  std::vector<int> r_;
  std::vector<std::vector<int>> found_;
};

}  // namespace

EkrResult max_intersecting_families(const ProjectiveGroup& group, bool allow_q9) {
  const int q = group.q();
  const bool ok = q <= kDefaultEkrQ || (q == 9 && allow_q9);
  if (!ok) throw Error(ErrorKind::BudgetExceeded, "EKR enumeration limited to q <= 7 (q = 9 on request)");
  const IntersectionGraph graph(group);
  EkrResult res;
  res.q = q;
  res.expected_max_size = q * (q - 1) / 2;

  CliqueSearch search(graph);
  res.max_size = search.maximum();
  const auto seeds = search.all_of_size(res.max_size);

  // Every maximum family has a right translate through vertex 0, so
  // translating the seeds by every element yields all of them.
  std::set<std::vector<int>> all;
  const int n = graph.size();
  for (const auto& seed : seeds) {
    for (int t = 0; t < n; ++t) {
      const GroupElement& gt = group.pgl()[graph.element(t)];
      std::vector<int> moved;
      moved.reserve(seed.size());
      for (int v : seed) {
        const GroupElement prod = group.mul(group.pgl()[graph.element(v)], gt);
        moved.push_back(graph.vertex_of(group.index_of(prod)));
      }
      std::sort(moved.begin(), moved.end());
      all.insert(std::move(moved));
    }
  }
  res.all_cosets = true;
  for (const auto& members : all) {
    IntersectingFamily fam;
    fam.members = members;
    fam.coset = classify_family(graph, members);
    if (!fam.coset) {
      res.all_cosets = false;
      res.counterexamples.push_back(fam);
    }
    res.families.push_back(std::move(fam));
  }
  return res;
}

}  // namespace pslekr
