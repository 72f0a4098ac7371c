#pragma once

// PGL(2,q) and PSL(2,q) acting on the projective line PG(1,q).
//
// Points: Finite(a) is the span of (1, a), Infinity the span of (0, 1).
// Group elements act on row vectors from the right, so (pt^g)^h = pt^(gh).

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pslekr/field.hpp"

namespace pslekr {

struct ProjPoint {
  static constexpr uint32_t kInfinity = 0xFFFFFFFFu;
  uint32_t code = 0;

  static ProjPoint finite(FqElem a) { return ProjPoint{a.v}; }
  static ProjPoint infinity() { return ProjPoint{kInfinity}; }
  bool is_infinity() const { return code == kInfinity; }
  FqElem value() const { return FqElem{code}; }

  friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

std::string to_string(ProjPoint pt);

/// Normalized 2x2 matrix (first nonzero entry in row-major order is 1).
struct GroupElement {
  std::array<FqElem, 4> m{};  // a, b, c, d
  bool in_psl = false;

  FqElem a() const { return m[0]; }
  FqElem b() const { return m[1]; }
  FqElem c() const { return m[2]; }
  FqElem d() const { return m[3]; }

  friend bool operator==(const GroupElement& x, const GroupElement& y) { return x.m == y.m; }
};

enum class ClassKind { Identity, Unipotent, SplitMinusOne, Split, NonSplitI, NonSplit };

/// Conjugacy class of PGL(2,q). param is the canonical exponent:
/// Split: s with x = generator_q^s, min over {s, q-1-s}, in [1, (q-3)/2].
/// NonSplit: j with r in generator_q2^j GF(q)^*, min over {j, q+1-j}, in [1, (q-1)/2].
/// SplitMinusOne and NonSplitI carry (q-1)/2 and (q+1)/2; the rest carry 0.
struct ClassLabel {
  ClassKind kind = ClassKind::Identity;
  int param = 0;
  friend auto operator<=>(const ClassLabel&, const ClassLabel&) = default;
};

std::string to_string(const ClassLabel& label);

enum class Which { PGL, PSL };

class ProjectiveGroup {
 public:
  explicit ProjectiveGroup(std::shared_ptr<const FieldCtx> ctx);

  const FieldCtx& field() const { return *ctx_; }
  std::shared_ptr<const FieldCtx> field_ptr() const { return ctx_; }
  int q() const { return ctx_->q(); }

  /// Throws InvalidArgument when ad - bc = 0.
  GroupElement make(FqElem a, FqElem b, FqElem c, FqElem d) const;
  GroupElement identity() const;
  GroupElement mul(const GroupElement& g, const GroupElement& h) const;
  GroupElement inverse(const GroupElement& g) const;
  FqElem det(const GroupElement& g) const;

  ProjPoint act(ProjPoint pt, const GroupElement& g) const;

  // Points, ordered Finite(0) < ... < Finite(q-1) < Infinity.
  int num_points() const { return q() + 1; }
  int point_index(ProjPoint pt) const { return pt.is_infinity() ? q() : static_cast<int>(pt.code); }
  ProjPoint point_at(int idx) const {
    return idx == q() ? ProjPoint::infinity() : ProjPoint{static_cast<uint32_t>(idx)};
  }

  /// PGL(2,q) elements in a fixed order; PSL indices are a subsequence.
  const std::vector<GroupElement>& pgl() const { return pgl_; }
  const std::vector<int>& psl_indices() const { return psl_idx_; }
  std::vector<GroupElement> elements(Which which) const;
  /// Position of g in pgl(). g must be normalized.
  int index_of(const GroupElement& g) const;
  /// Point images of pgl()[idx], indexed by point index.
  std::span<const uint16_t> permutation(int idx) const {
    return {perm_.data() + static_cast<size_t>(idx) * num_points(), static_cast<size_t>(num_points())};
  }

  ClassLabel classify(const GroupElement& g) const;
  /// All class labels in canonical order.
  const std::vector<ClassLabel>& class_labels() const { return labels_; }
  long class_size(const ClassLabel& label) const;
  /// Explicit representative: I, u, d_x, v_r.
  GroupElement class_representative(const ClassLabel& label) const;
  /// +1 when the representative lies in PSL(2,q), else -1.
  int delta(const ClassLabel& label) const;

  int fixed_point_count(const GroupElement& g) const;
  bool is_derangement(const GroupElement& g) const { return fixed_point_count(g) == 0; }

  /// The unique element with 0 -> 0, 1 -> infinity, infinity -> 1.
  GroupElement element_h() const;
  /// The unique element with 0 -> x0, infinity -> xinf, 1 -> x1.
  /// Throws InvalidConstraint unless the three images are distinct.
  GroupElement element_by_triple(ProjPoint x0, ProjPoint xinf, ProjPoint x1) const;
  /// Elements of the chosen group sending each source to its target, in
  /// pgl() order. 1-3 pairs with distinct sources and distinct targets.
  std::vector<GroupElement> elements_with_constraints(std::span<const std::pair<ProjPoint, ProjPoint>> pairs,
                                                      Which which) const;

 private:
  GroupElement normalize(std::array<FqElem, 4> m) const;
  uint32_t key(const GroupElement& g) const;
  std::pair<FqElem, FqElem> vec(ProjPoint pt) const;

  std::shared_ptr<const FieldCtx> ctx_;
  std::vector<GroupElement> pgl_;
  std::vector<int> psl_idx_;
  std::vector<int32_t> index_;
  std::vector<uint16_t> perm_;
  std::vector<ClassLabel> labels_;
};

}  // namespace pslekr
