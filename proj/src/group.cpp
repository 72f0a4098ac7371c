#include "pslekr/group.hpp"

#include <set>

#include "pslekr/error.hpp"

namespace pslekr {

std::string to_string(ProjPoint pt) { return pt.is_infinity() ? std::string("inf") : std::to_string(pt.code); }

std::string to_string(const ClassLabel& label) {
  switch (label.kind) {
    case ClassKind::Identity: return "I";
    case ClassKind::Unipotent: return "u";
    case ClassKind::SplitMinusOne: return "d_-1";
    case ClassKind::Split: return "d_x(" + std::to_string(label.param) + ")";
    case ClassKind::NonSplitI: return "v_i";
    case ClassKind::NonSplit: return "v_r(" + std::to_string(label.param) + ")";
  }
  return "?";
}

ProjectiveGroup::ProjectiveGroup(std::shared_ptr<const FieldCtx> ctx) : ctx_(std::move(ctx)) {
  const FieldCtx& F = *ctx_;
  const int q = F.q();
  const auto elems = F.elements();

  index_.assign(static_cast<size_t>(q) * q * q * q, -1);
  auto push = [&](FqElem a, FqElem b, FqElem c, FqElem d) {
    GroupElement g;
    g.m = {a, b, c, d};
    g.in_psl = F.is_square(det(g));
    index_[key(g)] = static_cast<int32_t>(pgl_.size());
    if (g.in_psl) psl_idx_.push_back(static_cast<int>(pgl_.size()));
    pgl_.push_back(g);
  };
  // a = 0 forces b = 1 after normalization.
  for (FqElem c : elems) {
    if (c.v == 0) continue;
    for (FqElem d : elems) push(F.zero(), F.one(), c, d);
  }
  for (FqElem b : elems) {
    for (FqElem c : elems) {
      for (FqElem d : elems) {
        if (F.sub(d, F.mul(b, c)).v != 0) push(F.one(), b, c, d);
      }
    }
  }

  const int n = num_points();
  perm_.resize(pgl_.size() * n);
  for (size_t i = 0; i < pgl_.size(); ++i) {
    for (int x = 0; x < n; ++x) perm_[i * n + x] = static_cast<uint16_t>(point_index(act(point_at(x), pgl_[i])));
  }

  labels_.push_back({ClassKind::Identity, 0});
  labels_.push_back({ClassKind::Unipotent, 0});
  labels_.push_back({ClassKind::SplitMinusOne, (q - 1) / 2});
  for (int s = 1; 2 * s < q - 1; ++s) labels_.push_back({ClassKind::Split, s});
  labels_.push_back({ClassKind::NonSplitI, (q + 1) / 2});
  for (int j = 1; 2 * j < q + 1; ++j) labels_.push_back({ClassKind::NonSplit, j});
}

uint32_t ProjectiveGroup::key(const GroupElement& g) const {
  const uint32_t q = static_cast<uint32_t>(this->q());
  return ((g.m[0].v * q + g.m[1].v) * q + g.m[2].v) * q + g.m[3].v;
}

GroupElement ProjectiveGroup::normalize(std::array<FqElem, 4> m) const {
  const FieldCtx& F = *ctx_;
  FqElem lead = m[0].v != 0 ? m[0] : m[1];
  if (lead.v == 0) throw Error(ErrorKind::InvalidArgument, "singular matrix");
  if (lead != F.one()) {
    const FqElem s = F.inv(lead);
    for (auto& x : m) x = F.mul(x, s);
  }
  GroupElement g;
  g.m = m;
  const FqElem dt = det(g);
  if (dt.v == 0) throw Error(ErrorKind::InvalidArgument, "singular matrix");
  g.in_psl = F.is_square(dt);
  return g;
}

FqElem ProjectiveGroup::det(const GroupElement& g) const {
  const FieldCtx& F = *ctx_;
  return F.sub(F.mul(g.a(), g.d()), F.mul(g.b(), g.c()));
}

GroupElement ProjectiveGroup::make(FqElem a, FqElem b, FqElem c, FqElem d) const { return normalize({a, b, c, d}); }

GroupElement ProjectiveGroup::identity() const { return make(ctx_->one(), ctx_->zero(), ctx_->zero(), ctx_->one()); }

GroupElement ProjectiveGroup::mul(const GroupElement& g, const GroupElement& h) const {
  const FieldCtx& F = *ctx_;
  auto dot = [&](FqElem x, FqElem y, FqElem z, FqElem w) { return F.add(F.mul(x, y), F.mul(z, w)); };
  return normalize({dot(g.a(), h.a(), g.b(), h.c()), dot(g.a(), h.b(), g.b(), h.d()), dot(g.c(), h.a(), g.d(), h.c()),
                    dot(g.c(), h.b(), g.d(), h.d())});
}

GroupElement ProjectiveGroup::inverse(const GroupElement& g) const {
  const FieldCtx& F = *ctx_;
  return normalize({g.d(), F.neg(g.b()), F.neg(g.c()), g.a()});
}

ProjPoint ProjectiveGroup::act(ProjPoint pt, const GroupElement& g) const {
  const FieldCtx& F = *ctx_;
  FqElem x, y;
  if (pt.is_infinity()) {
    x = g.c();
    y = g.d();
  } else {
    const FqElem t = pt.value();
    x = F.add(g.a(), F.mul(t, g.c()));
    y = F.add(g.b(), F.mul(t, g.d()));
  }
  if (x.v == 0) return ProjPoint::infinity();
  return ProjPoint::finite(F.div(y, x));
}

std::vector<GroupElement> ProjectiveGroup::elements(Which which) const {
  if (which == Which::PGL) return pgl_;
  std::vector<GroupElement> out;
  out.reserve(psl_idx_.size());
  for (int i : psl_idx_) out.push_back(pgl_[i]);
  return out;
}

int ProjectiveGroup::index_of(const GroupElement& g) const {
  const int32_t i = index_[key(g)];
  if (i < 0) throw Error(ErrorKind::InvalidArgument, "matrix is not a normalized group element");
  return i;
}

ClassLabel ProjectiveGroup::classify(const GroupElement& g) const {
  const FieldCtx& F = *ctx_;
  const int q = F.q();
  if (g == identity()) return {ClassKind::Identity, 0};
  const FqElem tr = F.add(g.a(), g.d());
  const FqElem dt = det(g);
  const FqElem disc = F.sub(F.mul(tr, tr), F.mul(F.from_int(4), dt));
  if (disc.v == 0) return {ClassKind::Unipotent, 0};
  const FqElem half = F.inv(F.from_int(2));
  if (auto root = F.sqrt(disc)) {
    const FqElem l1 = F.mul(F.add(tr, *root), half);
    const FqElem l2 = F.mul(F.sub(tr, *root), half);
    int s = F.log(F.div(l1, l2));
    s = std::min(s, q - 1 - s);
    if (2 * s == q - 1) return {ClassKind::SplitMinusOne, s};
    return {ClassKind::Split, s};
  }
  const Fq2Elem r = ctx_->mul2(ctx_->add2(F.embed(tr), *F.sqrt2(F.embed(disc))), F.embed(half));
  int j = static_cast<int>(mod_floor(F.log2(r), q + 1));
  j = std::min(j, q + 1 - j);
  if (2 * j == q + 1) return {ClassKind::NonSplitI, j};
  return {ClassKind::NonSplit, j};
}

long ProjectiveGroup::class_size(const ClassLabel& label) const {
  const long q = this->q();
  switch (label.kind) {
    case ClassKind::Identity: return 1;
    case ClassKind::Unipotent: return q * q - 1;
    case ClassKind::SplitMinusOne: return q * (q + 1) / 2;
    case ClassKind::Split: return q * (q + 1);
    case ClassKind::NonSplitI: return q * (q - 1) / 2;
    case ClassKind::NonSplit: return q * (q - 1);
  }
  return 0;
}

GroupElement ProjectiveGroup::class_representative(const ClassLabel& label) const {
  const FieldCtx& F = *ctx_;
  switch (label.kind) {
    case ClassKind::Identity: return identity();
    case ClassKind::Unipotent: return make(F.one(), F.one(), F.zero(), F.one());
    case ClassKind::SplitMinusOne:
    case ClassKind::Split: return make(F.exp(label.param), F.zero(), F.zero(), F.one());
    case ClassKind::NonSplitI:
    case ClassKind::NonSplit: {
      const Fq2Elem r = F.exp2(label.param);
      return make(F.zero(), F.one(), F.neg(F.norm(r)), F.trace2(r));
    }
  }
  return identity();
}

int ProjectiveGroup::delta(const ClassLabel& label) const { return class_representative(label).in_psl ? 1 : -1; }

int ProjectiveGroup::fixed_point_count(const GroupElement& g) const {
  int n = 0;
  for (int x = 0; x < num_points(); ++x) {
    if (act(point_at(x), g) == point_at(x)) ++n;
  }
  return n;
}

std::pair<FqElem, FqElem> ProjectiveGroup::vec(ProjPoint pt) const {
  if (pt.is_infinity()) return {ctx_->zero(), ctx_->one()};
  return {ctx_->one(), pt.value()};
}

GroupElement ProjectiveGroup::element_h() const {
  return element_by_triple(ProjPoint::finite(ctx_->zero()), ProjPoint::finite(ctx_->one()), ProjPoint::infinity());
}

GroupElement ProjectiveGroup::element_by_triple(ProjPoint x0, ProjPoint xinf, ProjPoint x1) const {
  if (x0 == xinf || x0 == x1 || xinf == x1) throw Error(ErrorKind::InvalidConstraint, "images must be distinct");
  const FieldCtx& F = *ctx_;
  // Rows of g are alpha*v0 and beta*vinf with alpha*v0 + beta*vinf = v1.
  const auto [p0, q0] = vec(x0);
  const auto [pi, qi] = vec(xinf);
  const auto [p1, q1] = vec(x1);
  const FqElem D = F.sub(F.mul(p0, qi), F.mul(q0, pi));
  const FqElem alpha = F.div(F.sub(F.mul(p1, qi), F.mul(q1, pi)), D);
  const FqElem beta = F.div(F.sub(F.mul(p0, q1), F.mul(q0, p1)), D);
  return make(F.mul(alpha, p0), F.mul(alpha, q0), F.mul(beta, pi), F.mul(beta, qi));
}

std::vector<GroupElement> ProjectiveGroup::elements_with_constraints(
    std::span<const std::pair<ProjPoint, ProjPoint>> pairs, Which which) const {
  if (pairs.empty() || pairs.size() > 3) throw Error(ErrorKind::InvalidConstraint, "expected 1 to 3 point pairs");
  std::set<ProjPoint> sources, targets;
  for (const auto& [s, t] : pairs) {
    for (ProjPoint pt : {s, t}) {
      if (!pt.is_infinity() && pt.code >= static_cast<uint32_t>(q()))
        throw Error(ErrorKind::InvalidConstraint, "point outside PG(1,q)");
    }
    sources.insert(s);
    targets.insert(t);
  }
  if (sources.size() != pairs.size() || targets.size() != pairs.size())
    throw Error(ErrorKind::InvalidConstraint, "repeated source or target point");

  std::vector<GroupElement> out;
  if (pairs.size() == 3) {
    // s maps (0, inf, 1) to the sources, t to the targets.
    const GroupElement s = element_by_triple(pairs[0].first, pairs[1].first, pairs[2].first);
    const GroupElement t = element_by_triple(pairs[0].second, pairs[1].second, pairs[2].second);
    const GroupElement g = mul(inverse(s), t);
    if (which == Which::PGL || g.in_psl) out.push_back(g);
    return out;
  }
  for (size_t i = 0; i < pgl_.size(); ++i) {
    const GroupElement& g = pgl_[i];
    if (which == Which::PSL && !g.in_psl) continue;
    const auto perm = permutation(static_cast<int>(i));
    bool ok = true;
    for (const auto& [s, t] : pairs) {
      if (perm[point_index(s)] != point_index(t)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(g);
  }
  return out;
}

}  // namespace pslekr
