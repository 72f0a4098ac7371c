#include "pslekr/char_table.hpp"

#include <algorithm>

#include "pslekr/error.hpp"

namespace pslekr {

std::string to_string(CharKind kind) {
  switch (kind) {
    case CharKind::Lambda1: return "lambda_1";
    case CharKind::LambdaMinus1: return "lambda_-1";
    case CharKind::Psi1: return "psi_1";
    case CharKind::PsiMinus1: return "psi_-1";
    case CharKind::Eta: return "eta_beta";
    case CharKind::Nu: return "nu_gamma";
  }
  return "?";
}

int IrreducibleChar::degree(int q) const {
  switch (kind) {
    case CharKind::Lambda1:
    case CharKind::LambdaMinus1: return 1;
    case CharKind::Psi1:
    case CharKind::PsiMinus1: return q;
    case CharKind::Eta: return q - 1;
    case CharKind::Nu: return q + 1;
  }
  return 0;
}

std::string IrreducibleChar::name() const {
  if (kind == CharKind::Eta || kind == CharKind::Nu) return to_string(kind) + "[" + std::to_string(param) + "]";
  return to_string(kind);
}

std::vector<IrreducibleChar> CharTable::irreducibles(const FieldCtx& ctx) {
  std::vector<IrreducibleChar> out = {
      {CharKind::Lambda1, 0}, {CharKind::LambdaMinus1, 0}, {CharKind::Psi1, 0}, {CharKind::PsiMinus1, 0}};
  for (const auto& beta : enumerate_beta_set(ctx)) out.push_back({CharKind::Eta, beta.exponent});
  for (const auto& gamma : enumerate_gamma_set(ctx)) out.push_back({CharKind::Nu, gamma.exponent});
  return out;
}

CharTable::CharTable(const ProjectiveGroup& group)
    : group_(group), m_(group.field().char_conductor()), rows_(irreducibles(group.field())) {
  for (const auto& label : labels()) {
    sizes_.push_back(group_.class_size(label));
    delta_.push_back(group_.delta(label));
  }
  for (const auto& chi : rows_) {
    ClassFunction row;
    for (const auto& label : labels()) row.push_back(entry(chi, label));
    values_.push_back(std::move(row));
  }
}

size_t CharTable::class_index(const ClassLabel& label) const {
  auto it = std::find(labels().begin(), labels().end(), label);
  if (it == labels().end()) throw Error(ErrorKind::InvalidArgument, "unknown class label " + to_string(label));
  return static_cast<size_t>(it - labels().begin());
}

const ClassFunction& CharTable::row(const IrreducibleChar& chi) const {
  auto it = std::find(rows_.begin(), rows_.end(), chi);
  if (it == rows_.end()) throw Error(ErrorKind::InvalidArgument, "character not in table: " + chi.name());
  return values_[it - rows_.begin()];
}

CycNum CharTable::entry(const IrreducibleChar& chi, const ClassLabel& label) const {
  const int q = group_.q();
  const int m = m_;
  const int delta = delta_[class_index(label)];
  auto n = [m](long v) { return CycNum::from_int(v, m); };
  const bool split = label.kind == ClassKind::Split || label.kind == ClassKind::SplitMinusOne;
  const bool nonsplit = label.kind == ClassKind::NonSplit || label.kind == ClassKind::NonSplitI;
  const bool trivial = label.kind == ClassKind::Identity;

  switch (chi.kind) {
    case CharKind::Lambda1: return n(1);
    case CharKind::LambdaMinus1: return n(delta);
    case CharKind::Psi1:
      if (trivial) return n(q);
      if (label.kind == ClassKind::Unipotent) return n(0);
      return n(split ? 1 : -1);
    case CharKind::PsiMinus1:
      if (trivial) return n(q);
      if (label.kind == ClassKind::Unipotent) return n(0);
      return n(split ? delta : -delta);
    case CharKind::Eta: {
      if (trivial) return n(q - 1);
      if (label.kind == ClassKind::Unipotent) return n(-1);
      if (split) return n(0);
      const long step = m / (q + 1);
      const long k = static_cast<long>(label.param) * chi.param * step;
      return -(CycNum::root_of_unity(m, k) + CycNum::root_of_unity(m, -k));
    }
    case CharKind::Nu: {
      if (trivial) return n(q + 1);
      if (label.kind == ClassKind::Unipotent) return n(1);
      if (nonsplit) return n(0);
      const long step = m / (q - 1);
      const long k = static_cast<long>(label.param) * chi.param * step;
      return CycNum::root_of_unity(m, k) + CycNum::root_of_unity(m, -k);
    }
  }
  return n(0);
}

CycNum CharTable::char_value(const IrreducibleChar& chi, const GroupElement& g) const {
  return row(chi)[class_index(group_.classify(g))];
}

CycNum CharTable::inner_product(const ClassFunction& f1, const ClassFunction& f2) const {
  if (f1.size() != sizes_.size() || f2.size() != sizes_.size())
    throw Error(ErrorKind::DomainMismatch, "class functions must cover every class");
  CycNum total = CycNum::from_int(0, m_);
  for (size_t i = 0; i < sizes_.size(); ++i) total += f1[i] * f2[i].conj() * Rational(sizes_[i]);
  const long q = group_.q();
  return total / Rational(q * q * q - q);
}

ClassFunction CharTable::permutation_character_pi() const {
  ClassFunction out;
  for (const auto& label : labels()) {
    const long f = group_.fixed_point_count(group_.class_representative(label));
    out.push_back(CycNum::from_int(f * (f - 1), m_));
  }
  return out;
}

}  // namespace pslekr
