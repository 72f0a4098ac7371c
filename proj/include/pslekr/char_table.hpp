#pragma once

// Complex character table of PGL(2,q) with exact cyclotomic entries.
// Columns follow ProjectiveGroup::class_labels(); rows are
// lambda_1, lambda_-1, psi_1, psi_-1, eta_beta (beta in B ascending),
// nu_gamma (gamma in Gamma ascending).

#include <string>
#include <vector>

#include "pslekr/cyclotomic.hpp"
#include "pslekr/group.hpp"

namespace pslekr {

enum class CharKind { Lambda1, LambdaMinus1, Psi1, PsiMinus1, Eta, Nu };

std::string to_string(CharKind kind);

struct IrreducibleChar {
  CharKind kind = CharKind::Lambda1;
  /// Exponent of beta (Eta) or gamma (Nu); 0 otherwise.
  int param = 0;

  int degree(int q) const;
  /// e.g. "nu_gamma[2]".
  std::string name() const;
  friend bool operator==(const IrreducibleChar&, const IrreducibleChar&) = default;
};

/// Values on the classes, in class_labels() order.
using ClassFunction = std::vector<CycNum>;

class CharTable {
 public:
  /// Requires q >= 5.
  explicit CharTable(const ProjectiveGroup& group);

  const ProjectiveGroup& group() const { return group_; }
  const std::vector<IrreducibleChar>& rows() const { return rows_; }
  const std::vector<ClassLabel>& labels() const { return group_.class_labels(); }
  const std::vector<long>& sizes() const { return sizes_; }
  const ClassFunction& row(size_t i) const { return values_[i]; }
  /// Row of chi; throws InvalidArgument when chi is not in the table.
  const ClassFunction& row(const IrreducibleChar& chi) const;
  size_t class_index(const ClassLabel& label) const;

  CycNum char_value(const IrreducibleChar& chi, const GroupElement& g) const;
  /// (1/|G|) sum_classes size * f1 * conj(f2).
  CycNum inner_product(const ClassFunction& f1, const ClassFunction& f2) const;
  /// Number of fixed points on Omega (ordered pairs of distinct points),
  /// counted on each class representative.
  ClassFunction permutation_character_pi() const;

  /// Every irreducible in row order.
  static std::vector<IrreducibleChar> irreducibles(const FieldCtx& ctx);

 private:
  CycNum entry(const IrreducibleChar& chi, const ClassLabel& label) const;

  const ProjectiveGroup& group_;
  int m_;
  std::vector<IrreducibleChar> rows_;
  std::vector<long> sizes_;
  std::vector<int> delta_;
  std::vector<ClassFunction> values_;
};

}  // namespace pslekr
