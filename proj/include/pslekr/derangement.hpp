#pragma once

// The derangement matrix M of PSL(2,q) on ordered pairs of distinct points,
// its Gram matrix N = M^T M, exact rank, kernel vectors, and the sums
// T_{N,chi} evaluated directly, through restricted sums, and in closed form.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pslekr/char_table.hpp"
#include "pslekr/cyclotomic.hpp"
#include "pslekr/group.hpp"

namespace pslekr {

/// Omega: ordered pairs (a, b) of distinct points, ordered lexicographically
/// by point index (Finite(0) < ... < Finite(q-1) < Infinity).
class OmegaIndex {
 public:
  explicit OmegaIndex(int q) : q_(q) {}
  int size() const { return q_ * (q_ + 1); }
  /// Point indices in [0, q]. Throws NotInOmega for a = b or out of range.
  int index(int a, int b) const;
  std::pair<int, int> pair_at(int idx) const;

 private:
  int q_;
};

struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<long> data;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0) {}
  long& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
  long at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

struct DerangementMatrix {
  int q = 0;
  /// pgl() indices of the PSL derangements, one per row.
  std::vector<int> row_elements;
  /// Columns holding a one in each row: the pairs (a, a^g).
  std::vector<std::vector<int>> ones;
  int cols = 0;

  IntMatrix dense() const;
};

DerangementMatrix build_M(const ProjectiveGroup& group);
IntMatrix build_N_bruteforce(const DerangementMatrix& m);

/// N_{(a,b),(c,d)} from the case analysis, points given by index.
/// Throws NotInOmega when a pair has equal or invalid points.
long closed_form_N_entry(const ProjectiveGroup& group, std::pair<int, int> ab, std::pair<int, int> cd);
IntMatrix closed_form_N(const ProjectiveGroup& group);

/// Rank over Q by fraction-free (Bareiss) elimination on GMP integers.
int exact_rank(const IntMatrix& a);

struct KernelVectors {
  /// l[i], r[i] belong to pairs[i] = (a, b) over all of Omega.
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<long>> l;
  std::vector<std::vector<long>> r;
};

KernelVectors kernel_vectors(const ProjectiveGroup& group);

/// Sum over all of PGL(2,q) of chi(g^-1) N_{(0,inf),(0^g,inf^g)}.
/// Throws UnsupportedCharacter for psi_1 and lambda_-1.
CycNum t_n_chi_direct(const CharTable& table, const IrreducibleChar& chi, const IntMatrix& n);

struct RestrictedConstraint {
  enum class Kind { SwapZeroInfinity, ZeroToInfinityOneToD };
  Kind kind = Kind::SwapZeroInfinity;
  FqElem d{};

  static RestrictedConstraint swap() { return {Kind::SwapZeroInfinity, {}}; }
  static RestrictedConstraint one_to(FqElem d) { return {Kind::ZeroToInfinityOneToD, d}; }
};

/// Brute force sum of chi(g^-1) (or chi(g) when use_inverse is false) over
/// the q-1 elements of PGL(2,q) meeting the constraint. The second form
/// needs d not in {0, 1}; otherwise InvalidConstraint.
CycNum restricted_char_sum(const CharTable& table, const IrreducibleChar& chi, RestrictedConstraint constraint,
                           bool use_inverse = true);
/// The closed form of the same sum for psi_-1, eta_beta and nu_gamma.
CycNum restricted_char_sum_closed(const CharTable& table, const IrreducibleChar& chi,
                                  RestrictedConstraint constraint);

/// T_{N,chi} assembled from the swap sum, the sums with 0 -> inf, 1 -> b^h,
/// and closed-form entries N_{(0,inf),(1,b)}, branching on q mod 4.
CycNum t_n_chi_assembled(const CharTable& table, const IrreducibleChar& chi);

struct ClosedForms {
  /// Sums of products of Legendre / Soto-Andrade values.
  CycNum product_form;
  /// The same value through inner products with f = phi(1-x) P_phi(x).
  CycNum f_form;
};

/// Both closed forms of T_{N,chi} for psi_-1, eta_beta, nu_gamma; lambda_1
/// gets (q-1)(q+1)(q-1)^2/4 in both slots.
ClosedForms t_n_chi_closed_forms(const CharTable& table, const IrreducibleChar& chi);
/// product_form, after checking it equals f_form (throws std::logic_error).
CycNum t_n_chi_closed(const CharTable& table, const IrreducibleChar& chi);

/// <f, R_beta>^2 <= (q+1)/q, i.e. |<f, R'_beta>| <= 1, checked on the real
/// embedding with its error bound (the value is real but lives in a
/// cyclotomic field).
bool f_rbeta_coefficient_bounded(const FieldCtx& ctx, MultCharB beta);

inline constexpr int kMaxRankQ = 19;

struct CharacterResult {
  IrreducibleChar chi;
  CycNum t_value;
  bool nonzero = false;
};

struct RankTheoremReport {
  int q = 0;
  int rank = 0;
  int rank_n = 0;
  int expected_rank = 0;
  long dimension_sum = 0;
  std::vector<CharacterResult> characters;
  bool pass = false;
  /// Empty when pass.
  std::string first_failure;
};

/// Throws InvalidArgument for q = 3 and BudgetExceeded for q > max_q.
RankTheoremReport verify_rank_theorem(const ProjectiveGroup& group, int max_q = kMaxRankQ);

}  // namespace pslekr
