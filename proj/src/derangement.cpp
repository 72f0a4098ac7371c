#include "pslekr/derangement.hpp"

#include <cmath>
#include <stdexcept>

#include <gmpxx.h>

#include "pslekr/charsums.hpp"
#include "pslekr/error.hpp"

namespace pslekr {

int OmegaIndex::index(int a, int b) const {
  if (a < 0 || b < 0 || a > q_ || b > q_ || a == b)
    throw Error(ErrorKind::NotInOmega, "(" + std::to_string(a) + "," + std::to_string(b) + ") is not in Omega");
  return a * q_ + (b < a ? b : b - 1);
}

std::pair<int, int> OmegaIndex::pair_at(int idx) const {
  const int a = idx / q_;
  int b = idx % q_;
  if (b >= a) ++b;
  return {a, b};
}

IntMatrix DerangementMatrix::dense() const {
  IntMatrix out(static_cast<int>(ones.size()), cols);
  for (size_t i = 0; i < ones.size(); ++i) {
    for (int c : ones[i]) out.at(static_cast<int>(i), c) = 1;
  }
  return out;
}

DerangementMatrix build_M(const ProjectiveGroup& group) {
  const int q = group.q();
  const int n = group.num_points();
  const OmegaIndex omega(q);
  DerangementMatrix out;
  out.q = q;
  out.cols = omega.size();
  for (int idx : group.psl_indices()) {
    const auto perm = group.permutation(idx);
    bool fixes = false;
    for (int x = 0; x < n && !fixes; ++x) fixes = perm[x] == x;
    if (fixes) continue;
    std::vector<int> cols;
    for (int x = 0; x < n; ++x) cols.push_back(omega.index(x, perm[x]));
    out.row_elements.push_back(idx);
    out.ones.push_back(std::move(cols));
  }
  return out;
}

IntMatrix build_N_bruteforce(const DerangementMatrix& m) {
  IntMatrix out(m.cols, m.cols);
  for (const auto& row : m.ones) {
    for (int i : row) {
      for (int j : row) ++out.at(i, j);
    }
  }
  return out;
}

namespace {

long rational_to_long(const Rational& r, const char* what) {
  Rational c = r;
  c.canonicalize();
  if (c.get_den() != 1) throw std::logic_error(std::string(what) + " is not an integer: " + c.get_str());
  return c.get_num().get_si();
}

long swap_entry(int q) { return q % 4 == 1 ? 0 : (q - 1) / 2; }

long entry_zero_inf_one_zero(int q) { return q % 4 == 1 ? (q - 1) / 4 : (q - 3) / 4; }

// N_{(0,inf),(1,d)} for d not in {0, 1, inf}.
long entry_zero_inf_one_d(const FieldCtx& F, FqElem d) {
  const long q = F.q();
  const CycNum p_phi = legendre_sum(F, quadratic_char(F), F.sub(F.add(d, d), F.one()));
  Rational v = Rational(q - 1) / 4 - Rational(legendre_symbol(F, F.sub(F.one(), d)), 2) -
               Rational(q, 4) * p_phi.rational_value();
  return rational_to_long(v, "N entry");
}

}  // namespace

long closed_form_N_entry(const ProjectiveGroup& group, std::pair<int, int> ab, std::pair<int, int> cd) {
  const int q = group.q();
  const OmegaIndex omega(q);
  omega.index(ab.first, ab.second);
  omega.index(cd.first, cd.second);
  const auto [a, b] = ab;
  const auto [c, d] = cd;
  if (a == c && b == d) return static_cast<long>(q - 1) * (q - 1) / 4;
  if (a == c || b == d) return 0;
  if (a == d && b == c) return swap_entry(q);
  if (c == b) return closed_form_N_entry(group, cd, ab);
  // c is outside {a, b}: move (a, b, c) to (0, inf, 1).
  const GroupElement k_inv = group.element_by_triple(group.point_at(a), group.point_at(b), group.point_at(c));
  const GroupElement k = group.inverse(k_inv);
  const ProjPoint dk = group.act(group.point_at(d), k);
  if (dk == ProjPoint::finite(group.field().zero())) return entry_zero_inf_one_zero(q);
  return entry_zero_inf_one_d(group.field(), dk.value());
}

IntMatrix closed_form_N(const ProjectiveGroup& group) {
  const OmegaIndex omega(group.q());
  IntMatrix out(omega.size(), omega.size());
  for (int i = 0; i < omega.size(); ++i) {
    for (int j = i; j < omega.size(); ++j) {
      const long v = closed_form_N_entry(group, omega.pair_at(i), omega.pair_at(j));
      out.at(i, j) = v;
      out.at(j, i) = v;
    }
  }
  return out;
}

int exact_rank(const IntMatrix& a) {
  const int rows = a.rows;
  const int cols = a.cols;
  std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m[i][j] = a.at(i, j);
  }
  mpz_class prev = 1;
  mpz_class t;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    // Pivot: the nonzero entry of smallest magnitude in the column.
    int piv = -1;
    for (int i = rank; i < rows; ++i) {
      if (sgn(m[i][c]) == 0) continue;
      if (piv < 0 || mpz_cmpabs(m[i][c].get_mpz_t(), m[piv][c].get_mpz_t()) < 0) piv = i;
    }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    const std::vector<mpz_class>& pr = m[rank];
    const mpz_class& p = pr[c];
    for (int i = rank + 1; i < rows; ++i) {
      std::vector<mpz_class>& row = m[i];
      const mpz_class f = row[c];
      for (int j = c + 1; j < cols; ++j) {
        mpz_mul(t.get_mpz_t(), row[j].get_mpz_t(), p.get_mpz_t());
        if (sgn(f) != 0) mpz_submul(t.get_mpz_t(), f.get_mpz_t(), pr[j].get_mpz_t());
        mpz_divexact(row[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      row[c] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

KernelVectors kernel_vectors(const ProjectiveGroup& group) {
  const int n = group.num_points();
  const OmegaIndex omega(group.q());
  KernelVectors out;
  for (int idx = 0; idx < omega.size(); ++idx) {
    const auto [a, b] = omega.pair_at(idx);
    std::vector<long> l(omega.size(), 0), r(omega.size(), 0);
    for (int p = 0; p < n; ++p) {
      if (p == a || p == b) continue;
      l[omega.index(a, p)] += 1;
      l[omega.index(b, p)] -= 1;
      r[omega.index(p, a)] += 1;
      r[omega.index(p, b)] -= 1;
    }
    l[omega.index(a, b)] += 1;
    l[omega.index(b, a)] -= 1;
    r[omega.index(b, a)] += 1;
    r[omega.index(a, b)] -= 1;
    out.pairs.push_back({a, b});
    out.l.push_back(std::move(l));
    out.r.push_back(std::move(r));
  }
  return out;
}

namespace {

void require_target(const IrreducibleChar& chi, bool allow_lambda1) {
  const bool ok = chi.kind == CharKind::PsiMinus1 || chi.kind == CharKind::Eta || chi.kind == CharKind::Nu ||
                  (allow_lambda1 && chi.kind == CharKind::Lambda1);
  if (!ok) throw Error(ErrorKind::UnsupportedCharacter, chi.name() + " is outside the target set");
}

CycNum zero_of(const CharTable& table) { return CycNum::from_int(0, table.group().field().char_conductor()); }

}  // namespace

CycNum t_n_chi_direct(const CharTable& table, const IrreducibleChar& chi, const IntMatrix& n) {
  require_target(chi, true);
  const ProjectiveGroup& G = table.group();
  const OmegaIndex omega(G.q());
  const int zero = 0;
  const int inf = G.q();
  const int row = omega.index(zero, inf);
  const ClassFunction& values = table.row(chi);
  // Weight per class of g^-1.
  std::vector<long> weight(values.size(), 0);
  for (size_t i = 0; i < G.pgl().size(); ++i) {
    const auto perm = G.permutation(static_cast<int>(i));
    const long entry = n.at(row, omega.index(perm[zero], perm[inf]));
    if (entry == 0) continue;
    weight[table.class_index(G.classify(G.inverse(G.pgl()[i])))] += entry;
  }
  CycNum total = zero_of(table);
  for (size_t c = 0; c < values.size(); ++c) {
    if (weight[c] != 0) total += values[c] * Rational(weight[c]);
  }
  return total;
}

CycNum restricted_char_sum(const CharTable& table, const IrreducibleChar& chi, RestrictedConstraint constraint,
                           bool use_inverse) {
  const ProjectiveGroup& G = table.group();
  const FieldCtx& F = G.field();
  const ProjPoint zero = ProjPoint::finite(F.zero());
  const ProjPoint one = ProjPoint::finite(F.one());
  const ProjPoint inf = ProjPoint::infinity();
  std::vector<std::pair<ProjPoint, ProjPoint>> pairs;
  if (constraint.kind == RestrictedConstraint::Kind::SwapZeroInfinity) {
    pairs = {{zero, inf}, {inf, zero}};
  } else {
    if (constraint.d.v == 0 || constraint.d == F.one() || constraint.d.v >= static_cast<uint32_t>(F.q()))
      throw Error(ErrorKind::InvalidConstraint, "d must lie in F_q outside {0, 1}");
    pairs = {{zero, inf}, {one, ProjPoint::finite(constraint.d)}};
  }
  CycNum total = zero_of(table);
  for (const auto& g : G.elements_with_constraints(pairs, Which::PGL)) {
    total += table.char_value(chi, use_inverse ? G.inverse(g) : g);
  }
  return total;
}

CycNum restricted_char_sum_closed(const CharTable& table, const IrreducibleChar& chi,
                                  RestrictedConstraint constraint) {
  require_target(chi, false);
  const FieldCtx& F = table.group().field();
  const long q = F.q();
  const int m = F.char_conductor();
  const FqElem minus_one = F.neg(F.one());
  if (constraint.kind == RestrictedConstraint::Kind::SwapZeroInfinity) {
    switch (chi.kind) {
      case CharKind::PsiMinus1: return CycNum::from_int(legendre_symbol(F, minus_one) * (q - 1), m);
      case CharKind::Nu: return char_eval(F, char_fq(F, chi.param), minus_one) * Rational(q - 1);
      default: return char_eval(F, char_b(F, chi.param), F.i_elem()) * Rational(-(q - 1));
    }
  }
  if (constraint.d.v == 0 || constraint.d == F.one())
    throw Error(ErrorKind::InvalidConstraint, "d must lie in F_q outside {0, 1}");
  const FqElem arg = F.sub(F.add(constraint.d, constraint.d), F.one());
  switch (chi.kind) {
    case CharKind::PsiMinus1: return legendre_sum(F, quadratic_char(F), arg) * Rational(q);
    case CharKind::Nu: return legendre_sum(F, char_fq(F, chi.param), arg) * Rational(q);
    default: return soto_andrade_sum(F, char_b(F, chi.param), arg) * Rational(-q);
  }
}

CycNum t_n_chi_assembled(const CharTable& table, const IrreducibleChar& chi) {
  require_target(chi, false);
  const ProjectiveGroup& G = table.group();
  const FieldCtx& F = G.field();
  const long q = F.q();
  const GroupElement h = G.element_h();
  const int zero = 0;
  const int inf = G.q();

  CycNum total = CycNum::from_rational(Rational((q - 1) * (q - 1) * (q - 1), 4), F.char_conductor());
  const Rational swap_coeff = q % 4 == 1 ? Rational(-(q - 1)) / 2 : Rational(1);
  total += restricted_char_sum(table, chi, RestrictedConstraint::swap()) * swap_coeff;

  CycNum inner = zero_of(table);
  for (const FqElem b : F.elements()) {
    if (b.v == 0 || b == F.one()) continue;
    const ProjPoint bh = G.act(ProjPoint::finite(b), h);
    const long n_entry = closed_form_N_entry(G, {zero, inf}, {1, G.point_index(ProjPoint::finite(b))});
    if (n_entry == 0) continue;
    inner += restricted_char_sum(table, chi, RestrictedConstraint::one_to(bh.value())) * Rational(n_entry);
  }
  total += inner * Rational(q - 1);
  return total;
}

ClosedForms t_n_chi_closed_forms(const CharTable& table, const IrreducibleChar& chi) {
  require_target(chi, true);
  const ProjectiveGroup& G = table.group();
  const FieldCtx& F = G.field();
  const long q = F.q();
  const int m = F.char_conductor();
  if (chi.kind == CharKind::Lambda1) {
    const CycNum v = CycNum::from_int((q - 1) * (q + 1) * (q - 1) * (q - 1) / 4, m);
    return {v, v};
  }
  const FqElem minus_one = F.neg(F.one());
  const int phi_m1 = legendre_symbol(F, minus_one);
  const int phi_2 = legendre_symbol(F, F.from_int(2));
  const GroupElement h = G.element_h();
  const L2Function p_phi = legendre_function(F, quadratic_char(F));
  L2Function other;
  switch (chi.kind) {
    case CharKind::PsiMinus1: other = p_phi; break;
    case CharKind::Nu: other = legendre_function(F, char_fq(F, chi.param)); break;
    default: other = soto_andrade_function(F, char_b(F, chi.param)); break;
  }
  // sum_{b != 0, 1} other(2 b^h - 1) P_phi(2b - 1)
  CycNum products = CycNum::from_int(0, m);
  for (const FqElem b : F.elements()) {
    if (b.v == 0 || b == F.one()) continue;
    const FqElem bh = G.act(ProjPoint::finite(b), h).value();
    const FqElem x1 = F.sub(F.add(bh, bh), F.one());
    const FqElem x2 = F.sub(F.add(b, b), F.one());
    products += other[x1.v] * p_phi[x2.v];
  }
  const CycNum inner_f = l2_inner(F, f_function(F), other) * Rational(phi_2);
  const Rational quarter = Rational(q - 1) / 4;
  const Rational q2(q * q);

  ClosedForms out;
  switch (chi.kind) {
    case CharKind::PsiMinus1:
      out.product_form = (CycNum::from_int(q * q - 2 * q - 3, m) - products * q2) * quarter;
      out.f_form = (CycNum::from_int(q * q - q - 2, m) - inner_f * q2) * quarter;
      break;
    case CharKind::Nu: {
      const CycNum g_m1 = char_eval(F, char_fq(F, chi.param), minus_one);
      out.product_form =
          (CycNum::from_int(q * q - 3 * q, m) - g_m1 * Rational((q + 1) * phi_m1) - products * q2) * quarter;
      out.f_form = (CycNum::from_rational(Rational(q - 3) / q, m) - inner_f) * (q2 * quarter);
      break;
    }
    default: {
      const CycNum b_i = char_eval(F, char_b(F, chi.param), F.i_elem());
      out.product_form =
          (CycNum::from_int(q * q + q, m) + b_i * Rational((q + 1) * phi_m1) + products * q2) * quarter;
      out.f_form = (CycNum::from_rational(Rational(q + 1, q), m) + inner_f) * (q2 * quarter);
      break;
    }
  }
  return out;
}

CycNum t_n_chi_closed(const CharTable& table, const IrreducibleChar& chi) {
  ClosedForms forms = t_n_chi_closed_forms(table, chi);
  if (forms.product_form != forms.f_form)
    throw std::logic_error("closed forms of T_{N," + chi.name() + "} disagree");
  return forms.product_form;
}

bool f_rbeta_coefficient_bounded(const FieldCtx& ctx, MultCharB beta) {
  const long q = ctx.q();
  const CycNum c = l2_inner(ctx, f_function(ctx), soto_andrade_function(ctx, beta));
  const double v = c.to_complex().real();
  const double err = c.embedding_error_bound();
  const double bound = static_cast<double>(q + 1) / static_cast<double>(q);
  // (|v| + err)^2 <= bound guarantees the exact square is within bound.
  return (std::fabs(v) + err) * (std::fabs(v) + err) <= bound;
}

RankTheoremReport verify_rank_theorem(const ProjectiveGroup& group, int max_q) {
  const int q = group.q();
  if (q == 3) throw Error(ErrorKind::InvalidArgument, "rank formula q(q-1) needs q >= 5");
  if (q > max_q) throw Error(ErrorKind::BudgetExceeded, "rank verification limited to q <= " + std::to_string(max_q));
  RankTheoremReport rep;
  rep.q = q;
  rep.expected_rank = q * (q - 1);
  const DerangementMatrix m = build_M(group);
  const IntMatrix n = build_N_bruteforce(m);
  rep.rank = exact_rank(m.dense());
  rep.rank_n = exact_rank(n);

  const CharTable table(group);
  for (const auto& chi : table.rows()) {
    if (chi.kind == CharKind::Psi1 || chi.kind == CharKind::LambdaMinus1) continue;
    CharacterResult res;
    res.chi = chi;
    res.t_value = t_n_chi_direct(table, chi, n);
    res.nonzero = !res.t_value.is_zero();
    if (res.nonzero) rep.dimension_sum += chi.degree(q);
    if (!res.nonzero && rep.first_failure.empty()) rep.first_failure = "T_{N," + chi.name() + "} vanishes";
    rep.characters.push_back(std::move(res));
  }
  if (rep.first_failure.empty() && rep.rank != rep.rank_n) rep.first_failure = "rank(M) differs from rank(N)";
  if (rep.first_failure.empty() && rep.rank != rep.expected_rank) rep.first_failure = "rank(M) differs from q(q-1)";
  if (rep.first_failure.empty() && rep.dimension_sum != rep.expected_rank)
    rep.first_failure = "dimension ledger differs from q(q-1)";
  rep.pass = rep.first_failure.empty();
  return rep;
}

}  // namespace pslekr
