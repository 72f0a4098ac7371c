#pragma once

// Legendre and Soto-Andrade sums, the space l2(F_q, m), Greene's finite
// field hypergeometric functions and Katz's normalized H_q.
//
// Everything is evaluated by direct summation. Values of P, R and the
// Greene functions live in Q(zeta_m) with m = ctx.char_conductor(); Katz
// sums additionally need zeta_p and live in Q(zeta_lcm(p, q-1)).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pslekr/cyclotomic.hpp"
#include "pslekr/field.hpp"

namespace pslekr {

/// P_gamma(a) = (1/q) sum_{x != 0} gamma(x) phi(x^2 - 2ax + 1).
CycNum legendre_sum(const FieldCtx& ctx, MultCharFq gamma, FqElem a);
/// R_beta(a) = 1/(q(q-1)) sum_{r != 0} beta(r) phi((r + r^q)^2 - 2(a+1) r^(q+1)).
CycNum soto_andrade_sum(const FieldCtx& ctx, MultCharB beta, FqElem a);

/// m(x) = 1 + q [x = 1] + q [x = -1].
long measure(const FieldCtx& ctx, FqElem x);

/// A function on F_q, indexed by element index.
using L2Function = std::vector<CycNum>;

L2Function legendre_function(const FieldCtx& ctx, MultCharFq gamma);
L2Function soto_andrade_function(const FieldCtx& ctx, MultCharB beta);
/// sum_x f1(x) conj(f2(x)) m(x). Throws DomainMismatch unless both have q values.
CycNum l2_inner(const FieldCtx& ctx, const L2Function& f1, const L2Function& f2);

struct BasisElement {
  std::string name;
  L2Function values;
  /// Squared norm predicted by the closed formulas.
  Rational norm2;
};

/// P_eps - (q-1)/q, P_phi, P_gamma (gamma in Gamma), R_beta (beta in B).
std::vector<BasisElement> orthogonal_basis(const FieldCtx& ctx);

/// Greene 2F1(g0, g1; g2 | x).
CycNum greene_2f1(const FieldCtx& ctx, MultCharFq g0, MultCharFq g1, MultCharFq g2, FqElem x);
/// Greene (n+1)F(n)(A_0..A_n; B_1..B_n | x), 1 <= n <= 3.
/// Throws ArityMismatch unless |As| = |Bs| + 1 with 2 <= |As| <= 4.
CycNum greene_nfn(const FieldCtx& ctx, const std::vector<MultCharFq>& as, const std::vector<MultCharFq>& bs,
                  FqElem x);
/// The same function tabulated at every x.
std::vector<CycNum> greene_nfn_table(const FieldCtx& ctx, const std::vector<MultCharFq>& as,
                                     const std::vector<MultCharFq>& bs);

/// Katz H_q(alpha, beta; lambda) with omega the order q-1 character
/// sending generator_q^s to zeta_(q-1), s = generator_exponent (coprime to
/// q-1). Throws NotIntegralParameters unless every (q-1)*alpha and
/// (q-1)*beta is an integer.
CycNum katz_hq(const FieldCtx& ctx, const std::vector<Rational>& alpha, const std::vector<Rational>& beta,
               FqElem lambda, long generator_exponent = 1);

/// f(x) = phi(1 - x) P_phi(x).
L2Function f_function(const FieldCtx& ctx);

/// (phi(2) q^2 <f, P_gamma>, q^3 4F3(gamma, gamma^-1, phi, phi; eps, eps, eps | 1) + phi(-1) gamma(-1) q).
/// Throws TrivialCharacter for gamma = eps.
std::pair<CycNum, CycNum> f_pgamma_identity(const FieldCtx& ctx, MultCharFq gamma);

struct QuarticBoundCheck {
  CycNum value;    // q^3 4F3(...|1) + phi(-1) gamma(-1) q
  Rational abs2;   // value * conj(value)
  Rational bound2; // 4 q^3
  bool holds = false;
};

/// |q^3 4F3(gamma, gamma^-1, phi, phi; eps, eps, eps | 1) + phi(-1) gamma(-1) q|^2 <= 4 q^3, exactly.
QuarticBoundCheck quartic_bound_check(const FieldCtx& ctx, MultCharFq gamma);

}  // namespace pslekr
