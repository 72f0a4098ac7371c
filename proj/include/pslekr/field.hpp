#pragma once

// GF(q) and GF(q^2) for odd prime powers q, table driven, plus the
// multiplicative characters of both that feed every character sum.
//
// GF(q) = Z_p[t]/(modulus). An element is stored as the integer
// sum c_i p^i of its coefficient vector, so element order is the order of
// coefficient vectors read from the top coefficient down.
// GF(q^2) = GF(q)[s]/(s^2 + c1 s + c0); the pair (u, v) meaning u + v s is
// stored as u + q v.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pslekr/cyclotomic.hpp"

namespace pslekr {

struct FqElem {
  uint32_t v = 0;
  friend auto operator<=>(const FqElem&, const FqElem&) = default;
};

struct Fq2Elem {
  uint32_t v = 0;
  friend auto operator<=>(const Fq2Elem&, const Fq2Elem&) = default;
};

inline constexpr int kDefaultMaxQ = 64;

class FieldCtx {
 public:
  /// Prefer make_field_ctx(); this constructor does the work.
  FieldCtx(int p, int e, int max_q);

  int p() const { return p_; }
  int e() const { return e_; }
  int q() const { return q_; }
  int q2() const { return q_ * q_; }

  /// Monic irreducible modulus over Z_p, lowest coefficient first (size e+1).
  const std::vector<int>& modulus() const { return modulus_; }
  /// (c0, c1) with GF(q^2) = GF(q)[s]/(s^2 + c1 s + c0).
  std::pair<FqElem, FqElem> modulus2() const { return modulus2_; }
  FqElem generator_q() const { return gen_q_; }
  Fq2Elem generator_q2() const { return gen_q2_; }
  /// generator_q2^((q+1)/2): lies outside GF(q), its square inside.
  Fq2Elem i_elem() const { return i_elem_; }
  /// lcm(q-1, q+1): the conductor holding every character value used for
  /// the PGL(2,q) character table and the Legendre/Soto-Andrade sums.
  int char_conductor() const { return static_cast<int>(lcm_long(q_ - 1, q_ + 1)); }

  // GF(q)
  FqElem zero() const { return FqElem{0}; }
  FqElem one() const { return FqElem{1}; }
  FqElem from_int(long n) const { return FqElem{static_cast<uint32_t>(mod_floor(n, p_))}; }
  FqElem from_coeffs(std::span<const int> coeffs) const;
  std::vector<int> coeffs(FqElem x) const;
  std::vector<FqElem> elements() const;

  FqElem add(FqElem x, FqElem y) const { return FqElem{add_[x.v * q_ + y.v]}; }
  FqElem neg(FqElem x) const { return FqElem{neg_[x.v]}; }
  FqElem sub(FqElem x, FqElem y) const { return add(x, neg(y)); }
  FqElem mul(FqElem x, FqElem y) const;
  /// Throws DivisionByZero for x = 0.
  FqElem inv(FqElem x) const;
  FqElem div(FqElem x, FqElem y) const { return mul(x, inv(y)); }
  FqElem pow(FqElem x, long n) const;
  /// Discrete log base generator_q, in [0, q-1). Throws DivisionByZero at 0.
  int log(FqElem x) const;
  FqElem exp(long j) const { return FqElem{exp_q_[mod_floor(j, q_ - 1)]}; }
  /// True for nonzero squares.
  bool is_square(FqElem x) const { return x.v != 0 && log(x) % 2 == 0; }
  std::optional<FqElem> sqrt(FqElem x) const;
  /// Absolute trace to Z_p, in [0, p).
  int trace(FqElem x) const;

  // GF(q^2)
  Fq2Elem make2(FqElem u, FqElem v) const { return Fq2Elem{u.v + static_cast<uint32_t>(q_) * v.v}; }
  Fq2Elem embed(FqElem x) const { return Fq2Elem{x.v}; }
  FqElem re(Fq2Elem r) const { return FqElem{r.v % static_cast<uint32_t>(q_)}; }
  FqElem im(Fq2Elem r) const { return FqElem{r.v / static_cast<uint32_t>(q_)}; }
  bool in_base(Fq2Elem r) const { return im(r).v == 0; }

  Fq2Elem add2(Fq2Elem x, Fq2Elem y) const;
  Fq2Elem neg2(Fq2Elem x) const;
  Fq2Elem sub2(Fq2Elem x, Fq2Elem y) const { return add2(x, neg2(y)); }
  Fq2Elem mul2(Fq2Elem x, Fq2Elem y) const;
  Fq2Elem inv2(Fq2Elem x) const;
  Fq2Elem pow2(Fq2Elem x, long n) const;
  int log2(Fq2Elem x) const;
  Fq2Elem exp2(long j) const { return Fq2Elem{exp_q2_[mod_floor(j, q2() - 1)]}; }
  std::optional<Fq2Elem> sqrt2(Fq2Elem x) const;
  /// r -> r^q.
  Fq2Elem frobenius(Fq2Elem r) const { return pow2(r, q_); }
  /// r^(q+1), an element of GF(q).
  FqElem norm(Fq2Elem r) const;
  /// r + r^q, an element of GF(q).
  FqElem trace2(Fq2Elem r) const;

 private:
  FqElem poly_mul(FqElem x, FqElem y) const;
  Fq2Elem mul2_slow(Fq2Elem x, Fq2Elem y) const;

  int p_, e_, q_;
  std::vector<int> modulus_;
  std::pair<FqElem, FqElem> modulus2_;
  FqElem gen_q_;
  Fq2Elem gen_q2_;
  Fq2Elem i_elem_;
  std::vector<uint32_t> add_, neg_, mul_;
  std::vector<uint32_t> exp_q_;
  std::vector<int> log_q_;
  std::vector<uint32_t> exp_q2_;
  std::vector<int> log_q2_;
};

/// Deterministic field construction: modulus, modulus2 and both generators
/// are the smallest valid candidates. Throws NotOddPrime for even or
/// non-prime p and BudgetExceeded when p^e > max_q.
std::shared_ptr<const FieldCtx> make_field_ctx(int p, int e, int max_q = kDefaultMaxQ);

/// Same, from q itself. Throws NotOddPrime unless q is an odd prime power.
std::shared_ptr<const FieldCtx> make_field_ctx_for_q(int q, int max_q = kDefaultMaxQ);

/// (p, e) with q = p^e, or nullopt when q is not a prime power.
std::optional<std::pair<int, int>> prime_power_decomposition(int q);

// ---------------------------------------------------------------------------
// Multiplicative characters.

/// gamma(generator_q^j) = zeta_(q-1)^(j*exponent); gamma(0) = 0.
struct MultCharFq {
  int exponent = 0;
  int modulus = 1;  // q - 1

  bool is_trivial() const { return exponent == 0; }
  int order() const { return modulus / static_cast<int>(gcd_long(exponent, modulus)); }
  MultCharFq inverse() const { return {static_cast<int>(mod_floor(-exponent, modulus)), modulus}; }
  friend MultCharFq operator*(MultCharFq a, MultCharFq b) {
    return {static_cast<int>(mod_floor(a.exponent + b.exponent, a.modulus)), a.modulus};
  }
  friend bool operator==(const MultCharFq&, const MultCharFq&) = default;
};

/// beta(generator_q2^j) = zeta_(q+1)^(j*exponent); trivial on GF(q)^*.
struct MultCharB {
  int exponent = 0;
  int modulus = 1;  // q + 1

  bool is_trivial() const { return exponent == 0; }
  int order() const { return modulus / static_cast<int>(gcd_long(exponent, modulus)); }
  MultCharB inverse() const { return {static_cast<int>(mod_floor(-exponent, modulus)), modulus}; }
  friend bool operator==(const MultCharB&, const MultCharB&) = default;
};

MultCharFq trivial_char(const FieldCtx& ctx);
MultCharFq quadratic_char(const FieldCtx& ctx);
MultCharFq char_fq(const FieldCtx& ctx, long exponent);
MultCharB char_b(const FieldCtx& ctx, long exponent);

/// Exponent k with chi(x) = zeta_m^k, or nullopt at x = 0. m must be a
/// multiple of the character modulus.
std::optional<long> char_exponent(const FieldCtx& ctx, MultCharFq chi, FqElem x, int m);
std::optional<long> char_exponent(const FieldCtx& ctx, MultCharB chi, Fq2Elem r, int m);

/// Values in Q(zeta_m) with m = ctx.char_conductor().
CycNum char_eval(const FieldCtx& ctx, MultCharFq chi, FqElem x);
CycNum char_eval(const FieldCtx& ctx, MultCharB chi, Fq2Elem r);

/// +1, -1 or 0.
int legendre_symbol(const FieldCtx& ctx, FqElem x);

/// Characters of GF(q)^* of order > 2, one per pair {gamma, gamma^-1}, the
/// smaller exponent chosen. Size (q-3)/2. Requires q >= 5.
std::vector<MultCharFq> enumerate_gamma_set(const FieldCtx& ctx);
/// Characters of GF(q^2)^*/GF(q)^* of order > 2 up to inversion, smaller
/// exponent chosen. Size (q-1)/2.
std::vector<MultCharB> enumerate_beta_set(const FieldCtx& ctx);

/// g(chi) = sum_x chi(x) theta(x) with theta(x) = zeta_p^Tr(shift * x).
/// The result lives in Q(zeta_lcm(p, q-1)).
CycNum gauss_sum(const FieldCtx& ctx, MultCharFq chi, FqElem theta_shift);
inline CycNum gauss_sum(const FieldCtx& ctx, MultCharFq chi) { return gauss_sum(ctx, chi, ctx.one()); }
/// 1/g(chi), using g(chi) g(conj chi) = chi(-1) q for nontrivial chi and
/// g(trivial) = -1.
CycNum gauss_sum_inverse(const FieldCtx& ctx, MultCharFq chi, FqElem theta_shift);

}  // namespace pslekr
