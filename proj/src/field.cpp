#include "pslekr/field.hpp"

#include <string>

#include "pslekr/error.hpp"

namespace pslekr {

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Dense integer polynomials over Z_p, lowest coefficient first.
using ZpPoly = std::vector<int>;

void trim(ZpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ZpPoly poly_mod(ZpPoly a, const ZpPoly& m, int p) {
  trim(a);
  const size_t dm = m.size() - 1;
  long inv_lead = 1;
  for (long t = 1; t < p; ++t) {
    if ((t * m.back()) % p == 1) inv_lead = t;
  }
  while (a.size() > dm) {
    long c = (a.back() * inv_lead) % p;
    size_t shift = a.size() - 1 - dm;
    for (size_t j = 0; j <= dm; ++j) a[shift + j] = static_cast<int>(mod_floor(a[shift + j] - c * m[j], p));
    trim(a);
  }
  return a;
}

ZpPoly decode(uint32_t v, int p, int len) {
  ZpPoly f(len);
  for (int i = 0; i < len; ++i) {
    f[i] = static_cast<int>(v % p);
    v /= p;
  }
  return f;
}

// Exhaustive trial division by every monic polynomial of degree 1..e/2.
bool irreducible_over_zp(const ZpPoly& f, int p) {
  const int e = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= e; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long code = 0; code < count; ++code) {
      ZpPoly g = decode(static_cast<uint32_t>(code), p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<std::pair<int, int>> prime_power_decomposition(int q) {
  if (q < 2) return std::nullopt;
  auto factors = prime_factors(q);
  if (factors.size() != 1) return std::nullopt;
  int p = static_cast<int>(factors[0]);
  int e = 0;
  for (int n = q; n > 1; n /= p) ++e;
  return std::make_pair(p, e);
}

FieldCtx::FieldCtx(int p, int e, int max_q) : p_(p), e_(e), q_(1) {
  if (p == 2 || !is_prime(p)) throw Error(ErrorKind::NotOddPrime, "p = " + std::to_string(p) + " is not an odd prime");
  if (e < 1) throw Error(ErrorKind::InvalidArgument, "exponent must be >= 1");
  for (int i = 0; i < e; ++i) {
    q_ *= p;
    if (q_ > max_q) throw Error(ErrorKind::BudgetExceeded, "p^e exceeds the field budget " + std::to_string(max_q));
  }
  const int q = q_;

  // Smallest monic irreducible modulus of degree e.
  {
    bool found = false;
    for (uint32_t code = 0; code < static_cast<uint32_t>(q) && !found; ++code) {
      ZpPoly f = decode(code, p, e);
      f.push_back(1);
      if (irreducible_over_zp(f, p)) {
        modulus_ = f;
        found = true;
      }
    }
    if (!found) throw Error(ErrorKind::NotIrreducibleFound, "no irreducible modulus of degree " + std::to_string(e));
  }

  add_.resize(q * q);
  neg_.resize(q);
  mul_.resize(q * q);
  for (uint32_t x = 0; x < static_cast<uint32_t>(q); ++x) {
    ZpPoly fx = decode(x, p, e);
    ZpPoly nx(e);
    for (int i = 0; i < e; ++i) nx[i] = (p - fx[i]) % p;
    neg_[x] = from_coeffs(nx).v;
    for (uint32_t y = 0; y < static_cast<uint32_t>(q); ++y) {
      ZpPoly fy = decode(y, p, e);
      ZpPoly s(e);
      for (int i = 0; i < e; ++i) s[i] = (fx[i] + fy[i]) % p;
      add_[x * q + y] = from_coeffs(s).v;
      mul_[x * q + y] = poly_mul(FqElem{x}, FqElem{y}).v;
    }
  }

  // Smallest generator of GF(q)^*.
  const auto factors_q = prime_factors(q - 1);
  auto has_full_order = [&](auto pow_fn, auto one, long group_order, const std::vector<long>& fs) {
    for (long ell : fs) {
      if (pow_fn(group_order / ell) == one) return false;
    }
    return true;
  };
  for (uint32_t g = 1; g < static_cast<uint32_t>(q); ++g) {
    if (has_full_order([&](long n) { return pow(FqElem{g}, n); }, one(), q - 1, factors_q)) {
      gen_q_ = FqElem{g};
      break;
    }
  }
  exp_q_.resize(q - 1);
  log_q_.assign(q, -1);
  {
    FqElem x = one();
    for (int j = 0; j < q - 1; ++j) {
      exp_q_[j] = x.v;
      log_q_[x.v] = j;
      x = mul(x, gen_q_);
    }
  }

  // Smallest s^2 + c1 s + c0 without roots in GF(q); key c1*q + c0.
  {
    bool found = false;
    for (int key = 0; key < q * q && !found; ++key) {
      FqElem c0{static_cast<uint32_t>(key % q)};
      FqElem c1{static_cast<uint32_t>(key / q)};
      bool has_root = false;
      for (uint32_t t = 0; t < static_cast<uint32_t>(q) && !has_root; ++t) {
        FqElem x{t};
        if (add(add(mul(x, x), mul(c1, x)), c0).v == 0) has_root = true;
      }
      if (!has_root) {
        modulus2_ = {c0, c1};
        found = true;
      }
    }
    if (!found) throw Error(ErrorKind::NotIrreducibleFound, "no irreducible quadratic over GF(q)");
  }

  const long order2 = static_cast<long>(q) * q - 1;
  const auto factors_q2 = prime_factors(order2);
  auto slow_pow2 = [&](Fq2Elem x, long n) {
    Fq2Elem r{1};
    while (n > 0) {
      if (n & 1) r = mul2_slow(r, x);
      x = mul2_slow(x, x);
      n >>= 1;
    }
    return r;
  };
  for (uint32_t g = 1; g < static_cast<uint32_t>(q * q); ++g) {
    if (has_full_order([&](long n) { return slow_pow2(Fq2Elem{g}, n); }, Fq2Elem{1}, order2, factors_q2)) {
      gen_q2_ = Fq2Elem{g};
      break;
    }
  }
  exp_q2_.resize(order2);
  log_q2_.assign(q * q, -1);
  {
    Fq2Elem x{1};
    for (long j = 0; j < order2; ++j) {
      exp_q2_[j] = x.v;
      log_q2_[x.v] = static_cast<int>(j);
      x = mul2_slow(x, gen_q2_);
    }
  }
  i_elem_ = exp2((q + 1) / 2);
}

FqElem FieldCtx::from_coeffs(std::span<const int> coeffs) const {
  uint32_t v = 0;
  for (size_t i = coeffs.size(); i-- > 0;) v = v * p_ + static_cast<uint32_t>(mod_floor(coeffs[i], p_));
  return FqElem{v};
}

std::vector<int> FieldCtx::coeffs(FqElem x) const { return decode(x.v, p_, e_); }

std::vector<FqElem> FieldCtx::elements() const {
  std::vector<FqElem> out(q_);
  for (int i = 0; i < q_; ++i) out[i] = FqElem{static_cast<uint32_t>(i)};
  return out;
}

FqElem FieldCtx::poly_mul(FqElem x, FqElem y) const {
  ZpPoly fx = decode(x.v, p_, e_);
  ZpPoly fy = decode(y.v, p_, e_);
  ZpPoly prod(2 * e_, 0);
  for (int i = 0; i < e_; ++i) {
    for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + fx[i] * fy[j]) % p_;
  }
  ZpPoly r = poly_mod(prod, modulus_, p_);
  r.resize(e_, 0);
  return from_coeffs(r);
}

FqElem FieldCtx::mul(FqElem x, FqElem y) const { return FqElem{mul_[x.v * q_ + y.v]}; }

FqElem FieldCtx::inv(FqElem x) const {
  if (x.v == 0) throw Error(ErrorKind::DivisionByZero, "inverse of 0 in GF(" + std::to_string(q_) + ")");
  return exp(-log_q_[x.v]);
}

FqElem FieldCtx::pow(FqElem x, long n) const {
  if (x.v == 0) {
    if (n == 0) return one();
    if (n < 0) throw Error(ErrorKind::DivisionByZero, "negative power of 0");
    return zero();
  }
  if (!log_q_.empty()) return exp(static_cast<long>(log_q_[x.v]) * mod_floor(n, q_ - 1));
  FqElem r = one();
  while (n > 0) {
    if (n & 1) r = mul(r, x);
    x = mul(x, x);
    n >>= 1;
  }
  return r;
}

int FieldCtx::log(FqElem x) const {
  if (x.v == 0) throw Error(ErrorKind::DivisionByZero, "log of 0");
  return log_q_[x.v];
}

std::optional<FqElem> FieldCtx::sqrt(FqElem x) const {
  if (x.v == 0) return zero();
  int l = log(x);
  if (l % 2 != 0) return std::nullopt;
  return exp(l / 2);
}

int FieldCtx::trace(FqElem x) const {
  FqElem t = zero();
  FqElem y = x;
  for (int i = 0; i < e_; ++i) {
    t = add(t, y);
    y = pow(y, p_);
  }
  return static_cast<int>(t.v);
}

Fq2Elem FieldCtx::add2(Fq2Elem x, Fq2Elem y) const { return make2(add(re(x), re(y)), add(im(x), im(y))); }

Fq2Elem FieldCtx::neg2(Fq2Elem x) const { return make2(neg(re(x)), neg(im(x))); }

Fq2Elem FieldCtx::mul2_slow(Fq2Elem x, Fq2Elem y) const {
  // (u1 + v1 s)(u2 + v2 s) with s^2 = -c1 s - c0.
  const FqElem u1 = re(x), v1 = im(x), u2 = re(y), v2 = im(y);
  const auto [c0, c1] = modulus2_;
  const FqElem vv = mul(v1, v2);
  FqElem u = sub(mul(u1, u2), mul(vv, c0));
  FqElem v = sub(add(mul(u1, v2), mul(u2, v1)), mul(vv, c1));
  return make2(u, v);
}

Fq2Elem FieldCtx::mul2(Fq2Elem x, Fq2Elem y) const {
  if (x.v == 0 || y.v == 0) return Fq2Elem{0};
  return exp2(static_cast<long>(log_q2_[x.v]) + log_q2_[y.v]);
}

Fq2Elem FieldCtx::inv2(Fq2Elem x) const {
  if (x.v == 0) throw Error(ErrorKind::DivisionByZero, "inverse of 0 in GF(q^2)");
  return exp2(-static_cast<long>(log_q2_[x.v]));
}

Fq2Elem FieldCtx::pow2(Fq2Elem x, long n) const {
  if (x.v == 0) {
    if (n == 0) return Fq2Elem{1};
    if (n < 0) throw Error(ErrorKind::DivisionByZero, "negative power of 0");
    return Fq2Elem{0};
  }
  return exp2(static_cast<long>(log_q2_[x.v]) * mod_floor(n, q2() - 1));
}

int FieldCtx::log2(Fq2Elem x) const {
  if (x.v == 0) throw Error(ErrorKind::DivisionByZero, "log of 0");
  return log_q2_[x.v];
}

std::optional<Fq2Elem> FieldCtx::sqrt2(Fq2Elem x) const {
  if (x.v == 0) return Fq2Elem{0};
  int l = log2(x);
  if (l % 2 != 0) return std::nullopt;
  return exp2(l / 2);
}

FqElem FieldCtx::norm(Fq2Elem r) const { return re(pow2(r, q_ + 1)); }

FqElem FieldCtx::trace2(Fq2Elem r) const { return re(add2(r, frobenius(r))); }

std::shared_ptr<const FieldCtx> make_field_ctx(int p, int e, int max_q) {
  return std::make_shared<const FieldCtx>(p, e, max_q);
}

std::shared_ptr<const FieldCtx> make_field_ctx_for_q(int q, int max_q) {
  auto pe = prime_power_decomposition(q);
  if (!pe || pe->first == 2) throw Error(ErrorKind::NotOddPrime, std::to_string(q) + " is not an odd prime power");
  return make_field_ctx(pe->first, pe->second, max_q);
}

// ---------------------------------------------------------------------------

MultCharFq trivial_char(const FieldCtx& ctx) { return {0, ctx.q() - 1}; }

MultCharFq quadratic_char(const FieldCtx& ctx) { return {(ctx.q() - 1) / 2, ctx.q() - 1}; }

MultCharFq char_fq(const FieldCtx& ctx, long exponent) {
  return {static_cast<int>(mod_floor(exponent, ctx.q() - 1)), ctx.q() - 1};
}

MultCharB char_b(const FieldCtx& ctx, long exponent) {
  return {static_cast<int>(mod_floor(exponent, ctx.q() + 1)), ctx.q() + 1};
}

std::optional<long> char_exponent(const FieldCtx& ctx, MultCharFq chi, FqElem x, int m) {
  if (x.v == 0) return std::nullopt;
  if (m % chi.modulus != 0) throw Error(ErrorKind::InvalidArgument, "conductor does not contain the character values");
  long j = ctx.log(x);
  return mod_floor(j * chi.exponent, chi.modulus) * (m / chi.modulus);
}

std::optional<long> char_exponent(const FieldCtx& ctx, MultCharB chi, Fq2Elem r, int m) {
  if (r.v == 0) return std::nullopt;
  if (m % chi.modulus != 0) throw Error(ErrorKind::InvalidArgument, "conductor does not contain the character values");
  long j = ctx.log2(r);
  return mod_floor(j * chi.exponent, chi.modulus) * (m / chi.modulus);
}

CycNum char_eval(const FieldCtx& ctx, MultCharFq chi, FqElem x) {
  const int m = ctx.char_conductor();
  auto k = char_exponent(ctx, chi, x, m);
  return k ? CycNum::root_of_unity(m, *k) : CycNum::from_int(0, m);
}

CycNum char_eval(const FieldCtx& ctx, MultCharB chi, Fq2Elem r) {
  const int m = ctx.char_conductor();
  auto k = char_exponent(ctx, chi, r, m);
  return k ? CycNum::root_of_unity(m, *k) : CycNum::from_int(0, m);
}

int legendre_symbol(const FieldCtx& ctx, FqElem x) {
  if (x.v == 0) return 0;
  return ctx.is_square(x) ? 1 : -1;
}

std::vector<MultCharFq> enumerate_gamma_set(const FieldCtx& ctx) {
  if (ctx.q() < 5) throw Error(ErrorKind::InvalidArgument, "the set Gamma needs q >= 5");
  std::vector<MultCharFq> out;
  const int n = ctx.q() - 1;
  for (int k = 1; 2 * k < n; ++k) out.push_back({k, n});
  return out;
}

std::vector<MultCharB> enumerate_beta_set(const FieldCtx& ctx) {
  std::vector<MultCharB> out;
  const int n = ctx.q() + 1;
  for (int k = 1; 2 * k < n; ++k) out.push_back({k, n});
  return out;
}

CycNum gauss_sum(const FieldCtx& ctx, MultCharFq chi, FqElem theta_shift) {
  if (theta_shift.v == 0) throw Error(ErrorKind::InvalidArgument, "additive character must be nontrivial");
  const int p = ctx.p();
  const int m = static_cast<int>(lcm_long(p, ctx.q() - 1));
  CycAccumulator acc(m);
  for (const FqElem x : ctx.elements()) {
    auto k = char_exponent(ctx, chi, x, m);
    if (!k) continue;
    const long additive = static_cast<long>(ctx.trace(ctx.mul(theta_shift, x))) * (m / p);
    acc.add_root(*k + additive);
  }
  return acc.value();
}

CycNum gauss_sum_inverse(const FieldCtx& ctx, MultCharFq chi, FqElem theta_shift) {
  const int m = static_cast<int>(lcm_long(ctx.p(), ctx.q() - 1));
  if (chi.is_trivial()) return CycNum::from_int(-1, m);
  // g(chi)^-1 = chi(-1) g(conj chi) / q
  CycNum g = gauss_sum(ctx, chi.inverse(), theta_shift);
  const long sign_exp = *char_exponent(ctx, chi, ctx.neg(ctx.one()), m);
  return g.times_root(sign_exp) / Rational(ctx.q());
}

}  // namespace pslekr
