#include "pslekr/charsums.hpp"

#include "pslekr/error.hpp"

namespace pslekr {

namespace {

std::optional<long> exp_at(const FieldCtx& ctx, MultCharFq chi, FqElem x, int m) {
  return char_exponent(ctx, chi, x, m);
}

CycNum zero_value(const FieldCtx& ctx) { return CycNum::from_int(0, ctx.char_conductor()); }

}  // namespace

CycNum legendre_sum(const FieldCtx& ctx, MultCharFq gamma, FqElem a) {
  const int m = ctx.char_conductor();
  const FqElem two_a = ctx.add(a, a);
  CycAccumulator acc(m);
  for (const FqElem x : ctx.elements()) {
    if (x.v == 0) continue;
    const FqElem arg = ctx.add(ctx.sub(ctx.mul(x, x), ctx.mul(two_a, x)), ctx.one());
    const int leg = legendre_symbol(ctx, arg);
    if (leg == 0) continue;
    acc.add_root(*exp_at(ctx, gamma, x, m), leg);
  }
  return acc.value() / Rational(ctx.q());
}

CycNum soto_andrade_sum(const FieldCtx& ctx, MultCharB beta, FqElem a) {
  const int m = ctx.char_conductor();
  const FqElem two_a1 = ctx.mul(ctx.from_int(2), ctx.add(a, ctx.one()));
  CycAccumulator acc(m);
  for (uint32_t v = 1; v < static_cast<uint32_t>(ctx.q2()); ++v) {
    const Fq2Elem r{v};
    const FqElem t = ctx.trace2(r);
    const FqElem arg = ctx.sub(ctx.mul(t, t), ctx.mul(two_a1, ctx.norm(r)));
    const int leg = legendre_symbol(ctx, arg);
    if (leg == 0) continue;
    acc.add_root(*char_exponent(ctx, beta, r, m), leg);
  }
  const long q = ctx.q();
  return acc.value() / Rational(q * (q - 1));
}

long measure(const FieldCtx& ctx, FqElem x) {
  long w = 1;
  if (x == ctx.one()) w += ctx.q();
  if (x == ctx.neg(ctx.one())) w += ctx.q();
  return w;
}

L2Function legendre_function(const FieldCtx& ctx, MultCharFq gamma) {
  L2Function out;
  for (const FqElem a : ctx.elements()) out.push_back(legendre_sum(ctx, gamma, a));
  return out;
}

L2Function soto_andrade_function(const FieldCtx& ctx, MultCharB beta) {
  L2Function out;
  for (const FqElem a : ctx.elements()) out.push_back(soto_andrade_sum(ctx, beta, a));
  return out;
}

CycNum l2_inner(const FieldCtx& ctx, const L2Function& f1, const L2Function& f2) {
  const size_t q = static_cast<size_t>(ctx.q());
  if (f1.size() != q || f2.size() != q) throw Error(ErrorKind::DomainMismatch, "functions must be defined on F_q");
  CycNum total = zero_value(ctx);
  for (const FqElem x : ctx.elements()) total += f1[x.v] * f2[x.v].conj() * Rational(measure(ctx, x));
  return total;
}

std::vector<BasisElement> orthogonal_basis(const FieldCtx& ctx) {
  const long q = ctx.q();
  std::vector<BasisElement> out;
  L2Function p_eps = legendre_function(ctx, trivial_char(ctx));
  const Rational shift(q - 1, q);
  for (auto& v : p_eps) v -= CycNum::from_rational(shift, v.conductor());
  out.push_back({"P_eps-(q-1)/q", std::move(p_eps), Rational(q * q - 1, q)});
  out.push_back({"P_phi", legendre_function(ctx, quadratic_char(ctx)), Rational(q * q - 1, q * q)});
  for (const auto& gamma : enumerate_gamma_set(ctx)) {
    out.push_back({"P_gamma[" + std::to_string(gamma.exponent) + "]", legendre_function(ctx, gamma),
                   Rational(q - 1, q)});
  }
  for (const auto& beta : enumerate_beta_set(ctx)) {
    out.push_back({"R_beta[" + std::to_string(beta.exponent) + "]", soto_andrade_function(ctx, beta),
                   Rational(q + 1, q)});
  }
  for (auto& b : out) b.norm2.canonicalize();
  return out;
}

CycNum greene_2f1(const FieldCtx& ctx, MultCharFq g0, MultCharFq g1, MultCharFq g2, FqElem x) {
  const int m = ctx.char_conductor();
  if (x.v == 0) return zero_value(ctx);
  const MultCharFq ratio = g2 * g1.inverse();
  const MultCharFq g0inv = g0.inverse();
  CycAccumulator acc(m);
  for (const FqElem y : ctx.elements()) {
    auto k1 = exp_at(ctx, g1, y, m);
    if (!k1) continue;
    auto k2 = exp_at(ctx, ratio, ctx.sub(ctx.one(), y), m);
    if (!k2) continue;
    auto k3 = exp_at(ctx, g0inv, ctx.sub(ctx.one(), ctx.mul(x, y)), m);
    if (!k3) continue;
    acc.add_root(*k1 + *k2 + *k3);
  }
  const long sign = *exp_at(ctx, g1 * g2, ctx.neg(ctx.one()), m);
  return acc.value().times_root(sign) / Rational(ctx.q());
}

std::vector<CycNum> greene_nfn_table(const FieldCtx& ctx, const std::vector<MultCharFq>& as,
                                     const std::vector<MultCharFq>& bs) {
  if (as.size() != bs.size() + 1 || as.size() < 2 || as.size() > 4)
    throw Error(ErrorKind::ArityMismatch, "expected |A| = |B| + 1 with 2 <= |A| <= 4");
  const int m = ctx.char_conductor();
  const auto elems = ctx.elements();
  std::vector<CycNum> level;
  for (const FqElem x : elems) level.push_back(greene_2f1(ctx, as[0], as[1], bs[0], x));
  for (size_t n = 2; n < as.size(); ++n) {
    const MultCharFq an = as[n];
    const MultCharFq bn = bs[n - 1];
    const MultCharFq twist = an.inverse() * bn;
    const long sign = *exp_at(ctx, an * bn, ctx.neg(ctx.one()), m);
    std::vector<CycNum> next;
    for (const FqElem x : elems) {
      CycAccumulator acc(m);
      for (const FqElem y : elems) {
        auto k1 = exp_at(ctx, an, y, m);
        if (!k1) continue;
        auto k2 = exp_at(ctx, twist, ctx.sub(ctx.one(), y), m);
        if (!k2) continue;
        const CycNum& prev = level[ctx.mul(x, y).v];
        if (prev.is_zero()) continue;
        acc.add(prev, *k1 + *k2);
      }
      next.push_back(acc.value().times_root(sign) / Rational(ctx.q()));
    }
    level = std::move(next);
  }
  return level;
}

CycNum greene_nfn(const FieldCtx& ctx, const std::vector<MultCharFq>& as, const std::vector<MultCharFq>& bs,
                  FqElem x) {
  if (as.size() == 2 && bs.size() == 1) return greene_2f1(ctx, as[0], as[1], bs[0], x);
  return greene_nfn_table(ctx, as, bs)[x.v];
}

CycNum katz_hq(const FieldCtx& ctx, const std::vector<Rational>& alpha, const std::vector<Rational>& beta,
               FqElem lambda, long generator_exponent) {
  const long n = ctx.q() - 1;
  if (gcd_long(generator_exponent, n) != 1)
    throw Error(ErrorKind::InvalidArgument, "generator exponent must be coprime to q-1");
  auto scaled = [n](const Rational& r) {
    Rational t = r * n;
    t.canonicalize();
    if (t.get_den() != 1) throw Error(ErrorKind::NotIntegralParameters, "(q-1) times a parameter is not an integer");
    return t.get_num().get_si();
  };
  std::vector<long> a_int, b_int;
  for (const auto& a : alpha) a_int.push_back(scaled(a));
  for (const auto& b : beta) b_int.push_back(scaled(b));

  // omega^t = chi_{t * s^-1} where generator_q^s is the generator behind omega.
  long s_inv = 1;
  for (long t = 1; t < n; ++t) {
    if (mod_floor(t * generator_exponent, n) == 1 % n) s_inv = t;
  }
  auto omega = [&](long t) { return char_fq(ctx, t * s_inv); };

  const int mk = static_cast<int>(lcm_long(ctx.p(), n));
  std::vector<CycNum> g(n), ginv(n);
  for (long e = 0; e < n; ++e) {
    g[e] = gauss_sum(ctx, char_fq(ctx, e));
    ginv[e] = gauss_sum_inverse(ctx, char_fq(ctx, e), ctx.one());
  }

  const FqElem arg = (alpha.size() % 2 == 0) ? lambda : ctx.neg(lambda);
  CycNum total = CycNum::from_int(0, mk);
  for (long k = 0; k < n; ++k) {
    auto lam = char_exponent(ctx, omega(k), arg, mk);
    if (!lam) continue;
    CycNum term = CycNum::root_of_unity(mk, *lam);
    for (long a : a_int) {
      term *= g[omega(k + a).exponent];
      term *= ginv[omega(a).exponent];
    }
    for (long b : b_int) {
      term *= g[omega(-k - b).exponent];
      term *= ginv[omega(-b).exponent];
    }
    total += term;
  }
  return total / Rational(-n);  // 1 - q
}

L2Function f_function(const FieldCtx& ctx) {
  const L2Function p_phi = legendre_function(ctx, quadratic_char(ctx));
  L2Function out;
  for (const FqElem x : ctx.elements()) {
    const int s = legendre_symbol(ctx, ctx.sub(ctx.one(), x));
    out.push_back(p_phi[x.v] * Rational(s));
  }
  return out;
}

namespace {

// q^3 4F3(gamma, gamma^-1, phi, phi; eps, eps, eps | 1) + phi(-1) gamma(-1) q
CycNum shifted_4f3(const FieldCtx& ctx, MultCharFq gamma) {
  const long q = ctx.q();
  const MultCharFq phi = quadratic_char(ctx);
  const MultCharFq eps = trivial_char(ctx);
  const FqElem minus_one = ctx.neg(ctx.one());
  const CycNum f43 = greene_nfn(ctx, {gamma, gamma.inverse(), phi, phi}, {eps, eps, eps}, ctx.one());
  return f43 * Rational(q * q * q) + char_eval(ctx, gamma, minus_one) * Rational(legendre_symbol(ctx, minus_one) * q);
}

}  // namespace

std::pair<CycNum, CycNum> f_pgamma_identity(const FieldCtx& ctx, MultCharFq gamma) {
  if (gamma.is_trivial()) throw Error(ErrorKind::TrivialCharacter, "gamma must be nontrivial");
  const long q = ctx.q();
  CycNum lhs = l2_inner(ctx, f_function(ctx), legendre_function(ctx, gamma)) *
               Rational(legendre_symbol(ctx, ctx.from_int(2)) * q * q);
  return {lhs, shifted_4f3(ctx, gamma)};
}

QuarticBoundCheck quartic_bound_check(const FieldCtx& ctx, MultCharFq gamma) {
  const long q = ctx.q();
  QuarticBoundCheck out;
  if (gamma.is_trivial()) throw Error(ErrorKind::TrivialCharacter, "gamma must be nontrivial");
  out.value = shifted_4f3(ctx, gamma);
  out.abs2 = (out.value * out.value.conj()).rational_value();
  out.bound2 = Rational(4 * q * q * q);
  out.holds = out.abs2 <= out.bound2;
  return out;
}

}  // namespace pslekr
