#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_m).
//
// A CycNum stores rational coefficients in the power basis 1, z, ..., z^(d-1)
// of Q[z]/Phi_m(z) with d = deg Phi_m. Because that basis is a Q-basis the
// representation is canonical, so equality and zero tests are exact.
// Binary operations on values of different conductors first lift both
// operands into Q(zeta_lcm).

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace pslekr {

using Rational = mpq_class;

long gcd_long(long a, long b);
long lcm_long(long a, long b);
long euler_phi(long m);
long mod_floor(long a, long m);

/// Phi_m with integer coefficients, lowest degree first. Obtained by exact
/// division of x^m - 1 by Phi_d for every proper divisor d of m.
const std::vector<long>& cyclotomic_polynomial(int m);

class CyclotomicField {
 public:
  explicit CyclotomicField(int m);

  /// Shared, cached instance for conductor m.
  static std::shared_ptr<const CyclotomicField> of(int m);

  int conductor() const { return m_; }
  int degree() const { return static_cast<int>(phi_.size()) - 1; }
  const std::vector<long>& modulus() const { return phi_; }

  /// Reduces a polynomial in zeta (any length) in place; on return it has
  /// exactly degree() coefficients.
  void reduce(std::vector<Rational>& poly) const;

 private:
  int m_;
  std::vector<long> phi_;
};

class CycNum {
 public:
  /// Zero of Q.
  CycNum();

  static CycNum from_rational(const Rational& r, int m = 1);
  static CycNum from_int(long n, int m = 1) { return from_rational(Rational(n), m); }
  /// zeta_m^k.
  static CycNum root_of_unity(int m, long k);
  /// Reduces an arbitrary polynomial in zeta_m.
  static CycNum from_poly(int m, std::vector<Rational> poly);

  int conductor() const { return field_->conductor(); }
  int degree() const { return field_->degree(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  /// Same number, expressed in Q(zeta_M). M must be a multiple of conductor().
  CycNum lifted(int M) const;
  CycNum conj() const;
  /// this * zeta_m^k with m = conductor().
  CycNum times_root(long k) const;

  bool is_zero() const;
  bool is_rational() const;
  /// Throws InvalidArgument unless is_rational().
  Rational rational_value() const;
  bool is_real() const { return *this == conj(); }

  /// Embedding zeta_m -> exp(2 pi i / m). Diagnostics only.
  std::complex<double> to_complex() const;
  /// Rigorous-enough bound on |to_complex() - exact| from double rounding.
  double embedding_error_bound() const;

  /// "[c0,c1,...]/m" with each ci rendered as n or n/d.
  std::string exact_string() const;

  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator*=(const Rational& r);
  CycNum& operator/=(const Rational& r);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator*(CycNum a, const Rational& r) { return a *= r; }
  friend CycNum operator*(const Rational& r, CycNum a) { return a *= r; }
  friend CycNum operator/(CycNum a, const Rational& r) { return a /= r; }
  friend CycNum operator-(CycNum a);

  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

 private:
  CycNum(std::shared_ptr<const CyclotomicField> f, std::vector<Rational> c);
  void align_with(CycNum& other);

  std::shared_ptr<const CyclotomicField> field_;
  std::vector<Rational> c_;
};

/// Sum of terms c * zeta_m^k collected in Q[x]/(x^m - 1) and reduced once.
/// Integer weights take a fast int64 path.
class CycAccumulator {
 public:
  explicit CycAccumulator(int m);

  int conductor() const { return m_; }
  void add_root(long k, long weight = 1);
  void add_root(long k, const Rational& weight);
  /// Adds x * zeta_m^k. The conductor of x must divide m.
  void add(const CycNum& x, long k = 0);
  CycNum value() const;

 private:
  int m_;
  std::vector<long long> counts_;
  std::vector<Rational> rat_;
  bool has_rat_ = false;
};

}  // namespace pslekr
