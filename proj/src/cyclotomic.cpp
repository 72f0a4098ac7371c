#include "pslekr/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "pslekr/error.hpp"

namespace pslekr {

long gcd_long(long a, long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long lcm_long(long a, long b) { return a / gcd_long(a, b) * b; }

long euler_phi(long m) {
  long result = m;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

long mod_floor(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

namespace {

// Exact division of integer polynomials by a monic divisor.
std::vector<long> divide_monic(std::vector<long> num, const std::vector<long>& den) {
  const size_t dn = den.size() - 1;
  std::vector<long> quot(num.size() - dn, 0);
  for (size_t i = num.size(); i-- > dn;) {
    long c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (size_t i = 0; i < dn; ++i) {
    if (num[i] != 0) throw Error(ErrorKind::InvalidArgument, "inexact cyclotomic division");
  }
  return quot;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "conductor must be positive");
  static std::map<int, std::vector<long>> cache;
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  std::vector<long> poly(m + 1, 0);
  poly[0] = -1;
  poly[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) poly = divide_monic(std::move(poly), cyclotomic_polynomial(d));
  }
  std::lock_guard lock(cache_mutex());
  return cache.emplace(m, std::move(poly)).first->second;
}

CyclotomicField::CyclotomicField(int m) : m_(m), phi_(cyclotomic_polynomial(m)) {}

std::shared_ptr<const CyclotomicField> CyclotomicField::of(int m) {
  static std::map<int, std::shared_ptr<const CyclotomicField>> cache;
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  auto field = std::make_shared<const CyclotomicField>(m);
  std::lock_guard lock(cache_mutex());
  return cache.emplace(m, std::move(field)).first->second;
}

void CyclotomicField::reduce(std::vector<Rational>& poly) const {
  const size_t d = static_cast<size_t>(degree());
  const size_t m = static_cast<size_t>(m_);
  // zeta^m = 1
  if (poly.size() > m) {
    for (size_t i = m; i < poly.size(); ++i) {
      if (sgn(poly[i]) != 0) poly[i % m] += poly[i];
    }
    poly.resize(m);
  }
  for (size_t i = poly.size(); i-- > d;) {
    if (sgn(poly[i]) == 0) continue;
    const Rational c = poly[i];
    for (size_t j = 0; j < d; ++j) {
      const long pj = phi_[j];
      if (pj == 0) continue;
      Rational& dst = poly[i - d + j];
      if (pj == 1) {
        dst -= c;
      } else if (pj == -1) {
        dst += c;
      } else {
        dst -= c * pj;
      }
    }
    poly[i] = 0;
  }
  poly.resize(d);
}

CycNum::CycNum() : field_(CyclotomicField::of(1)), c_(1) {}

CycNum::CycNum(std::shared_ptr<const CyclotomicField> f, std::vector<Rational> c)
    : field_(std::move(f)), c_(std::move(c)) {}

CycNum CycNum::from_rational(const Rational& r, int m) {
  auto f = CyclotomicField::of(m);
  std::vector<Rational> c(f->degree());
  c[0] = r;
  c[0].canonicalize();
  return CycNum(std::move(f), std::move(c));
}

CycNum CycNum::root_of_unity(int m, long k) {
  std::vector<Rational> poly(m);
  poly[mod_floor(k, m)] = 1;
  return from_poly(m, std::move(poly));
}

CycNum CycNum::from_poly(int m, std::vector<Rational> poly) {
  auto f = CyclotomicField::of(m);
  f->reduce(poly);
  return CycNum(std::move(f), std::move(poly));
}

CycNum CycNum::lifted(int M) const {
  const int m = conductor();
  if (M == m) return *this;
  if (M % m != 0) throw Error(ErrorKind::InvalidArgument, "lift target must be a multiple of the conductor");
  const long step = M / m;
  std::vector<Rational> poly(M);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) != 0) poly[(i * step) % M] = c_[i];
  }
  return from_poly(M, std::move(poly));
}

CycNum CycNum::conj() const {
  const int m = conductor();
  std::vector<Rational> poly(m);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) != 0) poly[(m - static_cast<long>(i)) % m] += c_[i];
  }
  return from_poly(m, std::move(poly));
}

CycNum CycNum::times_root(long k) const {
  const int m = conductor();
  std::vector<Rational> poly(m);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) != 0) poly[mod_floor(static_cast<long>(i) + k, m)] += c_[i];
  }
  return from_poly(m, std::move(poly));
}

bool CycNum::is_zero() const {
  for (const auto& c : c_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool CycNum::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i) {
    if (sgn(c_[i]) != 0) return false;
  }
  return true;
}

Rational CycNum::rational_value() const {
  if (!is_rational()) throw Error(ErrorKind::InvalidArgument, "value is not rational: " + exact_string());
  return c_[0];
}

std::complex<double> CycNum::to_complex() const {
  const double m = conductor();
  std::complex<double> z = 0;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / m;
    z += c_[i].get_d() * std::polar(1.0, angle);
  }
  return z;
}

double CycNum::embedding_error_bound() const {
  double mass = 0;
  for (const auto& c : c_) mass += std::fabs(c.get_d());
  return (mass + 1.0) * static_cast<double>(c_.size() + 4) * 1e-14;
}

std::string CycNum::exact_string() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << c_[i].get_str();
  }
  os << "]/" << conductor();
  return os.str();
}

void CycNum::align_with(CycNum& other) {
  const int m1 = conductor();
  const int m2 = other.conductor();
  if (m1 == m2) return;
  const int M = static_cast<int>(lcm_long(m1, m2));
  if (m1 != M) *this = lifted(M);
  if (m2 != M) other = other.lifted(M);
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (o.conductor() == conductor()) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  CycNum rhs = o;
  align_with(rhs);
  return *this += rhs;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  if (o.conductor() == conductor()) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  CycNum rhs = o;
  align_with(rhs);
  return *this -= rhs;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  if (o.conductor() != conductor()) {
    CycNum rhs = o;
    align_with(rhs);
    return *this *= rhs;
  }
  if (o.is_rational()) return *this *= o.c_[0];
  if (is_rational()) {
    Rational r = c_[0];
    *this = o;
    return *this *= r;
  }
  std::vector<Rational> poly(2 * c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (sgn(o.c_[j]) == 0) continue;
      poly[i + j] += c_[i] * o.c_[j];
    }
  }
  field_->reduce(poly);
  c_ = std::move(poly);
  return *this;
}

CycNum& CycNum::operator*=(const Rational& r) {
  Rational f = r;
  f.canonicalize();
  for (auto& c : c_) c *= f;
  return *this;
}

CycNum& CycNum::operator/=(const Rational& r) {
  if (sgn(r) == 0) throw Error(ErrorKind::DivisionByZero, "division of a cyclotomic number by zero");
  Rational f = r;
  f.canonicalize();
  for (auto& c : c_) c /= f;
  return *this;
}

CycNum operator-(CycNum a) {
  for (auto& c : a.c_) c = -c;
  return a;
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.conductor() == b.conductor()) return a.c_ == b.c_;
  CycNum x = a;
  CycNum y = b;
  x.align_with(y);
  return x.c_ == y.c_;
}

CycAccumulator::CycAccumulator(int m) : m_(m), counts_(m, 0) {}

void CycAccumulator::add_root(long k, long weight) { counts_[mod_floor(k, m_)] += weight; }

void CycAccumulator::add_root(long k, const Rational& weight) {
  if (!has_rat_) {
    rat_.assign(m_, Rational(0));
    has_rat_ = true;
  }
  rat_[mod_floor(k, m_)] += weight;
}

void CycAccumulator::add(const CycNum& x, long k) {
  const int mx = x.conductor();
  if (m_ % mx != 0) throw Error(ErrorKind::InvalidArgument, "accumulator conductor must be a multiple");
  const long step = m_ / mx;
  const auto& c = x.coeffs();
  for (size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) != 0) add_root(static_cast<long>(i) * step + k, c[i]);
  }
}

CycNum CycAccumulator::value() const {
  std::vector<Rational> poly(m_);
  for (int i = 0; i < m_; ++i) {
    if (has_rat_) poly[i] = rat_[i];
    if (counts_[i] != 0) poly[i] += Rational(static_cast<long>(counts_[i]));
  }
  return CycNum::from_poly(m_, std::move(poly));
}

}  // namespace pslekr
