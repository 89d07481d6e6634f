#include "tworep/exactnum.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace tworep {

long mod_floor(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

struct CycloData {
  int n = 1;
  int phi = 1;
  std::vector<long> poly;
  // xpow[k] = x^k mod Phi_n for 0 <= k < 2n, as length-phi integer vectors.
  std::vector<std::vector<long>> xpow;
};

std::vector<long> poly_exact_div(std::vector<long> num, const std::vector<long>& den) {
  // den is monic
  const std::size_t dn = den.size() - 1;
  std::vector<long> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    long c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<int, std::shared_ptr<const CycloData>>& cache() {
  static std::map<int, std::shared_ptr<const CycloData>> c;
  return c;
}

std::shared_ptr<const CycloData> build(int n);

std::shared_ptr<const CycloData> data(int n) {
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache().find(n);
    if (it != cache().end()) return it->second;
  }
  auto d = build(n);
  std::lock_guard<std::mutex> lock(cache_mutex());
  return cache().emplace(n, d).first->second;
}

std::shared_ptr<const CycloData> build(int n) {
  auto d = std::make_shared<CycloData>();
  d->n = n;
  d->phi = euler_phi(n);
  std::vector<long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int k = 1; k < n; ++k) {
    if (n % k == 0) p = poly_exact_div(p, data(k)->poly);
  }
  d->poly = p;
  const int phi = d->phi;
  d->xpow.assign(2 * n, std::vector<long>(phi, 0));
  std::vector<long> cur(phi, 0);
  cur[0] = 1;
  for (int k = 0; k < 2 * n; ++k) {
    d->xpow[k] = cur;
    // multiply by x and reduce using x^phi = -sum poly[j] x^j
    long top = cur[phi - 1];
    for (int j = phi - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top != 0) {
      for (int j = 0; j < phi; ++j) cur[j] -= top * p[j];
    }
  }
  return d;
}

bool all_zero(const std::vector<mpq_class>& c) {
  for (const auto& x : c)
    if (sgn(x) != 0) return false;
  return true;
}

// Rational polynomials for the inverse computation.
using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

void poly_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 1, 0);
  const mpq_class lead = b.back();
  while (r.size() >= b.size() && !r.empty()) {
    std::size_t shift = r.size() - b.size();
    mpq_class c = r.back() / lead;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    trim(r);
  }
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

QPoly poly_sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  return data(n)->poly;
}

CycloNumber::CycloNumber() : order_(1), c_(1, 0) {}
CycloNumber::CycloNumber(long v) : order_(1), c_(1, mpq_class(v)) {}
CycloNumber::CycloNumber(const mpq_class& q) : order_(1), c_(1, q) {}

CycloNumber CycloNumber::zeta(int order, long k) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  auto d = data(order);
  const auto& row = d->xpow[mod_floor(k, order)];
  std::vector<mpq_class> c(row.begin(), row.end());
  return CycloNumber(order, std::move(c));
}

CycloNumber CycloNumber::from_coeffs(int order, std::vector<mpq_class> coeffs) {
  auto d = data(order);
  std::vector<mpq_class> c(d->phi, 0);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (sgn(coeffs[k]) == 0) continue;
    coeffs[k].canonicalize();
    if (static_cast<int>(k) < d->phi) {
      c[k] += coeffs[k];
    } else {
      const auto& row = d->xpow[k % order];
      for (int j = 0; j < d->phi; ++j)
        if (row[j] != 0) c[j] += coeffs[k] * row[j];
    }
  }
  return CycloNumber(order, std::move(c));
}

bool CycloNumber::is_zero() const { return all_zero(c_); }

bool CycloNumber::is_one() const {
  if (c_[0] != 1) return false;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

bool CycloNumber::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

CycloNumber CycloNumber::embed(int m) const {
  if (m == order_) return *this;
  if (m % order_ != 0) throw std::invalid_argument("embed: target order must be a multiple");
  auto d = data(m);
  std::vector<mpq_class> c(d->phi, 0);
  const int step = m / order_;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (sgn(c_[k]) == 0) continue;
    const auto& row = d->xpow[k * step];
    for (int j = 0; j < d->phi; ++j)
      if (row[j] != 0) c[j] += c_[k] * row[j];
  }
  return CycloNumber(m, std::move(c));
}

void CycloNumber::unify(CycloNumber& a, CycloNumber& b) {
  if (a.order_ == b.order_) return;
  int m = static_cast<int>(lcm_long(a.order_, b.order_));
  a = a.embed(m);
  b = b.embed(m);
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
  if (o.order_ == 1) {
    c_[0] += o.c_[0];
    return *this;
  }
  if (order_ == 1 && is_zero()) return *this = o;
  if (order_ == o.order_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  CycloNumber b = o;
  unify(*this, b);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) { return *this += -o; }

CycloNumber& CycloNumber::operator*=(const CycloNumber& o) { return *this = *this * o; }

CycloNumber CycloNumber::operator-() const {
  CycloNumber r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
  if (b.order_ == 1) {
    if (b.c_[0] == 1) return a;
    CycloNumber r = a;
    for (auto& x : r.c_) x *= b.c_[0];
    return r;
  }
  if (a.order_ == 1) return b * a;
  if (a.order_ != b.order_) {
    CycloNumber x = a, y = b;
    CycloNumber::unify(x, y);
    return x * y;
  }
  auto d = data(a.order_);
  const int phi = d->phi;
  std::vector<mpq_class> full(2 * phi - 1, 0);
  for (int i = 0; i < phi; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (int j = 0; j < phi; ++j) {
      if (sgn(b.c_[j]) == 0) continue;
      full[i + j] += a.c_[i] * b.c_[j];
    }
  }
  std::vector<mpq_class> c(full.begin(), full.begin() + phi);
  for (int k = phi; k < 2 * phi - 1; ++k) {
    if (sgn(full[k]) == 0) continue;
    const auto& row = d->xpow[k];
    for (int j = 0; j < phi; ++j)
      if (row[j] != 0) c[j] += full[k] * row[j];
  }
  return CycloNumber(a.order_, std::move(c));
}

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic number");
  if (is_rational()) {
    CycloNumber r = *this;
    r.c_[0] = 1 / c_[0];
    return r;
  }
  // single monomial c*x^k: inverse is x^(n-k)/c
  int nz = -1, count = 0;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) {
      nz = static_cast<int>(i);
      ++count;
    }
  if (count == 1) {
    CycloNumber z = zeta(order_, order_ - nz);
    mpq_class s = 1 / c_[nz];
    for (auto& x : z.c_) x *= s;
    return z;
  }
  auto d = data(order_);
  QPoly phi(d->poly.begin(), d->poly.end());
  QPoly r0 = phi, r1 = c_;
  trim(r1);
  QPoly s0, s1{mpq_class(1)};
  while (!r1.empty()) {
    QPoly q, r;
    poly_divmod(r0, r1, q, r);
    QPoly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since Phi_n is irreducible
  mpq_class g = r0[0];
  for (auto& x : s0) x /= g;
  return from_coeffs(order_, s0);
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
  if (a.order_ == b.order_) return a.c_ == b.c_;
  if (a.order_ == 1 && b.is_rational()) return a.c_[0] == b.c_[0];
  if (b.order_ == 1 && a.is_rational()) return a.c_[0] == b.c_[0];
  CycloNumber x = a, y = b;
  CycloNumber::unify(x, y);
  return x.c_ == y.c_;
}

std::string CycloNumber::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const mpq_class& x = c_[k];
    if (sgn(x) == 0) continue;
    mpq_class ax = abs(x);
    if (first) {
      if (sgn(x) < 0) os << "-";
    } else {
      os << (sgn(x) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << ax.get_str();
      continue;
    }
    if (ax != 1) os << ax.get_str() << "*";
    os << "z" << order_;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycloNumber& x) { return os << x.to_string(); }

RootOfUnity::RootOfUnity(int n, long k) : order(n), exponent(mod_floor(k, n)) {
  if (n < 1) throw std::invalid_argument("root of unity order must be positive");
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
  int m = static_cast<int>(lcm_long(order, o.order));
  return RootOfUnity(m, exponent * (m / order) + o.exponent * (m / o.order));
}

RootOfUnity RootOfUnity::inverse() const { return RootOfUnity(order, -exponent); }

RootOfUnity RootOfUnity::pow(long e) const {
  return RootOfUnity(order, mod_floor(exponent, order) * mod_floor(e, order));
}

bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
  // compare as elements of the compositum
  long m = lcm_long(a.order, b.order);
  return mod_floor(a.exponent * (m / a.order), m) == mod_floor(b.exponent * (m / b.order), m);
}

}  // namespace tworep
