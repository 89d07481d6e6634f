#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tworep/errors.hpp"

namespace tworep {

int euler_phi(int n);
// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(int n);

// Element of Q(zeta_N), stored as a polynomial in zeta_N reduced mod Phi_N.
class CycloNumber {
 public:
  CycloNumber();
  CycloNumber(long v);  // NOLINT: rationals convert implicitly
  explicit CycloNumber(const mpq_class& q);

  static CycloNumber zeta(int order, long k = 1);
  static CycloNumber from_coeffs(int order, std::vector<mpq_class> coeffs);

  int order() const { return order_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;

  // Same value viewed in Q(zeta_m); m must be a multiple of order().
  CycloNumber embed(int m) const;
  CycloNumber inverse() const;

  CycloNumber& operator+=(const CycloNumber& o);
  CycloNumber& operator-=(const CycloNumber& o);
  CycloNumber& operator*=(const CycloNumber& o);

  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);
  friend CycloNumber operator/(const CycloNumber& a, const CycloNumber& b) {
    return a * b.inverse();
  }
  CycloNumber operator-() const;

  friend bool operator==(const CycloNumber& a, const CycloNumber& b);
  friend bool operator!=(const CycloNumber& a, const CycloNumber& b) { return !(a == b); }

  std::string to_string() const;

 private:
  CycloNumber(int order, std::vector<mpq_class> c) : order_(order), c_(std::move(c)) {}
  static void unify(CycloNumber& a, CycloNumber& b);

  int order_ = 1;
  std::vector<mpq_class> c_;
};

std::ostream& operator<<(std::ostream& os, const CycloNumber& x);

struct RootOfUnity {
  int order = 1;
  long exponent = 0;

  RootOfUnity() = default;
  RootOfUnity(int n, long k);

  RootOfUnity operator*(const RootOfUnity& o) const;
  RootOfUnity inverse() const;
  RootOfUnity pow(long e) const;
  CycloNumber to_cyclo() const { return CycloNumber::zeta(order, exponent); }

  friend bool operator==(const RootOfUnity& a, const RootOfUnity& b);
};

long mod_floor(long a, long m);
long lcm_long(long a, long b);

}  // namespace tworep
