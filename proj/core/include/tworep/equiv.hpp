#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "tworep/grp.hpp"
#include "tworep/twomat.hpp"

namespace tworep {

// Field b -> (A_0(b), ..., A_{n-1}(b)) with A_i(b) in GL(b_i), stored as a
// finite table; identity elsewhere. A_i(e_i) = 1 always.
class AField {
 public:
  using Table = std::map<std::pair<std::size_t, Point>, CycloMatrix>;

  explicit AField(std::size_t n) : n_(n) {}
  static AField from_table(std::size_t n, const Table& t);  // throws InvalidGauge
  // random invertible values (entries in Q(zeta_12)) on 2 <= sum(b) <= bound
  static AField random(std::size_t n, int bound, std::mt19937_64& rng);

  std::size_t n() const { return n_; }
  CycloMatrix at(std::size_t i, const Point& b) const;
  const Table& entries() const { return t_; }

  AField operator*(const AField& o) const;  // pointwise
  AField inverse() const;
  // (sigma |> A)_{sigma(j)}(sigma.b) = A_j(b)
  AField act(const Perm& sigma) const;
  friend bool operator==(const AField& a, const AField& b) { return a.n_ == b.n_ && a.t_ == b.t_; }
  friend bool operator!=(const AField& a, const AField& b) { return !(a == b); }

 private:
  void put(std::size_t i, const Point& b, CycloMatrix v);
  std::size_t n_;
  Table t_;
};

// sigma.b = P(sigma) b, i.e. (sigma.b)_{sigma(j)} = b_j
Point act_point(const Perm& sigma, const Point& b);

// E(n): pairs (sigma, A), the 1-automorphisms of n.
struct EquivElement {
  Perm sigma;
  AField a;
  friend bool operator==(const EquivElement& x, const EquivElement& y) { return x.sigma == y.sigma && x.a == y.a; }
};

// N(n): pairs (lambda, A), the 2-morphisms id_n => (I, s^A).
struct EquivKernelElement {
  std::vector<CycloNumber> lambda;
  AField a;
  friend bool operator==(const EquivKernelElement& x, const EquivKernelElement& y) {
    return x.lambda == y.lambda && x.a == y.a;
  }
};

class EquivCrossedModule {
 public:
  explicit EquivCrossedModule(std::size_t n) : n_(n) {}
  std::size_t n() const { return n_; }

  EquivElement identity() const;
  // (s',A')(s,A) = (s's, A'(s'|>A))
  EquivElement mul(const EquivElement& x, const EquivElement& y) const;
  // (s,A)^-1 = (s^-1, s^-1 |> A^-1)
  EquivElement inv(const EquivElement& x) const;

  EquivKernelElement kernel_identity() const;
  EquivKernelElement kernel_mul(const EquivKernelElement& x, const EquivKernelElement& y) const;
  EquivKernelElement kernel_inv(const EquivKernelElement& x) const;

  // d(lambda, A) = (id, A)
  EquivElement boundary(const EquivKernelElement& x) const;
  // (s,A) |> (lambda, A') = (s.lambda, A (s|>A') A^-1)
  EquivKernelElement act(const EquivElement& e, const EquivKernelElement& x) const;

  // s_i(a) = A_i(sigma.a)
  OneMorphism phi(const EquivElement& e) const;
  // A_i(b) = s_i(P^-1 b), read on sum(b) <= bound. Throws InvalidGauge unless f is invertible.
  EquivElement psi(const OneMorphism& f, int bound) const;
  // the 2-morphism id_n => phi(d x) with diagonal blocks lambda_i
  TwoMorphism two_morphism(const EquivKernelElement& x) const;
  // 1_{phi(e)} o T(x) o 1_{phi(e^-1)}
  TwoMorphism conjugate(const EquivElement& e, const EquivKernelElement& x) const;

  EquivElement random_element(int bound, std::mt19937_64& rng) const;
  EquivKernelElement random_kernel_element(int bound, std::mt19937_64& rng) const;

 private:
  std::size_t n_;
};

// (P, s)^-1 = (P^-1, s^-1) with s^-1_i(a) = s_{sigma(i)}(P^-1 a)^-1. Throws InvalidGauge.
OneMorphism inverse_automorphism(const OneMorphism& f);

}  // namespace tworep
