#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tworep/grp.hpp"

namespace tworep {

// Inhomogeneous k-cochain G^k -> M, stored as a full table so that
// non-normalized values can be represented (tests perturb them on purpose).
class Cochain {
 public:
  Cochain(GroupPtr g, ModulePtr m, int degree);

  static Cochain random_normalized(GroupPtr g, ModulePtr m, int degree, std::mt19937_64& rng);

  int degree() const { return k_; }
  const GroupPtr& group() const { return g_; }
  const ModulePtr& module() const { return m_; }

  ModElem value(const std::vector<int>& args) const;
  void set(const std::vector<int>& args, const ModElem& v);
  ModElem value_at(std::size_t tuple) const;
  void set_at(std::size_t tuple, const ModElem& v);
  std::size_t tuple_count() const { return tuples_; }
  std::vector<int> tuple(std::size_t t) const;
  std::size_t tuple_index(const std::vector<int>& args) const;

  bool is_zero() const;
  bool is_normalized() const;
  // first tuple with a nonzero value, if any
  std::optional<std::vector<int>> first_nonzero() const;

  Cochain operator+(const Cochain& o) const;
  Cochain operator-(const Cochain& o) const;
  friend bool operator==(const Cochain& a, const Cochain& b);
  friend bool operator!=(const Cochain& a, const Cochain& b) { return !(a == b); }

  // sparse listing of nonzero values
  std::string to_string() const;

 private:
  void check_compatible(const Cochain& o) const;

  GroupPtr g_;
  ModulePtr m_;
  int k_;
  std::size_t tuples_;
  std::vector<long> data_;
};

Cochain coboundary(const Cochain& c);
bool is_cocycle(const Cochain& c);

// beta o c, values pushed along a module morphism.
Cochain push_forward(const Cochain& c, const ModuleMorphism& beta);
// c o phi^k for phi: G -> H, values in a module over G (usually a pullback).
Cochain pull_back(const Cochain& c, GroupPtr g, const Hom& phi, ModulePtr target);
// Same table re-read in another module with the same factors (e.g. a different action).
Cochain with_module(const Cochain& c, ModulePtr m);

// Integer lattices L with diag(m) <= L <= Z^V in upper triangular form.
class ModLattice {
 public:
  // zero subgroup
  explicit ModLattice(std::vector<long> moduli);
  // whole group
  static ModLattice full(std::vector<long> moduli);

  std::size_t dim() const { return m_.size(); }
  const std::vector<long>& moduli() const { return m_; }
  const std::vector<std::vector<long>>& basis() const { return b_; }
  long pivot(std::size_t j) const { return b_[j][j]; }

  void add_generator(std::vector<long> v);
  // Lexicographically least representative of x + L with entries in [0, m).
  std::vector<long> reduce(std::vector<long> x) const;
  // Number of elements of L / diag(m).
  long double count() const;

  // Intersect with {x : sum coeff*x = 0 mod modulus}; returns the vector p in L
  // with coeff.p = g mod modulus, g the generator of the attainable residues.
  std::pair<std::vector<long>, long> restrict(const std::vector<std::pair<std::size_t, long>>& coeff, long modulus);

 private:
  void reduce_tail(std::vector<long>& v, std::size_t from) const;

  std::vector<long> m_;
  std::vector<std::vector<long>> b_;
};

// Normalized cochains of a fixed degree as vectors over Z^V.
class CochainCoordinates {
 public:
  CochainCoordinates(GroupPtr g, ModulePtr m, int degree);

  std::size_t dim() const { return moduli_.size(); }
  const std::vector<long>& moduli() const { return moduli_; }
  // variable index of (normalized tuple position, coordinate), or -1 if the tuple contains the identity
  long variable(std::size_t tuple, int coord) const;
  std::vector<long> to_vector(const Cochain& c) const;
  Cochain from_vector(const std::vector<long>& v) const;

 private:
  GroupPtr g_;
  ModulePtr m_;
  int k_;
  std::vector<long> moduli_;
  std::vector<long> var_of_tuple_;  // first variable of each tuple or -1
};

// Solutions of dx = w for x normalized of degree deg(w)-1.
struct CoboundarySolution {
  Cochain particular;  // lexicographically least
  ModLattice kernel;   // closed normalized cochains of degree deg(w)-1, in coordinates
  CochainCoordinates coords;

  long double count() const { return kernel.count(); }
  // particular + every element of the kernel, in canonical order, up to cap entries
  std::vector<Cochain> enumerate(std::size_t cap) const;
  // one canonical representative per class modulo coboundaries
  std::vector<Cochain> class_representatives() const;
};

std::optional<CoboundarySolution> solve_coboundary_full(const Cochain& w);
std::optional<Cochain> solve_coboundary_equation(const Cochain& w);
// x with dx = c1 - c2, or none. Throws IncompatibleCochains.
std::optional<Cochain> cohomologous_witness(const Cochain& c1, const Cochain& c2);
// Lexicographically least element of c + B^k (c normalized).
Cochain canonical_mod_coboundaries(const Cochain& c);

}  // namespace tworep
