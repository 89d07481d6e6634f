#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tworep/cyclo_matrix.hpp"
#include "tworep/errors.hpp"

namespace tworep {

// Permutation of {0..n-1}; composition (a*b)(i) = a(b(i)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);
  static Perm identity(int n);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  Perm operator*(const Perm& o) const;
  Perm inverse() const;
  bool is_identity() const;

  // 1-based cycle notation, "()" for the identity
  std::string cycles() const;

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

 private:
  std::vector<int> img_;
};

CycloMatrix perm_matrix(const Perm& p);

class FinGroup;
using GroupPtr = std::shared_ptr<const FinGroup>;

class FinGroup {
 public:
  // Validates identity, inverses and associativity; throws InvalidTable.
  static GroupPtr from_table(std::vector<std::vector<int>> table, std::string name = "",
                             std::vector<std::string> labels = {});
  static GroupPtr cyclic(int n);
  static GroupPtr symmetric(int n);
  // D_{2m}: 2m elements, r^k s^e stored at index k + m*e
  static GroupPtr dihedral(int m);
  static GroupPtr direct_product(const FinGroup& a, const FinGroup& b);

  int size() const { return n_; }
  int identity() const { return e_; }
  int mul(int a, int b) const { return table_[a * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int order_of(int a) const;
  bool is_abelian() const;
  const std::vector<int>& generators() const { return gens_; }
  const std::string& name() const { return name_; }
  std::string label(int a) const;

  // only meaningful for groups built by symmetric(n)
  const std::vector<Perm>& perms() const { return perms_; }
  int perm_index(const Perm& p) const;

  std::vector<std::vector<int>> table() const;

 private:
  int n_ = 0;
  int e_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<int> gens_;
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Perm> perms_;
};

using Hom = std::vector<int>;  // image index of every element

bool is_hom(const FinGroup& g, const FinGroup& h, const Hom& phi);
// Complete, duplicate-free, ordered by generator images in target index order.
std::vector<Hom> enumerate_homs(const FinGroup& g, const FinGroup& h);

// rho: G -> S_n stored as one permutation per element of G
using PermRep = std::vector<Perm>;
std::vector<PermRep> enumerate_perm_reps(const FinGroup& g, int n);
PermRep trivial_perm_rep(const FinGroup& g, int n);
bool is_perm_rep(const FinGroup& g, const PermRep& rho);

// M = Z/m_1 x ... x Z/m_k with g acting by integer matrices (g.u)_r = sum_c A[r][c] u_c mod m_r.
using IntMatrix = std::vector<std::vector<long>>;
using ModElem = std::vector<long>;

class FinModule;
using ModulePtr = std::shared_ptr<const FinModule>;

class FinModule {
 public:
  // action[g] for every element of G; validated, throws InvalidModule.
  static ModulePtr create(GroupPtr g, std::vector<long> factors, std::vector<IntMatrix> action);
  // Action given on some elements (typically generators), closed by multiplication.
  static ModulePtr from_generators(GroupPtr g, std::vector<long> factors,
                                   const std::vector<std::pair<int, IntMatrix>>& gens);
  static ModulePtr trivial(GroupPtr g, std::vector<long> factors);
  // (mu_N)^n_rho written additively: (sigma.a)_i = a_{sigma^{-1}(i)}
  static ModulePtr permutation(GroupPtr g, const PermRep& rho, long order);
  // pull back a module over H along phi: G -> H
  static ModulePtr pullback(GroupPtr g, const FinModule& m, const Hom& phi);

  const GroupPtr& group() const { return g_; }
  int rank() const { return static_cast<int>(m_.size()); }
  const std::vector<long>& factors() const { return m_; }
  long factor(int r) const { return m_[r]; }
  const IntMatrix& action(int g) const { return act_[g]; }
  std::int64_t size() const;

  ModElem zero() const { return ModElem(m_.size(), 0); }
  ModElem act(int g, const ModElem& u) const;
  ModElem add(const ModElem& a, const ModElem& b) const;
  ModElem sub(const ModElem& a, const ModElem& b) const;
  ModElem neg(const ModElem& a) const;
  ModElem scale(long k, const ModElem& a) const;
  ModElem reduce(ModElem a) const;
  bool is_zero(const ModElem& a) const;
  bool is_trivial_action() const;

  std::int64_t index(const ModElem& a) const;  // lexicographic, last coordinate fastest
  ModElem element(std::int64_t idx) const;
  ModElem basis(int c) const;

  bool same_as(const FinModule& o) const;

 private:
  GroupPtr g_;
  std::vector<long> m_;
  std::vector<IntMatrix> act_;
};

class ModuleMorphism {
 public:
  ModuleMorphism(ModulePtr src, ModulePtr tgt, std::vector<ModElem> images);

  const ModulePtr& source() const { return src_; }
  const ModulePtr& target() const { return tgt_; }
  const std::vector<ModElem>& images() const { return img_; }
  ModElem operator()(const ModElem& u) const;

  // order constraints and G-equivariance
  bool is_valid() const;
  bool is_trivial() const;

  friend bool operator==(const ModuleMorphism& a, const ModuleMorphism& b) { return a.img_ == b.img_; }

 private:
  ModulePtr src_, tgt_;
  std::vector<ModElem> img_;
};

ModuleMorphism trivial_morphism(ModulePtr src, ModulePtr tgt);
// All equivariant maps M -> (mu_N)^n_rho, lexicographic in basis images.
std::vector<ModuleMorphism> enumerate_module_morphisms(const ModulePtr& m, const PermRep& rho, long order);
std::vector<ModuleMorphism> enumerate_module_morphisms(const ModulePtr& m, const ModulePtr& target);

struct Orbit {
  std::vector<std::pair<int, int>> points;            // (i', i), sorted
  std::vector<std::vector<int>> stabilizers;          // per point
};

// Orbits of (i',i).g = (rho'(g)^{-1}(i'), rho(g)^{-1}(i)) on {0..n'-1} x {0..n-1}, sorted by min point.
std::vector<Orbit> orbit_decompose(int n_target, int n_source, const FinGroup& g, const PermRep& rho_target,
                                   const PermRep& rho_source);

}  // namespace tworep
