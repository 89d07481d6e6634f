#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tworep/twogrp.hpp"
#include "tworep/twomat.hpp"

namespace tworep {

// (n, rho, beta, c) over mu_N, written additively: a coordinate k in Z/N stands for zeta_N^k.
struct RepQuadruple {
  int n = 0;
  long order = 1;  // N
  PermRep rho;
  ModuleMorphism beta;  // M -> (mu_N)^n_rho
  Cochain c;            // degree 2 in (mu_N)^n_rho
};

std::string describe(const RepQuadruple& q);

// (mu_N)^n_rho
ModulePtr rep_module(const GroupPtr& g, const PermRep& rho, long order);

// Empty when valid; otherwise one message per violated condition.
std::vector<std::string> validate_quadruple(const RepQuadruple& q, const SpecialTwoGroup& tg);

// trivial representation I = (1, trivial, trivial, trivial)
RepQuadruple trivial_rep(const SpecialTwoGroup& tg, long order);
// purely permutational R_{n,rho}
RepQuadruple permutational_rep(const SpecialTwoGroup& tg, const PermRep& rho, long order);
// character I_{beta,c} in dimension 1
RepQuadruple character_rep(const SpecialTwoGroup& tg, const ModuleMorphism& beta, const Cochain& c, long order);

// Gauge-trivial realization as pseudofunctor data.
class RepRealization {
 public:
  RepRealization(TwoGroupPtr tg, RepQuadruple q);

  const TwoGroupPtr& two_group() const { return tg_; }
  const RepQuadruple& quadruple() const { return q_; }
  const OneMorphism& object(int g) const { return objects_[g]; }
  // F(g, u): F(g) => F(g)
  TwoMorphism arrow(const Arrow& a) const;
  // F_2(g1, g2): F(g1) o F(g2) => F(g1 g2)
  const TwoMorphism& f2(int g1, int g2) const { return f2_[g1 * tg_->G()->size() + g2]; }

 private:
  TwoGroupPtr tg_;
  RepQuadruple q_;
  std::vector<OneMorphism> objects_;
  std::vector<TwoMorphism> f2_;
};

// Throws InvalidQuadruple when validate_quadruple reports violations.
RepRealization rep_functor(const RepQuadruple& q, const TwoGroupPtr& tg);
// No validation, for cross-checking broken data.
RepRealization rep_functor_unchecked(const RepQuadruple& q, const TwoGroupPtr& tg);

struct AxiomReport {
  bool associativity = true;  // (A1)
  bool units = true;          // (A2)
  bool functorial = true;
  bool natural = true;
  bool ok() const { return associativity && units && functorial && natural; }
};
AxiomReport pseudofunctor_report(const RepRealization& r);
bool check_pseudofunctor_axioms(const RepRealization& r);

enum class EnumMode { Canonical, All, Classes };

// Quadruples of dimension n over mu_N in deterministic order. In All mode at
// most cap cochains per (rho, beta); Classes gives one c per class modulo coboundaries.
std::vector<RepQuadruple> enumerate_reps(const SpecialTwoGroup& tg, int n, long order, EnumMode mode,
                                         std::size_t cap = 4096);

// sigma.c with (sigma.c)(g1,g2)_{sigma(i)} = c(g1,g2)_i, read in the module `target`
Cochain permute_cochain(const Perm& sigma, const Cochain& c, const ModulePtr& target);

struct EquivalenceWitness {
  Perm sigma;
  Cochain x;  // dx = c' - sigma.c
};
// First sigma in lexicographic order satisfying the conditions.
std::optional<EquivalenceWitness> equivalent_quadruples(const RepQuadruple& q, const RepQuadruple& qp);

struct RepClass {
  int dim = 0;  // 0 for the zero representation
  std::optional<RepQuadruple> representative;
  std::size_t members = 0;  // enumerated quadruples in the class
};
std::vector<RepClass> pi0_rep(const SpecialTwoGroup& tg, int n_max, long order);

}  // namespace tworep
